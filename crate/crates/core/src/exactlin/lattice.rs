//! Integer lattices: gcds, Hermite reduction, kernel lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{IntMatrix, IntVector};
use super::snf::snf;

/// gcd of the absolute values; 0 for the empty or zero vector.
pub fn gcd_vector(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    gcd_vector(v) == BigInt::from(1)
}

/// Row-style Hermite normal form of the lattice spanned by `generators`.
///
/// Returns a basis in echelon form: each row's leading entry is positive,
/// sits strictly right of the previous row's, and entries above it are
/// reduced into `[0, pivot)`. Zero rows are dropped. The output depends only
/// on the lattice, not on the generators chosen.
pub fn hermite_rows(generators: &[IntVector], dim: usize) -> Vec<IntVector> {
    let mut rows: Vec<IntVector> = generators
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    debug_assert!(rows.iter().all(|r| r.len() == dim));

    let mut placed = 0;
    for col in 0..dim {
        if placed == rows.len() {
            break;
        }
        // Euclid down the column until a single nonzero entry remains.
        loop {
            let pivot = (placed..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let Some(p) = pivot else { break };
            rows.swap(placed, p);
            let mut done = true;
            for i in placed + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[placed][col]);
                let (head, tail) = rows.split_at_mut(i);
                axpy(&mut tail[0], &-q, &head[placed]);
                done &= tail[0][col].is_zero();
            }
            if done {
                break;
            }
        }
        if placed == rows.len() || rows[placed][col].is_zero() {
            continue;
        }
        if rows[placed][col].is_negative() {
            for x in rows[placed].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        for i in 0..placed {
            let q = rows[i][col].div_floor(&rows[placed][col]);
            let (head, tail) = rows.split_at_mut(placed);
            axpy(&mut head[i], &-q, &tail[0]);
        }
        placed += 1;
    }
    rows.truncate(placed);
    rows
}

/// `y += a * x`
pub(crate) fn axpy(y: &mut [BigInt], a: &BigInt, x: &[BigInt]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += a * xi;
    }
}

/// Basis of the saturated kernel lattice `{v : A v = 0}` in Hermite form.
pub fn kernel_basis(a: &IntMatrix) -> Vec<IntVector> {
    let s = snf(a);
    let generators: Vec<IntVector> = (s.rank()..a.cols()).map(|j| s.v.column(j)).collect();
    hermite_rows(&generators, a.cols())
}

/// Coordinates of `w` in a Hermite-form basis, if `w` lies in its span.
pub fn hermite_coordinates(basis: &[IntVector], w: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = w.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let lead = b.iter().position(|x| !x.is_zero())?;
        let (q, r) = rest[lead].div_rem(&b[lead]);
        if !r.is_zero() {
            return None;
        }
        axpy(&mut rest, &-&q, b);
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}
