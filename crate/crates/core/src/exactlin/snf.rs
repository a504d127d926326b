//! Smith normal form with accumulated unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    /// Nonzero diagonal entries of `d`, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Smallest nonzero |entry| among rows/cols `>= t`; ties go to the lowest (row, col).
fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some(b) if d[b].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smallest nonzero |entry| in row `t` and column `t` (from `t` on).
fn smallest_in_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = d[(t, t)].abs();
    let candidates = (t + 1..d.rows()).map(|i| (i, t)).chain((t + 1..d.cols()).map(|j| (t, j)));
    for pos in candidates {
        let x = d[pos].abs();
        if !x.is_zero() && (best_abs.is_zero() || x < best_abs) {
            best = pos;
            best_abs = x;
        }
    }
    best
}

pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let (ci, cj) = smallest_in_cross(&d, t);
            if ci != t {
                d.swap_rows(t, ci);
                u.swap_rows(t, ci);
            }
            if cj != t {
                d.swap_cols(t, cj);
                v.swap_cols(t, cj);
            }

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // divisibility: pull an offending row into the pivot row and go again
            let offending = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot))
            });
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors = (0..m.min(n))
        .map(|i| d[(i, i)].clone())
        .take_while(|x| !x.is_zero())
        .collect();
    SmithDecomposition { u, v, d, invariant_factors }
}

pub fn rank(a: &IntMatrix) -> usize {
    snf(a).rank()
}

/// `|det A|` for square `A`, read off the invariant factors.
pub fn abs_det(a: &IntMatrix) -> BigInt {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let s = snf(a);
    if s.rank() < a.rows() {
        BigInt::zero()
    } else {
        s.invariant_factors.iter().product()
    }
}

pub fn is_unimodular(a: &IntMatrix) -> bool {
    a.is_square() && abs_det(a).is_one()
}

/// Integer inverse of a unimodular matrix, `None` otherwise.
pub fn unimodular_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    if !a.is_square() {
        return None;
    }
    let s = snf(a);
    if s.rank() < a.rows() || s.invariant_factors.iter().any(|f| !f.is_one()) {
        return None;
    }
    // U A V = I  =>  A^{-1} = V U
    Some(&s.v * &s.u)
}
