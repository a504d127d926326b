//! Seeded generators for maps, torus automorphisms and surface
//! automorphisms on homology.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::exactlin::{IntMatrix, IntVector};
use crate::invariants::TorusMap;
use crate::surfaces::SurfaceModel;

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries: Vec<i64> = (0..rows * cols).map(|_| rng.gen_range(-bound..=bound)).collect();
    IntMatrix::from_i64(rows, cols, &entries)
}

/// Uniform entries in `[-bound, bound]` on the free basis.
pub fn random_map<R: Rng + ?Sized>(rng: &mut R, surface: &SurfaceModel, bound: i64) -> TorusMap {
    let m = random_matrix(rng, 3, surface.free_rank(), bound);
    TorusMap::from_standard(surface.clone(), m).expect("shape matches surface")
}

/// Uniform crosscap entries with the last column chosen so that columns sum to zero.
pub fn random_crosscap_matrix<R: Rng + ?Sized>(rng: &mut R, h: u32, bound: i64) -> IntMatrix {
    let free = random_matrix(rng, 3, h as usize - 1, bound);
    let last: IntVector = (0..3).map(|i| -free.row(i).iter().sum::<BigInt>()).collect();
    free.hstack(&IntMatrix::from_columns(3, &[last]).expect("three rows"))
        .expect("three rows")
}

/// A product of `steps` random elementary matrices in `GL_n(Z)`.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 if n > 1 => {
                let j = (i + rng.gen_range(1..n)) % n;
                let c = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
                u.add_row_multiple(i, j, &c);
            }
            1 if n > 1 => u.swap_rows(i, (i + rng.gen_range(1..n)) % n),
            2 => u.negate_row(i),
            _ => {}
        }
    }
    u
}

/// `x ↦ x + B(v, x) v` for the form with Gram `b`.
pub fn transvection(b: &IntMatrix, v: &[BigInt]) -> IntMatrix {
    let n = v.len();
    let vb: IntVector = (0..n)
        .map(|j| (0..n).map(|k| &v[k] * &b[(k, j)]).sum())
        .collect();
    let mut t = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            t[(i, j)] += &v[i] * &vb[j];
        }
    }
    t
}

/// Transvection vectors `±eᵢ` and `eᵢ ± eⱼ` supported on the first `span` coordinates.
fn random_transvection_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, span: usize) -> IntVector {
    let mut v = vec![BigInt::zero(); n];
    let i = rng.gen_range(0..span);
    v[i] = BigInt::one();
    if span > 1 && rng.gen_bool(0.5) {
        let j = (i + rng.gen_range(1..span)) % span;
        v[j] = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    if rng.gen_bool(0.5) {
        for x in &mut v {
            *x = -std::mem::take(x);
        }
    }
    v
}

/// A random automorphism of the surface's free homology realized by a
/// homeomorphism: symplectic transvections, plus `aᵢ ↦ aᵢ + 2m` and
/// `bᵢ ↦ bᵢ + 2m` on even nonorientable surfaces. Odd-genus surfaces get
/// permutations of the free crosscap generators.
pub fn random_surface_automorphism<R: Rng + ?Sized>(
    rng: &mut R,
    surface: &SurfaceModel,
    steps: usize,
) -> IntMatrix {
    let n = surface.free_rank();
    let mut phi = IntMatrix::identity(n);
    let handles = 2 * surface.handle_count();
    if surface.is_orientable() || surface.has_standard_nonorientable_basis() {
        let b = surface
            .integral_skew_form()
            .expect("form exists for this surface")
            .gram()
            .clone();
        for _ in 0..steps {
            let step = if handles > 0 && (surface.is_orientable() || rng.gen_bool(0.7)) {
                transvection(&b, &random_transvection_vector(rng, n, handles))
            } else if handles > 0 {
                let mut s = IntMatrix::identity(n);
                let sign = if rng.gen_bool(0.5) { 2 } else { -2 };
                s[(n - 1, rng.gen_range(0..handles))] = BigInt::from(sign);
                s
            } else {
                IntMatrix::identity(n)
            };
            phi = &phi * &step;
        }
    } else {
        // crosscap transpositions cᵢ ↔ cⱼ among the free generators
        for _ in 0..steps {
            if n > 1 {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                phi.swap_cols(i, j);
            }
        }
    }
    phi
}

/// A random map known to be embeddable, or `None` where none exists
/// (odd genus, the Klein bottle).
pub fn random_embeddable_map<R: Rng + ?Sized>(
    rng: &mut R,
    surface: &SurfaceModel,
    bound: i64,
) -> Option<TorusMap> {
    let n = surface.free_rank();
    let mut m = IntMatrix::zeros(3, n);
    if surface.is_orientable() {
        // a sphere or subtorus with tubes: every aᵢ dies, bᵢ arbitrary
        let sphere = surface.genus() == 0 || rng.gen_bool(0.3);
        for i in 0..surface.handle_count() {
            for r in 0..3 {
                m[(r, 2 * i + 1)] = BigInt::from(rng.gen_range(-bound..=bound));
            }
        }
        if !sphere {
            // handles stay inside the xy-plane so the image has rank 2
            for j in 0..n {
                m[(2, j)] = BigInt::zero();
            }
            m[(0, 0)] = BigInt::one();
            m[(1, 0)] = BigInt::zero();
            m[(0, 1)] = BigInt::zero();
            m[(1, 1)] = BigInt::one();
        }
    } else {
        if !surface.has_standard_nonorientable_basis() || surface.genus() < 4 {
            return None;
        }
        // the standard map plus handles whose aᵢ die and whose bᵢ avoid odd z
        m[(0, 0)] = BigInt::one();
        m[(1, 1)] = BigInt::one();
        m[(2, n - 1)] = BigInt::one();
        for i in 1..surface.handle_count() {
            m[(0, 2 * i + 1)] = BigInt::from(rng.gen_range(-bound..=bound));
            m[(1, 2 * i + 1)] = BigInt::from(rng.gen_range(-bound..=bound));
            m[(2, 2 * i + 1)] = BigInt::from(2 * rng.gen_range(-bound / 2..=bound / 2));
        }
    }
    let f = TorusMap::from_standard(surface.clone(), m).expect("shape matches surface");
    let u = random_unimodular(rng, 3, 6);
    let phi = random_surface_automorphism(rng, surface, 6);
    Some(
        f.post_compose(&u)
            .and_then(|f| f.pre_compose(&phi))
            .expect("shapes match"),
    )
}

/// `φᵀBφ = B` for the integral form `B`, where one is defined.
pub fn preserves_form(surface: &SurfaceModel, phi: &IntMatrix) -> bool {
    match surface.integral_skew_form() {
        Ok(form) => {
            let b = form.gram();
            phi.transpose()
                .checked_mul(b)
                .and_then(|x| x.checked_mul(phi))
                .is_ok_and(|x| &x == b)
        }
        Err(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::decide;
    use crate::exactlin::{is_unimodular, Mod2Matrix};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn surfaces() -> Vec<SurfaceModel> {
        (0..=4)
            .map(SurfaceModel::orientable)
            .chain((1..=8).map(|h| SurfaceModel::nonorientable(h).unwrap()))
            .collect()
    }

    #[test]
    fn unimodular_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..=4 {
            assert!(is_unimodular(&random_unimodular(&mut rng, n, 30)));
        }
    }

    #[test]
    fn automorphisms_preserve_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for s in surfaces() {
            for _ in 0..10 {
                let phi = random_surface_automorphism(&mut rng, &s, 12);
                assert!(is_unimodular(&phi), "{s}");
                assert!(preserves_form(&s, &phi), "{s}");
                // φ extended by t ↦ t must preserve the mod-2 form and w₁
                let n = s.mod2_rank();
                let mut ext = Mod2Matrix::identity(n);
                let reduced = Mod2Matrix::reduce(&phi);
                for i in 0..s.free_rank() {
                    for j in 0..s.free_rank() {
                        ext.set(i, j, reduced.get(i, j));
                    }
                }
                let q = s.mod2_form();
                let pulled = ext.transpose().checked_mul(&q).unwrap().checked_mul(&ext).unwrap();
                assert_eq!(pulled, q, "{s}");
            }
        }
    }

    #[test]
    fn embeddable_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for s in surfaces() {
            for _ in 0..10 {
                match random_embeddable_map(&mut rng, &s, 3) {
                    Some(f) => assert!(decide(&f).embeddable, "{s}: {}", f.matrix()),
                    None => assert!(
                        !s.is_orientable() && (s.genus() % 2 == 1 || s.genus() == 2),
                        "{s}"
                    ),
                }
            }
        }
    }

    #[test]
    fn crosscap_samples_have_zero_column_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for h in 1..=7 {
            let m = random_crosscap_matrix(&mut rng, h, 2);
            let s = SurfaceModel::nonorientable(h).unwrap();
            assert!(TorusMap::from_crosscap(s, m).is_ok());
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let s = SurfaceModel::orientable(2);
        let a = random_map(&mut ChaCha8Rng::seed_from_u64(9), &s, 2);
        let b = random_map(&mut ChaCha8Rng::seed_from_u64(9), &s, 2);
        assert_eq!(a, b);
    }
}
