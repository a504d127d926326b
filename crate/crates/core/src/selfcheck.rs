//! Oracle-backed self checks. Each check runs under a wall-clock limit and
//! reports one pass/fail line; the acceptance test target and the CLI's
//! `selftest` both run [`run_all`].

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decide::{decide, det_gram, disjoint_pair_solutions, CaseTag, Verdict};
use crate::exactlin::{
    block_diagonal, int_vec, kernel_basis, skew_abs_det, snf, standard_symplectic, IntMatrix,
    IntVector,
};
use crate::invariants::{
    crosscap_dot_class, handle_wedge_sum, kernel_data, omega, omega_mod2, OmegaClass, TorusMap,
};
use crate::sampling::{
    random_crosscap_matrix, random_embeddable_map, random_map,
    random_surface_automorphism, random_unimodular,
};
use crate::surfaces::SurfaceModel;
use crate::witness::{build_witness, verify_witness, BuildOutcome, WitnessShape};

pub const DEFAULT_SEED: u64 = 0x7433_6d62;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} [{:.2}s, limit {}s]",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

fn timed(name: &'static str, limit_secs: u64, body: impl FnOnce() -> (bool, String)) -> CheckResult {
    let start = Instant::now();
    let (ok, detail) = body();
    let elapsed = start.elapsed();
    let limit = Duration::from_secs(limit_secs);
    let detail = if elapsed > limit { format!("{detail}; time limit exceeded") } else { detail };
    CheckResult { name, passed: ok && elapsed <= limit, detail, elapsed, limit }
}

fn columns(surface: SurfaceModel, cols: &[[i64; 3]]) -> TorusMap {
    let cols: Vec<IntVector> = cols.iter().map(|c| int_vec(c)).collect();
    TorusMap::from_standard(surface, IntMatrix::from_columns(3, &cols).expect("three rows"))
        .expect("fixture shape")
}

fn nonorientable(h: u32) -> SurfaceModel {
    SurfaceModel::nonorientable(h).expect("positive genus")
}

/// Every integer vector in `[-bound, bound]^len`, as i64 entries.
fn cube(len: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (2 * bound + 1) as u64;
    (0..width.pow(len as u32)).map(move |mut code| {
        (0..len)
            .map(|_| {
                let d = (code % width) as i64 - bound;
                code /= width;
                d
            })
            .collect()
    })
}

/// `|det|` by fraction-free (Bareiss) elimination, independent of the
/// normal-form routines used by the library.
pub fn bareiss_abs_det(m: &IntMatrix) -> BigInt {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut a: Vec<IntVector> = m.row_vectors();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => a.swap(k, i),
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].abs()
    }
}

pub fn klein_bottle_sweep() -> CheckResult {
    timed("Klein bottle exclusion, all h=2 maps with entries in [-2,2]", 10, || {
        let u2 = nonorientable(2);
        let mut count = 0;
        for e in cube(3, 2) {
            let f = TorusMap::from_standard(u2.clone(), IntMatrix::from_i64(3, 1, &e))
                .expect("3x1");
            let v = decide(&f);
            if v.embeddable || v.condition("surjective").is_none_or(|c| c.holds) {
                return (false, format!("map {e:?} not rejected by condition 4"));
            }
            count += 1;
        }
        (true, format!("{count} maps rejected, each failing surjectivity"))
    })
}

pub fn odd_genus_exclusion(seed: u64, per_genus: usize) -> CheckResult {
    timed("odd genus exclusion, random maps for h in {1,3,5,7}", 5, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for h in [1, 3, 5, 7] {
            let s = nonorientable(h);
            for _ in 0..per_genus {
                let m = random_crosscap_matrix(&mut rng, h, 3);
                let f = TorusMap::from_crosscap(s.clone(), m).expect("zero column sum");
                let v = decide(&f);
                let c1 = v.condition("even_genus").is_some_and(|c| c.holds);
                let c2 = v.condition("w1_pullback").is_some_and(|c| c.holds);
                if v.embeddable || c1 || c2 {
                    return (false, format!("U_{h} map {} accepted a condition", f.matrix()));
                }
            }
        }
        (true, format!("{} maps per genus rejected with conditions 1 and 2 false", per_genus))
    })
}

pub fn paper_constructions() -> CheckResult {
    timed("subtorus and standard U_4 map embed with verified witnesses", 5, || {
        let fixtures = [
            (columns(SurfaceModel::orientable(1), &[[1, 0, 0], [0, 1, 0]]), CaseTag::PrimitiveRank2),
            (
                columns(nonorientable(4), &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
                CaseTag::NonorientableAllFive,
            ),
        ];
        for (f, case) in fixtures {
            let v = decide(&f);
            if !v.embeddable || v.case != case {
                return (false, format!("{} rejected", f.surface()));
            }
            match build_witness(&f) {
                Ok(BuildOutcome::Embeddable(w)) if verify_witness(&w, &f) == Ok(true) => {}
                _ => return (false, format!("{} witness failed to verify", f.surface())),
            }
        }
        (true, "both embeddable, both witnesses verify".into())
    })
}

pub fn h4_unimodularity() -> CheckResult {
    timed("h=4 kernel pairing automatically unimodular, entries in [-2,2]", 60, || {
        let u4 = nonorientable(4);
        let (mut surjective, mut qualifying) = (0u64, 0u64);
        for e in cube(9, 2) {
            let det = e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6])
                + e[2] * (e[3] * e[7] - e[4] * e[6]);
            if det.abs() != 1 {
                continue;
            }
            surjective += 1;
            let f = TorusMap::from_standard(u4.clone(), IntMatrix::from_i64(3, 3, &e))
                .expect("3x3");
            let v = decide(&f);
            let holds = |id: &str| v.condition(id).is_some_and(|c| c.holds);
            if !(holds("surjective") && holds("w1_pullback") && holds("mod2_class_nonzero")) {
                continue;
            }
            qualifying += 1;
            let k = kernel_data(&f).expect("even genus");
            if k.rank() != 0 || !k.det_gram.is_one() || !v.embeddable {
                return (false, format!("map {e:?}: kernel rank {}, detGram {}", k.rank(), k.det_gram));
            }
        }
        (
            qualifying > 0,
            format!("{qualifying} qualifying maps of {surjective} surjective: kernel rank 0, detGram 1"),
        )
    })
}

pub fn disjoint_classes() -> CheckResult {
    timed("disjoint mod-2 class solver, all nonzero triples", 1, || {
        for code in 1u8..8 {
            let t = [code & 1 == 1, code & 2 == 2, code & 4 == 4];
            let sols = disjoint_pair_solutions(t[0], t[1], t[2]);
            if sols != vec![[false; 3], t] {
                return (false, format!("{t:?} gave {sols:?}"));
            }
        }
        let all = disjoint_pair_solutions(false, false, false).len() == 8;
        (all, "7 triples with exactly {0, (a,b,c)}; zero triple gives all 8".into())
    })
}

/// The fixed map population of the invariance suite: half uniform, half
/// built to be embeddable.
pub fn invariance_population(seed: u64, count: usize) -> Vec<TorusMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let surfaces: Vec<SurfaceModel> = (1..=4)
        .map(SurfaceModel::orientable)
        .chain([2, 4, 6, 8].into_iter().map(nonorientable))
        .collect();
    (0..count)
        .map(|i| {
            let s = &surfaces[i % surfaces.len()];
            let seeded = if i % 2 == 1 { random_embeddable_map(&mut rng, s, 3) } else { None };
            seeded.unwrap_or_else(|| random_map(&mut rng, s, 3))
        })
        .collect()
}

fn signature(v: &Verdict) -> (bool, CaseTag, Vec<bool>, Option<BigInt>) {
    let (e, c, h) = v.signature();
    (e, c, h, det_gram(v).cloned())
}

/// Runs the invariance suite, returning the result and every embeddable map seen.
pub fn invariance_suite(seed: u64, maps: usize, per_map: usize) -> (CheckResult, Vec<TorusMap>) {
    let mut embeddable = Vec::new();
    let result = timed("verdict invariance under GL3(Z) and surface automorphisms", 60, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let population = invariance_population(seed, maps);
        let mut accepted = 0;
        for f in &population {
            let base = signature(&decide(f));
            if base.0 {
                accepted += 1;
                embeddable.push(f.clone());
            }
            for _ in 0..per_map {
                let u = random_unimodular(&mut rng, 3, 8);
                let phi = random_surface_automorphism(&mut rng, f.surface(), 8);
                for g in [f.post_compose(&u), f.pre_compose(&phi)] {
                    let g = g.expect("shapes match");
                    let v = decide(&g);
                    if signature(&v) != base {
                        return (false, format!("{} map {} changed verdict", f.surface(), f.matrix()));
                    }
                    if v.embeddable {
                        embeddable.push(g);
                    }
                }
            }
        }
        (
            true,
            format!("{maps} maps ({accepted} embeddable) x {per_map} post- and {per_map} precompositions"),
        )
    });
    (result, embeddable)
}

pub fn witness_round_trip(maps: &[TorusMap]) -> CheckResult {
    timed("witness round trip and trace lengths on embeddable maps", 60, || {
        if maps.is_empty() {
            return (false, "no embeddable maps supplied".into());
        }
        for f in maps {
            let Ok(BuildOutcome::Embeddable(w)) = build_witness(f) else {
                return (false, format!("{} map {} produced no witness", f.surface(), f.matrix()));
            };
            let g = f.surface().genus() as usize;
            let expected = match &w.shape {
                WitnessShape::SphereWithTubes { .. } => g,
                WitnessShape::TorusWithHandles { .. } => g - 1,
                WitnessShape::NonorientableStandard { .. } => (g - 4) / 2,
            };
            if w.trace.len() != expected || verify_witness(&w, f) != Ok(true) {
                return (false, format!("{} map {} failed verification", f.surface(), f.matrix()));
            }
        }
        (true, format!("{} witnesses verified with exact trace lengths", maps.len()))
    })
}

pub fn condition_five_independence() -> CheckResult {
    timed("condition 5 independent: (x, y, 2x, 2y, z) on U_6 passes 1-4, fails 5", 5, || {
        let f = columns(nonorientable(6), &[[1, 0, 0], [0, 1, 0], [2, 0, 0], [0, 2, 0], [0, 0, 1]]);
        let v = decide(&f);
        let det = det_gram(&v).cloned().unwrap_or_default();
        (
            v.failed() == vec![5] && det == BigInt::from(25),
            format!("failed conditions {:?}, detGram {det}", v.failed()),
        )
    })
}

/// Intersection number on `(a₁, b₁, a₂, b₂, m)` written out term by term.
fn u6_pairing(u: &[BigInt], v: &[BigInt]) -> BigInt {
    &u[0] * &v[1] - &u[1] * &v[0] + &u[2] * &v[3] - &u[3] * &v[2]
}

pub fn doubled_handle_fixture() -> CheckResult {
    timed("fixture (x, y, 2x, 0, z) on U_6: kernel pairing by bilinear expansion", 5, || {
        let f = columns(nonorientable(6), &[[1, 0, 0], [0, 1, 0], [2, 0, 0], [0, 0, 0], [0, 0, 1]]);
        let k = kernel_data(&f).expect("even genus");
        let ok_basis = k.rank() == 2
            && k.basis.iter().all(|b| f.matrix().mul_vec(b).is_ok_and(|x| x.iter().all(Zero::is_zero)));
        let oracle = u6_pairing(&k.basis[0], &k.basis[1]);
        let v = decide(&f);
        let expected = oracle.abs() * oracle.abs();
        (
            ok_basis && k.det_gram == expected && expected.is_one() && v.embeddable,
            format!(
                "kernel 2a1 - a2, b2 pairs to {oracle}; detGram {}; all five conditions {}",
                k.det_gram,
                if v.embeddable { "hold" } else { "do not hold" }
            ),
        )
    })
}

pub fn parity_law(seed: u64, count: usize) -> CheckResult {
    timed("with conditions 2 and 4, condition 3 holds iff detGram is odd", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9a17);
        let mut tested = 0;
        for i in 0..count {
            let s = nonorientable(if i % 2 == 0 { 6 } else { 8 });
            let f = if i % 4 == 3 {
                random_embeddable_map(&mut rng, &s, 2).expect("even genus at least 4")
            } else {
                random_map(&mut rng, &s, 2)
            };
            let v = decide(&f);
            let holds = |id: &str| v.condition(id).is_some_and(|c| c.holds);
            if !(holds("w1_pullback") && holds("surjective")) {
                continue;
            }
            tested += 1;
            let odd = det_gram(&v).is_some_and(|d| d.is_odd());
            if holds("mod2_class_nonzero") != odd {
                return (false, format!("{s} map {} breaks the parity law", f.matrix()));
            }
        }
        (tested > 0, format!("{tested} of {count} maps satisfied 2 and 4; all consistent"))
    })
}

/// ω(U∘f) against `Λ²U·ω(f)` in the basis `(x×y, y×z, x×z)`.
pub fn naturality_holds(omega_fn: &dyn Fn(&TorusMap) -> OmegaClass, f: &TorusMap, u: &IntMatrix) -> bool {
    let w = omega_fn(f);
    let cols = u.column_vectors();
    let terms = [
        (&w.a, OmegaClass::wedge(&cols[0], &cols[1])),
        (&w.b, OmegaClass::wedge(&cols[1], &cols[2])),
        (&w.c, OmegaClass::wedge(&cols[0], &cols[2])),
    ];
    let mut expected = OmegaClass { a: BigInt::zero(), b: BigInt::zero(), c: BigInt::zero() };
    for (k, t) in terms {
        expected.a += k * t.a;
        expected.b += k * t.b;
        expected.c += k * t.c;
    }
    omega_fn(&f.post_compose(u).expect("3x3")) == expected
}

pub fn omega_checks(seed: u64, count: usize, omega_fn: &dyn Fn(&TorusMap) -> OmegaClass) -> CheckResult {
    timed("omega naturality and agreement with the handle wedge sum", 10, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x03e9);
        for i in 0..count {
            let s = SurfaceModel::orientable(1 + (i % 4) as u32);
            let f = random_map(&mut rng, &s, 3);
            let u = random_unimodular(&mut rng, 3, 8);
            let phi = random_surface_automorphism(&mut rng, &s, 8);
            let w = omega_fn(&f);
            if w != handle_wedge_sum(&f)
                || !naturality_holds(omega_fn, &f, &u)
                || omega_fn(&f.pre_compose(&phi).expect("square")) != w
            {
                return (false, format!("{s} map {} breaks naturality", f.matrix()));
            }
        }
        (true, format!("{count} maps"))
    })
}

/// `Kᵀ B K` for the kernel basis `K`, with `B` supplied by `form_fn`.
pub fn raw_kernel_gram(form_fn: &dyn Fn(&SurfaceModel) -> IntMatrix, f: &TorusMap) -> IntMatrix {
    let k = kernel_basis(f.matrix());
    let b = form_fn(f.surface());
    let km = IntMatrix::from_columns(f.matrix().cols(), &k).expect("kernel vectors fit");
    &(&km.transpose() * &b) * &km
}

pub fn gram_checks(
    seed: u64,
    count: usize,
    form_fn: &dyn Fn(&SurfaceModel) -> IntMatrix,
) -> CheckResult {
    timed("kernel Gram matrices are skew and match the library pairing", 10, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6a3);
        let mut with_m = 0;
        for i in 0..count {
            let s = nonorientable(4 + 2 * (i % 3) as u32);
            let f = random_map(&mut rng, &s, 2);
            let gram = raw_kernel_gram(form_fn, &f);
            let k = kernel_data(&f).expect("even genus");
            with_m += usize::from(k.m_coefficients_nonzero);
            if !gram.is_skew_symmetric() || gram != k.gram {
                return (false, format!("{s} map {} has a bad kernel Gram", f.matrix()));
            }
        }
        (with_m > 0, format!("{count} maps, {with_m} with m in the kernel"))
    })
}

/// The pairing the library uses on `(a, b, …, m)`.
pub fn reference_form(s: &SurfaceModel) -> IntMatrix {
    let j = standard_symplectic(s.handle_count());
    if s.is_orientable() {
        j
    } else {
        block_diagonal(&[j, IntMatrix::zeros(1, 1)])
    }
}

fn random_skew<R: Rng>(rng: &mut R, n: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = BigInt::from(rng.gen_range(-bound..=bound));
            m[(j, i)] = -x.clone();
            m[(i, j)] = x;
        }
    }
    m
}

pub fn necessity_oracles(seed: u64, count: usize) -> CheckResult {
    timed("gcd(omega) = d1*d2 on rank-2 torus maps; skew determinants match Bareiss", 30, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4e);
        let torus = SurfaceModel::orientable(1);
        let mut rank2 = 0;
        for _ in 0..count {
            let f = random_map(&mut rng, &torus, 3);
            let factors = snf(f.matrix()).invariant_factors;
            if factors.len() != 2 {
                continue;
            }
            rank2 += 1;
            let w = omega(&f).expect("orientable");
            if w.gcd() != &factors[0] * &factors[1] {
                return (false, format!("torus map {} has gcd {} vs factors {factors:?}", f.matrix(), w.gcd()));
            }
        }
        // higher genus: divisibility always, equality for accepted primitive maps
        for i in 0..count {
            let s = SurfaceModel::orientable(2 + (i % 3) as u32);
            let f = random_map(&mut rng, &s, 2);
            let factors = snf(f.matrix()).invariant_factors;
            if factors.len() != 2 {
                continue;
            }
            let d = &factors[0] * &factors[1];
            let w = omega(&f).expect("orientable");
            let v = decide(&f);
            let bad = !w.gcd().is_multiple_of(&d)
                || (v.case == CaseTag::PrimitiveRank2 && !(d.is_one() && v.profile().is_some_and(|p| p.is_summand)));
            if bad {
                return (false, format!("{s} map {} breaks d1*d2 | gcd(omega)", f.matrix()));
            }
        }

        let mut grams = 0;
        for i in 0..count {
            let gram = if i % 2 == 0 {
                random_skew(&mut rng, i % 9, 3)
            } else {
                let s = if i % 4 == 1 {
                    SurfaceModel::orientable(2 + (i % 4) as u32)
                } else {
                    nonorientable(6 + 2 * (i % 3) as u32)
                };
                grams += 1;
                kernel_data(&random_map(&mut rng, &s, 2)).expect("form exists").gram
            };
            let fast = skew_abs_det(&gram).expect("skew input");
            if fast != bareiss_abs_det(&gram) {
                return (false, format!("determinant mismatch on {gram}"));
            }
        }
        (
            rank2 > 0,
            format!("{rank2} rank-2 torus maps; {count} skew determinants ({grams} kernel Grams) agree"),
        )
    })
}

pub fn crosscap_consistency(seed: u64, count: usize) -> CheckResult {
    timed("mod-2 class agrees in crosscap and standard coordinates", 10, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc0);
        for i in 0..count {
            let h = 1 + (i % 8) as u32;
            let m = random_crosscap_matrix(&mut rng, h, 3);
            let f = TorusMap::from_crosscap(nonorientable(h), m.clone()).expect("zero column sum");
            if omega_mod2(&f).expect("nonorientable") != crosscap_dot_class(&m) {
                return (false, format!("U_{h} crosscap matrix {m}"));
            }
        }
        (true, format!("{count} crosscap maps, h from 1 to 8"))
    })
}

#[derive(Clone, Copy, Debug)]
pub struct Scale {
    pub odd_per_genus: usize,
    pub invariance_maps: usize,
    pub transforms_per_map: usize,
    pub oracle_samples: usize,
    pub exhaustive: bool,
}

impl Scale {
    pub const FULL: Scale = Scale {
        odd_per_genus: 1000,
        invariance_maps: 200,
        transforms_per_map: 20,
        oracle_samples: 500,
        exhaustive: true,
    };
}

pub fn run_all(seed: u64, scale: Scale) -> Vec<CheckResult> {
    let mut out = vec![klein_bottle_sweep(), odd_genus_exclusion(seed, scale.odd_per_genus), paper_constructions()];
    if scale.exhaustive {
        out.push(h4_unimodularity());
    }
    out.push(disjoint_classes());
    let (inv, embeddable) = invariance_suite(seed, scale.invariance_maps, scale.transforms_per_map);
    out.push(inv);
    out.push(condition_five_independence());
    out.push(doubled_handle_fixture());
    out.push(parity_law(seed, 4 * scale.oracle_samples));
    out.push(necessity_oracles(seed, scale.oracle_samples));
    out.push(witness_round_trip(&embeddable));
    out.push(omega_checks(seed, scale.oracle_samples, &|f| omega(f).expect("orientable")));
    out.push(gram_checks(seed, scale.oracle_samples / 5, &reference_form));
    out.push(crosscap_consistency(seed, scale.oracle_samples));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_examples() {
        assert_eq!(bareiss_abs_det(&IntMatrix::zeros(0, 0)), BigInt::one());
        assert_eq!(bareiss_abs_det(&IntMatrix::from_i64(2, 2, &[0, 2, -2, 0])), BigInt::from(4));
        assert_eq!(bareiss_abs_det(&IntMatrix::from_i64(3, 3, &[2, 3, 1, 1, 2, 1, 1, 1, 1])), BigInt::one());
        assert_eq!(bareiss_abs_det(&IntMatrix::from_i64(2, 2, &[1, 2, 2, 4])), BigInt::zero());
        assert_eq!(bareiss_abs_det(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])), BigInt::one());
    }

    #[test]
    fn small_checks_pass() {
        for r in [
            klein_bottle_sweep(),
            paper_constructions(),
            disjoint_classes(),
            condition_five_independence(),
            doubled_handle_fixture(),
            odd_genus_exclusion(1, 20),
            parity_law(1, 200),
            necessity_oracles(1, 40),
            crosscap_consistency(1, 40),
        ] {
            assert!(r.passed, "{r}");
        }
        let (inv, maps) = invariance_suite(1, 16, 3);
        assert!(inv.passed, "{inv}");
        assert!(witness_round_trip(&maps).passed);
    }

    #[test]
    fn sign_flipped_omega_breaks_naturality() {
        let flipped = |f: &TorusMap| {
            let mut w = omega(f).unwrap();
            w.c = -w.c;
            w
        };
        assert!(omega_checks(2, 20, &|f| omega(f).unwrap()).passed);
        assert!(!omega_checks(2, 20, &flipped).passed);
    }

    #[test]
    fn nonzero_radical_breaks_gram_skew_symmetry() {
        let mutant = |s: &SurfaceModel| {
            block_diagonal(&[standard_symplectic(s.handle_count()), IntMatrix::from_i64(1, 1, &[1])])
        };
        assert!(gram_checks(3, 30, &reference_form).passed);
        assert!(!gram_checks(3, 30, &mutant).passed);
    }

    #[test]
    fn result_lines() {
        let r = disjoint_classes();
        assert!(r.to_string().starts_with("PASS disjoint mod-2 class solver"));
    }
}
