//! Integral skew-symmetric forms: Gram matrices, the skew normal form, and
//! completion of hyperbolic pairs to symplectic bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::{hermite_rows, is_primitive};
use super::matrix::{dot, IntMatrix, IntVector};
use super::snf::snf;
use crate::error::{Error, Result};

/// A skew-symmetric bilinear form on `Z^dimension`, given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewForm {
    gram: IntMatrix,
}

impl SkewForm {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        if !gram.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(SkewForm { gram })
    }

    pub fn standard(g: usize) -> Self {
        SkewForm { gram: super::matrix::standard_symplectic(g) }
    }

    pub fn dimension(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        dot(x, &self.gram.mul_vec(y).expect("vector length matches form"))
    }

    /// `xᵀB`, so that `B(x, y)` is a dot product with `y`.
    fn covector(&self, x: &[BigInt]) -> IntVector {
        self.gram.transpose().mul_vec(x).expect("vector length matches form")
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.dimension() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a form of dimension {}",
                v.len(),
                self.dimension()
            )));
        }
        Ok(())
    }
}

/// `G[i][j] = vᵢᵀ B vⱼ`.
pub fn skew_gram(form: &SkewForm, vectors: &[IntVector]) -> Result<IntMatrix> {
    for v in vectors {
        form.check_len(v)?;
    }
    let images: Vec<IntVector> =
        vectors.iter().map(|v| form.gram.mul_vec(v)).collect::<Result<_>>()?;
    let k = vectors.len();
    let mut g = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in i + 1..k {
            let x = dot(&vectors[i], &images[j]);
            g[(j, i)] = -&x;
            g[(i, j)] = x;
        }
    }
    Ok(g)
}

/// `Tᵀ G T = blockdiag([[0,d₁],[-d₁,0]], …, 0, …)` with `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewNormalForm {
    pub transform: IntMatrix,
    pub blocks: Vec<BigInt>,
}

impl SkewNormalForm {
    pub fn dimension(&self) -> usize {
        self.transform.rows()
    }

    /// `|det G|`: the squared product of the blocks, or 0 when a radical remains.
    /// An empty form has determinant 1.
    pub fn abs_det(&self) -> BigInt {
        if 2 * self.blocks.len() < self.dimension() {
            return BigInt::zero();
        }
        let pf: BigInt = self.blocks.iter().product();
        &pf * &pf
    }

    pub fn is_unimodular(&self) -> bool {
        2 * self.blocks.len() == self.dimension() && self.blocks.iter().all(One::is_one)
    }
}

/// Congruence transformations on a skew matrix with the basis change tracked.
struct Congruence {
    g: IntMatrix,
    t: IntMatrix,
}

impl Congruence {
    /// `eₖ ← eₖ + c·eₗ`
    fn add(&mut self, k: usize, l: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        self.t.add_col_multiple(k, l, c);
        self.g.add_col_multiple(k, l, c);
        self.g.add_row_multiple(k, l, c);
    }

    fn swap(&mut self, a: usize, b: usize) {
        self.t.swap_cols(a, b);
        self.g.swap_cols(a, b);
        self.g.swap_rows(a, b);
    }

    fn negate(&mut self, k: usize) {
        self.t.negate_col(k);
        self.g.negate_col(k);
        self.g.negate_row(k);
    }
}

pub fn skew_normal_form(g: &IntMatrix) -> Result<SkewNormalForm> {
    if !g.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let n = g.rows();
    let mut c = Congruence { g: g.clone(), t: IntMatrix::identity(n) };
    let mut blocks = Vec::new();

    let mut p = 0;
    while p + 1 < n {
        // smallest nonzero |g_ij|, i < j, in the trailing block; lowest index on ties
        let mut best: Option<(usize, usize)> = None;
        for i in p..n {
            for j in i + 1..n {
                let x = &c.g[(i, j)];
                if !x.is_zero() && best.is_none_or(|b| x.abs() < c.g[b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((i, j)) = best else { break };
        // j > i >= p, so the first swap leaves column j in place
        c.swap(p, i);
        c.swap(p + 1, j);

        loop {
            if c.g[(p, p + 1)].is_negative() {
                c.negate(p + 1);
            }
            let d = c.g[(p, p + 1)].clone();
            let mut clean = true;
            for k in p + 2..n {
                // B(e_p, e_k) reduced with e_{p+1}; B(e_{p+1}, e_k) reduced with e_p
                let q = c.g[(p, k)].div_floor(&d);
                c.add(k, p + 1, &-q);
                let q = c.g[(p + 1, k)].div_floor(&d);
                c.add(k, p, &q);
                clean &= c.g[(p, k)].is_zero() && c.g[(p + 1, k)].is_zero();
            }
            if !clean {
                // a smaller remainder appeared; move it to the pivot position
                let (r, k) = (p..p + 2)
                    .flat_map(|r| (p + 2..n).map(move |k| (r, k)))
                    .filter(|&pos| !c.g[pos].is_zero())
                    .min_by(|&a, &b| c.g[a].abs().cmp(&c.g[b].abs()))
                    .expect("unclean row has a nonzero entry");
                if r == p + 1 {
                    c.swap(p, p + 1);
                }
                c.swap(p + 1, k);
                continue;
            }
            let offending = (p + 2..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&pos| !c.g[pos].is_multiple_of(&d));
            match offending {
                // e_p ← e_p + e_i brings g_ij into the pivot row
                Some((i, _)) => c.add(p, i, &BigInt::one()),
                None => break,
            }
        }
        blocks.push(c.g[(p, p + 1)].clone());
        p += 2;
    }
    debug_assert!(c.g.is_skew_symmetric());
    Ok(SkewNormalForm { transform: c.t, blocks })
}

/// `|det G|` of a skew Gram matrix through its normal form.
pub fn skew_abs_det(g: &IntMatrix) -> Result<BigInt> {
    Ok(skew_normal_form(g)?.abs_det())
}

fn require_unimodular(form: &SkewForm) -> Result<()> {
    if !skew_normal_form(form.gram())?.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

/// Ordered basis `(v, u, …)` of the whole lattice whose Gram matrix under
/// `form` is the standard symplectic matrix. Columns of the result.
pub fn complete_to_symplectic(v: &[BigInt], form: &SkewForm) -> Result<IntMatrix> {
    form.check_len(v)?;
    if !is_primitive(v) {
        return Err(Error::NotPrimitive(format_vec(v)));
    }
    require_unimodular(form)?;
    let u = partner(v, form)?;
    complete_pair_unchecked(v, &u, form)
}

/// Some `u` with `vᵀ B u = 1`.
fn partner(v: &[BigInt], form: &SkewForm) -> Result<IntVector> {
    // w = vᵀ B is primitive when B is unimodular and v primitive
    let w = form.gram.transpose().mul_vec(v)?;
    let row = IntMatrix::from_rows(vec![w])?;
    let s = snf(&row);
    if s.invariant_factors.first().is_none_or(|d| !d.is_one()) {
        return Err(Error::NotUnimodular);
    }
    // U w V = (1, 0, …)  =>  w · (U₀₀ V e₀) = 1
    let scale = s.u[(0, 0)].clone();
    Ok(s.v.column(0).into_iter().map(|x| x * &scale).collect())
}

/// Partners `uᵢ` for an isotropic family `vᵢ` spanning a saturated sublattice:
/// `B(vᵢ, uⱼ) = δᵢⱼ` and `B(uᵢ, uⱼ) = 0`.
pub fn isotropic_partners(vs: &[IntVector], form: &SkewForm) -> Result<Vec<IntVector>> {
    for v in vs {
        form.check_len(v)?;
    }
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<IntVector> = vs.iter().map(|v| form.covector(v)).collect();
    if rows.iter().any(|bv| vs.iter().any(|w| !dot(bv, w).is_zero())) {
        return Err(Error::NotUnimodular);
    }
    require_unimodular(form)?;
    let k = vs.len();
    let w = IntMatrix::from_rows(rows)?;
    let s = snf(&w);
    if s.invariant_factors.len() != k || !s.invariant_factors.iter().all(One::is_one) {
        return Err(Error::NotPrimitive("isotropic family is not saturated".into()));
    }
    // U W V = [I 0]  =>  W (V₍:,..k₎ U) = I
    let x = &s.v.select_columns(0..k) * &s.u;
    let xs = x.column_vectors();
    let mut us = xs.clone();
    let cx: Vec<IntVector> = xs.iter().map(|x| form.covector(x)).collect();
    for j in 0..k {
        for i in 0..j {
            let c = dot(&cx[i], &xs[j]);
            for (uj, vi) in us[j].iter_mut().zip(&vs[i]) {
                *uj += &c * vi;
            }
        }
    }
    Ok(us)
}

/// Extends a hyperbolic pair `(v, u)` (with `vᵀBu = 1`) to a symplectic basis.
pub fn complete_pair(v: &[BigInt], u: &[BigInt], form: &SkewForm) -> Result<IntMatrix> {
    complete_family(&[(v.to_vec(), u.to_vec())], form)
}

/// Extends pairs `(vᵢ, uᵢ)` with `B(vᵢ, uⱼ) = δᵢⱼ` and `B(vᵢ, vⱼ) = B(uᵢ, uⱼ) = 0`
/// to a symplectic basis `(v₁, u₁, …, vₖ, uₖ, rest…)`.
pub fn complete_family(pairs: &[(IntVector, IntVector)], form: &SkewForm) -> Result<IntMatrix> {
    for (v, u) in pairs {
        form.check_len(v)?;
        form.check_len(u)?;
    }
    let co: Vec<(IntVector, IntVector)> =
        pairs.iter().map(|(v, u)| (form.covector(v), form.covector(u))).collect();
    for (i, (bv, bu)) in co.iter().enumerate() {
        for (j, (vj, uj)) in pairs.iter().enumerate() {
            let delta = if i == j { BigInt::one() } else { BigInt::zero() };
            if dot(bv, uj) != delta || !dot(bv, vj).is_zero() || !dot(bu, uj).is_zero() {
                return Err(Error::NotUnimodular);
            }
        }
    }
    require_unimodular(form)?;
    complete_family_unchecked(pairs, form)
}

fn complete_pair_unchecked(v: &[BigInt], u: &[BigInt], form: &SkewForm) -> Result<IntMatrix> {
    complete_family_unchecked(&[(v.to_vec(), u.to_vec())], form)
}

fn complete_family_unchecked(pairs: &[(IntVector, IntVector)], form: &SkewForm) -> Result<IntMatrix> {
    let n = form.dimension();
    // project every standard basis vector onto the symplectic complement:
    // P(x) = x + Σ B(uᵢ,x) vᵢ - B(vᵢ,x) uᵢ
    let co: Vec<(IntVector, IntVector)> =
        pairs.iter().map(|(v, u)| (form.covector(v), form.covector(u))).collect();
    let generators: Vec<IntVector> = (0..n)
        .map(|k| {
            let mut y = vec![BigInt::zero(); n];
            y[k] = BigInt::one();
            for ((v, u), (cv, cu)) in pairs.iter().zip(&co) {
                // B(u, e_k) and B(v, e_k)
                let (bu, bv) = (&cu[k], &cv[k]);
                if bu.is_zero() && bv.is_zero() {
                    continue;
                }
                for (yi, (vi, ui)) in y.iter_mut().zip(v.iter().zip(u)) {
                    *yi += bu * vi - bv * ui;
                }
            }
            y
        })
        .collect();
    let complement = hermite_rows(&generators, n);
    debug_assert_eq!(complement.len(), n.saturating_sub(2 * pairs.len()));

    let gram = skew_gram(form, &complement)?;
    let normal = skew_normal_form(&gram)?;
    if !normal.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let basis = IntMatrix::from_columns(n, &complement)?;
    let rest = &basis * &normal.transform;

    let mut columns = Vec::with_capacity(n);
    for (v, u) in pairs {
        columns.push(v.clone());
        columns.push(u.clone());
    }
    columns.extend(rest.column_vectors());
    IntMatrix::from_columns(n, &columns)
}

fn format_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::matrix::{block_diagonal, int_vec, standard_symplectic};
    use crate::exactlin::snf::is_unimodular;
    use proptest::prelude::*;

    fn j() -> IntMatrix {
        standard_symplectic(1)
    }

    #[test]
    fn gram_examples() {
        let form = SkewForm::standard(1);
        assert_eq!(skew_gram(&form, &[]).unwrap().rows(), 0);
        let pair = skew_gram(&form, &[int_vec(&[1, 0]), int_vec(&[0, 1])]).unwrap();
        assert_eq!(pair, j());

        let ext = SkewForm::new(block_diagonal(&[j(), j(), IntMatrix::zeros(1, 1)])).unwrap();
        let g = skew_gram(&ext, &[int_vec(&[1, 0, 0, -1, 0]), int_vec(&[0, 0, 1, 0, -2])])
            .unwrap();
        // (a1 - b2)·(a2 - 2m) = -(b2·a2) = 1
        assert_eq!(g, j());
        assert!(skew_gram(&ext, &[int_vec(&[1, 0])]).is_err());
    }

    #[test]
    fn normal_form_examples() {
        let z = skew_normal_form(&IntMatrix::zeros(3, 3)).unwrap();
        assert!(z.blocks.is_empty());
        assert_eq!(z.transform, IntMatrix::identity(3));
        assert_eq!(z.abs_det(), BigInt::zero());

        let h = skew_normal_form(&j()).unwrap();
        assert_eq!(h.blocks, int_vec(&[1]));
        assert!(h.is_unimodular());

        let two = skew_normal_form(&IntMatrix::from_i64(2, 2, &[0, 2, -2, 0])).unwrap();
        assert_eq!(two.blocks, int_vec(&[2]));
        // direct 2x2 determinant: 0*0 - 2*(-2) = 4
        assert_eq!(two.abs_det(), BigInt::from(4));

        let empty = skew_normal_form(&IntMatrix::zeros(0, 0)).unwrap();
        assert_eq!(empty.abs_det(), BigInt::one());
        assert!(empty.is_unimodular());

        assert!(skew_normal_form(&IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn completion_of_first_basis_vector() {
        let form = SkewForm::standard(2);
        let basis = complete_to_symplectic(&int_vec(&[1, 0, 0, 0]), &form).unwrap();
        let gram = skew_gram(&form, &basis.column_vectors()).unwrap();
        assert_eq!(gram, standard_symplectic(2));
        assert_eq!(basis.column(0), int_vec(&[1, 0, 0, 0]));
        assert_eq!(form.pair(&basis.column(0), &basis.column(1)), BigInt::one());
    }

    #[test]
    fn completion_of_diagonal_vector() {
        let form = SkewForm::standard(2);
        let v = int_vec(&[1, 0, 1, 0]);
        let basis = complete_to_symplectic(&v, &form).unwrap();
        assert!(is_unimodular(&basis));
        let gram = skew_gram(&form, &basis.column_vectors()).unwrap();
        assert_eq!(gram, standard_symplectic(2));
    }

    #[test]
    fn family_completion() {
        let form = SkewForm::standard(3);
        // (a1 + a2, b1) and (a2, b2 - b1)
        let pairs = [
            (int_vec(&[1, 0, 1, 0, 0, 0]), int_vec(&[0, 1, 0, 0, 0, 0])),
            (int_vec(&[0, 0, 1, 0, 0, 0]), int_vec(&[0, -1, 0, 1, 0, 0])),
        ];
        let basis = complete_family(&pairs, &form).unwrap();
        assert_eq!(basis.column(2), pairs[1].0);
        assert_eq!(skew_gram(&form, &basis.column_vectors()).unwrap(), standard_symplectic(3));

        let clash = [pairs[0].clone(), (pairs[1].0.clone(), int_vec(&[0, 0, 0, 1, 0, 0]))];
        assert!(complete_family(&clash, &form).is_err());
    }

    #[test]
    fn partners_of_isotropic_family() {
        let form = SkewForm::standard(3);
        let vs = [int_vec(&[1, 0, 1, 0, 0, 0]), int_vec(&[0, 1, 0, -1, 1, 0])];
        let us = isotropic_partners(&vs, &form).unwrap();
        for (i, v) in vs.iter().enumerate() {
            for (j, u) in us.iter().enumerate() {
                assert_eq!(form.pair(v, u), BigInt::from(u8::from(i == j)));
                assert!(form.pair(&us[i], u).is_zero());
            }
        }
        assert!(isotropic_partners(&[int_vec(&[2, 0, 0, 0, 0, 0])], &form).is_err());
        assert!(isotropic_partners(&[int_vec(&[1, 0, 0, 0, 0, 0]), int_vec(&[0, 1, 0, 0, 0, 0])], &form).is_err());
    }

    #[test]
    fn completion_errors() {
        let form = SkewForm::standard(1);
        assert!(matches!(
            complete_to_symplectic(&int_vec(&[2, 0]), &form),
            Err(Error::NotPrimitive(_))
        ));
        let doubled = SkewForm::new(IntMatrix::from_i64(2, 2, &[0, 2, -2, 0])).unwrap();
        assert_eq!(
            complete_to_symplectic(&int_vec(&[1, 0]), &doubled),
            Err(Error::NotUnimodular)
        );
    }

    fn random_skew() -> impl Strategy<Value = IntMatrix> {
        (0usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(-4i64..=4, n * n).prop_map(move |e| {
                let mut m = IntMatrix::zeros(n, n);
                for i in 0..n {
                    for j in i + 1..n {
                        m[(i, j)] = BigInt::from(e[i * n + j]);
                        m[(j, i)] = -BigInt::from(e[i * n + j]);
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn normal_form_is_congruent(g in random_skew()) {
            let nf = skew_normal_form(&g).unwrap();
            prop_assert!(is_unimodular(&nf.transform) || g.rows() == 0);
            let reduced = &(&nf.transform.transpose() * &g) * &nf.transform;
            let mut expected = IntMatrix::zeros(g.rows(), g.rows());
            for (k, d) in nf.blocks.iter().enumerate() {
                expected[(2 * k, 2 * k + 1)] = d.clone();
                expected[(2 * k + 1, 2 * k)] = -d.clone();
            }
            prop_assert_eq!(reduced, expected);
            for w in nf.blocks.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert!(nf.blocks.iter().all(|d| d.is_positive()));
            prop_assert_eq!(nf.is_unimodular(), nf.abs_det().is_one());
        }

        #[test]
        fn completion_gram_is_standard(
            g in 1usize..=3,
            raw in proptest::collection::vec(-3i64..=3, 6),
        ) {
            let v: IntVector = raw[..2 * g].iter().map(|&x| BigInt::from(x)).collect();
            prop_assume!(is_primitive(&v));
            let form = SkewForm::standard(g);
            let basis = complete_to_symplectic(&v, &form).unwrap();
            prop_assert_eq!(basis.column(0), v);
            prop_assert_eq!(skew_gram(&form, &basis.column_vectors()).unwrap(), standard_symplectic(g));
        }
    }
}
