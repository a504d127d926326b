//! Homotopy-class invariants of a map `F → T³`, computed from its matrix on
//! first homology.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    dot, gcd_vector, kernel_basis, skew_abs_det, skew_gram, snf, solve_mod2, IntMatrix,
    IntVector, Mod2Matrix,
};
use crate::surfaces::{crosscap_to_standard, SurfaceModel};

/// How the columns of an input matrix are indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTag {
    /// One column per free basis label of the surface.
    Standard,
    /// One column per crosscap generator `c₁ … c_h`.
    Crosscap,
}

/// A homotopy class of maps `F → T³`, stored as the `3 × freeRank` matrix of
/// `f₊` on the surface's free basis (columns in `H₁(T³) = Z³`, basis x, y, z).
/// The torsion class `t` always maps to zero and has no column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusMap {
    surface: SurfaceModel,
    matrix: IntMatrix,
}

impl TorusMap {
    pub fn new(surface: SurfaceModel, matrix: IntMatrix, basis: BasisTag) -> Result<Self> {
        match basis {
            BasisTag::Standard => Self::from_standard(surface, matrix),
            BasisTag::Crosscap => Self::from_crosscap(surface, matrix),
        }
    }

    pub fn from_standard(surface: SurfaceModel, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != 3 || matrix.cols() != surface.free_rank() {
            return Err(Error::DimensionMismatch(format!(
                "{surface} needs a 3x{} matrix on {:?}, got {}x{}",
                surface.free_rank(),
                surface.labels(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(TorusMap { surface, matrix })
    }

    /// Converts a `3 × h` matrix on crosscap generators. Its columns must sum
    /// to zero, since `t = Σ cᵢ` has order two.
    pub fn from_crosscap(surface: SurfaceModel, crosscap: IntMatrix) -> Result<Self> {
        if surface.is_orientable() {
            return Err(Error::ExpectedNonorientable);
        }
        let h = surface.genus() as usize;
        if crosscap.rows() != 3 || crosscap.cols() != h {
            return Err(Error::DimensionMismatch(format!(
                "crosscap input for {surface} needs a 3x{h} matrix, got {}x{}",
                crosscap.rows(),
                crosscap.cols()
            )));
        }
        let sum: IntVector = (0..3).map(|i| crosscap.row(i).iter().sum()).collect();
        if sum.iter().any(|x| !x.is_zero()) {
            let parts: Vec<String> = sum.iter().map(ToString::to_string).collect();
            return Err(Error::TorsionImage(format!("({})", parts.join(", "))));
        }
        let matrix = if surface.has_standard_nonorientable_basis() {
            let s = crosscap_to_standard(surface.genus())?;
            &crosscap * &s.select_columns(0..h - 1)
        } else {
            crosscap.select_columns(0..h - 1)
        };
        Ok(TorusMap { surface, matrix })
    }

    pub fn surface(&self) -> &SurfaceModel {
        &self.surface
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `U ∘ f` for `U` acting on `H₁(T³)`.
    pub fn post_compose(&self, u: &IntMatrix) -> Result<TorusMap> {
        Ok(TorusMap { surface: self.surface.clone(), matrix: u.checked_mul(&self.matrix)? })
    }

    /// `f ∘ φ` for `φ` acting on the free basis of `H₁(F)`.
    pub fn pre_compose(&self, phi: &IntMatrix) -> Result<TorusMap> {
        Ok(TorusMap { surface: self.surface.clone(), matrix: self.matrix.checked_mul(phi)? })
    }
}

/// Coefficients of `f₊[F]` on `(x×y, y×z, x×z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaClass {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl OmegaClass {
    pub fn as_array(&self) -> [&BigInt; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn is_zero(&self) -> bool {
        self.as_array().iter().all(|x| x.is_zero())
    }

    pub fn gcd(&self) -> BigInt {
        gcd_vector(&[self.a.clone(), self.b.clone(), self.c.clone()])
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd().is_one()
    }

    /// `p ∧ q` in the same coordinates.
    pub fn wedge(p: &[BigInt], q: &[BigInt]) -> OmegaClass {
        let w = |i: usize, j: usize| &p[i] * &q[j] - &p[j] * &q[i];
        OmegaClass { a: w(0, 1), b: w(1, 2), c: w(0, 2) }
    }
}

pub fn omega(f: &TorusMap) -> Result<OmegaClass> {
    if !f.surface.is_orientable() {
        return Err(Error::ExpectedOrientable);
    }
    let form = f.surface.integral_skew_form()?;
    let rows = f.matrix.row_vectors();
    let pair = |i: usize, j: usize| form.pair(&rows[i], &rows[j]);
    Ok(OmegaClass { a: pair(0, 1), b: pair(1, 2), c: pair(0, 2) })
}

/// Mod-2 class `f₊[U]₂` on `(x×y, y×z, x×z)`.
pub fn omega_mod2(f: &TorusMap) -> Result<[bool; 3]> {
    if f.surface.is_orientable() {
        return Err(Error::ExpectedNonorientable);
    }
    let q_inv = f.surface.mod2_form().inverse().expect("intersection form is nonsingular");
    // rows of f mod 2 as functionals on the full Z/2 basis; t maps to 0
    let reduced = Mod2Matrix::reduce(&f.matrix);
    let rows: Vec<Vec<bool>> = (0..3)
        .map(|i| {
            let mut r = reduced.row(i);
            r.push(false);
            r
        })
        .collect();
    let pair = |i: usize, j: usize| {
        let y = q_inv.mul_vec(&rows[j]).expect("row length matches form");
        rows[i].iter().zip(&y).fold(false, |acc, (p, q)| acc ^ (p & q))
    };
    Ok([pair(0, 1), pair(1, 2), pair(0, 2)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageProfile {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
    pub is_summand: bool,
    pub is_surjective: bool,
}

pub fn image_profile(f: &TorusMap) -> ImageProfile {
    let factors = snf(&f.matrix).invariant_factors;
    let is_summand = factors.iter().all(One::is_one);
    ImageProfile {
        rank: factors.len(),
        is_surjective: is_summand && factors.len() == 3,
        is_summand,
        invariant_factors: factors,
    }
}

/// Some `x ∈ H¹(T³; Z/2)` with `f*x = w₁`, or `None` if `w₁` is not pulled back.
pub fn w1_pullback_witness(f: &TorusMap) -> Result<Option<[bool; 3]>> {
    if f.surface.is_orientable() {
        return Err(Error::ExpectedNonorientable);
    }
    // columns: f on the free basis, then f(t) = 0
    let n = f.surface.mod2_rank();
    let reduced = Mod2Matrix::reduce(&f.matrix);
    let mut system = Mod2Matrix::zeros(n, 3);
    for j in 0..f.surface.free_rank() {
        for i in 0..3 {
            system.set(j, i, reduced.get(i, j));
        }
    }
    let w1 = f.surface.w1().0;
    Ok(solve_mod2(&system, &w1)?.map(|x| [x[0], x[1], x[2]]))
}

/// Kernel lattice of `f₊` with its intersection pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelData {
    pub basis: Vec<IntVector>,
    pub gram: IntMatrix,
    /// `|det gram|`; 1 for an empty kernel.
    pub det_gram: BigInt,
    /// Some basis vector has a nonzero `m` coordinate.
    pub m_coefficients_nonzero: bool,
}

impl KernelData {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det_gram.is_one()
    }
}

pub fn kernel_data(f: &TorusMap) -> Result<KernelData> {
    let form = f.surface.integral_skew_form()?;
    let basis = kernel_basis(&f.matrix);
    let gram = skew_gram(&form, &basis)?;
    let det_gram = skew_abs_det(&gram)?;
    let m_coefficients_nonzero = f.surface.has_standard_nonorientable_basis()
        && basis.iter().any(|v| !v.last().is_none_or(Zero::is_zero));
    Ok(KernelData { basis, gram, det_gram, m_coefficients_nonzero })
}

/// `Σᵢ f(aᵢ) ∧ f(bᵢ)` over the handle pairs of the free basis.
pub fn handle_wedge_sum(f: &TorusMap) -> OmegaClass {
    let mut total = OmegaClass { a: BigInt::zero(), b: BigInt::zero(), c: BigInt::zero() };
    for i in 0..f.surface.handle_count() {
        let w = OmegaClass::wedge(&f.matrix.column(2 * i), &f.matrix.column(2 * i + 1));
        total.a += w.a;
        total.b += w.b;
        total.c += w.c;
    }
    total
}

/// Mod-2 dot products of crosscap rows: the mod-2 class in crosscap coordinates.
pub fn crosscap_dot_class(crosscap: &IntMatrix) -> [bool; 3] {
    let r = crosscap.row_vectors();
    let odd = |i: usize, j: usize| num_integer::Integer::is_odd(&dot(&r[i], &r[j]));
    [odd(0, 1), odd(1, 2), odd(0, 2)]
}
