//! Homology models of closed surfaces.
//!
//! Orientable `F_g` uses the symplectic basis `(a₁, b₁, …, a_g, b_g)`.
//! Nonorientable `U_h` with `h = 2g + 2` uses the free basis
//! `(a₁, b₁, …, a_g, b_g, m)` plus the order-two class `t`; in crosscap
//! generators `c₁ … c_h` these are
//!
//! ```text
//! aᵢ = c₂ᵢ₋₁ + c₂ᵢ      bᵢ = c₂ᵢ + c₂ᵢ₊₁ + … + c_{h-1}
//! m  = c_h              t  = c₁ + … + c_h
//! ```
//!
//! Odd `h` keeps the raw crosscap free basis `(c₁, …, c_{h-1})` with
//! `t = c₁ + … + c_h`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlin::{
    block_diagonal, is_unimodular, standard_symplectic, IntMatrix, Mod2Matrix, SkewForm,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    Orientable,
    Nonorientable,
}

impl SurfaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SurfaceKind::Orientable => "orientable",
            SurfaceKind::Nonorientable => "nonorientable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    kind: SurfaceKind,
    genus: u32,
    labels: Vec<String>,
}

/// First Stiefel-Whitney class as a Z/2 functional on the full Z/2 basis
/// (free basis followed by `t` when present).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct W1Vector(pub Vec<bool>);

impl SurfaceModel {
    pub fn orientable(genus: u32) -> Self {
        let labels = (1..=genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
        SurfaceModel { kind: SurfaceKind::Orientable, genus, labels }
    }

    pub fn nonorientable(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidGenus { kind: "nonorientable", genus: 0 });
        }
        let labels = if genus.is_multiple_of(2) {
            let g = (genus - 2) / 2;
            let mut l: Vec<String> =
                (1..=g).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
            l.push("m".into());
            l
        } else {
            (1..genus).map(|i| format!("c{i}")).collect()
        };
        Ok(SurfaceModel { kind: SurfaceKind::Nonorientable, genus, labels })
    }

    /// Validating constructor for untrusted genus values.
    pub fn new(kind: SurfaceKind, genus: i64) -> Result<Self> {
        let invalid = || Error::InvalidGenus { kind: kind.as_str(), genus };
        let g = u32::try_from(genus).map_err(|_| invalid())?;
        match kind {
            SurfaceKind::Orientable => Ok(Self::orientable(g)),
            SurfaceKind::Nonorientable => Self::nonorientable(g).map_err(|_| invalid()),
        }
    }

    pub fn kind(&self) -> SurfaceKind {
        self.kind
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn is_orientable(&self) -> bool {
        self.kind == SurfaceKind::Orientable
    }

    /// Even nonorientable genus: the standard `(a, b, m)` basis is in use.
    pub fn has_standard_nonorientable_basis(&self) -> bool {
        !self.is_orientable() && self.genus.is_multiple_of(2)
    }

    /// Rank of the free part of first homology: `2g` or `h - 1`.
    pub fn free_rank(&self) -> usize {
        self.labels.len()
    }

    pub fn has_torsion(&self) -> bool {
        !self.is_orientable()
    }

    /// Labels of the free basis, in column order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of handle pairs `(aᵢ, bᵢ)` in the free basis.
    pub fn handle_count(&self) -> usize {
        match self.kind {
            SurfaceKind::Orientable => self.genus as usize,
            SurfaceKind::Nonorientable if self.genus.is_multiple_of(2) => (self.genus as usize - 2) / 2,
            SurfaceKind::Nonorientable => 0,
        }
    }

    /// Size of the Z/2 basis: free basis plus `t`.
    pub fn mod2_rank(&self) -> usize {
        self.free_rank() + usize::from(self.has_torsion())
    }

    pub fn w1(&self) -> W1Vector {
        match self.kind {
            SurfaceKind::Orientable => W1Vector(vec![false; self.free_rank()]),
            SurfaceKind::Nonorientable if self.genus.is_multiple_of(2) => {
                // 1 on m, 0 on every aᵢ, bᵢ and on t
                let mut v = vec![false; self.mod2_rank()];
                v[self.free_rank() - 1] = true;
                W1Vector(v)
            }
            // every cᵢ is one-sided; t·t = h = 1 mod 2
            SurfaceKind::Nonorientable => W1Vector(vec![true; self.mod2_rank()]),
        }
    }

    pub fn mod2_form(&self) -> Mod2Matrix {
        let n = self.mod2_rank();
        let mut q = Mod2Matrix::zeros(n, n);
        let handles = self.handle_count();
        for i in 0..handles {
            q.set(2 * i, 2 * i + 1, true);
            q.set(2 * i + 1, 2 * i, true);
        }
        match self.kind {
            SurfaceKind::Orientable => {}
            SurfaceKind::Nonorientable if self.genus.is_multiple_of(2) => {
                // [[1,1],[1,0]] on (m, t)
                let (m, t) = (n - 2, n - 1);
                q.set(m, m, true);
                q.set(m, t, true);
                q.set(t, m, true);
            }
            SurfaceKind::Nonorientable => {
                // cᵢ·cⱼ = δᵢⱼ, cᵢ·t = 1, t·t = 1
                for i in 0..n {
                    for j in 0..n {
                        q.set(i, j, i == j || i == n - 1 || j == n - 1);
                    }
                }
            }
        }
        q
    }

    /// Integral skew form on the free part: `J_g`, or `blockdiag(J_g, 0)` with
    /// `m` spanning the radical for even nonorientable genus.
    pub fn integral_skew_form(&self) -> Result<SkewForm> {
        let j = standard_symplectic(self.handle_count());
        let gram = match self.kind {
            SurfaceKind::Orientable => j,
            SurfaceKind::Nonorientable if self.genus.is_multiple_of(2) => {
                block_diagonal(&[j, IntMatrix::zeros(1, 1)])
            }
            SurfaceKind::Nonorientable => return Err(Error::OddGenus(self.genus)),
        };
        SkewForm::new(gram)
    }

    /// Whether `w₁` reduces from an integral class: always for orientable
    /// surfaces, and exactly for even nonorientable genus.
    pub fn w1_has_integral_lift(&self) -> bool {
        self.is_orientable() || self.genus.is_multiple_of(2)
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SurfaceKind::Orientable => write!(f, "F_{}", self.genus),
            SurfaceKind::Nonorientable => write!(f, "U_{}", self.genus),
        }
    }
}

/// Columns express `(a₁, b₁, …, a_g, b_g, m, t)` in crosscap coordinates.
pub fn crosscap_to_standard(h: u32) -> Result<IntMatrix> {
    if h < 2 || h % 2 == 1 {
        return Err(Error::OddCrosscapConversion(h));
    }
    let h = h as usize;
    let g = (h - 2) / 2;
    let mut s = IntMatrix::zeros(h, h);
    for i in 1..=g {
        let (a, b) = (2 * (i - 1), 2 * (i - 1) + 1);
        s[(2 * i - 2, a)] = BigInt::one();
        s[(2 * i - 1, a)] = BigInt::one();
        for k in 2 * i..h {
            s[(k - 1, b)] = BigInt::one();
        }
    }
    s[(h - 1, h - 2)] = BigInt::one();
    for k in 0..h {
        s[(k, h - 1)] = BigInt::one();
    }
    debug_assert!(is_unimodular(&s));
    Ok(s)
}
