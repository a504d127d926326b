//! Embeddability verdicts for orientable and nonorientable surfaces.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::invariants::{
    image_profile, kernel_data, omega, omega_mod2, w1_pullback_witness, ImageProfile,
    KernelData, OmegaClass, TorusMap,
};
use crate::surfaces::SurfaceModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Nullhomologous,
    PrimitiveRank2,
    NonorientableAllFive,
    FailedConditions,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Nullhomologous => "Nullhomologous",
            CaseTag::PrimitiveRank2 => "PrimitiveRank2",
            CaseTag::NonorientableAllFive => "NonorientableAllFive",
            CaseTag::FailedConditions => "FailedConditions",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The computed data behind one condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    Omega { omega: OmegaClass, gcd: BigInt },
    PrimitiveImage { omega: OmegaClass, gcd: BigInt, profile: ImageProfile },
    Genus { genus: u32 },
    W1Pullback { witness: Option<[bool; 3]> },
    Mod2Class { class: [bool; 3] },
    Image { profile: ImageProfile },
    KernelPairing { rank: usize, det_gram: BigInt, m_coefficients_nonzero: bool },
    NotApplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    /// Position in the governing list: 1–2 for orientable, 1–5 for nonorientable.
    pub number: u8,
    pub id: &'static str,
    pub holds: bool,
    pub applicable: bool,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub embeddable: bool,
    pub surface: SurfaceModel,
    pub case: CaseTag,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
}

impl Verdict {
    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    /// Numbers of the conditions that do not hold.
    pub fn failed(&self) -> Vec<u8> {
        self.conditions.iter().filter(|c| !c.holds).map(|c| c.number).collect()
    }

    /// Verdict fields that must not change under a homeomorphism of either side.
    pub fn signature(&self) -> (bool, CaseTag, Vec<bool>) {
        (self.embeddable, self.case, self.conditions.iter().map(|c| c.holds).collect())
    }
}

pub const SPHERE_NOTE: &str =
    "genus 0: every map of the sphere into the aspherical 3-torus is nullhomotopic";
pub const EMPTY_KERNEL_NOTE: &str =
    "kernel is trivial; the empty pairing counts as unimodular (determinant 1)";
pub const M_CAVEAT_NOTE: &str = "kernel contains classes with nonzero m-coefficient; the pairing \
     extends the orientable-subsurface pairing by putting m in the radical, which may differ \
     from the pairing carried by a cut-open subsurface";
pub const ODD_GENUS_NOTE: &str =
    "odd nonorientable genus: w1 has no integral lift, so no kernel pairing is defined";

pub fn decide(f: &TorusMap) -> Verdict {
    if f.surface().is_orientable() {
        decide_orientable(f)
    } else {
        decide_nonorientable(f)
    }
}

fn decide_orientable(f: &TorusMap) -> Verdict {
    let w = omega(f).expect("orientable surface");
    let gcd = w.gcd();
    let profile = image_profile(f);
    debug_assert!(!w.is_primitive() || profile.rank >= 2, "primitive ω forces rank ≥ 2");

    let nullhomologous = w.is_zero();
    let primitive = w.is_primitive() && profile.rank == 2;
    let conditions = vec![
        Condition {
            number: 1,
            id: "nullhomologous",
            holds: nullhomologous,
            applicable: true,
            evidence: Evidence::Omega { omega: w.clone(), gcd: gcd.clone() },
        },
        Condition {
            number: 2,
            id: "primitive_rank_2",
            holds: primitive,
            applicable: true,
            evidence: Evidence::PrimitiveImage { omega: w, gcd, profile },
        },
    ];
    let case = if nullhomologous {
        CaseTag::Nullhomologous
    } else if primitive {
        CaseTag::PrimitiveRank2
    } else {
        CaseTag::FailedConditions
    };
    let mut notes = Vec::new();
    if f.surface().genus() == 0 {
        notes.push(SPHERE_NOTE.to_string());
    }
    Verdict {
        embeddable: nullhomologous || primitive,
        surface: f.surface().clone(),
        case,
        conditions,
        notes,
    }
}

fn decide_nonorientable(f: &TorusMap) -> Verdict {
    let surface = f.surface();
    let h = surface.genus();
    let witness = w1_pullback_witness(f).expect("nonorientable surface");
    let class = omega_mod2(f).expect("nonorientable surface");
    let profile = image_profile(f);
    let mut notes = Vec::new();

    let kernel = if h.is_multiple_of(2) {
        let k: KernelData = kernel_data(f).expect("even genus has a kernel pairing");
        if k.rank() == 0 {
            notes.push(EMPTY_KERNEL_NOTE.to_string());
        }
        if k.m_coefficients_nonzero {
            notes.push(M_CAVEAT_NOTE.to_string());
        }
        Condition {
            number: 5,
            id: "kernel_unimodular",
            holds: k.is_unimodular(),
            applicable: true,
            evidence: Evidence::KernelPairing {
                rank: k.rank(),
                det_gram: k.det_gram,
                m_coefficients_nonzero: k.m_coefficients_nonzero,
            },
        }
    } else {
        notes.push(ODD_GENUS_NOTE.to_string());
        Condition {
            number: 5,
            id: "kernel_unimodular",
            holds: false,
            applicable: false,
            evidence: Evidence::NotApplicable { reason: ODD_GENUS_NOTE.to_string() },
        }
    };

    let conditions = vec![
        Condition {
            number: 1,
            id: "even_genus",
            holds: h.is_multiple_of(2),
            applicable: true,
            evidence: Evidence::Genus { genus: h },
        },
        Condition {
            number: 2,
            id: "w1_pullback",
            holds: witness.is_some(),
            applicable: true,
            evidence: Evidence::W1Pullback { witness },
        },
        Condition {
            number: 3,
            id: "mod2_class_nonzero",
            holds: class.iter().any(|&x| x),
            applicable: true,
            evidence: Evidence::Mod2Class { class },
        },
        Condition {
            number: 4,
            id: "surjective",
            holds: profile.is_surjective,
            applicable: true,
            evidence: Evidence::Image { profile },
        },
        kernel,
    ];
    let embeddable = conditions.iter().all(|c| c.holds);
    Verdict {
        embeddable,
        surface: surface.clone(),
        case: if embeddable { CaseTag::NonorientableAllFive } else { CaseTag::FailedConditions },
        conditions,
        notes,
    }
}

/// All `(a′, b′, c′)` over Z/2 killed by `[[c,0,a],[b,a,0],[0,c,b]]`: the mod-2
/// classes of a surface disjoint from one in class `(a, b, c)`.
pub fn disjoint_pair_solutions(a: bool, b: bool, c: bool) -> Vec<[bool; 3]> {
    let system = [[c, false, a], [b, a, false], [false, c, b]];
    (0u8..8)
        .map(|code| [code & 1 == 1, code & 2 == 2, code & 4 == 4])
        .filter(|x| {
            system.iter().all(|row| !row.iter().zip(x).fold(false, |acc, (p, q)| acc ^ (p & q)))
        })
        .collect()
}

/// `|det|` of the kernel pairing, when defined.
pub fn det_gram(v: &Verdict) -> Option<&BigInt> {
    match &v.condition("kernel_unimodular")?.evidence {
        Evidence::KernelPairing { det_gram, .. } => Some(det_gram),
        _ => None,
    }
}

/// Whether the verdict's kernel has odd Gram determinant; used by the
/// parity law relating conditions 3 and 5.
pub fn det_gram_is_odd(v: &Verdict) -> Option<bool> {
    det_gram(v).map(|d| !(d % 2u8).is_zero())
}

impl Verdict {
    pub fn omega(&self) -> Option<&OmegaClass> {
        match &self.condition("nullhomologous")?.evidence {
            Evidence::Omega { omega, .. } => Some(omega),
            _ => None,
        }
    }

    pub fn profile(&self) -> Option<&ImageProfile> {
        self.conditions.iter().find_map(|c| match &c.evidence {
            Evidence::PrimitiveImage { profile, .. } | Evidence::Image { profile } => Some(profile),
            _ => None,
        })
    }

    pub fn kernel_is_trivial(&self) -> bool {
        det_gram(self).is_some_and(One::is_one)
            && matches!(
                self.condition("kernel_unimodular").map(|c| &c.evidence),
                Some(Evidence::KernelPairing { rank: 0, .. })
            )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int_vec, IntMatrix, IntVector};
    use crate::invariants::BasisTag;

    fn map(surface: SurfaceModel, cols: &[[i64; 3]]) -> TorusMap {
        let columns: Vec<IntVector> = cols.iter().map(|c| int_vec(c)).collect();
        TorusMap::from_standard(surface, IntMatrix::from_columns(3, &columns).unwrap()).unwrap()
    }

    fn u(h: u32) -> SurfaceModel {
        SurfaceModel::nonorientable(h).unwrap()
    }

    const X: [i64; 3] = [1, 0, 0];
    const Y: [i64; 3] = [0, 1, 0];
    const Z: [i64; 3] = [0, 0, 1];
    const O: [i64; 3] = [0, 0, 0];

    #[test]
    fn subtorus_is_primitive_rank_2() {
        let v = decide(&map(SurfaceModel::orientable(1), &[X, Y]));
        assert!(v.embeddable);
        assert_eq!(v.case, CaseTag::PrimitiveRank2);
        assert!(v.profile().unwrap().is_summand);
    }

    #[test]
    fn sphere_is_embeddable_with_note() {
        let v = decide(&map(SurfaceModel::orientable(0), &[]));
        assert!(v.embeddable);
        assert_eq!(v.case, CaseTag::Nullhomologous);
        assert_eq!(v.notes, vec![SPHERE_NOTE.to_string()]);
    }

    #[test]
    fn rank_three_is_rejected() {
        let v = decide(&map(SurfaceModel::orientable(2), &[X, Y, Z, O]));
        assert!(v.omega().unwrap().is_primitive());
        assert_eq!(v.profile().unwrap().rank, 3);
        assert!(!v.embeddable);
        assert_eq!(v.failed(), vec![1, 2]);
    }

    #[test]
    fn nonprimitive_class_is_rejected() {
        let v = decide(&map(SurfaceModel::orientable(1), &[[2, 0, 0], Y]));
        assert_eq!(v.omega().unwrap().gcd(), BigInt::from(2));
        assert!(!v.embeddable);
        assert_eq!(v.case, CaseTag::FailedConditions);
    }

    #[test]
    fn zero_map_is_nullhomologous() {
        let v = decide(&map(SurfaceModel::orientable(3), &[O; 6]));
        assert!(v.embeddable);
        assert_eq!(v.case, CaseTag::Nullhomologous);
    }

    #[test]
    fn klein_bottle_examples() {
        for m in [[X], [Z], [O], [[2, 1, 0]]] {
            let v = decide(&map(u(2), &m));
            assert!(!v.embeddable);
            assert!(!v.condition("surjective").unwrap().holds);
        }
    }

    #[test]
    fn standard_u4_map() {
        let v = decide(&map(u(4), &[X, Y, Z]));
        assert!(v.embeddable);
        assert_eq!(v.case, CaseTag::NonorientableAllFive);
        assert!(v.kernel_is_trivial());
        assert_eq!(v.notes, vec![EMPTY_KERNEL_NOTE.to_string()]);
    }

    #[test]
    fn odd_genus_never_embeds() {
        let v = decide(&map(u(3), &[X, [-1, 0, 0]]));
        assert!(!v.embeddable);
        let c5 = v.condition("kernel_unimodular").unwrap();
        assert!(!c5.applicable);
        assert!(!v.condition("even_genus").unwrap().holds);
        assert!(!v.condition("w1_pullback").unwrap().holds);
    }

    #[test]
    fn condition_five_alone_fails() {
        // kernel 2a1 - a2, 2b1 - b2 pairs to 4 + 1
        let v = decide(&map(u(6), &[X, Y, [2, 0, 0], [0, 2, 0], Z]));
        assert_eq!(v.failed(), vec![5]);
        assert_eq!(det_gram(&v), Some(&BigInt::from(25)));
    }

    #[test]
    fn doubled_handle_fixture_is_embeddable() {
        // kernel ⟨2a1 - a2, b2⟩ has a2·b2 = 1
        let v = decide(&map(u(6), &[X, Y, [2, 0, 0], O, Z]));
        assert!(v.embeddable);
        assert_eq!(det_gram(&v), Some(&BigInt::one()));
    }

    #[test]
    fn isotropic_kernel_loses_mod2_class() {
        let v = decide(&map(u(6), &[X, Y, X, [0, -1, 0], Z]));
        assert_eq!(det_gram(&v), Some(&BigInt::zero()));
        assert!(!v.condition("mod2_class_nonzero").unwrap().holds);
        assert_eq!(v.failed(), vec![3, 5]);
    }

    #[test]
    fn m_caveat_is_reported() {
        let v = decide(&map(u(6), &[X, Y, [0, 0, 2], X, Z]));
        assert!(v.notes.contains(&M_CAVEAT_NOTE.to_string()));
        assert!(v.embeddable);
    }

    #[test]
    fn crosscap_input_agrees() {
        let cross = IntMatrix::from_columns(
            3,
            &[int_vec(&[1, 0, 1]), int_vec(&[0, 0, -1]), int_vec(&[0, 1, 1]), int_vec(&[-1, -1, -1])],
        )
        .unwrap();
        let f = TorusMap::new(u(4), cross, BasisTag::Crosscap).unwrap();
        assert!(decide(&f).embeddable);
    }

    #[test]
    fn disjoint_pairs() {
        assert_eq!(disjoint_pair_solutions(false, false, false).len(), 8);
        for code in 1u8..8 {
            let t = [code & 1 == 1, code & 2 == 2, code & 4 == 4];
            let sols = disjoint_pair_solutions(t[0], t[1], t[2]);
            assert_eq!(sols, vec![[false; 3], t], "{t:?}");
        }
    }
}
