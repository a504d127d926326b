//! Constructive embedding witnesses built by surgering away handles whose
//! classes die in the 3-torus.
//!
//! Each [`ReductionStep`] records a unimodular change of surface basis `P`
//! whose first two columns are the surgered pair. In the new basis the map
//! reads `[f(α), f(β), rest…] = M·P`; dropping the pair leaves a map on a
//! surface of lower genus with the same standard form. Replaying the trace
//! backwards, `M = [f(α), f(β), rest…]·P⁻¹`, reconstructs the input.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::decide::{decide, Verdict};
use crate::error::{Error, Result};
use crate::exactlin::{
    block_diagonal, complete_family, is_primitive, isotropic_partners,
    kernel_basis, skew_gram, skew_normal_form, standard_symplectic, unimodular_inverse, IntMatrix,
    IntVector, SkewForm,
};
use crate::invariants::{omega, omega_mod2, OmegaClass, TorusMap};
use crate::surfaces::SurfaceModel;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Primitive class in the kernel, in the basis current at this step.
    pub kernel_vector: IntVector,
    /// Class pairing to 1 with `kernel_vector`.
    pub partner_vector: IntVector,
    /// Image of the partner: the loop the cut-open handle goes around.
    pub arc_class: IntVector,
    /// Columns express the new basis in the basis current at this step.
    pub basis_change: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandlePair {
    pub alpha: IntVector,
    pub beta: IntVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessShape {
    SphereWithTubes {
        arc_classes: Vec<IntVector>,
    },
    TorusWithHandles {
        torus_image: [IntVector; 2],
        arc_classes: Vec<IntVector>,
    },
    NonorientableStandard {
        torus_image: [IntVector; 2],
        cross_tube_class: IntVector,
        handle_pairs: Vec<HandlePair>,
    },
}

impl WitnessShape {
    pub fn name(&self) -> &'static str {
        match self {
            WitnessShape::SphereWithTubes { .. } => "SphereWithTubes",
            WitnessShape::TorusWithHandles { .. } => "TorusWithHandles",
            WitnessShape::NonorientableStandard { .. } => "NonorientableStandard",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingWitness {
    pub surface: SurfaceModel,
    pub shape: WitnessShape,
    pub trace: Vec<ReductionStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildOutcome {
    Embeddable(EmbeddingWitness),
    NotEmbeddable(Box<Verdict>),
}

impl BuildOutcome {
    pub fn witness(&self) -> Option<&EmbeddingWitness> {
        match self {
            BuildOutcome::Embeddable(w) => Some(w),
            BuildOutcome::NotEmbeddable(_) => None,
        }
    }
}

fn zero_vec(n: usize) -> IntVector {
    vec![BigInt::zero(); n]
}

fn unit_vec(n: usize, k: usize) -> IntVector {
    let mut v = zero_vec(n);
    v[k] = BigInt::one();
    v
}

/// Surgers away handles on an orientable surface until the map is injective
/// on `H₁`. The terminal map has genus 1 when `ω ≠ 0` and genus 0 otherwise.
///
/// The surgered classes form a maximal isotropic family in the kernel, read
/// off its skew normal form; the first step carries the whole change of
/// basis and later steps are identities.
pub fn reduce_orientable(f: &TorusMap) -> Result<(Vec<ReductionStep>, TorusMap)> {
    if !f.surface().is_orientable() {
        return Err(Error::ExpectedOrientable);
    }
    let m = f.matrix();
    let g = f.surface().genus() as usize;
    let n = 2 * g;
    let form = SkewForm::standard(g);
    let kernel = kernel_basis(m);
    if kernel.is_empty() {
        return Ok((Vec::new(), f.clone()));
    }
    let normal = skew_normal_form(&skew_gram(&form, &kernel)?)?;
    let frame = (&IntMatrix::from_columns(n, &kernel)? * &normal.transform).column_vectors();
    let s = normal.blocks.len();
    let isotropic: Vec<IntVector> =
        frame.iter().take(2 * s).step_by(2).chain(&frame[2 * s..]).cloned().collect();
    let partners = isotropic_partners(&isotropic, &form)?;
    let pairs: Vec<(IntVector, IntVector)> = isotropic.into_iter().zip(partners).collect();
    let p = complete_family(&pairs, &form)?;

    let mut current = m.checked_mul(&p)?;
    let mut trace = Vec::new();
    for k in 0..pairs.len() {
        let dim = n - 2 * k;
        let basis_change = if k == 0 { p.clone() } else { IntMatrix::identity(dim) };
        trace.push(ReductionStep {
            kernel_vector: basis_change.column(0),
            partner_vector: basis_change.column(1),
            arc_class: current.column(1),
            basis_change,
        });
        current = current.select_columns(2..dim);
    }
    let terminal = TorusMap::from_standard(SurfaceModel::orientable((g - pairs.len()) as u32), current)?;
    Ok((trace, terminal))
}

/// Surgers away hyperbolic pairs of the kernel pairing on `U_h`, `h` even,
/// until `h = 4`. Requires a unimodular kernel pairing.
///
/// A symplectic basis of the whole kernel is found at once, so the first
/// step carries the full change of basis and later steps are identities.
fn reduce_nonorientable(f: &TorusMap) -> Result<(Vec<ReductionStep>, IntMatrix)> {
    let m = f.matrix();
    let g = f.surface().handle_count();
    if g <= 1 {
        return Ok((Vec::new(), m.clone()));
    }
    let n = 2 * g + 1;
    let kernel = kernel_basis(m);
    let gram = skew_gram(&extended_form(g)?, &kernel)?;
    let normal = skew_normal_form(&gram)?;
    if 2 * normal.blocks.len() != kernel.len() || !normal.blocks.iter().all(One::is_one) {
        return Err(Error::NotUnimodular);
    }
    let frame = (&IntMatrix::from_columns(n, &kernel)? * &normal.transform).column_vectors();

    // complete on the a,b-span; m is radical, so its coefficients ride along
    let head = |v: &IntVector| v[..n - 1].to_vec();
    let pairs: Vec<(IntVector, IntVector)> =
        frame.chunks(2).map(|p| (head(&p[0]), head(&p[1]))).collect();
    let c = complete_family(&pairs, &SkewForm::standard(g))?;
    let mut columns = frame.clone();
    for mut r in c.column_vectors().into_iter().skip(frame.len()) {
        r.push(BigInt::zero());
        columns.push(r);
    }
    columns.push(unit_vec(n, n - 1));
    let p = IntMatrix::from_columns(n, &columns)?;

    let mut current = m.checked_mul(&p)?;
    let mut trace = Vec::new();
    for k in 0..g - 1 {
        let dim = n - 2 * k;
        let basis_change = if k == 0 { p.clone() } else { IntMatrix::identity(dim) };
        trace.push(ReductionStep {
            kernel_vector: basis_change.column(0),
            partner_vector: basis_change.column(1),
            arc_class: current.column(1),
            basis_change,
        });
        current = current.select_columns(2..dim);
    }
    Ok((trace, current))
}

/// `blockdiag(J_g, 0)`: the pairing on `(a₁, b₁, …, a_g, b_g, m)`.
fn extended_form(g: usize) -> Result<SkewForm> {
    SkewForm::new(block_diagonal(&[standard_symplectic(g), IntMatrix::zeros(1, 1)]))
}

pub fn build_witness(f: &TorusMap) -> Result<BuildOutcome> {
    let verdict = decide(f);
    if !verdict.embeddable {
        return Ok(BuildOutcome::NotEmbeddable(Box::new(verdict)));
    }
    let surface = f.surface().clone();
    let witness = if surface.is_orientable() {
        let (trace, terminal) = reduce_orientable(f)?;
        let arc_classes: Vec<IntVector> = trace.iter().map(|s| s.arc_class.clone()).collect();
        let shape = match terminal.surface().genus() {
            0 => WitnessShape::SphereWithTubes { arc_classes },
            _ => {
                let t = terminal.matrix();
                WitnessShape::TorusWithHandles {
                    torus_image: [t.column(0), t.column(1)],
                    arc_classes,
                }
            }
        };
        EmbeddingWitness { surface, shape, trace }
    } else {
        let (trace, base) = reduce_nonorientable(f)?;
        let handle_pairs = trace
            .iter()
            .map(|s| HandlePair { alpha: s.kernel_vector.clone(), beta: s.partner_vector.clone() })
            .collect();
        let shape = WitnessShape::NonorientableStandard {
            torus_image: [base.column(0), base.column(1)],
            cross_tube_class: base.column(2),
            handle_pairs,
        };
        EmbeddingWitness { surface, shape, trace }
    };
    Ok(BuildOutcome::Embeddable(witness))
}

/// Checks a witness against a map by replaying it. `Ok(false)` means the
/// witness is well formed but wrong; `Err` means it has the wrong shape for
/// the surface.
pub fn verify_witness(w: &EmbeddingWitness, f: &TorusMap) -> Result<bool> {
    if &w.surface != f.surface() {
        return Err(Error::MalformedWitness(format!(
            "witness is for {}, map is on {}",
            w.surface,
            f.surface()
        )));
    }
    let surface = &w.surface;
    let g = surface.genus() as usize;
    let (expected_steps, terminal) = match (&w.shape, surface.is_orientable()) {
        (WitnessShape::SphereWithTubes { arc_classes }, true) => {
            check_count("arc classes", arc_classes.len(), g)?;
            if !arc_classes.iter().zip(&w.trace).all(|(a, s)| a == &s.arc_class) {
                return Ok(false);
            }
            (g, IntMatrix::zeros(3, 0))
        }
        (WitnessShape::TorusWithHandles { torus_image, arc_classes }, true) => {
            if g == 0 {
                return Err(Error::MalformedWitness("a sphere has no torus part".into()));
            }
            check_count("arc classes", arc_classes.len(), g - 1)?;
            if !arc_classes.iter().zip(&w.trace).all(|(a, s)| a == &s.arc_class) {
                return Ok(false);
            }
            (g - 1, IntMatrix::from_columns(3, torus_image)?)
        }
        (
            WitnessShape::NonorientableStandard { torus_image, cross_tube_class, handle_pairs },
            false,
        ) => {
            if g % 2 == 1 || g < 4 {
                return Err(Error::MalformedWitness(format!(
                    "no standard nonorientable witness exists for {surface}"
                )));
            }
            check_count("handle pairs", handle_pairs.len(), (g - 4) / 2)?;
            let pairs_match = handle_pairs
                .iter()
                .zip(&w.trace)
                .all(|(p, s)| p.alpha == s.kernel_vector && p.beta == s.partner_vector);
            if !pairs_match {
                return Ok(false);
            }
            let mut cols = torus_image.to_vec();
            cols.push(cross_tube_class.clone());
            ((g - 4) / 2, IntMatrix::from_columns(3, &cols)?)
        }
        (shape, _) => {
            return Err(Error::MalformedWitness(format!(
                "{} does not describe {surface}",
                shape.name()
            )))
        }
    };
    check_count("reduction steps", w.trace.len(), expected_steps)?;
    if terminal.rows() != 3 {
        return Err(Error::MalformedWitness("image vectors must lie in Z³".into()));
    }

    // replay backwards, keeping every intermediate matrix
    let orientable = surface.is_orientable();
    let mut matrices = vec![terminal.clone()];
    let mut current = terminal.clone();
    for step in w.trace.iter().rev() {
        let n = current.cols() + 2;
        let p = &step.basis_change;
        if p.rows() != n || !p.is_square() {
            return Err(Error::MalformedWitness(format!(
                "basis change of size {}x{} where {n}x{n} is needed",
                p.rows(),
                p.cols()
            )));
        }
        let Some(p_inv) = unimodular_inverse(p) else { return Ok(false) };
        let mut cols = vec![zero_vec(3), step.arc_class.clone()];
        cols.extend(current.column_vectors());
        current = IntMatrix::from_columns(3, &cols)?.checked_mul(&p_inv)?;
        matrices.push(current.clone());
    }
    if &current != f.matrix() {
        return Ok(false);
    }
    matrices.reverse();

    for (step, before) in w.trace.iter().zip(&matrices) {
        let n = before.cols();
        let form = if orientable { SkewForm::standard(n / 2) } else { extended_form(n / 2)? };
        let p = &step.basis_change;
        let side_conditions = p.column(0) == step.kernel_vector
            && p.column(1) == step.partner_vector
            && is_primitive(&step.kernel_vector)
            && before.mul_vec(&step.kernel_vector)?.iter().all(Zero::is_zero)
            && before.mul_vec(&step.partner_vector)? == step.arc_class
            && form.pair(&step.kernel_vector, &step.partner_vector).is_one()
            && &p.transpose().checked_mul(form.gram())?.checked_mul(p)? == form.gram()
            && (orientable
                || (step.arc_class.iter().all(Zero::is_zero) && p.column(n - 1) == unit_vec(n, n - 1)));
        if !side_conditions {
            return Ok(false);
        }
    }

    let shape_ok = match &w.shape {
        WitnessShape::SphereWithTubes { .. } => omega(f)?.is_zero(),
        WitnessShape::TorusWithHandles { torus_image: [p, q], .. } => {
            let wedge = OmegaClass::wedge(p, q);
            is_primitive(p) && is_primitive(q) && wedge.is_primitive() && wedge == omega(f)?
        }
        WitnessShape::NonorientableStandard { torus_image: [p, q], .. } => {
            let wedge = OmegaClass::wedge(p, q);
            let parity = wedge.as_array().map(|x| !(x % 2u8).is_zero());
            let v = decide(f);
            is_primitive(p)
                && is_primitive(q)
                && omega_mod2(f)? == parity
                && v.condition("w1_pullback").is_some_and(|c| c.holds)
                && v.condition("surjective").is_some_and(|c| c.holds)
        }
    };
    Ok(shape_ok)
}

fn check_count(what: &str, found: usize, expected: usize) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::MalformedWitness(format!("{found} {what}, expected {expected}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;

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

    fn witness(f: &TorusMap) -> EmbeddingWitness {
        build_witness(f).unwrap().witness().expect("embeddable").clone()
    }

    #[test]
    fn subtorus_has_empty_trace() {
        let f = map(SurfaceModel::orientable(1), &[X, Y]);
        let (trace, terminal) = reduce_orientable(&f).unwrap();
        assert!(trace.is_empty());
        assert_eq!(terminal, f);
        let w = witness(&f);
        assert_eq!(
            w.shape,
            WitnessShape::TorusWithHandles { torus_image: [int_vec(&X), int_vec(&Y)], arc_classes: vec![] }
        );
        assert!(verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn genus_two_reduces_to_subtorus() {
        let f = map(SurfaceModel::orientable(2), &[X, Y, O, O]);
        let (trace, terminal) = reduce_orientable(&f).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].arc_class, int_vec(&O));
        assert_eq!(terminal.surface().genus(), 1);
        assert!(verify_witness(&witness(&f), &f).unwrap());
    }

    #[test]
    fn zero_torus_map_reduces_to_sphere() {
        let f = map(SurfaceModel::orientable(1), &[O, O]);
        let (trace, terminal) = reduce_orientable(&f).unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(terminal.surface().genus(), 0);
    }

    #[test]
    fn zero_map_gives_sphere_with_zero_tubes() {
        let f = map(SurfaceModel::orientable(3), &[O; 6]);
        let w = witness(&f);
        assert_eq!(w.shape, WitnessShape::SphereWithTubes { arc_classes: vec![int_vec(&O); 3] });
        assert!(verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn sphere_witness() {
        let f = map(SurfaceModel::orientable(0), &[]);
        let w = witness(&f);
        assert!(w.trace.is_empty());
        assert!(verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn nullhomologous_arcs_are_recorded() {
        let f = map(SurfaceModel::orientable(2), &[X, [2, 0, 0], Y, [0, -3, 0]]);
        let w = witness(&f);
        assert_eq!(w.shape.name(), "SphereWithTubes");
        assert_eq!(w.trace.len(), 2);
        assert!(verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn u4_base_case() {
        let f = map(u(4), &[X, Y, Z]);
        let w = witness(&f);
        assert_eq!(
            w.shape,
            WitnessShape::NonorientableStandard {
                torus_image: [int_vec(&X), int_vec(&Y)],
                cross_tube_class: int_vec(&Z),
                handle_pairs: vec![],
            }
        );
        assert!(verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn u6_with_one_handle_pair() {
        let f = map(u(6), &[X, Y, [0, 0, 2], X, Z]);
        let w = witness(&f);
        let WitnessShape::NonorientableStandard { handle_pairs, .. } = &w.shape else { panic!() };
        assert_eq!(handle_pairs.len(), 1);
        let form = extended_form(2).unwrap();
        assert!(form.pair(&handle_pairs[0].alpha, &handle_pairs[0].beta).is_one());
        assert!(verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn not_embeddable_returns_verdict() {
        let f = map(SurfaceModel::orientable(1), &[[2, 0, 0], Y]);
        match build_witness(&f).unwrap() {
            BuildOutcome::NotEmbeddable(v) => assert!(!v.embeddable),
            BuildOutcome::Embeddable(_) => panic!("nonprimitive class accepted"),
        }
    }

    #[test]
    fn perturbed_arc_class_is_rejected() {
        let f = map(SurfaceModel::orientable(2), &[X, Y, O, [1, 1, 0]]);
        let mut w = witness(&f);
        assert!(verify_witness(&w, &f).unwrap());
        let WitnessShape::TorusWithHandles { arc_classes, .. } = &mut w.shape else { panic!() };
        arc_classes[0][0] += 1;
        w.trace[0].arc_class[0] += 1;
        assert!(!verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn doubled_torus_image_is_rejected() {
        let f = map(SurfaceModel::orientable(1), &[X, Y]);
        let mut w = witness(&f);
        let WitnessShape::TorusWithHandles { torus_image, .. } = &mut w.shape else { panic!() };
        for v in torus_image.iter_mut() {
            for x in v.iter_mut() {
                *x *= 2;
            }
        }
        assert!(!verify_witness(&w, &f).unwrap());
    }

    #[test]
    fn high_genus_witnesses_stay_small() {
        use crate::sampling::random_embeddable_map;
        use rand::SeedableRng;
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in [SurfaceModel::orientable(24), u(40)] {
            for _ in 0..3 {
                let f = random_embeddable_map(&mut rng, &s, 3).unwrap();
                let w = build_witness(&f).unwrap().witness().cloned().unwrap();
                assert!(verify_witness(&w, &f).unwrap());
                let bits = w.trace[0].basis_change.row_vectors().iter().flatten().map(|x| x.bits()).max();
                assert!(bits.unwrap() < 64, "{s}: {bits:?} bits");
            }
        }
    }

    #[test]
    fn wrong_counts_are_malformed() {
        let f = map(SurfaceModel::orientable(3), &[O; 6]);
        let mut w = witness(&f);
        let WitnessShape::SphereWithTubes { arc_classes } = &mut w.shape else { panic!() };
        arc_classes.pop();
        assert!(matches!(verify_witness(&w, &f), Err(Error::MalformedWitness(_))));

        let g = map(SurfaceModel::orientable(2), &[O; 4]);
        assert!(matches!(verify_witness(&witness(&f), &g), Err(Error::MalformedWitness(_))));
    }
}
