//! JSON reports. Key order is fixed; integers outside the 53-bit range that
//! JSON consumers handle exactly are written as decimal strings.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::decide::{Condition, Evidence, Verdict};
use crate::error::Result;
use crate::exactlin::IntMatrix;
use crate::invariants::{
    image_profile, kernel_data, omega, omega_mod2, w1_pullback_witness, ImageProfile, OmegaClass,
    TorusMap,
};
use crate::job::ReportMode;
use crate::witness::{EmbeddingWitness, WitnessShape};

const SAFE: i64 = (1 << 53) - 1;

pub fn int(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) if (-SAFE..=SAFE).contains(&v) => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn int_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix_rows(m: &IntMatrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| int_list(r)).collect())
}

fn bits(b: &[bool]) -> Value {
    Value::Array(b.iter().map(|&x| Value::from(u8::from(x))).collect())
}

fn omega_json(w: &OmegaClass) -> Value {
    json!({"x*y": int(&w.a), "y*z": int(&w.b), "x*z": int(&w.c)})
}

fn profile_json(p: &ImageProfile) -> Value {
    json!({
        "rank": p.rank,
        "invariant_factors": int_list(&p.invariant_factors),
        "is_summand": p.is_summand,
        "is_surjective": p.is_surjective,
    })
}

fn evidence_json(e: &Evidence) -> Value {
    match e {
        Evidence::Omega { omega, gcd } => json!({"omega": omega_json(omega), "gcd": int(gcd)}),
        Evidence::PrimitiveImage { omega, gcd, profile } => json!({
            "omega": omega_json(omega),
            "gcd": int(gcd),
            "image": profile_json(profile),
        }),
        Evidence::Genus { genus } => json!({"genus": genus}),
        Evidence::W1Pullback { witness } => json!({"witness": witness.map(|w| bits(&w))}),
        Evidence::Mod2Class { class } => json!({"class": bits(class)}),
        Evidence::Image { profile } => json!({"image": profile_json(profile)}),
        Evidence::KernelPairing { rank, det_gram, m_coefficients_nonzero } => json!({
            "kernel_rank": rank,
            "det_gram": int(det_gram),
            "m_coefficients_nonzero": m_coefficients_nonzero,
        }),
        Evidence::NotApplicable { reason } => json!({"not_applicable": reason}),
    }
}

fn condition_json(c: &Condition) -> Value {
    json!({
        "number": c.number,
        "id": c.id,
        "holds": c.holds,
        "applicable": c.applicable,
        "evidence": evidence_json(&c.evidence),
    })
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "embeddable": v.embeddable,
        "surface": {"type": v.surface.kind().as_str(), "genus": v.surface.genus()},
        "case": v.case.as_str(),
    })
}

/// Invariants recomputed directly from the map.
pub fn invariants_json(f: &TorusMap) -> Result<Value> {
    let mut out = Map::new();
    out.insert("labels".into(), json!(f.surface().labels()));
    out.insert("matrix".into(), matrix_rows(f.matrix()));
    if f.surface().is_orientable() {
        let w = omega(f)?;
        out.insert("omega".into(), omega_json(&w));
        out.insert("omega_gcd".into(), int(&w.gcd()));
    } else {
        out.insert("omega_mod2".into(), bits(&omega_mod2(f)?));
        out.insert("w1_witness".into(), json!(w1_pullback_witness(f)?.map(|w| bits(&w))));
    }
    out.insert("image".into(), profile_json(&image_profile(f)));
    if f.surface().w1_has_integral_lift() {
        let k = kernel_data(f)?;
        out.insert(
            "kernel".into(),
            json!({
                "rank": k.rank(),
                "basis": Value::Array(k.basis.iter().map(|v| int_list(v)).collect()),
                "gram": matrix_rows(&k.gram),
                "det_gram": int(&k.det_gram),
                "m_coefficients_nonzero": k.m_coefficients_nonzero,
            }),
        );
    } else {
        out.insert("kernel".into(), Value::Null);
    }
    Ok(Value::Object(out))
}

pub fn witness_json(w: &EmbeddingWitness) -> Value {
    let mut out = Map::new();
    out.insert("shape".into(), Value::from(w.shape.name()));
    match &w.shape {
        WitnessShape::SphereWithTubes { arc_classes } => {
            out.insert("arc_classes".into(), Value::Array(arc_classes.iter().map(|a| int_list(a)).collect()));
        }
        WitnessShape::TorusWithHandles { torus_image, arc_classes } => {
            out.insert("torus_image".into(), Value::Array(torus_image.iter().map(|a| int_list(a)).collect()));
            out.insert("arc_classes".into(), Value::Array(arc_classes.iter().map(|a| int_list(a)).collect()));
        }
        WitnessShape::NonorientableStandard { torus_image, cross_tube_class, handle_pairs } => {
            out.insert("torus_image".into(), Value::Array(torus_image.iter().map(|a| int_list(a)).collect()));
            out.insert("cross_tube_class".into(), int_list(cross_tube_class));
            out.insert(
                "handle_pairs".into(),
                Value::Array(
                    handle_pairs
                        .iter()
                        .map(|p| json!({"alpha": int_list(&p.alpha), "beta": int_list(&p.beta)}))
                        .collect(),
                ),
            );
        }
    }
    let trace = w
        .trace
        .iter()
        .map(|s| {
            json!({
                "kernel_vector": int_list(&s.kernel_vector),
                "partner_vector": int_list(&s.partner_vector),
                "arc_class": int_list(&s.arc_class),
                "basis_change": matrix_rows(&s.basis_change),
            })
        })
        .collect();
    out.insert("trace".into(), Value::Array(trace));
    Value::Object(out)
}

/// The full report document with keys `verdict`, `conditions`,
/// `invariants`, `witness`, `notes`.
pub fn report_json(
    f: &TorusMap,
    verdict: &Verdict,
    witness: Option<&EmbeddingWitness>,
    mode: ReportMode,
) -> Result<Value> {
    let invariants = match mode {
        ReportMode::Full => invariants_json(f)?,
        ReportMode::Verdict => Value::Null,
    };
    Ok(json!({
        "verdict": verdict_json(verdict),
        "conditions": Value::Array(verdict.conditions.iter().map(condition_json).collect()),
        "invariants": invariants,
        "witness": witness.map(witness_json),
        "notes": verdict.notes,
    }))
}
