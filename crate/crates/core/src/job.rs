//! Job documents: a surface, a basis convention and a matrix, as JSON.
//!
//! ```json
//! {
//!   "surface": {"type": "nonorientable", "genus": 4},
//!   "basis": "standard",
//!   "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
//!   "options": {"report": "full", "witness": true}
//! }
//! ```
//!
//! `basis` and `options` are optional. Entries may be JSON integers of any
//! size or decimal strings.

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::{IntMatrix, IntVector};
use crate::invariants::{BasisTag, TorusMap};
use crate::surfaces::{SurfaceKind, SurfaceModel};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportMode {
    #[default]
    Verdict,
    Full,
}

impl ReportMode {
    pub fn parse(s: &str) -> Option<ReportMode> {
        match s {
            "verdict" => Some(ReportMode::Verdict),
            "full" => Some(ReportMode::Full),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct JobOptions {
    pub report: ReportMode,
    pub witness: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobDocument {
    pub surface: SurfaceModel,
    pub basis: BasisTag,
    pub matrix: IntMatrix,
    pub options: JobOptions,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidJob(msg.into())
}

impl JobDocument {
    pub fn parse(text: &str) -> Result<JobDocument> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<JobDocument> {
        let doc = value.as_object().ok_or_else(|| invalid("job must be a JSON object"))?;
        check_keys(doc, &["surface", "basis", "matrix", "options"], "job")?;

        let surface = doc.get("surface").ok_or_else(|| invalid("missing \"surface\""))?;
        let surface = surface
            .as_object()
            .ok_or_else(|| invalid("\"surface\" must be an object"))?;
        check_keys(surface, &["type", "genus"], "surface")?;
        let kind = match surface.get("type").and_then(Value::as_str) {
            Some("orientable") => SurfaceKind::Orientable,
            Some("nonorientable") => SurfaceKind::Nonorientable,
            _ => {
                return Err(invalid(
                    "surface.type must be \"orientable\" or \"nonorientable\"",
                ))
            }
        };
        let genus = surface
            .get("genus")
            .and_then(Value::as_i64)
            .ok_or_else(|| invalid("surface.genus must be an integer"))?;
        let surface = SurfaceModel::new(kind, genus).map_err(|e| invalid(e.to_string()))?;

        let basis = match doc.get("basis").map(|b| b.as_str()) {
            None | Some(Some("standard")) => BasisTag::Standard,
            Some(Some("crosscap")) => BasisTag::Crosscap,
            _ => return Err(invalid("basis must be \"standard\" or \"crosscap\"")),
        };

        let matrix = parse_matrix(doc.get("matrix").ok_or_else(|| invalid("missing \"matrix\""))?)?;

        let mut options = JobOptions::default();
        if let Some(opts) = doc.get("options") {
            let opts = opts.as_object().ok_or_else(|| invalid("\"options\" must be an object"))?;
            check_keys(opts, &["report", "witness"], "options")?;
            if let Some(r) = opts.get("report") {
                options.report = r
                    .as_str()
                    .and_then(ReportMode::parse)
                    .ok_or_else(|| invalid("options.report must be \"verdict\" or \"full\""))?;
            }
            if let Some(w) = opts.get("witness") {
                options.witness =
                    w.as_bool().ok_or_else(|| invalid("options.witness must be a boolean"))?;
            }
        }
        Ok(JobDocument { surface, basis, matrix, options })
    }

    /// Validates the matrix against the surface and converts it to the standard basis.
    pub fn to_map(&self) -> Result<TorusMap> {
        TorusMap::new(self.surface.clone(), self.matrix.clone(), self.basis)
    }
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(invalid(format!("unknown key {k:?} in {what}"))),
        None => Ok(()),
    }
}

fn parse_entry(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.as_str(),
        Value::String(s) => s.as_str(),
        _ => return Err(invalid(format!("matrix entry {v} is not an integer"))),
    };
    text.trim()
        .parse::<BigInt>()
        .map_err(|_| invalid(format!("matrix entry {v} is not an integer")))
}

fn parse_matrix(v: &Value) -> Result<IntMatrix> {
    let rows = v.as_array().ok_or_else(|| invalid("matrix must be an array of 3 rows"))?;
    if rows.len() != 3 {
        return Err(invalid(format!("matrix must have 3 rows (images in Z³), found {}", rows.len())));
    }
    let rows: Vec<IntVector> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| invalid("matrix rows must be arrays"))?
                .iter()
                .map(parse_entry)
                .collect()
        })
        .collect::<Result<_>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(invalid("matrix rows must have equal length"));
    }
    IntMatrix::from_rows(rows)
}
