use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid genus {genus} for {kind} surface")]
    InvalidGenus { kind: &'static str, genus: i64 },

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("vector {0} is not primitive")]
    NotPrimitive(String),

    #[error("form is not unimodular")]
    NotUnimodular,

    #[error("nonorientable genus {0} is odd: no integral carrier form exists")]
    OddGenus(u32),

    #[error("crosscap basis requires even genus, got {0}")]
    OddCrosscapConversion(u32),

    #[error("torsion generator must map to zero: crosscap columns sum to {0}")]
    TorsionImage(String),

    #[error("operation requires an orientable surface")]
    ExpectedOrientable,

    #[error("operation requires a nonorientable surface")]
    ExpectedNonorientable,

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("invalid job document: {0}")]
    InvalidJob(String),
}

pub type Result<T> = std::result::Result<T, Error>;
