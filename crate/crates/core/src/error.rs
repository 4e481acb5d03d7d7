use thiserror::Error;

/// Errors raised anywhere in the decision pipeline.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("constant polynomial has no roots to factor")]
    ConstantPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("polynomial is reducible over Q: nontrivial factor {factor}")]
    Reducible { factor: String },

    #[error("both resultant inputs are zero")]
    BothZero,

    #[error("elements belong to different number fields")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("basis is not linearly independent")]
    DependentBasis,

    #[error("closure degree {degree} exceeds cap {cap} (partial tower degrees {tower:?})")]
    DegreeCap {
        cap: usize,
        degree: usize,
        tower: Vec<usize>,
    },

    #[error("root isolation failed to certify before the precision cap of 2^-{bits}")]
    PrecisionCap { bits: u64 },

    #[error("arrangement is not defined over k: missing {missing}")]
    NotDefinedOverK { missing: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("element is not a unit: {0}")]
    NotUnit(String),

    #[error("point lies on the arrangement: {0}")]
    PointOnArrangement(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal certification failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
