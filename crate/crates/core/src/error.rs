use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("invalid algebraic input: {0}")]
    InvalidAlgebraic(String),

    #[error("field too large: degree {degree} exceeds cap {cap}")]
    FieldTooLarge { degree: usize, cap: usize },

    #[error("context mismatch: operands belong to different number fields")]
    ContextMismatch,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unresolved: {0}")]
    Unresolved(String),

    #[error("hypothesis violated, bound inapplicable: {0}")]
    HypothesisViolated(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn unresolved(msg: impl Into<String>) -> Self {
        Error::Unresolved(msg.into())
    }
}
