use thiserror::Error;

/// Errors surfaced by the combinatorics engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("element is not a member of the {0} group")]
    FlavorMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("enumeration window exceeded: {0}")]
    WindowExceeded(String),

    #[error("slope hypothesis violated at component {component}, index {index}")]
    HypothesisViolation { component: usize, index: usize },

    #[error("tuple component {component} is not permissible for the given datum")]
    NotPermissible { component: usize },

    #[error("operation not supported for this flavor: {0}")]
    Unsupported(&'static str),

    #[error("element does not belong to the given index set")]
    NotInIndexSet,

    #[error("internal invariant failure: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
