use thiserror::Error;

use crate::group_algebra::GroupTag;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NcgError {
    #[error("group tag mismatch: {left} vs {right}")]
    TagMismatch { left: GroupTag, right: GroupTag },

    #[error("element is not in the domain of {what}")]
    OutsideDomain { what: String },

    #[error("window too small: need radius {needed}, have {have}")]
    WindowTooSmall { needed: i64, have: i64 },

    #[error("window kind mismatch: {0}")]
    WindowMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("not a projection: {0}")]
    NotAProjection(String),

    #[error("not a unitary: {0}")]
    NotUnitary(String),

    #[error("pairing did not stabilize: values {values:?}")]
    NotStabilized { values: Vec<String> },

    #[error("pairing value {0} is not an integer")]
    NonIntegral(String),

    #[error("module `{module}` has parity {parity}, operation requires {required}")]
    WrongParity { module: String, parity: String, required: String },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, NcgError>;
