use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degenerate graph: {0}")]
    DegenerateGraph(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("tolerance unmet: {0}")]
    ToleranceUnmet(String),
    #[error("degenerate chain: {0}")]
    DegenerateChain(String),
    #[error("invalid scan window: {0}")]
    InvalidWindow(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
