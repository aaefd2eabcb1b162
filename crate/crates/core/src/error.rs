use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0} vs {1} variables")]
    DimensionMismatch(usize, usize),
    #[error("index {index} out of range (valid: {lo}..={hi})")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("slot variables must be distinct, got x{0} twice")]
    SameVariable(usize),
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("input is not symmetric in the two slots")]
    NotSymmetric,
    #[error("zero polynomial not allowed here")]
    ZeroInput,
    #[error("T - Q0 is not divisible by (u - v)")]
    InvalidInvariants,
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("indices {0} and {1} must differ by at least 2")]
    NotDistant(usize, usize),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("braid relations fail: {0}")]
    BraidFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
