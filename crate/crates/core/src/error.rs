use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("malformed integer `{0}`")]
    BadInteger(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("usage error: {0}")]
    Usage(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("integrality violated: {0}")]
    Integrality(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("verification failed at stage `{stage}`: {detail}")]
    Verification { stage: String, detail: String },
}

pub type Result<T, E = AlgebraError> = core::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Usage(msg.into())
}
