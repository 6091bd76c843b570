use thiserror::Error;

pub type Result<T, E = NilError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilError {
    #[error("index {index} out of range for {what} with n = {n}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        n: usize,
    },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("integer overflow in exponent arithmetic")]
    Overflow,
    #[error("element has infinite order")]
    InfiniteOrder,
    #[error("{0}")]
    Constraint(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

impl NilError {
    pub(crate) fn constraint(msg: impl Into<String>) -> Self {
        NilError::Constraint(msg.into())
    }
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(NilError::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(NilError::Overflow)
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(NilError::Overflow)
}
