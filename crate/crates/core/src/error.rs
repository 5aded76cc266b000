use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial is not symmetric modulo p1")]
    NotSymmetric,

    #[error("interpolation inconsistent: coefficient of {partition} at n = {n}")]
    InterpolationInconsistent { partition: String, n: u64 },

    #[error("jet is not invertible: zero constant term")]
    NotInvertible,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
