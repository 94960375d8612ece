use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("context mismatch: expected {expected}, found {found}")]
    ContextMismatch { expected: String, found: String },

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("factorization of g^{n}_{{{i},{j}}} failed: {reason}")]
    Factorization {
        n: usize,
        i: usize,
        j: usize,
        reason: String,
    },

    #[error("structural error: {0}")]
    Structural(String),

    #[error("no lifting exists for degree-{degree} cocycle at step {step} (generator {generator})")]
    NoLift {
        degree: usize,
        step: usize,
        generator: String,
    },

    #[error("(T={t}, n={n}) is outside the computation budget: {reason}")]
    OutOfBudget { t: u32, n: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
