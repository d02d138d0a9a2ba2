use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime; only prime fields are supported")]
    NonPrimeModulus(u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("size cap exceeded: {what} has {projected} elements, cap is {cap}")]
    SizeCapExceeded {
        what: String,
        projected: BigInt,
        cap: usize,
    },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("eigenvalues theta_{i} and theta_{j} coincide")]
    EigenvalueCollision { i: usize, j: usize },

    #[error("quadruple (r,t,d,e) = {0:?} violates the T-module parameter conditions: {1}")]
    InvalidQuadruple((i64, i64, i64, i64), String),

    #[error("type (alpha,beta,rho) = {0:?} violates the H-module type condition")]
    InvalidType((i64, i64, i64)),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
