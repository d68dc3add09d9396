//! Exact dense linear algebra over ℚ and 𝔽_p.
//!
//! Matrices act on coordinate columns. Tensor products of coordinate spaces
//! order their basis lexicographically with the left factor outer, which is
//! what [`Matrix::kron`] produces.

mod field;
mod matrix;
pub mod random;
mod reduce;
mod scalar;

pub use field::{FieldSpec, MAX_PRIME};
pub use matrix::Matrix;
pub use reduce::Decomposition;
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaError {
    #[error("field mismatch among entries")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no solution")]
    NoSolution,
    #[error("{0} is not an admissible prime")]
    NotPrime(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
}
