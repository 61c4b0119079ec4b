use thiserror::Error;

/// Errors raised by the counting engines and the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the domain of the operation (zero layer size, empty horizon, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {lhs}x{lhs} vs {rhs}x{rhs}")]
    Dimension { lhs: usize, rhs: usize },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    /// A closed form or identity disagreed with the value it is supposed to reproduce.
    #[error("validation failed for {check}: expected {expected}, got {actual}")]
    Validation {
        check: String,
        expected: String,
        actual: String,
    },

    /// An exactness invariant broke (odd numerator before halving, non-integral coefficient).
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("graph has {vertices} vertices, above the enumeration cap of {cap}")]
    OracleCap { vertices: usize, cap: usize },

    #[error("malformed graph: {0}")]
    Graph(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn validation(
        check: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Error::Validation {
            check: check.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}
