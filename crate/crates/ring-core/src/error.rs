use thiserror::Error;

/// Errors raised by descriptor construction and scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    /// The requested modulus does not give a field with 2 and 3 invertible.
    #[error("{0}")]
    InvalidModulus(String),
    /// Conjugation was requested on a ring without a Gaussian layer.
    #[error("conjugation involution requires a Gaussian rational layer")]
    InvalidInvolution,
    /// Inversion of a non-unit.
    #[error("not a unit: {0}")]
    NotAUnit(String),
    /// A dual-number operation was applied to a scalar without an epsilon part.
    #[error("scalar ring {0} is not a dual-number ring")]
    NotDual(String),
    /// A ring name or scalar literal failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}
