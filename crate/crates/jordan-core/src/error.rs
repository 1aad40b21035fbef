use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    /// Family string failed to parse or the family/ring pairing is invalid.
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    /// The requested operation does not exist for this family.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    /// Element inversion requested for a non-invertible element.
    #[error("element is not invertible")]
    NotInvertible,
}
