use ring_core::Scalar;
use thiserror::Error;

/// Errors raised by exact linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    /// A nonzero residue admits no unit pivot; over a local ring this means
    /// the span in question is not a free direct summand.
    #[error("no unit pivot available; span is not a free direct summand")]
    NoUnitPivot,
    /// Inversion of a singular matrix; carries the exact determinant.
    #[error("matrix is not invertible (det = {det})")]
    NonInvertible { det: Box<Scalar> },
    /// A bilinear or sesquilinear form failed validation.
    #[error("invalid form: {0}")]
    InvalidForm(String),
    /// A search (e.g. for a common complement) exhausted its candidates.
    #[error("search failed: {0}")]
    NotFound(String),
}
