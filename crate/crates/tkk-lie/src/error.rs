use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TkkError {
    /// A commutator of inner derivations left their span.
    #[error("degree-zero part is not closed under the bracket: {0}")]
    ClosureFailure(String),
    /// An element could not be written in the graded basis.
    #[error("element is not representable in the graded basis: {0}")]
    NotRepresentable(String),
    /// The operation needs matching plus and minus sides.
    #[error("unsupported: {0}")]
    Unsupported(String),
}
