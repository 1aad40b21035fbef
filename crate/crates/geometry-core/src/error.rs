use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("the pair is not transversal")]
    NotTransversal,
    #[error("not a valid point: {0}")]
    InvalidPoint(String),
    #[error("sampling stayed degenerate after {0} attempts")]
    DegenerateSampling(usize),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("too large to enumerate (cap {0} points)")]
    TooLarge(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
