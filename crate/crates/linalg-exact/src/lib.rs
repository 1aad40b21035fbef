//! Exact dense linear algebra over the `ring-core` scalar catalogue.
//!
//! Everything here is elimination-based with explicit unit-pivot search, so
//! the same code path serves fields (rationals, Gaussian rationals, prime
//! fields) and local rings with zero divisors (dual numbers).  Over a local
//! ring a pivot must be a unit; when a nonzero residue admits no unit pivot
//! the operation reports [`LinalgError::NoUnitPivot`] instead of silently
//! dividing by a zero divisor.
//!
//! Column spans are canonicalised by a reduced column echelon form with unit
//! pivots: two matrices have the same column span exactly when their
//! canonical forms agree.  Row spans use the transposed convention.

mod complement;
mod det;
mod echelon;
mod error;
mod form;
mod matrix;
mod sample;

pub use complement::find_common_complement;
pub use det::{det, invert, is_invertible};
pub use echelon::{
    col_canon, coords_in_col_span, in_col_span, intersect_col_spans, kernel, rank, row_canon,
    row_echelon, sum_col_spans, subspace_equal, ColCanon, RowCanon, RowEchelon,
};
pub use error::LinalgError;
pub use form::{orth_complement, Form, FormSymmetry};
pub use matrix::Matrix;
pub use sample::{sample_full_col_rank, sample_invertible, sample_matrix, sample_unit_scalar};
