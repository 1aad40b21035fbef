//! Three-graded Lie algebras built from Jordan triple systems.
//!
//! The construction glues two copies of a triple system around the span of
//! its inner derivations and expresses the whole bracket through exact
//! structure constants.  Everything here is finite and checked exhaustively:
//! antisymmetry and the Jacobi identity on all basis pairs and triples, the
//! grading, recovery of both triple products from double brackets, and the
//! grade-reversing swap on systems that admit one.

mod checks;
mod error;
mod lie;

pub use checks::{
    check_antisymmetry, check_grade_reversal, check_grading, check_jacobi, check_triple_recovery,
};
pub use error::TkkError;
pub use lie::{BracketMutation, GradedLie, LieElement};
