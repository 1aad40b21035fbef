//! Jordan-theoretic structures over exact rings: a catalogue of matrix,
//! spin and rectangular families with their commutative, triple and
//! quadratic products, plus exact checkers for the defining laws.
//!
//! Elements are dense matrices from `linalg-exact`; nothing here is ever
//! evaluated in floating point.  Checkers draw seeded samples and report
//! pass/fail tallies with replayable witnesses.

mod checks;
mod error;
mod family;
mod inner_ideal;
mod invertible;
mod minkowski;
mod products;

pub use checks::{
    check_commutator_model, check_fundamental, check_jordan_identity, check_lie_triple,
    check_triple_exchange, check_triple_symmetry,
};
pub use error::JordanError;
pub use family::{Family, TripleMutation, TripleSystem};
pub use inner_ideal::check_inner_ideal;
pub use invertible::{is_invertible_element, isotope_product, isotope_unit};
pub use minkowski::check_herm_spin;
