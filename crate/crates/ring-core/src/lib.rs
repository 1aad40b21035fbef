//! Exact scalar arithmetic over a small catalogue of commutative rings.
//!
//! The catalogue covers the rationals, the Gaussian rationals, prime fields
//! `Z/p` with `p >= 5`, and dual-number extensions `K[e]` with `e^2 = 0`
//! (nesting allowed).  Every ring in the catalogue keeps 2 and 3 invertible,
//! so expressions involving halves and thirds stay exact.  No floating point
//! appears anywhere: rationals are kept in lowest terms with positive
//! denominator, residues are reduced representatives, and dual numbers store
//! exact base and epsilon parts.
//!
//! A [`RingDescriptor`] names a ring together with an optional involution
//! (complex conjugation, available whenever the Gaussian rationals appear in
//! the tower).  A [`Scalar`] is a value tagged with its descriptor; mixing
//! scalars from different descriptors is a programming error and panics.

mod descriptor;
mod error;
mod report;
mod sample;
mod scalar;

pub use descriptor::{Involution, RingDescriptor, RingKind};
pub use error::RingError;
pub use report::CheckOutcome;
pub use sample::{derive_seed, sample_scalar, sample_nonzero, sample_unit, seeded_rng};
pub use scalar::Scalar;
