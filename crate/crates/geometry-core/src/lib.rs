//! Projective geometries of subspaces with exact arithmetic.
//!
//! A geometry pairs a catalogue shape (all subspaces of a fixed rank, or the
//! self-orthogonal ones for a form) with a base ring.  Points and co-points
//! are canonicalized column and row spans; a transversal point/co-point pair
//! determines an affine chart.  The central operation is the weighted
//! combination map: given two points, a co-point transversal to both, and a
//! ratio, it produces the affine combination in the chart the co-point cuts
//! out.  Everything else is built from it: chart addition, midpoints,
//! dilations, geodesic reflections against a polarity, and the two
//! structural laws the combination maps satisfy.
//!
//! Checks come in two flavours.  Sampled checks draw random configurations,
//! rejecting degenerate ones, and compare both sides of a law exactly.
//! Enumerated checks list every point of a small geometry over a prime field
//! and verify incidence properties exhaustively.

mod charts;
mod enumerate;
mod error;
mod geometry;
mod intrinsic;
mod laws;
mod nullsys;
mod polarity;
mod product;
mod tangent;

pub use charts::ProjectiveMap;
pub use enumerate::{
    check_covering, check_faithful_small, check_midpoint_injectivity, enumerate_copoints,
    enumerate_points, ENUM_CAP,
};
pub use error::GeomError;
pub use geometry::{ChartModel, Geometry, GeometryKind, GrasCoPoint, GrasPoint, PiMutation};
pub use intrinsic::{
    check_intrinsic_linearity, intrinsic_from_flag, member, sample_member, IntrinsicSubspace,
};
pub use laws::{check_pg1, check_pg2, check_rep_independence, find_common_chart};
pub use nullsys::{check_null_system, null_copoint};
pub use polarity::{check_symmetric_space, Polarity};
pub use product::{
    check_exchange, check_product_pg1, Element, ProductElement, ProductGeometry,
};
pub use tangent::{base_point, check_tangent, lift_copoint, lift_point};
