//! The canonical null system of a square subspace geometry: each point is
//! sent to the co-point of functionals vanishing on it.  No point can be
//! observed by its own image, and the assignment commutes with every inner
//! dilation.

use linalg_exact::{kernel, sample_unit_scalar};
use rand::Rng;
use ring_core::CheckOutcome;

use crate::error::GeomError;
use crate::geometry::{Geometry, GeometryKind, GrasCoPoint, GrasPoint};
use crate::laws::sample_until;

/// The co-point annihilating a point; needs matching type and co-type.
pub fn null_copoint(geo: &Geometry, x: &GrasPoint) -> Result<GrasCoPoint, GeomError> {
    match geo.kind() {
        GeometryKind::Grassmann { dim_e, dim_f } if dim_e == dim_f => {}
        _ => {
            return Err(GeomError::Unsupported(
                "the annihilator pairing needs a square subspace geometry".into(),
            ))
        }
    }
    let ann = kernel(&x.rep().transpose())
        .map_err(|e| GeomError::NotFound(format!("no annihilator: {e}")))?;
    geo.copoint_from(&ann.transpose())
}

pub fn check_null_system<R: Rng>(
    geo: &Geometry,
    samples: usize,
    dilations: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = geo.sample_point(rng);
        let image = null_copoint(geo, &x)?;
        out.record(!geo.transversal(&x, &image), || {
            format!("a subspace complemented its own annihilator: x={x}")
        });
    }
    for _ in 0..dilations {
        let (g, x) = sample_until(|| {
            let o = geo.sample_point(rng);
            let a = geo.sample_copoint(rng);
            if !geo.transversal(&o, &a) {
                return None;
            }
            let r = sample_unit_scalar(geo.ring(), rng);
            let g = geo.inner_dilation(&o, &a, &r).ok()?;
            let x = geo.sample_point(rng);
            Some((g, x))
        })?;
        let moved_then_annihilated = null_copoint(geo, &g.apply_point(geo, &x)?)?;
        let annihilated_then_moved = g.apply_copoint(geo, &null_copoint(geo, &x)?)?;
        out.record(moved_then_annihilated == annihilated_then_moved, || {
            format!("annihilator does not commute with a dilation at x={x}")
        });
    }
    Ok(out)
}
