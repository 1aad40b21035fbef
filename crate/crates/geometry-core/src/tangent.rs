//! Scalar extension to the dual-number ring.  Lifted points carry an
//! infinitesimal direction in their epsilon part; projecting back to the
//! base ring is a ring map, so every structure map computed upstairs agrees
//! with its base computation downstairs.

use linalg_exact::sample_matrix;
use rand::Rng;
use ring_core::{sample_scalar, CheckOutcome, RingDescriptor, Scalar};

use crate::error::GeomError;
use crate::geometry::{Geometry, GeometryKind, GrasCoPoint, GrasPoint};
use crate::laws::{check_pg1, check_pg2, sample_until};

impl Geometry {
    /// The same geometry over the dual numbers of the current ring.
    pub fn tangent_extension(&self) -> Geometry {
        let ring = RingDescriptor::dual(self.ring());
        match *self.kind() {
            GeometryKind::Grassmann { dim_e, dim_f } => {
                Geometry::grassmann(dim_e, dim_f, &ring).expect("valid dims carry over")
            }
            GeometryKind::Lagrangian { n, model } => {
                Geometry::lagrangian(model, n, &ring).expect("involutions carry over")
            }
        }
    }
}

pub fn lift_point(ext: &Geometry, x: &GrasPoint) -> GrasPoint {
    ext.point_from(&x.rep().embed_dual())
        .expect("embedded representatives stay full rank")
}

pub fn lift_copoint(ext: &Geometry, a: &GrasCoPoint) -> GrasCoPoint {
    ext.copoint_from(&a.rep().embed_dual())
        .expect("embedded representatives stay full rank")
}

/// Constant part of a point over the dual numbers.
pub fn base_point(base: &Geometry, x: &GrasPoint) -> Result<GrasPoint, GeomError> {
    let (constant, _) = x
        .rep()
        .dual_parts()
        .map_err(|e| GeomError::Unsupported(format!("not a dual-ring point: {e}")))?;
    base.point_from(&constant)
}

fn perturb_point<R: Rng>(
    ext: &Geometry,
    lifted: &GrasPoint,
    rng: &mut R,
) -> Result<GrasPoint, GeomError> {
    let eps = Scalar::eps(ext.ring()).expect("extension ring has a nilpotent");
    let rep = lifted.rep();
    let noise = sample_matrix(ext.ring(), rep.rows(), rep.cols(), rng);
    ext.point_from(&rep.add(&noise.scale(&eps)))
}

fn perturb_copoint<R: Rng>(
    ext: &Geometry,
    lifted: &GrasCoPoint,
    rng: &mut R,
) -> Result<GrasCoPoint, GeomError> {
    let eps = Scalar::eps(ext.ring()).expect("extension ring has a nilpotent");
    let rep = lifted.rep();
    let noise = sample_matrix(ext.ring(), rep.rows(), rep.cols(), rng);
    ext.copoint_from(&rep.add(&noise.scale(&eps)))
}

/// Lift-project round trips, commutation of the constant-part projection
/// with the weighted combination under nilpotent perturbations, and the two
/// projective laws rerun over the extension.
pub fn check_tangent<R: Rng>(
    geo: &Geometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    if !matches!(geo.kind(), GeometryKind::Grassmann { .. }) {
        return Err(GeomError::Unsupported(
            "tangent checks run on plain subspace geometries".into(),
        ));
    }
    let ext = geo.tangent_extension();
    let eps = Scalar::eps(ext.ring()).expect("extension ring has a nilpotent");
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = geo.sample_point(rng);
        out.record(base_point(geo, &lift_point(&ext, &x))? == x, || {
            format!("lift then project moved x={x}")
        });
    }
    for _ in 0..samples {
        let (x, a, y, r) = sample_until(|| {
            let x = geo.sample_point(rng);
            let a = geo.sample_copoint(rng);
            let y = geo.sample_point(rng);
            (geo.transversal(&x, &a) && geo.transversal(&y, &a)).then(|| {
                let r = sample_scalar(geo.ring(), rng);
                (x, a, y, r)
            })
        })?;
        let ex = perturb_point(&ext, &lift_point(&ext, &x), rng)?;
        let ea = perturb_copoint(&ext, &lift_copoint(&ext, &a), rng)?;
        let ey = perturb_point(&ext, &lift_point(&ext, &y), rng)?;
        let er = r
            .embed_dual()
            .add(&sample_scalar(ext.ring(), rng).mul(&eps));
        let upstairs = ext.pi_r(&ex, &ea, &ey, &er)?;
        let downstairs = geo.pi_r(&x, &a, &y, &r)?;
        out.record(base_point(geo, &upstairs)? == downstairs, || {
            format!("constant part drifted at x={x} a={a} y={y} r={r}")
        });
    }
    let law_samples = samples.min(25).max(1);
    out.merge(check_pg1(&ext, law_samples, rng)?);
    out.merge(check_pg2(&ext, law_samples, rng)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::seeded_rng;

    #[test]
    fn tangent_geometry_carries_the_structure() {
        let q = RingDescriptor::rational();
        let g = Geometry::parse("gras:1x2", &q).unwrap();
        let mut rng = seeded_rng(404);
        let out = check_tangent(&g, 15, &mut rng).unwrap();
        assert!(out.is_pass(), "{:?}", out.witnesses);
    }

    #[test]
    fn perturbed_points_keep_their_base() {
        let q = RingDescriptor::rational();
        let g = Geometry::parse("gras:2x2", &q).unwrap();
        let ext = g.tangent_extension();
        assert_eq!(ext.ring().to_string(), "dual:Q");
        let mut rng = seeded_rng(9);
        let x = g.sample_point(&mut rng);
        let lifted = lift_point(&ext, &x);
        let moved = perturb_point(&ext, &lifted, &mut rng).unwrap();
        assert_eq!(base_point(&g, &moved).unwrap(), x);
    }

    #[test]
    fn lagrangian_tangent_checks_are_not_offered() {
        let q = RingDescriptor::rational();
        let g = Geometry::parse("lagr-sym:2", &q).unwrap();
        let mut rng = seeded_rng(1);
        assert!(matches!(
            check_tangent(&g, 5, &mut rng),
            Err(GeomError::Unsupported(_))
        ));
    }
}
