//! Polarities and the point reflections they induce.
//!
//! A nondegenerate form identifies points with co-points in both directions.
//! Around a non-isotropic base point x the reflection mu(x, .) is the ratio
//! minus-one combination centred at x along its polar; in the chart at
//! (x, polar(x)) it is literally negation.

use linalg_exact::{orth_complement, Form};
use rand::Rng;
use ring_core::CheckOutcome;

use crate::error::GeomError;
use crate::geometry::{Geometry, GrasCoPoint, GrasPoint};
use crate::laws::sample_until;
use ring_core::Scalar;

pub struct Polarity {
    form: Form,
}

impl Geometry {
    /// The polarity of the standard dot form on the ambient module; fails
    /// if no sampled point is non-isotropic.
    pub fn dot_polarity(&self) -> Result<Polarity, GeomError> {
        if !matches!(self.kind(), crate::geometry::GeometryKind::Grassmann { .. }) {
            return Err(GeomError::Unsupported(
                "the dot-form polarity is defined on plain subspace geometries".into(),
            ));
        }
        let form = Form::dot(self.ring(), self.ambient());
        let p = Polarity { form };
        let mut rng = ring_core::seeded_rng(0x9e3779b97f4a7c15);
        sample_until(|| {
            let x = self.sample_point(&mut rng);
            (!p.is_isotropic(self, &x)).then_some(())
        })
        .map_err(|_| {
            GeomError::NotFound("no non-isotropic point found for the dot form".into())
        })?;
        Ok(p)
    }
}

impl Polarity {
    pub fn form(&self) -> &Form {
        &self.form
    }

    /// The co-point of directions orthogonal to x.
    pub fn plus(&self, geo: &Geometry, x: &GrasPoint) -> GrasCoPoint {
        geo.copoint_from(&self.form.adjoint_rows(x.rep()))
            .expect("adjoint rows of a full-rank span keep full rank")
    }

    /// The point orthogonal to everything a co-point fails to see.
    pub fn minus(&self, geo: &Geometry, a: &GrasCoPoint) -> Result<GrasPoint, GeomError> {
        let complement = orth_complement(&self.form, &geo.copoint_kernel(a))
            .map_err(|e| GeomError::NotFound(format!("orthogonal complement: {e}")))?;
        geo.point_from(&complement)
    }

    /// A point is isotropic when it meets its own polar kernel.
    pub fn is_isotropic(&self, geo: &Geometry, x: &GrasPoint) -> bool {
        !geo.transversal(x, &self.plus(geo, x))
    }

    /// Point reflection of y through the non-isotropic point x.
    pub fn mu(
        &self,
        geo: &Geometry,
        x: &GrasPoint,
        y: &GrasPoint,
    ) -> Result<GrasPoint, GeomError> {
        if self.is_isotropic(geo, x) {
            return Err(GeomError::Unsupported(
                "reflection base point must not be isotropic".into(),
            ));
        }
        let minus_one = Scalar::one(geo.ring()).neg();
        geo.pi_r(x, &self.plus(geo, x), y, &minus_one)
    }
}

/// The symmetric-space laws of the reflections: fixed points, involutivity,
/// distributivity, chart negation, and involutivity of the polarity itself.
pub fn check_symmetric_space<R: Rng>(
    geo: &Geometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let p = geo.dot_polarity()?;
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let (x, y, z) = sample_until(|| {
            let x = geo.sample_point(rng);
            let y = geo.sample_point(rng);
            let z = geo.sample_point(rng);
            let ok = !p.is_isotropic(geo, &x)
                && !p.is_isotropic(geo, &y)
                && p.mu(geo, &x, &y).is_ok()
                && p.mu(geo, &y, &z).is_ok()
                && p.mu(geo, &x, &z).is_ok();
            if !ok {
                return None;
            }
            let lhs_ok = p
                .mu(geo, &y, &z)
                .and_then(|m| p.mu(geo, &x, &m))
                .is_ok();
            let rhs_ok = p.mu(geo, &x, &y).map_or(false, |sxy| {
                !p.is_isotropic(geo, &sxy)
                    && p
                        .mu(geo, &x, &z)
                        .and_then(|sxz| p.mu(geo, &sxy, &sxz))
                        .is_ok()
            });
            (lhs_ok && rhs_ok).then_some((x, y, z))
        })?;

        let fixed = p.mu(geo, &x, &x)?;
        out.record(fixed == x, || format!("reflection moves its centre x={x}"));

        let back = p.mu(geo, &x, &p.mu(geo, &x, &y)?)?;
        out.record(back == y, || format!("reflection at x={x} is not involutive on y={y}"));

        let lhs = p.mu(geo, &x, &p.mu(geo, &y, &z)?)?;
        let rhs = p.mu(geo, &p.mu(geo, &x, &y)?, &p.mu(geo, &x, &z)?)?;
        out.record(lhs == rhs, || {
            format!("reflections do not distribute at x={x} y={y} z={z}")
        });

        let a = p.plus(geo, &x);
        let reflected = geo.chart(&x, &a, &p.mu(geo, &x, &y)?)?;
        let negated = geo.chart(&x, &a, &y)?.neg();
        out.record(reflected == negated, || {
            format!("reflection is not chart negation at x={x} y={y}")
        });

        let round = p.minus(geo, &a)?;
        out.record(round == x, || format!("polarity does not involute at x={x}"));
    }
    Ok(out)
}
