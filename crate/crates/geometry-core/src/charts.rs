//! Structure maps read through affine charts.
//!
//! Fixing a transversal pair (x, a) identifies the points visible from `a`
//! with a matrix space: the chart.  The weighted combination `pi_r`, the
//! chart sum `sigma_sum`, midpoints, and inner dilations below are all exact
//! matrix formulas in the representatives, independent of the choice of
//! representative.

use linalg_exact::{invert, Matrix};
use ring_core::Scalar;

use crate::error::GeomError;
use crate::geometry::{Geometry, GrasCoPoint, GrasPoint, PiMutation};

/// An invertible ambient map together with its inverse, acting on points by
/// left multiplication and on co-points by right multiplication with the
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveMap {
    pub mat: Matrix,
    pub inv: Matrix,
}

impl ProjectiveMap {
    pub fn apply_point(&self, geo: &Geometry, x: &GrasPoint) -> Result<GrasPoint, GeomError> {
        geo.point_from(&self.mat.mul(x.rep()))
    }

    pub fn apply_copoint(&self, geo: &Geometry, a: &GrasCoPoint) -> Result<GrasCoPoint, GeomError> {
        geo.copoint_from(&a.rep().mul(&self.inv))
    }
}

impl Geometry {
    fn pairing_inverse(&self, phi: &Matrix, f: &Matrix) -> Result<Matrix, GeomError> {
        invert(&phi.mul(f)).map_err(|_| GeomError::NotTransversal)
    }

    /// Weighted combination on raw representatives.  Exposed so that
    /// representative-independence can be tested from outside.
    pub fn pi_r_reps(
        &self,
        f: &Matrix,
        phi: &Matrix,
        h: &Matrix,
        r: &Scalar,
    ) -> Result<GrasPoint, GeomError> {
        let one = Scalar::one(self.ring());
        let first = match self.mutation() {
            Some(PiMutation::DropFirstWeightNormalization) => f.clone(),
            None => f.mul(&self.pairing_inverse(phi, f)?),
        };
        let second = h.mul(&self.pairing_inverse(phi, h)?);
        let m = first.scale(&one.sub(r)).add(&second.scale(r));
        self.point_from(&m)
    }

    /// The point dividing the (x, y) segment in ratio r, read in the chart
    /// that `a` spans: r = 0 gives x, r = 1 gives y.
    pub fn pi_r(
        &self,
        x: &GrasPoint,
        a: &GrasCoPoint,
        y: &GrasPoint,
        r: &Scalar,
    ) -> Result<GrasPoint, GeomError> {
        self.pi_r_reps(x.rep(), a.rep(), y.rep(), r)
    }

    /// The co-point counterpart: combines two co-points along a point.
    pub fn pi_r_minus(
        &self,
        a: &GrasCoPoint,
        x: &GrasPoint,
        b: &GrasCoPoint,
        r: &Scalar,
    ) -> Result<GrasCoPoint, GeomError> {
        let one = Scalar::one(self.ring());
        let first = self.pairing_inverse(a.rep(), x.rep())?.mul(a.rep());
        let second = self.pairing_inverse(b.rep(), x.rep())?.mul(b.rep());
        let m = first.scale(&one.sub(r)).add(&second.scale(r));
        self.copoint_from(&m)
    }

    /// Projector onto the span of x along the kernel of a.
    pub fn projector(&self, x: &GrasPoint, a: &GrasCoPoint) -> Result<Matrix, GeomError> {
        let f = x.rep();
        let phi = a.rep();
        Ok(f.mul(&self.pairing_inverse(phi, f)?).mul(phi))
    }

    /// Chart coordinate of y in the affine chart with origin x spanned by a.
    pub fn chart(
        &self,
        x: &GrasPoint,
        a: &GrasCoPoint,
        y: &GrasPoint,
    ) -> Result<Matrix, GeomError> {
        let p = self.projector(x, a)?;
        let g = y.rep();
        let phi = a.rep();
        let id = Matrix::identity(self.ring(), self.ambient());
        let normalized = g.mul(&self.pairing_inverse(phi, g)?).mul(&phi.mul(x.rep()));
        Ok(id.sub(&p).mul(&normalized))
    }

    /// Rebuild the point with chart coordinate c.
    pub fn unchart(
        &self,
        x: &GrasPoint,
        _a: &GrasCoPoint,
        c: &Matrix,
    ) -> Result<GrasPoint, GeomError> {
        self.point_from(&x.rep().add(c))
    }

    /// Vector addition of y and z in the chart at (x, a).
    pub fn sigma_sum(
        &self,
        x: &GrasPoint,
        a: &GrasCoPoint,
        y: &GrasPoint,
        z: &GrasPoint,
    ) -> Result<GrasPoint, GeomError> {
        let cy = self.chart(x, a, y)?;
        let cz = self.chart(x, a, z)?;
        self.unchart(x, a, &cy.add(&cz))
    }

    /// The chart barycenter of x and y.
    pub fn midpoint_map(
        &self,
        x: &GrasPoint,
        y: &GrasPoint,
        a: &GrasCoPoint,
    ) -> Result<GrasPoint, GeomError> {
        self.pi_r(x, a, y, &Scalar::half(self.ring()))
    }

    /// The ambient map fixing o and a that scales the chart at (o, a) by r.
    pub fn inner_dilation(
        &self,
        o: &GrasPoint,
        a: &GrasCoPoint,
        r: &Scalar,
    ) -> Result<ProjectiveMap, GeomError> {
        if !r.is_unit() {
            return Err(GeomError::Unsupported(format!(
                "dilation ratio must be a unit, got {r}"
            )));
        }
        let p = self.projector(o, a)?;
        let id = Matrix::identity(self.ring(), self.ambient());
        let off = id.sub(&p);
        let r_inv = r.invert().expect("checked unit");
        Ok(ProjectiveMap {
            mat: p.add(&off.scale(r)),
            inv: p.add(&off.scale(&r_inv)),
        })
    }
}
