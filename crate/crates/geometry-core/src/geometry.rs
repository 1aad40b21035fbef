//! Pair geometries of subspaces.
//!
//! A geometry owns two kinds of inhabitants: points, stored as canonical
//! column spans, and co-points, stored as canonical row spans.  A co-point
//! observes a point when the product of their representatives is invertible;
//! everything else (charts, dilations, laws) is built on that relation.
//!
//! Two flavours exist.  `Grassmann` is the space of all `e`-dimensional
//! subspaces of a module of dimension `e + f`.  `Lagrangian` fixes a
//! nondegenerate form on a space of dimension `2n` and keeps only the
//! self-orthogonal `n`-dimensional subspaces; the affine charts then land in
//! symmetric, skew, or twisted-hermitian matrices depending on the form.

use std::fmt;

use linalg_exact::{
    col_canon, is_invertible, kernel, row_canon, sample_full_col_rank, Form, FormSymmetry, Matrix,
};
use rand::Rng;
use ring_core::{sample_scalar, RingDescriptor, Scalar};

use crate::error::GeomError;

/// Which matrix family the affine charts of a Lagrangian geometry live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartModel {
    Sym,
    Skew,
    Herm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryKind {
    Grassmann { dim_e: usize, dim_f: usize },
    Lagrangian { n: usize, model: ChartModel },
}

/// Deliberate defect for sensitivity tests: skip the normalisation of the
/// first summand when forming weighted combinations, so the output depends
/// on the chosen representative and the projective laws break.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiMutation {
    DropFirstWeightNormalization,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    kind: GeometryKind,
    ring: RingDescriptor,
    mutation: Option<PiMutation>,
}

/// A point: the column span of a full-column-rank matrix, held in the
/// unit-pivot canonical form so that equality is plain matrix equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrasPoint {
    rep: Matrix,
}

/// A co-point: the row span of a full-row-rank matrix, canonicalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrasCoPoint {
    rep: Matrix,
}

impl GrasPoint {
    pub fn rep(&self) -> &Matrix {
        &self.rep
    }
}

impl GrasCoPoint {
    pub fn rep(&self) -> &Matrix {
        &self.rep
    }
}

pub(crate) fn render(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_string_rows()
        .into_iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

impl fmt::Display for GrasPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.rep))
    }
}

impl fmt::Display for GrasCoPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render(&self.rep))
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GeometryKind::Grassmann { dim_e, dim_f } => write!(f, "gras:{dim_e}x{dim_f}"),
            GeometryKind::Lagrangian { n, model } => {
                let tag = match model {
                    ChartModel::Sym => "sym",
                    ChartModel::Skew => "skew",
                    ChartModel::Herm => "herm",
                };
                write!(f, "lagr-{tag}:{n}")
            }
        }
    }
}

impl Geometry {
    pub fn grassmann(dim_e: usize, dim_f: usize, ring: &RingDescriptor) -> Result<Self, GeomError> {
        if dim_e == 0 || dim_f == 0 {
            return Err(GeomError::InvalidGeometry(
                "both defining dimensions must be positive".into(),
            ));
        }
        Ok(Geometry {
            kind: GeometryKind::Grassmann { dim_e, dim_f },
            ring: ring.clone(),
            mutation: None,
        })
    }

    pub fn lagrangian(model: ChartModel, n: usize, ring: &RingDescriptor) -> Result<Self, GeomError> {
        if n == 0 {
            return Err(GeomError::InvalidGeometry("need n >= 1".into()));
        }
        if model == ChartModel::Herm && !ring.is_involutive() {
            return Err(GeomError::InvalidGeometry(
                "hermitian charts need a ring with conjugation".into(),
            ));
        }
        Ok(Geometry {
            kind: GeometryKind::Lagrangian { n, model },
            ring: ring.clone(),
            mutation: None,
        })
    }

    /// Names: `gras:ExF`, `lagr-sym:n`, `lagr-skew:n`, `lagr-herm:n`.
    pub fn parse(target: &str, ring: &RingDescriptor) -> Result<Self, GeomError> {
        let bad = || {
            GeomError::InvalidGeometry(format!(
                "unknown geometry '{target}' (expected gras:ExF or lagr-sym|skew|herm:n)"
            ))
        };
        if let Some(dims) = target.strip_prefix("gras:") {
            let (e, f) = dims.split_once('x').ok_or_else(bad)?;
            let dim_e: usize = e.parse().map_err(|_| bad())?;
            let dim_f: usize = f.parse().map_err(|_| bad())?;
            return Geometry::grassmann(dim_e, dim_f, ring);
        }
        if let Some(rest) = target.strip_prefix("lagr-") {
            let (tag, n) = rest.split_once(':').ok_or_else(bad)?;
            let model = match tag {
                "sym" => ChartModel::Sym,
                "skew" => ChartModel::Skew,
                "herm" => ChartModel::Herm,
                _ => return Err(bad()),
            };
            let n: usize = n.parse().map_err(|_| bad())?;
            return Geometry::lagrangian(model, n, ring);
        }
        Err(bad())
    }

    pub fn mutated(mut self, mutation: PiMutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub(crate) fn mutation(&self) -> Option<PiMutation> {
        self.mutation
    }

    pub fn kind(&self) -> &GeometryKind {
        &self.kind
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Dimension of the ambient module.
    pub fn ambient(&self) -> usize {
        match self.kind {
            GeometryKind::Grassmann { dim_e, dim_f } => dim_e + dim_f,
            GeometryKind::Lagrangian { n, .. } => 2 * n,
        }
    }

    /// Rank of every point (and of every co-point representative).
    pub fn point_rank(&self) -> usize {
        match self.kind {
            GeometryKind::Grassmann { dim_e, .. } => dim_e,
            GeometryKind::Lagrangian { n, .. } => n,
        }
    }

    /// The fixed form of a Lagrangian geometry.
    pub fn form(&self) -> Option<Form> {
        let GeometryKind::Lagrangian { n, model } = self.kind else {
            return None;
        };
        let one = Scalar::one(&self.ring);
        let gram = Matrix::from_fn(&self.ring, 2 * n, 2 * n, |i, j| {
            if i + n == j {
                one.clone()
            } else if j + n == i {
                match model {
                    ChartModel::Sym => one.neg(),
                    _ => one.clone(),
                }
            } else {
                Scalar::zero(&self.ring)
            }
        });
        let symmetry = match model {
            ChartModel::Sym => FormSymmetry::Skew,
            ChartModel::Skew => FormSymmetry::Symmetric,
            ChartModel::Herm => FormSymmetry::Hermitian,
        };
        Some(Form::new(gram, symmetry).expect("fixed gram matrices are valid"))
    }

    /// Canonicalize and validate a point representative.
    pub fn point_from(&self, m: &Matrix) -> Result<GrasPoint, GeomError> {
        let k = self.point_rank();
        if m.rows() != self.ambient() || m.cols() != k {
            return Err(GeomError::DimMismatch(format!(
                "point representative must be {}x{k}",
                self.ambient()
            )));
        }
        let canon = col_canon(m)
            .map_err(|e| GeomError::InvalidPoint(format!("no canonical form: {e}")))?;
        if canon.rank != k {
            return Err(GeomError::InvalidPoint(format!(
                "rank {} representative, need {k}",
                canon.rank
            )));
        }
        let rep = canon.basis();
        if let Some(form) = self.form() {
            if !form.adjoint_rows(&rep).mul(&rep).is_zero() {
                return Err(GeomError::InvalidPoint(
                    "subspace is not self-orthogonal".into(),
                ));
            }
        }
        Ok(GrasPoint { rep })
    }

    /// Canonicalize and validate a co-point representative.
    pub fn copoint_from(&self, m: &Matrix) -> Result<GrasCoPoint, GeomError> {
        let k = self.point_rank();
        if m.rows() != k || m.cols() != self.ambient() {
            return Err(GeomError::DimMismatch(format!(
                "co-point representative must be {k}x{}",
                self.ambient()
            )));
        }
        let canon = row_canon(m)
            .map_err(|e| GeomError::InvalidPoint(format!("no canonical form: {e}")))?;
        if canon.rank != k {
            return Err(GeomError::InvalidPoint(format!(
                "rank {} representative, need {k}",
                canon.rank
            )));
        }
        Ok(GrasCoPoint { rep: canon.canon })
    }

    /// A co-point observes a point when the pairing of representatives is
    /// invertible; equivalently the point is a complement of the co-point's
    /// kernel.
    pub fn transversal(&self, x: &GrasPoint, a: &GrasCoPoint) -> bool {
        is_invertible(&a.rep.mul(&x.rep))
    }

    /// Basis of the kernel of a co-point (the subspace it fails to see).
    pub fn copoint_kernel(&self, a: &GrasCoPoint) -> Matrix {
        kernel(&a.rep).expect("canonical co-points have computable kernels")
    }

    pub fn sample_point<R: Rng>(&self, rng: &mut R) -> GrasPoint {
        match self.kind {
            GeometryKind::Grassmann { .. } => {
                let m = sample_full_col_rank(&self.ring, self.ambient(), self.point_rank(), rng);
                self.point_from(&m).expect("full-rank samples are points")
            }
            GeometryKind::Lagrangian { n, model } => {
                let c = sample_chart_model(&self.ring, model, n, rng);
                let id = Matrix::identity(&self.ring, n);
                let m = if rng.gen::<bool>() {
                    id.vstack(&c)
                } else {
                    c.vstack(&id)
                };
                self.point_from(&m).expect("graphs of model matrices are points")
            }
        }
    }

    pub fn sample_copoint<R: Rng>(&self, rng: &mut R) -> GrasCoPoint {
        match self.kind {
            GeometryKind::Grassmann { .. } => {
                let m = sample_full_col_rank(&self.ring, self.ambient(), self.point_rank(), rng);
                self.copoint_from(&m.transpose())
                    .expect("full-rank samples are co-points")
            }
            GeometryKind::Lagrangian { .. } => {
                let z = self.sample_point(rng);
                let form = self.form().expect("lagrangian geometries carry a form");
                self.copoint_from(&form.adjoint_rows(z.rep()))
                    .expect("adjoints of points are co-points")
            }
        }
    }
}

/// A random matrix in the chart model class: symmetric, skew, or
/// skew-hermitian (the hermitian family twisted by i).
fn sample_chart_model<R: Rng>(
    desc: &RingDescriptor,
    model: ChartModel,
    n: usize,
    rng: &mut R,
) -> Matrix {
    let mut m = Matrix::zeros(desc, n, n);
    for i in 0..n {
        for j in i..n {
            if i == j {
                let d = match model {
                    ChartModel::Sym => sample_scalar(desc, rng),
                    ChartModel::Skew => Scalar::zero(desc),
                    ChartModel::Herm => {
                        let rational = RingDescriptor::rational();
                        let b = sample_scalar(&rational, rng);
                        Scalar::gauss_from_parts(desc, &Scalar::zero(&rational), &b)
                            .expect("purely imaginary diagonal")
                    }
                };
                m.set(i, i, d);
            } else {
                let s = sample_scalar(desc, rng);
                let t = match model {
                    ChartModel::Sym => s.clone(),
                    ChartModel::Skew => s.neg(),
                    ChartModel::Herm => s.conjugate().neg(),
                };
                m.set(i, j, s);
                m.set(j, i, t);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::seeded_rng;

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    #[test]
    fn parsing_round_trips() {
        for name in ["gras:1x2", "gras:3x3", "lagr-sym:2", "lagr-skew:3"] {
            let g = Geometry::parse(name, &q()).unwrap();
            assert_eq!(g.to_string(), name);
        }
        let qi = RingDescriptor::gaussian_rational();
        assert_eq!(Geometry::parse("lagr-herm:2", &qi).unwrap().to_string(), "lagr-herm:2");
        assert!(Geometry::parse("lagr-herm:2", &q()).is_err());
        assert!(Geometry::parse("gras:0x2", &q()).is_err());
        assert!(Geometry::parse("mystery:1", &q()).is_err());
    }

    #[test]
    fn transversality_on_the_projective_line() {
        let g = Geometry::parse("gras:1x1", &q()).unwrap();
        let x0 = g.point_from(&Matrix::from_ints(&q(), &[&[1], &[0]])).unwrap();
        let x1 = g.point_from(&Matrix::from_ints(&q(), &[&[1], &[1]])).unwrap();
        let a = g.copoint_from(&Matrix::from_ints(&q(), &[&[0, 1]])).unwrap();
        assert!(!g.transversal(&x0, &a));
        assert!(g.transversal(&x1, &a));
    }

    #[test]
    fn dual_number_pairing_needs_a_unit() {
        let d = RingDescriptor::parse("dual:Q").unwrap();
        let g = Geometry::parse("gras:1x1", &d).unwrap();
        let x = g
            .point_from(&Matrix::parse_rows(&d, &[&["1"], &["e"]]).unwrap())
            .unwrap();
        let a = g
            .copoint_from(&Matrix::parse_rows(&d, &[&["e", "1"]]).unwrap())
            .unwrap();
        // the pairing is 2e, nilpotent, so the pair is blind
        assert!(!g.transversal(&x, &a));
    }

    #[test]
    fn points_are_canonical_spans() {
        let g = Geometry::parse("gras:1x1", &q()).unwrap();
        let a = g.point_from(&Matrix::from_ints(&q(), &[&[2], &[4]])).unwrap();
        let b = g.point_from(&Matrix::from_ints(&q(), &[&[1], &[2]])).unwrap();
        assert_eq!(a, b);
        let rank_drop = Matrix::from_ints(&q(), &[&[0], &[0]]);
        assert!(g.point_from(&rank_drop).is_err());
    }

    #[test]
    fn lagrangian_membership_is_enforced() {
        let g = Geometry::parse("lagr-sym:2", &q()).unwrap();
        // graph of a symmetric matrix is a point
        let sym = Matrix::from_ints(&q(), &[&[1, 0], &[0, 1], &[2, 1], &[1, 3]]);
        assert!(g.point_from(&sym).is_ok());
        // graph of a non-symmetric matrix is not self-orthogonal
        let bad = Matrix::from_ints(&q(), &[&[1, 0], &[0, 1], &[2, 5], &[1, 3]]);
        assert_eq!(
            g.point_from(&bad),
            Err(GeomError::InvalidPoint("subspace is not self-orthogonal".into()))
        );
    }

    #[test]
    fn sampling_respects_each_geometry() {
        let qi = RingDescriptor::gaussian_rational();
        let mut rng = seeded_rng(41);
        for (name, ring) in [
            ("gras:2x3", q()),
            ("gras:1x2", RingDescriptor::parse("dual:Q").unwrap()),
            ("lagr-sym:2", q()),
            ("lagr-skew:2", q()),
            ("lagr-herm:2", qi),
        ] {
            let g = Geometry::parse(name, &ring).unwrap();
            for _ in 0..10 {
                let x = g.sample_point(&mut rng);
                let a = g.sample_copoint(&mut rng);
                // re-validating exercises rank and self-orthogonality checks
                assert_eq!(g.point_from(x.rep()).unwrap(), x, "{name}");
                assert_eq!(g.copoint_from(a.rep()).unwrap(), a, "{name}");
            }
        }
    }
}
