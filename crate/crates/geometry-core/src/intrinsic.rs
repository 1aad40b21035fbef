//! Subsets of points squeezed between the two legs of a flag.  These sets
//! look linear in every chart: chart coordinates of members are closed under
//! addition and unit scaling.  When the flag legs sit one step below and one
//! step above the point rank, members appear as operators of rank at most
//! one in any chart centred inside the set.

use linalg_exact::{col_canon, in_col_span, rank, sample_matrix, sample_unit_scalar, ColCanon, Matrix};
use rand::Rng;
use ring_core::CheckOutcome;

use crate::error::GeomError;
use crate::geometry::{Geometry, GrasPoint};
use crate::laws::sample_until;

pub struct IntrinsicSubspace {
    lower: ColCanon,
    upper: ColCanon,
}

impl IntrinsicSubspace {
    pub fn lower(&self) -> Matrix {
        self.lower.basis()
    }

    pub fn upper(&self) -> Matrix {
        self.upper.basis()
    }

    pub fn is_pure(&self, geo: &Geometry) -> bool {
        let k = geo.point_rank();
        self.lower.rank + 1 == k && self.upper.rank == k + 1
    }
}

/// The set of points containing the lower leg and contained in the upper.
pub fn intrinsic_from_flag(
    geo: &Geometry,
    lower: &Matrix,
    upper: &Matrix,
) -> Result<IntrinsicSubspace, GeomError> {
    let w = geo.ambient();
    if lower.rows() != w || upper.rows() != w {
        return Err(GeomError::DimMismatch(format!("flag legs must have {w} rows")));
    }
    let lo = col_canon(lower).map_err(|e| GeomError::InvalidGeometry(format!("lower leg: {e}")))?;
    let hi = col_canon(upper).map_err(|e| GeomError::InvalidGeometry(format!("upper leg: {e}")))?;
    for j in 0..lo.rank {
        if !in_col_span(&hi, &lo.canon.col(j)) {
            return Err(GeomError::InvalidGeometry(
                "flag legs must be nested".into(),
            ));
        }
    }
    let k = geo.point_rank();
    if lo.rank > k || hi.rank < k {
        return Err(GeomError::InvalidGeometry(format!(
            "flag ranks {} <= {k} <= {} required",
            lo.rank, hi.rank
        )));
    }
    Ok(IntrinsicSubspace { lower: lo, upper: hi })
}

pub fn member(set: &IntrinsicSubspace, x: &GrasPoint) -> bool {
    let rep = x.rep();
    let Ok(canon_x) = col_canon(rep) else { return false };
    for j in 0..set.lower.rank {
        if !in_col_span(&canon_x, &set.lower.canon.col(j)) {
            return false;
        }
    }
    for j in 0..rep.cols() {
        if !in_col_span(&set.upper, &rep.col(j)) {
            return false;
        }
    }
    true
}

/// A member obtained by extending the lower leg with directions from the
/// upper leg.
pub fn sample_member<R: Rng>(
    geo: &Geometry,
    set: &IntrinsicSubspace,
    rng: &mut R,
) -> Result<GrasPoint, GeomError> {
    let k = geo.point_rank();
    let need = k - set.lower.rank;
    sample_until(|| {
        let mix = sample_matrix(geo.ring(), set.upper.rank, need, rng);
        let cols = set.upper.basis().mul(&mix);
        let rep = if set.lower.rank == 0 {
            cols
        } else {
            set.lower.basis().hstack(&cols)
        };
        geo.point_from(&rep).ok()
    })
}

/// Chart closure of the member set under addition and unit scaling, plus
/// the rank bound for pure flags.
pub fn check_intrinsic_linearity<R: Rng>(
    geo: &Geometry,
    set: &IntrinsicSubspace,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let mut out = CheckOutcome::new();
    let pure = set.is_pure(geo);
    for _ in 0..samples {
        let (o, a, y, z) = sample_until(|| {
            let o = sample_member(geo, set, rng).ok()?;
            let a = geo.sample_copoint(rng);
            if !geo.transversal(&o, &a) {
                return None;
            }
            let y = sample_member(geo, set, rng).ok()?;
            let z = sample_member(geo, set, rng).ok()?;
            (geo.transversal(&y, &a) && geo.transversal(&z, &a)).then_some((o, a, y, z))
        })?;
        let cy = geo.chart(&o, &a, &y)?;
        let cz = geo.chart(&o, &a, &z)?;
        let summed = geo.unchart(&o, &a, &cy.add(&cz))?;
        out.record(member(set, &summed), || {
            format!("chart sum escapes the squeezed set at o={o} y={y} z={z}")
        });
        let u = sample_unit_scalar(geo.ring(), rng);
        let scaled = geo.unchart(&o, &a, &cy.scale(&u))?;
        out.record(member(set, &scaled), || {
            format!("chart scaling escapes the squeezed set at o={o} y={y} u={u}")
        });
        if pure {
            let r = rank(&cy).map_err(|e| GeomError::Unsupported(format!("chart rank: {e}")))?;
            out.record(r <= 1, || {
                format!("pure-flag member has chart rank {r} > 1 at y={y}")
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::{seeded_rng, RingDescriptor};

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    fn std_cols(w: usize, n: usize) -> Matrix {
        Matrix::from_fn(&q(), w, n, |i, j| {
            if i == j {
                ring_core::Scalar::one(&q())
            } else {
                ring_core::Scalar::zero(&q())
            }
        })
    }

    #[test]
    fn lines_inside_a_plane_form_a_squeezed_set() {
        let g = Geometry::parse("gras:1x2", &q()).unwrap();
        let set = intrinsic_from_flag(&g, &std_cols(3, 0), &std_cols(3, 2)).unwrap();
        let inside = g.point_from(&Matrix::from_ints(&q(), &[&[1], &[4], &[0]])).unwrap();
        let outside = g.point_from(&Matrix::from_ints(&q(), &[&[1], &[0], &[2]])).unwrap();
        assert!(member(&set, &inside));
        assert!(!member(&set, &outside));
        let mut rng = seeded_rng(2);
        let out = check_intrinsic_linearity(&g, &set, 25, &mut rng).unwrap();
        assert!(out.is_pass(), "{:?}", out.witnesses);
    }

    #[test]
    fn pure_flags_give_rank_one_charts() {
        let g = Geometry::parse("gras:2x2", &q()).unwrap();
        let set = intrinsic_from_flag(&g, &std_cols(4, 1), &std_cols(4, 3)).unwrap();
        assert!(set.is_pure(&g));
        let mut rng = seeded_rng(8);
        let out = check_intrinsic_linearity(&g, &set, 25, &mut rng).unwrap();
        assert!(out.is_pass(), "{:?}", out.witnesses);
    }

    #[test]
    fn flags_must_nest() {
        let g = Geometry::parse("gras:2x2", &q()).unwrap();
        let lower = Matrix::from_ints(&q(), &[&[0], &[0], &[0], &[1]]);
        let upper = std_cols(4, 3);
        assert!(intrinsic_from_flag(&g, &lower, &upper).is_err());
    }
}
