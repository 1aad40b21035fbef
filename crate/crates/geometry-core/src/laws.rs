//! The two five-variable laws of projective geometry, plus supporting
//! checks: representative independence of the structure maps and common
//! charts for pairs of points.
//!
//! All checkers sample by rejection: a drawn tuple is kept only if every
//! intermediate combination is defined (all required pairings invertible).
//! Both sides of each law are evaluated through independent code paths on
//! the surviving tuples and compared exactly.

use linalg_exact::{find_common_complement, kernel, sample_invertible};
use rand::Rng;
use ring_core::{sample_scalar, CheckOutcome};

use crate::error::GeomError;
use crate::geometry::{Geometry, GeometryKind, GrasCoPoint, GrasPoint};

pub(crate) const RETRY_CAP: usize = 1000;

pub(crate) fn sample_until<T, F>(mut attempt: F) -> Result<T, GeomError>
where
    F: FnMut() -> Option<T>,
{
    for _ in 0..RETRY_CAP {
        if let Some(t) = attempt() {
            return Ok(t);
        }
    }
    Err(GeomError::DegenerateSampling(RETRY_CAP))
}

/// First law: dilations centred at a transversal pair act as automorphisms.
pub fn check_pg1<R: Rng>(
    geo: &Geometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let ring = geo.ring().clone();
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let (witness, lhs, rhs) = sample_until(|| {
            let o = geo.sample_point(rng);
            let x = geo.sample_point(rng);
            let y = geo.sample_point(rng);
            let alpha = geo.sample_copoint(rng);
            let beta = geo.sample_copoint(rng);
            let r = sample_scalar(&ring, rng);
            let s = sample_scalar(&ring, rng);
            let eval = || -> Result<(GrasPoint, GrasPoint), GeomError> {
                let gamma = geo.pi_r_minus(&alpha, &o, &beta, &r)?;
                let inner = geo.pi_r(&x, &gamma, &y, &s)?;
                let lhs = geo.pi_r(&o, &alpha, &inner, &r)?;
                let gx = geo.pi_r(&o, &alpha, &x, &r)?;
                let gy = geo.pi_r(&o, &alpha, &y, &r)?;
                let rhs = geo.pi_r(&gx, &beta, &gy, &s)?;
                Ok((lhs, rhs))
            };
            let (lhs, rhs) = eval().ok()?;
            let witness =
                format!("o={o} alpha={alpha} x={x} beta={beta} y={y} r={r} s={s}");
            Some((witness, lhs, rhs))
        })?;
        out.record(lhs == rhs, || format!("first law fails at {witness}"));
    }
    Ok(out)
}

/// Second law: middle translations form structural pairs; at ratio one half
/// the translation is symmetric in its two point arguments.
pub fn check_pg2<R: Rng>(
    geo: &Geometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let ring = geo.ring().clone();
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let (witness, pairs) = sample_until(|| {
            let x = geo.sample_point(rng);
            let y = geo.sample_point(rng);
            let alpha = geo.sample_copoint(rng);
            let beta = geo.sample_copoint(rng);
            let gamma = geo.sample_copoint(rng);
            let r = sample_scalar(&ring, rng);
            let s = sample_scalar(&ring, rng);
            type Sides = ((GrasPoint, GrasPoint), (GrasPoint, GrasPoint));
            let eval = || -> Result<Sides, GeomError> {
                let z = geo.pi_r(&y, &beta, &x, &r)?;
                let w = geo.pi_r_minus(&alpha, &z, &gamma, &s)?;
                let lhs = geo.pi_r(&x, &w, &y, &r)?;
                let pa = geo.pi_r(&x, &alpha, &y, &r)?;
                let pc = geo.pi_r(&x, &gamma, &y, &r)?;
                let rhs = geo.pi_r(&pa, &beta, &pc, &s)?;
                let m_xy = geo.midpoint_map(&x, &y, &alpha)?;
                let m_yx = geo.midpoint_map(&y, &x, &alpha)?;
                Ok(((lhs, rhs), (m_xy, m_yx)))
            };
            let sides = eval().ok()?;
            let witness =
                format!("x={x} alpha={alpha} y={y} beta={beta} gamma={gamma} r={r} s={s}");
            Some((witness, sides))
        })?;
        let ((lhs, rhs), (m_xy, m_yx)) = pairs;
        out.record(lhs == rhs, || format!("second law fails at {witness}"));
        out.record(m_xy == m_yx, || {
            format!("half-ratio combination is not symmetric at {witness}")
        });
    }
    Ok(out)
}

/// Replacing representatives by invertible recombinations never changes the
/// weighted combination.
pub fn check_rep_independence<R: Rng>(
    geo: &Geometry,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, GeomError> {
    let ring = geo.ring().clone();
    let k = geo.point_rank();
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let (x, a, y, r) = sample_until(|| {
            let x = geo.sample_point(rng);
            let a = geo.sample_copoint(rng);
            let y = geo.sample_point(rng);
            if geo.transversal(&x, &a) && geo.transversal(&y, &a) {
                let r = sample_scalar(&ring, rng);
                Some((x, a, y, r))
            } else {
                None
            }
        })?;
        let base = geo.pi_r(&x, &a, &y, &r)?;
        let mx = sample_invertible(&ring, k, rng);
        let my = sample_invertible(&ring, k, rng);
        let na = sample_invertible(&ring, k, rng);
        let twisted = geo.pi_r_reps(
            &x.rep().mul(&mx),
            &na.mul(a.rep()),
            &y.rep().mul(&my),
            &r,
        )?;
        out.record(base == twisted, || {
            format!("combination moved under re-representation: x={x} a={a} y={y} r={r}")
        });
    }
    Ok(out)
}

/// A co-point that observes both points at once: its kernel is a common
/// complement of the two spans.
pub fn find_common_chart(
    geo: &Geometry,
    x: &GrasPoint,
    y: &GrasPoint,
) -> Result<GrasCoPoint, GeomError> {
    if matches!(geo.kind(), GeometryKind::Lagrangian { .. }) {
        return Err(GeomError::Unsupported(
            "common charts are constructed only for plain subspace geometries".into(),
        ));
    }
    let c = find_common_complement(x.rep(), y.rep())
        .map_err(|e| GeomError::NotFound(format!("no common complement: {e}")))?;
    let ann = kernel(&c.transpose())
        .map_err(|e| GeomError::NotFound(format!("no annihilating rows: {e}")))?;
    geo.copoint_from(&ann.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PiMutation;
    use linalg_exact::Matrix;
    use ring_core::{seeded_rng, RingDescriptor};

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    #[test]
    fn both_laws_hold_across_the_catalogue() {
        let mut rng = seeded_rng(101);
        let qi = RingDescriptor::gaussian_rational();
        for (name, ring) in [
            ("gras:1x1", q()),
            ("gras:1x2", RingDescriptor::parse("Zmod:7").unwrap()),
            ("gras:2x2", q()),
            ("gras:1x2", RingDescriptor::parse("dual:Q").unwrap()),
            ("lagr-sym:2", q()),
            ("lagr-herm:2", qi),
        ] {
            let g = Geometry::parse(name, &ring).unwrap();
            let pg1 = check_pg1(&g, 15, &mut rng).unwrap();
            assert!(pg1.is_pass(), "first law on {name}: {:?}", pg1.witnesses);
            let pg2 = check_pg2(&g, 15, &mut rng).unwrap();
            assert!(pg2.is_pass(), "second law on {name}: {:?}", pg2.witnesses);
        }
    }

    #[test]
    fn representatives_do_not_matter() {
        let mut rng = seeded_rng(55);
        for name in ["gras:1x2", "gras:2x3"] {
            let g = Geometry::parse(name, &q()).unwrap();
            let out = check_rep_independence(&g, 30, &mut rng).unwrap();
            assert!(out.is_pass(), "{name}");
        }
    }

    #[test]
    fn skipping_the_normalisation_breaks_the_laws() {
        let mut rng = seeded_rng(77);
        let g = Geometry::parse("gras:1x2", &q())
            .unwrap()
            .mutated(PiMutation::DropFirstWeightNormalization);
        let pg1 = check_pg1(&g, 40, &mut rng).unwrap();
        assert!(pg1.failed > 0, "mutated first law must fail");
        assert!(!pg1.witnesses.is_empty());
        let indep = check_rep_independence(&g, 40, &mut rng).unwrap();
        assert!(indep.failed > 0, "mutated map must depend on representatives");
    }

    #[test]
    fn common_chart_for_the_axes() {
        let g = Geometry::parse("gras:1x1", &q()).unwrap();
        let x = g.point_from(&Matrix::from_ints(&q(), &[&[1], &[0]])).unwrap();
        let y = g.point_from(&Matrix::from_ints(&q(), &[&[0], &[1]])).unwrap();
        let a = find_common_chart(&g, &x, &y).unwrap();
        assert!(g.transversal(&x, &a));
        assert!(g.transversal(&y, &a));
    }

    #[test]
    fn common_charts_exist_for_sampled_pairs() {
        let mut rng = seeded_rng(13);
        for ring in ["Q", "Zmod:5", "dual:Q"] {
            let desc = RingDescriptor::parse(ring).unwrap();
            let g = Geometry::parse("gras:2x2", &desc).unwrap();
            for _ in 0..10 {
                let x = g.sample_point(&mut rng);
                let y = g.sample_point(&mut rng);
                let a = find_common_chart(&g, &x, &y).unwrap();
                assert!(g.transversal(&x, &a), "over {ring}");
                assert!(g.transversal(&y, &a), "over {ring}");
            }
        }
    }
}
