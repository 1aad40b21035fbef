//! Exhaustive enumeration of small geometries over prime fields, plus the
//! finite checks that only make sense with the full list in hand: covering,
//! midpoint injectivity, and distinguishability of co-points.

use linalg_exact::Matrix;
use ring_core::{CheckOutcome, RingDescriptor, RingKind, Scalar};

use crate::error::GeomError;
use crate::geometry::{Geometry, GeometryKind, GrasCoPoint, GrasPoint};

/// Refuse to materialize more subspaces than this.
pub const ENUM_CAP: usize = 10_000;

fn field_order(ring: &RingDescriptor) -> Result<u64, GeomError> {
    match ring.kind() {
        RingKind::Modular(p) => Ok(*p),
        _ => Err(GeomError::Unsupported(
            "enumeration needs a finite prime field".into(),
        )),
    }
}

fn combinations(w: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, w: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..w {
            cur.push(c);
            rec(c + 1, w, k, cur, out);
            cur.pop();
        }
    }
    rec(0, w, k, &mut cur, &mut out);
    out
}

/// Every reduced row echelon k x w matrix of rank k over `Z/p`.  Each
/// k-dimensional row space appears exactly once.
fn enumerate_echelon(ring: &RingDescriptor, k: usize, w: usize) -> Result<Vec<Matrix>, GeomError> {
    let p = field_order(ring)? as usize;
    let elems: Vec<Scalar> = (0..p)
        .map(|i| Scalar::from_integer(ring, i as i64))
        .collect();
    let mut out = Vec::new();
    for pivots in combinations(w, k) {
        let is_pivot = {
            let mut v = vec![false; w];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|l| {
                let start = pivots[l] + 1;
                let is_pivot = &is_pivot;
                (start..w).filter_map(move |c| (!is_pivot[c]).then_some((l, c)))
            })
            .collect();
        let mut counters = vec![0usize; free.len()];
        loop {
            let mut m = Matrix::zeros(ring, k, w);
            for (l, &c) in pivots.iter().enumerate() {
                m.set(l, c, Scalar::one(ring));
            }
            for (slot, &(l, c)) in free.iter().enumerate() {
                m.set(l, c, elems[counters[slot]].clone());
            }
            out.push(m);
            if out.len() > ENUM_CAP {
                return Err(GeomError::TooLarge(ENUM_CAP));
            }
            let mut i = 0;
            loop {
                if i == counters.len() {
                    break;
                }
                counters[i] += 1;
                if counters[i] < p {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == counters.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// All points of the geometry.  For form-restricted geometries the
/// non-self-orthogonal candidates are filtered out.
pub fn enumerate_points(geo: &Geometry) -> Result<Vec<GrasPoint>, GeomError> {
    let raw = enumerate_echelon(geo.ring(), geo.point_rank(), geo.ambient())?;
    let mut out = Vec::new();
    for rows in raw {
        match geo.point_from(&rows.transpose()) {
            Ok(x) => out.push(x),
            Err(GeomError::InvalidPoint(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// All co-points.  For form-restricted geometries these are the polars of
/// the points, which the form pairs with them one-to-one.
pub fn enumerate_copoints(geo: &Geometry) -> Result<Vec<GrasCoPoint>, GeomError> {
    match geo.kind() {
        GeometryKind::Grassmann { .. } => enumerate_echelon(geo.ring(), geo.point_rank(), geo.ambient())?
            .iter()
            .map(|rows| geo.copoint_from(rows))
            .collect(),
        GeometryKind::Lagrangian { .. } => {
            let form = geo.form().expect("form-restricted geometry carries a form");
            enumerate_points(geo)?
                .iter()
                .map(|z| geo.copoint_from(&form.adjoint_rows(z.rep())))
                .collect()
        }
    }
}

/// Incidence covering: every co-point admits a transversal point and every
/// point admits a transversal co-point.  Exhaustive.
pub fn check_covering(geo: &Geometry) -> Result<CheckOutcome, GeomError> {
    let points = enumerate_points(geo)?;
    let copoints = enumerate_copoints(geo)?;
    let mut out = CheckOutcome::new();
    for a in &copoints {
        let seen = points.iter().any(|x| geo.transversal(x, a));
        out.record(seen, || format!("co-point {a} is transversal to no point"));
    }
    for x in &points {
        let seen = copoints.iter().any(|a| geo.transversal(x, a));
        out.record(seen, || format!("point {x} is transversal to no co-point"));
    }
    Ok(out)
}

/// For each unordered pair of distinct points, the midpoints taken against
/// the co-points transversal to both are pairwise distinct, and do not
/// depend on the order of the pair.
pub fn check_midpoint_injectivity(geo: &Geometry) -> Result<CheckOutcome, GeomError> {
    let points = enumerate_points(geo)?;
    let copoints = enumerate_copoints(geo)?;
    let work = points.len() * points.len() * copoints.len();
    if work > 100 * ENUM_CAP {
        return Err(GeomError::TooLarge(ENUM_CAP));
    }
    let mut out = CheckOutcome::new();
    for (i, x) in points.iter().enumerate() {
        for y in points.iter().skip(i + 1) {
            let valid: Vec<&GrasCoPoint> = copoints
                .iter()
                .filter(|a| geo.transversal(x, a) && geo.transversal(y, a))
                .collect();
            let mut mids = Vec::with_capacity(valid.len());
            for a in &valid {
                let m = geo.midpoint_map(x, y, a)?;
                let back = geo.midpoint_map(y, x, a)?;
                out.record(m == back, || {
                    format!("midpoint of {x} and {y} against {a} depends on the order")
                });
                mids.push((a, m));
            }
            for (j, (a, m)) in mids.iter().enumerate() {
                for (b, m2) in mids.iter().skip(j + 1) {
                    out.record(m != m2, || {
                        format!("co-points {a} and {b} give the same midpoint of {x} and {y}")
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Distinct co-points are observationally distinct: they see different sets
/// of points, or failing that, chart addition based at a common origin
/// disagrees somewhere.
pub fn check_faithful_small(geo: &Geometry) -> Result<CheckOutcome, GeomError> {
    let points = enumerate_points(geo)?;
    let copoints = enumerate_copoints(geo)?;
    let visible: Vec<Vec<bool>> = copoints
        .iter()
        .map(|a| points.iter().map(|x| geo.transversal(x, a)).collect())
        .collect();
    let mut out = CheckOutcome::new();
    for i in 0..copoints.len() {
        for j in (i + 1)..copoints.len() {
            if visible[i] != visible[j] {
                out.record(true, || String::new());
                continue;
            }
            let a = &copoints[i];
            let b = &copoints[j];
            let mut separated = false;
            'search: for (oi, o) in points.iter().enumerate() {
                if !visible[i][oi] {
                    continue;
                }
                for (yi, y) in points.iter().enumerate() {
                    if !visible[i][yi] {
                        continue;
                    }
                    for (zi, z) in points.iter().enumerate() {
                        if !visible[i][zi] {
                            continue;
                        }
                        let via_a = geo.sigma_sum(o, a, y, z)?;
                        let via_b = geo.sigma_sum(o, b, y, z)?;
                        if via_a != via_b {
                            separated = true;
                            break 'search;
                        }
                    }
                }
            }
            out.record(separated, || {
                format!("co-points {a} and {b} are observationally identical")
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> RingDescriptor {
        RingDescriptor::parse("Zmod:5").unwrap()
    }

    #[test]
    fn projective_line_over_f5() {
        let geo = Geometry::parse("gras:1x1", &f5()).unwrap();
        let points = enumerate_points(&geo).unwrap();
        let copoints = enumerate_copoints(&geo).unwrap();
        assert_eq!(points.len(), 6);
        assert_eq!(copoints.len(), 6);
        for a in &copoints {
            let seen = points.iter().filter(|x| geo.transversal(x, a)).count();
            assert_eq!(seen, 5);
        }
        assert!(check_covering(&geo).unwrap().is_pass());
    }

    #[test]
    fn midpoints_separate_copoints_on_the_line() {
        let geo = Geometry::parse("gras:1x1", &f5()).unwrap();
        let out = check_midpoint_injectivity(&geo).unwrap();
        assert!(out.is_pass(), "{:?}", out.witnesses);
        let points = enumerate_points(&geo).unwrap();
        let copoints = enumerate_copoints(&geo).unwrap();
        let x = &points[0];
        let y = &points[1];
        let valid = copoints
            .iter()
            .filter(|a| geo.transversal(x, a) && geo.transversal(y, a))
            .count();
        assert_eq!(valid, 4);
    }

    #[test]
    fn copoints_are_observationally_distinct() {
        let geo = Geometry::parse("gras:1x1", &f5()).unwrap();
        let out = check_faithful_small(&geo).unwrap();
        assert!(out.is_pass(), "{:?}", out.witnesses);
    }

    #[test]
    fn infinite_rings_and_oversized_spaces_are_refused() {
        let geo = Geometry::parse("gras:1x1", &RingDescriptor::rational()).unwrap();
        assert!(matches!(
            enumerate_points(&geo),
            Err(GeomError::Unsupported(_))
        ));
        let big = Geometry::parse(
            "gras:2x2",
            &RingDescriptor::parse("Zmod:101").unwrap(),
        )
        .unwrap();
        assert!(matches!(
            enumerate_points(&big),
            Err(GeomError::TooLarge(_))
        ));
    }

    #[test]
    fn lagrangian_enumeration_filters_to_self_orthogonal_planes() {
        let geo = Geometry::parse("lagr-sym:1", &f5()).unwrap();
        let points = enumerate_points(&geo).unwrap();
        assert_eq!(points.len(), 6);
        let copoints = enumerate_copoints(&geo).unwrap();
        assert_eq!(copoints.len(), 6);
        assert!(check_covering(&geo).unwrap().is_pass());
    }
}
