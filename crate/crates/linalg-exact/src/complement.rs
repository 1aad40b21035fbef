//! Simultaneous complements of two column spans.

use ring_core::{RingKind, Scalar};

use crate::det::is_invertible;
use crate::echelon::{col_canon, in_col_span, ColCanon};
use crate::error::LinalgError;
use crate::matrix::Matrix;

/// Find one subspace complementing both `a` and `b` inside the ambient
/// column space.  The result `c` satisfies `[a | c]` and `[b | c]` are
/// invertible (after trimming `a`, `b` to bases).
///
/// Over a field the construction is the classical one: while the corner is
/// not full, take standard vectors `x` outside the first span and `y`
/// outside the second; one of `x`, `y`, `x + y` extends both.  Over a ring
/// with nilpotents the problem is solved on the residue parts and the
/// answer lifted, which preserves invertibility because determinant unit
/// tests only see the residue.
pub fn find_common_complement(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    assert_eq!(a.rows(), b.rows(), "spans live in different ambient spaces");
    assert_eq!(a.descriptor(), b.descriptor(), "descriptor mismatch");
    let desc = a.descriptor().clone();
    let ca = col_canon(a)?;
    let cb = col_canon(b)?;
    if ca.rank != cb.rank {
        return Err(LinalgError::NotFound(format!(
            "spans of rank {} and {} admit no common complement",
            ca.rank, cb.rank
        )));
    }
    let w = a.rows();
    let k = ca.rank;
    if k == w {
        return Ok(Matrix::zeros(&desc, w, 0));
    }

    let c = if matches!(desc.kind(), RingKind::Dual(_)) {
        let (abase, _) = a.dual_parts().expect("dual ring has parts");
        let (bbase, _) = b.dual_parts().expect("dual ring has parts");
        find_common_complement(&abase, &bbase)?.embed_dual()
    } else {
        extend_over_field(&desc, w, &ca, &cb)?
    };

    let fa = ca.basis().hstack(&c);
    let fb = cb.basis().hstack(&c);
    assert!(is_invertible(&fa) && is_invertible(&fb), "complement extension failed");
    Ok(c)
}

fn extend_over_field(
    desc: &ring_core::RingDescriptor,
    w: usize,
    ca: &ColCanon,
    cb: &ColCanon,
) -> Result<Matrix, LinalgError> {
    let mut c = Matrix::zeros(desc, w, 0);
    loop {
        let ua = col_canon(&ca.basis().hstack(&c))?;
        if ua.rank == w {
            return Ok(c);
        }
        let ub = col_canon(&cb.basis().hstack(&c))?;
        let x = first_outside(desc, w, &ua);
        let y = first_outside(desc, w, &ub);
        let v = if !in_col_span(&ub, &x) {
            x
        } else if !in_col_span(&ua, &y) {
            y
        } else {
            // x in span(b)-side, y in span(a)-side: the sum avoids both
            x.add(&y)
        };
        debug_assert!(!in_col_span(&ua, &v) && !in_col_span(&ub, &v));
        c = c.hstack(&v);
    }
}

fn first_outside(desc: &ring_core::RingDescriptor, w: usize, span: &ColCanon) -> Matrix {
    for i in 0..w {
        let mut e = Matrix::zeros(desc, w, 1);
        e.set(i, 0, Scalar::one(desc));
        if !in_col_span(span, &e) {
            return e;
        }
    }
    unreachable!("a proper span omits some standard vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::RingDescriptor;

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    fn complements(a: &Matrix, b: &Matrix, c: &Matrix) -> bool {
        let fa = col_canon(a).unwrap().basis().hstack(c);
        let fb = col_canon(b).unwrap().basis().hstack(c);
        is_invertible(&fa) && is_invertible(&fb)
    }

    #[test]
    fn two_lines_in_the_plane() {
        let a = Matrix::from_ints(&q(), &[&[1], &[0]]);
        let b = Matrix::from_ints(&q(), &[&[0], &[1]]);
        let c = find_common_complement(&a, &b).unwrap();
        assert_eq!(c.cols(), 1);
        assert!(complements(&a, &b, &c));
    }

    #[test]
    fn coincident_spans() {
        let a = Matrix::from_ints(&q(), &[&[1, 0], &[0, 1], &[0, 0]]);
        let c = find_common_complement(&a, &a).unwrap();
        assert!(complements(&a, &a, &c));
    }

    #[test]
    fn crossing_planes_in_four_space() {
        let a = Matrix::from_ints(&q(), &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        let b = Matrix::from_ints(&q(), &[&[0, 0], &[0, 1], &[1, 0], &[0, 0]]);
        let c = find_common_complement(&a, &b).unwrap();
        assert_eq!(c.cols(), 2);
        assert!(complements(&a, &b, &c));
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let a = Matrix::from_ints(&q(), &[&[1], &[0]]);
        let b = Matrix::from_ints(&q(), &[&[1, 0], &[0, 1]]);
        assert!(matches!(
            find_common_complement(&a, &b),
            Err(LinalgError::NotFound(_))
        ));
    }

    #[test]
    fn dual_ring_lifts_residue_solution() {
        let d = RingDescriptor::parse("dual:Q").unwrap();
        let e = Scalar::eps(&d).unwrap();
        let one = Scalar::one(&d);
        let a = Matrix::from_rows(&d, vec![vec![one.clone()], vec![e.clone()]]);
        let b = Matrix::from_rows(&d, vec![vec![one.clone()], vec![one.clone().add(&e)]]);
        let c = find_common_complement(&a, &b).unwrap();
        assert!(complements(&a, &b, &c));
    }

    #[test]
    fn modular_small_field() {
        let z5 = RingDescriptor::modular(5).unwrap();
        let a = Matrix::from_ints(&z5, &[&[1], &[2]]);
        let b = Matrix::from_ints(&z5, &[&[1], &[3]]);
        let c = find_common_complement(&a, &b).unwrap();
        assert!(complements(&a, &b, &c));
    }
}
