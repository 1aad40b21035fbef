//! Inner ideals: subspaces `I` of the plus side with `T(I, V-, I)` inside `I`.
//!
//! The containment is trilinear in its three slots, so checking every basis
//! triple decides it completely; no sampling is involved.

use linalg_exact::{col_canon, in_col_span, LinalgError, Matrix};
use ring_core::CheckOutcome;

use crate::error::JordanError;
use crate::family::{render, TripleSystem};

/// Decide whether the span of `ideal` is an inner ideal.  The result counts
/// one comparison per basis triple and carries witnesses for escapes.
pub fn check_inner_ideal(
    sys: &TripleSystem,
    ideal: &[Matrix],
) -> Result<CheckOutcome, JordanError> {
    let coords = ideal.iter().map(|m| sys.plus_coord_column(m)).collect::<Vec<_>>();
    let mut span = Matrix::zeros(sys.coeff_ring(), sys.plus_dim(), 0);
    for c in &coords {
        span = span.hstack(c);
    }
    let span = col_canon(&span).map_err(|e| match e {
        LinalgError::NoUnitPivot => {
            JordanError::Unsupported("ideal span admits no unit-pivot basis".into())
        }
        other => JordanError::Unsupported(other.to_string()),
    })?;

    let mut out = CheckOutcome::new();
    let middle = sys.minus_basis();
    for i1 in ideal {
        for v in &middle {
            for i2 in ideal {
                let t = sys.triple_plus(i1, v, i2);
                let inside = in_col_span(&span, &sys.plus_coord_column(&t));
                out.record(inside, || {
                    format!(
                        "T(i1, v, i2) escapes the span at i1={}, v={}, i2={}, T={}",
                        render(i1),
                        render(v),
                        render(i2),
                        render(&t)
                    )
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::RingDescriptor;

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    #[test]
    fn corner_span_is_an_inner_ideal() {
        let sys = TripleSystem::parse("full:2", &q()).unwrap();
        let e11 = Matrix::from_ints(&q(), &[&[1, 0], &[0, 0]]);
        let out = check_inner_ideal(&sys, &[e11]).unwrap();
        assert!(out.is_pass());
        assert_eq!(out.samples(), 4); // 1 x 4 x 1 basis triples
    }

    #[test]
    fn whole_space_is_an_inner_ideal() {
        let sys = TripleSystem::parse("full:2", &q()).unwrap();
        let out = check_inner_ideal(&sys, &sys.plus_basis()).unwrap();
        assert!(out.is_pass());
    }

    #[test]
    fn scalar_span_is_not_an_inner_ideal() {
        let sys = TripleSystem::parse("full:2", &q()).unwrap();
        let id = Matrix::identity(&q(), 2);
        let out = check_inner_ideal(&sys, &[id]).unwrap();
        assert!(!out.is_pass());
        // T(I, E12, I) = 2 E12 leaves span{I}
        assert!(out.witnesses[0].contains("escapes"));
    }
}
