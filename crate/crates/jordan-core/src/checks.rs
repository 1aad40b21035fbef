//! Exact law checkers.  Every checker evaluates both sides of its law on
//! seeded samples and records witnesses for failures.

use linalg_exact::Matrix;
use rand::Rng;
use ring_core::CheckOutcome;

use crate::error::JordanError;
use crate::family::{render, Family, TripleSystem};

/// Symmetry of the triple product in its outer arguments.
pub fn check_triple_symmetry<R: Rng>(
    sys: &TripleSystem,
    samples: usize,
    rng: &mut R,
) -> CheckOutcome {
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = sys.sample_plus(rng);
        let y = sys.sample_minus(rng);
        let z = sys.sample_plus(rng);
        let ok = sys.triple_plus(&x, &y, &z) == sys.triple_plus(&z, &y, &x);
        out.record(ok, || {
            format!("T(x,y,z) != T(z,y,x) at x={}, y={}, z={}", render(&x), render(&y), render(&z))
        });
    }
    out
}

/// The five-variable exchange law relating left multiplications.
pub fn check_triple_exchange<R: Rng>(
    sys: &TripleSystem,
    samples: usize,
    rng: &mut R,
) -> CheckOutcome {
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let a = sys.sample_plus(rng);
        let b = sys.sample_minus(rng);
        let x = sys.sample_plus(rng);
        let y = sys.sample_minus(rng);
        let z = sys.sample_plus(rng);
        let lhs = sys.triple_plus(&a, &b, &sys.triple_plus(&x, &y, &z));
        let rhs = sys
            .triple_plus(&sys.triple_plus(&a, &b, &x), &y, &z)
            .sub(&sys.triple_plus(&x, &sys.triple_minus(&b, &a, &y), &z))
            .add(&sys.triple_plus(&x, &y, &sys.triple_plus(&a, &b, &z)));
        out.record(lhs == rhs, || {
            format!(
                "exchange law failed at a={}, b={}, x={}, y={}, z={}",
                render(&a),
                render(&b),
                render(&x),
                render(&y),
                render(&z)
            )
        });
        if matches!(sys.family(), Family::Rect(_, _)) {
            // the mirrored law on the minus side
            let w = sys.sample_minus(rng);
            let lhs = sys.triple_minus(&b, &a, &sys.triple_minus(&y, &x, &w));
            let rhs = sys
                .triple_minus(&sys.triple_minus(&b, &a, &y), &x, &w)
                .sub(&sys.triple_minus(&y, &sys.triple_plus(&a, &b, &x), &w))
                .add(&sys.triple_minus(&y, &x, &sys.triple_minus(&b, &a, &w)));
            out.record(lhs == rhs, || {
                format!(
                    "mirrored exchange law failed at a={}, b={}, x={}, y={}, w={}",
                    render(&a),
                    render(&b),
                    render(&x),
                    render(&y),
                    render(&w)
                )
            });
        }
    }
    out
}

/// Commutativity, the unit law and the degree-two identity for the
/// commutative product.
pub fn check_jordan_identity<R: Rng>(
    sys: &TripleSystem,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, JordanError> {
    let unit = sys.unit()?;
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = sys.sample_plus(rng);
        let y = sys.sample_plus(rng);
        let commutes = sys.bullet(&x, &y)? == sys.bullet(&y, &x)?;
        out.record(commutes, || {
            format!("x*y != y*x at x={}, y={}", render(&x), render(&y))
        });
        let unital = sys.bullet(&unit, &x)? == x;
        out.record(unital, || format!("e*x != x at x={}", render(&x)));
        let x2 = sys.square(&x)?;
        let lhs = sys.bullet(&sys.bullet(&x2, &y)?, &x)?;
        let rhs = sys.bullet(&x2, &sys.bullet(&y, &x)?)?;
        out.record(lhs == rhs, || {
            format!("(x^2*y)*x != x^2*(y*x) at x={}, y={}", render(&x), render(&y))
        });
    }
    Ok(out)
}

/// The quadratic map is multiplicative through itself: the composite of
/// `Q(x)`, `Q(y)`, `Q(x)` equals `Q(Q(x)y)` as linear maps on a full basis.
pub fn check_fundamental<R: Rng>(
    sys: &TripleSystem,
    samples: usize,
    rng: &mut R,
) -> CheckOutcome {
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = sys.sample_plus(rng);
        let y = sys.sample_minus(rng);
        let qx = sys.quadratic_operator(&x);
        let qy = sys.quadratic_operator_minus(&y);
        let lhs = sys.quadratic_operator(&sys.quadratic_plus(&x, &y));
        let rhs = qx.mul(&qy).mul(&qx);
        out.record(lhs == rhs, || {
            format!(
                "Q(Q(x)y) != Q(x)Q(y)Q(x) as operators at x={}, y={}",
                render(&x),
                render(&y)
            )
        });
    }
    out
}

/// Antisymmetry, the cyclic sum and the derivation law for the bracket
/// `[x,y,z] = T(x,y,z) - T(y,x,z)`.
pub fn check_lie_triple<R: Rng>(
    sys: &TripleSystem,
    samples: usize,
    rng: &mut R,
) -> CheckOutcome {
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = sys.sample_plus(rng);
        let y = sys.sample_plus(rng);
        let z = sys.sample_plus(rng);
        let a = sys.sample_plus(rng);
        let b = sys.sample_plus(rng);

        let anti = sys.jordan_lie(&x, &y, &z) == sys.jordan_lie(&y, &x, &z).neg();
        out.record(anti, || {
            format!("[x,y,z] != -[y,x,z] at x={}, y={}, z={}", render(&x), render(&y), render(&z))
        });

        let cyclic = sys
            .jordan_lie(&x, &y, &z)
            .add(&sys.jordan_lie(&y, &z, &x))
            .add(&sys.jordan_lie(&z, &x, &y));
        out.record(cyclic.is_zero(), || {
            format!(
                "cyclic sum nonzero at x={}, y={}, z={}",
                render(&x),
                render(&y),
                render(&z)
            )
        });

        let lhs = sys.jordan_lie(&a, &b, &sys.jordan_lie(&x, &y, &z));
        let rhs = sys
            .jordan_lie(&sys.jordan_lie(&a, &b, &x), &y, &z)
            .add(&sys.jordan_lie(&x, &sys.jordan_lie(&a, &b, &y), &z))
            .add(&sys.jordan_lie(&x, &y, &sys.jordan_lie(&a, &b, &z)));
        out.record(lhs == rhs, || {
            format!(
                "bracket is not a derivation at a={}, b={}, x={}, y={}, z={}",
                render(&a),
                render(&b),
                render(&x),
                render(&y),
                render(&z)
            )
        });
    }
    out
}

/// On the full matrix family the bracket collapses to nested commutators.
pub fn check_commutator_model<R: Rng>(
    sys: &TripleSystem,
    samples: usize,
    rng: &mut R,
) -> Result<CheckOutcome, JordanError> {
    if !matches!(sys.family(), Family::Full(_)) {
        return Err(JordanError::Unsupported(format!(
            "commutator comparison needs the full matrix family, got {}",
            sys.family()
        )));
    }
    let comm = |a: &Matrix, b: &Matrix| a.mul(b).sub(&b.mul(a));
    let mut out = CheckOutcome::new();
    for _ in 0..samples {
        let x = sys.sample_plus(rng);
        let y = sys.sample_plus(rng);
        let z = sys.sample_plus(rng);
        let ok = sys.jordan_lie(&x, &y, &z) == comm(&comm(&x, &y), &z);
        out.record(ok, || {
            format!(
                "[x,y,z] != [[x,y],z] at x={}, y={}, z={}",
                render(&x),
                render(&y),
                render(&z)
            )
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::TripleMutation;
    use linalg_exact::Matrix;
    use ring_core::{seeded_rng, RingDescriptor};

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    #[test]
    fn laws_hold_across_the_catalogue() {
        for (fam, ring) in [
            ("full:2", "Q"),
            ("full:3", "Zmod:7"),
            ("sym:3", "Q"),
            ("skew:4", "dual:Q"),
            ("spin:4", "Q"),
            ("spin:3", "Zmod:5"),
            ("rect:2x3", "Q"),
            ("herm:2", "Qi"),
        ] {
            let desc = RingDescriptor::parse(ring).unwrap();
            let sys = TripleSystem::parse(fam, &desc).unwrap();
            let mut rng = seeded_rng(31);
            assert!(check_triple_symmetry(&sys, 25, &mut rng).is_pass(), "{fam} symmetry");
            assert!(check_triple_exchange(&sys, 10, &mut rng).is_pass(), "{fam} exchange");
            assert!(check_fundamental(&sys, 5, &mut rng).is_pass(), "{fam} fundamental");
            if sys.family().has_bullet() {
                assert!(
                    check_jordan_identity(&sys, 25, &mut rng).unwrap().is_pass(),
                    "{fam} jordan identity"
                );
            }
        }
    }

    #[test]
    fn exchange_law_scalar_spot_check() {
        // all five arguments 1: each nested product is T(1,1,2) = 4 and the
        // law reads 4 = 4 - 4 + 4
        let sys = TripleSystem::parse("rect:1x1", &q()).unwrap();
        let one = Matrix::from_ints(&q(), &[&[1]]);
        let t111 = sys.triple_plus(&one, &one, &one);
        assert_eq!(t111, Matrix::from_ints(&q(), &[&[2]]));
        let lhs = sys.triple_plus(&one, &one, &t111);
        assert_eq!(lhs, Matrix::from_ints(&q(), &[&[4]]));
        let rhs = sys
            .triple_plus(&t111, &one, &one)
            .sub(&sys.triple_plus(&one, &t111, &one))
            .add(&sys.triple_plus(&one, &one, &t111));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_triple_laws_and_commutator_model() {
        let sys = TripleSystem::parse("full:2", &q()).unwrap();
        let mut rng = seeded_rng(17);
        assert!(check_lie_triple(&sys, 30, &mut rng).is_pass());
        assert!(check_commutator_model(&sys, 30, &mut rng).unwrap().is_pass());
        let sym = TripleSystem::parse("sym:2", &q()).unwrap();
        assert!(check_commutator_model(&sym, 5, &mut rng).is_err());
    }

    #[test]
    fn flipped_triple_term_is_detected() {
        let sys = TripleSystem::parse("full:2", &q())
            .unwrap()
            .with_mutation(TripleMutation::FlipSecondTerm);
        let mut rng = seeded_rng(23);
        let sym = check_triple_symmetry(&sys, 40, &mut rng);
        assert!(sym.failed > 0);
        assert!(!sym.witnesses.is_empty());
        let exch = check_triple_exchange(&sys, 40, &mut rng);
        assert!(exch.failed > 0);
    }

    #[test]
    fn dropped_spin_term_breaks_the_unit_law() {
        let clean = TripleSystem::parse("spin:4", &q()).unwrap();
        let mut rng = seeded_rng(29);
        assert!(check_jordan_identity(&clean, 40, &mut rng).unwrap().is_pass());

        let broken = clean.clone().with_mutation(TripleMutation::DropSpinCorrection);
        let mut rng = seeded_rng(29);
        let out = check_jordan_identity(&broken, 40, &mut rng).unwrap();
        assert!(out.failed > 0);
        assert!(out.witnesses.iter().any(|w| w.contains("e*x != x")));
    }
}
