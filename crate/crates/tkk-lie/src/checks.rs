//! Exhaustive verification of the graded Lie algebra: no sampling, every
//! basis pair and triple is checked through the structure constants.

use ring_core::{CheckOutcome, Scalar};

use crate::error::TkkError;
use crate::lie::GradedLie;

fn fmt_coords(coords: &[Scalar]) -> String {
    let parts: Vec<String> = coords.iter().map(Scalar::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// `[b_i, b_j] = -[b_j, b_i]` on every ordered basis pair.
pub fn check_antisymmetry(lie: &GradedLie) -> CheckOutcome {
    let n = lie.dim();
    let mut out = CheckOutcome::new();
    for i in 0..n {
        for j in i..n {
            let ij = lie.structure_coords(i, j);
            let ji = lie.structure_coords(j, i);
            let ok = ij
                .iter()
                .zip(ji)
                .all(|(a, b)| a.add(b).is_zero());
            out.record(ok, || {
                format!(
                    "[b{i}, b{j}] + [b{j}, b{i}] != 0: {} vs {}",
                    fmt_coords(ij),
                    fmt_coords(ji)
                )
            });
        }
    }
    out
}

/// The Jacobi identity on every unordered basis triple.  Together with
/// antisymmetry and bilinearity this covers the whole algebra.
pub fn check_jacobi(lie: &GradedLie) -> CheckOutcome {
    let n = lie.dim();
    let mut out = CheckOutcome::new();
    let unit = |i: usize| {
        let mut e = vec![Scalar::zero(lie.system().coeff_ring()); n];
        e[i] = Scalar::one(lie.system().coeff_ring());
        e
    };
    for i in 0..n {
        let ei = unit(i);
        for j in (i + 1)..n {
            let ej = unit(j);
            for k in (j + 1)..n {
                let ek = unit(k);
                let mut sum = lie.bracket_coords(&ei, lie.structure_coords(j, k));
                for (s, t) in sum
                    .iter_mut()
                    .zip(lie.bracket_coords(&ej, lie.structure_coords(k, i)))
                {
                    *s = s.add(&t);
                }
                for (s, t) in sum
                    .iter_mut()
                    .zip(lie.bracket_coords(&ek, lie.structure_coords(i, j)))
                {
                    *s = s.add(&t);
                }
                let ok = sum.iter().all(Scalar::is_zero);
                out.record(ok, || {
                    format!(
                        "jacobi sum nonzero at basis triple ({i}, {j}, {k}): {}",
                        fmt_coords(&sum)
                    )
                });
            }
        }
    }
    out
}

/// Brackets land in the grade given by the sum of the argument grades.
pub fn check_grading(lie: &GradedLie) -> CheckOutcome {
    let n = lie.dim();
    let grades = lie.grades();
    let mut out = CheckOutcome::new();
    for i in 0..n {
        for j in 0..n {
            let target = grades[i] as i32 + grades[j] as i32;
            let coords = lie.structure_coords(i, j);
            let ok = coords
                .iter()
                .enumerate()
                .all(|(k, c)| c.is_zero() || grades[k] as i32 == target);
            out.record(ok, || {
                format!(
                    "bracket of grades ({}, {}) leaves grade {target}: {}",
                    grades[i],
                    grades[j],
                    fmt_coords(coords)
                )
            });
        }
    }
    out
}

/// Double brackets of embedded elements recover both triple products on
/// every basis triple.
pub fn check_triple_recovery(lie: &GradedLie) -> CheckOutcome {
    let sys = lie.system();
    let plus = sys.plus_basis();
    let minus = sys.minus_basis();
    let mut out = CheckOutcome::new();
    for (i, x) in plus.iter().enumerate() {
        for (j, y) in minus.iter().enumerate() {
            let inner = lie.bracket(&lie.embed_plus(x), &lie.embed_minus(y));
            for (k, z) in plus.iter().enumerate() {
                let lhs = lie.bracket(&inner, &lie.embed_plus(z));
                let rhs = lie.embed_plus(&sys.triple_plus(x, y, z));
                out.record(lhs == rhs, || {
                    format!("[[x{i}, y{j}], x{k}] missed the plus triple product")
                });
            }
        }
    }
    for (i, w) in minus.iter().enumerate() {
        for (j, x) in plus.iter().enumerate() {
            let inner = lie.bracket(&lie.embed_minus(w), &lie.embed_plus(x));
            for (k, y) in minus.iter().enumerate() {
                let lhs = lie.bracket(&inner, &lie.embed_minus(y));
                let rhs = lie.embed_minus(&sys.triple_minus(w, x, y));
                out.record(lhs == rhs, || {
                    format!("[[y{i}, x{j}], y{k}] missed the minus triple product")
                });
            }
        }
    }
    out
}

/// The swap involution: order two, bracket-preserving, grade-reversing.
pub fn check_grade_reversal(lie: &GradedLie) -> Result<CheckOutcome, TkkError> {
    let mut out = CheckOutcome::new();
    let basis = lie.basis();
    for (i, b) in basis.iter().enumerate() {
        let t = lie.theta(b)?;
        out.record(lie.theta(&t)? == *b, || format!("theta^2 != id at basis index {i}"));
        let g = lie.grades()[i];
        let reversed = match g {
            1 => t.plus.is_zero() && !t.minus.is_zero(),
            -1 => t.minus.is_zero() && !t.plus.is_zero(),
            _ => t.plus.is_zero() && t.minus.is_zero(),
        };
        out.record(reversed, || format!("theta does not reverse the grading at index {i}"));
    }
    for (i, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(i) {
            let lhs = lie.theta(&lie.bracket(a, b))?;
            let rhs = lie.bracket(&lie.theta(a)?, &lie.theta(b)?);
            out.record(lhs == rhs, || {
                format!("theta[a,b] != [theta a, theta b] at a basis pair near index {i}")
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::BracketMutation;
    use jordan_core::TripleSystem;
    use ring_core::RingDescriptor;

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    fn lie(fam: &str, ring: &str) -> GradedLie {
        let desc = RingDescriptor::parse(ring).unwrap();
        GradedLie::new(TripleSystem::parse(fam, &desc).unwrap()).unwrap()
    }

    #[test]
    fn small_rectangles_satisfy_everything() {
        for fam in ["rect:1x1", "rect:1x2", "rect:2x2"] {
            let l = lie(fam, "Q");
            assert!(check_antisymmetry(&l).is_pass(), "{fam} antisymmetry");
            assert!(check_jacobi(&l).is_pass(), "{fam} jacobi");
            assert!(check_grading(&l).is_pass(), "{fam} grading");
            assert!(check_triple_recovery(&l).is_pass(), "{fam} recovery");
        }
    }

    #[test]
    fn works_over_prime_fields_and_dual_numbers() {
        for ring in ["Zmod:7", "dual:Q"] {
            let l = lie("rect:1x2", ring);
            assert!(check_jacobi(&l).is_pass(), "{ring}");
            assert!(check_triple_recovery(&l).is_pass(), "{ring}");
        }
    }

    #[test]
    fn unary_families_carry_the_swap_involution() {
        for fam in ["full:2", "sym:2", "spin:3", "rect:2x2"] {
            let l = lie(fam, "Q");
            let out = check_grade_reversal(&l).unwrap();
            assert!(out.is_pass(), "{fam}");
        }
        let rect = lie("rect:1x2", "Q");
        assert!(check_grade_reversal(&rect).is_err());
    }

    #[test]
    fn flipped_delta_breaks_jacobi_with_witness() {
        let sys = TripleSystem::parse("rect:1x2", &q()).unwrap();
        let l = GradedLie::with_mutation(sys, BracketMutation::FlipDeltaTerm).unwrap();
        let anti = check_antisymmetry(&l);
        assert!(anti.failed > 0);
        let jac = check_jacobi(&l);
        assert!(jac.failed > 0);
        assert!(!jac.witnesses.is_empty());
    }
}
