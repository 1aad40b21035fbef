//! Element invertibility, inverses and isotope units.
//!
//! An element is invertible exactly when its quadratic operator, written as
//! a matrix over the coefficient ring, has unit determinant.  The inverse
//! (the unit of the isotope product with that element in the middle slot)
//! is recovered by applying the inverted operator to the element itself.

use linalg_exact::{invert, is_invertible, Matrix};
use ring_core::Scalar;

use crate::error::JordanError;
use crate::family::TripleSystem;

pub fn is_invertible_element(sys: &TripleSystem, x: &Matrix) -> bool {
    let op = sys.quadratic_operator(x);
    op.is_square() && is_invertible(&op)
}

/// `Q(x)^{-1} x`: the unit of the product `a, b -> (1/2) T(a, x, b)`.
pub fn isotope_unit(sys: &TripleSystem, x: &Matrix) -> Result<Matrix, JordanError> {
    let op = sys.quadratic_operator(x);
    if !op.is_square() {
        return Err(JordanError::NotInvertible);
    }
    let inv = invert(&op).map_err(|_| JordanError::NotInvertible)?;
    Ok(sys.minus_from_column(&inv.mul(&sys.plus_coord_column(x))))
}

/// The commutative product of the isotope determined by the middle element.
pub fn isotope_product(sys: &TripleSystem, a: &Matrix, b: &Matrix, middle: &Matrix) -> Matrix {
    sys.triple_plus(a, middle, b).scale(&Scalar::half(sys.ring()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::{seeded_rng, RingDescriptor};

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    #[test]
    fn scalar_two_inverts_to_one_half() {
        let sys = TripleSystem::parse("rect:1x1", &q()).unwrap();
        let two = Matrix::from_ints(&q(), &[&[2]]);
        assert!(is_invertible_element(&sys, &two));
        let e = isotope_unit(&sys, &two).unwrap();
        assert_eq!(e.get(0, 0), &Scalar::from_ratio(&q(), 1, 2));
        // the isotope product with middle 2 is (a, b) -> 2ab, with unit 1/2
        let y = Matrix::from_ints(&q(), &[&[7]]);
        assert_eq!(isotope_product(&sys, &e, &y, &two), y);
    }

    #[test]
    fn identity_gives_back_the_bullet() {
        let sys = TripleSystem::parse("full:2", &q()).unwrap();
        let id = Matrix::identity(&q(), 2);
        assert!(is_invertible_element(&sys, &id));
        assert_eq!(isotope_unit(&sys, &id).unwrap(), id);
        let mut rng = seeded_rng(13);
        for _ in 0..20 {
            let a = sys.sample_plus(&mut rng);
            let b = sys.sample_plus(&mut rng);
            assert_eq!(isotope_product(&sys, &a, &b, &id), sys.bullet(&a, &b).unwrap());
        }
    }

    #[test]
    fn wide_rectangles_are_never_invertible() {
        let sys = TripleSystem::parse("rect:1x2", &q()).unwrap();
        let mut rng = seeded_rng(19);
        for _ in 0..100 {
            let x = sys.sample_plus(&mut rng);
            assert!(!is_invertible_element(&sys, &x));
        }
    }

    #[test]
    fn isotope_unit_is_a_unit_on_the_basis() {
        for fam in ["full:2", "sym:2"] {
            let sys = TripleSystem::parse(fam, &q()).unwrap();
            let mut rng = seeded_rng(37);
            let mut found = 0;
            while found < 10 {
                let x = sys.sample_plus(&mut rng);
                if !is_invertible_element(&sys, &x) {
                    continue;
                }
                found += 1;
                let e = isotope_unit(&sys, &x).unwrap();
                for b in sys.plus_basis() {
                    assert_eq!(isotope_product(&sys, &e, &b, &x), b, "{fam}");
                }
            }
        }
    }
}
