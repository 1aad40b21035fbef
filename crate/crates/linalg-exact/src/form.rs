//! Bilinear and sesquilinear forms with symmetry validation.

use ring_core::Scalar;

use crate::echelon::{col_canon, kernel};
use crate::error::LinalgError;
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormSymmetry {
    Symmetric,
    Skew,
    /// Sesquilinear, conjugate-linear in the first slot.
    Hermitian,
}

/// A form on column vectors given by its Gram matrix.
#[derive(Debug, Clone)]
pub struct Form {
    gram: Matrix,
    symmetry: FormSymmetry,
}

impl Form {
    pub fn new(gram: Matrix, symmetry: FormSymmetry) -> Result<Self, LinalgError> {
        if !gram.is_square() {
            return Err(LinalgError::InvalidForm("gram matrix must be square".into()));
        }
        let ok = match symmetry {
            FormSymmetry::Symmetric => gram.transpose() == gram,
            FormSymmetry::Skew => gram.transpose() == gram.neg(),
            FormSymmetry::Hermitian => {
                if !gram.descriptor().is_involutive() {
                    return Err(LinalgError::InvalidForm(
                        "hermitian form needs a ring with conjugation".into(),
                    ));
                }
                gram.conj_transpose() == gram
            }
        };
        if !ok {
            return Err(LinalgError::InvalidForm(format!(
                "gram matrix violates {symmetry:?} symmetry"
            )));
        }
        Ok(Form { gram, symmetry })
    }

    /// Standard dot product on `n` coordinates.
    pub fn dot(desc: &ring_core::RingDescriptor, n: usize) -> Self {
        let symmetry = if desc.is_involutive() {
            FormSymmetry::Hermitian
        } else {
            FormSymmetry::Symmetric
        };
        Form { gram: Matrix::identity(desc, n), symmetry }
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn symmetry(&self) -> FormSymmetry {
        self.symmetry
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// Evaluate on two column vectors.
    pub fn evaluate(&self, x: &Matrix, y: &Matrix) -> Scalar {
        assert_eq!(x.cols(), 1, "expected a column vector");
        assert_eq!(y.cols(), 1, "expected a column vector");
        let left = match self.symmetry {
            FormSymmetry::Hermitian => x.conj_transpose(),
            _ => x.transpose(),
        };
        left.mul(&self.gram).mul(y).get(0, 0).clone()
    }

    /// Rows whose kernel is the orthogonal complement of the column span `u`.
    pub fn adjoint_rows(&self, u: &Matrix) -> Matrix {
        let left = match self.symmetry {
            FormSymmetry::Hermitian => u.conj_transpose(),
            _ => u.transpose(),
        };
        left.mul(&self.gram)
    }
}

/// Canonical basis of `{ v : form(u, v) = 0 for all u in span }`.
pub fn orth_complement(form: &Form, sub: &Matrix) -> Result<Matrix, LinalgError> {
    assert_eq!(sub.rows(), form.dim(), "subspace lives in the wrong dimension");
    let ker = kernel(&form.adjoint_rows(sub))?;
    Ok(col_canon(&ker)?.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::echelon::subspace_equal;
    use ring_core::RingDescriptor;

    fn q() -> RingDescriptor {
        RingDescriptor::rational()
    }

    #[test]
    fn dot_complement_in_three_space() {
        let f = Form::dot(&q(), 3);
        let u = Matrix::from_ints(&q(), &[&[1], &[0], &[0]]);
        let c = orth_complement(&f, &u).unwrap();
        let expect = Matrix::from_ints(&q(), &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(subspace_equal(&c, &expect).unwrap());
    }

    #[test]
    fn hyperbolic_line_is_self_orthogonal() {
        let g = Matrix::from_ints(&q(), &[&[0, 1], &[1, 0]]);
        let f = Form::new(g, FormSymmetry::Symmetric).unwrap();
        let u = Matrix::from_ints(&q(), &[&[1], &[0]]);
        let c = orth_complement(&f, &u).unwrap();
        assert!(subspace_equal(&c, &u).unwrap());
    }

    #[test]
    fn double_complement_recovers_subspace() {
        let g = Matrix::from_ints(&q(), &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 2]]);
        let f = Form::new(g, FormSymmetry::Symmetric).unwrap();
        let u = Matrix::from_ints(&q(), &[&[1, 0], &[2, 1], &[0, 3]]);
        let c = orth_complement(&f, &u).unwrap();
        let cc = orth_complement(&f, &c).unwrap();
        assert!(subspace_equal(&cc, &u).unwrap());
    }

    #[test]
    fn hermitian_validation_and_evaluation() {
        let qi = RingDescriptor::gaussian_rational();
        let i = Scalar::i(&qi).unwrap();
        let zero = Scalar::zero(&qi);
        let g = Matrix::from_rows(&qi, vec![vec![zero.clone(), i.clone()], vec![i.neg(), zero]]);
        let f = Form::new(g, FormSymmetry::Hermitian).unwrap();
        let x = Matrix::from_rows(&qi, vec![vec![Scalar::one(&qi)], vec![i.clone()]]);
        // conj(x)^T G x = (1, -i) . (-1, -i) = -2
        let v = f.evaluate(&x, &x);
        assert_eq!(v.to_string(), "-2");

        // hermitian symmetry fails without conjugation available
        let g2 = Matrix::identity(&q(), 2);
        assert!(matches!(
            Form::new(g2, FormSymmetry::Hermitian),
            Err(LinalgError::InvalidForm(_))
        ));
    }

    #[test]
    fn skew_validation() {
        let good = Matrix::from_ints(&q(), &[&[0, 1], &[-1, 0]]);
        assert!(Form::new(good, FormSymmetry::Skew).is_ok());
        let bad = Matrix::from_ints(&q(), &[&[0, 1], &[1, 0]]);
        assert!(Form::new(bad, FormSymmetry::Skew).is_err());
    }
}
