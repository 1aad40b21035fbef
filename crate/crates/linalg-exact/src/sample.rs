//! Seeded random matrices for property checks.

use rand::Rng;
use ring_core::{sample_scalar, sample_unit, RingDescriptor, Scalar};

use crate::det::is_invertible;
use crate::echelon::rank;
use crate::matrix::Matrix;

const MAX_DRAWS: usize = 10_000;

pub fn sample_matrix<R: Rng>(
    desc: &RingDescriptor,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Matrix {
    Matrix::from_fn(desc, rows, cols, |_, _| sample_scalar(desc, rng))
}

/// A random unit of the ring; small coefficients, never zero.
pub fn sample_unit_scalar<R: Rng>(desc: &RingDescriptor, rng: &mut R) -> Scalar {
    sample_unit(desc, rng)
}

/// Rejection-sample a matrix whose columns are independent with unit pivots.
pub fn sample_full_col_rank<R: Rng>(
    desc: &RingDescriptor,
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Matrix {
    assert!(cols <= rows, "cannot have {cols} independent columns in {rows} rows");
    for _ in 0..MAX_DRAWS {
        let m = sample_matrix(desc, rows, cols, rng);
        if rank(&m).map(|r| r == cols).unwrap_or(false) {
            return m;
        }
    }
    unreachable!("full-rank sampling failed after {MAX_DRAWS} draws")
}

pub fn sample_invertible<R: Rng>(desc: &RingDescriptor, n: usize, rng: &mut R) -> Matrix {
    for _ in 0..MAX_DRAWS {
        let m = sample_matrix(desc, n, n, rng);
        if is_invertible(&m) {
            return m;
        }
    }
    unreachable!("invertible sampling failed after {MAX_DRAWS} draws")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::seeded_rng;

    #[test]
    fn sampled_invertibles_invert() {
        for name in ["Q", "Qi", "Zmod:5", "dual:Q"] {
            let desc = RingDescriptor::parse(name).unwrap();
            let mut rng = seeded_rng(7);
            for _ in 0..10 {
                let m = sample_invertible(&desc, 3, &mut rng);
                let inv = crate::det::invert(&m).unwrap();
                assert_eq!(m.mul(&inv), Matrix::identity(&desc, 3), "over {name}");
            }
        }
    }

    #[test]
    fn sampled_tall_matrices_have_unit_pivot_spans() {
        let desc = RingDescriptor::parse("dual:Q").unwrap();
        let mut rng = seeded_rng(11);
        for _ in 0..10 {
            let m = sample_full_col_rank(&desc, 4, 2, &mut rng);
            let c = crate::echelon::col_canon(&m).unwrap();
            assert_eq!(c.rank, 2);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let desc = RingDescriptor::rational();
        let a = sample_matrix(&desc, 2, 2, &mut seeded_rng(3));
        let b = sample_matrix(&desc, 2, 2, &mut seeded_rng(3));
        assert_eq!(a, b);
    }
}
