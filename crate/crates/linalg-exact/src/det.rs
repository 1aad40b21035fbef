//! Determinants and inverses over the supported rings.
//!
//! The primary path is fraction-free only in spirit: every ring here has
//! exact division by units, so classical elimination with unit pivots is
//! both exact and fast.  When elimination stalls over a field the
//! determinant is zero.  Over a ring with nilpotents a stall does not
//! decide the determinant, so a division-free expansion over column
//! subsets takes over (practical up to moderate sizes, which is all the
//! callers need).

use ring_core::Scalar;

use crate::error::LinalgError;
use crate::matrix::Matrix;

const SUBSET_DP_MAX: usize = 16;

/// Exact determinant of a square matrix.
pub fn det(m: &Matrix) -> Scalar {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let desc = m.descriptor().clone();
    let n = m.rows();
    if n == 0 {
        return Scalar::one(&desc);
    }
    let mut a = m.clone();
    let mut acc = Scalar::one(&desc);
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| a.get(i, c).is_unit()) else {
            // no unit pivot: over a field every remaining entry in this
            // column is zero, hence det = 0; otherwise fall back
            if (c..n).all(|i| a.get(i, c).is_zero()) {
                return Scalar::zero(&desc);
            }
            if !m.descriptor().kind().has_zero_divisors() {
                return Scalar::zero(&desc);
            }
            return subset_expansion(m);
        };
        if p != c {
            a.swap_rows(c, p);
            acc = acc.neg();
        }
        let pivot = a.get(c, c).clone();
        acc = acc.mul(&pivot);
        let inv = pivot.invert().expect("pivot is a unit");
        for i in (c + 1)..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).mul(&inv);
            a.row_axpy(i, c, &f);
        }
    }
    acc
}

/// Division-free determinant via dynamic programming over column subsets.
///
/// `dp[S]` is the determinant of the top `|S|` rows restricted to columns
/// `S`; expanding along the last of those rows gives the recursion.
fn subset_expansion(m: &Matrix) -> Scalar {
    let desc = m.descriptor().clone();
    let n = m.rows();
    assert!(
        n <= SUBSET_DP_MAX,
        "division-free determinant limited to {SUBSET_DP_MAX}x{SUBSET_DP_MAX}"
    );
    let mut dp = vec![Scalar::zero(&desc); 1usize << n];
    dp[0] = Scalar::one(&desc);
    for s in 1..(1usize << n) {
        let row = (s as u32).count_ones() as usize - 1;
        let mut acc = Scalar::zero(&desc);
        let mut sign_flip = false;
        // Laplace expansion along the bottom row of the block: the cofactor
        // sign is (-1)^((|s|-1) + pos) with pos the column's index inside
        // the subset, so scanning set bits from high to low starts at +
        for j in (0..n).rev() {
            if s & (1 << j) == 0 {
                continue;
            }
            let entry = m.get(row, j);
            if !entry.is_zero() {
                let term = entry.mul(&dp[s & !(1 << j)]);
                acc = if sign_flip { acc.sub(&term) } else { acc.add(&term) };
            }
            sign_flip = !sign_flip;
        }
        dp[s] = acc;
    }
    dp[(1usize << n) - 1].clone()
}

/// True when the matrix has a two-sided inverse.
pub fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && det(m).is_unit()
}

/// Exact inverse; reports the determinant when it is not a unit.
pub fn invert(m: &Matrix) -> Result<Matrix, LinalgError> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let e = crate::echelon::row_echelon(m);
    if e.rank == n && !e.stalled {
        return Ok(e.transform);
    }
    let d = det(m);
    debug_assert!(!d.is_unit());
    Err(LinalgError::NonInvertible { det: Box::new(d) })
}
