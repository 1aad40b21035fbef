//! Gauss-Jordan elimination with explicit unit-pivot search.
//!
//! Pivots are chosen greedily: for each column (scanning left to right) the
//! first remaining row holding a *unit* is promoted.  Over a local ring the
//! non-units form an ideal, so a column with no unit entry among the
//! remaining rows cannot acquire one by row operations; skipping it is sound
//! and the greedy pivot columns depend only on the row span.  The fully
//! reduced form with unit pivots is therefore a canonical representative of
//! the row span whenever it exists.

use ring_core::Scalar;

use crate::error::LinalgError;
use crate::matrix::Matrix;

/// Result of full row reduction (Gauss-Jordan, unit pivots).
#[derive(Debug, Clone)]
pub struct RowEchelon {
    /// The reduced matrix, `reduced = transform * input`.
    pub reduced: Matrix,
    /// Invertible square account of the row operations.
    pub transform: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// True when a nonzero row remains without a unit pivot (local rings only).
    pub stalled: bool,
}

/// Row-reduce with unit pivots; never fails, but may report a stall.
pub fn row_echelon(m: &Matrix) -> RowEchelon {
    let desc = m.descriptor().clone();
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut r = m.clone();
    let mut t = Matrix::identity(&desc, nrows);
    let mut pivot_cols = Vec::new();
    let mut rank = 0usize;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| r.get(i, c).is_unit()) else {
            continue;
        };
        r.swap_rows(rank, p);
        t.swap_rows(rank, p);
        let inv = r.get(rank, c).invert().expect("pivot is a unit");
        r.scale_row(rank, &inv);
        t.scale_row(rank, &inv);
        for i in 0..nrows {
            if i != rank && !r.get(i, c).is_zero() {
                let f = r.get(i, c).clone();
                r.row_axpy(i, rank, &f);
                t.row_axpy(i, rank, &f);
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    let stalled = (rank..nrows).any(|i| (0..ncols).any(|j| !r.get(i, j).is_zero()));
    RowEchelon { reduced: r, transform: t, rank, pivot_cols, stalled }
}

/// Canonical reduced form of a row span.  Zero rows are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCanon {
    /// `rank` rows spanning the same row space as the input.
    pub canon: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Invertible, with `canon` equal to the leading rows of `transform * input`.
    pub transform: Matrix,
}

/// Canonicalise a row span; fails with [`LinalgError::NoUnitPivot`] when the
/// span is not a free direct summand.
pub fn row_canon(m: &Matrix) -> Result<RowCanon, LinalgError> {
    let e = row_echelon(m);
    if e.stalled {
        return Err(LinalgError::NoUnitPivot);
    }
    let canon = Matrix::from_fn(m.descriptor(), e.rank, m.cols(), |i, j| {
        e.reduced.get(i, j).clone()
    });
    Ok(RowCanon { canon, rank: e.rank, pivot_cols: e.pivot_cols, transform: e.transform })
}

/// Canonical reduced form of a column span (transposed convention).
///
/// `canon = input * transform` with `transform` invertible; zero columns sit
/// at the right and are *not* trimmed, so the shape matches the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColCanon {
    pub canon: Matrix,
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
    pub transform: Matrix,
}

impl ColCanon {
    /// The canonical basis columns (zero columns dropped).
    pub fn basis(&self) -> Matrix {
        self.canon.slice_cols(0, self.rank)
    }
}

pub fn col_canon(m: &Matrix) -> Result<ColCanon, LinalgError> {
    let e = row_echelon(&m.transpose());
    if e.stalled {
        return Err(LinalgError::NoUnitPivot);
    }
    Ok(ColCanon {
        canon: e.reduced.transpose(),
        rank: e.rank,
        pivot_rows: e.pivot_cols,
        transform: e.transform.transpose(),
    })
}

/// Rank of a matrix; `NoUnitPivot` when elimination stalls over a local ring.
pub fn rank(m: &Matrix) -> Result<usize, LinalgError> {
    let e = row_echelon(m);
    if e.stalled {
        return Err(LinalgError::NoUnitPivot);
    }
    Ok(e.rank)
}

/// Basis of the right kernel `{v : m v = 0}` as columns.
pub fn kernel(m: &Matrix) -> Result<Matrix, LinalgError> {
    let desc = m.descriptor().clone();
    let e = row_echelon(m);
    if e.stalled {
        return Err(LinalgError::NoUnitPivot);
    }
    let free: Vec<usize> = (0..m.cols()).filter(|j| !e.pivot_cols.contains(j)).collect();
    let mut out = Matrix::zeros(&desc, m.cols(), free.len());
    for (k, &j) in free.iter().enumerate() {
        out.set(j, k, Scalar::one(&desc));
        for (l, &pc) in e.pivot_cols.iter().enumerate() {
            out.set(pc, k, e.reduced.get(l, j).neg());
        }
    }
    Ok(out)
}

/// Membership of a column vector in a canonicalised column span.
pub fn in_col_span(span: &ColCanon, v: &Matrix) -> bool {
    assert_eq!(v.cols(), 1, "expected a column vector");
    assert_eq!(v.rows(), span.canon.rows(), "ambient dimension mismatch");
    let mut w = v.clone();
    for (l, &pr) in span.pivot_rows.iter().enumerate() {
        let c = w.get(pr, 0).clone();
        if c.is_zero() {
            continue;
        }
        for i in 0..w.rows() {
            let val = w.get(i, 0) - &(span.canon.get(i, l) * &c);
            w.set(i, 0, val);
        }
    }
    w.is_zero()
}

/// Coordinates of `v` in the *original* columns of the matrix behind `span`.
pub fn coords_in_col_span(span: &ColCanon, v: &Matrix) -> Option<Vec<Scalar>> {
    assert_eq!(v.cols(), 1, "expected a column vector");
    let desc = span.canon.descriptor().clone();
    if !in_col_span(span, v) {
        return None;
    }
    // coefficients in the canonical basis are read off at the pivot rows
    let k = span.canon.cols();
    let mut canon_coords = Matrix::zeros(&desc, k, 1);
    for (l, &pr) in span.pivot_rows.iter().enumerate() {
        canon_coords.set(l, 0, v.get(pr, 0).clone());
    }
    let orig = span.transform.mul(&canon_coords);
    Some((0..k).map(|i| orig.get(i, 0).clone()).collect())
}

/// Column spans compared by canonical form; inputs need not be canonical.
pub fn subspace_equal(a: &Matrix, b: &Matrix) -> Result<bool, LinalgError> {
    let ca = col_canon(a)?;
    let cb = col_canon(b)?;
    Ok(ca.rank == cb.rank && ca.basis() == cb.basis())
}

/// Canonical basis of `span(a) + span(b)`.
pub fn sum_col_spans(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    Ok(col_canon(&a.hstack(b))?.basis())
}

/// Canonical basis of `span(a) ∩ span(b)`.
pub fn intersect_col_spans(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    let stacked = a.hstack(b);
    let ker = kernel(&stacked)?;
    // each kernel column (x; y) satisfies a x = -b y, an intersection vector
    let xs = Matrix::from_fn(a.descriptor(), a.cols(), ker.cols(), |i, j| {
        ker.get(i, j).clone()
    });
    let vecs = a.mul(&xs);
    Ok(col_canon(&vecs)?.basis())
}
