use std::fmt;

use ring_core::{RingDescriptor, RingError, Scalar};

/// Dense matrix with exact scalar entries, stored row-major.
///
/// Shape mismatches in arithmetic are programming errors and panic; fallible
/// numeric conditions (singularity, missing unit pivots) live in
/// [`crate::LinalgError`] on the operations that can hit them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    desc: RingDescriptor,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(desc: &RingDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            desc: desc.clone(),
            data: vec![Scalar::zero(desc); rows * cols],
        }
    }

    pub fn identity(desc: &RingDescriptor, n: usize) -> Self {
        let mut m = Matrix::zeros(desc, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(desc));
        }
        m
    }

    pub fn from_fn(
        desc: &RingDescriptor,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.descriptor(), desc, "entry descriptor mismatch");
                data.push(s);
            }
        }
        Matrix { rows, cols, desc: desc.clone(), data }
    }

    pub fn from_rows(desc: &RingDescriptor, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            for s in row {
                assert_eq!(s.descriptor(), desc, "entry descriptor mismatch");
                data.push(s);
            }
        }
        Matrix { rows: r, cols: c, desc: desc.clone(), data }
    }

    /// Build from integer literals; handy for fixtures.
    pub fn from_ints(desc: &RingDescriptor, rows: &[&[i64]]) -> Self {
        Matrix::from_fn(desc, rows.len(), rows.first().map_or(0, |r| r.len()), |i, j| {
            Scalar::from_integer(desc, rows[i][j])
        })
    }

    /// Parse entries in the `Scalar` literal format.
    pub fn parse_rows(desc: &RingDescriptor, rows: &[&[&str]]) -> Result<Self, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for text in *row {
                data.push(Scalar::parse(desc, text)?);
            }
        }
        Ok(Matrix { rows: r, cols: c, desc: desc.clone(), data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.desc
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert_eq!(s.descriptor(), &self.desc, "entry descriptor mismatch");
        self.data[i * self.cols + j] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same_shape(&self, other: &Matrix) {
        assert_eq!(self.desc, other.desc, "descriptor mismatch");
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            desc: self.desc.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            desc: self.desc.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.map(|s| s.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        assert_eq!(c.descriptor(), &self.desc, "descriptor mismatch");
        self.map(|s| s * c)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.desc, other.desc, "descriptor mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(&self.desc, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Scalar::zero(&self.desc);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            desc: self.desc.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.desc, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Transpose composed with the descriptor's involution.
    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(&self.desc, self.cols, self.rows, |i, j| self.get(j, i).conjugate())
    }

    pub fn conjugate(&self) -> Matrix {
        self.map(Scalar::conjugate)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace needs a square matrix");
        let mut acc = Scalar::zero(&self.desc);
        for i in 0..self.rows {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.desc, other.desc, "descriptor mismatch");
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Matrix::from_fn(&self.desc, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.desc, other.desc, "descriptor mismatch");
        assert_eq!(self.cols, other.cols, "column count mismatch");
        Matrix::from_fn(&self.desc, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    /// Copy of columns `start..end`.
    pub fn slice_cols(&self, start: usize, end: usize) -> Matrix {
        assert!(start <= end && end <= self.cols, "column range out of bounds");
        Matrix::from_fn(&self.desc, self.rows, end - start, |i, j| {
            self.get(i, start + j).clone()
        })
    }

    /// Column `j` as a column vector.
    pub fn col(&self, j: usize) -> Matrix {
        self.slice_cols(j, j + 1)
    }

    /// Entrywise embedding into the dual-number ring over this descriptor.
    pub fn embed_dual(&self) -> Matrix {
        let desc = RingDescriptor::dual(&self.desc);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            desc,
            data: self.data.iter().map(Scalar::embed_dual).collect(),
        }
    }

    /// Split a dual-number matrix into entrywise (base, eps) parts.
    pub fn dual_parts(&self) -> Result<(Matrix, Matrix), RingError> {
        let base_desc = self.desc.dual_base()?;
        let mut base = Vec::with_capacity(self.data.len());
        let mut eps = Vec::with_capacity(self.data.len());
        for s in &self.data {
            let (b, e) = s.parts()?;
            base.push(b);
            eps.push(e);
        }
        Ok((
            Matrix { rows: self.rows, cols: self.cols, desc: base_desc.clone(), data: base },
            Matrix { rows: self.rows, cols: self.cols, desc: base_desc, data: eps },
        ))
    }

    /// Entries rendered as scalar literals, row by row; the JSON wire format.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(i, j) * c;
            self.set(i, j, v);
        }
    }

    /// row[target] -= c * row[source]
    pub(crate) fn row_axpy(&mut self, target: usize, source: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(target, j) - &(self.get(source, j) * c);
            self.set(target, j, v);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
