//! The catalogue of triple-system families and their coordinate bases.

use std::fmt;

use linalg_exact::Matrix;
use rand::Rng;
use ring_core::{sample_scalar, RingDescriptor, RingKind, Scalar};

use crate::error::JordanError;

/// A family of Jordan-theoretic structures, parameterised by size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// All n x n matrices.
    Full(usize),
    /// Symmetric n x n matrices.
    Sym(usize),
    /// Antisymmetric n x n matrices (triple product only).
    Skew(usize),
    /// Hermitian n x n matrices over the Gaussian rationals.
    Herm(usize),
    /// Spin factor on d coordinates with the hyperbolic-signature form.
    Spin(usize),
    /// Rectangular p x q matrices paired with q x p (triple product only).
    Rect(usize, usize),
}

impl Family {
    /// Parse `full:3`, `sym:3`, `skew:4`, `herm:2`, `spin:4`, `rect:2x3`.
    pub fn parse(text: &str) -> Result<Family, JordanError> {
        let bad = || JordanError::InvalidFamily(text.to_string());
        let (name, arg) = text.split_once(':').ok_or_else(bad)?;
        let fam = match name {
            "rect" => {
                let (p, q) = arg.split_once('x').ok_or_else(bad)?;
                Family::Rect(
                    p.parse().map_err(|_| bad())?,
                    q.parse().map_err(|_| bad())?,
                )
            }
            _ => {
                let n: usize = arg.parse().map_err(|_| bad())?;
                match name {
                    "full" => Family::Full(n),
                    "sym" => Family::Sym(n),
                    "skew" => Family::Skew(n),
                    "herm" => Family::Herm(n),
                    "spin" => Family::Spin(n),
                    _ => return Err(bad()),
                }
            }
        };
        match fam {
            Family::Full(n) | Family::Sym(n) | Family::Herm(n) if n == 0 => Err(bad()),
            Family::Skew(n) if n < 2 => Err(bad()),
            Family::Spin(d) if d < 2 => Err(bad()),
            Family::Rect(p, q) if p == 0 || q == 0 => Err(bad()),
            _ => Ok(fam),
        }
    }

    /// Does the family carry a commutative bilinear product (and a unit)?
    pub fn has_bullet(&self) -> bool {
        matches!(
            self,
            Family::Full(_) | Family::Sym(_) | Family::Herm(_) | Family::Spin(_)
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Full(n) => write!(f, "full:{n}"),
            Family::Sym(n) => write!(f, "sym:{n}"),
            Family::Skew(n) => write!(f, "skew:{n}"),
            Family::Herm(n) => write!(f, "herm:{n}"),
            Family::Spin(d) => write!(f, "spin:{d}"),
            Family::Rect(p, q) => write!(f, "rect:{p}x{q}"),
        }
    }
}

/// Deliberate product defects, used to prove the law checkers can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleMutation {
    /// Matrix families: compute `xyz - zyx` instead of `xyz + zyx`.
    FlipSecondTerm,
    /// Spin factor: drop the correction term from the commutative product.
    DropSpinCorrection,
}

/// A concrete family instantiated over a ring, with coordinate bases.
///
/// Elements are plain matrices: `n x n` for the square families, `d x 1`
/// columns for spin factors, `p x q` (and `q x p` on the minus side) for the
/// rectangular family.  Coordinates are taken over the coefficient ring,
/// which equals the entry ring except for the Hermitian family, where the
/// entries are Gaussian and the coefficients rational.
#[derive(Debug, Clone)]
pub struct TripleSystem {
    family: Family,
    ring: RingDescriptor,
    coeff: RingDescriptor,
    mutation: Option<TripleMutation>,
}

impl TripleSystem {
    pub fn new(family: Family, ring: &RingDescriptor) -> Result<Self, JordanError> {
        if matches!(family, Family::Herm(_)) {
            let gaussian_conj =
                matches!(ring.kind(), RingKind::GaussianRational) && ring.is_involutive();
            if !gaussian_conj {
                return Err(JordanError::InvalidFamily(format!(
                    "{family} needs the Gaussian rationals with conjugation, got {ring}"
                )));
            }
        }
        let coeff = if matches!(family, Family::Herm(_)) {
            RingDescriptor::rational()
        } else {
            ring.clone()
        };
        Ok(TripleSystem { family, ring: ring.clone(), coeff, mutation: None })
    }

    pub fn parse(family: &str, ring: &RingDescriptor) -> Result<Self, JordanError> {
        TripleSystem::new(Family::parse(family)?, ring)
    }

    pub fn with_mutation(mut self, mutation: TripleMutation) -> Self {
        self.mutation = Some(mutation);
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Ring of the matrix entries.
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Ring of the coordinates (differs from the entry ring for `herm`).
    pub fn coeff_ring(&self) -> &RingDescriptor {
        &self.coeff
    }

    pub fn mutation(&self) -> Option<TripleMutation> {
        self.mutation
    }

    /// Shape of plus-side elements.
    pub fn plus_shape(&self) -> (usize, usize) {
        match self.family {
            Family::Full(n) | Family::Sym(n) | Family::Skew(n) | Family::Herm(n) => (n, n),
            Family::Spin(d) => (d, 1),
            Family::Rect(p, q) => (p, q),
        }
    }

    /// Shape of minus-side elements (transposed for `rect`).
    pub fn minus_shape(&self) -> (usize, usize) {
        match self.family {
            Family::Rect(p, q) => (q, p),
            _ => self.plus_shape(),
        }
    }

    pub fn plus_dim(&self) -> usize {
        match self.family {
            Family::Full(n) => n * n,
            Family::Sym(n) => n * (n + 1) / 2,
            Family::Skew(n) => n * (n - 1) / 2,
            Family::Herm(n) => n * n,
            Family::Spin(d) => d,
            Family::Rect(p, q) => p * q,
        }
    }

    pub fn minus_dim(&self) -> usize {
        self.plus_dim()
    }

    pub fn is_plus_member(&self, x: &Matrix) -> bool {
        if x.descriptor() != &self.ring {
            return false;
        }
        let (r, c) = self.plus_shape();
        if (x.rows(), x.cols()) != (r, c) {
            return false;
        }
        match self.family {
            Family::Sym(_) => x.transpose() == *x,
            Family::Skew(_) => x.transpose() == x.neg(),
            Family::Herm(_) => x.conj_transpose() == *x,
            _ => true,
        }
    }

    pub fn is_minus_member(&self, y: &Matrix) -> bool {
        match self.family {
            Family::Rect(_, _) => {
                let (r, c) = self.minus_shape();
                y.descriptor() == &self.ring && (y.rows(), y.cols()) == (r, c)
            }
            _ => self.is_plus_member(y),
        }
    }

    fn unit_matrix(&self, i: usize, j: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(&self.ring, rows, cols);
        m.set(i, j, Scalar::one(&self.ring));
        m
    }

    pub fn plus_basis(&self) -> Vec<Matrix> {
        match self.family {
            Family::Full(n) => {
                let mut b = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        b.push(self.unit_matrix(i, j, n, n));
                    }
                }
                b
            }
            Family::Sym(n) => {
                let mut b = Vec::new();
                for i in 0..n {
                    b.push(self.unit_matrix(i, i, n, n));
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        b.push(self.unit_matrix(i, j, n, n).add(&self.unit_matrix(j, i, n, n)));
                    }
                }
                b
            }
            Family::Skew(n) => {
                let mut b = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        b.push(self.unit_matrix(i, j, n, n).sub(&self.unit_matrix(j, i, n, n)));
                    }
                }
                b
            }
            Family::Herm(n) => {
                let i_unit = Scalar::i(&self.ring).expect("gaussian ring");
                let mut b = Vec::new();
                for k in 0..n {
                    b.push(self.unit_matrix(k, k, n, n));
                }
                for r in 0..n {
                    for c in (r + 1)..n {
                        b.push(self.unit_matrix(r, c, n, n).add(&self.unit_matrix(c, r, n, n)));
                        b.push(
                            self.unit_matrix(r, c, n, n)
                                .sub(&self.unit_matrix(c, r, n, n))
                                .scale(&i_unit),
                        );
                    }
                }
                b
            }
            Family::Spin(d) => (0..d).map(|i| self.unit_matrix(i, 0, d, 1)).collect(),
            Family::Rect(p, q) => {
                let mut b = Vec::with_capacity(p * q);
                for i in 0..p {
                    for j in 0..q {
                        b.push(self.unit_matrix(i, j, p, q));
                    }
                }
                b
            }
        }
    }

    pub fn minus_basis(&self) -> Vec<Matrix> {
        match self.family {
            Family::Rect(p, q) => {
                let mut b = Vec::with_capacity(p * q);
                for i in 0..q {
                    for j in 0..p {
                        b.push(self.unit_matrix(i, j, q, p));
                    }
                }
                b
            }
            _ => self.plus_basis(),
        }
    }

    pub fn plus_coords(&self, x: &Matrix) -> Vec<Scalar> {
        assert!(self.is_plus_member(x), "element is not in the plus space");
        match self.family {
            Family::Full(n) => {
                let mut c = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        c.push(x.get(i, j).clone());
                    }
                }
                c
            }
            Family::Sym(n) => {
                let mut c = Vec::new();
                for i in 0..n {
                    c.push(x.get(i, i).clone());
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        c.push(x.get(i, j).clone());
                    }
                }
                c
            }
            Family::Skew(n) => {
                let mut c = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        c.push(x.get(i, j).clone());
                    }
                }
                c
            }
            Family::Herm(n) => {
                let mut c = Vec::new();
                for k in 0..n {
                    let (re, im) = x.get(k, k).gauss_parts().expect("gaussian entries");
                    assert!(im.is_zero(), "hermitian diagonal must be real");
                    c.push(re);
                }
                for r in 0..n {
                    for col in (r + 1)..n {
                        let (re, im) = x.get(r, col).gauss_parts().expect("gaussian entries");
                        c.push(re);
                        c.push(im);
                    }
                }
                c
            }
            Family::Spin(d) => (0..d).map(|i| x.get(i, 0).clone()).collect(),
            Family::Rect(p, q) => {
                let mut c = Vec::with_capacity(p * q);
                for i in 0..p {
                    for j in 0..q {
                        c.push(x.get(i, j).clone());
                    }
                }
                c
            }
        }
    }

    pub fn minus_coords(&self, y: &Matrix) -> Vec<Scalar> {
        match self.family {
            Family::Rect(p, q) => {
                assert!(self.is_minus_member(y), "element is not in the minus space");
                let mut c = Vec::with_capacity(p * q);
                for i in 0..q {
                    for j in 0..p {
                        c.push(y.get(i, j).clone());
                    }
                }
                c
            }
            _ => self.plus_coords(y),
        }
    }

    pub fn plus_from_coords(&self, coords: &[Scalar]) -> Matrix {
        assert_eq!(coords.len(), self.plus_dim(), "coordinate count mismatch");
        let basis = self.plus_basis();
        self.combine(&basis, coords)
    }

    /// Plus-side coordinates as a column vector over the coefficient ring.
    pub fn plus_coord_column(&self, x: &Matrix) -> Matrix {
        let coords = self.plus_coords(x);
        Matrix::from_fn(&self.coeff, coords.len(), 1, |i, _| coords[i].clone())
    }

    pub fn minus_coord_column(&self, y: &Matrix) -> Matrix {
        let coords = self.minus_coords(y);
        Matrix::from_fn(&self.coeff, coords.len(), 1, |i, _| coords[i].clone())
    }

    pub fn plus_from_column(&self, col: &Matrix) -> Matrix {
        assert_eq!(col.cols(), 1, "expected a column vector");
        let coords: Vec<Scalar> = (0..col.rows()).map(|i| col.get(i, 0).clone()).collect();
        self.plus_from_coords(&coords)
    }

    pub fn minus_from_column(&self, col: &Matrix) -> Matrix {
        assert_eq!(col.cols(), 1, "expected a column vector");
        let coords: Vec<Scalar> = (0..col.rows()).map(|i| col.get(i, 0).clone()).collect();
        self.minus_from_coords(&coords)
    }

    pub fn minus_from_coords(&self, coords: &[Scalar]) -> Matrix {
        assert_eq!(coords.len(), self.minus_dim(), "coordinate count mismatch");
        let basis = self.minus_basis();
        self.combine(&basis, coords)
    }

    fn combine(&self, basis: &[Matrix], coords: &[Scalar]) -> Matrix {
        let (r, c) = (basis[0].rows(), basis[0].cols());
        let mut acc = Matrix::zeros(&self.ring, r, c);
        for (b, co) in basis.iter().zip(coords) {
            assert_eq!(co.descriptor(), &self.coeff, "coordinate ring mismatch");
            let lifted = self.lift_coeff(co);
            acc = acc.add(&b.scale(&lifted));
        }
        acc
    }

    /// Coefficient-ring scalar viewed in the entry ring.
    pub fn lift_coeff(&self, c: &Scalar) -> Scalar {
        if self.coeff == self.ring {
            c.clone()
        } else {
            Scalar::gauss_from_parts(&self.ring, c, &Scalar::zero(&self.coeff))
                .expect("rational coefficient lifts into the gaussian ring")
        }
    }

    pub fn sample_plus<R: Rng>(&self, rng: &mut R) -> Matrix {
        let coords: Vec<Scalar> =
            (0..self.plus_dim()).map(|_| sample_scalar(&self.coeff, rng)).collect();
        self.plus_from_coords(&coords)
    }

    pub fn sample_minus<R: Rng>(&self, rng: &mut R) -> Matrix {
        let coords: Vec<Scalar> =
            (0..self.minus_dim()).map(|_| sample_scalar(&self.coeff, rng)).collect();
        self.minus_from_coords(&coords)
    }

    /// The multiplicative unit, for families carrying the bullet product.
    pub fn unit(&self) -> Result<Matrix, JordanError> {
        match self.family {
            Family::Full(n) | Family::Sym(n) | Family::Herm(n) => {
                Ok(Matrix::identity(&self.ring, n))
            }
            Family::Spin(d) => Ok(self.unit_matrix(0, 0, d, 1)),
            _ => Err(JordanError::Unsupported(format!(
                "family {} has no unit element",
                self.family
            ))),
        }
    }
}

/// Render an element on one line, rows wrapped in brackets.
pub(crate) fn render(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_string_rows()
        .into_iter()
        .map(|r| format!("[{}]", r.join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}
