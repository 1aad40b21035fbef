//! The three-graded Lie algebra attached to a triple system.
//!
//! The underlying space is `V+ (+) g0 (+) V-`, where `g0` is spanned by the
//! inner derivations `delta(x, y)` acting as `T(x,y,.)` on the plus side and
//! `-T(y,x,.)` on the minus side.  Elements carry the derivation part as an
//! explicit pair of operator matrices, so brackets never need the span; the
//! span and its structure constants are computed once at construction and
//! power the exhaustive checks.

use jordan_core::TripleSystem;
use linalg_exact::{col_canon, ColCanon, Matrix};
use ring_core::Scalar;

use crate::error::TkkError;

/// An element `(u, D, v)` with the derivation `D` stored as its action on
/// each side, everything in coordinates over the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    pub plus: Matrix,
    pub op_plus: Matrix,
    pub op_minus: Matrix,
    pub minus: Matrix,
}

impl LieElement {
    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.op_plus.is_zero() && self.op_minus.is_zero() && self.minus.is_zero()
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        LieElement {
            plus: self.plus.add(&other.plus),
            op_plus: self.op_plus.add(&other.op_plus),
            op_minus: self.op_minus.add(&other.op_minus),
            minus: self.minus.add(&other.minus),
        }
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LieElement {
        LieElement {
            plus: self.plus.neg(),
            op_plus: self.op_plus.neg(),
            op_minus: self.op_minus.neg(),
            minus: self.minus.neg(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        LieElement {
            plus: self.plus.scale(c),
            op_plus: self.op_plus.scale(c),
            op_minus: self.op_minus.scale(c),
            minus: self.minus.scale(c),
        }
    }
}

/// Deliberate bracket defect: flip the sign of the first derivation term,
/// breaking antisymmetry and the Jacobi identity while leaving the
/// degree-zero span intact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketMutation {
    FlipDeltaTerm,
}

#[derive(Debug, Clone)]
pub struct GradedLie {
    sys: TripleSystem,
    mutation: Option<BracketMutation>,
    p: usize,
    m: usize,
    zero_basis: ColCanon,
    basis: Vec<LieElement>,
    grades: Vec<i8>,
    /// `table[i][j]` holds the basis coordinates of `[b_i, b_j]`.
    table: Vec<Vec<Vec<Scalar>>>,
}

impl GradedLie {
    pub fn new(sys: TripleSystem) -> Result<Self, TkkError> {
        GradedLie::build(sys, None)
    }

    pub fn with_mutation(sys: TripleSystem, mutation: BracketMutation) -> Result<Self, TkkError> {
        GradedLie::build(sys, Some(mutation))
    }

    fn build(sys: TripleSystem, mutation: Option<BracketMutation>) -> Result<Self, TkkError> {
        let p = sys.plus_dim();
        let m = sys.minus_dim();
        let coeff = sys.coeff_ring().clone();

        // span of the inner derivations, flattened to columns
        let mut span = Matrix::zeros(&coeff, p * p + m * m, 0);
        for x in sys.plus_basis() {
            for y in sys.minus_basis() {
                let a = sys.triple_operator_plus(&x, &y);
                let b = sys.triple_operator_minus(&y, &x).neg();
                span = span.hstack(&flatten_ops(&a, &b));
            }
        }
        let zero_basis = col_canon(&span)
            .map_err(|e| TkkError::NotRepresentable(format!("derivation span: {e}")))?;

        let mut lie = GradedLie {
            sys,
            mutation,
            p,
            m,
            zero_basis,
            basis: Vec::new(),
            grades: Vec::new(),
            table: Vec::new(),
        };
        lie.install_basis();
        lie.install_table()?;
        Ok(lie)
    }

    fn install_basis(&mut self) {
        let coeff = self.coeff().clone();
        let (p, m) = (self.p, self.m);
        let blank = || LieElement {
            plus: Matrix::zeros(&coeff, p, 1),
            op_plus: Matrix::zeros(&coeff, p, p),
            op_minus: Matrix::zeros(&coeff, m, m),
            minus: Matrix::zeros(&coeff, m, 1),
        };
        for i in 0..p {
            let mut e = blank();
            e.plus.set(i, 0, Scalar::one(&coeff));
            self.basis.push(e);
            self.grades.push(1);
        }
        for k in 0..self.zero_basis.rank {
            let col = self.zero_basis.canon.col(k);
            let (a, b) = unflatten_ops(&col, p, m);
            let mut e = blank();
            e.op_plus = a;
            e.op_minus = b;
            self.basis.push(e);
            self.grades.push(0);
        }
        for j in 0..m {
            let mut e = blank();
            e.minus.set(j, 0, Scalar::one(&coeff));
            self.basis.push(e);
            self.grades.push(-1);
        }
    }

    fn install_table(&mut self) -> Result<(), TkkError> {
        let n = self.basis.len();
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let br = self.bracket(&self.basis[i], &self.basis[j]);
                row.push(self.coords(&br)?);
            }
            table.push(row);
        }
        self.table = table;
        Ok(())
    }

    pub fn system(&self) -> &TripleSystem {
        &self.sys
    }

    fn coeff(&self) -> &ring_core::RingDescriptor {
        self.sys.coeff_ring()
    }

    /// Dimensions of the three graded pieces `(plus, zero, minus)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.p, self.zero_basis.rank, self.m)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LieElement] {
        &self.basis
    }

    pub fn grades(&self) -> &[i8] {
        &self.grades
    }

    pub fn structure_coords(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn embed_plus(&self, x: &Matrix) -> LieElement {
        let coeff = self.coeff();
        LieElement {
            plus: self.sys.plus_coord_column(x),
            op_plus: Matrix::zeros(coeff, self.p, self.p),
            op_minus: Matrix::zeros(coeff, self.m, self.m),
            minus: Matrix::zeros(coeff, self.m, 1),
        }
    }

    pub fn embed_minus(&self, y: &Matrix) -> LieElement {
        let coeff = self.coeff();
        LieElement {
            plus: Matrix::zeros(coeff, self.p, 1),
            op_plus: Matrix::zeros(coeff, self.p, self.p),
            op_minus: Matrix::zeros(coeff, self.m, self.m),
            minus: self.sys.minus_coord_column(y),
        }
    }

    /// The inner derivation attached to a plus/minus pair of elements.
    pub fn delta(&self, x: &Matrix, y: &Matrix) -> LieElement {
        let coeff = self.coeff();
        LieElement {
            plus: Matrix::zeros(coeff, self.p, 1),
            op_plus: self.sys.triple_operator_plus(x, y),
            op_minus: self.sys.triple_operator_minus(y, x).neg(),
            minus: Matrix::zeros(coeff, self.m, 1),
        }
    }

    fn delta_from_columns(&self, u: &Matrix, v: &Matrix) -> LieElement {
        self.delta(&self.sys.plus_from_column(u), &self.sys.minus_from_column(v))
    }

    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let plus = a.op_plus.mul(&b.plus).sub(&b.op_plus.mul(&a.plus));
        let minus = a.op_minus.mul(&b.minus).sub(&b.op_minus.mul(&a.minus));
        let mut op_plus = a.op_plus.mul(&b.op_plus).sub(&b.op_plus.mul(&a.op_plus));
        let mut op_minus = a.op_minus.mul(&b.op_minus).sub(&b.op_minus.mul(&a.op_minus));
        if !a.plus.is_zero() && !b.minus.is_zero() {
            let d1 = self.delta_from_columns(&a.plus, &b.minus);
            let d1 = match self.mutation {
                Some(BracketMutation::FlipDeltaTerm) => d1.neg(),
                None => d1,
            };
            op_plus = op_plus.add(&d1.op_plus);
            op_minus = op_minus.add(&d1.op_minus);
        }
        if !b.plus.is_zero() && !a.minus.is_zero() {
            let d2 = self.delta_from_columns(&b.plus, &a.minus);
            op_plus = op_plus.sub(&d2.op_plus);
            op_minus = op_minus.sub(&d2.op_minus);
        }
        LieElement { plus, op_plus, op_minus, minus }
    }

    /// Coordinates in the graded basis; fails when the derivation part
    /// escapes the degree-zero span.
    pub fn coords(&self, e: &LieElement) -> Result<Vec<Scalar>, TkkError> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.p {
            out.push(e.plus.get(i, 0).clone());
        }
        out.extend(self.zero_coords(&e.op_plus, &e.op_minus)?);
        for j in 0..self.m {
            out.push(e.minus.get(j, 0).clone());
        }
        Ok(out)
    }

    fn zero_coords(&self, a: &Matrix, b: &Matrix) -> Result<Vec<Scalar>, TkkError> {
        let mut w = flatten_ops(a, b);
        let mut coords = vec![Scalar::zero(self.coeff()); self.zero_basis.rank];
        for (l, &pr) in self.zero_basis.pivot_rows.iter().enumerate() {
            let c = w.get(pr, 0).clone();
            if c.is_zero() {
                continue;
            }
            for r in 0..w.rows() {
                let v = w.get(r, 0) - &(self.zero_basis.canon.get(r, l) * &c);
                w.set(r, 0, v);
            }
            coords[l] = c;
        }
        if !w.is_zero() {
            return Err(TkkError::ClosureFailure(
                "operator pair lies outside the inner-derivation span".into(),
            ));
        }
        Ok(coords)
    }

    /// Bracket of two coordinate vectors through the structure constants.
    pub fn bracket_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let coeff = self.coeff();
        let mut acc = vec![Scalar::zero(coeff); n];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let c = ca.mul(cb);
                for (k, s) in self.table[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        acc[k] = acc[k].add(&c.mul(s));
                    }
                }
            }
        }
        acc
    }

    /// Grade-swapping involution for triple systems on a single space.
    pub fn theta(&self, e: &LieElement) -> Result<LieElement, TkkError> {
        if self.sys.plus_shape() != self.sys.minus_shape() {
            return Err(TkkError::Unsupported(
                "grade reversal needs both graded pieces to share one space".into(),
            ));
        }
        Ok(LieElement {
            plus: e.minus.clone(),
            op_plus: e.op_minus.clone(),
            op_minus: e.op_plus.clone(),
            minus: e.plus.clone(),
        })
    }
}

fn flatten_ops(a: &Matrix, b: &Matrix) -> Matrix {
    let desc = a.descriptor().clone();
    let (pa, pb) = (a.rows() * a.cols(), b.rows() * b.cols());
    Matrix::from_fn(&desc, pa + pb, 1, |r, _| {
        if r < pa {
            a.get(r / a.cols(), r % a.cols()).clone()
        } else {
            let r = r - pa;
            b.get(r / b.cols(), r % b.cols()).clone()
        }
    })
}

fn unflatten_ops(col: &Matrix, p: usize, m: usize) -> (Matrix, Matrix) {
    let desc = col.descriptor().clone();
    let a = Matrix::from_fn(&desc, p, p, |i, j| col.get(i * p + j, 0).clone());
    let b = Matrix::from_fn(&desc, m, m, |i, j| col.get(p * p + i * m + j, 0).clone());
    (a, b)
}
