//! Exact integer and rational linear algebra.
//!
//! Arbitrary-precision integers throughout; no floating point anywhere.
//! Provides the Smith normal form, cokernel invariants, primitive vectors,
//! and lattice-point enumeration in rational polytopes. Everything is a pure
//! function of its inputs.

mod polytope;
pub(crate) mod rational;
mod snf;

pub use polytope::{polytope_lattice_points, RationalPolytopeSpec};
pub use snf::{smith_normal_form, SnfResult};

pub(crate) use polytope::{for_each_combination, recession_direction};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IntLinError {
    #[error("the zero vector has no primitive form")]
    ZeroVector,
    #[error("matrix is not injective as a map (column rank {rank} < {cols})")]
    NotInjective { rank: usize, cols: usize },
    #[error("constraint system is unbounded along direction {direction:?}")]
    Unbounded { direction: Vec<BigInt> },
    #[error("dimension mismatch: expected vectors of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix must be nonempty")]
    EmptyMatrix,
    #[error("row lengths differ")]
    RaggedRows,
}

/// Dense integer matrix, row-major, arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntMatrix[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, IntLinError> {
        if rows == 0 || cols == 0 {
            return Err(IntLinError::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(IntLinError::RaggedRows);
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, IntLinError> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(IntLinError::RaggedRows);
        }
        IntMatrix::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("well-formed literal matrix")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub(crate) fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    *out.at_mut(i, j) += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.at(i, j).is_zero()))
    }

    /// Exact determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m.at(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.at(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    *m.at_mut(i, j) = num / &prev;
                }
                *m.at_mut(i, k) = BigInt::zero();
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    /// Inverse of a matrix with determinant +-1, via the adjugate.
    /// Returns `None` when the determinant is not a unit.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let det = self.det();
        if det.abs() != BigInt::one() {
            return None;
        }
        if n == 1 {
            return Some(IntMatrix::new(1, 1, vec![det]).expect("1x1 matrix"));
        }
        let mut inv = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(j, i);
                let cof = if (i + j) % 2 == 0 {
                    minor.det()
                } else {
                    -minor.det()
                };
                *inv.at_mut(i, j) = &cof * &det;
            }
        }
        Some(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut rows = Vec::with_capacity(self.rows - 1);
        for i in 0..self.rows {
            if i == skip_row {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            for j in 0..self.cols {
                if j == skip_col {
                    continue;
                }
                row.push(self.at(i, j).clone());
            }
            rows.push(row);
        }
        IntMatrix::from_rows(rows).expect("minor of a matrix with >= 2 rows and columns")
    }

    // -- elementary operations used by the Smith reduction --

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i -= q * row_k
    pub(crate) fn row_sub_mul(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.cols {
            let sub = q * self.at(k, j);
            *self.at_mut(i, j) -= sub;
        }
    }

    /// col_j -= q * col_k
    pub(crate) fn col_sub_mul(&mut self, j: usize, k: usize, q: &BigInt) {
        for i in 0..self.rows {
            let sub = q * self.at(i, k);
            *self.at_mut(i, j) -= sub;
        }
    }

    /// row_i += row_k
    pub(crate) fn row_add(&mut self, i: usize, k: usize) {
        for j in 0..self.cols {
            let add = self.at(k, j).clone();
            *self.at_mut(i, j) += add;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let neg = -self.at(i, j).clone();
            *self.at_mut(i, j) = neg;
        }
    }
}

/// Exact inner product.
pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Convenience conversion for literal vectors.
pub fn bigvec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// The vector divided by the gcd of its entries; signs are preserved.
pub fn primitive(vec: &[BigInt]) -> Result<Vec<BigInt>, IntLinError> {
    let mut g = BigInt::zero();
    for x in vec {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(IntLinError::ZeroVector);
    }
    Ok(vec.iter().map(|x| x / &g).collect())
}

/// Free rank and torsion (invariant factors `> 1`) of `Z^rows / im(A)`.
///
/// `A` must have full column rank, i.e. describe an injective map.
pub fn cokernel_invariants(a: &IntMatrix) -> Result<(usize, Vec<BigInt>), IntLinError> {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    if rank < a.cols() {
        return Err(IntLinError::NotInjective {
            rank,
            cols: a.cols(),
        });
    }
    let torsion = diag
        .into_iter()
        .filter(|d| *d > BigInt::one())
        .collect();
    Ok((a.rows() - rank, torsion))
}
