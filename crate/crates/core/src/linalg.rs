//! Exact linear algebra over the rationals.
//!
//! The symmetry and equality criteria for permutational powers need a basis
//! of the range of a symmetric matrix `Ã` and, for cross-checks, a basis of
//! its kernel. For symmetric `Ã` the kernel is the orthogonal complement of
//! the range, so any basis of the range works; no eigenvectors are needed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

/// Dense matrix of rationals. `BigRational` keeps every entry reduced with a
/// positive denominator, so `==` is entrywise value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Matrix whose columns are `columns`; each must have length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigRational>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column length differs from row count");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &RationalMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "row counts differ");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn mul_vector(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols, "vector length differs from column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &factor * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the null space, one vector per free column of the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (row, &p) in rref.pivots.iter().enumerate() {
                v[p] = -rref.matrix[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl From<&IntegerMatrix> for RationalMatrix {
    fn from(m: &IntegerMatrix) -> Self {
        RationalMatrix::from_fn(m.rows(), m.cols(), |i, j| BigRational::from_integer(m[(i, j)].clone()))
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shapes differ");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Bases of the column space and null space of a symmetric matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeKernelSplit {
    /// Pivot columns of the matrix itself, so they lie in the column space
    /// by construction.
    pub range_basis: Vec<Vec<BigRational>>,
    pub kernel_basis: Vec<Vec<BigRational>>,
    pub rank: usize,
}

impl RangeKernelSplit {
    pub fn dimension(&self) -> usize {
        self.range_basis.len() + self.kernel_basis.len()
    }

    /// The range basis as columns of an integer matrix, each column scaled
    /// by the lcm of its denominators. Scaling basis vectors by nonzero
    /// constants changes neither `Bᵀ X B = 0` nor symmetry of `Bᵀ X B`.
    pub fn integral_range_basis(&self) -> IntegerMatrix {
        let n = self.dimension();
        let scaled: Vec<Vec<BigInt>> = self.range_basis.iter().map(|v| clear_denominators(v)).collect();
        IntegerMatrix::from_fn(n, scaled.len(), |i, j| scaled[j][i].clone())
    }
}

fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

pub fn rref(m: &RationalMatrix) -> Rref {
    m.rref()
}

/// Splits `ℚⁿ` for a symmetric `a` into bases of `range(a)` and `ker(a)`.
pub fn range_kernel_split(a: &RationalMatrix) -> Result<RangeKernelSplit> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    for i in 0..a.rows() {
        for j in i + 1..a.cols() {
            if a[(i, j)] != a[(j, i)] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    let rref = a.rref();
    let range_basis = rref.pivots.iter().map(|&c| a.column(c)).collect();
    Ok(RangeKernelSplit {
        range_basis,
        kernel_basis: a.kernel_basis(),
        rank: rref.rank(),
    })
}

pub fn is_invertible(a: &RationalMatrix) -> bool {
    a.is_square() && a.rank() == a.rows()
}
