//! Square matrices over a cyclotomic field.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{CycloLevel, CycloNumber};
use crate::error::{domain, Result};
use crate::linalg::field;

/// `Mat_n(Q(ζ_N))`, the split Azumaya algebra of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixAlgebra {
    size: usize,
    level: u64,
}

impl MatrixAlgebra {
    pub fn new(size: usize, level: u64) -> Result<MatrixAlgebra> {
        if size == 0 || level == 0 {
            return Err(domain!("matrix algebra needs size and level at least 1"));
        }
        Ok(MatrixAlgebra { size, level })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn dimension(&self) -> usize {
        self.size * self.size
    }

    pub fn field(&self) -> Arc<CycloLevel> {
        CycloLevel::get(self.level)
    }

    /// Matrix unit `E_ij`.
    pub fn unit(&self, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zero(self.size, &self.field());
        m.set(i, j, CycloNumber::one(&self.field()));
        m
    }

    pub fn units(&self) -> Vec<Matrix> {
        (0..self.size * self.size).map(|k| self.unit(k / self.size, k % self.size)).collect()
    }
}

/// Row-major square matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    entries: Vec<CycloNumber>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

impl Matrix {
    pub fn zero(n: usize, level: &Arc<CycloLevel>) -> Matrix {
        Matrix { n, entries: alloc::vec![CycloNumber::zero(level); n * n] }
    }

    pub fn identity(n: usize, level: &Arc<CycloLevel>) -> Matrix {
        Matrix::scalar(n, &CycloNumber::one(level))
    }

    pub fn scalar(n: usize, s: &CycloNumber) -> Matrix {
        let mut m = Matrix::zero(n, s.level_data());
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycloNumber>>) -> Result<Matrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(domain!("matrix must be square and nonempty"));
        }
        Ok(Matrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_entries(n: usize, entries: Vec<CycloNumber>) -> Result<Matrix> {
        if entries.len() != n * n {
            return Err(domain!("expected {} entries, got {}", n * n, entries.len()));
        }
        Ok(Matrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNumber) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<CycloNumber>> {
        self.entries.chunks(self.n).map(<[CycloNumber]>::to_vec).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let zero = CycloNumber::zero(&CycloLevel::get(1));
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = zero.clone();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.push(acc);
            }
        }
        Matrix { n, entries: out }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Matrix { n: self.n, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Matrix { n: self.n, entries }
    }

    pub fn scale(&self, s: &CycloNumber) -> Matrix {
        Matrix { n: self.n, entries: self.entries.iter().map(|a| a * s).collect() }
    }

    pub fn map(&self, f: impl Fn(&CycloNumber) -> Result<CycloNumber>) -> Result<Matrix> {
        Ok(Matrix { n: self.n, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycloNumber::is_zero)
    }

    pub fn trace(&self) -> CycloNumber {
        let mut acc = CycloNumber::zero(&CycloLevel::get(1));
        for i in 0..self.n {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// The scalar `s` when the matrix is `s·1`.
    pub fn as_scalar(&self) -> Option<CycloNumber> {
        let s = self.get(0, 0).clone();
        (0..self.n)
            .all(|i| (0..self.n).all(|j| *self.get(i, j) == if i == j { s.clone() } else { CycloNumber::zero(s.level_data()) }))
            .then_some(s)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.n;
        let level = self.entries.iter().fold(1, |acc, x| crate::arith::lcm(acc, x.level()));
        let lv = CycloLevel::get(level);
        let mut work: Vec<Vec<CycloNumber>> = (0..n)
            .map(|i| {
                let mut row: Vec<CycloNumber> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| if i == j { CycloNumber::one(&lv) } else { CycloNumber::zero(&lv) }));
                row
            })
            .collect();
        let pivots = field::rref(&mut work);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix { n, entries: work.into_iter().flat_map(|r| r.into_iter().skip(n)).collect() })
    }

    /// Coordinates in the matrix-unit basis (row-major), i.e. the entries.
    pub fn to_vector(&self) -> Vec<CycloNumber> {
        self.entries.clone()
    }
}

/// Rank of a family of matrices viewed as vectors.
pub fn span_rank(ms: &[Matrix]) -> usize {
    field::rank(&ms.iter().map(Matrix::to_vector).collect::<Vec<_>>())
}
