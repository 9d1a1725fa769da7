//! Dense square matrices over ℚ.
//!
//! Only what the L-factor machinery consumes: products, traces, determinants,
//! inverses and the three functorial constructions `Λ²`, `Sym²` and `⊗`.
//! Basis orders for the constructions are lexicographic in index pairs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![Rational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn diag(values: &[Rational]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("matrix must have dimension at least 1"));
        }
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch("matrix must be square"));
        }
        Ok(Self { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Self { dim: self.dim, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Self { dim: self.dim, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `tr(M^j)` for `j = 1..=count`.
    pub fn power_traces(&self, count: usize) -> Vec<Rational> {
        let mut traces = Vec::with_capacity(count);
        if count == 0 {
            return traces;
        }
        if self.is_diagonal() {
            let d = self.diagonal();
            let mut powers = d.clone();
            for _ in 0..count {
                traces.push(powers.iter().fold(Rational::zero(), |acc, x| acc + x));
                for (p, x) in powers.iter_mut().zip(&d) {
                    *p *= x;
                }
            }
            return traces;
        }
        let mut power = self.clone();
        traces.push(power.trace());
        for _ in 1..count {
            power = power.mul(self);
            traces.push(power.trace());
        }
        traces
    }

    /// Determinant by Gaussian elimination with exact pivots.
    pub fn det(&self) -> Rational {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &p;
                for j in col..n {
                    let delta = &factor * &a[col * n + j];
                    a[r * n + j] -= delta;
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].recip();
            for j in 0..n {
                a[col * n + j] *= &p;
                inv[col * n + j] *= &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let da = &factor * &a[col * n + j];
                    a[r * n + j] -= da;
                    let di = &factor * &inv[col * n + j];
                    inv[r * n + j] -= di;
                }
            }
        }
        Some(Self { dim: n, entries: inv })
    }
}

/// Kronecker product `A ⊗ B`, row-major: entry `((i,k),(j,l)) = A_ij B_kl`.
pub fn tensor_matrix(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let (p, q) = (a.dim(), b.dim());
    let mut out = RationalMatrix::zeros(p * q);
    for i in 0..p {
        for j in 0..p {
            let aij = a.get(i, j);
            if aij.is_zero() {
                continue;
            }
            for k in 0..q {
                for l in 0..q {
                    out.set(i * q + k, j * q + l, aij * b.get(k, l));
                }
            }
        }
    }
    out
}

fn pairs(n: usize, strict: bool) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (if strict { i + 1 } else { i }..n).map(move |j| (i, j)))
        .collect()
}

/// `Λ²M` on the basis `e_i ∧ e_j`, `i < j`.
///
/// For `dim M = 1` the exterior square is zero-dimensional; a `0 × 0` matrix is
/// returned.
pub fn wedge2_matrix(m: &RationalMatrix) -> RationalMatrix {
    let basis = pairs(m.dim(), true);
    let mut out = RationalMatrix::zeros(basis.len());
    for (row, &(i, j)) in basis.iter().enumerate() {
        for (col, &(k, l)) in basis.iter().enumerate() {
            out.set(row, col, m.get(i, k) * m.get(j, l) - m.get(i, l) * m.get(j, k));
        }
    }
    out
}

/// `Sym²M` on the basis `e_i e_j`, `i ≤ j`.
pub fn sym2_matrix(m: &RationalMatrix) -> RationalMatrix {
    let basis = pairs(m.dim(), false);
    let mut out = RationalMatrix::zeros(basis.len());
    for (row, &(i, j)) in basis.iter().enumerate() {
        for (col, &(k, l)) in basis.iter().enumerate() {
            let v = if i == j {
                m.get(i, k) * m.get(i, l)
            } else {
                m.get(i, k) * m.get(j, l) + m.get(j, k) * m.get(i, l)
            };
            out.set(row, col, v);
        }
    }
    out
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                f.write_str(";")?;
            }
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}
