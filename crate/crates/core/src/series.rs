//! Power series in `T = q^{-s}` truncated at a fixed order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `c_0 + c_1 T + ⋯ + c_R T^R`, everything above `T^R` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coefficients: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = c;
        s
    }

    /// Pads with zeros or truncates to the requested order.
    pub fn from_coefficients(mut coefficients: Vec<Rational>, order: usize) -> Self {
        coefficients.resize(order + 1, Rational::zero());
        Self { coefficients }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, r: usize) -> Rational {
        self.coefficients.get(r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coefficient(&mut self, r: usize, value: Rational) {
        if r <= self.order() {
            self.coefficients[r] = value;
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect();
        Self { coefficients }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a - b).collect();
        Self { coefficients }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coefficients: self.coefficients.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=order - i].iter().enumerate() {
                out.coefficients[i + j] += a * b;
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coefficients[0];
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let inv0 = c0.recip();
        let order = self.order();
        let mut q = Self::zero(order);
        q.coefficients[0] = inv0.clone();
        for r in 1..=order {
            let s = (1..=r).fold(Rational::zero(), |acc, i| acc + &self.coefficients[i] * &q.coefficients[r - i]);
            q.coefficients[r] = -s * &inv0;
        }
        Ok(q)
    }

    /// `p(T²)`, truncated at the same order.
    pub fn substitute_t_squared(&self) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for (r, c) in self.coefficients.iter().enumerate().take(order / 2 + 1) {
            out.coefficients[2 * r] = c.clone();
        }
        out
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.check(other);
        self.coefficients.iter().zip(&other.coefficients).position(|(a, b)| a != b)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, c) in self.coefficients.iter().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
