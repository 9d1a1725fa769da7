//! Weyl alternant ratios.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::weights::{DominantWeight, EigenvalueList, PaddedWeight};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{pow, Rational};

fn alternant(x: &[Rational], exponents: &[i64], entry: impl Fn(&Rational, i64) -> Rational) -> RationalMatrix {
    let rows = x
        .iter()
        .map(|xi| exponents.iter().map(|&l| entry(xi, l)).collect())
        .collect();
    RationalMatrix::from_rows(rows).expect("alternants are square")
}

fn ratio(numerator: RationalMatrix, denominator: RationalMatrix) -> Result<Rational> {
    let den = denominator.det();
    if den.is_zero() {
        return Err(Error::SingularAlternant);
    }
    Ok(numerator.det() / den)
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::RankMismatch { expected, found });
    }
    Ok(())
}

/// `s_δ(x) = det(x_i^{k_j+n−j}) / det(x_i^{n−j})`.
pub fn schur_gl(delta: &DominantWeight, x: &EigenvalueList) -> Result<Rational> {
    let n = x.len();
    check_rank(delta.len(), n)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let staircase: Vec<i64> = (0..n).map(|j| (n - 1 - j) as i64).collect();
    let shifted: Vec<i64> = delta.parts().iter().zip(&staircase).map(|(&k, &s)| i64::from(k) + s).collect();
    ratio(alternant(x.values(), &shifted, pow), alternant(x.values(), &staircase, pow))
}

/// `h_0, …, h_max` of the given values.
pub fn complete_homogeneous(values: &[Rational], max: usize) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); max + 1];
    h[0] = Rational::one();
    for x in values {
        // h_k(x_1..x_i) = h_k(x_1..x_{i-1}) + x_i h_{k-1}(x_1..x_i)
        for k in 1..=max {
            let prev = &h[k - 1] * x;
            h[k] += prev;
        }
    }
    h
}

/// `s_δ = det(h_{k_i − i + j})`; valid at any point, regular or not.
pub fn schur_jacobi_trudi(delta: &DominantWeight, x: &EigenvalueList) -> Result<Rational> {
    let n = delta.len();
    check_rank(n, x.len())?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let top = delta.parts()[0] as usize + n;
    let h = complete_homogeneous(x.values(), top);
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = i64::from(delta.parts()[i]) - i as i64 + j as i64;
                    if idx < 0 {
                        Rational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    Ok(RationalMatrix::from_rows(rows)?.det())
}

fn sp_entry(x: &Rational, l: i64) -> Rational {
    pow(x, l) - pow(x, -l)
}

fn so_entry(x: &Rational, l: i64) -> Rational {
    pow(x, l) + pow(x, -l)
}

/// Character of `Sp_{2k}` at `diag(x, x^{-1})`:
/// `det(x_i^{l_j} − x_i^{−l_j}) / det(x_i^{m_j} − x_i^{−m_j})` with
/// `l_j = k_j + k − j + 1`, `m_j = k − j + 1`.
pub fn char_sp(weight: &PaddedWeight, x: &EigenvalueList) -> Result<Rational> {
    let k = x.len();
    check_rank(weight.rank(), k)?;
    let rho: Vec<i64> = (0..k).map(|j| (k - j) as i64).collect();
    let shifted: Vec<i64> = weight.parts().iter().zip(&rho).map(|(&p, &r)| i64::from(p) + r).collect();
    ratio(alternant(x.values(), &shifted, sp_entry), alternant(x.values(), &rho, sp_entry))
}

/// Character of `SO_{2k}` for a highest weight with vanishing last part.
///
/// With `k_k = 0` the odd (sign-twisted) alternant has a zero column, so only
/// `det(x_i^{l_j} + x_i^{−l_j}) / det(x_i^{k−j} + x_i^{−(k−j)})` survives.
pub fn char_so_even(weight: &PaddedWeight, x: &EigenvalueList) -> Result<Rational> {
    let k = x.len();
    check_rank(weight.rank(), k)?;
    if weight.parts().last().is_some_and(|&p| p != 0) {
        return Err(Error::NonzeroLastPart);
    }
    let rho: Vec<i64> = (0..k).map(|j| (k - 1 - j) as i64).collect();
    let shifted: Vec<i64> = weight.parts().iter().zip(&rho).map(|(&p, &r)| i64::from(p) + r).collect();
    ratio(alternant(x.values(), &shifted, so_entry), alternant(x.values(), &rho, so_entry))
}
