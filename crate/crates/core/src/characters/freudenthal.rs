//! Weight multiplicities by Freudenthal's recursion.
//!
//! Weights are integer vectors in the `ε`-basis with the standard inner
//! product, which is Weyl-invariant for all three families. Using
//! `|λ+ρ|² − |μ+ρ|² = (λ−μ, λ+μ+2ρ)` keeps the arithmetic in `ℤ`.
//!
//! The multiplicity table is computed per call; there is no shared cache.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::weights::{EigenvalueList, PaddedWeight};
use crate::error::{Error, Result};
use crate::rational::{int, pow, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalGroup {
    GL,
    Sp,
    SOeven,
}

/// Largest rank and `|λ|` accepted by [`freudenthal_char`].
pub const ORACLE_MAX_RANK: usize = 4;
pub const ORACLE_MAX_SIZE: u64 = 8;

pub type Weight = Vec<i64>;

fn unit(k: usize, i: usize, c: i64) -> Weight {
    let mut v = vec![0; k];
    v[i] = c;
    v
}

fn add(a: &[i64], b: &[i64]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn positive_roots(group: ClassicalGroup, k: usize) -> Vec<Weight> {
    let mut roots = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            roots.push(add(&unit(k, i, 1), &unit(k, j, -1)));
            if group != ClassicalGroup::GL {
                roots.push(add(&unit(k, i, 1), &unit(k, j, 1)));
            }
        }
        if group == ClassicalGroup::Sp {
            roots.push(unit(k, i, 2));
        }
    }
    roots
}

fn simple_roots(group: ClassicalGroup, k: usize) -> Vec<Weight> {
    let mut roots: Vec<Weight> = (0..k.saturating_sub(1))
        .map(|i| add(&unit(k, i, 1), &unit(k, i + 1, -1)))
        .collect();
    match group {
        ClassicalGroup::GL => {}
        ClassicalGroup::Sp if k >= 1 => roots.push(unit(k, k - 1, 2)),
        ClassicalGroup::Sp => {}
        ClassicalGroup::SOeven if k >= 2 => roots.push(add(&unit(k, k - 2, 1), &unit(k, k - 1, 1))),
        ClassicalGroup::SOeven => {}
    }
    roots
}

/// All weights of the irreducible representation with highest weight `λ`,
/// with their multiplicities.
pub fn weight_multiplicities(group: ClassicalGroup, highest: &PaddedWeight) -> BTreeMap<Weight, u64> {
    let k = highest.rank();
    let lambda: Weight = highest.parts().iter().map(|&p| i64::from(p)).collect();
    let positive = positive_roots(group, k);
    let simple = simple_roots(group, k);
    let two_rho = positive.iter().fold(vec![0; k], |acc, a| add(&acc, a));
    let lambda_shift = add(&lambda, &two_rho);
    // every weight lies in the box |μ_i| ≤ λ_1, so no α-string is longer than this
    let max_string = 2 * lambda.first().copied().unwrap_or(0) + 2;

    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    mult.insert(lambda.clone(), 1);
    let mut level: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
    while !level.is_empty() {
        let candidates: BTreeSet<Weight> = level
            .iter()
            .flat_map(|mu| simple.iter().map(move |a| mu.iter().zip(a).map(|(x, y)| x - y).collect()))
            .collect();
        let mut next = BTreeSet::new();
        for mu in candidates {
            let diff: Weight = lambda.iter().zip(&mu).map(|(a, b)| a - b).collect();
            let denom = dot(&diff, &add(&lambda_shift, &mu));
            if denom <= 0 {
                continue;
            }
            let mut sum = 0i64;
            for alpha in &positive {
                let mut shifted = mu.clone();
                for _ in 0..max_string {
                    shifted = add(&shifted, alpha);
                    if let Some(&m) = mult.get(&shifted) {
                        sum += m * dot(&shifted, alpha);
                    }
                }
            }
            let numer = 2 * sum;
            debug_assert_eq!(numer % denom, 0, "Freudenthal quotient must be integral");
            let m = numer / denom;
            if m > 0 {
                mult.insert(mu.clone(), m);
                next.insert(mu);
            }
        }
        level = next;
    }
    mult.into_iter().map(|(w, m)| (w, m as u64)).collect()
}

/// `Σ_w mult(w) x^w`; `x` is the full torus point for `GL`, and the first half
/// `(x_1..x_k)` of `diag(x, x^{-1})` for `Sp` and `SO`.
pub fn character_from_weights(multiplicities: &BTreeMap<Weight, u64>, x: &EigenvalueList) -> Rational {
    multiplicities.iter().fold(Rational::zero(), |acc, (w, &m)| {
        let monomial = w
            .iter()
            .zip(x.values())
            .fold(int(m as i64), |p, (&e, xi)| p * pow(xi, e));
        acc + monomial
    })
}

/// Character value through the full weight table, for small inputs only.
pub fn freudenthal_char(group: ClassicalGroup, weight: &PaddedWeight, x: &EigenvalueList) -> Result<Rational> {
    if weight.rank() != x.len() {
        return Err(Error::RankMismatch { expected: weight.rank(), found: x.len() });
    }
    if weight.rank() > ORACLE_MAX_RANK || weight.trace() > ORACLE_MAX_SIZE {
        return Err(Error::OracleBudgetExceeded { rank: weight.rank(), size: weight.trace() });
    }
    Ok(character_from_weights(&weight_multiplicities(group, weight), x))
}

/// Dimension of the representation, `Σ mult(w)`.
pub fn dimension(group: ClassicalGroup, weight: &PaddedWeight) -> u64 {
    weight_multiplicities(group, weight).values().sum()
}
