use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

fn is_dominant(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Weakly decreasing tuple `k_1 ≥ … ≥ k_n ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight(Vec<u32>);

impl DominantWeight {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !is_dominant(&parts) {
            return Err(Error::InvalidWeight("parts must be weakly decreasing"));
        }
        Ok(Self(parts))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `tr δ = Σ k_i`.
    pub fn trace(&self) -> u64 {
        self.0.iter().map(|&k| u64::from(k)).sum()
    }

    /// `δ̄ = (k_1, …, k_n, 0, …, 0)` of length `rank`.
    pub fn padded(&self, rank: usize) -> Result<PaddedWeight> {
        if rank < self.len() {
            return Err(Error::RankMismatch { expected: self.len(), found: rank });
        }
        let mut parts = self.0.clone();
        parts.resize(rank, 0);
        Ok(PaddedWeight(parts))
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

/// Highest weight of a classical group of rank `len()`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaddedWeight(Vec<u32>);

impl PaddedWeight {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        DominantWeight::new(parts).map(|d| Self(d.0))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn trace(&self) -> u64 {
        self.0.iter().map(|&k| u64::from(k)).sum()
    }
}

/// Torus coordinates `(x_1, …, x_k)`, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenvalueList(Vec<Rational>);

impl EigenvalueList {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.iter().any(Zero::is_zero) {
            return Err(Error::ZeroCharacterValue);
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: &Rational) -> Result<Self> {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }
}

/// Partitions of `j` into at most `n` parts, padded to length `n`, in
/// lexicographically descending order.
pub fn enumerate_dominant(n: usize, j: u32) -> Vec<DominantWeight> {
    fn rec(remaining: u32, max_part: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<DominantWeight>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(DominantWeight(prefix.clone()));
            }
            return;
        }
        // the remaining slots can absorb at most slots * max_part
        if u64::from(remaining) > slots as u64 * u64::from(max_part) {
            return;
        }
        for part in (0..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if j == 0 {
            out.push(DominantWeight(Vec::new()));
        }
        return out;
    }
    rec(j, j, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `p(j, ≤ k parts)` by the recursion `p(j,k) = p(j−k,k) + p(j,k−1)`.
pub fn partition_count(j: u32, k: usize) -> u64 {
    let j = j as usize;
    // table[a][b] = partitions of a into parts of size at most b
    let mut table = vec![vec![0u64; k + 1]; j + 1];
    table[0].fill(1);
    for a in 1..=j {
        for b in 1..=k {
            table[a][b] = table[a][b - 1] + if a >= b { table[a - b][b] } else { 0 };
        }
    }
    table[j][k]
}
