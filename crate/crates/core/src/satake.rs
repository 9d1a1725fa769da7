//! Satake parameters of unramified representations.
//!
//! Split parameters are diagonal. The quasi-split even parameter carries a
//! `2 × 2` block `[[α, βa], [β, α]]` whose eigenvalues `α ± β√a` are never
//! formed; everything downstream only needs traces and determinants.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::characters::{EigenvalueList, SimilitudeFamily};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{is_square, Rational};
use crate::root_data::GroupKind;

/// The antidiagonal `J` with `ᵗgJg = μ(g)J` defining `GSp_{2k}` (`+1` in the
/// upper half, `−1` in the lower half) or `GSO_{2k}` (all `+1`).
pub fn j_matrix(family: SimilitudeFamily, k: usize) -> RationalMatrix {
    let d = 2 * k;
    let mut j = RationalMatrix::zeros(d);
    for i in 0..d {
        let v = if family == SimilitudeFamily::GSp && i >= k { -Rational::one() } else { Rational::one() };
        j.set(i, d - 1 - i, v);
    }
    j
}

/// Does `ᵗM J M = μ J` hold exactly?
pub fn is_similitude(family: SimilitudeFamily, m: &RationalMatrix, mu: &Rational) -> bool {
    if !m.dim().is_multiple_of(2) {
        return false;
    }
    let j = j_matrix(family, m.dim() / 2);
    m.transpose().mul(&j).mul(m) == j.scale(mu)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiSplitData {
    pub a: Rational,
    pub alpha: Rational,
    pub beta: Rational,
}

/// Values at `ϖ` of the unramified characters `χ_0, χ_1, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramifiedData {
    pub chi0: Rational,
    pub chi: Vec<Rational>,
    pub quasi_split: Option<QuasiSplitData>,
}

impl UnramifiedData {
    pub fn split(chi0: Rational, chi: Vec<Rational>) -> Self {
        Self { chi0, chi, quasi_split: None }
    }

    /// `chi` holds `χ_1, …, χ_{n−1}`; the last torus coordinate is replaced
    /// by the Galois block.
    pub fn quasi_split(chi0: Rational, chi: Vec<Rational>, a: Rational, alpha: Rational, beta: Rational) -> Self {
        Self { chi0, chi, quasi_split: Some(QuasiSplitData { a, alpha, beta }) }
    }

    fn check_nonzero(&self) -> Result<()> {
        if self.chi0.is_zero() || self.chi.iter().any(Zero::is_zero) {
            return Err(Error::ZeroCharacterValue);
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeParameter {
    matrix: RationalMatrix,
    mu: Rational,
    kind: GroupKind,
    diag_eigenvalues: Option<EigenvalueList>,
}

impl SatakeParameter {
    fn new(matrix: RationalMatrix, mu: Rational, kind: GroupKind) -> Result<Self> {
        let diag_eigenvalues = if matrix.is_diagonal() { Some(EigenvalueList::new(matrix.diagonal())?) } else { None };
        Ok(Self { matrix, mu, kind, diag_eigenvalues })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn diag_eigenvalues(&self) -> Option<&EigenvalueList> {
        self.diag_eigenvalues.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// `(t_1, …, t_k)` from a diagonal similitude parameter of size `2k`.
    pub fn torus_part(&self) -> Result<EigenvalueList> {
        let eig = self
            .diag_eigenvalues
            .as_ref()
            .ok_or(Error::DimensionMismatch("parameter is not diagonal"))?;
        EigenvalueList::new(eig.values()[..self.dim() / 2].to_vec())
    }
}

/// `diag(χ_1, …, χ_m)` in `GL_m(ℂ)`.
pub fn satake_gl(chi: &[Rational]) -> Result<SatakeParameter> {
    if chi.iter().any(Zero::is_zero) {
        return Err(Error::ZeroCharacterValue);
    }
    SatakeParameter::new(RationalMatrix::diag(chi), Rational::one(), GroupKind::gl(chi.len())?)
}

fn paired_diagonal(chi0: &Rational, chi: &[Rational]) -> Vec<Rational> {
    let mut d: Vec<Rational> = chi.to_vec();
    d.extend(chi.iter().rev().map(|c| chi0 / c));
    d
}

fn split_parameter(data: &UnramifiedData, family: SimilitudeFamily, kind: GroupKind) -> Result<SatakeParameter> {
    data.check_nonzero()?;
    let matrix = RationalMatrix::diag(&paired_diagonal(&data.chi0, &data.chi));
    if !is_similitude(family, &matrix, &data.chi0) {
        return Err(Error::MembershipViolation);
    }
    SatakeParameter::new(matrix, data.chi0.clone(), kind)
}

/// `diag(χ_1, …, χ_n, χ_0/χ_n, …, χ_0/χ_1)` in `GSp_{2n}(ℂ)`.
pub fn satake_gspin_odd(data: &UnramifiedData) -> Result<SatakeParameter> {
    split_parameter(data, SimilitudeFamily::GSp, GroupKind::gspin_odd(data.chi.len())?)
}

/// The same diagonal, in `GSO_{2n}(ℂ)`.
pub fn satake_gspin_even_split(data: &UnramifiedData) -> Result<SatakeParameter> {
    split_parameter(data, SimilitudeFamily::GSO, GroupKind::gspin_even_split(data.chi.len())?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiSplitSatake {
    /// `t_π`, with the Galois block in the middle.
    pub full: SatakeParameter,
    /// `t'_π ∈ GSp_{2(n−1)}(ℂ)`, with `μ(t'_π) = μ(t_π)`.
    pub reduced: SatakeParameter,
    /// The block `[[α, βa], [β, α]]` on its own.
    pub block: RationalMatrix,
    /// `a` is a rational square, so the form is in fact split.
    pub a_is_square: bool,
}

/// Parameters of an unramified representation of `GSpin^a_{2n}`, `n ≥ 2`.
pub fn satake_quasisplit(data: &UnramifiedData) -> Result<QuasiSplitSatake> {
    let qs = data.quasi_split.as_ref().ok_or(Error::NotQuasiSplit)?;
    data.check_nonzero()?;
    let n = data.chi.len() + 1;
    if n < 2 {
        return Err(Error::InvalidRank { family: "GSpinEvenQuasiSplit", rank: n });
    }
    if &qs.alpha * &qs.alpha - &qs.a * &qs.beta * &qs.beta != data.chi0 {
        return Err(Error::NormMismatch);
    }
    let block = RationalMatrix::from_rows(alloc::vec![
        alloc::vec![qs.alpha.clone(), &qs.beta * &qs.a],
        alloc::vec![qs.beta.clone(), qs.alpha.clone()],
    ])?;
    let outer = paired_diagonal(&data.chi0, &data.chi);
    let mut full = RationalMatrix::zeros(2 * n);
    for (i, v) in outer[..n - 1].iter().enumerate() {
        full.set(i, i, v.clone());
    }
    for (i, v) in outer[n - 1..].iter().enumerate() {
        full.set(n + 1 + i, n + 1 + i, v.clone());
    }
    for r in 0..2 {
        for c in 0..2 {
            full.set(n - 1 + r, n - 1 + c, block.get(r, c).clone());
        }
    }
    let full = SatakeParameter::new(full, data.chi0.clone(), GroupKind::gspin_even_quasi_split(n, qs.a.clone())?)?;
    let reduced = split_parameter(data, SimilitudeFamily::GSp, GroupKind::gspin_odd(n - 1)?)?;
    Ok(QuasiSplitSatake { full, reduced, block, a_is_square: is_square(&qs.a) })
}
