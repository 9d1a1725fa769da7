//! Local L-factors and the unramified zeta series, as truncated series in
//! `T = q^{-s}`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::characters::{
    enumerate_dominant, schur_gl, schur_jacobi_trudi, similitude_char, sym2_matrix, tensor_matrix, wedge2_matrix,
    DominantWeight, EigenvalueList, NormalizationExponent, SimilitudeFamily,
};
use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::rational::{frac, int, Rational};
use crate::root_data::{modulus_exponent_from_root_datum, GroupKind, ModulusRole};
use crate::satake::SatakeParameter;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    AOdd,
    AEvenSplit,
    AEvenQuasiSplit,
    BOdd,
    BEvenSplit,
    BEvenQuasiSplit,
}

impl CaseKind {
    pub const ALL: [Self; 6] =
        [Self::AOdd, Self::AEvenSplit, Self::AEvenQuasiSplit, Self::BOdd, Self::BEvenSplit, Self::BEvenQuasiSplit];

    pub fn is_case_a(self) -> bool {
        matches!(self, Self::AOdd | Self::AEvenSplit | Self::AEvenQuasiSplit)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Self::AOdd | Self::BOdd)
    }

    pub fn is_quasi_split(self) -> bool {
        matches!(self, Self::AEvenQuasiSplit | Self::BEvenQuasiSplit)
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::AOdd => "a-odd",
            Self::AEvenSplit => "a-even-split",
            Self::AEvenQuasiSplit => "a-even-quasi-split",
            Self::BOdd => "b-odd",
            Self::BEvenSplit => "b-even-split",
            Self::BEvenQuasiSplit => "b-even-quasi-split",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.label() == label)
    }
}

/// The second representation `ϱ` of `GL`, twisted by `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SecondRep {
    Wedge2,
    Sym2,
}

impl SecondRep {
    pub fn label(self) -> &'static str {
        match self {
            Self::Wedge2 => "wedge2",
            Self::Sym2 => "sym2",
        }
    }
}

/// One of the six local situations, with the ranks involved.
///
/// In case A, `π` lives on `H` (dual `GSp_{2m}` or `GSO_{2m}`) and `τ` on
/// `GL_n`. In case B, `π` lives on `G` (dual of rank `n`) and `τ` on `GL_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdentityCase {
    kind: CaseKind,
    n: usize,
    m: usize,
}

impl IdentityCase {
    pub fn new(kind: CaseKind, n: usize, m: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank { family: "GL", rank: n });
        }
        let ok = match kind {
            CaseKind::AOdd => n <= m,
            CaseKind::AEvenSplit | CaseKind::AEvenQuasiSplit => n < m,
            CaseKind::BOdd => m > n,
            CaseKind::BEvenSplit => m >= n,
            CaseKind::BEvenQuasiSplit => m >= n && n >= 2,
        };
        if !ok {
            return Err(Error::CaseMismatch("ranks violate the constraint for this case"));
        }
        Ok(Self { kind, n, m })
    }

    pub fn kind(&self) -> CaseKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `u = (n−2)/2` (odd) or `(n−1)/2` (even).
    pub fn shift_u(&self) -> Rational {
        let n = self.n as i64;
        if self.kind.is_odd() {
            frac(n - 2, 2)
        } else {
            frac(n - 1, 2)
        }
    }

    /// `ℓ = m−n` (odd) or `m−n−1` (even).
    pub fn shift_ell(&self) -> i64 {
        let (n, m) = (self.n as i64, self.m as i64);
        if self.kind.is_odd() {
            m - n
        } else {
            m - n - 1
        }
    }

    pub fn second_rep(&self) -> SecondRep {
        match self.kind {
            CaseKind::AEvenSplit | CaseKind::BEvenSplit => SecondRep::Sym2,
            _ => SecondRep::Wedge2,
        }
    }

    /// The group `G` whose modulus character enters the case A integral:
    /// `GSpin_{2n}` (odd) or `GSpin_{2n+1}` (even).
    pub fn small_group(&self) -> Result<GroupKind> {
        match self.kind {
            CaseKind::AOdd => GroupKind::gspin_even_split(self.n),
            CaseKind::AEvenSplit | CaseKind::AEvenQuasiSplit => GroupKind::gspin_odd(self.n),
            _ => Err(Error::CaseMismatch("the small group is a case A notion")),
        }
    }

    /// Family and rank of the dual-group characters in the zeta series.
    pub fn character_group(&self) -> Result<(SimilitudeFamily, usize)> {
        match self.kind {
            CaseKind::AOdd => Ok((SimilitudeFamily::GSp, self.m)),
            CaseKind::AEvenSplit => Ok((SimilitudeFamily::GSO, self.m)),
            CaseKind::AEvenQuasiSplit => Ok((SimilitudeFamily::GSp, self.m - 1)),
            _ => Err(Error::CaseMismatch("zeta series are computed for case A only")),
        }
    }
}

impl fmt::Display for IdentityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} m={}", self.kind.label(), self.n, self.m)
    }
}

/// `det(I − M·T)` through Newton's identities on `tr(M^j)`.
pub fn det_one_minus_mt(m: &RationalMatrix, order: usize) -> TruncatedSeries {
    let top = m.dim().min(order);
    let p = m.power_traces(top);
    // k·e_k = Σ_{j=1}^{k} (−1)^{j−1} e_{k−j} p_j
    let mut e = vec![Rational::zero(); top + 1];
    e[0] = Rational::one();
    for k in 1..=top {
        let mut s = Rational::zero();
        for j in 1..=k {
            let term = &e[k - j] * &p[j - 1];
            if j % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        e[k] = s / int(k as i64);
    }
    let coefficients = e.into_iter().enumerate().map(|(k, c)| if k % 2 == 0 { c } else { -c }).collect();
    TruncatedSeries::from_coefficients(coefficients, order)
}

pub fn series_inverse(p: &TruncatedSeries) -> Result<TruncatedSeries> {
    p.inverse()
}

pub fn substitute_t_squared(p: &TruncatedSeries) -> TruncatedSeries {
    p.substitute_t_squared()
}

/// `det(I − M·T)^{-1}`.
pub fn l_factor(m: &RationalMatrix, order: usize) -> Result<TruncatedSeries> {
    if m.dim() == 0 {
        return Ok(TruncatedSeries::one(order));
    }
    det_one_minus_mt(m, order).inverse()
}

/// `L(s, π × τ) = det(I − (t_π ⊗ t_τ)T)^{-1}`.
pub fn rankin_selberg_l(t_pi: &SatakeParameter, t_tau: &SatakeParameter, order: usize) -> Result<TruncatedSeries> {
    l_factor(&tensor_matrix(t_pi.matrix(), t_tau.matrix()), order)
}

/// `L(2s, τ, ϱ ⊗ ω) = det(I − ω·ϱ(t_τ)·T²)^{-1}`.
pub fn second_l(t_tau: &SatakeParameter, omega: &Rational, which: SecondRep, order: usize) -> Result<TruncatedSeries> {
    let rep = match which {
        SecondRep::Wedge2 => wedge2_matrix(t_tau.matrix()),
        SecondRep::Sym2 => sym2_matrix(t_tau.matrix()),
    };
    if rep.dim() == 0 {
        return Ok(TruncatedSeries::one(order));
    }
    det_one_minus_mt(&rep.scale(omega), order).substitute_t_squared().inverse()
}

/// `s_δ(x)`, by the bialternant when `x` is regular and Jacobi–Trudi otherwise.
pub fn gl_character(delta: &DominantWeight, x: &EigenvalueList) -> Result<Rational> {
    match schur_gl(delta, x) {
        Err(Error::SingularAlternant) => schur_jacobi_trudi(delta, x),
        other => other,
    }
}

/// One `δ`-stratum of the zeta series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTerm {
    pub delta: DominantWeight,
    /// Normalized similitude character of `t_π` at `δ̄`.
    pub pi_character: Rational,
    /// `s_δ(t_τ)`.
    pub tau_character: Rational,
}

impl ZetaTerm {
    pub fn value(&self) -> Rational {
        &self.pi_character * &self.tau_character
    }
}

fn check_zeta_inputs(case: &IdentityCase, t_pi: &SatakeParameter, t_tau: &SatakeParameter) -> Result<(SimilitudeFamily, usize)> {
    let (family, rank) = case.character_group()?;
    if t_pi.dim() != 2 * rank {
        return Err(Error::RankMismatch { expected: 2 * rank, found: t_pi.dim() / 2 });
    }
    if t_tau.dim() != case.n() {
        return Err(Error::RankMismatch { expected: case.n(), found: t_tau.dim() });
    }
    Ok((family, rank))
}

/// Every `δ`-stratum with `tr δ ≤ order`, in order of `tr δ` and then
/// lexicographically descending. For the quasi-split case pass `t'_π`.
pub fn zeta_terms(
    case: &IdentityCase,
    t_pi: &SatakeParameter,
    t_tau: &SatakeParameter,
    order: usize,
    exponent: NormalizationExponent,
) -> Result<Vec<ZetaTerm>> {
    let (family, rank) = check_zeta_inputs(case, t_pi, t_tau)?;
    let torus = t_pi.torus_part()?;
    let tau = t_tau
        .diag_eigenvalues()
        .ok_or(Error::DimensionMismatch("GL parameter is not diagonal"))?;
    let mut terms = Vec::new();
    for j in 0..=order as u32 {
        for delta in enumerate_dominant(case.n(), j) {
            let padded = delta.padded(rank)?;
            let pi_character = similitude_char(family, &padded, &torus, t_pi.mu(), exponent)?;
            let tau_character = gl_character(&delta, tau)?;
            terms.push(ZetaTerm { delta, pi_character, tau_character });
        }
    }
    Ok(terms)
}

fn sum_terms(terms: &[ZetaTerm], order: usize) -> TruncatedSeries {
    let mut series = TruncatedSeries::zero(order);
    for term in terms {
        let r = term.delta.trace() as usize;
        let c = series.coefficient(r) + term.value();
        series.set_coefficient(r, c);
    }
    series
}

/// `Σ_δ μ^{e(δ)} χ_δ̄(μ^{-1/2} t_π) s_δ(t_τ) T^{tr δ}`.
pub fn zeta_series(
    case: &IdentityCase,
    t_pi: &SatakeParameter,
    t_tau: &SatakeParameter,
    order: usize,
    exponent: NormalizationExponent,
) -> Result<TruncatedSeries> {
    Ok(sum_terms(&zeta_terms(case, t_pi, t_tau, order, exponent)?, order))
}

/// A rational number times a symbolic power of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct QMonomial {
    coefficient: Rational,
    q_exponent: Rational,
}

impl QMonomial {
    fn new(coefficient: Rational, q_exponent: Rational) -> Self {
        Self { coefficient, q_exponent }
    }

    fn times(self, other: Self) -> Self {
        Self::new(self.coefficient * other.coefficient, self.q_exponent + other.q_exponent)
    }
}

/// The integral `Σ_δ W⁰_π(ϖ^δ̄) W⁰_τ(ϖ^δ) δ_G^{-1}(ϖ^δ) q^{-(s+u−ℓ) tr δ}`
/// evaluated term by term, with `W⁰(ϖ^λ) = δ^{1/2}(ϖ^λ) χ_λ` and the modulus
/// exponents read from the root data. The power of `q` must cancel in
/// every term.
pub fn zeta_from_whittaker(
    case: &IdentityCase,
    t_pi: &SatakeParameter,
    t_tau: &SatakeParameter,
    order: usize,
    exponent: NormalizationExponent,
) -> Result<TruncatedSeries> {
    let shift = case.shift_u() - int(case.shift_ell());
    let half = frac(1, 2);
    let mut series = TruncatedSeries::zero(order);
    for term in zeta_terms(case, t_pi, t_tau, order, exponent)? {
        let e_h = modulus_exponent_from_root_datum(ModulusRole::DeltaH, case, &term.delta)?.0;
        let e_gl = modulus_exponent_from_root_datum(ModulusRole::DeltaGL, case, &term.delta)?.0;
        let e_g = modulus_exponent_from_root_datum(ModulusRole::DeltaG, case, &term.delta)?.0;
        let trace = int(term.delta.trace() as i64);
        let w_pi = QMonomial::new(term.pi_character.clone(), -(&e_h * &half));
        let w_tau = QMonomial::new(term.tau_character.clone(), -(&e_gl * &half));
        let inverse_modulus = QMonomial::new(Rational::one(), e_g);
        let shifted = QMonomial::new(Rational::one(), -(&shift * &trace));
        let total = w_pi.times(w_tau).times(inverse_modulus).times(shifted);
        if !total.q_exponent.is_zero() {
            return Err(Error::NonCancellingQExponent);
        }
        let r = term.delta.trace() as usize;
        let c = series.coefficient(r) + total.coefficient;
        series.set_coefficient(r, c);
    }
    Ok(series)
}
