//! Based root data of the general spin groups and of `GL_n`.
//!
//! Lattices are `ℤ^{n+1}` with generators `e_0, …, e_n` (characters) and
//! `e*_0, …, e*_n` (cocharacters). Index 0 is always the `e_0` generator; for
//! `GL_n` it is carried along but never used.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::characters::DominantWeight;
use crate::error::{Error, Result};
use crate::lfactors::{CaseKind, IdentityCase};
use crate::rational::{frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    GSpinOdd,
    GSpinEvenSplit,
    GSpinEvenQuasiSplit,
    GL,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::GSpinOdd => "GSpin(2n+1)",
            Family::GSpinEvenSplit => "GSpin(2n)",
            Family::GSpinEvenQuasiSplit => "GSpin^a(2n)",
            Family::GL => "GL(n)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupKind {
    family: Family,
    rank: usize,
    square_class: Option<Rational>,
}

impl GroupKind {
    pub fn new(family: Family, rank: usize, square_class: Option<Rational>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank { family: family.name(), rank });
        }
        match (family, &square_class) {
            (Family::GSpinEvenQuasiSplit, Some(a)) if !a.is_zero() => {}
            (Family::GSpinEvenQuasiSplit, _) => {
                return Err(Error::CaseMismatch("quasi-split kind needs a nonzero square-class datum"))
            }
            (_, None) => {}
            (_, Some(_)) => return Err(Error::CaseMismatch("only the quasi-split kind carries a")),
        }
        Ok(Self { family, rank, square_class })
    }

    pub fn gspin_odd(n: usize) -> Result<Self> {
        Self::new(Family::GSpinOdd, n, None)
    }

    pub fn gspin_even_split(n: usize) -> Result<Self> {
        Self::new(Family::GSpinEvenSplit, n, None)
    }

    pub fn gspin_even_quasi_split(n: usize, a: Rational) -> Result<Self> {
        Self::new(Family::GSpinEvenQuasiSplit, n, Some(a))
    }

    pub fn gl(n: usize) -> Result<Self> {
        Self::new(Family::GL, n, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn square_class(&self) -> Option<&Rational> {
        self.square_class.as_ref()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Char,
    Cochar,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    side: Side,
    coeffs: Vec<i64>,
}

impl LatticeVector {
    pub fn zero(side: Side, rank: usize) -> Self {
        Self { side, coeffs: vec![0; rank + 1] }
    }

    /// The generator `e_i` (or `e*_i`).
    pub fn basis(side: Side, rank: usize, i: usize) -> Self {
        let mut v = Self::zero(side, rank);
        v.coeffs[i] = 1;
        v
    }

    pub fn from_coeffs(side: Side, coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "lattice vectors have length n+1 >= 1");
        Self { side, coeffs }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn combine(&self, other: &Self, c: i64) -> Self {
        debug_assert_eq!(self.side, other.side);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + c * b).collect();
        Self { side: self.side, coeffs }
    }

    pub fn plus(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    pub fn scaled(&self, c: i64) -> Self {
        Self { side: self.side, coeffs: self.coeffs.iter().map(|x| c * x).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1)
    }

    /// `Σ k_i e*_i` for a dominant weight, padded with zeros up to `rank`.
    pub fn cocharacter_of(weight: &DominantWeight, rank: usize) -> Result<Self> {
        if weight.len() > rank {
            return Err(Error::RankMismatch { expected: rank, found: weight.len() });
        }
        let mut v = Self::zero(Side::Cochar, rank);
        for (i, k) in weight.parts().iter().enumerate() {
            v.coeffs[i + 1] = i64::from(*k);
        }
        Ok(v)
    }
}

/// `⟨x, y⟩ = Σ x_i y_i` for a character `x` and a cocharacter `y`.
pub fn pairing(x: &LatticeVector, y: &LatticeVector) -> Result<i64> {
    if x.side != Side::Char || y.side != Side::Cochar {
        return Err(Error::CaseMismatch("pairing takes a character and a cocharacter"));
    }
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch { expected: x.rank(), found: y.rank() });
    }
    Ok(x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| a * b).sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    kind: GroupKind,
    roots: Vec<LatticeVector>,
    /// `coroots[i]` is the coroot of `roots[i]`.
    coroots: Vec<LatticeVector>,
    simple_roots: Vec<LatticeVector>,
    simple_coroots: Vec<LatticeVector>,
}

fn e(side: Side, n: usize, i: usize) -> LatticeVector {
    LatticeVector::basis(side, n, i)
}

pub fn build_root_datum(kind: GroupKind) -> Result<RootDatum> {
    let n = kind.rank();
    let (c, k) = (Side::Char, Side::Cochar);
    let mut pairs: Vec<(LatticeVector, LatticeVector)> = Vec::new();
    let mut push_pm = |root: LatticeVector, coroot: LatticeVector| {
        pairs.push((root.neg(), coroot.neg()));
        pairs.push((root, coroot));
    };

    // (e_i - e_j)^∨ = e*_i - e*_j for every family.
    for i in 1..=n {
        for j in i + 1..=n {
            push_pm(e(c, n, i).minus(&e(c, n, j)), e(k, n, i).minus(&e(k, n, j)));
        }
    }
    if kind.family() != Family::GL {
        // (e_i + e_j)^∨ = e*_i + e*_j - e*_0
        for i in 1..=n {
            for j in i + 1..=n {
                push_pm(
                    e(c, n, i).plus(&e(c, n, j)),
                    e(k, n, i).plus(&e(k, n, j)).minus(&e(k, n, 0)),
                );
            }
        }
    }
    if kind.family() == Family::GSpinOdd {
        // (e_i)^∨ = 2e*_i - e*_0
        for i in 1..=n {
            push_pm(e(c, n, i), e(k, n, i).scaled(2).minus(&e(k, n, 0)));
        }
    }
    let (roots, coroots): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();

    let mut simple_roots: Vec<LatticeVector> = (1..n).map(|i| e(c, n, i).minus(&e(c, n, i + 1))).collect();
    let mut simple_coroots: Vec<LatticeVector> =
        (1..n).map(|i| e(k, n, i).minus(&e(k, n, i + 1))).collect();
    match kind.family() {
        Family::GL => {}
        Family::GSpinOdd => {
            simple_roots.push(e(c, n, n));
            simple_coroots.push(e(k, n, n).scaled(2).minus(&e(k, n, 0)));
        }
        Family::GSpinEvenSplit | Family::GSpinEvenQuasiSplit => {
            if n >= 2 {
                simple_roots.push(e(c, n, n - 1).plus(&e(c, n, n)));
                simple_coroots.push(e(k, n, n - 1).plus(&e(k, n, n)).minus(&e(k, n, 0)));
            } else {
                // GSpin_2 is a torus.
                simple_roots.clear();
                simple_coroots.clear();
            }
        }
    }

    Ok(RootDatum { kind, roots, coroots, simple_roots, simple_coroots })
}

impl RootDatum {
    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn roots(&self) -> &[LatticeVector] {
        &self.roots
    }

    pub fn coroots(&self) -> &[LatticeVector] {
        &self.coroots
    }

    pub fn simple_roots(&self) -> &[LatticeVector] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[LatticeVector] {
        &self.simple_coroots
    }

    pub fn coroot_of(&self, root: &LatticeVector) -> Result<LatticeVector> {
        self.roots
            .iter()
            .position(|r| r == root)
            .map(|i| self.coroots[i].clone())
            .ok_or(Error::NotARoot)
    }

    /// Roots whose first nonzero coefficient among `e_1..e_n` is positive; for
    /// the simple systems fixed here these are exactly the nonnegative integer
    /// combinations of `Δ`.
    pub fn positive_roots(&self) -> impl Iterator<Item = &LatticeVector> {
        self.roots
            .iter()
            .filter(|r| r.coeffs[1..].iter().find(|&&x| x != 0).is_some_and(|&x| x > 0))
    }

    /// Sum of the positive roots.
    pub fn two_rho(&self) -> LatticeVector {
        self.positive_roots()
            .fold(LatticeVector::zero(Side::Char, self.rank()), |acc, r| acc.plus(r))
    }

    /// `(⟨α_i, α_j^∨⟩)_{i,j}` over the simple system.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| {
                self.simple_coroots
                    .iter()
                    .map(|b| pairing(a, b).expect("simple roots and coroots share a rank"))
                    .collect()
            })
            .collect()
    }

    /// `s_α(v)` computed directly from the reflection formula.
    pub fn reflect(&self, root: &LatticeVector, v: &LatticeVector) -> Result<LatticeVector> {
        let coroot = self.coroot_of(root)?;
        check_rank(self, v)?;
        Ok(match v.side {
            Side::Char => v.minus(&root.scaled(pairing(v, &coroot)?)),
            Side::Cochar => v.minus(&coroot.scaled(pairing(root, v)?)),
        })
    }

    /// The simple reflection `s_{α_i}` as a signed permutation.
    pub fn simple_reflection(&self, index: usize) -> Result<WeylElement> {
        let n = self.rank();
        if index >= self.simple_roots.len() {
            return Err(Error::InvalidRank { family: self.kind.family().name(), rank: n });
        }
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut signs = vec![1i8; n];
        let last = self.simple_roots.len() - 1;
        match self.kind.family() {
            Family::GSpinOdd if index == last => signs[n - 1] = -1,
            Family::GSpinEvenSplit | Family::GSpinEvenQuasiSplit if index == last => {
                perm.swap(n - 2, n - 1);
                signs[n - 2] = -1;
                signs[n - 1] = -1;
            }
            _ => perm.swap(index, index + 1),
        }
        WeylElement::new(&self.kind, perm, signs)
    }
}

fn check_rank(datum: &RootDatum, v: &LatticeVector) -> Result<()> {
    if v.rank() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: v.rank() });
    }
    Ok(())
}

/// Weyl group element `(p, ε)`: `p` a permutation of `1..=n`, `ε ∈ {±1}^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    /// `perm[i-1] = p(i)` (1-based values), `signs[j-1] = ε_j`.
    pub fn new(kind: &GroupKind, perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = kind.rank();
        if perm.len() != n || signs.len() != n {
            return Err(Error::RankMismatch { expected: n, found: perm.len().max(signs.len()) });
        }
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if p == 0 || p > n || seen[p] {
                return Err(Error::InvalidWeylElement("not a permutation of 1..n"));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidWeylElement("signs must be +1 or -1"));
        }
        let negatives = signs.iter().filter(|&&s| s == -1).count();
        match kind.family() {
            Family::GL if negatives > 0 => {
                return Err(Error::InvalidWeylElement("GL Weyl group has no sign changes"))
            }
            Family::GSpinEvenSplit | Family::GSpinEvenQuasiSplit if negatives % 2 == 1 => {
                return Err(Error::InvalidWeylElement("even GSpin needs an even number of sign changes"))
            }
            _ => {}
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(kind: &GroupKind) -> Self {
        let n = kind.rank();
        Self { perm: (1..=n).collect(), signs: vec![1; n] }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

pub fn weyl_act(datum: &RootDatum, w: &WeylElement, v: &LatticeVector) -> Result<LatticeVector> {
    check_rank(datum, v)?;
    if w.perm.len() != datum.rank() {
        return Err(Error::RankMismatch { expected: datum.rank(), found: w.perm.len() });
    }
    let mut out = LatticeVector::zero(v.side, datum.rank());
    let x0 = v.coeffs[0];
    out.coeffs[0] += x0;
    for (i, &xi) in v.coeffs.iter().enumerate().skip(1) {
        let p = w.perm[i - 1];
        let negative = w.signs[p - 1] == -1;
        match (v.side, negative) {
            (_, false) => out.coeffs[p] += xi,
            (Side::Char, true) => out.coeffs[p] -= xi,
            (Side::Cochar, true) => {
                out.coeffs[0] += xi;
                out.coeffs[p] -= xi;
            }
        }
    }
    if v.side == Side::Char {
        // w·e_0 = e_0 + Σ_{ε_j = -1} e_j
        for (j, &s) in w.signs.iter().enumerate() {
            if s == -1 {
                out.coeffs[j + 1] += x0;
            }
        }
    }
    Ok(out)
}

/// The nontrivial Galois element on `X` and `X^∨` of `GSpin^a_{2n}`.
pub fn galois_act(datum: &RootDatum, v: &LatticeVector) -> Result<LatticeVector> {
    if datum.kind.family() != Family::GSpinEvenQuasiSplit {
        return Err(Error::NotQuasiSplit);
    }
    check_rank(datum, v)?;
    let n = datum.rank();
    let mut out = v.clone();
    match v.side {
        // ν(e_0) = e_0 + e_n, ν(e_n) = -e_n
        Side::Char => out.coeffs[n] = v.coeffs[0] - v.coeffs[n],
        // ν(e*_n) = -e*_n + e*_0
        Side::Cochar => {
            out.coeffs[0] = v.coeffs[0] + v.coeffs[n];
            out.coeffs[n] = -v.coeffs[n];
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModulusRole {
    /// Borel of the smaller spin group `G`.
    DeltaG,
    /// Borel of the larger spin group `H`.
    DeltaH,
    /// Borel of `GL_n`.
    DeltaGL,
}

/// Exponent `e` with modulus value `q^{-e}` at `t = ϖ^δ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModulusExponent(pub Rational);

fn check_case_weight(case: &IdentityCase, delta: &DominantWeight) -> Result<()> {
    if !case.kind().is_case_a() {
        return Err(Error::CaseMismatch("modulus exponents are defined for case A only"));
    }
    if delta.len() != case.n() {
        return Err(Error::CaseMismatch("weight must have n parts"));
    }
    Ok(())
}

/// The closed-form monomial exponents read off the root data.
pub fn modulus_exponent(
    role: ModulusRole,
    case: &IdentityCase,
    delta: &DominantWeight,
) -> Result<ModulusExponent> {
    check_case_weight(case, delta)?;
    let (n, m) = (case.n() as i64, case.m() as i64);
    let odd = case.kind() == CaseKind::AOdd;
    let weight = |i: i64| -> i64 {
        match (role, odd) {
            (ModulusRole::DeltaG, true) => 2 * n - 2 * i,
            (ModulusRole::DeltaG, false) => 2 * n - 2 * i + 1,
            (ModulusRole::DeltaH, true) => 2 * m - 2 * i + 1,
            (ModulusRole::DeltaH, false) => 2 * m - 2 * i,
            (ModulusRole::DeltaGL, _) => n - 2 * i + 1,
        }
    };
    let e: i64 = delta
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &k)| weight(idx as i64 + 1) * i64::from(k))
        .sum();
    Ok(ModulusExponent(int(e)))
}

/// The same exponent computed generically as `⟨2ρ, δ⟩`.
pub fn modulus_exponent_from_root_datum(
    role: ModulusRole,
    case: &IdentityCase,
    delta: &DominantWeight,
) -> Result<ModulusExponent> {
    check_case_weight(case, delta)?;
    let kind = match role {
        ModulusRole::DeltaG => case.small_group()?,
        // The quasi-split datum is the split one plus ν; the modulus character
        // of its Borel sums over all absolute positive roots.
        ModulusRole::DeltaH => match case.kind() {
            CaseKind::AOdd => GroupKind::gspin_odd(case.m())?,
            _ => GroupKind::gspin_even_split(case.m())?,
        },
        ModulusRole::DeltaGL => GroupKind::gl(case.n())?,
    };
    let datum = build_root_datum(kind)?;
    let cochar = LatticeVector::cocharacter_of(delta, datum.rank())?;
    Ok(ModulusExponent(int(pairing(&datum.two_rho(), &cochar)?)))
}

/// `c` in `e_G = ½ e_H + ½ e_GL + c · tr δ`.
pub fn modulus_relation_constant(case: &IdentityCase) -> Result<Rational> {
    let (n, m) = (case.n() as i64, case.m() as i64);
    match case.kind() {
        CaseKind::AOdd => Ok(frac(3 * n - 2 * m - 2, 2)),
        CaseKind::AEvenSplit | CaseKind::AEvenQuasiSplit => Ok(frac(3 * n - 2 * m + 1, 2)),
        _ => Err(Error::CaseMismatch("modulus relation is a case A statement")),
    }
}

impl ModulusExponent {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(n: usize, coeffs: &[i64]) -> LatticeVector {
        assert_eq!(coeffs.len(), n + 1);
        LatticeVector::from_coeffs(Side::Char, coeffs.to_vec())
    }

    fn kv(n: usize, coeffs: &[i64]) -> LatticeVector {
        assert_eq!(coeffs.len(), n + 1);
        LatticeVector::from_coeffs(Side::Cochar, coeffs.to_vec())
    }

    #[test]
    fn odd_rank_two_simple_system() {
        let d = build_root_datum(GroupKind::gspin_odd(2).unwrap()).unwrap();
        assert_eq!(d.simple_roots(), &[cv(2, &[0, 1, -1]), cv(2, &[0, 0, 1])]);
        assert_eq!(d.simple_coroots(), &[kv(2, &[0, 1, -1]), kv(2, &[-1, 0, 2])]);
        assert_eq!(d.roots().len(), 8);
        assert_eq!(d.cartan_matrix(), vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn even_rank_two_simple_system() {
        let d = build_root_datum(GroupKind::gspin_even_split(2).unwrap()).unwrap();
        assert_eq!(d.simple_roots(), &[cv(2, &[0, 1, -1]), cv(2, &[0, 1, 1])]);
        assert_eq!(d.cartan_matrix(), vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn gl_one_and_gspin_two_are_tori() {
        let d = build_root_datum(GroupKind::gl(1).unwrap()).unwrap();
        assert!(d.simple_roots().is_empty() && d.roots().is_empty());
        let d = build_root_datum(GroupKind::gspin_even_split(1).unwrap()).unwrap();
        assert!(d.simple_roots().is_empty());
        assert!(matches!(d.simple_reflection(0), Err(Error::InvalidRank { .. })));
    }

    #[test]
    fn invalid_kinds() {
        assert!(matches!(GroupKind::gspin_odd(0), Err(Error::InvalidRank { .. })));
        assert!(GroupKind::gspin_even_quasi_split(2, int(0)).is_err());
    }

    #[test]
    fn coroot_examples() {
        let d = build_root_datum(GroupKind::gspin_odd(2).unwrap()).unwrap();
        assert_eq!(d.coroot_of(&cv(2, &[0, 1, 1])).unwrap(), kv(2, &[-1, 1, 1]));
        assert_eq!(d.coroot_of(&cv(2, &[0, 1, 0])).unwrap(), kv(2, &[-1, 2, 0]));
        assert_eq!(d.coroot_of(&cv(2, &[1, 0, 0])), Err(Error::NotARoot));
        let d = build_root_datum(GroupKind::gspin_even_split(2).unwrap()).unwrap();
        assert_eq!(d.coroot_of(&cv(2, &[0, 1, -1])).unwrap(), kv(2, &[0, 1, -1]));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&cv(2, &[0, 1, 0]), &kv(2, &[-1, 2, 0])), Ok(2));
        assert_eq!(pairing(&cv(2, &[0, 1, 1]), &kv(2, &[0, 1, -1])), Ok(0));
        assert_eq!(pairing(&cv(2, &[0, 0, 1]), &kv(2, &[0, 0, 1])), Ok(1));
        assert!(matches!(pairing(&cv(2, &[0, 0, 1]), &kv(1, &[0, 1])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn weyl_action_examples() {
        let kind = GroupKind::gspin_odd(2).unwrap();
        let d = build_root_datum(kind.clone()).unwrap();
        let w = WeylElement::new(&kind, vec![1, 2], vec![-1, 1]).unwrap();
        assert_eq!(weyl_act(&d, &w, &cv(2, &[0, 1, 0])).unwrap(), cv(2, &[0, -1, 0]));
        assert_eq!(weyl_act(&d, &w, &cv(2, &[1, 0, 0])).unwrap(), cv(2, &[1, 1, 0]));
        assert_eq!(weyl_act(&d, &w, &kv(2, &[0, 1, 0])).unwrap(), kv(2, &[1, -1, 0]));
        assert_eq!(weyl_act(&d, &w, &kv(2, &[1, 0, 0])).unwrap(), kv(2, &[1, 0, 0]));
    }

    #[test]
    fn even_weyl_elements_need_even_sign_changes() {
        let kind = GroupKind::gspin_even_split(2).unwrap();
        assert!(WeylElement::new(&kind, vec![1, 2], vec![-1, 1]).is_err());
        assert!(WeylElement::new(&kind, vec![2, 1], vec![-1, -1]).is_ok());
        assert!(WeylElement::new(&GroupKind::gl(2).unwrap(), vec![2, 1], vec![1, -1]).is_err());
    }

    #[test]
    fn simple_reflections_match_reflection_formula() {
        for kind in [
            GroupKind::gspin_odd(3).unwrap(),
            GroupKind::gspin_even_split(3).unwrap(),
            GroupKind::gl(3).unwrap(),
        ] {
            let d = build_root_datum(kind).unwrap();
            for (i, alpha) in d.simple_roots().iter().enumerate() {
                let w = d.simple_reflection(i).unwrap();
                for j in 0..=3 {
                    for side in [Side::Char, Side::Cochar] {
                        let v = LatticeVector::basis(side, 3, j);
                        assert_eq!(weyl_act(&d, &w, &v).unwrap(), d.reflect(alpha, &v).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn galois_examples() {
        let d = build_root_datum(GroupKind::gspin_even_quasi_split(3, int(5)).unwrap()).unwrap();
        assert_eq!(galois_act(&d, &cv(3, &[0, 0, 0, 1])).unwrap(), cv(3, &[0, 0, 0, -1]));
        assert_eq!(galois_act(&d, &cv(3, &[1, 0, 0, 0])).unwrap(), cv(3, &[1, 0, 0, 1]));
        assert_eq!(galois_act(&d, &cv(3, &[0, 1, 0, 0])).unwrap(), cv(3, &[0, 1, 0, 0]));
        assert_eq!(galois_act(&d, &kv(3, &[0, 0, 0, 1])).unwrap(), kv(3, &[1, 0, 0, -1]));
        let split = build_root_datum(GroupKind::gspin_even_split(3).unwrap()).unwrap();
        assert_eq!(galois_act(&split, &cv(3, &[1, 0, 0, 0])), Err(Error::NotQuasiSplit));
    }

    #[test]
    fn galois_swaps_the_fork_of_the_diagram() {
        let d = build_root_datum(GroupKind::gspin_even_quasi_split(4, int(3)).unwrap()).unwrap();
        let simple = d.simple_roots();
        let images: Vec<_> = simple.iter().map(|a| galois_act(&d, a).unwrap()).collect();
        assert_eq!(images[0], simple[0]);
        assert_eq!(images[1], simple[1]);
        assert_eq!(images[2], simple[3]);
        assert_eq!(images[3], simple[2]);
        let coimages: Vec<_> = d.simple_coroots().iter().map(|a| galois_act(&d, a).unwrap()).collect();
        assert_eq!(coimages[2], d.simple_coroots()[3]);
    }

    #[test]
    fn two_rho_of_gspin4() {
        let d = build_root_datum(GroupKind::gspin_even_split(2).unwrap()).unwrap();
        assert_eq!(d.two_rho(), cv(2, &[0, 2, 0]));
    }
}
