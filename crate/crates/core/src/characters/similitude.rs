//! Characters of `GSp_{2k}` and `GSO_{2k}`.
//!
//! A similitude element with torus part `t = (t_1..t_k)` and multiplier `μ`
//! has eigenvalues `(t_1, …, t_k, μ/t_k, …, μ/t_1)`. Its character for the
//! representation `(δ̄; e)` is `μ^e · χ_δ̄(μ^{-1/2} g)`. Each weight `w` of the
//! `Sp`/`SO` representation contributes `t^w μ^{e − |w|/2}`, and since
//! `|w| ≡ tr δ̄ (mod 2)` the half-trace normalization never needs `√μ`.

use num_traits::Zero;

use super::alternant::{char_so_even, char_sp};
use super::freudenthal::{weight_multiplicities, ClassicalGroup};
use super::weights::{EigenvalueList, PaddedWeight};
use crate::error::{Error, Result};
use crate::rational::{pow, sqrt_exact, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimilitudeFamily {
    GSp,
    GSO,
}

impl SimilitudeFamily {
    fn group(self) -> ClassicalGroup {
        match self {
            SimilitudeFamily::GSp => ClassicalGroup::Sp,
            SimilitudeFamily::GSO => ClassicalGroup::SOeven,
        }
    }
}

/// The power of `μ` in front of the `Sp`/`SO` character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NormalizationExponent {
    /// `μ^{tr δ}`
    TraceDelta,
    /// `μ^{tr δ / 2}`
    HalfTraceDelta,
}

impl NormalizationExponent {
    pub const CANDIDATES: [Self; 2] = [Self::TraceDelta, Self::HalfTraceDelta];

    pub fn label(self) -> &'static str {
        match self {
            Self::TraceDelta => "tr_delta",
            Self::HalfTraceDelta => "tr_delta/2",
        }
    }

    pub fn from_label(label: &str) -> Option<Self> {
        Self::CANDIDATES.into_iter().find(|c| c.label() == label)
    }

    /// Twice the exponent of `μ`, as a multiple of `tr δ`.
    fn doubled(self, trace: u64) -> i64 {
        match self {
            Self::TraceDelta => 2 * trace as i64,
            Self::HalfTraceDelta => trace as i64,
        }
    }
}

fn check(family: SimilitudeFamily, weight: &PaddedWeight, t: &EigenvalueList, mu: &Rational) -> Result<()> {
    if mu.is_zero() {
        return Err(Error::ZeroSimilitude);
    }
    if weight.rank() != t.len() {
        return Err(Error::RankMismatch { expected: weight.rank(), found: t.len() });
    }
    if family == SimilitudeFamily::GSO && weight.parts().last().is_some_and(|&p| p != 0) {
        return Err(Error::NonzeroLastPart);
    }
    Ok(())
}

/// Weight-by-weight evaluation; needs no regularity and no `√μ` for the
/// half-trace normalization.
pub fn similitude_char_by_weights(
    family: SimilitudeFamily,
    weight: &PaddedWeight,
    t: &EigenvalueList,
    mu: &Rational,
    exponent: NormalizationExponent,
) -> Result<Rational> {
    check(family, weight, t, mu)?;
    let doubled = exponent.doubled(weight.trace());
    let root = sqrt_exact(mu);
    let mut total = Rational::zero();
    for (w, m) in weight_multiplicities(family.group(), weight) {
        let size: i64 = w.iter().sum();
        // μ^{(doubled − |w|)/2}
        let twice = doubled - size;
        let mu_part = if twice % 2 == 0 {
            pow(mu, twice / 2)
        } else {
            let root = root.as_ref().ok_or(Error::IrrationalNormalization)?;
            pow(root, twice)
        };
        let monomial = w.iter().zip(t.values()).fold(mu_part, |acc, (&e, ti)| acc * pow(ti, e));
        total += monomial * Rational::from_integer(m.into());
    }
    Ok(total)
}

/// `μ^e · χ^{Sp/SO}_δ̄(μ^{-1/2} t)`.
///
/// Uses the alternant at `t/√μ` when `μ` is a rational square and the point
/// is regular, and the weight-by-weight sum otherwise. When `√μ` is needed it
/// is taken positive.
pub fn similitude_char(
    family: SimilitudeFamily,
    weight: &PaddedWeight,
    t: &EigenvalueList,
    mu: &Rational,
    exponent: NormalizationExponent,
) -> Result<Rational> {
    check(family, weight, t, mu)?;
    if let Some(root) = sqrt_exact(mu) {
        let point = t.scaled(&root.recip())?;
        let value = match family {
            SimilitudeFamily::GSp => char_sp(weight, &point),
            SimilitudeFamily::GSO => char_so_even(weight, &point),
        };
        match value {
            Ok(v) => return Ok(v * pow(&root, exponent.doubled(weight.trace()))),
            Err(Error::SingularAlternant) => {}
            Err(e) => return Err(e),
        }
    }
    similitude_char_by_weights(family, weight, t, mu, exponent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use alloc::vec;
    use NormalizationExponent::*;

    fn pw(p: &[u32]) -> PaddedWeight {
        PaddedWeight::new(p.to_vec()).unwrap()
    }

    fn ts(v: &[i64]) -> EigenvalueList {
        EigenvalueList::new(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn gsp2_is_gl2() {
        // diag(2,3): μ = 6 is not a square, so this goes through the weights
        assert_eq!(similitude_char(SimilitudeFamily::GSp, &pw(&[1]), &ts(&[2]), &int(6), HalfTraceDelta).unwrap(), int(5));
        assert_eq!(similitude_char(SimilitudeFamily::GSp, &pw(&[2]), &ts(&[2]), &int(6), HalfTraceDelta).unwrap(), int(19));
        assert_eq!(
            similitude_char(SimilitudeFamily::GSp, &pw(&[1]), &ts(&[2]), &int(6), TraceDelta),
            Err(Error::IrrationalNormalization)
        );
        // the full normalization carries one extra μ^{tr δ/2} = 6
        assert_eq!(similitude_char(SimilitudeFamily::GSp, &pw(&[2]), &ts(&[2]), &int(6), TraceDelta).unwrap(), int(114));
    }

    #[test]
    fn trivial_weight_is_one() {
        for family in [SimilitudeFamily::GSp, SimilitudeFamily::GSO] {
            for e in NormalizationExponent::CANDIDATES {
                assert_eq!(similitude_char(family, &pw(&[0, 0]), &ts(&[2, 3]), &frac(9, 4), e).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn zero_similitude_rejected() {
        assert_eq!(
            similitude_char(SimilitudeFamily::GSp, &pw(&[1]), &ts(&[2]), &int(0), HalfTraceDelta),
            Err(Error::ZeroSimilitude)
        );
    }

    #[test]
    fn routes_agree_at_square_similitude() {
        let t = EigenvalueList::new(vec![int(2), frac(-5, 3), int(7)]).unwrap();
        for family in [SimilitudeFamily::GSp, SimilitudeFamily::GSO] {
            for parts in [[2, 1, 0], [3, 0, 0], [1, 1, 0]] {
                for e in NormalizationExponent::CANDIDATES {
                    let w = pw(&parts);
                    let mu = frac(49, 4);
                    assert_eq!(
                        similitude_char(family, &w, &t, &mu, e).unwrap(),
                        similitude_char_by_weights(family, &w, &t, &mu, e).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn singular_points_fall_back_to_weights() {
        // t = (1), μ = 1: the identity of GSp_2, character = dimension
        assert_eq!(similitude_char(SimilitudeFamily::GSp, &pw(&[3]), &ts(&[1]), &int(1), HalfTraceDelta).unwrap(), int(4));
    }
}
