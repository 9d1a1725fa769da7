use alloc::vec;

use num_traits::{One, Zero};

use crate::matrix::RationalMatrix;
use crate::rational::{int, Rational};

/// `tr Sym^r(M) = h_r(eigenvalues of M)`, from the power traces through
/// Newton's identity `r·h_r = Σ_{j=1}^{r} p_j h_{r−j}`.
pub fn sym_power_trace(r: usize, m: &RationalMatrix) -> Rational {
    let p = m.power_traces(r);
    let mut h = vec![Rational::zero(); r + 1];
    h[0] = Rational::one();
    for k in 1..=r {
        let s = (1..=k).fold(Rational::zero(), |acc, j| acc + &p[j - 1] * &h[k - j]);
        h[k] = s / int(k as i64);
    }
    h.swap_remove(r)
}
