//! Seeded parameter generation.
//!
//! Every value is `±p^{±1}` for a prime `p` drawn without replacement, so
//! characters are always evaluable and coefficients stay small. Each instance
//! key gets its own ChaCha stream, which makes an instance reproducible from
//! `(key, seed)` alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use spinor_lfunc_core::characters::{EigenvalueList, NormalizationExponent, SimilitudeFamily};
use spinor_lfunc_core::identity::{symalg_shapes, verify_symalg, SymAlgInstance};
use spinor_lfunc_core::lfactors::{CaseKind, IdentityCase};
use spinor_lfunc_core::rational::{frac, int};
use spinor_lfunc_core::satake::UnramifiedData;
use spinor_lfunc_core::{Error, Rational};

const PRIMES: [i64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
const NON_SQUARES: [i64; 7] = [2, 3, 5, 6, 7, 10, 11];

fn rng_for(tag: u64, a: usize, b: usize, seed: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream((tag << 16) | ((a as u64) << 8) | b as u64);
    rng
}

fn case_tag(kind: CaseKind) -> u64 {
    CaseKind::ALL.iter().position(|&k| k == kind).expect("listed") as u64 + 1
}

/// `count` values `±p^{±1}` with pairwise distinct primes.
fn distinct_values(rng: &mut ChaCha20Rng, count: usize) -> Vec<Rational> {
    assert!(count <= PRIMES.len(), "not enough primes for {count} values");
    let primes: Vec<i64> = PRIMES.choose_multiple(rng, count).copied().collect();
    primes
        .into_iter()
        .map(|p| {
            let x = if rng.gen_bool(0.5) { frac(1, p) } else { int(p) };
            if rng.gen_bool(0.5) {
                -x
            } else {
                x
            }
        })
        .collect()
}

/// `α = u(1+as²)/(1−as²)`, `β = 2us/(1−as²)`, so that `α² − aβ² = u²`.
fn norm_conic_point(rng: &mut ChaCha20Rng, u: &Rational) -> (Rational, Rational, Rational) {
    let a = int(*NON_SQUARES.choose(rng).expect("nonempty"));
    let s = int(rng.gen_range(1..=4));
    let d = int(1) - &a * &s * &s;
    let alpha = u * (int(1) + &a * &s * &s) / &d;
    let beta = int(2) * u * &s / &d;
    (a, alpha, beta)
}

/// Data for `π` with `χ_0 = u²` and `k` torus values, plus `l` GL values.
fn draw(rng: &mut ChaCha20Rng, quasi_split: bool, k: usize, l: usize) -> (UnramifiedData, Vec<Rational>) {
    let mut values = distinct_values(rng, 1 + k + l);
    let tau = values.split_off(1 + k);
    let u = values.remove(0);
    let chi0 = &u * &u;
    let data = if quasi_split {
        let (a, alpha, beta) = norm_conic_point(rng, &u);
        UnramifiedData::quasi_split(chi0, values, a, alpha, beta)
    } else {
        UnramifiedData::split(chi0, values)
    };
    (data, tau)
}

/// `(π data, τ values)` for a case A instance: `π` on the rank `m` group,
/// `τ` on `GL_n`.
pub fn case_a_parameters(case: &IdentityCase, seed: u64) -> (UnramifiedData, Vec<Rational>) {
    let mut rng = rng_for(case_tag(case.kind()), case.n(), case.m(), seed);
    let qs = case.kind().is_quasi_split();
    draw(&mut rng, qs, if qs { case.m() - 1 } else { case.m() }, case.n())
}

/// `(σ data with χ_0 = ω, τ values)` for a case B instance: `σ` on `GL_n`
/// (or `GL_{n−1}` plus the Galois block), `τ` on `GL_m`.
pub fn case_b_parameters(case: &IdentityCase, seed: u64) -> (UnramifiedData, Vec<Rational>) {
    let mut rng = rng_for(case_tag(case.kind()), case.n(), case.m(), seed);
    let qs = case.kind().is_quasi_split();
    draw(&mut rng, qs, if qs { case.n() - 1 } else { case.n() }, case.m())
}

pub fn case_parameters(case: &IdentityCase, seed: u64) -> (UnramifiedData, Vec<Rational>) {
    if case.kind().is_case_a() {
        case_a_parameters(case, seed)
    } else {
        case_b_parameters(case, seed)
    }
}

fn family_tag(family: SimilitudeFamily) -> u64 {
    match family {
        SimilitudeFamily::GSp => 16,
        SimilitudeFamily::GSO => 17,
    }
}

/// A conjugated `(g_1, g_2)` pair of the given shape.
pub fn symalg_instance(
    family: SimilitudeFamily,
    m: usize,
    n: usize,
    r: usize,
    seed: u64,
) -> Result<SymAlgInstance, Error> {
    let mut rng = rng_for(family_tag(family), m, n, seed);
    let mut values = distinct_values(&mut rng, 1 + m + n);
    let g2 = values.split_off(1 + m);
    let u = values.remove(0);
    let mixing: Vec<i64> = (0..16).map(|_| rng.gen_range(-3..=3)).collect();
    SymAlgInstance::conjugated(
        family,
        EigenvalueList::new(values)?,
        &u * &u,
        EigenvalueList::new(g2)?,
        r,
        &mixing[..8],
        &mixing[8..],
    )
}

/// Shapes and degrees of the battery that fixes the normalization exponent:
/// `m ≤ 2`, `n ≤ 2`, `r ≤ 4`, seeds `0..5`.
pub fn symalg_battery() -> Vec<(SimilitudeFamily, usize, usize, usize, u64)> {
    let mut out = Vec::new();
    for (family, m, n) in symalg_shapes(2, 2) {
        for r in 0..=4 {
            for seed in 0..5 {
                out.push((family, m, n, r, seed));
            }
        }
    }
    out
}

/// Runs the battery and returns the exponent that validates on every
/// instance.
pub fn resolve_exponent() -> Result<NormalizationExponent, Error> {
    let mut reports = Vec::new();
    for (family, m, n, r, seed) in symalg_battery() {
        let inst = symalg_instance(family, m, n, r, seed)?;
        reports.push(verify_symalg(&inst, NormalizationExponent::HalfTraceDelta)?);
    }
    spinor_lfunc_core::identity::resolve_normalization_exponent(&reports)
}
