#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use spinor_lfunc_core::characters::EigenvalueList;
use spinor_lfunc_core::Rational;

pub const PRIMES: [i64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

pub fn seeded(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x5eed), failure_persistence: None, ..Config::default() }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `±p^{±1}` for distinct primes `p`: never `0`, `±1`, and never `x_i = x_j^{±1}`.
pub fn regular_values(k: usize) -> impl Strategy<Value = Vec<Rational>> {
    (
        proptest::sample::subsequence(PRIMES.to_vec(), k).prop_shuffle(),
        proptest::collection::vec(any::<(bool, bool)>(), k),
    )
        .prop_map(|(primes, flips)| {
            primes
                .into_iter()
                .zip(flips)
                .map(|(p, (neg, inv))| {
                    let x = if inv { frac(1, p) } else { int(p) };
                    if neg {
                        -x
                    } else {
                        x
                    }
                })
                .collect()
        })
}

pub fn regular_point(k: usize) -> impl Strategy<Value = EigenvalueList> {
    regular_values(k).prop_map(|v| EigenvalueList::new(v).unwrap())
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| frac(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=5, any::<bool>()).prop_map(|(p, q, neg)| frac(if neg { -p } else { p }, q))
}
