//! Exact unramified local computations for Rankin–Selberg L-factors of
//! `GSpin × GL`.
//!
//! Everything here works over ℚ with arbitrary precision and never touches
//! floating point. The crate is `no_std` and only needs `alloc`; IO, the CLI and
//! the JSON report format live in the `spinor-lfunc` companion crate.
//!
//! Layout:
//!
//! - [`root_data`]: based root data of `GSpin_{2n+1}`, `GSpin_{2n}`, the
//!   quasi-split `GSpin^a_{2n}` and `GL_n`, with Weyl and Galois actions and
//!   modulus-character exponents.
//! - [`characters`]: Weyl-character evaluation for `GL_n`, `Sp_{2k}`,
//!   `SO_{2k}` and their similitude versions, plus a Freudenthal oracle.
//! - [`satake`]: Satake parameters in the dual groups.
//! - [`series`] and [`lfactors`]: truncated power series in `T = q^{-s}` and the
//!   local L-factors and zeta series built from them.
//! - [`identity`]: verifiers for the unramified identities.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod error;
pub mod identity;
pub mod lfactors;
pub mod matrix;
pub mod rational;
pub mod root_data;
pub mod satake;
pub mod series;

pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use rational::Rational;
pub use series::TruncatedSeries;
