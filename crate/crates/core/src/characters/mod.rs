//! Characters of `GL_n(ℂ)`, `Sp_{2k}(ℂ)`, `SO_{2k}(ℂ)` and of the similitude
//! groups `GSp_{2k}(ℂ)`, `GSO_{2k}(ℂ)`, evaluated exactly at rational torus
//! points.
//!
//! The primary route is the Weyl alternant (bialternant for `GL_n`); the
//! Freudenthal multiplicity recursion in [`freudenthal`] is an independent
//! oracle and also backs the square-root-free similitude bookkeeping.

mod alternant;
pub mod freudenthal;
mod similitude;
mod sym_power;
mod weights;

pub use alternant::{char_so_even, char_sp, complete_homogeneous, schur_gl, schur_jacobi_trudi};
pub use freudenthal::{freudenthal_char, weight_multiplicities, ClassicalGroup};
pub use similitude::{similitude_char, NormalizationExponent, SimilitudeFamily};
pub use sym_power::sym_power_trace;
pub use weights::{enumerate_dominant, partition_count, DominantWeight, EigenvalueList, PaddedWeight};

pub use crate::matrix::{sym2_matrix, tensor_matrix, wedge2_matrix};
