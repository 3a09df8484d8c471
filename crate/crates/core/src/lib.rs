//! Exact construction of Pascal determinantal arrays and machine checks of
//! the determinantal identities they satisfy.
//!
//! `PD_k` is the array whose `(i, j)` entry is the determinant of the `k × k`
//! contiguous block of the Pascal array starting at `(i, j)`. This crate
//! builds it along five independent routes (see [`det_arrays::Method`]) and
//! checks the weighted star-of-David, sliding-cross, double-stick and
//! `P^(k)_{i,j} = P^(j)_{i,k}` identities with exact integer and rational
//! arithmetic.

pub mod cli;
pub mod det_arrays;
mod error;
pub mod exact_det;
pub mod identities;
pub mod pascal_core;
pub mod report;

pub use error::{Error, Result};
pub use exact_det::Matrix;
pub use pascal_core::GridIndex;

/// Arbitrary-precision signed integer used for every entry and determinant.
pub type BigInt = num_bigint::BigInt;
/// Exact reduced rational used for weights and intermediate quotients.
pub type Ratio = num_rational::BigRational;
