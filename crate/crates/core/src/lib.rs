//! Certified computations for finite additive bases of order 2.
//!
//! The crate covers exact sumset combinatorics, exhaustive search for the
//! extremal function `n(2,k)` at small `k`, Rohrbach's lower-bound
//! construction, Moser's one-variable Fourier bound, and the two-variable
//! Fourier certificate `n(2,k) <= 0.4789 k^2 + k` computed with explicit
//! truncation and rounding budgets.

pub mod bound_1d;
pub mod bound_2d;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod fourier2d;
pub mod interval;
pub mod json;
pub mod search;
pub mod summation;
pub mod sumset;

pub use error::{Error, Result};
pub use sumset::Basis;
