//! Numerics for the resonance method applied to short-interval extremes of
//! `S(t)` and to gaps between consecutive zeros of the Riemann zeta function.
//!
//! The pieces, bottom up:
//!
//! * [`quadrature`]: the sinc² integrals `φ`, `φ₂`, `φ₃`.
//! * [`primes`]: sieving, von Mangoldt weights and exact prime sums.
//! * [`resonator`]: the explicit resonator, its support and its quotient.
//! * [`tau`]: brute-force quotients for arbitrary coefficients and the
//!   upper-bound functionals they are limited by.
//! * [`limitation`]: where those bounds stop the method from certifying gaps.
//! * [`gapbounds`]: explicit lower/upper gap bounds and their side conditions.
//! * [`zerodata`]: empirical gap statistics from tables of zero ordinates.
//! * [`cli`]: the command-line front end.

// NaN must fail argument checks, so `!(x > 0.0)` is deliberate.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod coefficients;
pub mod error;
pub mod gapbounds;
pub mod limitation;
pub mod numfmt;
pub mod optimize;
pub mod primes;
pub mod quadrature;
pub mod resonator;
pub mod special;
pub mod summation;
pub mod tau;
pub mod zerodata;

pub use coefficients::{CoefficientTable, SupportKind};
pub use error::{Error, Result};
pub use primes::{build_prime_table, PrimeTable};
pub use quadrature::QuadratureValue;
pub use resonator::{derive_params, ResonatorParams, Sign};
