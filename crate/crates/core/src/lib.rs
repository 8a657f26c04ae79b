//! Algebraic-geometry codes from elliptic and hyperelliptic curves over
//! prime fields, with the q-series and modular-curve machinery that
//! supplies the curves and the asymptotic bounds they are compared with.

pub mod agcodes;
pub mod bounds;
pub mod curves;
pub mod error;
pub mod field;
pub mod matrix;
pub mod qseries;
pub mod reproduce;
pub mod riemannroch;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use matrix::{FFMatrix, FFVector};

/// Laurent series in `q` with integer coefficients.
pub type LaurentSeriesZ = qseries::LaurentSeries<num_bigint::BigInt>;
pub type RatePoint64 = bounds::RatePoint<f64>;
pub type RatePoint32 = bounds::RatePoint<f32>;
