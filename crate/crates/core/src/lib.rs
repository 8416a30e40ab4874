//! Exact summation of divergent series over the cyclically ordered integers.
//!
//! The integers are ordered `0, 1, 2, ..., -2, -1`, which turns every pair of
//! endpoints `(a, b)` into a well-defined interval and lets a sum of a regular
//! function be evaluated by its antidifference even when `b` precedes `a`.
//! Polynomial partial sums are then assigned a limit through the integral over
//! `[-1, 0]`, which reproduces the classical values of `zeta(-m)` and `eta(-m)`.
//!
//! Polynomial and rational-function arithmetic is generic over a [`Scalar`];
//! the aliases below fix it to exact rationals or to `f64`.

pub mod bernoulli;
pub mod catalog;
pub mod error;
pub mod exact;
pub mod ordering;
pub mod parser;
pub mod scalar;
pub mod summation;
pub mod zeta;

pub use error::Error;
pub use exact::{Polynomial, RationalFunction};
pub use scalar::Scalar;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type ExactRational = num_rational::BigRational;
/// Dense polynomial with exact rational coefficients.
pub type ExactPolynomial = Polynomial<ExactRational>;
/// Reduced quotient of two exact polynomials.
pub type ExactRationalFunction = RationalFunction<ExactRational>;
/// Dense polynomial with `f64` coefficients.
pub type FloatPolynomial = Polynomial<f64>;
/// Dense polynomial with `f32` coefficients.
pub type Float32Polynomial = Polynomial<f32>;

pub use exact::rational::{format_rational, parse_rational, rational, rational_arith};
