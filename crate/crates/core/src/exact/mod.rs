//! Exact rational, polynomial and rational-function arithmetic.

pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function with a zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("invalid rational literal `{0}`")]
    InvalidLiteral(String),
}
