use thiserror::Error;

use crate::bernoulli::BernoulliError;
use crate::exact::ArithmeticError;
use crate::ordering::OrderError;
use crate::parser::{EvalError, ParseError};
use crate::summation::SumError;
use crate::zeta::RouteDisagreement;

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
    #[error(transparent)]
    Bernoulli(#[from] BernoulliError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Sum(#[from] SumError),
    #[error(transparent)]
    Routes(#[from] RouteDisagreement),
}
