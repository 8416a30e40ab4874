use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{CheckedDiv, Signed, Zero};

use super::ArithmeticError;
use crate::ExactRational;

/// Builds `numer / denom` in lowest terms. Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> ExactRational {
    ExactRational::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
    Cmp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalOutcome {
    Value(ExactRational),
    Ordering(Ordering),
}

/// Applies `op` to `a` and `b`. Division by zero is an error, never a panic.
pub fn rational_arith(
    a: &ExactRational,
    b: &ExactRational,
    op: RationalOp,
) -> Result<RationalOutcome, ArithmeticError> {
    let value = match op {
        RationalOp::Add => a + b,
        RationalOp::Sub => a - b,
        RationalOp::Mul => a * b,
        RationalOp::Div => a.checked_div(b).ok_or(ArithmeticError::DivisionByZero)?,
        RationalOp::Cmp => return Ok(RationalOutcome::Ordering(a.cmp(b))),
    };
    Ok(RationalOutcome::Value(value))
}

/// Canonical text form: `-p/q`, with `/q` omitted when `q = 1`.
pub fn format_rational(r: &ExactRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical form produced by [`format_rational`]. Input that is not
/// in lowest terms or carries a sign on the denominator is rejected so that
/// parsing and formatting are mutual inverses.
pub fn parse_rational(text: &str) -> Result<ExactRational, ArithmeticError> {
    let invalid = || ArithmeticError::InvalidLiteral(text.to_string());
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let is_integer = |s: &str, allow_sign: bool| {
        let digits = if allow_sign {
            s.strip_prefix('-').unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_integer(num_text, true) {
        return Err(invalid());
    }
    let numer: BigInt = num_text.parse().map_err(|_| invalid())?;
    let denom: BigInt = match den_text {
        Some(d) if is_integer(d, false) => d.parse().map_err(|_| invalid())?,
        Some(_) => return Err(invalid()),
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(ArithmeticError::DivisionByZero);
    }
    let value = ExactRational::new(numer, denom);
    if format_rational(&value) != text {
        return Err(invalid());
    }
    Ok(value)
}

/// `2^k` as an exact rational.
pub fn pow2(k: usize) -> ExactRational {
    ExactRational::from_integer(BigInt::from(1) << k)
}

/// Nearest `f64`, rounding through the big-integer quotient.
pub fn to_f64(r: &ExactRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}
