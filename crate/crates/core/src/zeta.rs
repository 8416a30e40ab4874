//! `zeta(-m)` and `eta(-m)` for non-negative integers `m`.
//!
//! Three independent routes are available:
//!
//! * closed forms in Bernoulli numbers, `zeta(-m) = -B_{m+1}/(m+1)` and
//!   `eta(-m) = (2^{m+1} - 1) B_{m+1}/(m+1)`;
//! * the regularized sums of `1^m + 2^m + ...` and `1^m - 2^m + ...`;
//! * Euler's operator `x d/dx` applied `m` times to `x/(1+x)`, evaluated at
//!   `x = 1` (eta only; zeta follows from `eta(s) = (1 - 2^{1-s}) zeta(s)`).

use std::fmt;

use num_traits::One;
use thiserror::Error;

use crate::bernoulli::BernoulliTable;
use crate::exact::rational::pow2;
use crate::summation::{regularized_alt_series_sum_with, regularized_series_sum_with};
use crate::{ExactPolynomial, ExactRational, ExactRationalFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialFunction {
    Zeta,
    Eta,
}

impl SpecialFunction {
    pub fn name(self) -> &'static str {
        match self {
            SpecialFunction::Zeta => "zeta",
            SpecialFunction::Eta => "eta",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    ClosedForm,
    RegularizedSeries,
    EulerOracle,
}

impl Route {
    pub const ALL: [Route; 3] = [
        Route::ClosedForm,
        Route::RegularizedSeries,
        Route::EulerOracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Route::ClosedForm => "closed-form",
            Route::RegularizedSeries => "regularized-series",
            Route::EulerOracle => "euler-operator",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValue {
    /// The argument `-m`.
    pub argument: i64,
    pub function: SpecialFunction,
    pub value: ExactRational,
    pub route: Route,
}

impl fmt::Display for SpecialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) = {}",
            self.function.name(),
            self.argument,
            crate::format_rational(&self.value)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{function:?}(-{m}): routes disagree: {}", render(.values))]
pub struct RouteDisagreement {
    pub function: SpecialFunction,
    pub m: usize,
    pub values: Vec<(Route, ExactRational)>,
}

fn render(values: &[(Route, ExactRational)]) -> String {
    values
        .iter()
        .map(|(r, v)| format!("{}={}", r.as_str(), crate::format_rational(v)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn argument(m: usize) -> i64 {
    -(m as i64)
}

/// `1 - 2^{m+1}`, the factor linking `eta(-m)` to `zeta(-m)`.
fn relation_factor(m: usize) -> ExactRational {
    ExactRational::one() - pow2(m + 1)
}

/// `x/(1+x)`, the geometric series `x - x^2 + x^3 - ...`.
fn seed() -> ExactRationalFunction {
    ExactRationalFunction::new(
        ExactPolynomial::x(),
        ExactPolynomial::new(vec![ExactRational::one(), ExactRational::one()]),
    )
    .expect("1 + x is nonzero")
}

/// The rational function `(x d/dx)^m (x/(1+x)) = sum_{u>=1} (-1)^(u-1) u^m x^u`.
pub fn euler_rational_function(m: usize) -> ExactRationalFunction {
    (0..m).fold(seed(), |r, _| r.euler_step())
}

fn at_one(r: &ExactRationalFunction) -> ExactRational {
    r.eval(&ExactRational::one())
        .expect("the denominator (1+x)^(m+1) does not vanish at 1")
}

/// `eta(-m)` as the value at `x = 1` of the Euler-operator rational function.
pub fn eta_euler_oracle(m: usize) -> ExactRational {
    at_one(&euler_rational_function(m))
}

/// `eta(-m)` by the Euler operator for every `m` in `0..=max_m`, sharing the iteration.
pub fn eta_euler_oracle_sequence(max_m: usize) -> Vec<ExactRational> {
    let mut r = seed();
    let mut out = Vec::with_capacity(max_m + 1);
    for m in 0..=max_m {
        if m > 0 {
            r = r.euler_step();
        }
        out.push(at_one(&r));
    }
    out
}

fn monomial(m: usize) -> ExactPolynomial {
    ExactPolynomial::monomial(ExactRational::one(), m)
}

/// `zeta(-m)` along one route.
pub fn zeta_neg_with(table: &BernoulliTable, m: usize, route: Route) -> SpecialValue {
    let value = match route {
        Route::ClosedForm => -table.number(m + 1) / ExactRational::from_integer((m + 1).into()),
        Route::RegularizedSeries => regularized_series_sum_with(table, &monomial(m))
            .exact()
            .expect("polynomial series have exact values")
            .clone(),
        Route::EulerOracle => eta_euler_oracle(m) / relation_factor(m),
    };
    SpecialValue {
        argument: argument(m),
        function: SpecialFunction::Zeta,
        value,
        route,
    }
}

/// `eta(-m)` along one route.
pub fn eta_neg_with(table: &BernoulliTable, m: usize, route: Route) -> SpecialValue {
    let value = match route {
        Route::ClosedForm => {
            let k = m + 1;
            (pow2(k) - ExactRational::one()) * table.number(k)
                / ExactRational::from_integer(k.into())
        }
        Route::RegularizedSeries => regularized_alt_series_sum_with(table, &monomial(m))
            .exact()
            .expect("polynomial series have exact values")
            .clone(),
        Route::EulerOracle => eta_euler_oracle(m),
    };
    SpecialValue {
        argument: argument(m),
        function: SpecialFunction::Eta,
        value,
        route,
    }
}

/// `zeta(-m) = -B_{m+1}/(m+1)`
pub fn zeta_neg(m: usize) -> SpecialValue {
    zeta_neg_with(BernoulliTable::global(), m, Route::ClosedForm)
}

/// `eta(-m) = (2^{m+1} - 1) B_{m+1}/(m+1)`
pub fn eta_neg(m: usize) -> SpecialValue {
    eta_neg_with(BernoulliTable::global(), m, Route::ClosedForm)
}

/// Evaluates every route and returns the closed-form value only if all agree.
pub fn cross_checked(
    table: &BernoulliTable,
    function: SpecialFunction,
    m: usize,
) -> Result<SpecialValue, RouteDisagreement> {
    let eval = |route| match function {
        SpecialFunction::Zeta => zeta_neg_with(table, m, route),
        SpecialFunction::Eta => eta_neg_with(table, m, route),
    };
    let values: Vec<SpecialValue> = Route::ALL.iter().map(|&r| eval(r)).collect();
    if values.windows(2).all(|w| w[0].value == w[1].value) {
        Ok(values.into_iter().next().expect("three routes"))
    } else {
        Err(RouteDisagreement {
            function,
            m,
            values: values.into_iter().map(|v| (v.route, v.value)).collect(),
        })
    }
}

/// `eta(-m) - (1 - 2^{1+m}) zeta(-m)` from the closed forms; zero for every `m`.
pub fn functional_relation_residual(m: usize) -> ExactRational {
    functional_relation_residual_with(BernoulliTable::global(), m)
}

pub fn functional_relation_residual_with(table: &BernoulliTable, m: usize) -> ExactRational {
    let eta = eta_neg_with(table, m, Route::ClosedForm).value;
    let zeta = zeta_neg_with(table, m, Route::ClosedForm).value;
    eta - relation_factor(m) * zeta
}
