//! Reference series with known values, used by the verification suite.

use crate::parser::{parse_expr, ParseError};
use crate::summation::{Evaluator, Parity, RegularFunction};
use crate::{rational, ExactPolynomial, ExactRational};

#[derive(Debug, Clone, PartialEq)]
pub enum ClosedValue {
    Exact(ExactRational),
    /// A transcendental value, rounded to `f64`.
    Decimal(f64),
}

impl ClosedValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ClosedValue::Exact(r) => crate::exact::rational::to_f64(r),
            ClosedValue::Decimal(x) => *x,
        }
    }
}

/// A convergent even series `sum_{u>=1} f(u)` with an antidifference `F`.
#[derive(Debug, Clone)]
pub struct ConvergentSeries {
    pub name: &'static str,
    /// `f`, in the variable `u`.
    pub term: &'static str,
    /// `F`, in the variable `n`.
    pub antidifference: &'static str,
    pub closed: ClosedValue,
    /// Number of terms for the partial-sum check.
    pub n_terms: u64,
}

impl ConvergentSeries {
    pub fn regular_function(&self) -> Result<RegularFunction, ParseError> {
        let f = parse_expr(self.term, "u")?;
        let big_f = parse_expr(self.antidifference, "n")?;
        Ok(RegularFunction::new(
            Evaluator::from_expr(f),
            Evaluator::from_expr(big_f),
            Parity::Even,
        ))
    }
}

/// `-tan(1/2)/8`
pub fn tan_half_over_eight() -> f64 {
    -(0.5f64).tan() / 8.0
}

pub fn convergent_series() -> Vec<ConvergentSeries> {
    vec![
        ConvergentSeries {
            name: "series-1",
            term: "1/(4*u^2-1)",
            antidifference: "-1/(2*(2*n-1))",
            closed: ClosedValue::Exact(rational(1, 2)),
            n_terms: 100_000,
        },
        ConvergentSeries {
            name: "series-2",
            term: "(-1)^u*(2*u^2+1/2)/(2*u^2-1/2)^2",
            antidifference: "(-1)^(n-1)/(2*n-1)^2",
            closed: ClosedValue::Exact(rational(-1, 1)),
            n_terms: 10_000,
        },
        ConvergentSeries {
            name: "series-3",
            term: "((4^u-1)*(u-1/2)-1)/2^(u^2+u+1)",
            antidifference: "-(n-1/2)/2^(n^2-n+1)",
            closed: ClosedValue::Exact(rational(1, 4)),
            n_terms: 30,
        },
        ConvergentSeries {
            name: "series-4",
            term: "((u^2+1/4)*tan(1/2)*cos(u)-u*sin(u))/(4*u^2-1)^2",
            antidifference: "sin(n-1/2)/(8*(2*n-1)^2*cos(1/2))",
            closed: ClosedValue::Decimal(tan_half_over_eight()),
            n_terms: 100_000,
        },
    ]
}

/// A divergent polynomial series with its expected regularized value.
#[derive(Debug, Clone)]
pub struct DivergentSeries {
    pub name: &'static str,
    pub term: ExactPolynomial,
    pub alternating: bool,
    pub expected: ExactRational,
}

fn linear(a: i64, b: i64) -> ExactPolynomial {
    ExactPolynomial::new(vec![rational(a, 1), rational(b, 1)])
}

pub fn divergent_series() -> Vec<DivergentSeries> {
    let one = rational(1, 1);
    let square = ExactPolynomial::monomial(one.clone(), 2);
    let series = |name, term, alternating, expected| DivergentSeries {
        name,
        term,
        alternating,
        expected,
    };
    vec![
        series("1+1+1+...", linear(1, 0), false, rational(-1, 2)),
        series("1+2+3+...", linear(0, 1), false, rational(-1, 12)),
        series("1+3+5+...", linear(-1, 2), false, rational(1, 3)),
        series("1+4+9+...", square.clone(), false, rational(0, 1)),
        series("1-1+1-...", linear(1, 0), true, rational(1, 2)),
        series("1-2+3-...", linear(0, 1), true, rational(1, 4)),
        series("1-3+5-...", linear(-1, 2), true, rational(0, 1)),
        series("1-4+9-...", square, true, rational(0, 1)),
    ]
}
