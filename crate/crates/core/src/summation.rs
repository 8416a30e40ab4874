//! Generalized sums over cyclic intervals and regularized values of divergent
//! series.
//!
//! A regular function `f` comes with an antidifference `F`, `F(n+1) - F(n) = f(n)`.
//! The sum of `f` over `Z_{a,b}` is `F(b+1) - F(a)` for every pair of
//! endpoints; when `b` precedes `a` this is minus the sum over the gap
//! `(b, a)`, and over a full turn of the cycle it is zero.
//!
//! For polynomial `f`, the partial sums `S(n) = f(1) + ... + f(n)` are again a
//! polynomial and the series is assigned the regularized limit
//! `lim S(n) = ∫_{-1}^{0} S(x) dx`; alternating series split into an even and
//! an odd branch and take the mean of the two limits.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bernoulli::BernoulliTable;
use crate::exact::rational::to_f64;
use crate::ordering::{self, OrderError};
use crate::parser::{EvalError, ExprAst};
use crate::{ExactPolynomial, ExactRational, FloatPolynomial, Polynomial, Scalar};

/// Window on which [`RegularFunction::check`] samples the defining identities.
pub const CHECK_WINDOW: (i64, i64) = (-50, 50);
/// Relative tolerance for numerically evaluated antidifferences.
pub const NUMERIC_RELATIVE_TOLERANCE: f64 = 1e-12;
/// Window on which [`verify_convergent_example`] measures the antidifference residual.
pub const RESIDUAL_WINDOW: (i64, i64) = (1, 200);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SumError {
    #[error("cannot evaluate at {point}: {source}")]
    Eval { point: i64, source: EvalError },
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error("the function is not tagged even")]
    NotEven,
    #[error("F(n+1) - F(n) differs from f(n) at n = {point} (residual {residual:e})")]
    NotRegular { point: i64, residual: f64 },
    #[error("f(-u) differs from f(u) at u = {0}")]
    ParityViolation(i64),
}

fn exact_int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

type ExactFn = dyn Fn(&ExactRational) -> Result<ExactRational, EvalError> + Send + Sync;
type NumericFn = dyn Fn(f64) -> Result<f64, EvalError> + Send + Sync;

/// Pointwise evaluator with an optional exact profile and a numeric one.
///
/// The exact profile may decline individual points with
/// [`EvalError::NotRational`]; callers then fall back to the numeric profile.
#[derive(Clone)]
pub struct Evaluator {
    exact: Option<Arc<ExactFn>>,
    numeric: Arc<NumericFn>,
}

impl fmt::Debug for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Evaluator")
            .field("exact", &self.exact.is_some())
            .finish_non_exhaustive()
    }
}

impl Evaluator {
    pub fn from_polynomial(p: ExactPolynomial) -> Self {
        let float = FloatPolynomial::new(p.coeffs().iter().map(to_f64).collect());
        Self {
            exact: Some(Arc::new(move |x| Ok(p.eval(x)))),
            numeric: Arc::new(move |x| Ok(float.eval(&x))),
        }
    }

    /// Evaluator backed by an exact function; the numeric profile rounds its result.
    pub fn exact<F>(f: F) -> Self
    where
        F: Fn(&ExactRational) -> Result<ExactRational, EvalError> + Send + Sync + 'static,
    {
        let f = Arc::new(f);
        let g = Arc::clone(&f);
        Self {
            exact: Some(f),
            numeric: Arc::new(move |x| {
                let x = ExactRational::from_float(x).ok_or(EvalError::NotANumber)?;
                g(&x).map(|v| to_f64(&v))
            }),
        }
    }

    pub fn numeric<F>(f: F) -> Self
    where
        F: Fn(f64) -> Result<f64, EvalError> + Send + Sync + 'static,
    {
        Self {
            exact: None,
            numeric: Arc::new(f),
        }
    }

    pub fn from_expr(ast: ExprAst) -> Self {
        let ast = Arc::new(ast);
        let numeric_ast = Arc::clone(&ast);
        Self {
            exact: Some(Arc::new(move |x| ast.eval_exact(x))),
            numeric: Arc::new(move |x| numeric_ast.eval_numeric(x)),
        }
    }

    pub fn has_exact_profile(&self) -> bool {
        self.exact.is_some()
    }

    /// Exact value at an integer, `Ok(None)` when only a numeric value exists.
    pub fn try_exact(&self, n: i64) -> Result<Option<ExactRational>, SumError> {
        let Some(exact) = &self.exact else {
            return Ok(None);
        };
        match exact(&exact_int(n)) {
            Ok(v) => Ok(Some(v)),
            Err(EvalError::NotRational(_) | EvalError::ExponentTooLarge(_)) => Ok(None),
            Err(source) => Err(SumError::Eval { point: n, source }),
        }
    }

    pub fn numeric_at(&self, n: i64) -> Result<f64, SumError> {
        (self.numeric)(n as f64).map_err(|source| SumError::Eval { point: n, source })
    }

    /// Exact where possible, numeric otherwise.
    pub fn value_at(&self, n: i64) -> Result<Value, SumError> {
        match self.try_exact(n)? {
            Some(v) => Ok(Value::Exact(v)),
            None => self.numeric_at(n).map(Value::Approx),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    None,
}

/// A function on the integers together with an antidifference.
#[derive(Debug, Clone)]
pub struct RegularFunction {
    f: Evaluator,
    antidifference: Evaluator,
    parity: Parity,
    exact_poly: Option<ExactPolynomial>,
}

/// `S(n) = f(1) + ... + f(n)` for polynomial `f`, assembled from power sums.
pub fn partial_sum_poly(table: &BernoulliTable, f: &ExactPolynomial) -> ExactPolynomial {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(ExactPolynomial::zero(), |acc, (k, c)| {
            &acc + &table.power_sum_poly(k).scale(c)
        })
}

/// `F(n) = S(n - 1)`, the antidifference of `f` vanishing at `n = 1`.
pub fn antidifference_poly(table: &BernoulliTable, f: &ExactPolynomial) -> ExactPolynomial {
    partial_sum_poly(table, f).compose_shift(&-ExactRational::one())
}

fn polynomial_parity<T: Scalar>(p: &Polynomial<T>) -> Parity {
    let odd_free = p.coeffs().iter().skip(1).step_by(2).all(|c| c.is_zero());
    let even_free = p.coeffs().iter().step_by(2).all(|c| c.is_zero());
    match (odd_free, even_free) {
        (true, _) => Parity::Even,
        (false, true) => Parity::Odd,
        _ => Parity::None,
    }
}

impl RegularFunction {
    pub fn new(f: Evaluator, antidifference: Evaluator, parity: Parity) -> Self {
        Self {
            f,
            antidifference,
            parity,
            exact_poly: None,
        }
    }

    /// Polynomial `f` with the antidifference built from power sums.
    pub fn from_polynomial(f: ExactPolynomial) -> Self {
        Self::from_polynomial_with(BernoulliTable::global(), f)
    }

    pub fn from_polynomial_with(table: &BernoulliTable, f: ExactPolynomial) -> Self {
        let antidiff = antidifference_poly(table, &f);
        Self {
            f: Evaluator::from_polynomial(f.clone()),
            antidifference: Evaluator::from_polynomial(antidiff),
            parity: polynomial_parity(&f),
            exact_poly: Some(f),
        }
    }

    pub fn f(&self) -> &Evaluator {
        &self.f
    }

    pub fn antidifference(&self) -> &Evaluator {
        &self.antidifference
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn exact_poly(&self) -> Option<&ExactPolynomial> {
        self.exact_poly.as_ref()
    }

    /// `u ↦ f(-u)`, with antidifference `n ↦ -F(1 - n)`.
    pub fn reflect(&self) -> Self {
        let f = self.f.clone();
        let big_f = self.antidifference.clone();
        let reflect_f = Evaluator {
            exact: f
                .exact
                .clone()
                .map(|e| -> Arc<ExactFn> { Arc::new(move |x| e(&-x.clone())) }),
            numeric: {
                let n = Arc::clone(&f.numeric);
                Arc::new(move |x| n(-x))
            },
        };
        let one = ExactRational::one();
        let reflect_big_f = Evaluator {
            exact: big_f
                .exact
                .clone()
                .map(|e| -> Arc<ExactFn> { Arc::new(move |x| e(&(&one - x)).map(|v| -v)) }),
            numeric: {
                let n = Arc::clone(&big_f.numeric);
                Arc::new(move |x| n(1.0 - x).map(|v| -v))
            },
        };
        Self {
            f: reflect_f,
            antidifference: reflect_big_f,
            parity: self.parity,
            exact_poly: self.exact_poly.as_ref().map(|p| p.reflect()),
        }
    }

    /// Samples `F(n+1) - F(n) = f(n)` on `[lo, hi]` (exactly where both sides
    /// are rational, to [`NUMERIC_RELATIVE_TOLERANCE`] otherwise) and, for an
    /// even tag, `f(-u) = f(u)`. Points where `f` is undefined are skipped.
    /// Returns the largest numeric residual seen.
    pub fn check(&self, lo: i64, hi: i64) -> Result<f64, SumError> {
        let mut worst: f64 = 0.0;
        for n in lo..=hi {
            let Ok(fv) = self.f.value_at(n) else { continue };
            let next = self.antidifference.value_at(n + 1)?;
            let here = self.antidifference.value_at(n)?;
            if let (Value::Exact(fx), Value::Exact(a), Value::Exact(b)) = (&fv, &next, &here) {
                if &(a - b) != fx {
                    let residual = to_f64(&(a - b - fx)).abs();
                    return Err(SumError::NotRegular { point: n, residual });
                }
                continue;
            }
            let residual =
                (next.to_f64() - here.to_f64() - fv.to_f64()).abs() / fv.to_f64().abs().max(1.0);
            worst = worst.max(residual);
            if residual.is_nan() || residual > NUMERIC_RELATIVE_TOLERANCE {
                return Err(SumError::NotRegular { point: n, residual });
            }
        }
        if self.parity == Parity::Even {
            for u in 1..=hi.max(-lo) {
                let (Ok(a), Ok(b)) = (self.f.value_at(u), self.f.value_at(-u)) else {
                    continue;
                };
                let same = match (&a, &b) {
                    (Value::Exact(x), Value::Exact(y)) => x == y,
                    _ => {
                        (a.to_f64() - b.to_f64()).abs()
                            <= NUMERIC_RELATIVE_TOLERANCE * a.to_f64().abs().max(1.0)
                    }
                };
                if !same {
                    return Err(SumError::ParityViolation(u));
                }
            }
        }
        Ok(worst)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(ExactRational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => to_f64(r),
            Value::Approx(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&ExactRational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    fn sub(&self, other: &Value) -> Value {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => Value::Exact(a - b),
            _ => Value::Approx(self.to_f64() - other.to_f64()),
        }
    }

    fn neg_half(&self) -> Value {
        match self {
            Value::Exact(a) => Value::Exact(-a / exact_int(2)),
            Value::Approx(x) => Value::Approx(-x / 2.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Convergent,
    Regularized,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Convergent => "convergent",
            Mode::Regularized => "regularized",
        }
    }
}

/// Which rule produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    /// `F(b+1) - F(a)` over a finite interval.
    Telescoped,
    /// `F(b+1) - F(a)` over an infinite interval, i.e. minus the sum over the gap.
    Complement,
    /// Sum over all of `Z`, which vanishes.
    FullCircle,
    /// `∫_{-1}^{0} S(x) dx` of the partial-sum polynomial.
    RegularizedLimit,
    /// Mean of the even and odd branch limits of an alternating partial sum.
    ParitySplitLimit,
    /// `-f(0)/2` for an even function.
    EvenFunction,
    /// Closed forms for arithmetic progressions.
    ArithmeticProgression,
}

impl Derivation {
    pub fn as_str(self) -> &'static str {
        match self {
            Derivation::Telescoped => "telescoped",
            Derivation::Complement => "complement",
            Derivation::FullCircle => "full-circle",
            Derivation::RegularizedLimit => "regularized-limit",
            Derivation::ParitySplitLimit => "parity-split-limit",
            Derivation::EvenFunction => "even-function",
            Derivation::ArithmeticProgression => "arithmetic-progression",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularizedValue {
    pub value: Value,
    pub mode: Mode,
    pub derivation: Derivation,
}

impl RegularizedValue {
    fn new(value: Value, mode: Mode, derivation: Derivation) -> Self {
        Self {
            value,
            mode,
            derivation,
        }
    }

    pub fn exact(&self) -> Option<&ExactRational> {
        self.value.as_exact()
    }
}

/// Sum of `f` over `Z_{a,b}`, evaluated as `F(b+1) - F(a)`.
pub fn generalized_sum(rf: &RegularFunction, a: i64, b: i64) -> Result<RegularizedValue, SumError> {
    let g = ordering::interval(a, b)?;
    let value = rf
        .antidifference
        .value_at(b + 1)?
        .sub(&rf.antidifference.value_at(a)?);
    let (mode, derivation) = if g.is_finite() {
        (Mode::Convergent, Derivation::Telescoped)
    } else if g.is_full() {
        (Mode::Regularized, Derivation::FullCircle)
    } else {
        (Mode::Regularized, Derivation::Complement)
    };
    Ok(RegularizedValue::new(value, mode, derivation))
}

/// Sum over `Z_{a,a-1}`, the whole cycle. Always zero.
pub fn sum_over_z(rf: &RegularFunction, a: i64) -> Result<RegularizedValue, SumError> {
    let prev = ordering::check_range(a - 1)?;
    generalized_sum(rf, a, prev)
}

/// `lim f(n)` for a polynomial, defined as `∫_{-1}^{0} f(x) dx`.
pub fn regularized_limit<T: Scalar>(p: &Polynomial<T>) -> T {
    p.integrate(&-T::one(), &T::zero())
}

/// `lim (-1)^n f(n) = 0` for every polynomial `f`.
pub fn signed_limit_is_zero<T: Scalar>(_p: &Polynomial<T>) -> T {
    T::zero()
}

/// Limit of a sequence equal to `alpha(n)` at even `n` and `beta(n)` at odd `n`:
/// the oscillating part `(alpha - beta)(n) (-1)^n / 2` has limit zero, leaving
/// half the limit of `alpha + beta`.
pub fn parity_split_limit<T: Scalar>(alpha: &Polynomial<T>, beta: &Polynomial<T>) -> T {
    let two = T::one() + T::one();
    let oscillating = signed_limit_is_zero(&(alpha - beta));
    regularized_limit(&(alpha + beta)) / two + oscillating
}

fn mode_for(f: &ExactPolynomial) -> Mode {
    if f.is_zero() {
        Mode::Convergent
    } else {
        Mode::Regularized
    }
}

/// `f(1) + f(2) + f(3) + ...` for polynomial `f`.
pub fn regularized_series_sum(f: &ExactPolynomial) -> RegularizedValue {
    regularized_series_sum_with(BernoulliTable::global(), f)
}

pub fn regularized_series_sum_with(
    table: &BernoulliTable,
    f: &ExactPolynomial,
) -> RegularizedValue {
    let partial = partial_sum_poly(table, f);
    RegularizedValue::new(
        Value::Exact(regularized_limit(&partial)),
        mode_for(f),
        Derivation::RegularizedLimit,
    )
}

/// Even- and odd-`n` branches of `sum_{u=1}^{n} (-1)^(u-1) f(u)`.
pub fn alternating_branches(
    table: &BernoulliTable,
    f: &ExactPolynomial,
) -> (ExactPolynomial, ExactPolynomial) {
    let mut alpha = ExactPolynomial::zero();
    let mut beta = ExactPolynomial::zero();
    for (j, c) in f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (even, odd) = table
            .parity_branch_polys(j + 1)
            .expect("index j + 1 is positive");
        alpha = &alpha + &even.scale(c);
        beta = &beta + &odd.scale(c);
    }
    (alpha, beta)
}

/// `f(1) - f(2) + f(3) - ...` for polynomial `f`.
pub fn regularized_alt_series_sum(f: &ExactPolynomial) -> RegularizedValue {
    regularized_alt_series_sum_with(BernoulliTable::global(), f)
}

pub fn regularized_alt_series_sum_with(
    table: &BernoulliTable,
    f: &ExactPolynomial,
) -> RegularizedValue {
    let (alpha, beta) = alternating_branches(table, f);
    RegularizedValue::new(
        Value::Exact(parity_split_limit(&alpha, &beta)),
        mode_for(f),
        Derivation::ParitySplitLimit,
    )
}

/// `sum_{u>=1} f(u) = -f(0)/2` for an even regular function, whether or not
/// the series converges.
pub fn even_regular_sum(rf: &RegularFunction, mode: Mode) -> Result<RegularizedValue, SumError> {
    if rf.parity != Parity::Even {
        return Err(SumError::NotEven);
    }
    let at_zero = rf.f.value_at(0)?;
    Ok(RegularizedValue::new(
        at_zero.neg_half(),
        mode,
        Derivation::EvenFunction,
    ))
}

/// Regularized sums of the progression `a_u = a1 + (u - 1) d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticSeries {
    /// `(5d - 6 a1) / 12`
    pub sum: ExactRational,
    /// `(2 a1 - d) / 4`
    pub alternating_sum: ExactRational,
    /// Set when `d < 0`; the closed forms are still applied.
    pub outside_hypothesis: bool,
}

pub fn arithmetic_series_values(a1: &ExactRational, d: &ExactRational) -> ArithmeticSeries {
    let sum = (exact_int(5) * d - exact_int(6) * a1) / exact_int(12);
    let alternating_sum = (exact_int(2) * a1 - d) / exact_int(4);
    ArithmeticSeries {
        sum,
        alternating_sum,
        outside_hypothesis: d < &ExactRational::zero(),
    }
}

/// `a1 + (u - 1) d` as a polynomial in `u`.
pub fn arithmetic_progression(a1: &ExactRational, d: &ExactRational) -> ExactPolynomial {
    ExactPolynomial::new(vec![a1 - d, d.clone()])
}

/// Numerical evidence for a convergent series with a known antidifference.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub n_terms: u64,
    pub partial_sum: f64,
    pub expected: f64,
    /// `|S_N - expected|`
    pub partial_sum_error: f64,
    /// `max |F(n+1) - F(n) - f(n)|` over [`RESIDUAL_WINDOW`].
    pub max_residual: f64,
    /// `-f(0)/2`
    pub even_value: Value,
}

impl fmt::Display for ConvergenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "terms: {}", self.n_terms)?;
        writeln!(f, "partial_sum: {:.16e}", self.partial_sum)?;
        writeln!(f, "expected: {:.16e}", self.expected)?;
        writeln!(f, "partial_sum_error: {:.3e}", self.partial_sum_error)?;
        writeln!(f, "max_residual: {:.3e}", self.max_residual)?;
        match &self.even_value {
            Value::Exact(r) => write!(f, "even_value: {}", crate::format_rational(r)),
            Value::Approx(x) => write!(f, "even_value: {x:.16e}"),
        }
    }
}

/// Compensated (Neumaier) running sum.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

pub fn verify_convergent_example(
    rf: &RegularFunction,
    expected: f64,
    n_terms: u64,
) -> Result<ConvergenceReport, SumError> {
    let mut acc = CompensatedSum::default();
    for u in 1..=n_terms as i64 {
        acc.add(rf.f.numeric_at(u)?);
    }
    let partial_sum = acc.total();
    let mut max_residual: f64 = 0.0;
    for n in RESIDUAL_WINDOW.0..=RESIDUAL_WINDOW.1 {
        let residual = (rf.antidifference.numeric_at(n + 1)?
            - rf.antidifference.numeric_at(n)?
            - rf.f.numeric_at(n)?)
        .abs();
        max_residual = max_residual.max(residual);
    }
    let even_value = rf.f.value_at(0)?.neg_half();
    Ok(ConvergenceReport {
        n_terms,
        partial_sum,
        expected,
        partial_sum_error: (partial_sum - expected).abs(),
        max_residual,
        even_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_expr;
    use crate::rational;

    fn poly(coeffs: &[i64]) -> ExactPolynomial {
        Polynomial::new(coeffs.iter().map(|&c| rational(c, 1)).collect())
    }

    fn exact(v: &RegularizedValue) -> ExactRational {
        v.exact().expect("exact value").clone()
    }

    fn identity_with_triangular_antidifference() -> RegularFunction {
        // F(n) = (n - 1) n / 2
        RegularFunction::new(
            Evaluator::from_polynomial(poly(&[0, 1])),
            Evaluator::from_polynomial(Polynomial::new(vec![
                rational(0, 1),
                rational(-1, 2),
                rational(1, 2),
            ])),
            Parity::Odd,
        )
    }

    #[test]
    fn antidifference_of_identity() {
        let built = RegularFunction::from_polynomial(poly(&[0, 1]));
        let antidiff = antidifference_poly(BernoulliTable::global(), &poly(&[0, 1]));
        assert_eq!(
            antidiff,
            Polynomial::new(vec![rational(0, 1), rational(-1, 2), rational(1, 2)])
        );
        assert_eq!(built.parity(), Parity::Odd);
        assert_eq!(built.check(CHECK_WINDOW.0, CHECK_WINDOW.1).unwrap(), 0.0);
    }

    #[test]
    fn generalized_sums() {
        let rf = identity_with_triangular_antidifference();
        let forward = generalized_sum(&rf, 1, 4).unwrap();
        assert_eq!(exact(&forward), rational(10, 1));
        assert_eq!(forward.derivation, Derivation::Telescoped);
        assert_eq!(exact(&generalized_sum(&rf, 4, 1).unwrap()), rational(-5, 1));
        assert_eq!(exact(&generalized_sum(&rf, 0, -2).unwrap()), rational(1, 1));
    }

    #[test]
    fn full_circle() {
        let squares = RegularFunction::from_polynomial(poly(&[0, 0, 1]));
        for a in [-7, 0, 3, 11] {
            assert!(exact(&sum_over_z(&squares, a).unwrap()).is_zero());
        }
        let sign = RegularFunction::new(
            Evaluator::exact(|x| {
                let n = x.to_integer();
                Ok(if n.bit(0) {
                    rational(1, 1)
                } else {
                    rational(-1, 1)
                })
            }),
            Evaluator::exact(|x| {
                let n = x.to_integer();
                Ok(if n.bit(0) {
                    rational(-1, 2)
                } else {
                    rational(1, 2)
                })
            }),
            Parity::Even,
        );
        sign.check(-10, 10).unwrap();
        assert!(exact(&sum_over_z(&sign, 7).unwrap()).is_zero());
        let ones = RegularFunction::new(
            Evaluator::from_polynomial(poly(&[1])),
            Evaluator::from_polynomial(poly(&[-1, 1])),
            Parity::Even,
        );
        assert!(exact(&sum_over_z(&ones, -3).unwrap()).is_zero());
    }

    #[test]
    fn limits() {
        assert_eq!(regularized_limit(&poly(&[5])), rational(5, 1));
        assert_eq!(regularized_limit(&ExactPolynomial::x()), rational(-1, 2));
        let squares = BernoulliTable::global().power_sum_poly(2);
        assert!(regularized_limit(&squares).is_zero());
        assert!(signed_limit_is_zero(&ExactPolynomial::monomial(rational(1, 1), 5)).is_zero());
        assert!(signed_limit_is_zero(&ExactPolynomial::zero()).is_zero());
        assert!(signed_limit_is_zero(&ExactPolynomial::one()).is_zero());
    }

    #[test]
    fn parity_split() {
        let p = poly(&[1, 2, 3]);
        assert_eq!(parity_split_limit(&p, &p), regularized_limit(&p));
        assert_eq!(
            parity_split_limit(&ExactPolynomial::zero(), &poly(&[1])),
            rational(1, 2)
        );
        let (even, odd) = BernoulliTable::global().parity_branch_polys(2).unwrap();
        assert_eq!(parity_split_limit(&even, &odd), rational(1, 4));
        let float = parity_split_limit(&FloatPolynomial::zero(), &FloatPolynomial::one());
        assert_eq!(float, 0.5);
    }

    #[test]
    fn divergent_series() {
        assert_eq!(exact(&regularized_series_sum(&poly(&[1]))), rational(-1, 2));
        assert_eq!(
            exact(&regularized_series_sum(&poly(&[0, 1]))),
            rational(-1, 12)
        );
        assert_eq!(
            exact(&regularized_series_sum(&poly(&[-1, 2]))),
            rational(1, 3)
        );
        assert_eq!(
            exact(&regularized_alt_series_sum(&poly(&[1]))),
            rational(1, 2)
        );
        assert_eq!(
            exact(&regularized_alt_series_sum(&poly(&[0, 1]))),
            rational(1, 4)
        );
        assert!(exact(&regularized_alt_series_sum(&poly(&[-1, 2]))).is_zero());
        assert_eq!(regularized_series_sum(&poly(&[1])).mode, Mode::Regularized);
        assert_eq!(
            regularized_series_sum(&ExactPolynomial::zero()).mode,
            Mode::Convergent
        );
    }

    #[test]
    fn even_functions() {
        let f = parse_expr("1/(4*u^2-1)", "u").unwrap();
        let big_f = parse_expr("-1/(2*(2*n-1))", "n").unwrap();
        let rf = RegularFunction::new(
            Evaluator::from_expr(f),
            Evaluator::from_expr(big_f),
            Parity::Even,
        );
        rf.check(CHECK_WINDOW.0, CHECK_WINDOW.1).unwrap();
        let v = even_regular_sum(&rf, Mode::Convergent).unwrap();
        assert_eq!(exact(&v), rational(1, 2));
        assert_eq!(v.mode, Mode::Convergent);

        let squares = RegularFunction::from_polynomial(poly(&[0, 0, 1]));
        assert!(exact(&even_regular_sum(&squares, Mode::Regularized).unwrap()).is_zero());

        let odd = RegularFunction::from_polynomial(poly(&[0, 1]));
        assert_eq!(
            even_regular_sum(&odd, Mode::Regularized),
            Err(SumError::NotEven)
        );
    }

    #[test]
    fn alternating_even_series() {
        let f = parse_expr("(-1)^u * (2*u^2+1/2)/(2*u^2-1/2)^2", "u").unwrap();
        let big_f = parse_expr("(-1)^(n-1)/(2*n-1)^2", "n").unwrap();
        let rf = RegularFunction::new(
            Evaluator::from_expr(f),
            Evaluator::from_expr(big_f),
            Parity::Even,
        );
        rf.check(CHECK_WINDOW.0, CHECK_WINDOW.1).unwrap();
        assert_eq!(
            exact(&even_regular_sum(&rf, Mode::Convergent).unwrap()),
            rational(-1, 1)
        );
    }

    #[test]
    fn parity_tag_is_checked() {
        let rf = RegularFunction::new(
            Evaluator::from_polynomial(poly(&[0, 1])),
            Evaluator::from_polynomial(Polynomial::new(vec![
                rational(0, 1),
                rational(-1, 2),
                rational(1, 2),
            ])),
            Parity::Even,
        );
        assert_eq!(rf.check(-3, 3), Err(SumError::ParityViolation(1)));
    }

    #[test]
    fn wrong_antidifference_is_caught() {
        let rf = RegularFunction::new(
            Evaluator::from_polynomial(poly(&[0, 1])),
            Evaluator::from_polynomial(poly(&[0, 0, 1])),
            Parity::None,
        );
        assert!(matches!(rf.check(-3, 3), Err(SumError::NotRegular { .. })));
    }

    #[test]
    fn arithmetic_progressions() {
        let one = rational(1, 1);
        for (d, sum, alt) in [
            (0, (-1, 2), (1, 2)),
            (1, (-1, 12), (1, 4)),
            (2, (1, 3), (0, 1)),
        ] {
            let values = arithmetic_series_values(&one, &rational(d, 1));
            assert_eq!(values.sum, rational(sum.0, sum.1));
            assert_eq!(values.alternating_sum, rational(alt.0, alt.1));
            assert!(!values.outside_hypothesis);
        }
        assert!(arithmetic_series_values(&one, &rational(-1, 1)).outside_hypothesis);
    }

    #[test]
    fn domain_errors_surface() {
        let f = parse_expr("1/u", "u").unwrap();
        let big_f = parse_expr("1/(n-3)", "n").unwrap();
        let rf = RegularFunction::new(
            Evaluator::from_expr(f),
            Evaluator::from_expr(big_f),
            Parity::None,
        );
        assert!(matches!(
            generalized_sum(&rf, 0, 2),
            Err(SumError::Eval { point: 3, .. })
        ));
    }

    #[test]
    fn out_of_range_endpoints() {
        let rf = RegularFunction::from_polynomial(poly(&[1]));
        assert!(matches!(
            generalized_sum(&rf, i64::MAX, 0),
            Err(SumError::Order(OrderError::OutOfRange(_)))
        ));
    }

    #[test]
    fn numeric_report() {
        let f = parse_expr("1/(4*u^2-1)", "u").unwrap();
        let big_f = parse_expr("-1/(2*(2*n-1))", "n").unwrap();
        let rf = RegularFunction::new(
            Evaluator::from_expr(f),
            Evaluator::from_expr(big_f),
            Parity::Even,
        );
        let report = verify_convergent_example(&rf, 0.5, 1000).unwrap();
        // telescoping leaves exactly 1/(2(2N+1))
        assert!((report.partial_sum_error - 1.0 / 4002.0).abs() < 1e-12);
        assert!(report.max_residual < 1e-15);
        assert_eq!(report.even_value, Value::Exact(rational(1, 2)));
    }
}
