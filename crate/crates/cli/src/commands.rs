use std::fmt::Write as _;

use zetareg::bernoulli::BernoulliTable;
use zetareg::parser::{parse_expr, ExprAst};
use zetareg::summation::{
    arithmetic_series_values, generalized_sum, regularized_alt_series_sum_with,
    regularized_series_sum_with, Evaluator, Mode, Parity, RegularFunction, RESIDUAL_WINDOW,
};
use zetareg::zeta::{cross_checked, SpecialFunction};
use zetareg::{format_rational, ExactRational};

use crate::record::{Format, OutputRecord, PolynomialRecord};
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

/// Largest relative antidifference residual `sum` accepts before warning.
pub const SUM_RESIDUAL_TOLERANCE: f64 = 1e-9;

/// What a command printed and how it exits.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            stdout: String::new(),
            stderr,
            code,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self::fail(EXIT_USAGE, format!("error: {}", message.into()))
    }
}

fn non_negative(name: &str, value: i64) -> Result<usize, Outcome> {
    usize::try_from(value).map_err(|_| {
        Outcome::usage(format!(
            "{name} must be a non-negative integer, got {value}"
        ))
    })
}

fn parse(flag: &str, text: &str, var: &str) -> Result<ExprAst, Outcome> {
    parse_expr(text, var).map_err(|e| Outcome::usage(format!("{flag}: {e}")))
}

/// `zeta M` and `eta M`: the value at `-M`, printed only if all three routes agree.
pub fn special_value(
    table: &BernoulliTable,
    function: SpecialFunction,
    m: i64,
    format: Format,
) -> Outcome {
    let m = match non_negative("M", m) {
        Ok(m) => m,
        Err(out) => return out,
    };
    match cross_checked(table, function, m) {
        Ok(v) => {
            let query = format!("{}({})", function.name(), v.argument);
            let record = OutputRecord::exact(query, v.value, v.route.as_str(), Mode::Regularized);
            Outcome::ok(record.render(format))
        }
        Err(e) => Outcome::fail(
            EXIT_CHECK_FAILED,
            format!("internal cross-check failed: {e}"),
        ),
    }
}

/// Largest `|F(n+1) - F(n) - f(n)| / max(1, |f(n)|)` over the residual window,
/// skipping points where `f` is undefined.
fn antidifference_residual(rf: &RegularFunction) -> f64 {
    let mut worst: f64 = 0.0;
    for n in RESIDUAL_WINDOW.0..=RESIDUAL_WINDOW.1 {
        let Ok(fv) = rf.f().numeric_at(n) else {
            continue;
        };
        let diff = match (
            rf.antidifference().numeric_at(n + 1),
            rf.antidifference().numeric_at(n),
        ) {
            (Ok(a), Ok(b)) => a - b,
            _ => return f64::INFINITY,
        };
        let residual = (diff - fv).abs() / fv.abs().max(1.0);
        if residual.is_nan() {
            return f64::INFINITY;
        }
        worst = worst.max(residual);
    }
    worst
}

/// `sum --f EXPR --from A --to B [--F EXPR]`
pub fn sum(f: &str, from: i64, to: i64, big_f: Option<&str>, format: Format) -> Outcome {
    let f_ast = match parse("--f", f, "u") {
        Ok(ast) => ast,
        Err(out) => return out,
    };
    let big_f_ast = match big_f.map(|text| parse("--F", text, "n")).transpose() {
        Ok(ast) => ast,
        Err(out) => return out,
    };
    let query = format!("sum_{{u={from}}}^{{{to}}} {f_ast}");

    // A user-supplied antidifference is always checked; a polynomial term
    // is then still summed with the constructed one.
    let residual = big_f_ast.as_ref().map(|big_f| {
        antidifference_residual(&RegularFunction::new(
            Evaluator::from_expr(f_ast.clone()),
            Evaluator::from_expr(big_f.clone()),
            Parity::None,
        ))
    });
    let rf = match (f_ast.extract_polynomial(), big_f_ast) {
        (Some(p), _) => RegularFunction::from_polynomial(p),
        (None, Some(big_f)) => RegularFunction::new(
            Evaluator::from_expr(f_ast),
            Evaluator::from_expr(big_f),
            Parity::None,
        ),
        (None, None) => {
            return Outcome::usage(format!(
                "`{f_ast}` is not a polynomial in u; supply its antidifference with --F \
                 (an expression in n with F(n+1) - F(n) = f(n))"
            ))
        }
    };
    let value = match generalized_sum(&rf, from, to) {
        Ok(v) => v,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let mut record =
        OutputRecord::from_value(query, &value.value, value.derivation.as_str(), value.mode);
    record.residual = residual;
    let mut out = Outcome::ok(record.render(format));
    if let Some(r) = residual.filter(|r| *r > SUM_RESIDUAL_TOLERANCE) {
        out.code = EXIT_CHECK_FAILED;
        let _ = writeln!(
            out.stderr,
            "warning: F(n+1) - F(n) differs from f(n) by {r:.3e} (relative) on n in {}..={}; \
             the value above is not a sum of f",
            RESIDUAL_WINDOW.0, RESIDUAL_WINDOW.1
        );
    }
    out
}

/// `regsum --f EXPR [--alt]`: `f(1) + f(2) + ...` or `f(1) - f(2) + ...`.
pub fn regsum(table: &BernoulliTable, f: &str, alternating: bool, format: Format) -> Outcome {
    let ast = match parse("--f", f, "u") {
        Ok(ast) => ast,
        Err(out) => return out,
    };
    let Some(p) = ast.extract_polynomial() else {
        return Outcome::usage(format!(
            "regsum assigns values only to polynomial terms, and `{ast}` is not a polynomial in u; \
             use `zetareg sum --f EXPR --F EXPR --from A --to B` for a term with a known \
             antidifference, or `zetareg verify convergent` for the reference series"
        ));
    };
    let (query, value) = if alternating {
        (
            format!("sum_{{u>=1}} (-1)^(u-1)*({ast})"),
            regularized_alt_series_sum_with(table, &p),
        )
    } else {
        (
            format!("sum_{{u>=1}} {ast}"),
            regularized_series_sum_with(table, &p),
        )
    };
    let exact = value.exact().expect("polynomial series are exact");
    if p.degree().unwrap_or(0) <= 1 {
        let one = ExactRational::from_integer(1.into());
        let progression = arithmetic_series_values(&p.eval(&one), &p.coeff(1));
        let expected = if alternating {
            &progression.alternating_sum
        } else {
            &progression.sum
        };
        if exact != expected {
            return Outcome::fail(
                EXIT_CHECK_FAILED,
                format!(
                    "internal cross-check failed: {query}: {} = {}, arithmetic-progression = {}",
                    value.derivation.as_str(),
                    format_rational(exact),
                    format_rational(expected)
                ),
            );
        }
    }
    let record =
        OutputRecord::from_value(query, &value.value, value.derivation.as_str(), value.mode);
    Outcome::ok(record.render(format))
}

/// `bernoulli K [--poly]`
pub fn bernoulli(table: &BernoulliTable, k: i64, poly: bool, format: Format) -> Outcome {
    let k = match non_negative("K", k) {
        Ok(k) => k,
        Err(out) => return out,
    };
    if poly {
        let record = PolynomialRecord {
            query: format!("B_{k}(n)"),
            var: "n",
            coeffs: table.power_sum_poly(k).into_coeffs(),
        };
        return Outcome::ok(record.render(format));
    }
    let record = OutputRecord::exact(
        format!("B_{k}"),
        table.number(k),
        "recurrence",
        Mode::Convergent,
    );
    Outcome::ok(record.render(format))
}

/// `verify [paper|convergent|all]`
pub fn verify(table: &BernoulliTable, suite: Suite) -> Outcome {
    let checks = verify::run_suite(table, suite);
    let code = if verify::all_passed(&checks) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    };
    Outcome {
        stdout: verify::render(&checks),
        stderr: String::new(),
        code,
    }
}
