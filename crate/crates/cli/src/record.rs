use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::Serialize;
use zetareg::summation::{Mode, Value};
use zetareg::{format_rational, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// One computed value, as printed by every command except `verify`.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    /// Canonical echo of the request.
    pub query: String,
    /// `None` when only a floating-point value is known.
    pub value: Option<ExactRational>,
    pub decimal: f64,
    pub route: String,
    pub mode: Mode,
    /// Largest antidifference residual, reported for numerically checked sums.
    pub residual: Option<f64>,
}

#[derive(Serialize)]
struct JsonRational {
    num: String,
    den: String,
}

impl From<&ExactRational> for JsonRational {
    fn from(r: &ExactRational) -> Self {
        Self {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    query: &'a str,
    value: Option<JsonRational>,
    decimal: String,
    route: &'a str,
    mode: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<String>,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn decimal(x: f64) -> String {
    format!("{x:.16e}")
}

impl OutputRecord {
    pub fn from_value(query: String, value: &Value, route: &str, mode: Mode) -> Self {
        Self {
            query,
            value: value.as_exact().cloned(),
            decimal: value.to_f64(),
            route: route.to_string(),
            mode,
            residual: None,
        }
    }

    pub fn exact(query: String, value: ExactRational, route: &str, mode: Mode) -> Self {
        Self::from_value(query, &Value::Exact(value), route, mode)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "query: {}", self.query);
        if let Some(v) = &self.value {
            let _ = writeln!(s, "value: {}", format_rational(v));
        }
        let _ = writeln!(s, "decimal: {}", decimal(self.decimal));
        let _ = writeln!(s, "route: {}", self.route);
        let _ = writeln!(s, "mode: {}", self.mode.as_str());
        if let Some(r) = self.residual {
            let _ = writeln!(s, "residual: {r:.3e}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        let record = JsonRecord {
            query: &self.query,
            value: self.value.as_ref().map(JsonRational::from),
            decimal: decimal(self.decimal),
            route: &self.route,
            mode: self.mode.as_str(),
            residual: self.residual.map(|r| format!("{r:.3e}")),
        };
        let mut s = serde_json::to_string(&record).expect("plain strings serialize");
        s.push('\n');
        s
    }
}

/// Coefficients of a polynomial in ascending order, printed by `bernoulli --poly`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialRecord {
    pub query: String,
    pub var: &'static str,
    pub coeffs: Vec<ExactRational>,
}

#[derive(Serialize)]
struct JsonPolynomial<'a> {
    query: &'a str,
    coefficients: Vec<JsonRational>,
}

impl PolynomialRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
                let mut s = String::new();
                let _ = writeln!(s, "query: {}", self.query);
                let _ = writeln!(s, "polynomial: {}", self.expanded());
                let _ = writeln!(s, "coefficients: [{}]", coeffs.join(", "));
                s
            }
            Format::Json => {
                let record = JsonPolynomial {
                    query: &self.query,
                    coefficients: self.coeffs.iter().map(JsonRational::from).collect(),
                };
                let mut s = serde_json::to_string(&record).expect("plain strings serialize");
                s.push('\n');
                s
            }
        }
    }

    /// `1/4*n^4 + 1/2*n^3 + 1/4*n^2`, highest degree first.
    fn expanded(&self) -> String {
        let mut s = String::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if s.is_empty() {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let one = magnitude.is_one();
            match j {
                0 => s.push_str(&format_rational(&magnitude)),
                _ => {
                    if !one {
                        let _ = write!(s, "{}*", format_rational(&magnitude));
                    }
                    s.push_str(self.var);
                    if j > 1 {
                        let _ = write!(s, "^{j}");
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}
