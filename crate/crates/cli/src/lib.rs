//! Command-line front end: exact values of `zeta(-m)` and `eta(-m)`,
//! generalized and regularized sums, Bernoulli numbers, and the `verify` report.

pub mod commands;
pub mod record;
pub mod verify;

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use zetareg::bernoulli::BernoulliTable;
use zetareg::zeta::SpecialFunction;

use commands::{Outcome, EXIT_OK, EXIT_USAGE};
use record::Format;
use verify::Suite;

const EXPR_HELP: &str =
    "Expression in u using + - * / ^, parentheses and sin, cos, tan, exp, abs. \
    ^ is right-associative: 2^u^2 means 2^(u^2)";

#[derive(Debug, Parser)]
#[command(
    name = "zetareg",
    version,
    about = "Exact regularized sums and zeta values"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// zeta(-M), cross-checked along three independent routes
    Zeta {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// eta(-M) = 1^M - 2^M + 3^M - ..., cross-checked along three independent routes
    Eta {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sum of f(u) over u from A to B in the order 0, 1, 2, ..., -2, -1
    Sum {
        #[arg(long = "f", allow_hyphen_values = true, help = EXPR_HELP)]
        f: String,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Antidifference F(n) with F(n+1) - F(n) = f(n); required when f is not a polynomial
        #[arg(long = "F", allow_hyphen_values = true)]
        big_f: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Regularized value of f(1) + f(2) + ... for a polynomial f
    Regsum {
        #[arg(long = "f", allow_hyphen_values = true, help = EXPR_HELP)]
        f: String,
        /// Sum f(1) - f(2) + f(3) - ... instead
        #[arg(long)]
        alt: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification report; exits 0 only if every check passes
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Bernoulli number B_K (with B_1 = 1/2)
    Bernoulli {
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// Print the coefficients of 1^K + 2^K + ... + n^K instead
        #[arg(long)]
        poly: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(BernoulliTable::global(), args)
}

/// [`run`] against a specific Bernoulli table.
pub fn run_with<I, T>(table: &BernoulliTable, args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            };
        }
    };
    match cli.command {
        Command::Zeta { m, format } => {
            commands::special_value(table, SpecialFunction::Zeta, m, format)
        }
        Command::Eta { m, format } => {
            commands::special_value(table, SpecialFunction::Eta, m, format)
        }
        Command::Sum {
            f,
            from,
            to,
            big_f,
            format,
        } => commands::sum(&f, from, to, big_f.as_deref(), format),
        Command::Regsum { f, alt, format } => commands::regsum(table, &f, alt, format),
        Command::Verify { suite } => commands::verify(table, suite),
        Command::Bernoulli { k, poly, format } => commands::bernoulli(table, k, poly, format),
    }
}
