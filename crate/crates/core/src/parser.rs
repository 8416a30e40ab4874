//! Expressions in one variable, e.g. `sin(n-1/2)/(8*(2*n-1)^2*cos(1/2))`.
//!
//! Grammar, lowest precedence first:
//!
//! ```text
//! expr   := term   (("+" | "-") term)*
//! term   := unary  (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" unary)?            right-associative: 2^u^2 = 2^(u^2)
//! atom   := integer | variable | func "(" expr ")" | "(" ["-"] integer "/" integer ")" | "(" expr ")"
//! func   := sin | cos | tan | exp | abs
//! ```
//!
//! A parenthesized `p/q` of two integer literals is read as a single rational
//! literal. Multiplication is always explicit (`2*u`, never `2u`). A power
//! needs either an integer-literal exponent (`u^3`, `u^-1`) or a literal base
//! (`2^u`, `(-1)^u`, `(1/2)^u`).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::rational::{format_rational, to_f64};
use crate::{ExactPolynomial, ExactRational};

/// Largest exponent magnitude accepted by exact evaluation.
pub const MAX_EXACT_EXPONENT: i64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("`{0}` is not a valid variable name")]
    InvalidVariable(String),
    #[error("syntax error at {position}: found {found}, expected one of {}", expected.join(", "))]
    Syntax {
        position: usize,
        found: String,
        expected: Vec<&'static str>,
    },
    #[error("unknown identifier `{name}` at {position}")]
    UnknownIdentifier { position: usize, name: String },
    #[error("{function} takes 1 argument but {found} were given (at {position})")]
    Arity {
        position: usize,
        function: Func,
        found: usize,
    },
    #[error("unsupported power at {position}: need an integer exponent or a literal base")]
    UnsupportedPower { position: usize },
    #[error("zero denominator in literal at {position}")]
    ZeroDenominator { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative base raised to a non-integer power")]
    NegativeBaseFractionalExponent,
    #[error("`{0}` has no exact rational value")]
    NotRational(Func),
    #[error("exponent {0} is too large for exact evaluation")]
    ExponentTooLarge(String),
    #[error("result is not a number")]
    NotANumber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Abs,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "abs" => Func::Abs,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Abs => "abs",
        }
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Num(ExactRational),
    Var,
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    fn literal_value(&self) -> Option<ExactRational> {
        match self {
            Expr::Num(r) => Some(r.clone()),
            Expr::Neg(inner) => match inner.as_ref() {
                Expr::Num(r) => Some(-r.clone()),
                _ => None,
            },
            _ => None,
        }
    }

    fn is_integer_literal(&self) -> bool {
        self.literal_value().is_some_and(|r| r.is_integer())
    }

    /// Whether `base ^ exponent` is an accepted power.
    pub fn is_valid_power(base: &Expr, exponent: &Expr) -> bool {
        exponent.is_integer_literal() || base.literal_value().is_some()
    }
}

/// A parsed expression together with the name of its single variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExprAst {
    var: String,
    root: Expr,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ExprAst {
    /// Wraps an already-built tree. Powers are validated the same way the parser does.
    pub fn new(var: &str, root: Expr) -> Result<Self, ParseError> {
        if !is_identifier(var) || Func::from_name(var).is_some() {
            return Err(ParseError::InvalidVariable(var.to_string()));
        }
        fn check(e: &Expr) -> Result<(), ParseError> {
            match e {
                Expr::Num(_) | Expr::Var => Ok(()),
                Expr::Neg(inner) | Expr::Call(_, inner) => check(inner),
                Expr::Binary(op, lhs, rhs) => {
                    if *op == BinOp::Pow && !Expr::is_valid_power(lhs, rhs) {
                        return Err(ParseError::UnsupportedPower { position: 0 });
                    }
                    check(lhs)?;
                    check(rhs)
                }
            }
        }
        check(&root)?;
        Ok(Self {
            var: var.to_string(),
            root,
        })
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn root(&self) -> &Expr {
        &self.root
    }

    pub fn eval_numeric(&self, x: f64) -> Result<f64, EvalError> {
        eval_numeric(self, x)
    }

    pub fn eval_exact(&self, x: &ExactRational) -> Result<ExactRational, EvalError> {
        eval_exact(self, x)
    }

    pub fn extract_polynomial(&self) -> Option<ExactPolynomial> {
        extract_polynomial(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &["number", "variable", "function", "`(`", "`-`"];

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((
                    Tok::Int(text[start..i].parse().expect("ascii digits")),
                    start,
                ));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let found = text[start..].chars().next().expect("non-empty remainder");
                return Err(ParseError::Syntax {
                    position: start,
                    found: format!("character `{found}`"),
                    expected: ATOM_START.to_vec(),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    var: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let idx = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[idx].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            position: self.offset(),
            found: self.peek().describe(),
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn additive(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.multiplicative()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::binary(op, lhs, self.multiplicative()?);
        }
    }

    fn multiplicative(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::binary(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let position = self.offset();
        self.bump();
        let exponent = self.unary()?;
        if !Expr::is_valid_power(&base, &exponent) {
            return Err(ParseError::UnsupportedPower { position });
        }
        Ok(Expr::binary(BinOp::Pow, base, exponent))
    }

    /// `( [-] int / int )`, read as one rational literal.
    fn try_fraction_literal(&mut self) -> Result<Option<Expr>, ParseError> {
        let signed = *self.peek_at(1) == Tok::Minus;
        let base = if signed { 2 } else { 1 };
        let (Tok::Int(p), Tok::Slash, Tok::Int(q), Tok::RParen) = (
            self.peek_at(base).clone(),
            self.peek_at(base + 1).clone(),
            self.peek_at(base + 2).clone(),
            self.peek_at(base + 3).clone(),
        ) else {
            return Ok(None);
        };
        let position = self.offset();
        if q.is_zero() {
            return Err(ParseError::ZeroDenominator { position });
        }
        for _ in 0..base + 4 {
            self.bump();
        }
        let value = ExactRational::new(if signed { -p } else { p }, q);
        Ok(Some(Expr::Num(value)))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let position = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(ExactRational::from_integer(n)))
            }
            Tok::Ident(name) => {
                self.bump();
                if name == self.var {
                    return Ok(Expr::Var);
                }
                let Some(func) = Func::from_name(&name) else {
                    return Err(ParseError::UnknownIdentifier { position, name });
                };
                self.expect(Tok::LParen, "`(`")?;
                if *self.peek() == Tok::RParen {
                    return Err(ParseError::Arity {
                        position,
                        function: func,
                        found: 0,
                    });
                }
                let arg = self.additive()?;
                let mut extra = 0;
                while *self.peek() == Tok::Comma {
                    self.bump();
                    self.additive()?;
                    extra += 1;
                }
                if extra > 0 {
                    return Err(ParseError::Arity {
                        position,
                        function: func,
                        found: 1 + extra,
                    });
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Tok::LParen => {
                if let Some(lit) = self.try_fraction_literal()? {
                    return Ok(lit);
                }
                self.bump();
                let inner = self.additive()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.error(ATOM_START)),
        }
    }
}

/// Parses `text` as an expression in the single variable `var_name`.
pub fn parse_expr(text: &str, var_name: &str) -> Result<ExprAst, ParseError> {
    if !is_identifier(var_name) || Func::from_name(var_name).is_some() {
        return Err(ParseError::InvalidVariable(var_name.to_string()));
    }
    let tokens = tokenize(text)?;
    if tokens.len() == 1 {
        return Err(ParseError::Empty);
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        var: var_name,
    };
    let root = parser.additive()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error(&["`+`", "`-`", "`*`", "`/`", "`^`", "end of input"]));
    }
    Ok(ExprAst {
        var: var_name.to_string(),
        root,
    })
}

fn exact_integer(r: &ExactRational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

fn check_nan(v: f64) -> Result<f64, EvalError> {
    if v.is_nan() {
        Err(EvalError::NotANumber)
    } else {
        Ok(v)
    }
}

fn numeric(e: &Expr, x: f64) -> Result<f64, EvalError> {
    let v = match e {
        Expr::Num(r) => to_f64(r),
        Expr::Var => x,
        Expr::Neg(inner) => -numeric(inner, x)?,
        Expr::Call(func, arg) => {
            let a = numeric(arg, x)?;
            match func {
                Func::Sin => a.sin(),
                Func::Cos => a.cos(),
                Func::Tan => a.tan(),
                Func::Exp => a.exp(),
                Func::Abs => a.abs(),
            }
        }
        Expr::Binary(op, lhs, rhs) => match op {
            BinOp::Add => numeric(lhs, x)? + numeric(rhs, x)?,
            BinOp::Sub => numeric(lhs, x)? - numeric(rhs, x)?,
            BinOp::Mul => numeric(lhs, x)? * numeric(rhs, x)?,
            BinOp::Div => {
                let den = numeric(rhs, x)?;
                if den == 0.0 {
                    return Err(EvalError::DivisionByZero);
                }
                numeric(lhs, x)? / den
            }
            BinOp::Pow => numeric_pow(lhs, rhs, x)?,
        },
    };
    check_nan(v)
}

fn numeric_pow(base: &Expr, exponent: &Expr, x: f64) -> Result<f64, EvalError> {
    let b = numeric(base, x)?;
    let e = numeric(exponent, x)?;
    if b == 0.0 && e < 0.0 {
        return Err(EvalError::DivisionByZero);
    }
    if e.fract() == 0.0 {
        let magnitude = if e.abs() <= i32::MAX as f64 {
            b.abs().powi(e as i32)
        } else {
            b.abs().powf(e)
        };
        let odd = (e % 2.0).abs() == 1.0;
        return Ok(if b < 0.0 && odd {
            -magnitude
        } else {
            magnitude
        });
    }
    if b < 0.0 {
        return Err(EvalError::NegativeBaseFractionalExponent);
    }
    Ok(b.powf(e))
}

/// Double-precision evaluation. `(-1)^u` at integral `u` is exactly `±1`.
pub fn eval_numeric(ast: &ExprAst, x: f64) -> Result<f64, EvalError> {
    numeric(&ast.root, x)
}

fn exact(e: &Expr, x: &ExactRational) -> Result<ExactRational, EvalError> {
    Ok(match e {
        Expr::Num(r) => r.clone(),
        Expr::Var => x.clone(),
        Expr::Neg(inner) => -exact(inner, x)?,
        Expr::Call(Func::Abs, arg) => exact(arg, x)?.abs(),
        Expr::Call(func, _) => return Err(EvalError::NotRational(*func)),
        Expr::Binary(op, lhs, rhs) => {
            let a = exact(lhs, x)?;
            let b = exact(rhs, x)?;
            match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
                BinOp::Div => {
                    if b.is_zero() {
                        return Err(EvalError::DivisionByZero);
                    }
                    a / b
                }
                BinOp::Pow => {
                    let Some(k) = exact_integer(&b) else {
                        return if a.is_negative() {
                            Err(EvalError::NegativeBaseFractionalExponent)
                        } else {
                            Err(EvalError::ExponentTooLarge(format_rational(&b)))
                        };
                    };
                    if k.abs() > MAX_EXACT_EXPONENT {
                        return Err(EvalError::ExponentTooLarge(k.to_string()));
                    }
                    if a.is_zero() && k < 0 {
                        return Err(EvalError::DivisionByZero);
                    }
                    num_traits::Pow::pow(a, k as i32)
                }
            }
        }
    })
}

/// Exact rational evaluation. Fails for transcendental functions and for
/// exponents that do not evaluate to an integer.
pub fn eval_exact(ast: &ExprAst, x: &ExactRational) -> Result<ExactRational, EvalError> {
    exact(&ast.root, x)
}

fn polynomial(e: &Expr) -> Option<ExactPolynomial> {
    Some(match e {
        Expr::Num(r) => ExactPolynomial::constant(r.clone()),
        Expr::Var => ExactPolynomial::x(),
        Expr::Neg(inner) => -polynomial(inner)?,
        Expr::Call(..) => return None,
        Expr::Binary(op, lhs, rhs) => match op {
            BinOp::Add => polynomial(lhs)? + polynomial(rhs)?,
            BinOp::Sub => polynomial(lhs)? - polynomial(rhs)?,
            BinOp::Mul => polynomial(lhs)? * polynomial(rhs)?,
            BinOp::Div => {
                let den = polynomial(rhs)?.as_constant()?;
                if den.is_zero() {
                    return None;
                }
                polynomial(lhs)?.scale(&(ExactRational::from_integer(1.into()) / den))
            }
            BinOp::Pow => {
                let base = polynomial(lhs)?;
                let k = exact_integer(&polynomial(rhs)?.as_constant()?)?;
                if k.abs() > MAX_EXACT_EXPONENT {
                    return None;
                }
                if k >= 0 {
                    base.pow(k as u32)
                } else {
                    let c = base.as_constant()?;
                    if c.is_zero() {
                        return None;
                    }
                    ExactPolynomial::constant(num_traits::Pow::pow(c, k as i32))
                }
            }
        },
    })
}

/// The exact polynomial an expression denotes, or `None` if it is not a
/// polynomial with rational coefficients.
pub fn extract_polynomial(ast: &ExprAst) -> Option<ExactPolynomial> {
    polynomial(&ast.root)
}

// Binding strength used when rendering: additive 1, multiplicative 2,
// negation 3, power 4, atoms 5.
fn strength(e: &Expr) -> u8 {
    match e {
        Expr::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
        Expr::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
        Expr::Neg(_) => 3,
        Expr::Binary(BinOp::Pow, ..) => 4,
        Expr::Num(_) | Expr::Var | Expr::Call(..) => 5,
    }
}

struct Render<'a> {
    expr: &'a Expr,
    var: &'a str,
}

impl Render<'_> {
    fn child<'b>(&'b self, expr: &'b Expr) -> Render<'b> {
        Render {
            expr,
            var: self.var,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
        if strength(e) >= min {
            return write!(f, "{}", self.child(e));
        }
        // A parenthesized quotient of two plain integers would read back as a
        // literal, so keep the numerator grouped on its own.
        if let Expr::Binary(BinOp::Div, lhs, rhs) = e {
            if let (Expr::Num(p), Expr::Num(q)) = (lhs.as_ref(), rhs.as_ref()) {
                if p.is_integer() && !p.is_negative() && q.is_integer() && !q.is_negative() {
                    return write!(f, "(({})/{})", p.numer(), q.numer());
                }
            }
        }
        write!(f, "({})", self.child(e))
    }
}

impl fmt::Display for Render<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.expr {
            Expr::Num(r) => {
                if r.is_integer() && !r.is_negative() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "({}/{})", r.numer(), r.denom())
                }
            }
            Expr::Var => f.write_str(self.var),
            Expr::Neg(inner) => {
                f.write_str("-")?;
                self.write_child(f, inner, 3)
            }
            Expr::Call(func, arg) => write!(f, "{}({})", func, self.child(arg)),
            Expr::Binary(op, lhs, rhs) => {
                let (sym, left_min, right_min) = match op {
                    BinOp::Add => (" + ", 1, 2),
                    BinOp::Sub => (" - ", 1, 2),
                    BinOp::Mul => ("*", 2, 3),
                    BinOp::Div => ("/", 2, 3),
                    BinOp::Pow => ("^", 5, 3),
                };
                self.write_child(f, lhs, left_min)?;
                f.write_str(sym)?;
                self.write_child(f, rhs, right_min)
            }
        }
    }
}

/// Canonical text; parsing it again yields an identical tree.
impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            Render {
                expr: &self.root,
                var: &self.var
            }
        )
    }
}
