use super::{ArithmeticError, Polynomial};
use crate::Scalar;

/// Quotient `numer / denom` kept in reduced form: the two parts share no
/// non-constant factor and `denom` is monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction<T> {
    numer: Polynomial<T>,
    denom: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(numer: Polynomial<T>, denom: Polynomial<T>) -> Result<Self, ArithmeticError> {
        if denom.is_zero() {
            return Err(ArithmeticError::ZeroDenominator);
        }
        Ok(Self::reduced(numer, denom))
    }

    fn reduced(numer: Polynomial<T>, denom: Polynomial<T>) -> Self {
        if numer.is_zero() {
            return Self {
                numer,
                denom: Polynomial::one(),
            };
        }
        let g = numer.gcd(&denom);
        let (mut numer, mut denom) = if g.degree().unwrap_or(0) > 0 {
            (
                numer.div_rem(&g).expect("gcd is nonzero").0,
                denom.div_rem(&g).expect("gcd is nonzero").0,
            )
        } else {
            (numer, denom)
        };
        let lead = denom.leading().expect("denominator is nonzero").clone();
        if !lead.is_one() {
            let inv = T::one() / lead;
            numer = numer.scale(&inv);
            denom = denom.scale(&inv);
        }
        Self { numer, denom }
    }

    pub fn from_polynomial(p: Polynomial<T>) -> Self {
        Self {
            numer: p,
            denom: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial<T> {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial<T> {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    fn monic_denominator(numer: Polynomial<T>, denom: Polynomial<T>) -> Self {
        if numer.is_zero() {
            return Self::from_polynomial(numer);
        }
        let lead = denom.leading().expect("denominator is nonzero").clone();
        let inv = T::one() / lead;
        Self {
            numer: numer.scale(&inv),
            denom: denom.scale(&inv),
        }
    }

    /// Quotient rule. With `g = gcd(d, d')`, the quotient
    /// `(n'(d/g) - n(d'/g)) / (d (d/g))` is already in lowest terms when `n/d`
    /// is, so only the small gcd of the denominator with its derivative is needed.
    pub fn derivative(&self) -> Self {
        let d_prime = self.denom.derivative();
        if d_prime.is_zero() {
            return Self::monic_denominator(self.numer.derivative(), self.denom.clone());
        }
        let g = self.denom.gcd(&d_prime);
        let radical = self.denom.div_rem(&g).expect("gcd is nonzero").0;
        let d_prime_reduced = d_prime.div_rem(&g).expect("gcd is nonzero").0;
        let top = &(&self.numer.derivative() * &radical) - &(&self.numer * &d_prime_reduced);
        Self::monic_denominator(top, &self.denom * &radical)
    }

    /// The Euler operator `x * d/dx`, which multiplies the coefficient of `x^u`
    /// in the power-series expansion by `u`.
    pub fn euler_step(&self) -> Self {
        let d = self.derivative();
        // numer and denom are coprime, so x can only cancel against denom.
        if !d.numer.is_zero() && d.denom.coeff(0).is_zero() {
            let denom = Polynomial::new(d.denom.coeffs()[1..].to_vec());
            return Self::monic_denominator(d.numer, denom);
        }
        Self::monic_denominator(&Polynomial::x() * &d.numer, d.denom)
    }

    pub fn eval(&self, x: &T) -> Result<T, ArithmeticError> {
        let den = self.denom.eval(x);
        if den.is_zero() {
            return Err(ArithmeticError::Pole);
        }
        Ok(self.numer.eval(x) / den)
    }

    /// First `len` coefficients of the Maclaurin expansion, or `None` when the
    /// denominator vanishes at zero.
    pub fn power_series(&self, len: usize) -> Option<Vec<T>> {
        let d0 = self.denom.coeff(0);
        if d0.is_zero() {
            return None;
        }
        let mut out: Vec<T> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.numer.coeff(k);
            for j in 1..=k.min(self.denom.coeffs().len().saturating_sub(1)) {
                acc = acc - self.denom.coeff(j) * out[k - j].clone();
            }
            out.push(acc / d0.clone());
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rational, ExactPolynomial, ExactRationalFunction};

    fn poly(coeffs: &[i64]) -> ExactPolynomial {
        Polynomial::new(coeffs.iter().map(|&c| rational(c, 1)).collect())
    }

    fn x_over_one_plus_x() -> ExactRationalFunction {
        RationalFunction::new(poly(&[0, 1]), poly(&[1, 1])).unwrap()
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            ExactRationalFunction::new(poly(&[1]), ExactPolynomial::zero()).unwrap_err(),
            ArithmeticError::ZeroDenominator
        );
    }

    #[test]
    fn construction_reduces() {
        let r = ExactRationalFunction::new(poly(&[-2, 0, 2]), poly(&[2, 2])).unwrap();
        assert_eq!(r.numer(), &poly(&[-1, 1]));
        assert_eq!(r.denom(), &poly(&[1]));
    }

    #[test]
    fn one_euler_step() {
        let r = x_over_one_plus_x().euler_step();
        assert_eq!(r.numer(), &poly(&[0, 1]));
        assert_eq!(r.denom(), &poly(&[1, 1]).pow(2));
    }

    #[test]
    fn euler_step_of_constant_vanishes() {
        let one = ExactRationalFunction::from_polynomial(poly(&[1]));
        assert!(one.euler_step().is_zero());
    }

    #[test]
    fn three_euler_steps() {
        let mut r = x_over_one_plus_x();
        for _ in 0..3 {
            r = r.euler_step();
        }
        assert_eq!(r.numer(), &poly(&[0, 1, -4, 1]));
        assert_eq!(r.denom(), &poly(&[1, 1]).pow(4));
        assert_eq!(r.eval(&rational(1, 1)).unwrap(), rational(-1, 8));
    }

    #[test]
    fn pole_is_reported() {
        let r = x_over_one_plus_x();
        assert_eq!(r.eval(&rational(-1, 1)).unwrap_err(), ArithmeticError::Pole);
    }

    #[test]
    fn geometric_series() {
        let series = x_over_one_plus_x().power_series(5).unwrap();
        let expected: Vec<_> = [0, 1, -1, 1, -1].iter().map(|&c| rational(c, 1)).collect();
        assert_eq!(series, expected);
    }
}
