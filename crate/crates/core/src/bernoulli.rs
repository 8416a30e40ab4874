//! Bernoulli numbers with `B_1 = +1/2`, power-sum polynomials and the
//! alternating power-sum closed form.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::rational::pow2;
use crate::{ExactPolynomial, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BernoulliError {
    #[error("index k must be at least 1, got {0}")]
    IndexTooSmall(usize),
    #[error("upper limit n must be at least 1, got {0}")]
    LimitTooSmall(u64),
}

/// Sign given to `B_1`; every other entry is the same under both conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B1Convention {
    /// `B_1 = +1/2`, so that `B_k(n)` sums `1^k + ... + n^k`.
    Plus,
    /// `B_1 = -1/2`, the classical choice. Shifts the power sums to `0^k + ... + (n-1)^k`.
    Minus,
}

/// Row `n` of Pascal's triangle, built by the addition rule.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        next.extend(row.windows(2).map(|w| &w[0] + &w[1]));
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// Memoized Bernoulli numbers, grown monotonically behind a lock.
///
/// Entries are computed by the classical recurrence
/// `sum_{j<m} C(m+1, j) B_j = -(m+1) B_m`, which yields `B_1 = -1/2`; the sign
/// of index 1 is adjusted on read according to the table's [`B1Convention`].
#[derive(Debug)]
pub struct BernoulliTable {
    classical: RwLock<Vec<ExactRational>>,
    convention: B1Convention,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::with_convention(B1Convention::Plus)
    }

    /// A table using `B_1 = -1/2`. Every formula in this crate assumes the
    /// `+1/2` convention, so this is only useful to demonstrate that the
    /// cross-checks notice the difference.
    pub fn classical() -> Self {
        Self::with_convention(B1Convention::Minus)
    }

    pub fn with_convention(convention: B1Convention) -> Self {
        Self {
            classical: RwLock::new(vec![ExactRational::one()]),
            convention,
        }
    }

    /// Process-wide table with the `+1/2` convention.
    pub fn global() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(BernoulliTable::new)
    }

    pub fn convention(&self) -> B1Convention {
        self.convention
    }

    fn ensure(&self, k: usize) {
        if self.classical.read().expect("bernoulli table lock").len() > k {
            return;
        }
        let mut values = self.classical.write().expect("bernoulli table lock");
        while values.len() <= k {
            let m = values.len();
            let row = binomial_row(m + 1);
            let sum = values
                .iter()
                .zip(&row)
                .fold(ExactRational::zero(), |acc, (b, c)| {
                    acc + b * ExactRational::from_integer(c.clone())
                });
            values.push(-sum / ExactRational::from_integer(BigInt::from(m + 1)));
        }
    }

    /// `B_k`
    pub fn number(&self, k: usize) -> ExactRational {
        self.ensure(k);
        let value = self.classical.read().expect("bernoulli table lock")[k].clone();
        if k == 1 && self.convention == B1Convention::Plus {
            -value
        } else {
            value
        }
    }

    /// `B_0, ..., B_k`
    pub fn numbers(&self, k: usize) -> Vec<ExactRational> {
        (0..=k).map(|j| self.number(j)).collect()
    }

    /// `B_k(n) = 1/(k+1) * sum_{u=0}^{k} C(k+1, u) B_u n^{k+1-u}`, which equals
    /// `1^k + 2^k + ... + n^k` for natural `n`.
    pub fn power_sum_poly(&self, k: usize) -> ExactPolynomial {
        let row = binomial_row(k + 1);
        let scale = ExactRational::new(BigInt::one(), BigInt::from(k + 1));
        let mut coeffs = vec![ExactRational::zero(); k + 2];
        for (u, c) in row.iter().take(k + 1).enumerate() {
            coeffs[k + 1 - u] = self.number(u) * ExactRational::from_integer(c.clone()) * &scale;
        }
        ExactPolynomial::new(coeffs)
    }

    /// The two polynomials `(alpha, beta)` whose values at even and odd `n`
    /// respectively give `sum_{u=1}^{n} (-1)^(u-1) u^(k-1)`:
    ///
    /// `(2^k - 1)/k * B_k ∓ 1/k * sum_{u=1}^{k} (2^u - 1) C(k, u) B_u n^(k-u)`.
    pub fn parity_branch_polys(
        &self,
        k: usize,
    ) -> Result<(ExactPolynomial, ExactPolynomial), BernoulliError> {
        if k == 0 {
            return Err(BernoulliError::IndexTooSmall(k));
        }
        let k_inv = ExactRational::new(BigInt::one(), BigInt::from(k));
        let one = ExactRational::one();
        let row = binomial_row(k);
        let mut tail = vec![ExactRational::zero(); k];
        for (u, c) in row.iter().enumerate().skip(1) {
            tail[k - u] =
                (pow2(u) - &one) * ExactRational::from_integer(c.clone()) * self.number(u) * &k_inv;
        }
        let tail = ExactPolynomial::new(tail);
        let head = ExactPolynomial::constant((pow2(k) - &one) * self.number(k) * &k_inv);
        Ok((&head - &tail, &head + &tail))
    }

    /// `sum_{u=1}^{n} (-1)^(u-1) u^(k-1)` through the closed form.
    pub fn alternating_power_sum(&self, k: usize, n: u64) -> Result<ExactRational, BernoulliError> {
        if n == 0 {
            return Err(BernoulliError::LimitTooSmall(n));
        }
        let (even, odd) = self.parity_branch_polys(k)?;
        let at = ExactRational::from_integer(BigInt::from(n));
        Ok(if n.is_multiple_of(2) {
            even.eval(&at)
        } else {
            odd.eval(&at)
        })
    }
}

pub fn bernoulli_number(k: usize) -> ExactRational {
    BernoulliTable::global().number(k)
}

pub fn power_sum_poly(k: usize) -> ExactPolynomial {
    BernoulliTable::global().power_sum_poly(k)
}

pub fn alternating_power_sum(k: usize, n: u64) -> Result<ExactRational, BernoulliError> {
    BernoulliTable::global().alternating_power_sum(k, n)
}

pub fn parity_branch_polys(k: usize) -> Result<(ExactPolynomial, ExactPolynomial), BernoulliError> {
    BernoulliTable::global().parity_branch_polys(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    fn int(n: i64) -> ExactRational {
        rational(n, 1)
    }

    #[test]
    fn first_numbers() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rational(1, 2));
        assert_eq!(bernoulli_number(2), rational(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), rational(-1, 30));
        assert_eq!(bernoulli_number(6), rational(1, 42));
        assert_eq!(bernoulli_number(12), rational(-691, 2730));
    }

    #[test]
    fn classical_table_differs_only_at_one() {
        let classical = BernoulliTable::classical();
        assert_eq!(classical.number(1), rational(-1, 2));
        for k in (0..30).filter(|&k| k != 1) {
            assert_eq!(classical.number(k), bernoulli_number(k));
        }
    }

    #[test]
    fn pascal_rows() {
        let row = binomial_row(5);
        let expected: Vec<BigInt> = [1, 5, 10, 10, 5, 1]
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        assert_eq!(row, expected);
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_poly(0), ExactPolynomial::x());
        let triangular = power_sum_poly(1);
        assert_eq!(
            triangular,
            ExactPolynomial::new(vec![int(0), rational(1, 2), rational(1, 2)])
        );
        assert_eq!(triangular.eval(&int(4)), int(10));
        assert_eq!(power_sum_poly(2).eval(&int(3)), int(14));
    }

    #[test]
    fn alternating_sums() {
        assert_eq!(alternating_power_sum(1, 1).unwrap(), int(1));
        assert_eq!(alternating_power_sum(1, 2).unwrap(), int(0));
        assert_eq!(alternating_power_sum(2, 4).unwrap(), int(-2));
        assert_eq!(
            alternating_power_sum(0, 4),
            Err(BernoulliError::IndexTooSmall(0))
        );
        assert_eq!(
            alternating_power_sum(2, 0),
            Err(BernoulliError::LimitTooSmall(0))
        );
    }

    #[test]
    fn parity_branches() {
        let (even, odd) = parity_branch_polys(1).unwrap();
        assert!(even.is_zero());
        assert_eq!(odd, ExactPolynomial::one());
        let (even, odd) = parity_branch_polys(2).unwrap();
        assert_eq!(even.eval(&int(2)), int(-1));
        assert_eq!(odd.eval(&int(3)), int(2));
    }

    #[test]
    fn concurrent_readers_agree() {
        let table = BernoulliTable::new();
        let results: Vec<_> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4).map(|_| s.spawn(|| table.numbers(40))).collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(results.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(results[0][40], bernoulli_number(40));
    }
}
