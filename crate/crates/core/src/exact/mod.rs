//! Exact scalars: reduced rationals and values of the form `(p/q)·π^k`.
//!
//! Everything here is bit-exact; equality is structural.

mod monomial;
mod rational;

pub use monomial::{pi_monomial_combine, PiMonomial};
pub use rational::{rational_arith, ArithOp, Rational};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative power of pi ({0}) is not representable")]
    NegativePiPower(i64),
    #[error("cannot combine terms with pi powers {0} and {1}")]
    MixedPiPower(u32, u32),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
///
/// Descending product `∏ (n-i)/(i+1)`; every partial product is itself a
/// binomial coefficient so each division is exact.
pub fn binomial(n: u64, k: u64) -> Rational {
    Rational::from_integer(binomial_int(n, k))
}

pub(crate) fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `Γ(m) = (m-1)!` for a positive integer `m`.
pub fn gamma_int(m: u64) -> Rational {
    assert!(m >= 1, "gamma_int is only defined for positive integers");
    Rational::from_integer(factorial(m - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Pascal's triangle, built by addition only.
    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(3, 2), Rational::from(3));
        assert_eq!(binomial(4, 2), Rational::from(6));
        assert_eq!(binomial(5, 9), Rational::zero());
        assert_eq!(binomial(0, 0), Rational::one());
    }

    #[test]
    fn binomial_matches_pascal() {
        for n in [0usize, 1, 7, 40, 121] {
            let row = pascal_row(n);
            for (k, c) in row.iter().enumerate() {
                assert_eq!(&binomial_int(n as u64, k as u64), c, "C({n},{k})");
            }
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(gamma_int(1), Rational::one());
        assert_eq!(gamma_int(5), Rational::from(24));
    }

    proptest! {
        #[test]
        fn binomial_symmetry(n in 0u64..=200, k_frac in 0.0f64..=1.0) {
            let k = ((n as f64) * k_frac).round() as u64;
            prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        }
    }
}
