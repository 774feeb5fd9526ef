//! Bernoulli and Euler numbers as exact rationals.
//!
//! Both tables come from their own classical recurrences, neither of which
//! involves the other table. That keeps the half-argument Bernoulli polynomial
//! identity and the Euler-from-Bernoulli formula honest cross-checks.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact::{binomial, Rational};

/// Default largest index held by a table.
pub const DEFAULT_TABLE_MAX: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("index {requested} exceeds table capacity {capacity}")]
pub struct CapacityError {
    pub requested: usize,
    pub capacity: usize,
}

/// Dense `B_0..=B_max` with `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Fills the table from `Σ_{k=0}^{m} C(m+1, k) B_k = 0` for `m >= 1`.
    pub fn new(max_index: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(max_index + 1);
        values.push(Rational::one());
        for m in 1..=max_index {
            // Pascal row m+1, walked incrementally: C(m+1, k+1) = C(m+1, k)·(m+1-k)/(k+1)
            let mut c = BigInt::one();
            let mut acc = Rational::zero();
            for (k, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc = acc + b * &Rational::from_integer(c.clone());
                }
                c = c * (m + 1 - k) / (k + 1);
            }
            let denom = Rational::from(m as i64 + 1);
            values.push(-acc.checked_div(&denom).expect("m + 1 > 0"));
        }
        BernoulliTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational, CapacityError> {
        self.values.get(n).ok_or(CapacityError {
            requested: n,
            capacity: self.max_index(),
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// Dense `E_0..=E_max`; odd entries are zero.
#[derive(Debug, Clone)]
pub struct EulerTable {
    values: Vec<Rational>,
}

impl EulerTable {
    /// Secant recurrence `Σ_{j=0}^{n} C(2n, 2j) E_{2j} = 0` for `n >= 1`.
    pub fn new(max_index: usize) -> Self {
        let mut values = vec![Rational::zero(); max_index + 1];
        values[0] = Rational::one();
        for n in 1..=max_index / 2 {
            let two_n = 2 * n as u64;
            let acc: Rational = (0..n)
                .map(|j| binomial(two_n, 2 * j as u64) * &values[2 * j])
                .sum();
            values[2 * n] = -acc;
        }
        EulerTable { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&Rational, CapacityError> {
        self.values.get(n).ok_or(CapacityError {
            requested: n,
            capacity: self.max_index(),
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

pub fn bernoulli(n: usize, table: &BernoulliTable) -> Result<Rational, CapacityError> {
    table.get(n).cloned()
}

/// `B_n(x) = Σ_{k=0}^{n} C(n, k) B_k x^{n-k}`.
pub fn bernoulli_poly(
    n: usize,
    x: &Rational,
    table: &BernoulliTable,
) -> Result<Rational, CapacityError> {
    table.get(n)?;
    let mut sum = Rational::zero();
    let mut x_pow = Rational::one();
    for k in (0..=n).rev() {
        let b = &table.values[k];
        if !b.is_zero() {
            sum = sum + binomial(n as u64, k as u64) * b * &x_pow;
        }
        x_pow = x_pow * x;
    }
    Ok(sum)
}

pub fn euler_number(n: usize, table: &EulerTable) -> Result<Rational, CapacityError> {
    table.get(n).cloned()
}

/// `E_{2l} = 1 - (1/(2l+1)) Σ_{j=1}^{l} C(2l+1, 2j) 2^{2j} (2^{2j} - 1) B_{2j}`.
pub fn euler_from_bernoulli(l: usize, btable: &BernoulliTable) -> Result<Rational, CapacityError> {
    btable.get(2 * l)?;
    let n = 2 * l as u64 + 1;
    let sum: Rational = (1..=l)
        .map(|j| {
            let p = Rational::power_of_two(2 * j as u32);
            binomial(n, 2 * j as u64) * &p * (&p - &Rational::one()) * &btable.values[2 * j]
        })
        .sum();
    let scaled = sum
        .checked_div(&Rational::from(n as i64))
        .expect("2l + 1 > 0");
    Ok(Rational::one() - scaled)
}
