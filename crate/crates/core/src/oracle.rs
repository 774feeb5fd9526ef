//! Numerical values of ζ, λ and β straight from their defining series, and
//! decimal rendering of exact π-monomials.
//!
//! The series side never touches Bernoulli or Euler numbers. All three
//! functions reduce to alternating series whose terms are moments of a
//! positive measure on [0, 1]:
//!
//! * β(s) = Σ_{k≥0} (−1)^k / (2k+1)^s
//! * η(s) = Σ_{k≥0} (−1)^k / (k+1)^s, with ζ(s) = η(s) / (1 − 2^{1−s})
//!   and λ(s) = (1 − 2^{−s}) ζ(s)
//!
//! and are summed with the Cohen–Rodriguez Villegas–Zagier acceleration. For
//! such series the n-term estimate is off by at most `a_0 / d_n`, where
//! `d_n = T_n(3) ≈ (3+√8)^n / 2` is an exact integer, so every estimate comes
//! with a rigorous bound.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::decimal::{div_round_half_even, pi_big, pow10, BigDecimal, Precision, GUARD_DIGITS};
use crate::exact::{PiMonomial, Rational};

/// A series value with a bound on its distance from the true sum.
#[derive(Debug, Clone)]
pub struct SeriesEstimate {
    /// At working scale (`digits + GUARD_DIGITS`).
    pub value: BigDecimal,
    /// Acceleration truncation bound plus accumulated rounding.
    pub error_bound: BigDecimal,
    pub terms_used: u64,
}

impl SeriesEstimate {
    /// The value rounded half-to-even to `digits` fractional digits.
    pub fn rounded(&self, digits: u32) -> BigDecimal {
        self.value.rescale(digits)
    }
}

/// π to `digits` fractional digits.
pub fn pi_decimal(digits: u32) -> BigDecimal {
    pi_big(digits)
}

/// `coeff · π^k` rounded half-to-even to `digits` fractional digits.
///
/// π is taken with enough extra digits that its error cannot reach the last
/// output digit, then the product is rounded once, exactly.
pub fn render_decimal(v: &PiMonomial, digits: u32) -> BigDecimal {
    if v.is_zero() {
        return BigDecimal::zero(digits);
    }
    let k = v.pi_power();
    let coeff = v.coeff();
    let coeff_digits = coeff.numer().abs().to_string().len() as u32;
    let work = digits + GUARD_DIGITS + k / 2 + coeff_digits + 2;
    let pi = Precision::with_guard(work, 0).pi().rescale(work);
    let pi_k = num_traits::pow(pi.mantissa().clone(), k as usize);
    let num = coeff.numer() * pi_k * pow10(digits);
    let den = coeff.denom() * pow10(work * k);
    BigDecimal::new(div_round_half_even(&num, &den), digits)
}

/// `T_n(3)` for the smallest n with `T_n(3) >= target`, and that n.
fn chebyshev_terms_for(target: &BigInt) -> (u64, BigInt) {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::from(3));
    let mut n = 1;
    while &cur < target {
        let next = &cur * 6 - &prev;
        prev = cur;
        cur = next;
        n += 1;
    }
    (n, cur)
}

fn chebyshev_t3(n: u64) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::from(3));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur * 6 - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Σ_{k≥0} (−1)^k / denom(k) accelerated with `n` terms, at `scale`.
///
/// Returns the estimate and `d_n`. The rounding error of the fixed-point
/// accumulation is below `(n + 1) · 10^-scale`.
fn accelerated_alternating_sum(
    n: u64,
    scale: u32,
    denom: impl Fn(u64) -> BigInt,
) -> (BigDecimal, BigInt) {
    let d = chebyshev_t3(n);
    let unit = pow10(scale);
    let n_r = Rational::from(n as i64);
    let mut b = -Rational::one();
    let mut c = Rational::from_integer(-d.clone());
    let mut acc = BigInt::zero();
    for k in 0..n {
        c = &b - &c;
        debug_assert!(c.is_integer());
        acc += div_round_half_even(&(c.numer() * &unit), &denom(k));
        let k_r = Rational::from(k as i64);
        let num = Rational::from(2) * (&k_r + &n_r) * (&k_r - &n_r) * &b;
        let den = Rational::from(2 * k as i64 + 1) * (k_r + Rational::one());
        b = num.checked_div(&den).expect("positive denominator");
    }
    (BigDecimal::new(div_round_half_even(&acc, &d), scale), d)
}

fn estimate(
    digits: u32,
    leading: &Rational,
    target_factor: u32,
    denom: impl Fn(u64) -> BigInt,
) -> (BigDecimal, BigDecimal, u64) {
    let scale = digits + GUARD_DIGITS;
    // d_n >= target_factor·10^digits keeps the truncation under 10^-digits / target_factor
    let target = BigInt::from(target_factor) * pow10(digits);
    let (n, _) = chebyshev_terms_for(&target);
    estimate_with_terms(n, scale, leading, denom)
}

fn estimate_with_terms(
    n: u64,
    scale: u32,
    leading: &Rational,
    denom: impl Fn(u64) -> BigInt,
) -> (BigDecimal, BigDecimal, u64) {
    let (raw, d) = accelerated_alternating_sum(n, scale, denom);
    let truncation = Rational::new(1, d).expect("d_n > 0");
    let rounding = Rational::new(n as i64 + 2, pow10(scale)).expect("nonzero");
    let ulp = BigDecimal::pow10_neg(scale, scale);
    let value = &raw * &BigDecimal::from_rational(leading, scale);
    let bound = (truncation + rounding) * leading.abs();
    // one ulp for the final product, one for rounding the bound itself
    let bound = &(&BigDecimal::from_rational(&bound, scale) + &ulp) + &ulp;
    (value, bound, n)
}

fn odd_power(s: u32) -> impl Fn(u64) -> BigInt {
    move |k| num_traits::pow(BigInt::from(2 * k + 1), s as usize)
}

fn natural_power(s: u32) -> impl Fn(u64) -> BigInt {
    move |k| num_traits::pow(BigInt::from(k + 1), s as usize)
}

/// β(s) = Σ (−1)^{n−1} / (2n−1)^s for `s >= 1`; the bound is at most
/// `10^-digits`.
pub fn beta_series(s: u32, digits: u32) -> SeriesEstimate {
    assert!(s >= 1, "beta_series needs s >= 1");
    let (value, error_bound, terms_used) = estimate(digits, &Rational::one(), 4, odd_power(s));
    SeriesEstimate {
        value,
        error_bound,
        terms_used,
    }
}

/// β(s) with exactly `terms` accelerated terms, at working scale for `digits`.
pub fn beta_series_with_terms(s: u32, terms: u64, digits: u32) -> SeriesEstimate {
    let (value, error_bound, terms_used) =
        estimate_with_terms(terms, digits + GUARD_DIGITS, &Rational::one(), odd_power(s));
    SeriesEstimate {
        value,
        error_bound,
        terms_used,
    }
}

fn zeta_from_eta_factor(s: u32) -> Rational {
    // 1 / (1 − 2^{1−s})
    let p = Rational::power_of_two(s - 1);
    p.checked_div(&(&p - &Rational::one())).expect("s >= 2")
}

fn lambda_from_eta_factor(s: u32) -> Rational {
    // (1 − 2^{−s}) / (1 − 2^{1−s}) = (2^s − 1) / (2^s − 2)
    let p = Rational::power_of_two(s);
    (&p - &Rational::one())
        .checked_div(&(&p - &Rational::from(2)))
        .expect("s >= 2")
}

/// ζ(s) = Σ 1/n^s for `s >= 2`, through the alternating η series.
pub fn zeta_series(s: u32, digits: u32) -> SeriesEstimate {
    assert!(s >= 2, "zeta_series needs s >= 2");
    let (value, error_bound, terms_used) =
        estimate(digits, &zeta_from_eta_factor(s), 8, natural_power(s));
    SeriesEstimate {
        value,
        error_bound,
        terms_used,
    }
}

pub fn zeta_series_with_terms(s: u32, terms: u64, digits: u32) -> SeriesEstimate {
    let (value, error_bound, terms_used) = estimate_with_terms(
        terms,
        digits + GUARD_DIGITS,
        &zeta_from_eta_factor(s),
        natural_power(s),
    );
    SeriesEstimate {
        value,
        error_bound,
        terms_used,
    }
}

/// λ(s) = Σ 1/(2n−1)^s for `s >= 2`, through the alternating η series.
pub fn lambda_series(s: u32, digits: u32) -> SeriesEstimate {
    assert!(s >= 2, "lambda_series needs s >= 2");
    let (value, error_bound, terms_used) =
        estimate(digits, &lambda_from_eta_factor(s), 8, natural_power(s));
    SeriesEstimate {
        value,
        error_bound,
        terms_used,
    }
}

/// Partial sum Σ_{n=1}^{terms} 1/n^s with the integral-test tail bound
/// `terms^{1−s} / (s − 1)`. Only useful at low precision.
pub fn zeta_direct(s: u32, terms: u64, digits: u32) -> SeriesEstimate {
    assert!(s >= 2 && terms >= 1);
    let scale = digits + GUARD_DIGITS;
    let unit = pow10(scale);
    let acc: BigInt = (1..=terms)
        .map(|n| div_round_half_even(&unit, &num_traits::pow(BigInt::from(n), s as usize)))
        .sum();
    let tail = Rational::new(
        1,
        num_traits::pow(BigInt::from(terms), s as usize - 1) * (s - 1),
    )
    .expect("nonzero");
    let rounding = Rational::new(terms as i64, pow10(scale)).expect("nonzero");
    SeriesEstimate {
        value: BigDecimal::new(acc, scale),
        error_bound: BigDecimal::from_rational(&(tail + rounding), scale)
            + BigDecimal::pow10_neg(scale, scale),
        terms_used: terms,
    }
}
