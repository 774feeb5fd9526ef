//! Fixed-point decimal reals (`mantissa · 10^-scale`) and the transcendental
//! kernels (π, sin, cos) the numerical checks need.

mod precision;

pub use precision::{pi_big, Precision, GUARD_DIGITS};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid decimal literal `{0}`")]
pub struct ParseDecimalError(pub String);

/// Arbitrary-precision fixed-point decimal. The value is `mantissa · 10^-scale`.
///
/// Sums are exact. Products and quotients are rounded half-to-even to the
/// larger operand scale.
#[derive(Clone, Debug)]
pub struct BigDecimal {
    mantissa: BigInt,
    scale: u32,
}

pub(crate) fn pow10(n: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), n as usize)
}

/// `n / d` rounded half-to-even. `d` must be nonzero.
pub(crate) fn div_round_half_even(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() {
        (-n, -d)
    } else {
        (n.clone(), d.clone())
    };
    let (q, r) = n.div_mod_floor(&d);
    // r in [0, d)
    let twice: BigInt = &r << 1u32;
    match twice.cmp(&d) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

impl BigDecimal {
    pub fn new(mantissa: BigInt, scale: u32) -> Self {
        BigDecimal { mantissa, scale }
    }

    pub fn zero(scale: u32) -> Self {
        BigDecimal::new(BigInt::zero(), scale)
    }

    pub fn from_int(n: impl Into<BigInt>, scale: u32) -> Self {
        BigDecimal::new(n.into() * pow10(scale), scale)
    }

    /// `10^-n` held at `scale` (zero if `n > scale`).
    pub fn pow10_neg(n: u32, scale: u32) -> Self {
        if n > scale {
            return BigDecimal::zero(scale);
        }
        BigDecimal::new(pow10(scale - n), scale)
    }

    /// Nearest value at `scale`, ties to even.
    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        let n = r.numer() * pow10(scale);
        BigDecimal::new(div_round_half_even(&n, r.denom()), scale)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), pow10(self.scale)).expect("10^s > 0")
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Re-expresses at `scale`, rounding half-to-even when digits are dropped.
    pub fn rescale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => BigDecimal::new(&self.mantissa * pow10(scale - self.scale), scale),
            Ordering::Less => BigDecimal::new(
                div_round_half_even(&self.mantissa, &pow10(self.scale - scale)),
                scale,
            ),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        BigDecimal::new(self.mantissa.abs(), self.scale)
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Self {
        BigDecimal::new(&self.mantissa * k.into(), self.scale)
    }

    /// Division by an integer, rounded at the current scale.
    pub fn div_int(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        assert!(!k.is_zero(), "division of a decimal by zero");
        BigDecimal::new(div_round_half_even(&self.mantissa, &k), self.scale)
    }

    /// Quotient at the larger operand scale; `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &BigDecimal) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let scale = self.scale.max(rhs.scale);
        // (a/10^sa) / (b/10^sb) at scale s  =  a·10^(s+sb-sa) / b
        let shift = scale as i64 + rhs.scale as i64 - self.scale as i64;
        let n = &self.mantissa * pow10(shift as u32);
        Some(BigDecimal::new(
            div_round_half_even(&n, &rhs.mantissa),
            scale,
        ))
    }

    pub fn powi(&self, exp: u32) -> Self {
        let mut acc = BigDecimal::from_int(1, self.scale);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Scientific rendering with `sig` significant digits, e.g. `2.31e-29`.
    /// Zero renders as `0`.
    pub fn to_scientific(&self, sig: u32) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sig = sig.max(1);
        let digits = self.mantissa.abs().to_string();
        let len = digits.len() as i64;
        let mut exp = len - 1 - self.scale as i64;
        let mut kept = if len as u32 > sig {
            div_round_half_even(&self.mantissa.abs(), &pow10(len as u32 - sig))
        } else {
            self.mantissa.abs() * pow10(sig - len as u32)
        };
        if kept >= pow10(sig) {
            kept = div_round_half_even(&kept, &BigInt::from(10));
            exp += 1;
        }
        let s = kept.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        if s.len() == 1 {
            format!("{sign}{s}e{exp}")
        } else {
            format!("{sign}{}.{}e{exp}", &s[..1], &s[1..])
        }
    }

    fn aligned(&self, other: &BigDecimal) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let a = &self.mantissa * pow10(scale - self.scale);
        let b = &other.mantissa * pow10(scale - other.scale);
        (a, b, scale)
    }
}

impl PartialEq for BigDecimal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigDecimal {}

impl PartialOrd for BigDecimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigDecimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl Add for &BigDecimal {
    type Output = BigDecimal;
    fn add(self, rhs: &BigDecimal) -> BigDecimal {
        let (a, b, scale) = self.aligned(rhs);
        BigDecimal::new(a + b, scale)
    }
}

impl Sub for &BigDecimal {
    type Output = BigDecimal;
    fn sub(self, rhs: &BigDecimal) -> BigDecimal {
        let (a, b, scale) = self.aligned(rhs);
        BigDecimal::new(a - b, scale)
    }
}

impl Mul for &BigDecimal {
    type Output = BigDecimal;
    fn mul(self, rhs: &BigDecimal) -> BigDecimal {
        let scale = self.scale.max(rhs.scale);
        let raw = &self.mantissa * &rhs.mantissa;
        let drop = self.scale + rhs.scale - scale;
        BigDecimal::new(div_round_half_even(&raw, &pow10(drop)), scale)
    }
}

impl Add for BigDecimal {
    type Output = BigDecimal;
    fn add(self, rhs: BigDecimal) -> BigDecimal {
        &self + &rhs
    }
}

impl Sub for BigDecimal {
    type Output = BigDecimal;
    fn sub(self, rhs: BigDecimal) -> BigDecimal {
        &self - &rhs
    }
}

impl Mul for BigDecimal {
    type Output = BigDecimal;
    fn mul(self, rhs: BigDecimal) -> BigDecimal {
        &self * &rhs
    }
}

impl Neg for BigDecimal {
    type Output = BigDecimal;
    fn neg(self) -> BigDecimal {
        BigDecimal::new(-self.mantissa, self.scale)
    }
}

impl Neg for &BigDecimal {
    type Output = BigDecimal;
    fn neg(self) -> BigDecimal {
        BigDecimal::new(-&self.mantissa, self.scale)
    }
}

/// `-?digits.digits` with exactly `scale` fractional digits.
impl fmt::Display for BigDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.mantissa.abs().to_string();
        let sign = if self.mantissa.sign() == Sign::Minus {
            "-"
        } else {
            ""
        };
        let scale = self.scale as usize;
        if scale == 0 {
            return write!(f, "{sign}{digits}");
        }
        let padded = format!("{digits:0>width$}", width = scale + 1);
        let (int_part, frac_part) = padded.split_at(padded.len() - scale);
        write!(f, "{sign}{int_part}.{frac_part}")
    }
}

impl FromStr for BigDecimal {
    type Err = ParseDecimalError;

    /// Accepts `-12.5`, `3`, `1e-25`, `2.5E3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseDecimalError(s.to_string());
        let t = s.trim();
        let (body, exp) = match t.find(['e', 'E']) {
            Some(i) => (&t[..i], t[i + 1..].parse::<i64>().map_err(|_| bad())?),
            None => (t, 0),
        };
        let (neg, body) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part
            .chars()
            .chain(frac_part.chars())
            .all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let mut mantissa: BigInt = format!("{int_part}{frac_part}")
            .parse()
            .map_err(|_| bad())?;
        if neg {
            mantissa = -mantissa;
        }
        let scale = frac_part.len() as i64 - exp;
        if scale >= 0 {
            let scale = u32::try_from(scale).map_err(|_| bad())?;
            Ok(BigDecimal::new(mantissa, scale))
        } else {
            let up = u32::try_from(-scale).map_err(|_| bad())?;
            Ok(BigDecimal::new(mantissa * pow10(up), 0))
        }
    }
}

impl BigDecimal {
    pub fn one(scale: u32) -> Self {
        BigDecimal::from_int(BigInt::one(), scale)
    }

    pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a BigDecimal>, scale: u32) -> BigDecimal {
        values
            .into_iter()
            .map(BigDecimal::abs)
            .max()
            .unwrap_or_else(|| BigDecimal::zero(scale))
    }

    pub fn to_i64(&self) -> Option<i64> {
        (&self.mantissa / pow10(self.scale)).to_i64()
    }
}
