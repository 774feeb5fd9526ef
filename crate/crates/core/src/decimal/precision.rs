use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{div_round_half_even, pow10, BigDecimal};

/// Extra decimal digits carried beyond the requested output precision.
pub const GUARD_DIGITS: u32 = 10;

/// Extra binary digits inside the transcendental kernels, on top of the
/// working scale. Covers argument reduction of angles up to ~2^40.
const KERNEL_GUARD_BITS: u64 = 64;

/// A working precision: `digits` requested, `digits + GUARD_DIGITS` carried.
///
/// Holds π at the working scale and a binary fixed-point copy for the
/// sin/cos kernels, so constructing one costs a single π evaluation.
#[derive(Clone, Debug)]
pub struct Precision {
    digits: u32,
    scale: u32,
    bits: u64,
    pi_bin: BigInt,
    pi: BigDecimal,
}

impl Precision {
    pub fn new(digits: u32) -> Self {
        Self::with_guard(digits, GUARD_DIGITS)
    }

    pub fn with_guard(digits: u32, guard: u32) -> Self {
        let scale = digits + guard;
        let bits =
            (f64::from(scale + 2) * std::f64::consts::LOG2_10).ceil() as u64 + KERNEL_GUARD_BITS;
        let pi_bin = machin_pi_bits(bits);
        let pi = bin_to_dec(&pi_bin, bits, scale);
        Precision {
            digits,
            scale,
            bits,
            pi_bin,
            pi,
        }
    }

    /// Requested output digits.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    /// Working scale, `digits + guard`.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn pi(&self) -> &BigDecimal {
        &self.pi
    }

    pub fn half_pi(&self) -> BigDecimal {
        bin_to_dec(&(&self.pi_bin >> 1u32), self.bits, self.scale)
    }

    pub fn int(&self, n: impl Into<BigInt>) -> BigDecimal {
        BigDecimal::from_int(n, self.scale)
    }

    pub fn zero(&self) -> BigDecimal {
        BigDecimal::zero(self.scale)
    }

    /// `10^-(digits - guard)`: the resolution below which results at this
    /// precision carry no information.
    pub fn roundoff_tolerance(&self) -> BigDecimal {
        BigDecimal::pow10_neg(self.digits.saturating_sub(GUARD_DIGITS), self.scale)
    }

    pub fn from_f64(&self, x: f64) -> BigDecimal {
        let r = num_rational::BigRational::from_float(x).expect("finite input");
        BigDecimal::from_rational(&crate::exact::Rational::from_ratio(r), self.scale)
    }

    pub fn sin(&self, x: &BigDecimal) -> BigDecimal {
        let (q, r) = self.reduce(x);
        let v = match q {
            0 => self.taylor_sin(&r),
            1 => self.taylor_cos(&r),
            2 => -self.taylor_sin(&r),
            _ => -self.taylor_cos(&r),
        };
        bin_to_dec(&v, self.bits, self.scale)
    }

    pub fn cos(&self, x: &BigDecimal) -> BigDecimal {
        let (q, r) = self.reduce(x);
        let v = match q {
            0 => self.taylor_cos(&r),
            1 => -self.taylor_sin(&r),
            2 => -self.taylor_cos(&r),
            _ => self.taylor_sin(&r),
        };
        bin_to_dec(&v, self.bits, self.scale)
    }

    /// `x = q·π/2 + r` with `|r| <= π/4`; returns `(q mod 4, r)` with `r` in
    /// binary fixed point.
    fn reduce(&self, x: &BigDecimal) -> (u8, BigInt) {
        let xb = dec_to_bin(x, self.bits);
        let half_pi = &self.pi_bin >> 1u32;
        let q = (&xb + (&half_pi >> 1u32)).div_floor(&half_pi);
        let r = xb - &q * &half_pi;
        let q4 = q
            .mod_floor(&BigInt::from(4))
            .to_u8()
            .expect("residue in 0..4");
        (q4, r)
    }

    fn taylor_sin(&self, r: &BigInt) -> BigInt {
        let neg = r.is_negative();
        let a = r.abs();
        let a2 = (&a * &a) >> self.bits;
        let mut term = a.clone();
        let mut sum = a;
        let mut n: u64 = 1;
        loop {
            term = ((term * &a2) >> self.bits) / ((2 * n) * (2 * n + 1));
            if term.is_zero() {
                break;
            }
            if n % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            n += 1;
        }
        if neg {
            -sum
        } else {
            sum
        }
    }

    fn taylor_cos(&self, r: &BigInt) -> BigInt {
        let a = r.abs();
        let a2 = (&a * &a) >> self.bits;
        let mut term = BigInt::one() << self.bits;
        let mut sum = term.clone();
        let mut n: u64 = 1;
        loop {
            term = ((term * &a2) >> self.bits) / ((2 * n - 1) * (2 * n));
            if term.is_zero() {
                break;
            }
            if n % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            n += 1;
        }
        sum
    }
}

/// π rounded half-to-even to `digits` fractional digits.
pub fn pi_big(digits: u32) -> BigDecimal {
    Precision::new(digits).pi().rescale(digits)
}

fn dec_to_bin(x: &BigDecimal, bits: u64) -> BigInt {
    let n = x.mantissa() << bits;
    div_round_half_even(&n, &pow10(x.scale()))
}

fn bin_to_dec(v: &BigInt, bits: u64, scale: u32) -> BigDecimal {
    let n = v * pow10(scale);
    BigDecimal::new(div_round_half_even(&n, &(BigInt::one() << bits)), scale)
}

/// π·2^bits via π = 16·atan(1/5) − 4·atan(1/239).
fn machin_pi_bits(bits: u64) -> BigInt {
    const EXTRA: u64 = 32;
    let b = bits + EXTRA;
    let pi = 16 * atan_inv(5, b) - 4 * atan_inv(239, b);
    div_round_half_even(&pi, &(BigInt::one() << EXTRA))
}

/// atan(1/m)·2^bits by its Taylor series.
fn atan_inv(m: u64, bits: u64) -> BigInt {
    let m2 = BigInt::from(m * m);
    let mut power = (BigInt::one() << bits) / m;
    let mut sum = power.clone();
    let mut n: u64 = 1;
    loop {
        power /= &m2;
        let term = &power / (2 * n + 1);
        if term.is_zero() {
            break;
        }
        if n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        n += 1;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    // rounded; the next digits are ...4459230781
    const PI_60: &str = "3.141592653589793238462643383279502884197169399375105820974945";

    #[test]
    fn pi_prefixes() {
        assert_eq!(pi_big(6).to_string(), "3.141593");
        let p6 = pi_big(6);
        assert!(p6 > "3.14159".parse().unwrap() && p6 < "3.14160".parse().unwrap());
        // prefix-stable up to the final rounded digit
        let p30 = pi_big(30);
        let p50 = pi_big(50);
        assert_eq!(p50.rescale(30), p30);
        assert_eq!(p30.to_string()[..27], p50.to_string()[..27]);
        assert_eq!(pi_big(60).to_string(), PI_60);
    }

    #[test]
    fn sin_cos_against_f64() {
        let p = Precision::new(30);
        for &x in &[
            0.0,
            0.3,
            -0.7,
            1.0,
            1.5,
            2.5,
            -3.9,
            10.0,
            1234.5678,
            -98765.4321,
        ] {
            let bx = p.from_f64(x);
            let s = p.sin(&bx).to_f64();
            let c = p.cos(&bx).to_f64();
            assert!((s - x.sin()).abs() < 1e-12, "sin({x})");
            assert!((c - x.cos()).abs() < 1e-12, "cos({x})");
        }
    }

    #[test]
    fn pythagorean_identity_at_full_precision() {
        let p = Precision::new(40);
        let tol = BigDecimal::pow10_neg(p.scale() - 3, p.scale());
        for k in 0..50 {
            let x = p.int(k).div_int(7) * p.int(13);
            let s = p.sin(&x);
            let c = p.cos(&x);
            let one = &(&s * &s) + &(&c * &c);
            assert!((&one - &p.int(1)).abs() <= tol, "x = {x}");
        }
    }

    #[test]
    fn special_angles() {
        let p = Precision::new(30);
        let tol = BigDecimal::pow10_neg(p.scale() - 2, p.scale());
        let half_pi = p.half_pi();
        assert!((&p.sin(&half_pi) - &p.int(1)).abs() <= tol);
        assert!(p.cos(&half_pi).abs() <= tol);
        assert!(p.sin(p.pi()).abs() <= tol);
        let sixth = p.pi().div_int(6);
        let half =
            BigDecimal::from_rational(&crate::exact::Rational::new(1, 2).unwrap(), p.scale());
        assert!((&p.sin(&sixth) - &half).abs() <= tol);
        // large arguments reduce correctly
        let big = p.pi().mul_int(20001);
        assert!(p.sin(&big).abs() <= BigDecimal::pow10_neg(p.scale() - 6, p.scale()));
    }
}
