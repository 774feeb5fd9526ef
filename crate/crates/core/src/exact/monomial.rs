use std::fmt;
use std::str::FromStr;

use super::{ExactError, Rational};

/// An exact value `coeff · π^pi_power`.
///
/// Zero is canonical: a zero coefficient always carries `pi_power = 0`, so
/// derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiMonomial {
    coeff: Rational,
    pi_power: u32,
}

impl PiMonomial {
    /// Rejects negative powers of π.
    pub fn new(coeff: Rational, pi_power: i64) -> Result<Self, ExactError> {
        let power = u32::try_from(pi_power).map_err(|_| ExactError::NegativePiPower(pi_power))?;
        Ok(Self::with_power(coeff, power))
    }

    pub fn with_power(coeff: Rational, pi_power: u32) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            PiMonomial { coeff, pi_power }
        }
    }

    pub fn rational(coeff: Rational) -> Self {
        Self::with_power(coeff, 0)
    }

    pub fn zero() -> Self {
        PiMonomial {
            coeff: Rational::zero(),
            pi_power: 0,
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_power(&self) -> u32 {
        self.pi_power
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::with_power(&self.coeff * factor, self.pi_power)
    }

    pub fn mul(&self, other: &PiMonomial) -> Self {
        Self::with_power(&self.coeff * &other.coeff, self.pi_power + other.pi_power)
    }

    /// Divides by `π^k`. Fails if the result would carry a negative power.
    pub fn div_pi_power(&self, k: u32) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Self::new(self.coeff.clone(), i64::from(self.pi_power) - i64::from(k))
    }
}

/// Sums terms that share one π power. The empty sum is zero.
pub fn pi_monomial_combine(terms: &[PiMonomial]) -> Result<PiMonomial, ExactError> {
    let mut power: Option<u32> = None;
    let mut coeff = Rational::zero();
    for term in terms.iter().filter(|t| !t.is_zero()) {
        match power {
            Some(p) if p != term.pi_power => {
                return Err(ExactError::MixedPiPower(p, term.pi_power))
            }
            _ => power = Some(term.pi_power),
        }
        coeff = coeff + &term.coeff;
    }
    Ok(PiMonomial::with_power(coeff, power.unwrap_or(0)))
}

/// `<num>/<den> * pi^<k>`, with `pi^1` written `pi` and `k = 0` written as the
/// bare rational.
impl fmt::Display for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{} * pi", self.coeff),
            k => write!(f, "{} * pi^{}", self.coeff, k),
        }
    }
}

impl FromStr for PiMonomial {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse(s.to_string());
        let (coeff, pi) = match s.split_once(" * ") {
            Some((c, p)) => (c, Some(p)),
            None => (s, None),
        };
        let coeff: Rational = coeff.parse()?;
        let power = match pi {
            None => 0,
            Some("pi") => 1,
            Some(p) => {
                let k = p.strip_prefix("pi^").ok_or_else(bad)?;
                k.parse::<i64>().map_err(|_| bad())?
            }
        };
        PiMonomial::new(coeff, power)
    }
}
