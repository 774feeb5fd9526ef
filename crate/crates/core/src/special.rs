//! Closed forms for ζ(2n), λ(2n) and β(2l−1).
//!
//! Every formula is its own method and they share nothing but the exact
//! scalars and the number tables, so a disagreement between two routes points
//! at one formula.
//!
//! | route | value |
//! |---|---|
//! | [`Route::ZetaBernoulli`] | ζ(2n) = 2^{2n−1}(−1)^{n−1} B_{2n} π^{2n} / (2n)! |
//! | [`Route::ZetaRecurrence`] | ζ(2l) from ζ(2), …, ζ(2l−2) |
//! | [`Route::LambdaFromZeta`] | λ(2n) = (1 − 2^{−2n}) ζ(2n) |
//! | [`Route::BetaEuler`] | β(2n+1) = (−1)^n E_{2n} (π/2)^{2n+1} / (2·(2n)!) |
//! | [`Route::BetaLambdaSum`] | β(2l−1) as a finite sum over λ(2j) |
//! | [`Route::BetaZetaSum`] | β(2l−1) as a finite sum over (2^{2j}−1) ζ(2j) |
//! | [`Route::BetaBernoulliSum`] | β(2l−1) as a finite sum over B_{2j} |

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::{factorial, gamma_int, pi_monomial_combine, PiMonomial, Rational};
use crate::tables::{BernoulliTable, CapacityError, EulerTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialError {
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error("{0}")]
    InvalidArgument(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Function {
    Zeta,
    Lambda,
    Beta,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::Zeta => "zeta",
            Function::Lambda => "lambda",
            Function::Beta => "beta",
        }
    }

    /// Whether a closed form exists at `argument`: odd for β, even for ζ and λ.
    pub fn has_closed_form(self, argument: u32) -> bool {
        match self {
            Function::Beta => argument % 2 == 1,
            Function::Zeta | Function::Lambda => argument >= 2 && argument.is_multiple_of(2),
        }
    }

    /// The `argument` of the `order`-th closed form: β(2·order−1), ζ(2·order).
    pub fn argument_of_order(self, order: u32) -> u32 {
        match self {
            Function::Beta => 2 * order - 1,
            Function::Zeta | Function::Lambda => 2 * order,
        }
    }
}

impl fmt::Display for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Function {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "zeta" => Ok(Function::Zeta),
            "lambda" => Ok(Function::Lambda),
            "beta" => Ok(Function::Beta),
            other => Err(format!(
                "unknown function `{other}` (expected beta, zeta or lambda)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    ZetaBernoulli,
    ZetaRecurrence,
    LambdaFromZeta,
    BetaEuler,
    BetaLambdaSum,
    BetaZetaSum,
    BetaBernoulliSum,
}

/// A special value `function(argument) = value`, tagged with the formula
/// that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValue {
    pub function: Function,
    pub argument: u32,
    pub value: PiMonomial,
    pub route: Route,
}

pub type ZetaEvenValue = SpecialValue;
pub type LambdaEvenValue = SpecialValue;
pub type BetaOddValue = SpecialValue;

fn two_pow(n: u32) -> Rational {
    Rational::power_of_two(n)
}

fn sign(n: i64) -> Rational {
    Rational::sign_power(n)
}

fn inv_gamma(m: u64) -> Rational {
    gamma_int(m).recip().expect("Γ(m) > 0")
}

fn inv_factorial(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
        .recip()
        .expect("n! > 0")
}

fn require_positive(what: &str, n: u32) -> Result<(), SpecialError> {
    if n == 0 {
        Err(SpecialError::InvalidArgument(format!(
            "{what} must be a positive integer"
        )))
    } else {
        Ok(())
    }
}

/// Owns the Bernoulli and Euler tables and evaluates every closed form.
#[derive(Debug, Clone)]
pub struct Evaluator {
    bernoulli: BernoulliTable,
    euler: EulerTable,
}

impl Evaluator {
    /// Tables populated through index `max_index`.
    pub fn new(max_index: usize) -> Self {
        Evaluator {
            bernoulli: BernoulliTable::new(max_index),
            euler: EulerTable::new(max_index),
        }
    }

    pub fn bernoulli_table(&self) -> &BernoulliTable {
        &self.bernoulli
    }

    pub fn euler_table(&self) -> &EulerTable {
        &self.euler
    }

    /// Largest table index the default route for `function(argument)` reads.
    pub fn required_index(function: Function, argument: u32) -> usize {
        match function {
            // λ(2j) for j < l, hence B_{2l-2} = B_{argument-1}
            Function::Beta => argument.saturating_sub(1) as usize,
            Function::Zeta | Function::Lambda => argument as usize,
        }
    }

    /// The default route per function: the λ-sum for β, Bernoulli for ζ.
    pub fn evaluate(
        &self,
        function: Function,
        argument: u32,
    ) -> Result<SpecialValue, SpecialError> {
        if !function.has_closed_form(argument) {
            return Err(SpecialError::InvalidArgument(format!(
                "{function}({argument}) has no closed form here"
            )));
        }
        match function {
            Function::Beta => self.beta_odd_lambda(argument.div_ceil(2)),
            Function::Zeta => self.zeta_even_bernoulli(argument / 2),
            Function::Lambda => self.lambda_even(argument / 2),
        }
    }

    /// ζ(2n) = 2^{2n−1} (−1)^{n−1} B_{2n} π^{2n} / (2n)!.
    pub fn zeta_even_bernoulli(&self, n: u32) -> Result<ZetaEvenValue, SpecialError> {
        require_positive("n", n)?;
        let b = self.bernoulli.get(2 * n as usize)?;
        let coeff =
            two_pow(2 * n - 1) * sign(i64::from(n) - 1) * b * inv_factorial(2 * u64::from(n));
        Ok(SpecialValue {
            function: Function::Zeta,
            argument: 2 * n,
            value: PiMonomial::with_power(coeff, 2 * n),
            route: Route::ZetaBernoulli,
        })
    }

    /// ζ(2l) by the recurrence
    ///
    /// ζ(2l) = 2^{2l−1}/(1 − 2^{2l}) · { [(−1)^{l+1}/(4l) + (−1)^l/2] π^{2l}/Γ(2l)
    ///          + Σ_{j=1}^{l−1} (−1)^{l−j} π^{2(l−j)} ζ(2j) / Γ(2(l−j)+1) }.
    ///
    /// Lower values are computed bottom-up once; no Bernoulli numbers are used.
    pub fn zeta_even_recurrence(&self, l: u32) -> Result<ZetaEvenValue, SpecialError> {
        require_positive("l", l)?;
        let values = zeta_recurrence_upto(l);
        Ok(SpecialValue {
            function: Function::Zeta,
            argument: 2 * l,
            value: values.into_iter().last().expect("l >= 1"),
            route: Route::ZetaRecurrence,
        })
    }

    /// λ(2n) = (2^{2n} − 1)/2^{2n} · ζ(2n), with ζ from Bernoulli numbers.
    pub fn lambda_even(&self, n: u32) -> Result<LambdaEvenValue, SpecialError> {
        let zeta = self.zeta_even_bernoulli(n)?;
        let p = two_pow(2 * n);
        let factor = (&p - &Rational::one()).checked_div(&p).expect("2^{2n} > 0");
        Ok(SpecialValue {
            function: Function::Lambda,
            argument: 2 * n,
            value: zeta.value.scale(&factor),
            route: Route::LambdaFromZeta,
        })
    }

    /// β(2n+1) = (−1)^n E_{2n} / (2·(2n)!) · (π/2)^{2n+1}.
    pub fn beta_odd_euler(&self, n: u32) -> Result<BetaOddValue, SpecialError> {
        let e = self.euler.get(2 * n as usize)?;
        let coeff = sign(i64::from(n))
            * e
            * inv_factorial(2 * u64::from(n))
            * Rational::new(1, 2).expect("2 != 0")
            * two_pow(2 * n + 1).recip().expect("nonzero");
        Ok(SpecialValue {
            function: Function::Beta,
            argument: 2 * n + 1,
            value: PiMonomial::with_power(coeff, 2 * n + 1),
            route: Route::BetaEuler,
        })
    }

    /// β(2l−1) = (−1)^{l+1} π^{2l−1} / 2^{2l} · [1/Γ(2l−1)
    ///           + 2 Σ_{j=1}^{l−1} (−1)^j 2^{2j} λ(2j) / (Γ(2l−2j) π^{2j})].
    pub fn beta_odd_lambda(&self, l: u32) -> Result<BetaOddValue, SpecialError> {
        require_positive("l", l)?;
        let mut terms = vec![PiMonomial::rational(inv_gamma(2 * u64::from(l) - 1))];
        for j in 1..l {
            let lambda = self
                .lambda_even(j)?
                .value
                .div_pi_power(2 * j)
                .expect("λ(2j) carries π^{2j}");
            let factor = Rational::from(2)
                * sign(i64::from(j))
                * two_pow(2 * j)
                * inv_gamma(u64::from(2 * l - 2 * j));
            terms.push(lambda.scale(&factor));
        }
        Ok(beta_from_bracket(l, &terms, Route::BetaLambdaSum))
    }

    /// β(2l−1) = (−1)^{l+1} π^{2l−1} / 2^{2l} · [1/Γ(2l−1)
    ///           + 2 Σ_{j=1}^{l−1} (−1)^j (2^{2j} − 1) ζ(2j) / (Γ(2l−2j) π^{2j})].
    pub fn beta_odd_zeta(&self, l: u32) -> Result<BetaOddValue, SpecialError> {
        require_positive("l", l)?;
        let mut terms = vec![PiMonomial::rational(inv_gamma(2 * u64::from(l) - 1))];
        for j in 1..l {
            let zeta = self
                .zeta_even_bernoulli(j)?
                .value
                .div_pi_power(2 * j)
                .expect("ζ(2j) carries π^{2j}");
            let factor = Rational::from(2)
                * sign(i64::from(j))
                * (two_pow(2 * j) - Rational::one())
                * inv_gamma(u64::from(2 * l - 2 * j));
            terms.push(zeta.scale(&factor));
        }
        Ok(beta_from_bracket(l, &terms, Route::BetaZetaSum))
    }

    /// β(2l−1) = (−1)^{l+1} π^{2l−1} / 2^{2l} · [1/Γ(2l−1)
    ///           − Σ_{j=1}^{l−1} 2^{2j} (2^{2j} − 1) B_{2j} / (Γ(2l−2j) Γ(2j+1))].
    pub fn beta_odd_bernoulli(&self, l: u32) -> Result<BetaOddValue, SpecialError> {
        require_positive("l", l)?;
        let mut terms = vec![PiMonomial::rational(inv_gamma(2 * u64::from(l) - 1))];
        for j in 1..l {
            let b = self.bernoulli.get(2 * j as usize)?;
            let p = two_pow(2 * j);
            let coeff = -(&p
                * &(&p - &Rational::one())
                * b
                * inv_gamma(u64::from(2 * l - 2 * j))
                * inv_gamma(u64::from(2 * j + 1)));
            terms.push(PiMonomial::rational(coeff));
        }
        Ok(beta_from_bracket(l, &terms, Route::BetaBernoulliSum))
    }
}

/// Applies the common prefactor (−1)^{l+1} π^{2l−1} / 2^{2l} to a bracket of
/// pure rationals.
fn beta_from_bracket(l: u32, terms: &[PiMonomial], route: Route) -> BetaOddValue {
    let bracket = pi_monomial_combine(terms).expect("bracket terms are pure rationals");
    let prefactor = PiMonomial::with_power(
        sign(i64::from(l) + 1) * two_pow(2 * l).recip().expect("nonzero"),
        2 * l - 1,
    );
    SpecialValue {
        function: Function::Beta,
        argument: 2 * l - 1,
        value: prefactor.mul(&bracket),
        route,
    }
}

/// ζ(2), ζ(4), …, ζ(2l) by the recurrence, each computed once.
pub fn zeta_recurrence_upto(l: u32) -> Vec<PiMonomial> {
    let mut values: Vec<PiMonomial> = Vec::with_capacity(l as usize);
    for i in 1..=l {
        let i64_i = i64::from(i);
        let p = two_pow(2 * i);
        let pre = two_pow(2 * i - 1)
            .checked_div(&(Rational::one() - &p))
            .expect("1 - 2^{2i} != 0");
        let head = (sign(i64_i + 1) * Rational::new(1, 4 * i64_i).expect("i > 0")
            + sign(i64_i) * Rational::new(1, 2).expect("2 != 0"))
            * inv_gamma(2 * u64::from(i));
        let mut terms = vec![PiMonomial::with_power(head, 2 * i)];
        for j in 1..i {
            let weight = PiMonomial::with_power(
                sign(i64_i - i64::from(j)) * inv_gamma(2 * u64::from(i - j) + 1),
                2 * (i - j),
            );
            terms.push(weight.mul(&values[j as usize - 1]));
        }
        let braced = pi_monomial_combine(&terms).expect("every term carries π^{2i}");
        values.push(braced.scale(&pre));
    }
    values
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(n: i64, d: i64, k: u32) -> PiMonomial {
        PiMonomial::with_power(Rational::new(n, d).unwrap(), k)
    }

    fn ev() -> Evaluator {
        Evaluator::new(120)
    }

    #[test]
    fn zeta_bernoulli_examples() {
        let e = ev();
        assert_eq!(e.zeta_even_bernoulli(1).unwrap().value, pm(1, 6, 2));
        assert_eq!(e.zeta_even_bernoulli(2).unwrap().value, pm(1, 90, 4));
        assert_eq!(e.zeta_even_bernoulli(3).unwrap().value, pm(1, 945, 6));
        assert!(matches!(
            e.zeta_even_bernoulli(0),
            Err(SpecialError::InvalidArgument(_))
        ));
    }

    #[test]
    fn zeta_recurrence_examples() {
        let e = ev();
        assert_eq!(e.zeta_even_recurrence(1).unwrap().value, pm(1, 6, 2));
        assert_eq!(e.zeta_even_recurrence(2).unwrap().value, pm(1, 90, 4));
        assert_eq!(
            e.zeta_even_recurrence(5).unwrap().value,
            e.zeta_even_bernoulli(5).unwrap().value
        );
        assert_eq!(
            e.zeta_even_recurrence(5).unwrap().route,
            Route::ZetaRecurrence
        );
    }

    #[test]
    fn lambda_examples() {
        let e = ev();
        assert_eq!(e.lambda_even(1).unwrap().value, pm(1, 8, 2));
        assert_eq!(e.lambda_even(2).unwrap().value, pm(1, 96, 4));
        assert_eq!(e.lambda_even(3).unwrap().value, pm(1, 960, 6));
    }

    #[test]
    fn beta_headline_values_every_route() {
        let e = ev();
        let expected = [pm(1, 4, 1), pm(1, 32, 3), pm(5, 1536, 5)];
        for (i, want) in expected.iter().enumerate() {
            let l = i as u32 + 1;
            assert_eq!(&e.beta_odd_euler(l - 1).unwrap().value, want);
            assert_eq!(&e.beta_odd_lambda(l).unwrap().value, want);
            assert_eq!(&e.beta_odd_zeta(l).unwrap().value, want);
            assert_eq!(&e.beta_odd_bernoulli(l).unwrap().value, want);
        }
        assert_eq!(
            e.beta_odd_zeta(4).unwrap().value,
            e.beta_odd_euler(3).unwrap().value
        );
        assert_eq!(
            e.beta_odd_bernoulli(6).unwrap().value,
            e.beta_odd_euler(5).unwrap().value
        );
        // β(7) = 61π^7/184320
        assert_eq!(e.beta_odd_lambda(4).unwrap().value, pm(61, 184_320, 7));
    }

    #[test]
    fn routes_agree_up_to_thirty() {
        let e = ev();
        for l in 1..=30 {
            let euler = e.beta_odd_euler(l - 1).unwrap().value;
            assert_eq!(
                e.beta_odd_lambda(l).unwrap().value,
                euler,
                "lambda route, l = {l}"
            );
            assert_eq!(
                e.beta_odd_zeta(l).unwrap().value,
                euler,
                "zeta route, l = {l}"
            );
            assert_eq!(
                e.beta_odd_bernoulli(l).unwrap().value,
                euler,
                "bernoulli route, l = {l}"
            );
        }
        let rec = zeta_recurrence_upto(30);
        for (i, z) in rec.iter().enumerate() {
            assert_eq!(z, &e.zeta_even_bernoulli(i as u32 + 1).unwrap().value);
        }
    }

    #[test]
    fn positivity_and_powers() {
        let e = ev();
        for n in 1..=40 {
            for v in [
                e.zeta_even_bernoulli(n).unwrap(),
                e.lambda_even(n).unwrap(),
                e.beta_odd_lambda(n).unwrap(),
                e.beta_odd_euler(n - 1).unwrap(),
            ] {
                assert!(v.value.coeff().is_positive(), "{v:?}");
                assert_eq!(v.value.pi_power(), v.argument);
            }
        }
    }

    #[test]
    fn lambda_is_scaled_zeta() {
        let e = ev();
        for n in 1..=50 {
            let p = two_pow(2 * n);
            let factor = (&p - &Rational::one()).checked_div(&p).unwrap();
            assert_eq!(
                e.lambda_even(n).unwrap().value.coeff(),
                &(factor * e.zeta_even_bernoulli(n).unwrap().value.coeff())
            );
        }
    }

    #[test]
    fn capacity_is_reported() {
        let e = Evaluator::new(10);
        assert_eq!(
            e.zeta_even_bernoulli(6),
            Err(SpecialError::Capacity(CapacityError {
                requested: 12,
                capacity: 10
            }))
        );
        assert!(e.beta_odd_euler(6).is_err());
        assert!(e.beta_odd_lambda(6).is_ok()); // needs B_10 only
        assert!(e.beta_odd_lambda(7).is_err());
        // the recurrence needs no table at all
        assert!(e.zeta_even_recurrence(20).is_ok());
    }

    #[test]
    fn default_routes_and_parity() {
        let e = ev();
        assert_eq!(e.evaluate(Function::Beta, 5).unwrap().value, pm(5, 1536, 5));
        assert_eq!(e.evaluate(Function::Zeta, 2).unwrap().value, pm(1, 6, 2));
        assert_eq!(e.evaluate(Function::Lambda, 4).unwrap().value, pm(1, 96, 4));
        assert!(e.evaluate(Function::Beta, 4).is_err());
        assert!(e.evaluate(Function::Zeta, 3).is_err());
        assert!(e.evaluate(Function::Zeta, 0).is_err());
        assert_eq!(Evaluator::required_index(Function::Beta, 5), 4);
        assert_eq!(Evaluator::required_index(Function::Zeta, 8), 8);
    }
}
