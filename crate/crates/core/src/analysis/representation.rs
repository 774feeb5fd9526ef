//! Integral representation of the odd-order sine sums and its limits.

use num_bigint::BigInt;

use super::{AnalysisError, KernelKind, KernelSumSpec, QuadratureResult, Residual, Verifier};
use crate::decimal::BigDecimal;
use crate::exact::{factorial, pi_monomial_combine, PiMonomial, Rational};
use crate::oracle::render_decimal;
use crate::special::Evaluator;

/// Deepest iterated integral the collapse check will build (`l <= 4`).
pub const MAX_NESTING_DEPTH: u32 = 7;

const MAX_CHEBYSHEV_DEGREE: usize = 4096;

/// One sample of `∫_0^{π/2} t^s sin(2kt)/sin t dt` against its k → ∞ limit.
#[derive(Debug, Clone)]
pub struct TrendPoint {
    pub k: u64,
    pub integral: QuadratureResult,
    pub limit: BigDecimal,
    /// `|integral − limit|`
    pub distance: BigDecimal,
    /// `(π/2)^s / k`, for `s >= 1`
    pub bound: Option<BigDecimal>,
}

fn sign(exp: u32) -> i32 {
    if exp.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl Verifier {
    /// `(x − t)^p · sin(2kt)/(2 sin t)`.
    fn weighted_kernel(&self, x: &BigDecimal, t: &BigDecimal, p: u32, k: u64) -> BigDecimal {
        &(x - t).powi(p) * &self.dirichlet_kernel(t, k)
    }

    /// `(1/(2l−2)!) ∫_0^x (x−t)^{2l−2} sin(2kt)/(2 sin t) dt`.
    fn cauchy_form(
        &self,
        l: u32,
        x: &BigDecimal,
        k: u64,
    ) -> Result<QuadratureResult, AnalysisError> {
        let x = x.rescale(self.prec.scale());
        let p = 2 * l - 2;
        let q = self.integrate(
            |t| self.weighted_kernel(&x, t, p, k),
            &self.prec.zero(),
            &x,
            2 * k,
        )?;
        let g = factorial(u64::from(p));
        Ok(QuadratureResult {
            value: q.value.div_int(g.clone()),
            est_error: q.est_error.div_int(g),
            panels: q.panels,
        })
    }

    /// `depth`-fold iterated integral `∫_0^x ∫_0^{t_1} … f` of the kernel,
    /// by Chebyshev interpolation on [0, x] and exact term-wise integration.
    /// Returns the value and the size of the discarded coefficient tail.
    fn iterated_kernel_integral(
        &self,
        depth: u32,
        x: &BigDecimal,
        k: u64,
    ) -> Result<(BigDecimal, BigDecimal), AnalysisError> {
        let scale = self.prec.scale();
        let x = x.rescale(scale);
        let tail_tol = BigDecimal::pow10_neg(scale.saturating_sub(6), scale);
        let mut n = 2 * (k as f64 * x.to_f64().abs()).ceil() as usize + 32;
        loop {
            let coeffs = self.chebyshev_coefficients(&x, k, n);
            let tail = &coeffs[n].abs() + &coeffs[n - 1].abs();
            if tail <= tail_tol || n >= MAX_CHEBYSHEV_DEGREE {
                if tail > tail_tol {
                    return Err(AnalysisError::QuadratureNotConverged {
                        panels: n as u64,
                        est_error: tail.to_scientific(3),
                    });
                }
                let half_x = x.div_int(2);
                let mut a = coeffs;
                for _ in 0..depth {
                    a = antiderivative(&a, &half_x);
                }
                let value = a.iter().fold(self.prec.zero(), |acc, c| &acc + c);
                return Ok((value, tail));
            }
            n = (2 * n).min(MAX_CHEBYSHEV_DEGREE);
        }
    }

    /// Chebyshev coefficients `a_0..a_n` of the kernel on [0, x] in the
    /// variable `u = 2t/x − 1`, from values at the Lobatto points.
    fn chebyshev_coefficients(&self, x: &BigDecimal, k: u64, n: usize) -> Vec<BigDecimal> {
        use rayon::prelude::*;
        let pi = self.prec.pi();
        let cos_table: Vec<BigDecimal> = (0..2 * n)
            .into_par_iter()
            .map(|r| self.prec.cos(&pi.mul_int(r).div_int(n)))
            .collect();
        let one = self.prec.int(1);
        let values: Vec<BigDecimal> = (0..=n)
            .into_par_iter()
            .map(|j| {
                let t = (x * &(&one + &cos_table[j])).div_int(2);
                let v = self.dirichlet_kernel(&t, k);
                if j == 0 || j == n {
                    v.div_int(2)
                } else {
                    v
                }
            })
            .collect();
        (0..=n)
            .into_par_iter()
            .map(|m| {
                let mut acc = self.prec.zero();
                for (j, f) in values.iter().enumerate() {
                    acc = &acc + &(f * &cos_table[(m * j) % (2 * n)]);
                }
                let c = acc.mul_int(2).div_int(n);
                if m == 0 || m == n {
                    c.div_int(2)
                } else {
                    c
                }
            })
            .collect()
    }

    /// Compares the `(2l−1)`-fold iterated integral of the kernel over
    /// [0, x] with its single-integral Cauchy form.
    pub fn repeated_integral_collapse_check(
        &self,
        l: u32,
        x: &BigDecimal,
        k: u64,
    ) -> Result<Residual, AnalysisError> {
        if l == 0 || k == 0 {
            return Err(AnalysisError::InvalidInput(
                "l and k must be positive".into(),
            ));
        }
        let depth = 2 * l - 1;
        if depth > MAX_NESTING_DEPTH {
            return Err(AnalysisError::DepthCap {
                depth,
                cap: MAX_NESTING_DEPTH,
            });
        }
        if x.abs().to_f64() >= 3.0 {
            return Err(AnalysisError::InvalidInput(format!(
                "|x| must stay below 3 so the kernel is analytic on [0, x] (got {})",
                x.to_scientific(6)
            )));
        }
        if x.is_zero() {
            return Ok(Residual {
                residual: self.prec.zero(),
                est_error: self.prec.zero(),
            });
        }
        let (nested, tail) = self.iterated_kernel_integral(depth, x, k)?;
        let single = self.cauchy_form(l, x, k)?;
        Ok(Residual {
            residual: (&nested - &single.value).abs(),
            est_error: &single.est_error + &tail,
        })
    }

    /// `|I_{2l−1}(x,k) − R|` where `R` is the integral representation with
    /// finite `J_{2j}(0,k)` correction terms.
    pub fn representation_check(
        &self,
        l: u32,
        k: u64,
        x: &BigDecimal,
    ) -> Result<Residual, AnalysisError> {
        if l == 0 || k == 0 {
            return Err(AnalysisError::InvalidInput(
                "l and k must be positive".into(),
            ));
        }
        let x = x.rescale(self.prec.scale());
        let lhs = self.kernel_sum(&KernelSumSpec::new(KernelKind::I, 2 * l - 1, x.clone(), k)?);
        let q = self.cauchy_form(l, &x, k)?;
        let mut rhs = q.value.mul_int(sign(l + 1));
        for j in 1..l {
            let jsum = self.kernel_sum(&KernelSumSpec::new(
                KernelKind::J,
                2 * j,
                self.prec.zero(),
                k,
            )?);
            let term = (&jsum * &x.powi(2 * l - 2 * j - 1))
                .div_int(factorial(u64::from(2 * l - 2 * j - 1)));
            rhs = &rhs + &term.mul_int(sign(l + j + 1));
        }
        Ok(Residual {
            residual: (&lhs - &rhs).abs(),
            est_error: q.est_error,
        })
    }

    /// `∫_0^{π/2} t^s sin(2kt)/sin t dt` for each k, with the distance to
    /// the limit (π/2 for s = 0, otherwise 0).
    pub fn limit_trend(&self, s: u32, k_list: &[u64]) -> Result<Vec<TrendPoint>, AnalysisError> {
        if k_list.is_empty() || k_list[0] == 0 || k_list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AnalysisError::InvalidInput(
                "k_list must be non-empty, positive and strictly increasing".into(),
            ));
        }
        let half_pi = self.prec.half_pi();
        let limit = if s == 0 {
            half_pi.clone()
        } else {
            self.prec.zero()
        };
        k_list
            .iter()
            .map(|&k| {
                let integral = self.integrate(
                    |t| (&t.powi(s) * &self.dirichlet_kernel(t, k)).mul_int(2),
                    &self.prec.zero(),
                    &half_pi,
                    2 * k,
                )?;
                let distance = (&integral.value - &limit).abs();
                let bound = (s >= 1).then(|| half_pi.powi(s).div_int(k));
                Ok(TrendPoint {
                    k,
                    integral,
                    limit: limit.clone(),
                    distance,
                    bound,
                })
            })
            .collect()
    }

    /// The k-th approximant `I_{2l−1,1}(π/2,k) + I_{2l−1,2}(π/2,k)`: the
    /// integral part by quadrature, the correction part with `J_{2j}(0,k)`
    /// replaced by its limit λ(2j).
    pub fn beta_via_proof_path(&self, l: u32, k: u64) -> Result<BigDecimal, AnalysisError> {
        if l == 0 || k == 0 {
            return Err(AnalysisError::InvalidInput(
                "l and k must be positive".into(),
            ));
        }
        let half_pi = self.prec.half_pi();
        let q = self.cauchy_form(l, &half_pi, k)?;
        let integral_part = q.value.mul_int(sign(l + 1));
        let evaluator = Evaluator::new(2 * l as usize);
        let mut terms = Vec::new();
        for j in 1..l {
            let lambda = evaluator
                .lambda_even(j)
                .map_err(|e| AnalysisError::InvalidInput(e.to_string()))?
                .value;
            let p = 2 * l - 2 * j - 1;
            let factor = Rational::from_integer(sign(l + j + 1))
                .checked_div(&Rational::from_integer(
                    BigInt::from(2).pow(p) * factorial(u64::from(p)),
                ))
                .expect("nonzero");
            terms.push(lambda.mul(&PiMonomial::with_power(factor, p)));
        }
        let correction = pi_monomial_combine(&terms).expect("all terms share pi^(2l-1)");
        let correction = render_decimal(&correction, self.prec.scale());
        Ok(&integral_part + &correction)
    }
}

/// Coefficients of `∫_{-1}^u f`, scaled by `dt/du`, for `f = Σ a_m T_m(u)`.
fn antiderivative(a: &[BigDecimal], dt_du: &BigDecimal) -> Vec<BigDecimal> {
    let n = a.len();
    let zero = BigDecimal::zero(a[0].scale());
    let get = |i: usize| a.get(i).cloned().unwrap_or_else(|| zero.clone());
    let mut out = vec![zero.clone(); n + 1];
    out[1] = &get(0) - &get(2).div_int(2);
    for (m, slot) in out.iter_mut().enumerate().skip(2) {
        *slot = (&get(m - 1) - &get(m + 1)).div_int(2 * m);
    }
    // choose the constant so the integral vanishes at u = −1
    let mut at_minus_one = zero;
    for (m, c) in out.iter().enumerate().skip(1) {
        at_minus_one = if m % 2 == 0 {
            &at_minus_one + c
        } else {
            &at_minus_one - c
        };
    }
    out[0] = -at_minus_one;
    out.iter().map(|c| c * dt_du).collect()
}
