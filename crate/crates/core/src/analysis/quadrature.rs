//! Composite Gauss–Legendre quadrature on `BigDecimal`.
//!
//! The interval is cut into panels no wider than half a period of the fastest
//! oscillation in the integrand. Each panel is integrated by a fine and a
//! coarse rule; their difference is the panel's error estimate, and panels
//! whose estimate exceeds their share of the tolerance are bisected.

use rayon::prelude::*;

use super::AnalysisError;
use crate::decimal::{BigDecimal, Precision};

const FINE_ORDER: usize = 16;
const COARSE_ORDER: usize = 12;
const MAX_BISECTIONS: u32 = 10;

/// Integral value, its estimated error, and how many panels were used.
#[derive(Debug, Clone)]
pub struct QuadratureResult {
    pub value: BigDecimal,
    pub est_error: BigDecimal,
    pub panels: u64,
}

/// Gauss–Legendre nodes and weights on [−1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<BigDecimal>,
    weights: Vec<BigDecimal>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on `P_n`, started from the usual asymptotic
    /// guesses, at the working scale of `prec`.
    pub fn new(n: usize, prec: &Precision) -> Self {
        assert!(n >= 1);
        let scale = prec.scale() + 4;
        let one = BigDecimal::one(scale);
        let stop = BigDecimal::pow10_neg(scale - 2, scale);
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 1..=n.div_ceil(2) {
            let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut x = prec.from_f64(guess).rescale(scale);
            let mut deriv;
            let mut iterations = 0;
            loop {
                let (p, dp) = legendre_with_derivative(n, &x, &one);
                deriv = dp;
                let step = p.checked_div(&deriv).expect("simple roots");
                x = &x - &step;
                iterations += 1;
                if step.abs() <= stop || iterations > 100 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, &x, &one);
            deriv = dp;
            let denom = &(&one - &(&x * &x)) * &(&deriv * &deriv);
            let w = one.mul_int(2).checked_div(&denom).expect("nonzero weight");
            nodes.push(x);
            weights.push(w);
        }
        // mirror; the middle node of an odd rule is its own mirror
        let half = n / 2;
        for i in (0..half).rev() {
            nodes.push(-&nodes[i]);
            weights.push(weights[i].clone());
        }
        let nodes = nodes.into_iter().map(|x| x.rescale(prec.scale())).collect();
        let weights = weights
            .into_iter()
            .map(|w| w.rescale(prec.scale()))
            .collect();
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[BigDecimal] {
        &self.nodes
    }

    pub fn weights(&self) -> &[BigDecimal] {
        &self.weights
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(
    n: usize,
    x: &BigDecimal,
    one: &BigDecimal,
) -> (BigDecimal, BigDecimal) {
    let mut p_prev = one.clone();
    let mut p = x.clone();
    for j in 1..n {
        let next = (&(x * &p).mul_int(2 * j + 1) - &p_prev.mul_int(j)).div_int(j + 1);
        p_prev = p;
        p = next;
    }
    let dp = (&(x * &p) - &p_prev)
        .mul_int(n)
        .checked_div(&(&(x * x) - one))
        .expect("node strictly inside (-1, 1)");
    (p, dp)
}

/// A fine/coarse pair of Gauss rules.
#[derive(Debug, Clone)]
pub struct PanelQuadrature {
    fine: GaussLegendre,
    coarse: GaussLegendre,
}

impl PanelQuadrature {
    pub fn new(prec: &Precision) -> Self {
        PanelQuadrature {
            fine: GaussLegendre::new(FINE_ORDER, prec),
            coarse: GaussLegendre::new(COARSE_ORDER, prec),
        }
    }

    fn panel(
        &self,
        f: &(impl Fn(&BigDecimal) -> BigDecimal + Sync),
        a: &BigDecimal,
        b: &BigDecimal,
    ) -> (BigDecimal, BigDecimal) {
        let mid = (a + b).div_int(2);
        let half = (b - a).div_int(2);
        let apply = |rule: &GaussLegendre| {
            let mut acc = BigDecimal::zero(a.scale());
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let t = &mid + &(&half * x);
                acc = &acc + &(w * &f(&t));
            }
            &acc * &half
        };
        let fine = apply(&self.fine);
        let coarse = apply(&self.coarse);
        let err = (&fine - &coarse).abs();
        (fine, err)
    }

    /// Integrates one panel, bisecting while its error estimate exceeds `tol`.
    fn adaptive_panel(
        &self,
        f: &(impl Fn(&BigDecimal) -> BigDecimal + Sync),
        a: &BigDecimal,
        b: &BigDecimal,
        tol: &BigDecimal,
        depth: u32,
    ) -> (BigDecimal, BigDecimal, u64, bool) {
        let (value, err) = self.panel(f, a, b);
        if &err <= tol {
            return (value, err, 1, true);
        }
        if depth >= MAX_BISECTIONS {
            return (value, err, 1, false);
        }
        let mid = (a + b).div_int(2);
        let half_tol = tol.div_int(2);
        let (v1, e1, n1, ok1) = self.adaptive_panel(f, a, &mid, &half_tol, depth + 1);
        let (v2, e2, n2, ok2) = self.adaptive_panel(f, &mid, b, &half_tol, depth + 1);
        (&v1 + &v2, &e1 + &e2, n1 + n2, ok1 && ok2)
    }

    /// ∫_a^b f over `panels` equal panels, refined until the total error
    /// estimate is at most `tol`.
    pub fn integrate(
        &self,
        f: impl Fn(&BigDecimal) -> BigDecimal + Sync,
        a: &BigDecimal,
        b: &BigDecimal,
        panels: u64,
        tol: &BigDecimal,
    ) -> Result<QuadratureResult, AnalysisError> {
        let scale = a.scale().max(b.scale()).max(tol.scale());
        let (a, b) = (a.rescale(scale), b.rescale(scale));
        let panels = panels.max(1);
        let width = &b - &a;
        let panel_tol = tol.rescale(scale).div_int(panels);
        let parts: Vec<_> = (0..panels)
            .into_par_iter()
            .map(|i| {
                let lo = &a + &width.mul_int(i).div_int(panels);
                let hi = if i + 1 == panels {
                    b.clone()
                } else {
                    &a + &width.mul_int(i + 1).div_int(panels)
                };
                self.adaptive_panel(&f, &lo, &hi, &panel_tol, 0)
            })
            .collect();
        let mut value = BigDecimal::zero(scale);
        let mut est_error = BigDecimal::zero(scale);
        let mut used = 0;
        let mut converged = true;
        for (v, e, n, ok) in parts {
            value = &value + &v;
            est_error = &est_error + &e;
            used += n;
            converged &= ok;
        }
        if !converged && &est_error > tol {
            return Err(AnalysisError::QuadratureNotConverged {
                panels: used,
                est_error: est_error.to_scientific(3),
            });
        }
        Ok(QuadratureResult {
            value,
            est_error,
            panels: used,
        })
    }
}

/// Number of panels no wider than half a period of `sin(omega·t)` on `[a, b]`.
pub fn half_period_panels(a: &BigDecimal, b: &BigDecimal, omega: u64) -> u64 {
    let width = (b - a).abs().to_f64();
    let half_period = std::f64::consts::PI / omega.max(1) as f64;
    // tolerate float noise when the width is an exact multiple
    (width / half_period - 1e-9).ceil().max(1.0) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_and_weights() {
        let prec = Precision::new(30);
        let rule = GaussLegendre::new(4, &prec);
        // nodes ±sqrt(3/7 ∓ (2/7)sqrt(6/5))
        let expected = [0.861_136_311_594_052_6, 0.339_981_043_584_856_3];
        let mut got: Vec<f64> = rule.nodes().iter().map(|x| x.to_f64()).collect();
        got.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!((got[0] - expected[0]).abs() < 1e-15);
        assert!((got[1] - expected[1]).abs() < 1e-15);
        let total = rule.weights().iter().fold(prec.zero(), |acc, w| &acc + w);
        assert!((&total - &prec.int(2)).abs() <= BigDecimal::pow10_neg(35, 40));
        let odd = GaussLegendre::new(5, &prec);
        assert_eq!(odd.order(), 5);
        assert!(odd.nodes()[2].abs() <= BigDecimal::pow10_neg(35, 40));
    }

    #[test]
    fn polynomials_are_exact() {
        let prec = Precision::new(30);
        let q = PanelQuadrature::new(&prec);
        // ∫_0^2 t^7 dt = 32
        let r = q
            .integrate(
                |t| t.powi(7),
                &prec.zero(),
                &prec.int(2),
                3,
                &BigDecimal::pow10_neg(25, 40),
            )
            .unwrap();
        assert!((&r.value - &prec.int(32)).abs() <= BigDecimal::pow10_neg(30, 40));
    }

    #[test]
    fn oscillatory_integral() {
        let prec = Precision::new(30);
        let q = PanelQuadrature::new(&prec);
        // ∫_0^π sin(40t) cos(t) dt = 80/1599 (closed form, 40 even)
        let f = |t: &BigDecimal| &prec.sin(&t.mul_int(40)) * &prec.cos(t);
        let panels = half_period_panels(&prec.zero(), prec.pi(), 40);
        assert_eq!(panels, 40);
        let r = q
            .integrate(
                f,
                &prec.zero(),
                prec.pi(),
                panels,
                &BigDecimal::pow10_neg(22, 40),
            )
            .unwrap();
        let exact = BigDecimal::from_rational(&crate::exact::Rational::new(80, 1599).unwrap(), 40);
        assert!((&r.value - &exact).abs() <= BigDecimal::pow10_neg(25, 40));
        assert!(r.est_error <= BigDecimal::pow10_neg(22, 40));
    }

    #[test]
    fn reversed_interval_negates() {
        let prec = Precision::new(20);
        let q = PanelQuadrature::new(&prec);
        let tol = BigDecimal::pow10_neg(15, 30);
        let fwd = q
            .integrate(|t| prec.cos(t), &prec.zero(), &prec.int(1), 2, &tol)
            .unwrap();
        let back = q
            .integrate(|t| prec.cos(t), &prec.int(1), &prec.zero(), 2, &tol)
            .unwrap();
        assert_eq!(fwd.value, -back.value);
    }

    #[test]
    fn non_convergence_is_reported() {
        let prec = Precision::new(20);
        let q = PanelQuadrature::new(&prec);
        // a jump at t = 1/3 defeats any tolerance near roundoff
        let third = prec.int(1).div_int(3);
        let step = |t: &BigDecimal| if t < &third { prec.zero() } else { prec.int(1) };
        let err = q
            .integrate(
                step,
                &prec.zero(),
                &prec.int(1),
                1,
                &BigDecimal::pow10_neg(28, 30),
            )
            .unwrap_err();
        assert!(matches!(err, AnalysisError::QuadratureNotConverged { .. }));
    }
}
