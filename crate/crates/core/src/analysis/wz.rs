//! The five continuous-discrete WZ pairs built from odd-frequency sines and
//! cosines.
//!
//! Every pair has the shape `F(x,k) = trig((2k−1)x)/(2k−1)^p` with
//! `G(x,k) = Σ_{j<k} ∂F(x,j)/∂x`, so `∂F/∂x = G(x,k+1) − G(x,k)`.

use num_bigint::BigInt;

use super::{AnalysisError, Residual, Verifier};
use crate::decimal::BigDecimal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WzPair {
    F1G1,
    F2G2,
    F3G3,
    /// cos((2k−1)x)/(2k−1)^{2l}
    F2l(u32),
    /// sin((2k−1)x)/(2k−1)^{2l+1}
    F2lPlus1(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Trig {
    Sin,
    Cos,
}

impl WzPair {
    /// All fixed families plus the parametric ones for `l` in `1..=max_l`.
    pub fn catalog(max_l: u32) -> Vec<WzPair> {
        let mut pairs = vec![WzPair::F1G1, WzPair::F2G2, WzPair::F3G3];
        for l in 1..=max_l {
            pairs.push(WzPair::F2l(l));
            pairs.push(WzPair::F2lPlus1(l));
        }
        pairs
    }

    pub fn name(&self) -> String {
        match self {
            WzPair::F1G1 => "F1G1".into(),
            WzPair::F2G2 => "F2G2".into(),
            WzPair::F3G3 => "F3G3".into(),
            WzPair::F2l(l) => format!("F2l[l={l}]"),
            WzPair::F2lPlus1(l) => format!("F2l+1[l={l}]"),
        }
    }

    /// Family tag without the order.
    pub fn family(&self) -> &'static str {
        match self {
            WzPair::F1G1 => "F1G1",
            WzPair::F2G2 => "F2G2",
            WzPair::F3G3 => "F3G3",
            WzPair::F2l(_) => "F2l",
            WzPair::F2lPlus1(_) => "F2l+1",
        }
    }

    /// The order `l` for the parametric families, 0 otherwise.
    pub fn order(&self) -> u32 {
        match self {
            WzPair::F2l(l) | WzPair::F2lPlus1(l) => *l,
            _ => 0,
        }
    }

    fn validate(&self) -> Result<(), AnalysisError> {
        match self {
            WzPair::F2l(0) | WzPair::F2lPlus1(0) => Err(AnalysisError::InvalidInput(format!(
                "{} needs l >= 1",
                self.name()
            ))),
            _ => Ok(()),
        }
    }

    fn shape(&self) -> (Trig, u32) {
        match *self {
            WzPair::F1G1 => (Trig::Sin, 1),
            WzPair::F2G2 => (Trig::Cos, 2),
            WzPair::F3G3 => (Trig::Sin, 3),
            WzPair::F2l(l) => (Trig::Cos, 2 * l),
            WzPair::F2lPlus1(l) => (Trig::Sin, 2 * l + 1),
        }
    }
}

impl Verifier {
    /// `F(x, k)`.
    pub fn wz_f(&self, pair: WzPair, x: &BigDecimal, k: u64) -> BigDecimal {
        let (trig, p) = pair.shape();
        let m = 2 * k - 1;
        let arg = x.rescale(self.prec.scale()).mul_int(m);
        let t = match trig {
            Trig::Sin => self.prec.sin(&arg),
            Trig::Cos => self.prec.cos(&arg),
        };
        t.div_int(BigInt::from(m).pow(p))
    }

    /// `∂F(x, k)/∂x` in closed form.
    pub fn wz_df(&self, pair: WzPair, x: &BigDecimal, k: u64) -> BigDecimal {
        let (trig, p) = pair.shape();
        let m = 2 * k - 1;
        let arg = x.rescale(self.prec.scale()).mul_int(m);
        let t = match trig {
            Trig::Sin => self.prec.cos(&arg),
            Trig::Cos => -self.prec.sin(&arg),
        };
        t.div_int(BigInt::from(m).pow(p - 1))
    }

    /// `G(x, k) = Σ_{j=1}^{k−1} ∂F(x, j)/∂x`, summed term by term.
    pub fn wz_g(&self, pair: WzPair, x: &BigDecimal, k: u64) -> BigDecimal {
        (1..k).fold(self.prec.zero(), |acc, j| &acc + &self.wz_df(pair, x, j))
    }

    /// `|∂F/∂x − (G(x,k+1) − G(x,k))|`.
    pub fn wz_equation_check(
        &self,
        pair: WzPair,
        x: &BigDecimal,
        k: u64,
    ) -> Result<BigDecimal, AnalysisError> {
        pair.validate()?;
        if k == 0 {
            return Err(AnalysisError::InvalidInput("k must be positive".into()));
        }
        let lhs = self.wz_df(pair, x, k);
        let rhs = &self.wz_g(pair, x, k + 1) - &self.wz_g(pair, x, k);
        Ok((&lhs - &rhs).abs())
    }

    /// Compares `Σ_{k=m}^n (F(x,k) − F(h,k))` with
    /// `∫_h^x G(t,n+1) dt − ∫_h^x G(t,m) dt`, the integrals by quadrature.
    pub fn wz_telescoped_integral_check(
        &self,
        pair: WzPair,
        h: &BigDecimal,
        x: &BigDecimal,
        m: u64,
        n: u64,
    ) -> Result<Residual, AnalysisError> {
        pair.validate()?;
        if m == 0 || m > n + 1 {
            return Err(AnalysisError::InvalidInput(format!(
                "need 1 <= m <= n + 1 (got m = {m}, n = {n})"
            )));
        }
        let lhs = (m..=n).fold(self.prec.zero(), |acc, k| {
            &acc + &(&self.wz_f(pair, x, k) - &self.wz_f(pair, h, k))
        });
        let upper = self.integrate(
            |t| self.wz_g(pair, t, n + 1),
            h,
            x,
            (2 * n).saturating_sub(1),
        )?;
        let lower = self.integrate(|t| self.wz_g(pair, t, m), h, x, (2 * m).saturating_sub(3))?;
        let rhs = &upper.value - &lower.value;
        Ok(Residual {
            residual: (&lhs - &rhs).abs(),
            est_error: &upper.est_error + &lower.est_error,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn equation_examples() {
        let v = Verifier::new(30);
        let p = v.precision();
        let tol = v.roundoff_tolerance();
        for k in [1, 2, 9] {
            assert!(v.wz_equation_check(WzPair::F1G1, &p.zero(), k).unwrap() <= tol);
        }
        assert_eq!(v.wz_df(WzPair::F1G1, &p.zero(), 5), p.int(1));
        assert!(
            v.wz_equation_check(WzPair::F3G3, &p.from_f64(0.9), 7)
                .unwrap()
                <= tol
        );
        assert!(
            v.wz_equation_check(WzPair::F2l(3), &p.from_f64(1.1), 12)
                .unwrap()
                <= tol
        );
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let v = Verifier::new(30);
        let p = v.precision();
        let x = p.from_f64(0.37);
        let h = BigDecimal::pow10_neg(10, p.scale());
        for pair in WzPair::catalog(3) {
            let fd = (&v.wz_f(pair, &(&x + &h), 4) - &v.wz_f(pair, &(&x - &h), 4))
                .checked_div(&h.mul_int(2))
                .unwrap();
            let diff = (&fd - &v.wz_df(pair, &x, 4)).abs();
            assert!(
                diff <= BigDecimal::pow10_neg(15, p.scale()),
                "{}",
                pair.name()
            );
        }
    }

    #[test]
    fn randomized_equation_samples() {
        let v = Verifier::new(30);
        let p = v.precision();
        let tol = v.roundoff_tolerance();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pairs = WzPair::catalog(4);
        for _ in 0..100 {
            let pair = pairs[rng.gen_range(0..pairs.len())];
            let x = p.from_f64(rng.gen_range(-3.0..3.0));
            let k = rng.gen_range(1..40);
            assert!(v.wz_equation_check(pair, &x, k).unwrap() <= tol);
        }
    }

    #[test]
    fn telescoped_integral_examples() {
        let v = Verifier::new(30);
        let p = v.precision();
        let tol = v.roundoff_tolerance();
        let empty = v
            .wz_telescoped_integral_check(WzPair::F2G2, &p.zero(), &p.int(1), 1, 0)
            .unwrap();
        assert!(empty.residual.is_zero());
        let r = v
            .wz_telescoped_integral_check(WzPair::F1G1, &p.zero(), &p.half_pi(), 1, 5)
            .unwrap();
        assert!(r.residual <= &r.est_error + &tol);
        let r = v
            .wz_telescoped_integral_check(WzPair::F3G3, &p.from_f64(0.2), &p.from_f64(1.2), 2, 9)
            .unwrap();
        assert!(r.residual <= &r.est_error + &tol);
    }

    #[test]
    fn telescoped_integral_randomized() {
        let v = Verifier::new(30);
        let p = v.precision();
        let tol = v.roundoff_tolerance();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let pairs = WzPair::catalog(3);
        for _ in 0..12 {
            let pair = pairs[rng.gen_range(0..pairs.len())];
            let h = p.from_f64(rng.gen_range(-1.5..1.5));
            let x = p.from_f64(rng.gen_range(-1.5..1.5));
            let n = rng.gen_range(0..8);
            let m = rng.gen_range(1..=n + 1);
            let r = v.wz_telescoped_integral_check(pair, &h, &x, m, n).unwrap();
            assert!(
                r.residual <= &r.est_error + &tol,
                "{} m={m} n={n}",
                pair.name()
            );
        }
    }

    #[test]
    fn rejects_bad_input() {
        let v = Verifier::new(10);
        let z = v.precision().zero();
        assert!(v.wz_equation_check(WzPair::F2l(0), &z, 1).is_err());
        assert!(v.wz_equation_check(WzPair::F1G1, &z, 0).is_err());
        assert!(v
            .wz_telescoped_integral_check(WzPair::F1G1, &z, &z, 3, 1)
            .is_err());
        assert!(v
            .wz_telescoped_integral_check(WzPair::F1G1, &z, &z, 0, 1)
            .is_err());
    }
}
