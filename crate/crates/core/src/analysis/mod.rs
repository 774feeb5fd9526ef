//! Finite kernel sums, WZ identities and the integral representation of the
//! odd-order sine sums, all checked numerically in `BigDecimal`.

pub mod quadrature;
mod representation;
mod wz;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::decimal::{BigDecimal, Precision, GUARD_DIGITS};
pub use quadrature::{GaussLegendre, PanelQuadrature, QuadratureResult};
pub use representation::{TrendPoint, MAX_NESTING_DEPTH};
pub use wz::WzPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("x = {x} is within 10^-{digits} of a multiple of pi")]
    NearSingular { x: String, digits: u32 },
    #[error("quadrature did not converge after {panels} panels (estimated error {est_error})")]
    QuadratureNotConverged { panels: u64, est_error: String },
    #[error("nesting depth {depth} exceeds the cap of {cap}")]
    DepthCap { depth: u32, cap: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    /// Σ sin((2j−1)x)/(2j−1)^l
    I,
    /// Σ cos((2j−1)x)/(2j−1)^l
    J,
}

#[derive(Debug, Clone)]
pub struct KernelSumSpec {
    pub kind: KernelKind,
    pub order: u32,
    pub x: BigDecimal,
    pub k: u64,
}

impl KernelSumSpec {
    pub fn new(kind: KernelKind, order: u32, x: BigDecimal, k: u64) -> Result<Self, AnalysisError> {
        if order == 0 || k == 0 {
            return Err(AnalysisError::InvalidInput(format!(
                "kernel sums need order >= 1 and k >= 1 (got order {order}, k {k})"
            )));
        }
        Ok(KernelSumSpec { kind, order, x, k })
    }
}

/// A computed residual together with the quadrature error that bounds it.
#[derive(Debug, Clone)]
pub struct Residual {
    pub residual: BigDecimal,
    pub est_error: BigDecimal,
}

/// One line of a verification report.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub l: u32,
    pub k: u64,
    pub residual: BigDecimal,
    pub tol: BigDecimal,
}

impl CheckReport {
    pub fn new(
        name: impl Into<String>,
        l: u32,
        k: u64,
        residual: BigDecimal,
        tol: BigDecimal,
    ) -> Self {
        CheckReport {
            name: name.into(),
            l,
            k,
            residual,
            tol,
        }
    }

    pub fn passed(&self) -> bool {
        self.residual <= self.tol
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} l={} k={} residual={} tol={} {}",
            self.name,
            self.l,
            self.k,
            self.residual.to_scientific(3),
            self.tol.to_scientific(3),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Numerical context shared by all checks: a working precision and the
/// quadrature rules built for it.
#[derive(Debug, Clone)]
pub struct Verifier {
    prec: Precision,
    quad: PanelQuadrature,
    quad_tol: BigDecimal,
}

impl Verifier {
    pub fn new(digits: u32) -> Self {
        let prec = Precision::new(digits);
        let quad = PanelQuadrature::new(&prec);
        let quad_tol = BigDecimal::pow10_neg(
            digits.saturating_sub(GUARD_DIGITS).max(digits / 2),
            prec.scale(),
        );
        Verifier {
            prec,
            quad,
            quad_tol,
        }
    }

    pub fn precision(&self) -> &Precision {
        &self.prec
    }

    /// `10^-(P-G)`.
    pub fn roundoff_tolerance(&self) -> BigDecimal {
        self.prec.roundoff_tolerance()
    }

    /// Target total error for each quadrature.
    pub fn quadrature_tolerance(&self) -> &BigDecimal {
        &self.quad_tol
    }

    /// `sin(2kt)/(2 sin t)`, with its limit `k` at `t = 0`.
    pub fn dirichlet_kernel(&self, t: &BigDecimal, k: u64) -> BigDecimal {
        if t.is_zero() {
            return self.prec.int(k);
        }
        let num = self.prec.sin(&t.mul_int(2 * k));
        let den = self.prec.sin(t).mul_int(2);
        num.checked_div(&den)
            .expect("t is not a nonzero multiple of pi")
    }

    pub fn kernel_sum(&self, spec: &KernelSumSpec) -> BigDecimal {
        let x = spec.x.rescale(self.prec.scale());
        let mut acc = self.prec.zero();
        for j in 1..=spec.k {
            let m = 2 * j - 1;
            let arg = x.mul_int(m);
            let trig = match spec.kind {
                KernelKind::I => self.prec.sin(&arg),
                KernelKind::J => self.prec.cos(&arg),
            };
            acc = &acc + &trig.div_int(BigInt::from(m).pow(spec.order));
        }
        acc
    }

    /// `|Σ_{j=1}^n cos((2j−1)x) − sin(2nx)/(2 sin x)|`.
    pub fn dirichlet_kernel_identity_check(
        &self,
        x: &BigDecimal,
        n: u64,
    ) -> Result<BigDecimal, AnalysisError> {
        if n == 0 {
            return Err(AnalysisError::InvalidInput("n must be positive".into()));
        }
        let x = x.rescale(self.prec.scale());
        let near = self.prec.digits() / 2;
        if self.prec.sin(&x).abs() < BigDecimal::pow10_neg(near, self.prec.scale()) {
            return Err(AnalysisError::NearSingular {
                x: x.to_scientific(6),
                digits: near,
            });
        }
        let sum = (1..=n).fold(self.prec.zero(), |acc, j| {
            &acc + &self.prec.cos(&x.mul_int(2 * j - 1))
        });
        Ok((&sum - &self.dirichlet_kernel(&x, n)).abs())
    }

    pub(crate) fn integrate(
        &self,
        f: impl Fn(&BigDecimal) -> BigDecimal + Sync,
        a: &BigDecimal,
        b: &BigDecimal,
        omega: u64,
    ) -> Result<QuadratureResult, AnalysisError> {
        let a = a.rescale(self.prec.scale());
        let b = b.rescale(self.prec.scale());
        let panels = quadrature::half_period_panels(&a, &b, omega);
        self.quad.integrate(f, &a, &b, panels, &self.quad_tol)
    }
}
