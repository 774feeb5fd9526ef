//! The `verify` suites. Each returns its report lines; suites run on their
//! own threads and are emitted in a fixed order.

use clap::ValueEnum;

use crate::analysis::{CheckReport, Verifier, WzPair};
use crate::decimal::BigDecimal;
use crate::exact::{PiMonomial, Rational};
use crate::oracle::render_decimal;
use crate::special::{zeta_recurrence_upto, Evaluator, Function};
use crate::tables::{bernoulli, bernoulli_poly, euler_from_bernoulli, euler_number};

use super::series_estimate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Routes,
    Identities,
    Oracle,
    Wz,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Routes => "routes",
            Suite::Identities => "identities",
            Suite::Oracle => "oracle",
            Suite::Wz => "wz",
            Suite::All => "all",
        }
    }

    /// The concrete suites this selection stands for, in output order.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Routes, Suite::Identities, Suite::Oracle, Suite::Wz],
            s => vec![s],
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_order: u32,
    pub digits: u32,
    pub tolerance: BigDecimal,
}

/// Runs `suites` concurrently and returns their reports in the given order.
pub fn run_suites(suites: &[Suite], cfg: &SuiteConfig) -> Vec<(Suite, Vec<CheckReport>)> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| (s, scope.spawn(move || run_suite(s, cfg))))
            .collect();
        handles
            .into_iter()
            .map(|(s, h)| (s, h.join().expect("suite thread panicked")))
            .collect()
    })
}

fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    match suite {
        Suite::Routes => routes(cfg),
        Suite::Identities => identities(cfg),
        Suite::Oracle => oracle(cfg),
        Suite::Wz => wz(cfg),
        Suite::All => suite
            .expand()
            .into_iter()
            .flat_map(|s| run_suite(s, cfg))
            .collect(),
    }
}

fn zero() -> BigDecimal {
    BigDecimal::zero(0)
}

/// Zero when equal; otherwise the rendered size of the difference, never
/// below one unit in the last digit.
fn exact_gap(a: &PiMonomial, b: &PiMonomial, digits: u32) -> BigDecimal {
    if a == b {
        return zero();
    }
    if a.pi_power() != b.pi_power() {
        return BigDecimal::one(digits);
    }
    let diff = PiMonomial::with_power((a.coeff() - b.coeff()).abs(), a.pi_power());
    render_decimal(&diff, digits).max(BigDecimal::pow10_neg(digits, digits))
}

fn rational_gap(a: &Rational, b: &Rational, digits: u32) -> BigDecimal {
    exact_gap(
        &PiMonomial::rational(a.clone()),
        &PiMonomial::rational(b.clone()),
        digits,
    )
}

fn routes(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let l_max = cfg.max_order;
    let ev = Evaluator::new(2 * l_max as usize);
    let mut out = Vec::new();
    for l in 1..=l_max {
        let reference = ev.beta_odd_lambda(l).expect("within table").value;
        let others = [
            ev.beta_odd_euler(l - 1).expect("within table").value,
            ev.beta_odd_zeta(l).expect("within table").value,
            ev.beta_odd_bernoulli(l).expect("within table").value,
        ];
        let gap = others
            .iter()
            .map(|v| exact_gap(&reference, v, cfg.digits))
            .max()
            .unwrap_or_else(zero);
        out.push(CheckReport::new("route_beta", l, 0, gap, zero()));
    }
    let recurrence = zeta_recurrence_upto(l_max);
    for (l, rec) in (1..=l_max).zip(&recurrence) {
        let direct = ev.zeta_even_bernoulli(l).expect("within table").value;
        out.push(CheckReport::new(
            "route_zeta",
            l,
            0,
            exact_gap(&direct, rec, cfg.digits),
            zero(),
        ));
    }
    out
}

fn identities(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let l_max = cfg.max_order;
    let ev = Evaluator::new(2 * l_max as usize);
    let bt = ev.bernoulli_table();
    let half = Rational::new(1, 2).expect("nonzero");
    let mut out = Vec::new();
    for n in 1..=l_max {
        let idx = 2 * n as usize;
        let lhs = bernoulli_poly(idx, &half, bt).expect("within table");
        let factor = Rational::power_of_two(1)
            .checked_div(&Rational::power_of_two(2 * n))
            .expect("nonzero")
            - Rational::one();
        let rhs = factor * bernoulli(idx, bt).expect("within table");
        out.push(CheckReport::new(
            "bernoulli_half",
            n,
            0,
            rational_gap(&lhs, &rhs, cfg.digits),
            zero(),
        ));
    }
    for l in 0..=l_max {
        let via_b = euler_from_bernoulli(l as usize, bt).expect("within table");
        let direct = euler_number(2 * l as usize, ev.euler_table()).expect("within table");
        out.push(CheckReport::new(
            "euler_from_bernoulli",
            l,
            0,
            rational_gap(&via_b, &direct, cfg.digits),
            zero(),
        ));
    }
    let v = Verifier::new(cfg.digits);
    let p = v.precision();
    for (x, n) in [(0.7, 25), (1.3, 100), (2.0, 7), (-0.4, 60)] {
        let residual = v
            .dirichlet_kernel_identity_check(&p.from_f64(x), n)
            .expect("x is away from multiples of pi");
        out.push(CheckReport::new(
            "dirichlet_kernel",
            0,
            n,
            residual,
            v.roundoff_tolerance(),
        ));
    }
    out
}

fn oracle(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let l_max = cfg.max_order;
    let ev = Evaluator::new(2 * l_max as usize);
    // a P-digit comparison cannot resolve anything below 10^-P
    let floor = BigDecimal::pow10_neg(cfg.digits, cfg.digits);
    let mut out = Vec::new();
    for function in [Function::Beta, Function::Zeta, Function::Lambda] {
        for l in 1..=l_max {
            let arg = function.argument_of_order(l);
            let exact = ev.evaluate(function, arg).expect("within table");
            let est = series_estimate(function, arg, cfg.digits).expect("argument in range");
            let rendered = render_decimal(&exact.value, est.value.scale());
            let residual = &(&(&rendered - &est.value).abs() + &est.error_bound) + &floor;
            out.push(CheckReport::new(
                format!("oracle_{}", function.name()),
                l,
                est.terms_used,
                residual,
                cfg.tolerance.clone(),
            ));
        }
    }
    out
}

fn wz(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let v = Verifier::new(cfg.digits);
    let p = v.precision();
    let roundoff = v.roundoff_tolerance();
    let small = cfg.max_order.min(4);
    let mut out = Vec::new();

    for pair in WzPair::catalog(cfg.max_order) {
        for (x, k) in [(0.9, 7), (-1.7, 20)] {
            let r = v
                .wz_equation_check(pair, &p.from_f64(x), k)
                .expect("valid pair");
            out.push(CheckReport::new(
                format!("wz_equation_{}", pair.family()),
                pair.order(),
                k,
                r,
                roundoff.clone(),
            ));
        }
    }
    for pair in WzPair::catalog(small) {
        let (m, n) = (2, 9);
        match v.wz_telescoped_integral_check(pair, &p.from_f64(0.2), &p.from_f64(1.2), m, n) {
            Ok(r) => out.push(CheckReport::new(
                format!("wz_integral_{}", pair.family()),
                pair.order(),
                n,
                r.residual,
                &r.est_error + &roundoff,
            )),
            Err(e) => out.push(failed(
                format!("wz_integral_{}", pair.family()),
                pair.order(),
                n,
                &e,
            )),
        }
    }
    for l in 2..=small {
        let k = 3;
        match v.repeated_integral_collapse_check(l, &p.int(1), k) {
            Ok(r) => out.push(CheckReport::new(
                "repeated_integral",
                l,
                k,
                r.residual,
                &r.est_error + &roundoff,
            )),
            Err(e) => out.push(failed("repeated_integral", l, k, &e)),
        }
    }
    for l in 1..=small {
        let k = 100;
        match v.representation_check(l, k, &p.half_pi()) {
            Ok(r) => out.push(CheckReport::new(
                "representation",
                l,
                k,
                r.residual,
                &r.est_error.mul_int(10) + &roundoff,
            )),
            Err(e) => out.push(failed("representation", l, k, &e)),
        }
    }
    for s in [0, 1] {
        let name = format!("limit_trend_s{s}");
        match v.limit_trend(s, &[10, 100, 1000]) {
            Ok(points) => {
                // each distance must beat the previous one, and the explicit bound when there is one
                let mut previous = points[0].limit.abs().max(p.half_pi());
                for pt in points {
                    let mut tol = previous.clone();
                    if let Some(b) = &pt.bound {
                        tol = tol.min(b.clone());
                    }
                    previous = pt.distance.clone();
                    out.push(CheckReport::new(name.clone(), s, pt.k, pt.distance, tol));
                }
            }
            Err(e) => out.push(failed(&name, s, 0, &e)),
        }
    }
    let ev = Evaluator::new(8);
    for l in 1..=cfg.max_order.min(3) {
        let k = 1000;
        let exact = render_decimal(
            &ev.beta_odd_lambda(l).expect("within table").value,
            p.scale(),
        );
        match v.beta_via_proof_path(l, k) {
            Ok(approx) => out.push(CheckReport::new(
                "proof_path",
                l,
                k,
                (&approx - &exact).abs(),
                BigDecimal::pow10_neg(2, 2),
            )),
            Err(e) => out.push(failed("proof_path", l, k, &e)),
        }
    }
    out
}

/// A line for a check that could not be computed.
fn failed(
    name: impl Into<String>,
    l: u32,
    k: u64,
    e: &crate::analysis::AnalysisError,
) -> CheckReport {
    let name = format!("{}[{}]", name.into(), e.to_string().replace(' ', "_"));
    CheckReport::new(name, l, k, BigDecimal::one(0), zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(max_order: u32, digits: u32, tol: &str) -> SuiteConfig {
        SuiteConfig {
            max_order,
            digits,
            tolerance: tol.parse().unwrap(),
        }
    }

    #[test]
    fn cheap_suites_pass() {
        let c = cfg(8, 30, "1e-25");
        for (suite, reports) in run_suites(&[Suite::Routes, Suite::Identities, Suite::Oracle], &c) {
            assert!(!reports.is_empty());
            for r in reports {
                assert!(r.passed(), "{} {r}", suite.name());
            }
        }
    }

    #[test]
    fn tight_tolerance_fails() {
        let c = cfg(3, 30, "1e-40");
        let reports = &run_suites(&[Suite::Oracle], &c)[0].1;
        assert!(reports.iter().all(|r| !r.passed()));
    }

    #[test]
    fn gaps() {
        let a = PiMonomial::with_power(Rational::new(1, 4).unwrap(), 1);
        let b = PiMonomial::with_power(Rational::new(1, 3).unwrap(), 1);
        assert!(exact_gap(&a, &a, 10).is_zero());
        assert!(exact_gap(&a, &b, 10) > zero());
        let c = PiMonomial::with_power(Rational::new(1, 4).unwrap(), 2);
        assert_eq!(exact_gap(&a, &c, 10), BigDecimal::one(10));
    }

    #[test]
    fn order_is_fixed() {
        let c = cfg(2, 20, "1e-15");
        let names: Vec<_> = run_suites(&Suite::All.expand()[..3], &c)
            .into_iter()
            .map(|(s, _)| s.name())
            .collect();
        assert_eq!(names, ["routes", "identities", "oracle"]);
    }
}
