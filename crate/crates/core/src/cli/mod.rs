//! Command-line front end: `eval`, `table`, `verify` and `oracle`.

mod verify;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::decimal::BigDecimal;
use crate::oracle::{self, render_decimal, SeriesEstimate};
use crate::special::{Evaluator, Function, SpecialError, SpecialValue};
use crate::tables::DEFAULT_TABLE_MAX;

pub use verify::{run_suites, Suite, SuiteConfig};

/// Environment variable overriding the table capacity.
pub const TABLE_MAX_ENV: &str = "BETA_EXACT_TABLE_MAX";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Exact,
    Decimal,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "beta-exact",
    version,
    about = "Exact values of zeta(2n), lambda(2n) and beta(2l-1)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "exact", global = true)]
    pub format: Format,

    /// Fractional digits of decimal output.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=100_000), global = true)]
    pub digits: u32,

    #[arg(long, default_value_t = 20, global = true)]
    pub max_order: u32,

    #[arg(long, default_value = "1e-25", global = true)]
    pub tolerance: BigDecimal,

    #[arg(long, value_enum, default_value = "all", global = true)]
    pub suite: Suite,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed form of one value.
    Eval {
        function: Function,
        #[arg(allow_negative_numbers = true)]
        argument: i64,
    },
    /// Closed forms of the first `--max-order` values.
    Table { function: Function },
    /// Cross-check routes, identities, series and integral representations.
    Verify,
    /// Value from the defining series, with a rigorous error bound.
    Oracle {
        function: Function,
        #[arg(allow_negative_numbers = true)]
        argument: i64,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Capacity(String),
}

impl From<SpecialError> for CliError {
    fn from(e: SpecialError) -> Self {
        match e {
            SpecialError::Capacity(c) => CliError::Capacity(c.to_string()),
            SpecialError::InvalidArgument(m) => CliError::Usage(m),
        }
    }
}

/// Table capacity from the environment, or the default.
pub fn capacity_from_env() -> Result<usize, String> {
    match std::env::var(TABLE_MAX_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{TABLE_MAX_ENV} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_TABLE_MAX),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, capacity: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Eval { function, argument } => cmd_eval(&cli, *function, *argument, capacity, out),
        Command::Table { function } => cmd_table(&cli, *function, capacity, out),
        Command::Oracle { function, argument } => cmd_oracle(&cli, *function, *argument, out),
        Command::Verify => Ok(cmd_verify(&cli, out)),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Capacity(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_CAPACITY
        }
    }
}

fn parity_message(function: Function) -> String {
    match function {
        Function::Beta => "beta closed forms exist at odd arguments only".into(),
        f => format!("{f} closed forms exist at even arguments >= 2 only"),
    }
}

fn checked_argument(function: Function, argument: i64) -> Result<u32, CliError> {
    let arg = u32::try_from(argument).map_err(|_| CliError::Usage(parity_message(function)))?;
    if !function.has_closed_form(arg) {
        return Err(CliError::Usage(parity_message(function)));
    }
    Ok(arg)
}

fn evaluator_for(
    function: Function,
    argument: u32,
    capacity: usize,
) -> Result<Evaluator, CliError> {
    let needed = Evaluator::required_index(function, argument);
    if needed > capacity {
        return Err(CliError::Capacity(format!(
            "{function}({argument}) needs table index {needed}, capacity is {capacity} (raise {TABLE_MAX_ENV})"
        )));
    }
    Ok(Evaluator::new(needed))
}

/// The JSON object for one value.
pub fn value_json(v: &SpecialValue, digits: u32) -> serde_json::Value {
    json!({
        "function": v.function.name(),
        "argument": v.argument,
        "coeff_num": v.value.coeff().numer().to_string(),
        "coeff_den": v.value.coeff().denom().to_string(),
        "pi_power": v.value.pi_power(),
        "decimal": render_decimal(&v.value, digits).to_string(),
    })
}

fn render(v: &SpecialValue, format: Format, digits: u32) -> String {
    match format {
        Format::Exact => v.value.to_string(),
        Format::Decimal => render_decimal(&v.value, digits).to_string(),
        Format::Json => value_json(v, digits).to_string(),
    }
}

fn cmd_eval(
    cli: &Cli,
    function: Function,
    argument: i64,
    capacity: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let arg = checked_argument(function, argument)?;
    let ev = evaluator_for(function, arg, capacity)?;
    let v = ev.evaluate(function, arg)?;
    let _ = writeln!(out, "{}", render(&v, cli.format, cli.digits));
    Ok(EXIT_OK)
}

fn cmd_table(
    cli: &Cli,
    function: Function,
    capacity: usize,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if cli.max_order == 0 {
        return Ok(EXIT_OK);
    }
    let last = function.argument_of_order(cli.max_order);
    let ev = evaluator_for(function, last, capacity)?;
    for order in 1..=cli.max_order {
        let arg = function.argument_of_order(order);
        let v = ev.evaluate(function, arg)?;
        let _ = match cli.format {
            Format::Json => writeln!(out, "{}", value_json(&v, cli.digits)),
            _ => writeln!(
                out,
                "{}\t{}\t{}",
                arg,
                v.value,
                render_decimal(&v.value, cli.digits)
            ),
        };
    }
    Ok(EXIT_OK)
}

/// Series estimate of `function(argument)`; β needs `s >= 1`, ζ and λ `s >= 2`.
pub fn series_estimate(function: Function, argument: u32, digits: u32) -> Option<SeriesEstimate> {
    match function {
        Function::Beta if argument >= 1 => Some(oracle::beta_series(argument, digits)),
        Function::Zeta if argument >= 2 => Some(oracle::zeta_series(argument, digits)),
        Function::Lambda if argument >= 2 => Some(oracle::lambda_series(argument, digits)),
        _ => None,
    }
}

fn cmd_oracle(
    cli: &Cli,
    function: Function,
    argument: i64,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let est = u32::try_from(argument)
        .ok()
        .and_then(|s| series_estimate(function, s, cli.digits))
        .ok_or_else(|| {
            let min = if function == Function::Beta { 1 } else { 2 };
            CliError::Usage(format!("the {function} series needs an argument >= {min}"))
        })?;
    let _ = writeln!(out, "{}", est.rounded(cli.digits));
    let _ = writeln!(
        out,
        "error_bound={} terms={}",
        est.error_bound.to_scientific(3),
        est.terms_used
    );
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, out: &mut dyn Write) -> i32 {
    let cfg = SuiteConfig {
        max_order: cli.max_order,
        digits: cli.digits,
        tolerance: cli.tolerance.clone(),
    };
    let suites = cli.suite.expand();
    let mut all_pass = true;
    for (suite, reports) in run_suites(&suites, &cfg) {
        for r in &reports {
            all_pass &= r.passed();
            let _ = writeln!(out, "{r}");
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        let _ = writeln!(
            out,
            "SUITE {} checks={} failed={}",
            suite.name(),
            reports.len(),
            failed
        );
    }
    if all_pass {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("beta-exact").chain(args.iter().copied());
        let code = run(argv, DEFAULT_TABLE_MAX, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_exact_headline_values() {
        assert_eq!(call(&["eval", "beta", "1"]).1, "1/4 * pi\n");
        assert_eq!(
            call(&["eval", "beta", "3", "--format", "exact"]).1,
            "1/32 * pi^3\n"
        );
        assert_eq!(call(&["eval", "beta", "5"]).1, "5/1536 * pi^5\n");
        assert_eq!(call(&["eval", "lambda", "2"]).1, "1/8 * pi^2\n");
    }

    #[test]
    fn eval_decimal() {
        let (code, out, _) = call(&["eval", "zeta", "2", "--format", "decimal", "--digits", "10"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1.6449340668\n");
    }

    #[test]
    fn eval_parity_errors() {
        let (code, _, err) = call(&["eval", "beta", "4"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("beta closed forms exist at odd arguments only"));
        assert_eq!(call(&["eval", "zeta", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "zeta", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "beta", "-3"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "gamma", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["eval", "beta", "3", "--digits", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn capacity_error() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["beta-exact", "eval", "zeta", "12"], 10, &mut out, &mut err);
        assert_eq!(code, EXIT_CAPACITY);
        let code = run(["beta-exact", "eval", "zeta", "10"], 10, &mut out, &mut err);
        assert_eq!(code, EXIT_OK);
        let code = run(
            ["beta-exact", "table", "beta", "--max-order", "7"],
            10,
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_CAPACITY);
    }

    #[test]
    fn json_round_trips_to_exact() {
        let (_, out, _) = call(&["eval", "beta", "7", "--format", "json", "--digits", "12"]);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            [
                "function",
                "argument",
                "coeff_num",
                "coeff_den",
                "pi_power",
                "decimal"
            ]
        );
        let rebuilt = format!(
            "{}/{} * pi^{}",
            v["coeff_num"].as_str().unwrap(),
            v["coeff_den"].as_str().unwrap(),
            v["pi_power"]
        );
        assert_eq!(rebuilt, call(&["eval", "beta", "7"]).1.trim());
        assert_eq!(v["function"], "beta");
        assert_eq!(v["argument"], 7);
    }

    #[test]
    fn table_rows() {
        let (code, out, _) = call(&["table", "beta", "--max-order", "3", "--digits", "5"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "1\t1/4 * pi\t0.78540\n3\t1/32 * pi^3\t0.96895\n5\t5/1536 * pi^5\t0.99616\n"
        );
        let (_, out, _) = call(&["table", "zeta", "--max-order", "1"]);
        assert!(out.starts_with("2\t1/6 * pi^2\t1.644934066848226436472415166646"));
        assert_eq!(out.lines().count(), 1);
        assert_eq!(
            call(&["table", "beta", "--max-order", "0"]),
            (0, String::new(), String::new())
        );
    }

    #[test]
    fn oracle_output() {
        let (code, out, _) = call(&["oracle", "beta", "1", "--digits", "20"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("0.78539816339744830962"));
        assert!(lines.next().unwrap().starts_with("error_bound="));
        assert_eq!(
            call(&["oracle", "zeta", "2", "--digits", "10"])
                .1
                .lines()
                .next(),
            Some("1.6449340668")
        );
        let series = call(&["oracle", "beta", "3", "--digits", "30"]).1;
        let closed = call(&["eval", "beta", "3", "--format", "decimal", "--digits", "30"]).1;
        assert_eq!(series.lines().next(), closed.lines().next());
        assert_eq!(call(&["oracle", "zeta", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["oracle", "beta", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
    }
}
