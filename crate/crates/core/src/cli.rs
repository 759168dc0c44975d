//! Command-line front end. `run` renders everything into strings so the
//! binary stays a thin shell and the behaviour is testable in-process.
//!
//! Exit status: 0 success, 1 a cross-check disagreed, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::flexdeg::{self, cross_check, FlexReport, SignConvention};
use crate::qseries::{
    self, asym_flex, asym_yz_with, crossover, euler_power_neg24, Crossover,
    REMARK_FIRST_FLEX_DOMINANT,
};
use crate::render::{aligned, csv_string, json_string, log9, render_table, OutputFormat, TableRow};
use crate::selftest;

#[derive(Debug, Parser)]
#[command(
    name = "k3flex",
    version,
    about = "Flex divisor multiples of polarized K3 surfaces, computed exactly"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute n_d by one method or all of them.
    Nd {
        #[arg(short = 'd', long = "degree", value_parser = clap::value_parser!(u32).range(1..))]
        d: u32,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Tabulate every method over a range of d.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        from: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        to: u32,
    },
    /// Coefficients of prod (1 - q^n)^-24 up to q^max_n.
    Yz {
        #[arg(long = "max-n")]
        max_n: usize,
    },
    /// Compare n_d with the Yau-Zaslow multiple for d = 1..=max_d.
    Crossover {
        #[arg(long = "max-d", value_parser = clap::value_parser!(u32).range(1..))]
        max_d: u32,
    },
    /// Logarithms of the exact values against their asymptotic models.
    Asym {
        #[arg(short = 'd', long = "degree", required = true, num_args = 1.., value_parser = clap::value_parser!(u32).range(1..))]
        d: Vec<u32>,
        #[arg(long, value_enum, default_value_t = AsymKind::Both)]
        kind: AsymKind,
    },
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Factorial,
    Sum,
    Monomial,
    Schubert,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AsymKind {
    Flex,
    Yz,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    Disagreement,
    Usage,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Disagreement => 1,
            Status::Usage => 2,
        }
    }

    fn from_agreement(ok: bool) -> Self {
        if ok {
            Status::Success
        } else {
            Status::Disagreement
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn out(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> (Output, Status) {
    (
        Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Status::Usage,
    )
}

pub fn run(cli: &Cli) -> (Output, Status) {
    let format = cli.format;
    match &cli.command {
        Command::Nd { d, method } => cmd_nd(*d, *method, format),
        Command::Table { from, to } => cmd_table(*from, *to, format),
        Command::Yz { max_n } => cmd_yz(*max_n, format),
        Command::Crossover { max_d } => cmd_crossover(*max_d, format),
        Command::Asym { d, kind } => cmd_asym(d, *kind, format),
        Command::Selftest => cmd_selftest(SignConvention::Calibrated, format),
    }
}

#[derive(Serialize)]
struct SingleValue {
    d: u32,
    method: Method,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    raw: Option<String>,
}

pub fn cmd_nd(d: u32, method: Method, format: OutputFormat) -> (Output, Status) {
    if method == Method::All {
        let report = match FlexReport::compute(d) {
            Ok(r) => r,
            Err(e) => return usage(e),
        };
        let status = Status::from_agreement(report.agree);
        let text = match format {
            OutputFormat::Json => json_string(&TableRow::from(&report)),
            _ => render_table(std::slice::from_ref(&report), format),
        };
        return (Output::out(text), status);
    }

    let (value, raw) = match single_method(d, method) {
        Ok(v) => v,
        Err(e) => return usage(e),
    };
    let text = match format {
        OutputFormat::Text => format!("{value}\n"),
        OutputFormat::Csv => {
            let method_name = method
                .to_possible_value()
                .expect("not skipped")
                .get_name()
                .to_string();
            let mut row = vec![d.to_string(), method_name, value];
            let mut header = vec!["d", "method", "value"];
            if let Some(raw) = raw {
                header.push("raw");
                row.push(raw);
            }
            csv_string(&header, &[row])
        }
        OutputFormat::Json => json_string(&SingleValue {
            d,
            method,
            value,
            raw,
        }),
    };
    (Output::out(text), Status::Success)
}

fn single_method(d: u32, method: Method) -> crate::Result<(String, Option<String>)> {
    let value = match method {
        Method::Closed => flexdeg::nd_closed(d)?,
        Method::Factorial => flexdeg::nd_factorial(d)?,
        Method::Sum => {
            let s = flexdeg::nd_double_sum(d)?;
            return Ok((s.resolved.to_string(), Some(s.raw.to_string())));
        }
        Method::Monomial => flexdeg::nd_chern_monomial(d)?,
        Method::Schubert => flexdeg::nd_chern_schubert(d)?,
        Method::All => unreachable!("handled by caller"),
    };
    Ok((value.to_string(), None))
}

pub fn cmd_table(from: u32, to: u32, format: OutputFormat) -> (Output, Status) {
    if from == 0 || from > to {
        return usage(format!("invalid range --from {from} --to {to}"));
    }
    match cross_check(from, to) {
        Ok(reports) => {
            let status = Status::from_agreement(reports.iter().all(|r| r.agree));
            (Output::out(render_table(&reports, format)), status)
        }
        Err(e) => usage(e),
    }
}

#[derive(Serialize)]
struct SeriesEntry {
    n: usize,
    coefficient: String,
}

pub fn cmd_yz(max_n: usize, format: OutputFormat) -> (Output, Status) {
    let series = euler_power_neg24(max_n);
    let rows: Vec<Vec<String>> = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, a)| vec![n.to_string(), a.to_string()])
        .collect();
    let text = match format {
        OutputFormat::Text => aligned(&["n", "coefficient"], &rows),
        OutputFormat::Csv => csv_string(&["n", "coefficient"], &rows),
        OutputFormat::Json => {
            let entries: Vec<SeriesEntry> = series
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, a)| SeriesEntry {
                    n,
                    coefficient: a.to_string(),
                })
                .collect();
            json_string(&entries)
        }
    };
    (Output::out(text), Status::Success)
}

const REMARK_CLAIM: &str = "between d=8 and d=9";

#[derive(Serialize)]
struct CrossoverJson<'a> {
    #[serde(flatten)]
    crossover: &'a Crossover,
    remark_claim: &'static str,
    remark_first_flex_dominant: u32,
    agrees_with_remark: bool,
}

fn fmt_opt(d: Option<u32>) -> String {
    d.map_or_else(|| "none".to_string(), |d| d.to_string())
}

fn crossover_summary(c: &Crossover) -> String {
    let mut s = String::new();
    match c.first_flex_dominant {
        Some(d) => s.push_str(&format!("first d with n_d > [q^(d+1)]: {d}\n")),
        None => s.push_str(&format!("no crossover for d <= {}\n", c.max_d)),
    }
    let verdict = if c.agrees_with_remark() {
        "agrees"
    } else {
        "differs"
    };
    s.push_str(&format!(
        "remark claims the switch occurs {REMARK_CLAIM} (first flex-dominant d = {REMARK_FIRST_FLEX_DOMINANT}): {verdict}\n"
    ));
    s.push_str(&format!(
        "first d with n_d > [q^d]: {}\n",
        fmt_opt(c.first_flex_dominant_q_d)
    ));
    s.push_str(&format!(
        "first d where the asymptotic models cross: {}\n",
        fmt_opt(c.first_model_flex_dominant)
    ));
    s.push_str(&format!(
        "flex stays dominant through d = {}: {}\n",
        c.max_d,
        if c.permanent { "yes" } else { "NO" }
    ));
    s
}

pub fn cmd_crossover(max_d: u32, format: OutputFormat) -> (Output, Status) {
    let c = match crossover(max_d) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let header = ["d", "n_d", "yz_d", "flex_larger"];
    let rows: Vec<Vec<String>> = c
        .rows
        .iter()
        .map(|r| {
            vec![
                r.d.to_string(),
                r.n_d.to_string(),
                r.yz_d.to_string(),
                r.flex_larger.to_string(),
            ]
        })
        .collect();
    let output = match format {
        OutputFormat::Text => Output::out(format!(
            "{}\n{}",
            aligned(&header, &rows),
            crossover_summary(&c)
        )),
        OutputFormat::Csv => Output {
            stdout: csv_string(&header, &rows),
            stderr: crossover_summary(&c),
        },
        OutputFormat::Json => Output::out(json_string(&CrossoverJson {
            crossover: &c,
            remark_claim: REMARK_CLAIM,
            remark_first_flex_dominant: REMARK_FIRST_FLEX_DOMINANT,
            agrees_with_remark: c.agrees_with_remark(),
        })),
    };
    (output, Status::from_agreement(c.permanent))
}

#[derive(Serialize)]
struct AsymRow {
    kind: &'static str,
    d: u32,
    log_exact: f64,
    log_model: f64,
    log_ratio: f64,
}

fn round9(x: f64) -> f64 {
    (x * 1e9).round() / 1e9
}

pub fn cmd_asym(ds: &[u32], kind: AsymKind, format: OutputFormat) -> (Output, Status) {
    let mut rows = Vec::new();
    if matches!(kind, AsymKind::Flex | AsymKind::Both) {
        for &d in ds {
            match asym_flex(d) {
                Ok(r) => rows.push(("flex", r)),
                Err(e) => return usage(e),
            }
        }
    }
    if matches!(kind, AsymKind::Yz | AsymKind::Both) {
        let max_d = ds.iter().copied().max().unwrap_or(1);
        let series = euler_power_neg24(max_d as usize + 1);
        for &d in ds {
            match asym_yz_with(&series, d) {
                Ok(r) => rows.push(("yz", r)),
                Err(e) => return usage(e),
            }
        }
    }
    let header = ["kind", "d", "log_exact", "log_model", "log_ratio"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(k, r)| {
            vec![
                k.to_string(),
                r.d.to_string(),
                log9(r.log_exact),
                log9(r.log_model),
                log9(r.log_ratio),
            ]
        })
        .collect();
    let text = match format {
        OutputFormat::Text => aligned(&header, &cells),
        OutputFormat::Csv => csv_string(&header, &cells),
        OutputFormat::Json => {
            let out: Vec<AsymRow> = rows
                .iter()
                .map(|(kind, r): &(&'static str, qseries::AsymReport)| AsymRow {
                    kind,
                    d: r.d,
                    log_exact: round9(r.log_exact),
                    log_model: round9(r.log_model),
                    log_ratio: round9(r.log_ratio),
                })
                .collect();
            json_string(&out)
        }
    };
    (Output::out(text), Status::Success)
}

pub fn cmd_selftest(convention: SignConvention, format: OutputFormat) -> (Output, Status) {
    let results = selftest::run(convention);
    let passed = results.iter().all(|c| c.passed);
    let text = match format {
        OutputFormat::Json => json_string(&results),
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|c| vec![c.name.to_string(), c.passed.to_string(), c.detail.clone()])
                .collect();
            csv_string(&["check", "passed", "detail"], &rows)
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for c in &results {
                if c.passed {
                    s.push_str(&format!("ok    {}\n", c.name));
                } else {
                    s.push_str(&format!("FAIL  {}: {}\n", c.name, c.detail));
                }
            }
            s
        }
    };
    (Output::out(text), Status::from_agreement(passed))
}
