use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;
use weyl_order::arith::{choose, fmt_rational, parse_rational};
use weyl_order::harness::{cells_for, run_cells, thm2_closed_form, tmn_bruteforce, tmn_words, HarnessError, UnknownIdentity};
use weyl_order::mp::mp_real_form;
use weyl_order::rewrite::rewrite_word;
use weyl_order::{CheckReport, IdentityId, Rational, SweepConfig, Verdict, WeylElement};

use crate::expr::{parse_and_lower, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    UnknownIdentity(#[from] UnknownIdentity),
    #[error("malformed range `{0}` (expected `A..B` or `A`)")]
    MalformedRange(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

impl CliError {
    /// 2 for usage and parse errors, 3 when a resource cap is exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Harness(HarnessError::CapExceeded { .. }) => 3,
            CliError::Harness(_) => 1,
            _ => 2,
        }
    }
}

/// Rendered command output with the process exit status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit_code: u8,
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>, CliError> {
    let bad = || CliError::MalformedRange(s.to_string());
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (s.trim(), s.trim()),
    };
    let a: u32 = a.parse().map_err(|_| bad())?;
    let b: u32 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

pub fn parse_rational_arg(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| CliError::MalformedRational(s.to_string()))
}

fn csv_line(fields: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

#[derive(Serialize)]
struct NormalizeRecord<'a> {
    input: &'a str,
    normal_form: String,
}

pub fn cmd_normalize(input: &str, format: Format) -> Result<Output, CliError> {
    let x = parse_and_lower(input)?;
    let text = match format {
        Format::Text => format!("{x}\n"),
        Format::Json => {
            let rec = NormalizeRecord { input, normal_form: x.to_string() };
            format!("{}\n", serde_json::to_string(&rec).expect("serializable"))
        }
        Format::Csv => csv_line(&["input", "normal_form"]) + &csv_line(&[input, &x.to_string()]),
    };
    Ok(Output { text, exit_code: 0 })
}

fn render_reports(reports: &[CheckReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => {
            for r in reports {
                out.push_str(&serde_json::to_string(r).expect("serializable"));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(&csv_line(&["identity", "variant", "params", "verdict", "lhs", "rhs", "detail"]));
            for r in reports {
                let variant = serde_json::to_value(r.variant).expect("serializable");
                out.push_str(&csv_line(&[
                    r.identity.as_str(),
                    variant.as_str().unwrap_or_default(),
                    &r.params.to_string(),
                    &r.verdict.to_string(),
                    &r.lhs,
                    &r.rhs,
                    r.detail.as_deref().unwrap_or(""),
                ]));
            }
        }
        Format::Text => {
            let rows: Vec<[String; 5]> = reports
                .iter()
                .map(|r| {
                    let variant = match r.variant {
                        weyl_order::Variant::Stated => "",
                        weyl_order::Variant::DerivedMirror => " (mirror)",
                    };
                    let tail = match (&r.verdict, &r.detail) {
                        (Verdict::Pass, _) => r.lhs.clone(),
                        (_, Some(d)) if r.lhs.is_empty() => d.clone(),
                        (_, d) => format!(
                            "{} != {}{}",
                            r.lhs,
                            r.rhs,
                            d.as_ref().map(|d| format!("  [{d}]")).unwrap_or_default()
                        ),
                    };
                    [
                        format!("{}{variant}", r.identity),
                        r.params.to_string(),
                        r.verdict.to_string(),
                        tail,
                        String::new(),
                    ]
                })
                .collect();
            let w0 = rows.iter().map(|r| r[0].len()).max().unwrap_or(0).max(8);
            let w1 = rows.iter().map(|r| r[1].len()).max().unwrap_or(0).max(6);
            let _ = writeln!(out, "{:w0$}  {:w1$}  {:7}  {}", "IDENTITY", "PARAMS", "VERDICT", "VALUE");
            for r in &rows {
                let _ = writeln!(out, "{:w0$}  {:w1$}  {:7}  {}", r[0], r[1], r[2], r[3]);
            }
            let count = |v| reports.iter().filter(|r| r.verdict == v).count();
            let _ = writeln!(
                out,
                "{} cells: {} pass, {} fail, {} error",
                reports.len(),
                count(Verdict::Pass),
                count(Verdict::Fail),
                count(Verdict::Error)
            );
        }
    }
    out
}

/// Exit status for a sweep: 0 all pass, 1 any failure, 3 only cap errors.
pub fn sweep_exit_code(reports: &[CheckReport]) -> u8 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().any(|r| r.verdict == Verdict::Error) {
        let all_cap = reports
            .iter()
            .filter(|r| r.verdict == Verdict::Error)
            .all(|r| r.detail.as_deref().is_some_and(|d| d.contains("cap")));
        if all_cap {
            3
        } else {
            1
        }
    } else {
        0
    }
}

pub fn cmd_verify(
    identity: &str,
    ms: &str,
    ns: &str,
    cfg: &SweepConfig,
    format: Format,
) -> Result<Output, CliError> {
    let id: IdentityId = identity.parse()?;
    let cells = cells_for(id, parse_range(ms)?, parse_range(ns)?);
    let reports = run_cells(&cells, cfg);
    Ok(Output { text: render_reports(&reports, format), exit_code: sweep_exit_code(&reports) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Tmn,
    Mp,
}

#[derive(Serialize)]
struct TmnRow {
    m: u32,
    n: u32,
    words: String,
    normal_form: String,
}

#[derive(Serialize)]
struct MpRow {
    n: u32,
    alpha: String,
    coefficients: Vec<String>,
    polynomial: String,
}

pub fn cmd_table(kind: TableKind, max: u32, alpha: &Rational, format: Format) -> Result<Output, CliError> {
    let mut out = String::new();
    match kind {
        TableKind::Tmn => {
            let rows: Vec<TmnRow> = (0..=max)
                .flat_map(|total| (0..=total).rev().map(move |m| (m, total - m)))
                .map(|(m, n)| TmnRow {
                    m,
                    n,
                    words: choose(m + n, m).to_string(),
                    normal_form: thm2_closed_form(m, n).to_string(),
                })
                .collect();
            match format {
                Format::Json => rows.iter().for_each(|r| {
                    let _ = writeln!(out, "{}", serde_json::to_string(r).expect("serializable"));
                }),
                Format::Csv => {
                    out.push_str(&csv_line(&["m", "n", "words", "normal_form"]));
                    for r in &rows {
                        out.push_str(&csv_line(&[&r.m.to_string(), &r.n.to_string(), &r.words, &r.normal_form]));
                    }
                }
                Format::Text => {
                    let _ = writeln!(out, "{:>3} {:>3} {:>7}  T_(m,n)", "m", "n", "words");
                    for r in &rows {
                        let _ = writeln!(out, "{:>3} {:>3} {:>7}  {}", r.m, r.n, r.words, r.normal_form);
                    }
                }
            }
        }
        TableKind::Mp => {
            let rows: Vec<MpRow> = (0..=max)
                .map(|n| {
                    let f = mp_real_form(n, alpha);
                    MpRow {
                        n,
                        alpha: fmt_rational(alpha),
                        coefficients: f.coeffs().iter().map(fmt_rational).collect(),
                        polynomial: f.to_string(),
                    }
                })
                .collect();
            match format {
                Format::Json => rows.iter().for_each(|r| {
                    let _ = writeln!(out, "{}", serde_json::to_string(r).expect("serializable"));
                }),
                Format::Csv => {
                    out.push_str(&csv_line(&["n", "alpha", "coefficients", "polynomial"]));
                    for r in &rows {
                        out.push_str(&csv_line(&[&r.n.to_string(), &r.alpha, &r.coefficients.join(" "), &r.polynomial]));
                    }
                }
                Format::Text => {
                    let _ = writeln!(out, "{:>3} {:>5}  Q_n^(alpha)(x)", "n", "alpha");
                    for r in &rows {
                        let _ = writeln!(out, "{:>3} {:>5}  {}", r.n, r.alpha, r.polynomial);
                    }
                }
            }
        }
    }
    Ok(Output { text: out, exit_code: 0 })
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub m: u32,
    pub n: u32,
    pub words: u64,
    pub closed_form_us: f64,
    pub rewriting_us: f64,
    pub speedup: f64,
    pub agree: bool,
}

fn median_us(samples: &mut [f64]) -> f64 {
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}

/// Times `T_{m,n}` (with `m = ceil(N/2)`, `n = floor(N/2)`) for each
/// `N <= max` using closed-form block reduction and single-step rewriting.
pub fn bench_rows(max: u32, reps: u32, cap: u64) -> Result<Vec<BenchRow>, CliError> {
    let reps = reps.max(1);
    let mut rows = Vec::new();
    for total in 1..=max {
        let (m, n) = (total - total / 2, total / 2);
        let mut closed = Vec::new();
        let mut rewriting = Vec::new();
        let mut agree = true;
        for _ in 0..reps {
            let start = Instant::now();
            let a = tmn_bruteforce(m, n, cap)?;
            closed.push(start.elapsed().as_secs_f64() * 1e6);
            let start = Instant::now();
            let b = tmn_words(m, n).fold(WeylElement::zero(), |acc, w| &acc + &rewrite_word(&w));
            rewriting.push(start.elapsed().as_secs_f64() * 1e6);
            agree &= a == b;
        }
        let (c, r) = (median_us(&mut closed), median_us(&mut rewriting));
        rows.push(BenchRow {
            m,
            n,
            words: choose(m + n, m).try_into().unwrap_or(u64::MAX),
            closed_form_us: c,
            rewriting_us: r,
            speedup: if c > 0.0 { r / c } else { f64::INFINITY },
            agree,
        });
    }
    Ok(rows)
}

pub fn cmd_bench(max: u32, reps: u32, cap: u64, format: Format) -> Result<Output, CliError> {
    let rows = bench_rows(max, reps, cap)?;
    let mut out = String::new();
    match format {
        Format::Json => rows.iter().for_each(|r| {
            let _ = writeln!(out, "{}", serde_json::to_string(r).expect("serializable"));
        }),
        Format::Csv => {
            out.push_str(&csv_line(&["m", "n", "words", "closed_form_us", "rewriting_us", "speedup", "agree"]));
            for r in &rows {
                out.push_str(&csv_line(&[
                    &r.m.to_string(),
                    &r.n.to_string(),
                    &r.words.to_string(),
                    &format!("{:.1}", r.closed_form_us),
                    &format!("{:.1}", r.rewriting_us),
                    &format!("{:.2}", r.speedup),
                    &r.agree.to_string(),
                ]));
            }
        }
        Format::Text => {
            let _ = writeln!(
                out,
                "{:>3} {:>3} {:>7} {:>14} {:>14} {:>9}  agree",
                "m", "n", "words", "closed (us)", "rewrite (us)", "speedup"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:>3} {:>3} {:>7} {:>14.1} {:>14.1} {:>8.2}x  {}",
                    r.m, r.n, r.words, r.closed_form_us, r.rewriting_us, r.speedup, r.agree
                );
            }
        }
    }
    let exit_code = if rows.iter().all(|r| r.agree) { 0 } else { 1 };
    Ok(Output { text: out, exit_code })
}
