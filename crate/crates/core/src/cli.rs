//! Command-line front end: `expand`, `verify`, `catalog`, `dissect`.
//!
//! Exit codes: 0 success, 1 identity failed, 2 usage or parse error, 3 evaluation error.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{
    builtin_catalog, evaluate, find_identity, verify_all, verify_identity_in, Identity, Report,
    RunDocument, Status, DEFAULT_DEGREE,
};
use crate::dissect::{dissect_closed, dissect_filter, DissectionSpec};
use crate::exprlang::{parse_expr, print_expr, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EVAL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Filter,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Jobs {
    Auto,
    Fixed(usize),
}

fn parse_jobs(s: &str) -> Result<Jobs, String> {
    if s == "auto" {
        return Ok(Jobs::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(Jobs::Fixed(n)),
        _ => Err(format!("expected a positive integer or 'auto', got '{s}'")),
    }
}

#[derive(Debug, Parser)]
#[command(name = "qtheta", version, about = "Exact expansion and verification of theta function identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation degree (total degree in a and b).
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE, value_parser = clap::value_parser!(i64).range(0..))]
    degree: i64,

    /// Working cyclotomic order; must be a multiple of every root order used.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    order: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write results here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for catalog and dissection grids.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_jobs)]
    jobs: Jobs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand an expression as a truncated series.
    Expand { expr: String },
    /// Verify an identity `lhs = rhs`.
    Verify { identity: String },
    /// Verify built-in identities (all of them when no names are given).
    Catalog {
        names: Vec<String>,
        /// Also print both sides' series.
        #[arg(long)]
        show: bool,
        /// List names and statements without verifying.
        #[arg(long)]
        list: bool,
    },
    /// Compare the filtered and closed-form residue components S_k.
    Dissect {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, value_enum, default_value_t = Mode::Both)]
        mode: Mode,
    },
}

/// Resolved settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub degree: i64,
    pub order: Option<u64>,
    pub format: Format,
    pub jobs: Jobs,
    pub out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn parse(input: &str, e: &ParseError) -> Self {
        let mut message = format!("parse error: {e}");
        if let Some(offset) = e.offset() {
            message.push_str(&format!("\n  {input}\n  {}^", " ".repeat(offset)));
        }
        Self::usage(message)
    }
}

/// Runs the CLI with explicit argument list and streams; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
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
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let config = RunConfig {
        degree: cli.degree,
        order: cli.order,
        format: cli.format,
        jobs: cli.jobs,
        out: cli.out.clone(),
    };
    let mut buffer = Vec::new();
    let result = dispatch(&cli.command, &config, &mut buffer);
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.message);
            f.code
        }
    };
    let written = match &config.out {
        Some(path) => File::create(path).and_then(|mut file| file.write_all(&buffer)),
        None => stdout.write_all(&buffer),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

fn dispatch(command: &Command, config: &RunConfig, out: &mut Vec<u8>) -> Result<i32, Failure> {
    match command {
        Command::Expand { expr } => cmd_expand(expr, config, out),
        Command::Verify { identity } => cmd_verify(identity, config, out),
        Command::Catalog { names, show, list } => {
            if *list {
                cmd_list(out)
            } else {
                cmd_catalog(names, *show, config, out)
            }
        }
        Command::Dissect { m, k, mode } => cmd_dissect(*m, *k, *mode, config, out),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::usage(format!("cannot write output: {e}"))
}

fn emit_json(value: &impl Serialize, out: &mut Vec<u8>) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::usage(e.to_string()))?;
    out.push(b'\n');
    Ok(())
}

fn working_order(required: u64, config: &RunConfig) -> Result<u64, Failure> {
    match config.order {
        None => Ok(required),
        Some(l) if l % required == 0 => Ok(l),
        Some(l) => Err(Failure::usage(format!(
            "--order {l} is not a multiple of the required root order {required}"
        ))),
    }
}

fn with_pool<R: Send>(jobs: Jobs, f: impl FnOnce() -> R + Send) -> Result<R, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Jobs::Fixed(n) = jobs {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Failure::usage(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Serialize)]
struct ExpandOutput {
    expr: String,
    degree: i64,
    order: u64,
    validity: String,
    terms: usize,
    series: String,
}

fn cmd_expand(expr_text: &str, config: &RunConfig, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let expr = parse_expr(expr_text).map_err(|e| Failure::parse(expr_text, &e))?;
    let order = working_order(expr.root_order(), config)?;
    let series = evaluate(&expr, config.degree, order).map_err(|e| Failure {
        code: EXIT_EVAL,
        message: format!("evaluation error: {e}"),
    })?;
    match config.format {
        Format::Text => {
            writeln!(out, "{series}").map_err(io_failure)?;
            writeln!(
                out,
                "# exact through total degree {} in Q(zeta_{order})",
                series.validity()
            )
            .map_err(io_failure)?;
        }
        Format::Json => emit_json(
            &ExpandOutput {
                expr: print_expr(&expr),
                degree: config.degree,
                order,
                validity: series.validity().to_string(),
                terms: series.len(),
                series: series.to_string(),
            },
            out,
        )?,
    }
    Ok(EXIT_OK)
}

fn exit_code_for(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Error) {
        EXIT_EVAL
    } else if reports.iter().any(|r| r.status == Status::Failed) {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn write_report_text(r: &Report, out: &mut Vec<u8>) -> io::Result<()> {
    write!(out, "{:<18} {:<8} degree {}", r.name, r.status.as_str(), r.degree)?;
    match (&r.first_mismatch, &r.error) {
        (Some(m), _) => writeln!(
            out,
            "  first mismatch at {}: lhs {}, rhs {}",
            m.monomial, m.lhs, m.rhs
        ),
        (None, Some(e)) => writeln!(out, "  {e}"),
        (None, None) => writeln!(out, "  lhs {} terms, rhs {} terms", r.lhs_terms, r.rhs_terms),
    }
}

fn cmd_verify(identity_text: &str, config: &RunConfig, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let id = Identity::parse("input", identity_text, "command line")
        .map_err(|e| Failure::parse(identity_text, &e))?;
    let order = working_order(id.required_order, config)?;
    let report = verify_identity_in(&id, config.degree, order);
    let code = exit_code_for(std::slice::from_ref(&report));
    match config.format {
        Format::Text => write_report_text(&report, out).map_err(io_failure)?,
        Format::Json => emit_json(&RunDocument::new(vec![report]), out)?,
    }
    Ok(code)
}

fn cmd_list(out: &mut Vec<u8>) -> Result<i32, Failure> {
    for id in builtin_catalog() {
        writeln!(out, "{:<18} {}", id.name, id.render()).map_err(io_failure)?;
    }
    Ok(EXIT_OK)
}

fn cmd_catalog(
    names: &[String],
    show: bool,
    config: &RunConfig,
    out: &mut Vec<u8>,
) -> Result<i32, Failure> {
    let catalog = builtin_catalog();
    let selected: Vec<Identity> = if names.is_empty() || names.iter().any(|n| n == "all") {
        catalog.clone()
    } else {
        names
            .iter()
            .map(|n| {
                find_identity(&catalog, n)
                    .cloned()
                    .ok_or_else(|| Failure::usage(format!("unknown identity name: {n}")))
            })
            .collect::<Result<_, _>>()?
    };
    for id in &selected {
        working_order(id.required_order, config)
            .map_err(|f| Failure::usage(format!("{} (identity {})", f.message, id.name)))?;
    }
    let degree = config.degree;
    let reports = with_pool(config.jobs, || verify_all(&selected, Some(degree), config.order))?;
    let code = exit_code_for(&reports);
    match config.format {
        Format::Text => {
            for r in &reports {
                write_report_text(r, out).map_err(io_failure)?;
                if show {
                    let id = find_identity(&selected, &r.name).expect("report for a selected identity");
                    let order = config.order.unwrap_or(id.required_order);
                    if let Ok((l, rhs)) = id.evaluate_sides(degree, order) {
                        writeln!(out, "  lhs: {l}").map_err(io_failure)?;
                        writeln!(out, "  rhs: {rhs}").map_err(io_failure)?;
                    }
                }
            }
            let s = crate::catalog::Summary::of(&reports);
            writeln!(
                out,
                "summary: total {}, verified {}, failed {}, error {}",
                s.total, s.verified, s.failed, s.error
            )
            .map_err(io_failure)?;
        }
        Format::Json => emit_json(&RunDocument::new(reports), out)?,
    }
    Ok(code)
}

#[derive(Serialize)]
struct DissectRow {
    k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    filter: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

#[derive(Serialize)]
struct DissectOutput {
    m: i64,
    degree: i64,
    mode: &'static str,
    results: Vec<DissectRow>,
}

fn cmd_dissect(
    m: i64,
    k: Option<i64>,
    mode: Mode,
    config: &RunConfig,
    out: &mut Vec<u8>,
) -> Result<i32, Failure> {
    let ks: Vec<i64> = match k {
        Some(k) => vec![k],
        None if m >= 1 => (0..m).collect(),
        None => vec![0],
    };
    let specs = ks
        .iter()
        .map(|&k| DissectionSpec::new(m, k).map_err(|e| Failure::usage(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let degree = config.degree;
    let rows: Vec<DissectRow> = with_pool(config.jobs, || {
        specs
            .par_iter()
            .map(|spec| {
                let filter = (mode != Mode::Closed).then(|| dissect_filter(spec, degree));
                let closed = (mode != Mode::Filter).then(|| dissect_closed(spec, degree));
                let agree = match (&filter, &closed) {
                    (Some(x), Some(y)) => Some(x.equal_through(y, degree) == Ok(None)),
                    _ => None,
                };
                DissectRow {
                    k: spec.k(),
                    filter: filter.map(|s| s.to_string()),
                    closed: closed.map(|s| s.to_string()),
                    agree,
                }
            })
            .collect()
    })?;
    let all_agree = rows.iter().all(|r| r.agree != Some(false));
    match config.format {
        Format::Text => {
            for row in &rows {
                if let Some(s) = &row.filter {
                    writeln!(out, "m={m} k={} filter: {s}", row.k).map_err(io_failure)?;
                }
                if let Some(s) = &row.closed {
                    writeln!(out, "m={m} k={} closed: {s}", row.k).map_err(io_failure)?;
                }
                if let Some(agree) = row.agree {
                    let verdict = if agree { "agree" } else { "DISAGREE" };
                    writeln!(out, "m={m} k={} {verdict}", row.k).map_err(io_failure)?;
                }
            }
            if mode == Mode::Both {
                let agreed = rows.iter().filter(|r| r.agree == Some(true)).count();
                writeln!(out, "{agreed}/{} agree through degree {degree}", rows.len())
                    .map_err(io_failure)?;
            }
        }
        Format::Json => emit_json(
            &DissectOutput {
                m,
                degree,
                mode: match mode {
                    Mode::Filter => "filter",
                    Mode::Closed => "closed",
                    Mode::Both => "both",
                },
                results: rows,
            },
            out,
        )?,
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_FAILED })
}
