//! Command-line front end: `imbalance`, `rs`, and `verify`.
//!
//! Exit status: 0 on success, 1 when an identity check finds a violation,
//! 2 on usage, schema, or domain errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use skewtab::skew_rs::{self, Triple};
use skewtab::tableaux::{self, Tableau};
use skewtab::verify::{self, VerificationReport};
use skewtab::{Partition, SkewShape};

#[derive(Parser, Debug)]
#[command(name = "skewtab", version, about = "Skew RS correspondence and sign-imbalance tools")]
struct Cli {
    /// Worker threads (defaults to available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count standard tableaux of a skew shape and sum their signs.
    Imbalance {
        #[arg(long)]
        outer: Partition,
        #[arg(long, default_value = "")]
        inner: Partition,
    },
    /// Run the correspondence on a JSON file.
    Rs {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long)]
        input: PathBuf,
        /// Include the per-step insertion ledger (forward only).
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        assert_ledgers: bool,
    },
    /// Check one identity exhaustively.
    Verify {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long, default_value = "")]
        alpha: Partition,
        #[arg(long, default_value = "")]
        beta: Partition,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        assert_ledgers: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    Forward,
    Reverse,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Identity {
    TheoremMain,
    RoundTrip,
    Inout,
    Theorem2,
    CorollarySquare,
    CorollaryVanish,
    Theorem8,
    Counting,
    SignedSum,
}

#[derive(Serialize)]
struct ImbalanceReport {
    outer: Partition,
    inner: Partition,
    cells: u32,
    f: u128,
    imbalance: i128,
    positive: u128,
    negative: u128,
}

#[derive(Deserialize)]
struct ReverseInput {
    p: Tableau<u32>,
    q: Tableau<u32>,
    n: Option<u32>,
}

/// Usage-level failure (exit 2) vs. an identity violation (exit 1).
enum Outcome {
    Pass(String),
    Violation(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let (body, code) = match outcome {
        Outcome::Pass(b) => (b, 0),
        Outcome::Violation(b) => (b, 1),
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &body).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).context("writing stdout"),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Imbalance { outer, inner } => {
            let shape = SkewShape::new(outer.clone(), inner.clone())?;
            let f = tableaux::count_standard_tableaux(&shape);
            let i = tableaux::imbalance(&shape);
            let (pos, neg) = tableaux::sign_distribution(&shape);
            let report = ImbalanceReport {
                outer: outer.clone(),
                inner: inner.clone(),
                cells: shape.size(),
                f,
                imbalance: i,
                positive: pos,
                negative: neg,
            };
            let body = match cli.format {
                Format::Json => json(&report)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["outer", "inner", "cells", "f", "imbalance", "positive", "negative"])?;
                    w.write_record([
                        outer.to_string(),
                        inner.to_string(),
                        report.cells.to_string(),
                        f.to_string(),
                        i.to_string(),
                        pos.to_string(),
                        neg.to_string(),
                    ])?;
                    String::from_utf8(w.into_inner()?)?
                }
                Format::Text => format!("shape {shape}: f={f}, I={i}, positive={pos}, negative={neg}\n"),
            };
            Ok(Outcome::Pass(body))
        }
        Command::Rs { direction, input, trace, assert_ledgers } => {
            let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            let value = match direction {
                Direction::Forward => {
                    let triple: Triple = serde_json::from_str(&text).context("parsing triple")?;
                    let mut out = skew_rs::forward(&triple, *assert_ledgers)?;
                    if !trace {
                        out.trace.clear();
                    }
                    serde_json::to_value(&out)?
                }
                Direction::Reverse => {
                    let inp: ReverseInput = serde_json::from_str(&text).context("parsing (P, Q)")?;
                    if let Some(n) = inp.n {
                        if n as usize != inp.p.len() {
                            bail!("n = {n} but P has {} entries", inp.p.len());
                        }
                    }
                    serde_json::to_value(skew_rs::reverse(&inp.p, &inp.q)?)?
                }
            };
            Ok(Outcome::Pass(json(&value)?))
        }
        Command::Verify { identity, alpha, beta, n, m, assert_ledgers } => {
            let need = |v: &Option<u32>, flag: &str| v.with_context(|| format!("--{flag} is required"));
            eprintln!("checking {identity:?} ...");
            let report = match identity {
                Identity::TheoremMain => verify::check_theorem_main(alpha, positive(need(n, "n")?)?, *assert_ledgers),
                Identity::RoundTrip => verify::check_images_round_trip(alpha, positive(need(n, "n")?)?),
                Identity::Inout => verify::check_theorem_inout(alpha, positive(need(n, "n")?)?),
                Identity::Theorem2 => verify::check_theorem2(need(n, "n")?)?,
                Identity::CorollarySquare => verify::check_corollary_square(alpha)?,
                Identity::CorollaryVanish => verify::check_corollary_vanish(alpha, need(m, "m")?)?,
                Identity::Theorem8 => verify::check_theorem8(need(n, "n")?),
                Identity::Counting => verify::check_counting_identity(alpha, beta, need(n, "n")?, need(m, "m")?),
                Identity::SignedSum => verify::check_signed_sum(positive(need(n, "n")?)?),
            };
            eprintln!(
                "{} instances, {} violations, {:.3}s",
                report.instances,
                report.violation_count,
                report.elapsed.as_secs_f64()
            );
            let body = render_report(&report, cli.format)?;
            Ok(if report.passed { Outcome::Pass(body) } else { Outcome::Violation(body) })
        }
    }
}

fn positive(n: u32) -> anyhow::Result<u32> {
    if n == 0 {
        bail!("--n must be positive");
    }
    Ok(n)
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn render_report(report: &VerificationReport, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => json(report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(VerificationReport::CSV_HEADER)?;
            w.write_record(report.csv_record())?;
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let params: Vec<String> = report.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let mut s = format!(
                "{} [{}]: {} ({} instances)\n",
                report.identity,
                params.join(", "),
                if report.passed { "PASS" } else { "FAIL" },
                report.instances
            );
            if let (Some(l), Some(r)) = (&report.lhs, &report.rhs) {
                s.push_str(&format!("  lhs = {l}\n  rhs = {r}\n"));
            }
            for note in &report.notes {
                s.push_str(&format!("  {note}\n"));
            }
            for v in &report.violations {
                s.push_str(&format!("  violation: {v}\n"));
            }
            s
        }
    })
}
