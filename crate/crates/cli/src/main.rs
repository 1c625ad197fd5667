//! Batch front door: run the claim suites per stage, emit a JSON report,
//! and map the outcome onto the exit-code contract
//! (0 = all pass, 1 = claim failure, 2 = configuration/input error).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use coverforge_core::claims::{all_claims, run_stage, ClaimOutcome, ClaimStatus, DataInputs, Stage};

#[derive(Parser)]
#[command(
    name = "coverforge",
    about = "Group, representation, pipeline and verification claim suites"
)]
struct Cli {
    /// Key-value config file (y_equations, x_equations, report)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the JSON claim report to this file
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Only run the claim with this id (e.g. G2)
    #[arg(long, global = true)]
    claim: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coset enumeration, quotient and abelianization claims (G1-G5)
    Group,
    /// Representation-theoretic claims (G6-G7)
    Rep,
    /// Interpolation, divisor, multiplication-table and purity claims
    /// (P1, P2, P4, P6) plus the data-gated W stage (D1)
    Pipeline,
    /// Groebner/Hilbert, smoothness and diagonalization claims
    /// (P3, P5) plus the data-gated X stage (D2, D3)
    Verify,
    /// Every stage in order
    Run,
}

#[derive(Serialize)]
struct ReportEntry<'a> {
    #[serde(rename = "claim-id")]
    claim_id: &'a str,
    #[serde(rename = "paper-location")]
    paper_location: &'a str,
    expected: &'a str,
    computed: &'a str,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<&'a str>,
    #[serde(rename = "runtime-ms")]
    runtime_ms: u128,
}

#[derive(Serialize)]
struct Report<'a> {
    claims: Vec<ReportEntry<'a>>,
}

fn parse_config(path: &PathBuf) -> Result<BTreeMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {}: expected key = value", lineno + 1))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn read_optional(map: &BTreeMap<String, String>, key: &str) -> Result<Option<String>, String> {
    match map.get(key) {
        None => Ok(None),
        Some(path) => std::fs::read_to_string(path)
            .map(Some)
            .map_err(|e| format!("cannot read {key} file {path}: {e}")),
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    let config = match &cli.config {
        Some(p) => parse_config(p)?,
        None => BTreeMap::new(),
    };
    let inputs = DataInputs {
        y_equations: read_optional(&config, "y_equations")?,
        x_equations: read_optional(&config, "x_equations")?,
    };

    let mut outcomes: Vec<ClaimOutcome> = match cli.command {
        Command::Group => run_stage(Stage::Group, &inputs),
        Command::Rep => run_stage(Stage::Rep, &inputs),
        Command::Pipeline => run_stage(Stage::Pipeline, &inputs),
        Command::Verify => run_stage(Stage::Verify, &inputs),
        Command::Run => all_claims(&inputs),
    };
    if let Some(id) = &cli.claim {
        outcomes.retain(|o| o.id.eq_ignore_ascii_case(id));
        if outcomes.is_empty() {
            return Err(format!("no claim named '{id}' in the selected stage"));
        }
    }

    let mut any_fail = false;
    for o in &outcomes {
        let line = match &o.status {
            ClaimStatus::Pass => format!("{}: pass ({} ms) — {}", o.id, o.runtime_ms, o.computed),
            ClaimStatus::Fail => {
                any_fail = true;
                format!(
                    "{}: FAIL ({} ms) — expected {}; computed {}",
                    o.id, o.runtime_ms, o.expected, o.computed
                )
            }
            ClaimStatus::Skipped(reason) => format!("{}: {}", o.id, reason),
        };
        println!("{line}");
    }

    let report_path = cli
        .report
        .or_else(|| config.get("report").map(PathBuf::from));
    if let Some(path) = report_path {
        let report = Report {
            claims: outcomes
                .iter()
                .map(|o| ReportEntry {
                    claim_id: o.id,
                    paper_location: o.location,
                    expected: &o.expected,
                    computed: &o.computed,
                    pass: !matches!(o.status, ClaimStatus::Fail),
                    skipped: match &o.status {
                        ClaimStatus::Skipped(r) => Some(r.as_str()),
                        _ => None,
                    },
                    runtime_ms: o.runtime_ms,
                })
                .collect(),
        };
        let json = serde_json::to_string_pretty(&report)
            .map_err(|e| format!("report serialization failed: {e}"))?;
        std::fs::write(&path, json)
            .map_err(|e| format!("cannot write report {}: {e}", path.display()))?;
    }

    Ok(if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
