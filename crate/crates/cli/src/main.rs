//! `skb`: validate, analyze and factorize skew braces, study their
//! Yang-Baxter solutions, enumerate small catalogs and run property suites.
//!
//! Every run prints one JSON report on stdout (or a readable rendering with
//! `--pretty`). Exit status 0 means every check passed, 1 that a check
//! failed with a witness, 2 an input or usage error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::Value;
use skb_core::TOOL_VERSION;

use commands::{CliError, EnumerateOpts, FactorizeOpts, SolutionOpts};
use report::{render_pretty, ErrorInfo, RunReport};

#[derive(Parser)]
#[command(name = "skb", version, about = "Finite skew left braces and their Yang-Baxter solutions")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a group, brace or solution file.
    Validate { path: PathBuf },
    /// Ideals, socle, Fix, right series, simplicity and characteristic ideals of a brace.
    Analyze { path: PathBuf },
    /// Factorizations A = B + C through left ideals.
    Factorize {
        path: PathBuf,
        /// Both factors strong left ideals.
        #[arg(long)]
        strong: bool,
        /// Both factors trivial sub-braces.
        #[arg(long)]
        trivial: bool,
        /// Also list pairs with a factor equal to A.
        #[arg(long)]
        allow_improper: bool,
        /// Star products, A^(2) and the class bound for trivial-trivial factorizations.
        #[arg(long)]
        verify_ito: bool,
        /// Trivializing ideal and class <= 4 when a trivial factor is strong.
        #[arg(long = "verify-class4")]
        verify_class4: bool,
    },
    /// The solution r_A of a brace, or a solution file.
    Solution {
        path: PathBuf,
        /// Include the sigma and tau tables.
        #[arg(long)]
        export: bool,
        /// Include the retraction.
        #[arg(long)]
        retract: bool,
        /// Multipermutation level.
        #[arg(long)]
        level: bool,
        /// Decompositions from strong left ideals and from the orbit of 0.
        #[arg(long)]
        decompose: bool,
    },
    /// Catalog of braces of order n, one per isomorphism class.
    Enumerate {
        n: usize,
        /// Compare against the brute-force oracle (n <= 6).
        #[arg(long)]
        oracle_check: bool,
        /// Write brace files and manifest.json into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated predicates, e.g. add=C2^3,mult=D8,right_nilpotent=false.
        #[arg(long = "where")]
        filter: Option<String>,
    },
    /// Run a named property suite over the order-n catalog.
    Suite {
        name: String,
        n: usize,
        /// Collect every failure instead of stopping at the first.
        #[arg(long)]
        keep_going: bool,
    },
}

fn run(command: Command) -> Result<report::Body, CliError> {
    match command {
        Command::Validate { path } => commands::validate(&path),
        Command::Analyze { path } => commands::analyze_file(&path),
        Command::Factorize { path, strong, trivial, allow_improper, verify_ito, verify_class4 } => {
            commands::factorize(&path, &FactorizeOpts { strong, trivial, allow_improper, verify_ito, verify_class4 })
        }
        Command::Solution { path, export, retract, level, decompose } => {
            commands::solution(&path, &SolutionOpts { export, retract, level, decompose })
        }
        Command::Enumerate { n, oracle_check, out, filter } => {
            commands::enumerate(n, &EnumerateOpts { oracle_check, out, filter })
        }
        Command::Suite { name, n, keep_going } => commands::suite(&name, n, keep_going),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let echo: Vec<String> =
        std::iter::once("skb".to_string()).chain(std::env::args().skip(1)).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli.command);
    let timing_ms = start.elapsed().as_millis() as u64;

    let (report, code) = match outcome {
        Ok(body) => {
            let passed = body.verdicts.iter().all(|v| v.check.passed);
            let report = RunReport {
                command: echo,
                inputs: body.inputs,
                verdicts: body.verdicts,
                passed,
                result: body.result,
                error: None,
                timing_ms,
                tool_version: TOOL_VERSION,
            };
            (report, if passed { 0 } else { 1 })
        }
        Err(e) => {
            let report = RunReport {
                command: echo,
                inputs: Vec::new(),
                verdicts: Vec::new(),
                passed: false,
                result: Value::Null,
                error: Some(ErrorInfo { kind: e.kind(), message: e.to_string() }),
                timing_ms,
                tool_version: TOOL_VERSION,
            };
            (report, 2)
        }
    };
    if cli.pretty {
        print!("{}", render_pretty(&report));
    } else {
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    }
    ExitCode::from(code)
}
