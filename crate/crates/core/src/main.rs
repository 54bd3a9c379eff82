use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use albert::exact::VectorQ;
use albert::exceptional::{fermion_assign, Family};
use albert::jordan::{spectral_resolution, AlgebraSpec};
use albert::report::Check;
use albert::suites::{derivation_dims, run_suite, Report, SuiteSpec, SUITES};
use albert::{AlbertError, Result};

#[derive(Parser)]
#[command(name = "albert", version, about = "Exact checks for octonions, Jordan algebras and their calculi")]
struct Cli {
    /// Write the JSON output here instead of stdout.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or more verification suites.
    Verify {
        /// Suite names, or `all`.
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
        /// Positional alternative to `--suite`.
        #[arg(value_name = "SUITE")]
        positional: Vec<String>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tolerance: Option<f64>,
        /// JSON algebra description used by suites that accept one.
        #[arg(long, value_name = "FILE")]
        algebra: Option<PathBuf>,
    },
    /// Spectral resolution of an element given as `{"algebra": …, "element": […]}`.
    Spectral { input: PathBuf },
    /// The fermion slot table of one family, or both.
    Fermions {
        #[arg(default_value = "both")]
        family: String,
    },
    /// Derivation algebra dimensions.
    Dims,
}

#[derive(Deserialize)]
struct ElementFile {
    algebra: AlgebraSpec,
    element: VectorQ,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    reports: Vec<Report>,
}

enum Failure {
    Checks,
    Usage(String),
}

impl From<AlbertError> for Failure {
    fn from(e: AlbertError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
}

fn emit(path: Option<&Path>, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn summarize(checks: &[Check], suite: &str) {
    for c in checks {
        let status = if c.passed { "pass" } else { "FAIL" };
        match &c.witness {
            Some(w) => eprintln!("{status} {suite}/{} ({w})", c.name),
            None => eprintln!("{status} {suite}/{}", c.name),
        }
    }
}

fn verify(cli_json: Option<&Path>, names: Vec<String>, trials: Option<usize>, seed: u64, tolerance: Option<f64>, algebra: Option<PathBuf>) -> std::result::Result<(), Failure> {
    if names.is_empty() {
        return Err(Failure::Usage(format!("no suite given; expected one of {} or all", SUITES.join(", "))));
    }
    let mut suites: Vec<String> = if names.iter().any(|n| n == "all") { SUITES.iter().map(|s| s.to_string()).collect() } else { names };
    suites.sort();
    suites.dedup();
    if let Some(bad) = suites.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(Failure::Usage(format!("unknown suite '{bad}'; expected one of {}", SUITES.join(", "))));
    }
    let algebra = algebra.map(|p| read_json::<AlgebraSpec>(&p)).transpose()?;
    let specs: Vec<SuiteSpec> = suites
        .iter()
        .map(|s| SuiteSpec { suite: s.clone(), trials, seed, tolerance, algebra: algebra.clone() })
        .collect();
    let reports = specs.par_iter().map(run_suite).collect::<Result<Vec<Report>>>()?;
    for r in &reports {
        summarize(&r.checks, &r.suite);
    }
    let passed = reports.iter().all(|r| r.passed);
    emit(cli_json, &VerifyOutput { passed, reports })?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    let out = cli.json.as_deref();
    match cli.command {
        Command::Verify { mut suites, positional, trials, seed, tolerance, algebra } => {
            suites.extend(positional);
            verify(out, suites, trials, seed, tolerance, algebra)
        }
        Command::Spectral { input } => {
            let file: ElementFile = read_json(&input)?;
            let a = file.algebra.build()?;
            let s = spectral_resolution(&a, &file.element)?;
            emit(out, &json!({"algebra": a.name(), "card": s.card(), "max_residual": s.max_residual(), "resolution": s}))?;
            Ok(())
        }
        Command::Fermions { family } => {
            let families = match family.as_str() {
                "both" => vec![Family::Up, Family::Down],
                f => vec![f.parse::<Family>()?],
            };
            let slots: Vec<_> = families.into_iter().flat_map(fermion_assign).collect();
            let coordinates: usize = slots.iter().map(|s| s.coordinates.len()).sum();
            emit(out, &json!({"coordinates": coordinates, "slots": slots}))?;
            Ok(())
        }
        Command::Dims => {
            let o = derivation_dims()?;
            summarize(&o.checks, "dims");
            emit(out, &o.data)?;
            if o.checks.iter().all(|c| c.passed) {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = std::env::var("ALBERT_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
