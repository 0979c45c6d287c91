//! `hecke`: density bounds for Hecke eigenvalue events, the ladder optimizer,
//! and the empirical checks against `Delta` and `E_4 Delta`.

mod bound;
mod config;
mod empirical;
mod error;
mod report;
mod reproduce;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::config::Config;
use crate::error::{CliError, Result};
use crate::report::RunReport;

#[derive(Debug, Parser)]
#[command(
    name = "hecke",
    version,
    about = "Density bounds for Hecke eigenvalue events"
)]
struct Cli {
    /// Print the run report as JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON run report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,

    /// Worker threads for the parallel stages.
    #[arg(long, global = true, env = "HECKE_THREADS")]
    threads: Option<usize>,

    /// `key=value` settings file; command-line flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate or optimize a density bound.
    #[command(subcommand)]
    Bound(bound::BoundCommand),
    /// Coefficient tables, prime densities and Sato-Tate sampling.
    #[command(subcommand)]
    Empirical(empirical::EmpiricalCommand),
    /// Recompute the reference constants and print a pass/fail matrix.
    Reproduce(reproduce::ReproduceArgs),
}

/// What every subcommand sees besides its own arguments.
pub struct Context {
    pub config: Config,
    pub argv: Vec<String>,
}

fn argv() -> Vec<String> {
    std::iter::once(report::TOOL.to_string())
        .chain(std::env::args().skip(1))
        .collect()
}

fn configure_threads(cli: &Cli, config: &Config) -> Result<()> {
    let Some(n) = config.pick(cli.threads, "threads")? else {
        return Ok(());
    };
    if n == 0 {
        return Err(CliError::usage("--threads must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::usage(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> Result<RunReport> {
    let config = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    configure_threads(&cli, &config)?;
    let ctx = Context {
        config,
        argv: argv(),
    };

    let start = Instant::now();
    let mut report = match cli.command {
        Command::Bound(cmd) => bound::run(cmd, &ctx)?,
        Command::Empirical(cmd) => empirical::run(cmd, &ctx)?,
        Command::Reproduce(args) => reproduce::run(args, &ctx)?,
    };
    report.wall_clock_seconds = start.elapsed().as_secs_f64();

    if let Some(path) = &cli.report {
        fs::write(path, serde_json::to_string_pretty(&report)? + "\n")
            .map_err(|e| CliError::usage(format!("writing {}: {e}", path.display())))?;
    }
    let mut out = io::stdout().lock();
    let written = if cli.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)
    } else {
        report.render_human(&mut out)
    };
    match written {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) if report.pass == Some(false) => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
