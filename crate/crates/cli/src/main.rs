//! `logmink`: cone-volume measures, subspace concentration checks and
//! reconstruction of origin-symmetric polytopes from the command line.
//!
//! Exit codes: 0 success (strict case for `check`), 1 `verify` mismatch,
//! 2 input or I/O error, 3 geometric degeneracy, 10 equality case,
//! 11 subspace concentration violated, 12 solver divergence.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::manifest::{manifest_path, RunManifest};

#[derive(Parser)]
#[command(name = "logmink", version, about = "Cone-volume measures and the even logarithmic Minkowski problem")]
struct Cli {
    /// Reserved for commands that sample; currently recorded only.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cone-volume (or L_p surface area) measure of a polytope.
    Conevol(ConevolArgs),
    /// Subspace concentration report for a measure.
    Check(CheckArgs),
    /// Reconstruct a polytope whose cone-volume measure is the input.
    Solve(SolveArgs),
    /// Recompute a result's cone-volume measure and compare to the target.
    Verify(VerifyArgs),
    /// Apply a linear map to a polytope.
    Transform(TransformArgs),
}

#[derive(Args)]
pub struct ConevolArgs {
    /// Polytope JSON (`dim`, `reps`, `support`).
    pub polytope: Option<PathBuf>,
    /// Direction reps as a JSON array of vectors, instead of a file.
    #[arg(long, requires = "support", conflicts_with = "polytope")]
    pub dirs: Option<String>,
    /// Support numbers as a JSON array, one per rep.
    #[arg(long, requires = "dirs")]
    pub support: Option<String>,
    /// L_p exponent; omitted means the cone-volume measure.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct CheckArgs {
    pub measure: PathBuf,
    /// Equality band relative to the total mass [default: 1e-9].
    #[arg(long)]
    pub equality_tol: Option<f64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct SolveArgs {
    pub measure: PathBuf,
    /// Residual tolerance relative to the total mass [default: 1e-8].
    #[arg(long)]
    pub tol: Option<f64>,
    /// [default: 10000]
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Armijo sufficient-decrease constant [default: 1e-4].
    #[arg(long)]
    pub armijo_c: Option<f64>,
    /// Backtracking shrink factor [default: 0.5].
    #[arg(long)]
    pub backtrack_ratio: Option<f64>,
    /// Largest h_max/h_min before declaring divergence [default: 1e8].
    #[arg(long)]
    pub divergence_ratio: Option<f64>,
    /// Equality band of the routing check [default: 1e-9].
    #[arg(long)]
    pub equality_tol: Option<f64>,
    /// Write the descent trace as CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Write the body as an OFF mesh (3-dimensional bodies only).
    #[arg(long)]
    pub off: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    pub measure: PathBuf,
    /// Output of `solve`.
    pub result: PathBuf,
    /// Largest accepted per-direction residual relative to the total mass [default: 1e-8].
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct TransformArgs {
    pub polytope: PathBuf,
    /// n×n matrix as a JSON array of rows, or a path to such a file.
    #[arg(long)]
    pub matrix: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, output) = match &cli.command {
        Command::Conevol(a) => ("conevol", a.output.clone()),
        Command::Check(a) => ("check", a.output.clone()),
        Command::Solve(a) => ("solve", a.output.clone()),
        Command::Verify(a) => ("verify", a.output.clone()),
        Command::Transform(a) => ("transform", a.output.clone()),
    };
    let mut manifest = RunManifest::new(name, cli.seed);
    let outcome = match &cli.command {
        Command::Conevol(a) => commands::conevol(a, &mut manifest),
        Command::Check(a) => commands::check(a, &mut manifest),
        Command::Solve(a) => commands::solve(a, &mut manifest),
        Command::Verify(a) => commands::verify(a, &mut manifest),
        Command::Transform(a) => commands::transform(a, &mut manifest),
    };
    let code = match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("logmink {name}: {}", f.message);
            f.code
        }
    };
    manifest.exit_status = i32::from(code);
    manifest.wall_time_seconds = start.elapsed().as_secs_f64();
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n";
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(manifest_path(&path), text) {
                eprintln!("logmink {name}: cannot write manifest: {e}");
            }
        }
        None => eprint!("{text}"),
    }
    ExitCode::from(code)
}
