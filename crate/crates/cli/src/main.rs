//! Command-line front end: evaluate curvature fields over grids, trace
//! type-change curves, run the verification suites and export meshes.
//!
//! Exit codes: 0 success, 1 verification/runtime failure, 2 usage or
//! configuration error (clap parse errors also exit with 2).

mod analyze;
mod export;
mod expr;
mod fmtnum;
mod opts;
mod surface;
mod trace;
mod verify_cmd;

use clap::{Parser, Subcommand};
use std::process::ExitCode;

use opts::{CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "mixedtype",
    version,
    about = "Curvature and type-change analysis for surfaces in Lorentzian space forms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate curvature fields over a parameter grid (CSV)
    Analyze(opts::AnalyzeArgs),
    /// Trace type-change curves of a graph surface (CSV + JSON report)
    Trace(opts::TraceArgs),
    /// Run a verification suite (JSON report)
    Verify(opts::VerifyArgs),
    /// Export a triangulated grid mesh (Wavefront OBJ)
    Export(opts::ExportArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => analyze::run(args),
        Command::Trace(args) => trace::run(args),
        Command::Verify(args) => verify_cmd::run(args),
        Command::Export(args) => export::run(args),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailure) => ExitCode::from(1),
        Err(CliError::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
