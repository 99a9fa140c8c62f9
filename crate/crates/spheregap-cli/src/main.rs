//! Command line front end.
//!
//! Subcommands:
//! * `certify`    — exact certification sweeps over (ell, d) grids
//! * `eval`       — cross-validated point evaluation of `P_ell`
//! * `spectral`   — angular-kernel eigenvalues, Poincaré constant, comparison margins
//! * `proofcheck` — the pointwise defect battery plus the exact identities
//!
//! Exit codes: 0 success, 1 a certified quantity failed its bound, 2 invalid
//! flags or inadmissible input.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cmd_certify;
mod cmd_eval;
mod cmd_proofcheck;
mod cmd_spectral;
mod report;

#[derive(Parser)]
#[command(
    name = "spheregap",
    version,
    about = "Certified spectral-gap bounds for zonal polynomials and Boltzmann angular kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify the gap inequalities exactly over an (ell, d) grid
    Certify(cmd_certify::CertifyArgs),
    /// Evaluate P_ell by independent methods and compare them
    Eval(cmd_eval::EvalArgs),
    /// Angular-kernel eigenvalues, Poincaré constant, and comparison margins
    Spectral(cmd_spectral::SpectralArgs),
    /// Run the pointwise defect battery and the exact identities
    Proofcheck(cmd_proofcheck::ProofcheckArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Certify(args) => cmd_certify::run(args),
        Command::Eval(args) => cmd_eval::run(args),
        Command::Spectral(args) => cmd_spectral::run(args),
        Command::Proofcheck(args) => cmd_proofcheck::run(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
