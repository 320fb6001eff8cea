//! `fekete`: exact energies, expansion coefficients, convergence tables and
//! verification reports for Fekete-type point configurations on an interval.

mod commands;
mod output;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fekete_core::Precision;

use crate::output::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "fekete",
    version,
    about = "Exact and asymptotic minimal energies of Fekete-type points on an interval"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Quantity to compute.
    #[arg(long, value_enum, global = true, default_value = "potential")]
    pub kind: Kind,

    /// Point counts: `a..b` (inclusive) or a comma list.
    #[arg(long = "n", visible_alias = "N", global = true, value_parser = range::parse_counts)]
    pub n: Option<range::Counts>,

    /// Charge at +1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub p: Option<f64>,

    /// Charge at -1 (defaults to p).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<f64>,

    /// Jacobi α = 2p - 1.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<f64>,

    /// Jacobi β = 2q - 1 (defaults to α).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub beta: Option<f64>,

    /// Left end of the interval for `general-interval`.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = -1.0)]
    pub a: f64,

    /// Right end of the interval for `general-interval`.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 1.0)]
    pub b: f64,

    /// Truncation order M of the expansion tail.
    #[arg(long, visible_alias = "M", global = true, default_value_t = 2)]
    pub order: usize,

    /// Arithmetic: std (f64) or ext (double-double).
    #[arg(long, global = true, env = "FEKETE_PRECISION", default_value = "std", value_parser = parse_precision)]
    pub precision: Precision,

    /// Output format; `coeffs` defaults to json, everything else to csv.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Tolerance for `verify`: slope deviation (default 0.15) or zero deviation for
    /// `--kind minimize` (default 1e-8).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Exact values: n, 𝓛, E₀, log Δ.
    Exact,
    /// Expansion coefficients.
    Coeffs,
    /// Truncation errors for every n and M' ≤ M.
    Table,
    /// Jacobi zeros for the given parameters.
    Zeros,
    /// Optimal points from the direct electrostatic solver.
    Minimize,
    /// Truncation-slope or solver checks; exit status 1 on failure.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Potential,
    Elliptic,
    Interval,
    GeneralInterval,
    LogLambda,
    #[value(name = "log-p1")]
    LogP1,
    LogD,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fekete: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl Cli {
    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    pub fn counts(&self) -> Result<&[usize], CliError> {
        self.n
            .as_ref()
            .map(|c| c.0.as_slice())
            .ok_or_else(|| CliError::Usage("--n (or --N) is required".into()))
    }
}
