//! Command-line front end.
//!
//! ```text
//! coshroot constants|classify|solve|bounds|table|curve|sweep
//!     [--a V] [--x1 V] [--x-lo V --x-hi V] [--a-lo V --a-hi V] [--steps N]
//!     [--tol V] [--format csv|json] [--verify] [--full-precision] [--coth-view]
//! ```
//!
//! Exit codes: 0 success, 1 domain error, 2 solver failure (including a
//! failed `--verify`), 64 usage error. Nothing is written to stdout on failure.

mod commands;
pub mod render;

use std::ffi::OsString;

use clap::{Parser, ValueEnum};

use crate::math::DomainError;
use crate::solvers::SolveError;
use render::Format;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_SOLVER: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// q, sinh q, a_min, a_max and the tangent root
    Constants,
    /// Root regime of a base, with analytic brackets
    Classify,
    /// Every real root of a base
    Solve,
    /// Analytic brackets, refined by --x1 when given
    Bounds,
    /// Roots and x2 bounds for the reference bases
    Table,
    /// Samples of f(x), or of 2 coth(x ln a) with --coth-view
    Curve,
    /// Roots over a range of bases
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coshroot", version, about = "Roots of a^x + a^-x = x")]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Base a >= 0
    #[arg(long = "a", allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Known smaller root, for the refined x2 bracket
    #[arg(long, allow_negative_numbers = true)]
    pub x1: Option<f64>,
    #[arg(long = "x-lo", allow_negative_numbers = true)]
    pub x_lo: Option<f64>,
    #[arg(long = "x-hi", allow_negative_numbers = true)]
    pub x_hi: Option<f64>,
    #[arg(long = "a-lo", allow_negative_numbers = true)]
    pub a_lo: Option<f64>,
    #[arg(long = "a-hi", allow_negative_numbers = true)]
    pub a_hi: Option<f64>,
    /// Number of grid points (>= 2)
    #[arg(long)]
    pub steps: Option<usize>,
    /// Residual tolerance |f(x)|
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Cross-check against a brute-force grid scan
    #[arg(long)]
    pub verify: bool,
    /// Print shortest round-trip representations instead of 6 significant digits
    #[arg(long)]
    pub full_precision: bool,
    /// Curve samples 2 coth(x ln a) instead of f(x)
    #[arg(long)]
    pub coth_view: bool,
}

impl Args {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn success(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: u8, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub(crate) enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Solve(SolveError),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Domain(d) => CliError::Domain(d),
            other => CliError::Solve(other),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            Self::Usage(_) => EXIT_USAGE,
            Self::Domain(_) => EXIT_DOMAIN,
            Self::Solve(_) | Self::Verify(_) => EXIT_SOLVER,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::success(text)
            };
        }
    };
    match commands::execute(&args) {
        Ok(text) => Outcome::success(text),
        Err(e) => Outcome::failure(e.code(), e),
    }
}
