//! Command-line front end: build solution-family triplets, verify the
//! Yang-Baxter residual, compute invariants, apply gauge and inversion
//! transformations, iterate orbits, and convert between parametrizations.
//!
//! Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
//! 3 constraint violation.

mod commands;
mod document;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { code: 2, message }
    }

    pub fn constraint(message: String) -> Self {
        CliError { code: 3, message }
    }

    /// Verification failure; the report is already on stdout.
    pub fn verify_failed() -> Self {
        CliError { code: 1, message: String::new() }
    }
}

impl From<yangbax::Error> for CliError {
    fn from(e: yangbax::Error) -> Self {
        CliError::constraint(e.to_string())
    }
}

/// Tolerance: explicit flag, else the YANGBAX_TOL environment variable,
/// else the library default.
pub fn resolve_tol(flag: Option<f64>) -> Result<f64, CliError> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("YANGBAX_TOL") {
        Ok(s) => s
            .parse::<f64>()
            .map_err(|e| CliError::usage(format!("bad YANGBAX_TOL {s:?}: {e}"))),
        Err(_) => Ok(yangbax::DEFAULT_TOL),
    }
}

#[derive(Parser)]
#[command(
    name = "yangbax",
    version,
    about = "Two-state Yang-Baxter solution families: build, verify, transform",
    after_help = "Families for `build`: 5v1, 5vff, 6v-asym-rational, 6v-asym-trig, 6vff, 8v, 8v-baxter.\n\
                  The YANGBAX_TOL environment variable overrides the default tolerance (1e-10)\n\
                  wherever --tol is accepted."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a solution triplet from family parameters (key=value)
    Build {
        /// Family name: 5v1 | 5vff | 6v-asym-rational | 6v-asym-trig | 6vff | 8v | 8v-baxter
        family: String,
        /// Parameters as key=value, e.g. `x=2 y=3 z=5 v=7`
        params: Vec<String>,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Yang-Baxter residual of a triplet document
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Max-entry tolerance in complex mode (rational mode is exact)
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Report p-polynomials and invariants per matrix as JSON
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Apply an inversion-group word or a diagonal gauge to a document
    Transform {
        #[arg(long = "in")]
        input: PathBuf,
        /// Generator word, e.g. `a,b,a`
        #[arg(long)]
        word: Option<String>,
        /// Diagonal gauge, e.g. `t1=2,t2=3,t3=5`
        #[arg(long)]
        gauge: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate a generator word and report invariants along the orbit
    Orbit {
        #[arg(long = "in")]
        input: PathBuf,
        /// Step word, e.g. `c,b,c,b`
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 512)]
        max_iter: usize,
        /// Projective comparison tolerance
        #[arg(long)]
        tol: Option<f64>,
        /// CSV output file (stdout when absent)
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Convert between eight-vertex parametrizations
    Convert {
        /// JSON file of parameters
        #[arg(long = "in")]
        input: PathBuf,
        /// Source form: xyzv | q | baxter
        #[arg(long)]
        from: String,
        /// Target form: xyzv | q
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized residual checks over all families
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Build { family, params, out } => commands::build(&family, &params, out.as_deref()),
        Cmd::Verify { input, tol } => commands::verify(&input, tol),
        Cmd::Invariants { input } => commands::invariants(&input),
        Cmd::Transform { input, word, gauge, out } => {
            commands::transform(&input, word.as_deref(), gauge.as_deref(), out.as_deref())
        }
        Cmd::Orbit { input, word, max_iter, tol, csv } => {
            commands::orbit(&input, &word, max_iter, tol, csv.as_deref())
        }
        Cmd::Convert { input, from, to, out } => {
            commands::convert(&input, &from, &to, out.as_deref())
        }
        Cmd::Selftest { seed, samples, tol } => commands::selftest(seed, samples, tol),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}
