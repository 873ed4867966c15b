//! Library entry point for the `catconv` binary, split out so integration
//! tests can drive the CLI in-process with captured streams.
//!
//! Exit codes: 0 = success (all checks passed), 1 = at least one identity
//! check failed (reports still emitted), 2 = usage or input error,
//! 3 = resource cap exceeded. Reports go to standard out, diagnostics to
//! standard error.

use std::fmt;
use std::io::Write;

use clap::Parser;

use catconv::verify::{Caps, VerificationReport};
use catconv::Error;

pub mod args;
mod cmd;
mod svg;

use args::{Cli, Command};

pub use svg::{render_decomposition, render_triangle};

/// Environment variable overriding the enumeration caps: free scans up to
/// this length, balanced/Dyck parameters up to half of it.
pub const ENUM_CAP_ENV: &str = "CATCONV_ENUM_CAP";

/// Runs the CLI against explicit argv and streams; returns the exit code.
pub fn run<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(parse_err) => {
            let code = i32::from(parse_err.exit_code() != 0) * 2;
            let rendered = parse_err.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let budget = match enum_budget_from_env() {
        Ok(budget) => budget,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return 2;
        }
    };
    let outcome = match cli.command {
        Command::Verify(args) => cmd::verify(args, budget, out),
        Command::Enumerate(args) => cmd::enumerate(args, budget, out),
        Command::Decompose(args) => cmd::decompose(args, out),
        Command::Triangle(args) => cmd::triangle(args, out),
        Command::Render(args) => cmd::render(args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(cli_err) => {
            let _ = writeln!(err, "error: {cli_err}");
            if cli_err.exit_code() == 3 {
                let _ = writeln!(
                    err,
                    "hint: raise the enumeration budget with {ENUM_CAP_ENV}=<len>, or use --mode numeric"
                );
            }
            cli_err.exit_code()
        }
    }
}

/// Exit code implied by a batch of verification reports: 1 when any check
/// failed, 0 otherwise.
pub fn exit_code_for_reports(reports: &[VerificationReport]) -> i32 {
    i32::from(reports.iter().any(|r| !r.passed))
}

fn enum_budget_from_env() -> Result<Option<usize>, String> {
    match std::env::var(ENUM_CAP_ENV) {
        Ok(raw) => raw
            .parse::<usize>()
            .map(Some)
            .map_err(|e| format!("invalid {ENUM_CAP_ENV} value '{raw}': {e}")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(other) => Err(format!("invalid {ENUM_CAP_ENV}: {other}")),
    }
}

pub(crate) fn caps_for(budget: Option<usize>) -> Caps {
    match budget {
        Some(len) => Caps::from_budget(len),
        None => Caps::default(),
    }
}

/// Command failure with its exit code.
#[derive(Debug)]
pub(crate) enum CliError {
    Core(Error),
    Io(std::io::Error),
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::CapExceeded { .. }) => 3,
            CliError::Core(_) | CliError::Io(_) | CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(message) => write!(f, "{message}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
