//! The `convspace` command-line tool.
//!
//! Exit codes are the same for every command:
//!
//! | code | meaning                                       |
//! |------|-----------------------------------------------|
//! | 0    | every check passed                            |
//! | 1    | a counterexample was found                    |
//! | 2    | invalid input or a violated precondition      |
//! | 64   | usage error (bad flags, unknown instance or function) |

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod commands;
pub mod format;

pub use args::{Cli, Command, Format};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_COUNTEREXAMPLE: u8 = 1;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Law(#[from] convspace::Error),
    #[error("{source_name}: {error}")]
    Io {
        source_name: String,
        error: std::io::Error,
    },
    #[error("{source_name}: invalid JSON: {error}")]
    Json {
        source_name: String,
        error: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Law(convspace::Error::UnknownFunction(_)) => EXIT_USAGE,
            _ => EXIT_INVALID_INPUT,
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_PASS
            };
        }
    };
    match commands::execute(&cli, out) {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_COUNTEREXAMPLE,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
