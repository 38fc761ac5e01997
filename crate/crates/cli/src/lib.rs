//! CSV front end for the `qclone-core` cloning-machine library.
//!
//! [`parse_args`] turns argv into a validated [`RunConfig`], [`run`] computes
//! the CSV text, and [`emit`] writes it. Errors carry the process exit code.

pub mod config;
pub mod table;

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::run;
pub use config::{Cli, RunConfig};

/// Exit status for bad or contradictory flags.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for numerical and IO failures.
pub const EXIT_FAILURE: i32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{what} failed: {source}")]
    Numeric {
        what: String,
        #[source]
        source: qclone_core::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric { .. } | CliError::Io { .. } => EXIT_FAILURE,
        }
    }
}

/// Outcome of argument parsing that is not a configuration.
#[derive(Debug)]
pub enum ParseOutcome {
    Run(RunConfig),
    /// `--help` or `--version`: print the text and exit 0.
    Info(String),
}

/// Parse and validate argv. Clap's multi-line diagnostics are cut to their first line.
pub fn parse_args<I, T>(args: I) -> Result<ParseOutcome, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => Ok(ParseOutcome::Run(RunConfig::try_from(cli)?)),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp
            | ErrorKind::DisplayVersion
            | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                Ok(ParseOutcome::Info(e.render().to_string()))
            }
            _ => {
                let text = e.render().to_string();
                let first = text.lines().next().unwrap_or("invalid arguments");
                Err(CliError::Usage(
                    first.trim_start_matches("error: ").to_owned(),
                ))
            }
        },
    }
}

/// Write `csv` to the configured file, or to standard output.
pub fn emit(cfg: &RunConfig, csv: &str) -> Result<(), CliError> {
    match &cfg.output {
        Some(path) => std::fs::write(path, csv).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(csv.as_bytes())
                .and_then(|()| out.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_failures_name_the_integral() {
        let e = CliError::Numeric {
            what: "SCM mean entanglement integral".into(),
            source: qclone_core::Error::QuadratureNoConvergence {
                error_estimate: 2e-9,
                tolerance: 1e-10,
            },
        };
        assert_eq!(e.exit_code(), EXIT_FAILURE);
        let msg = e.to_string();
        assert!(msg.starts_with("SCM mean entanglement integral failed: quadrature"));
        assert!(!msg.contains('\n'));
        assert_eq!(CliError::Usage("x".into()).exit_code(), EXIT_USAGE);
    }
}
