//! Command-line front end for `chamberwalk-core`.
//!
//! Subcommands: `roots`, `weyl`, `chambers`, `mov`, `flops`, `parabolic`,
//! `slice disc|types|rays|alpha|h2`, `fan check`, `fixtures list|emit`.
//! Results are JSON (default), Graphviz DOT or SVG; output is byte-for-byte
//! deterministic. A whole job can also be read from a JSON document with
//! `--config` (see [`args::JobConfig`]).

pub mod args;
pub mod commands;
pub mod docs;
pub mod emit;
pub mod error;
pub mod fixtures;
pub mod slodowy;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, Format, JobConfig};
pub use commands::execute;
pub use error::CliError;

/// Turn parsed arguments into one job.
fn resolve(cli: Cli) -> Result<JobConfig, CliError> {
    match (cli.config, cli.command) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give either --config or a subcommand, not both".into(),
        )),
        (None, None) => Err(CliError::Usage("missing subcommand (try --help)".into())),
        (None, Some(command)) => Ok(JobConfig {
            command,
            format: cli.format,
            out: cli.out,
        }),
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            let mut job: JobConfig = serde_json::from_str(&text).map_err(|e| {
                CliError::Usage(format!("bad config document {}: {e}", path.display()))
            })?;
            if cli.format.is_some() {
                job.format = cli.format;
            }
            if cli.out.is_some() {
                job.out = cli.out;
            }
            Ok(job)
        }
    }
}

/// Execute a job and deliver its output.
pub fn run_job(job: &JobConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = execute(&job.command, job.format.unwrap_or_default())?;
    match &job.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            message: e.to_string(),
        }),
    }
}

/// Run the program on `argv`; returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = match Cli::try_parse_from(argv) {
        Ok(cli) => resolve(cli).and_then(|job| run_job(&job, stdout)),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => Err(CliError::Usage(e.to_string().trim_end().to_owned())),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json());
            e.exit_code()
        }
    }
}
