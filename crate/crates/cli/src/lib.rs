//! Command-line front end: ring files, subcommands and reports.

pub mod commands;
pub mod report;
pub mod ringfile;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use commands::{execute, Cli};
use report::{error_json, exit_code};

/// Exit code for usage and input errors.
pub const USAGE_EXIT: i32 = 3;

/// Run on the given arguments (program name first). Returns the exit code and
/// the text destined for standard output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => (0, e.to_string()),
                _ => (USAGE_EXIT, error_json("usage", e.to_string().trim(), json!({}))),
            };
        }
    };
    match execute(cli) {
        Ok((report, as_json)) => {
            let code = exit_code(&report.verdicts);
            let out = if as_json { report.to_json() } else { report.to_text() };
            (code, out)
        }
        Err(e) => (USAGE_EXIT, error_json(e.kind(), &e.to_string(), e.details())),
    }
}
