//! Command-line front end for the `pbnf` library.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! what would be written to stdout and stderr, so the binary is a thin
//! wrapper and tests need no subprocess.
//!
//! Exit codes: 0 on success, 1 on a logical negative (not a tautology, not
//! equivalent, no solution, incomplete basis, failed synthesis), 2 on usage
//! or parse errors.

mod args;
mod commands;
pub mod report;

use clap::Parser;

pub use args::{Cli, Command, MatrixCommand, SingularCommand, TableKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => commands::dispatch(&cli),
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                Output { code, stdout: rendered, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: rendered }
            }
        }
    }
}
