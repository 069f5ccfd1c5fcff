//! `radial` command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::io::Write;

use clap::Parser;

pub use args::RunRequest;
pub use commands::Outcome;
pub use error::CliError;

/// Parses `args` (including the program name), merges any config file and
/// executes the request. Returns the process exit code: 0 on success, 1 on
/// usage or domain errors, 2 when a verification fails.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match config::merge_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let request = match RunRequest::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match commands::execute(&request, out) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::VerificationFailed) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
