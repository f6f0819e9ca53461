//! `qdate`: batch driver for the Grover dating-market simulator.
//!
//! Exit codes: 0 success, 1 domain or runtime error, 2 usage error.

use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod manifest;

use args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::dispatch(cli.command, true) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
