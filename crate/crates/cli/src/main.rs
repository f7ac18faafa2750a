//! `isopoly`: command-line front end.
//!
//! Every command writes one JSON document per line to stdout (or readable
//! text with `--format text`). Exit status: 0 when the computation completed
//! (a NO decision is a completed computation), 2 on input errors, 3 when an
//! enumeration cap is exceeded.

mod commands;
mod config;
mod output;

use clap::Parser;
use std::process::ExitCode;

use config::{Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => return e.report(),
    };
    match commands::run(&config) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => e.report(),
    }
}
