// Negated comparisons are how NaN inputs get rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod config;
mod fail;
mod format;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::config::Settings;
use crate::fail::{CliResult, Failure};

fn init_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("FRACWAVE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        Failure::Usage(format!(
            "FRACWAVE_THREADS = `{raw}` is not a positive integer"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: &Cli) -> CliResult<ExitCode> {
    init_threads()?;
    let settings = Settings::load(cli.config.as_deref())?;
    commands::dispatch(&cli.command, &settings)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fracwave: {e}");
            e.exit_code()
        }
    }
}
