mod cli;
mod commands;
mod config;
mod error;
mod table;

use clap::Parser;
use cli::{Cli, Command};
use error::CliError;
use std::process::ExitCode;

const THREADS_VAR: &str = "FERMIWIRE_THREADS";

fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Config(format!(
                "{THREADS_VAR} must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Config(e.to_string()))
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    init_threads()?;
    match &cli.command {
        Command::Verify { config } => commands::verify(config.as_deref()),
        Command::Scan(args) => commands::scan(args),
        Command::Tabulate(args) => commands::tabulate(args),
        Command::Oracle(args) => commands::oracle(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fermiwire: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
