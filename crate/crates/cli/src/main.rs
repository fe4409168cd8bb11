use std::process::ExitCode;

use clap::Parser;

use calabi_cli::args::Cli;
use calabi_cli::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match calabi_cli::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Mismatch) => ExitCode::from(1),
    }
}
