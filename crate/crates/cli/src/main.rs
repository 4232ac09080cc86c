use std::process::ExitCode;

use clap::Parser;
use ratbez_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ratbez: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
