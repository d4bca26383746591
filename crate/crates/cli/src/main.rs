use std::process::ExitCode;

use clap::Parser;
use uswqed_cli::{run, Args, TOLERANCE_ENV};

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args, std::env::var(TOLERANCE_ENV).ok().as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("uswqed: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
