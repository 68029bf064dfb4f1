use std::process::ExitCode;

use clap::Parser;
use symdig_cli::{run, Cli};

fn main() -> ExitCode {
    run(&Cli::parse())
}
