mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Exit status contract shared by every command.
pub enum Failure {
    /// Malformed input or a violated precondition: exit 2.
    Input(String),
    /// A report was produced and it records a failed check: exit 1.
    Counterexample(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, Failure::Counterexample(msg))) => {
            print!("{out}");
            eprintln!("adjrank: {msg}");
            ExitCode::from(1)
        }
        Err((_, Failure::Input(msg))) => {
            eprintln!("adjrank: {msg}");
            ExitCode::from(2)
        }
    }
}
