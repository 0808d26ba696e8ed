//! `urlsift`: train, evaluate, and serve URL threat classifiers.
//!
//! Exit codes: 0 success, 1 usage/configuration, 2 data error, 3 numerical
//! error, 4 I/O or bundle format error.

mod args;
mod commands;
mod settings;

use clap::error::ErrorKind;
use clap::Parser;
use urlsift_core::Error;

fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Config(_) => 1,
        Error::Data(_) => 2,
        Error::Numerical(_) => 3,
        Error::Io { .. } | Error::Format(_) | Error::Internal(_) => 4,
    }
}

fn main() {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };

    if let Err(error) = commands::dispatch(&cli) {
        eprintln!("urlsift: {error}");
        std::process::exit(exit_code(&error));
    }
}
