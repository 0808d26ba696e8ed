//! Subcommand implementations.

mod evaluate;
mod predict;
mod serve;
mod tokenize;
mod train;
mod vocab;

use urlsift_core::Result;

use crate::args::{Cli, Command, VocabCommand};

pub fn dispatch(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Tokenize(args) => tokenize::run(args),
        Command::Train(args) => train::run(args),
        Command::Evaluate(args) => evaluate::run(args),
        Command::Predict(args) => predict::run(args),
        Command::Serve(args) => serve::run(args),
        Command::Vocab(args) => match &args.command {
            VocabCommand::Dump(dump) => vocab::run(dump),
        },
    }
}

pub(crate) fn stdout_error(source: std::io::Error) -> urlsift_core::Error {
    urlsift_core::Error::io("<stdout>", source)
}
