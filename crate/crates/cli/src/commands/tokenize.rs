use urlsift_core::tokenizer::tokenize;
use urlsift_core::Result;

use crate::args::TokenizeArgs;

pub fn run(args: &TokenizeArgs) -> Result<()> {
    for url in &args.urls {
        let sequence = tokenize(url)?;
        for token in &sequence.tokens {
            println!("{token}");
        }
    }
    Ok(())
}
