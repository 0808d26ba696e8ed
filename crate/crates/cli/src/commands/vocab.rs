use std::io::{BufWriter, Write};

use urlsift_core::bundle::load_bundle;
use urlsift_core::Result;

use crate::args::VocabDumpArgs;
use crate::commands::stdout_error;

pub fn run(args: &VocabDumpArgs) -> Result<()> {
    let bundle = load_bundle(&args.bundle)?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    // tokens never contain delimiters, so commas and quotes cannot appear
    writeln!(out, "token,index,df").map_err(stdout_error)?;
    for (token, index, df) in bundle.vocabulary.rows() {
        writeln!(out, "{token},{index},{df}").map_err(stdout_error)?;
    }
    out.flush().map_err(stdout_error)?;
    Ok(())
}
