use std::io::{BufRead, BufWriter, Write};

use urlsift_core::bundle::{load_bundle, ModelBundle};
use urlsift_core::{Error, Result};

use crate::args::PredictArgs;
use crate::commands::stdout_error;

fn classify_line<W: Write>(bundle: &ModelBundle, line: &str, out: &mut W) -> Result<()> {
    if line.trim().is_empty() {
        writeln!(out, "{line}\tERROR\tempty-url").map_err(stdout_error)?;
        return Ok(());
    }
    match bundle.classify(line) {
        Ok(prediction) => writeln!(
            out,
            "{line}\t{}\t{:.4}",
            prediction.label,
            prediction.confidence()
        )
        .map_err(stdout_error)?,
        // unreachable for non-empty lines, but never abort a batch mid-way
        Err(Error::Data(_)) => writeln!(out, "{line}\tERROR\tempty-url").map_err(stdout_error)?,
        Err(other) => return Err(other),
    }
    Ok(())
}

pub fn run(args: &PredictArgs) -> Result<()> {
    let bundle = load_bundle(&args.bundle)?;
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());

    for url in &args.urls {
        classify_line(&bundle, url, &mut out)?;
    }
    if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        for line in text.lines() {
            classify_line(&bundle, line, &mut out)?;
        }
    }
    if args.urls.is_empty() && args.file.is_none() {
        let stdin = std::io::stdin();
        for line in stdin.lock().lines() {
            let line = line.map_err(|e| Error::io("<stdin>", e))?;
            classify_line(&bundle, &line, &mut out)?;
        }
    }
    out.flush().map_err(stdout_error)?;
    Ok(())
}
