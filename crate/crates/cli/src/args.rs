//! Command-line surface. Unset flags fall back to the optional config file
//! (`URLSIFT_CONFIG`) and then to built-in defaults.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "urlsift",
    version,
    about = "URL threat classification: tokenize, train, evaluate, predict, serve"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the lexical tokens of one or more URLs, one per line
    Tokenize(TokenizeArgs),
    /// Train a classifier and write a model bundle
    Train(TrainArgs),
    /// Evaluate a bundle on a held-out split and print the report
    Evaluate(EvaluateArgs),
    /// Classify URLs from arguments, a file, or stdin
    Predict(PredictArgs),
    /// Serve newline-delimited classification requests over TCP
    Serve(ServeArgs),
    /// Inspect the vocabulary stored in a bundle
    Vocab(VocabArgs),
}

#[derive(Args, Debug)]
pub struct TokenizeArgs {
    /// URLs to tokenize
    #[arg(required = true)]
    pub urls: Vec<String>,
}

#[derive(Args, Debug)]
pub struct TrainArgs {
    /// Labeled CSV corpus
    #[arg(long)]
    pub data: PathBuf,
    /// Model kind: nb, logreg, or mlp
    #[arg(long)]
    pub model: String,
    /// Output bundle path
    #[arg(long)]
    pub out: PathBuf,
    /// Seed for the split, shuffling, and weight init
    #[arg(long)]
    pub seed: Option<u64>,
    /// Held-out fraction of each class
    #[arg(long = "test-fraction")]
    pub test_fraction: Option<f64>,
    /// CSV column holding the URL
    #[arg(long = "url-column")]
    pub url_column: Option<String>,
    /// CSV column holding the class label
    #[arg(long = "label-column")]
    pub label_column: Option<String>,
    /// Minimum document frequency for a vocabulary token
    #[arg(long = "min-df")]
    pub min_df: Option<u32>,
    /// Vocabulary size cap
    #[arg(long = "max-features")]
    pub max_features: Option<usize>,
    /// Feature mode: tfidf or counts
    #[arg(long)]
    pub features: Option<String>,
    /// NB smoothing strength
    #[arg(long)]
    pub alpha: Option<f64>,
    /// SGD learning rate (logreg and mlp)
    #[arg(long)]
    pub lr: Option<f64>,
    /// Training epochs (logreg and mlp)
    #[arg(long)]
    pub epochs: Option<usize>,
    /// Mini-batch size (logreg and mlp)
    #[arg(long = "batch-size")]
    pub batch_size: Option<usize>,
    /// L2 regularization strength (logreg and mlp)
    #[arg(long)]
    pub l2: Option<f64>,
    /// Comma-separated hidden layer widths (mlp)
    #[arg(long)]
    pub hidden: Option<String>,
    /// Early-stopping patience in epochs (mlp)
    #[arg(long)]
    pub patience: Option<usize>,
    /// Disable the validation carve-out and early stopping (mlp)
    #[arg(long = "no-early-stop")]
    pub no_early_stop: bool,
    /// Validation fraction carved from the training split (mlp)
    #[arg(long = "val-fraction")]
    pub val_fraction: Option<f64>,
}

#[derive(Args, Debug)]
pub struct EvaluateArgs {
    /// Trained model bundle
    #[arg(long)]
    pub bundle: PathBuf,
    /// Labeled CSV corpus to split and evaluate on
    #[arg(long)]
    pub data: PathBuf,
    /// Which partition to evaluate: test or train
    #[arg(long)]
    pub split: Option<String>,
    /// Override the split seed recorded in the bundle
    #[arg(long)]
    pub seed: Option<u64>,
    /// Override the test fraction recorded in the bundle
    #[arg(long = "test-fraction")]
    pub test_fraction: Option<f64>,
    /// Output format: text or csv
    #[arg(long)]
    pub format: Option<String>,
    /// CSV column holding the URL
    #[arg(long = "url-column")]
    pub url_column: Option<String>,
    /// CSV column holding the class label
    #[arg(long = "label-column")]
    pub label_column: Option<String>,
}

#[derive(Args, Debug)]
pub struct PredictArgs {
    /// Trained model bundle
    #[arg(long)]
    pub bundle: PathBuf,
    /// URLs to classify
    pub urls: Vec<String>,
    /// File with one URL per line
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ServeArgs {
    /// Trained model bundle
    #[arg(long)]
    pub bundle: PathBuf,
    /// Listen address, e.g. 127.0.0.1:7878 (port 0 picks a free port)
    #[arg(long)]
    pub listen: String,
}

#[derive(Args, Debug)]
pub struct VocabArgs {
    #[command(subcommand)]
    pub command: VocabCommand,
}

#[derive(Subcommand, Debug)]
pub enum VocabCommand {
    /// Emit the vocabulary as `token,index,df` CSV
    Dump(VocabDumpArgs),
}

#[derive(Args, Debug)]
pub struct VocabDumpArgs {
    /// Trained model bundle
    #[arg(long)]
    pub bundle: PathBuf,
}
