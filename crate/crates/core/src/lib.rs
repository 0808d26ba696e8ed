//! URL threat classification toolkit.
//!
//! Tokenizes raw URLs into lexical tokens, builds capped TF-IDF feature
//! vectors, and trains three classifiers on the 4-class malicious-URL
//! problem (benign / defacement / malware / phishing): Multinomial Naive
//! Bayes, multinomial Logistic Regression, and a fully connected MLP
//! trained by backpropagation. Evaluation produces confusion matrices and
//! per-class precision/recall/F1 reports; trained models persist as
//! self-contained binary bundles for standalone inference.

pub mod bundle;
pub mod dataset;
pub mod error;
pub mod features;
pub mod linear;
pub mod metrics;
pub mod mlp;
pub mod prob;
pub mod tokenizer;

pub use error::{Error, Result};
