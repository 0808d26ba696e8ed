//! Shared helpers for CLI integration tests: a deterministic synthetic
//! corpus and subprocess plumbing.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const BIN: &str = env!("CARGO_BIN_EXE_urlsift");

const WORDS: [&str; 24] = [
    "alpha", "bravo", "books", "cart", "cdn", "delta", "docs", "echo", "forum", "gamma", "hotel",
    "india", "join", "kilo", "lima", "mail", "news", "oscar", "path", "shop", "token", "user",
    "video", "wiki",
];

fn word(i: usize) -> &'static str {
    WORDS[(i * 31 + 7) % WORDS.len()]
}

/// One synthetic URL per call, shaped like its class.
pub fn synth_url(i: usize) -> (String, &'static str) {
    match i % 4 {
        0 => (
            format!(
                "https://www.{}.com/articles/{}/page{}.html",
                word(i),
                word(i + 7),
                i
            ),
            "benign",
        ),
        1 => (
            format!(
                "http://{}.org/index.php?option=com_{}&task=view&id={}",
                word(i),
                word(i + 3),
                i
            ),
            "defacement",
        ),
        2 => (
            format!(
                "http://10.{}.{}.7/files/{}{}.exe?download=1",
                i % 250,
                (i * 3) % 250,
                word(i),
                i
            ),
            "malware",
        ),
        _ => (
            format!(
                "http://{}-secure-login.{}.xyz/account/verify?user={}",
                word(i),
                word(i + 5),
                word(i + 2)
            ),
            "phishing",
        ),
    }
}

/// Write a labeled synthetic corpus CSV and return its path.
pub fn write_corpus(dir: &Path, rows: usize) -> PathBuf {
    let mut out = String::from("url,type\n");
    for i in 0..rows {
        let (url, label) = synth_url(i);
        out.push_str(&url);
        out.push(',');
        out.push_str(label);
        out.push('\n');
    }
    let path = dir.join("corpus.csv");
    std::fs::write(&path, out).unwrap();
    path
}

pub fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("URLSIFT_CONFIG")
        .output()
        .expect("failed to launch urlsift binary")
}

pub fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

pub fn stderr_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

pub fn assert_success(output: &Output) {
    assert!(
        output.status.success(),
        "command failed with {:?}\nstdout:\n{}\nstderr:\n{}",
        output.status.code(),
        stdout_of(output),
        stderr_of(output)
    );
}

/// Train a bundle on a fresh synthetic corpus; returns (corpus, bundle).
pub fn train_fixture(dir: &Path, model: &str, rows: usize, extra: &[&str]) -> (PathBuf, PathBuf) {
    let corpus = write_corpus(dir, rows);
    let bundle = dir.join(format!("{model}.usft"));
    let mut args = vec![
        "train",
        "--data",
        corpus.to_str().unwrap(),
        "--model",
        model,
        "--out",
        bundle.to_str().unwrap(),
        "--seed",
        "42",
        "--min-df",
        "1",
    ];
    args.extend_from_slice(extra);
    let output = run(&args);
    assert_success(&output);
    (corpus, bundle)
}
