//! URL lexing: lowercase the input and split on a fixed delimiter set.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Characters that separate tokens. No token ever contains one of these.
pub const DELIMITERS: [char; 22] = [
    '/', '.', '-', '?', '=', '&', '_', ':', '@', '~', '%', '+', '#', ',', ';', '(', ')', '[', ']',
    '\'', '"', ' ',
];

/// Tokens longer than this are truncated to their first `MAX_TOKEN_LEN` characters.
pub const MAX_TOKEN_LEN: usize = 64;

/// Ordered lexical tokens extracted from one URL.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TokenSequence {
    pub tokens: Vec<String>,
    /// Character count of the (whitespace-trimmed) input URL.
    pub source_len: usize,
}

/// Lex one URL into lowercase tokens.
///
/// The input is trimmed, lowercased, and split on [`DELIMITERS`]; empty
/// fragments are dropped and overlong tokens truncated to [`MAX_TOKEN_LEN`]
/// characters. Pure function of its input.
pub fn tokenize(url: &str) -> Result<TokenSequence> {
    tokenize_with(url, &DELIMITERS, MAX_TOKEN_LEN)
}

/// [`tokenize`] with an explicit delimiter set and token length cap, for
/// experimenting with alternate lexing rules. Model bundles always use the
/// standard set, so anything persisted stays self-consistent.
pub fn tokenize_with(
    url: &str,
    delimiters: &[char],
    max_token_len: usize,
) -> Result<TokenSequence> {
    if delimiters.is_empty() || max_token_len == 0 {
        return Err(Error::Config(
            "tokenizer needs a non-empty delimiter set and a positive token length cap".to_string(),
        ));
    }
    let trimmed = url.trim();
    if trimmed.is_empty() {
        return Err(Error::Data("empty URL".to_string()));
    }
    let lowered = trimmed.to_lowercase();
    let tokens = lowered
        .split(|c: char| delimiters.contains(&c))
        .filter(|fragment| !fragment.is_empty())
        .map(|fragment| {
            if fragment.chars().count() > max_token_len {
                fragment.chars().take(max_token_len).collect()
            } else {
                fragment.to_string()
            }
        })
        .collect();
    Ok(TokenSequence {
        tokens,
        source_len: trimmed.chars().count(),
    })
}

/// Tokenize a batch of URLs, in parallel, preserving order.
///
/// Element `i` of the output equals `tokenize(urls[i])`. The first failing
/// element (by index) aborts the batch with an error naming that index.
pub fn tokenize_batch<S: AsRef<str> + Sync>(urls: &[S]) -> Result<Vec<TokenSequence>> {
    let results: Vec<Result<TokenSequence>> =
        urls.par_iter().map(|url| tokenize(url.as_ref())).collect();
    let mut sequences = Vec::with_capacity(results.len());
    for (i, result) in results.into_iter().enumerate() {
        match result {
            Ok(seq) => sequences.push(seq),
            Err(Error::Data(msg)) => {
                return Err(Error::Data(format!("batch index {i}: {msg}")));
            }
            Err(other) => return Err(other),
        }
    }
    Ok(sequences)
}
