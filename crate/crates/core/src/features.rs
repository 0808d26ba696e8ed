//! Capped vocabulary, sparse count vectors, and smoothed TF-IDF weighting
//! with L2 normalization.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::tokenizer::TokenSequence;

/// Formula tag stored next to the IDF weights so a bundle is self-describing.
pub const IDF_FORMULA: &str = "ln((1+N)/(1+df))+1";

/// Sparse feature vector: strictly index-ascending `(column, value)` pairs
/// with nonzero values.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(u32, f64)>,
}

impl SparseVector {
    /// Build a sparse vector, validating the index and value invariants.
    pub fn new(dim: usize, entries: Vec<(u32, f64)>) -> Result<SparseVector> {
        let mut prev: Option<u32> = None;
        for &(index, value) in &entries {
            if (index as usize) >= dim {
                return Err(Error::Data(format!(
                    "sparse index {index} out of bounds for dimension {dim}"
                )));
            }
            if let Some(p) = prev {
                if index <= p {
                    return Err(Error::Data(format!(
                        "sparse indices must be strictly ascending, got {p} then {index}"
                    )));
                }
            }
            if value == 0.0 || !value.is_finite() {
                return Err(Error::Data(format!(
                    "sparse value at index {index} must be nonzero and finite, got {value}"
                )));
            }
            prev = Some(index);
        }
        Ok(SparseVector { dim, entries })
    }

    pub fn zero(dim: usize) -> SparseVector {
        SparseVector {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(u32, f64)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn l2_norm(&self) -> f64 {
        self.entries.iter().map(|&(_, v)| v * v).sum::<f64>().sqrt()
    }

    /// Sum of all values.
    pub fn value_sum(&self) -> f64 {
        self.entries.iter().map(|&(_, v)| v).sum()
    }
}

/// Token-to-column map fitted on a training corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct Vocabulary {
    index: HashMap<String, u32>,
    tokens: Vec<String>,
    doc_freq: Vec<u64>,
    min_df: u32,
    max_features: usize,
    fitted_on: u64,
}

impl Vocabulary {
    /// Number of columns V.
    pub fn size(&self) -> usize {
        self.tokens.len()
    }

    /// Column index of a token, if retained.
    pub fn column(&self, token: &str) -> Option<u32> {
        self.index.get(token).copied()
    }

    /// Token at a column.
    pub fn token(&self, column: u32) -> Option<&str> {
        self.tokens.get(column as usize).map(|s| s.as_str())
    }

    /// Training document frequency of the token at a column.
    pub fn doc_freq(&self, column: u32) -> Option<u64> {
        self.doc_freq.get(column as usize).copied()
    }

    pub fn min_df(&self) -> u32 {
        self.min_df
    }

    pub fn max_features(&self) -> usize {
        self.max_features
    }

    /// Number of documents the vocabulary was fitted on.
    pub fn fitted_on(&self) -> u64 {
        self.fitted_on
    }

    /// `(token, column, df)` rows in column order.
    pub fn rows(&self) -> impl Iterator<Item = (&str, u32, u64)> + '_ {
        self.tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_str(), i as u32, self.doc_freq[i]))
    }

    /// Reassemble a vocabulary from its serialized parts.
    pub(crate) fn from_parts(
        tokens: Vec<String>,
        doc_freq: Vec<u64>,
        min_df: u32,
        max_features: usize,
        fitted_on: u64,
    ) -> Result<Vocabulary> {
        if tokens.len() != doc_freq.len() {
            return Err(Error::Format(format!(
                "corrupt bundle: {} vocabulary tokens but {} document frequencies",
                tokens.len(),
                doc_freq.len()
            )));
        }
        let mut index = HashMap::with_capacity(tokens.len());
        for (i, token) in tokens.iter().enumerate() {
            if index.insert(token.clone(), i as u32).is_some() {
                return Err(Error::Format(format!(
                    "corrupt bundle: duplicate vocabulary token '{token}'"
                )));
            }
        }
        Ok(Vocabulary {
            index,
            tokens,
            doc_freq,
            min_df,
            max_features,
            fitted_on,
        })
    }
}

/// Per-column inverse-document-frequency weights.
#[derive(Clone, Debug, PartialEq)]
pub struct IdfWeights {
    weights: Vec<f64>,
    formula: String,
}

impl IdfWeights {
    pub fn from_weights(weights: Vec<f64>) -> IdfWeights {
        IdfWeights {
            weights,
            formula: IDF_FORMULA.to_string(),
        }
    }

    pub(crate) fn from_parts(weights: Vec<f64>, formula: String) -> IdfWeights {
        IdfWeights { weights, formula }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn formula(&self) -> &str {
        &self.formula
    }
}

/// Fit a vocabulary on training token sequences.
///
/// Tokens with document frequency below `min_df` are dropped; survivors are
/// ranked by `(df descending, token ascending)` and the top `max_features`
/// keep their rank as column index.
pub fn build_vocabulary(
    sequences: &[TokenSequence],
    min_df: u32,
    max_features: usize,
) -> Result<Vocabulary> {
    if sequences.is_empty() {
        return Err(Error::Data(
            "cannot fit a vocabulary on an empty corpus".to_string(),
        ));
    }
    if min_df < 1 {
        return Err(Error::Config(format!("min_df must be >= 1, got {min_df}")));
    }
    if max_features < 1 {
        return Err(Error::Config(format!(
            "max_features must be >= 1, got {max_features}"
        )));
    }

    let mut df: HashMap<&str, u64> = HashMap::new();
    let mut seen: HashSet<&str> = HashSet::new();
    for seq in sequences {
        seen.clear();
        for token in &seq.tokens {
            if seen.insert(token.as_str()) {
                *df.entry(token.as_str()).or_insert(0) += 1;
            }
        }
    }

    let mut ranked: Vec<(&str, u64)> = df
        .into_iter()
        .filter(|&(_, freq)| freq >= u64::from(min_df))
        .collect();
    if ranked.is_empty() {
        return Err(Error::Config(format!(
            "no token reaches min_df {min_df}; lower it or provide more data"
        )));
    }
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    ranked.truncate(max_features);

    let tokens: Vec<String> = ranked.iter().map(|&(t, _)| t.to_string()).collect();
    let doc_freq: Vec<u64> = ranked.iter().map(|&(_, f)| f).collect();
    let mut index = HashMap::with_capacity(tokens.len());
    for (i, token) in tokens.iter().enumerate() {
        index.insert(token.clone(), i as u32);
    }

    Ok(Vocabulary {
        index,
        tokens,
        doc_freq,
        min_df,
        max_features,
        fitted_on: sequences.len() as u64,
    })
}

/// Map a token sequence to a sparse occurrence-count vector.
/// Out-of-vocabulary tokens are silently dropped.
pub fn count_vectorize(tokens: &TokenSequence, vocab: &Vocabulary) -> SparseVector {
    let mut counts: BTreeMap<u32, f64> = BTreeMap::new();
    for token in &tokens.tokens {
        if let Some(column) = vocab.column(token) {
            *counts.entry(column).or_insert(0.0) += 1.0;
        }
    }
    SparseVector {
        dim: vocab.size(),
        entries: counts.into_iter().collect(),
    }
}

/// Fit smoothed inverse-document-frequency weights on training count vectors:
/// `idf_j = ln((1+N)/(1+df_j)) + 1`.
pub fn fit_idf(count_vectors: &[SparseVector]) -> Result<IdfWeights> {
    let first = count_vectors
        .first()
        .ok_or_else(|| Error::Data("cannot fit IDF on an empty corpus".to_string()))?;
    let dim = first.dim();
    let mut df = vec![0u64; dim];
    for (i, vector) in count_vectors.iter().enumerate() {
        if vector.dim() != dim {
            return Err(Error::Data(format!(
                "dimension mismatch: vector {i} has dimension {}, expected {dim}",
                vector.dim()
            )));
        }
        for (column, _) in vector.iter() {
            df[column as usize] += 1;
        }
    }
    let n = count_vectors.len() as f64;
    let weights = df
        .iter()
        .map(|&d| ((1.0 + n) / (1.0 + d as f64)).ln() + 1.0)
        .collect();
    Ok(IdfWeights::from_weights(weights))
}

/// Apply IDF weighting to a count vector and L2-normalize the result.
/// Zero vectors pass through unchanged.
pub fn tfidf_transform(counts: &SparseVector, idf: &IdfWeights) -> Result<SparseVector> {
    if counts.dim() != idf.len() {
        return Err(Error::Data(format!(
            "dimension mismatch: counts have dimension {}, IDF has {}",
            counts.dim(),
            idf.len()
        )));
    }
    if counts.is_zero() {
        return Ok(counts.clone());
    }
    let mut entries: Vec<(u32, f64)> = counts
        .iter()
        .map(|(column, value)| (column, value * idf.weights()[column as usize]))
        .collect();
    let norm = entries.iter().map(|&(_, v)| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for entry in &mut entries {
            entry.1 /= norm;
        }
    }
    entries.retain(|&(_, v)| v != 0.0);
    Ok(SparseVector {
        dim: counts.dim(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tokenizer::tokenize;
    use proptest::prelude::*;

    fn seq(tokens: &[&str]) -> TokenSequence {
        TokenSequence {
            tokens: tokens.iter().map(|t| t.to_string()).collect(),
            source_len: tokens.iter().map(|t| t.len()).sum(),
        }
    }

    #[test]
    fn vocabulary_ranks_by_df_then_token() {
        let vocab = build_vocabulary(&[seq(&["a", "b"]), seq(&["a"])], 1, 10).unwrap();
        assert_eq!(vocab.column("a"), Some(0)); // df 2 beats df 1
        assert_eq!(vocab.column("b"), Some(1));
        assert_eq!(vocab.size(), 2);
        assert_eq!(vocab.doc_freq(0), Some(2));
        assert_eq!(vocab.fitted_on(), 2);
    }

    #[test]
    fn vocabulary_min_df_filters() {
        let vocab = build_vocabulary(&[seq(&["a", "b"]), seq(&["a"])], 2, 10).unwrap();
        assert_eq!(vocab.size(), 1);
        assert_eq!(vocab.column("a"), Some(0));
        assert_eq!(vocab.column("b"), None);
    }

    #[test]
    fn vocabulary_breaks_df_ties_lexicographically() {
        let vocab = build_vocabulary(&[seq(&["x", "y"]), seq(&["y", "x"])], 1, 10).unwrap();
        assert_eq!(vocab.column("x"), Some(0));
        assert_eq!(vocab.column("y"), Some(1));
    }

    #[test]
    fn vocabulary_respects_max_features_cap() {
        let vocab = build_vocabulary(&[seq(&["a", "b", "c"]), seq(&["a", "b"])], 1, 2).unwrap();
        assert_eq!(vocab.size(), 2);
        assert_eq!(vocab.column("c"), None);
    }

    #[test]
    fn vocabulary_with_nothing_surviving_min_df_is_config_error() {
        let err = build_vocabulary(&[seq(&["a"]), seq(&["b"])], 2, 10).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn vocabulary_counts_df_per_document_not_per_occurrence() {
        let vocab = build_vocabulary(&[seq(&["a", "a", "a"])], 1, 10).unwrap();
        assert_eq!(vocab.doc_freq(0), Some(1));
    }

    #[test]
    fn count_vectorize_counts_occurrences() {
        let vocab = build_vocabulary(&[seq(&["a", "b"]), seq(&["a"])], 1, 10).unwrap();
        let v = count_vectorize(&seq(&["a", "a", "b"]), &vocab);
        assert_eq!(v.entries(), &[(0, 2.0), (1, 1.0)]);
        assert_eq!(v.dim(), 2);
    }

    #[test]
    fn count_vectorize_drops_out_of_vocabulary_tokens() {
        let vocab = build_vocabulary(&[seq(&["a"])], 1, 10).unwrap();
        let v = count_vectorize(&seq(&["z"]), &vocab);
        assert!(v.is_zero());
        assert_eq!(v.dim(), 1);
    }

    #[test]
    fn fit_idf_matches_hand_computed_values() {
        // N=1, df=1 -> ln(2/2)+1 = 1.0
        let single = vec![SparseVector::new(1, vec![(0, 1.0)]).unwrap()];
        let idf = fit_idf(&single).unwrap();
        assert!((idf.weights()[0] - 1.0).abs() < 1e-12);

        // N=3: df=1 -> ln(4/2)+1 = 1.6931, df=0 -> ln(4/1)+1 = 2.3863
        let corpus = vec![
            SparseVector::new(2, vec![(0, 1.0)]).unwrap(),
            SparseVector::new(2, vec![]).unwrap(),
            SparseVector::new(2, vec![]).unwrap(),
        ];
        let idf = fit_idf(&corpus).unwrap();
        assert!(
            (idf.weights()[0] - 1.6931).abs() < 5e-5,
            "{}",
            idf.weights()[0]
        );
        assert!(
            (idf.weights()[1] - 2.3863).abs() < 5e-5,
            "{}",
            idf.weights()[1]
        );
        assert_eq!(idf.formula(), IDF_FORMULA);
    }

    #[test]
    fn fit_idf_rejects_dimension_mismatch() {
        let corpus = vec![
            SparseVector::new(2, vec![(0, 1.0)]).unwrap(),
            SparseVector::new(3, vec![(0, 1.0)]).unwrap(),
        ];
        assert!(matches!(fit_idf(&corpus), Err(Error::Data(_))));
    }

    #[test]
    fn idf_is_one_when_every_token_is_in_every_document() {
        let corpus = vec![
            SparseVector::new(2, vec![(0, 1.0), (1, 3.0)]).unwrap(),
            SparseVector::new(2, vec![(0, 2.0), (1, 1.0)]).unwrap(),
        ];
        let idf = fit_idf(&corpus).unwrap();
        for &w in idf.weights() {
            assert!((w - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn tfidf_normalizes_to_unit_length() {
        let counts = SparseVector::new(2, vec![(0, 2.0), (1, 1.0)]).unwrap();
        let idf = IdfWeights::from_weights(vec![1.0, 1.0]);
        let v = tfidf_transform(&counts, &idf).unwrap();
        assert!(
            (v.entries()[0].1 - 0.8944).abs() < 5e-5,
            "{:?}",
            v.entries()
        );
        assert!(
            (v.entries()[1].1 - 0.4472).abs() < 5e-5,
            "{:?}",
            v.entries()
        );
        assert!((v.l2_norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tfidf_passes_zero_vector_through() {
        let counts = SparseVector::zero(3);
        let idf = IdfWeights::from_weights(vec![1.0, 2.0, 3.0]);
        let v = tfidf_transform(&counts, &idf).unwrap();
        assert!(v.is_zero());
        assert_eq!(v.dim(), 3);
    }

    #[test]
    fn tfidf_single_component_becomes_one() {
        let counts = SparseVector::new(1, vec![(0, 3.0)]).unwrap();
        let idf = IdfWeights::from_weights(vec![2.0]);
        let v = tfidf_transform(&counts, &idf).unwrap();
        assert_eq!(v.entries(), &[(0, 1.0)]);
    }

    #[test]
    fn tfidf_rejects_dimension_mismatch() {
        let counts = SparseVector::new(2, vec![(0, 1.0)]).unwrap();
        let idf = IdfWeights::from_weights(vec![1.0]);
        assert!(matches!(
            tfidf_transform(&counts, &idf),
            Err(Error::Data(_))
        ));
    }

    #[test]
    fn sparse_vector_validates_invariants() {
        assert!(SparseVector::new(2, vec![(0, 1.0), (0, 2.0)]).is_err()); // duplicate
        assert!(SparseVector::new(2, vec![(1, 1.0), (0, 2.0)]).is_err()); // descending
        assert!(SparseVector::new(2, vec![(2, 1.0)]).is_err()); // out of bounds
        assert!(SparseVector::new(2, vec![(0, 0.0)]).is_err()); // zero value
        assert!(SparseVector::new(2, vec![(0, f64::NAN)]).is_err()); // non-finite
    }

    fn token_corpus() -> impl Strategy<Value = Vec<Vec<String>>> {
        proptest::collection::vec(proptest::collection::vec("[a-z]{1,6}", 1..12), 1..20)
    }

    proptest! {
        #[test]
        fn vocabulary_build_is_deterministic(corpus in token_corpus()) {
            let seqs: Vec<TokenSequence> = corpus
                .iter()
                .map(|tokens| TokenSequence { tokens: tokens.clone(), source_len: 0 })
                .collect();
            let a = build_vocabulary(&seqs, 1, 50);
            let b = build_vocabulary(&seqs, 1, 50);
            prop_assert_eq!(a.ok(), b.ok());
        }

        #[test]
        fn count_values_sum_to_in_vocab_token_count(corpus in token_corpus(), probe in 0usize..20) {
            let seqs: Vec<TokenSequence> = corpus
                .iter()
                .map(|tokens| TokenSequence { tokens: tokens.clone(), source_len: 0 })
                .collect();
            let vocab = build_vocabulary(&seqs, 1, 1000).unwrap();
            let target = &seqs[probe % seqs.len()];
            let counts = count_vectorize(target, &vocab);
            let in_vocab = target.tokens.iter().filter(|t| vocab.column(t).is_some()).count();
            prop_assert!((counts.value_sum() - in_vocab as f64).abs() < 1e-12);
        }

        #[test]
        fn nonzero_tfidf_vectors_have_unit_norm(urls in proptest::collection::vec("[a-z]{1,4}(\\.[a-z]{1,4}){0,3}", 2..12)) {
            let seqs: Vec<TokenSequence> = urls.iter().map(|u| tokenize(u).unwrap()).collect();
            let vocab = build_vocabulary(&seqs, 1, 100).unwrap();
            let counts: Vec<SparseVector> = seqs.iter().map(|s| count_vectorize(s, &vocab)).collect();
            let idf = fit_idf(&counts).unwrap();
            for c in &counts {
                let v = tfidf_transform(c, &idf).unwrap();
                if !v.is_zero() {
                    prop_assert!((v.l2_norm() - 1.0).abs() < 1e-9);
                }
            }
        }
    }
}
