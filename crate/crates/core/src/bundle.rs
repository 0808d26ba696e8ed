//! Self-contained inference bundles: vocabulary, IDF weights, one trained
//! model, and training metadata in a single versioned binary file.
//!
//! Layout: magic `USFT`, a version byte, kind and feature-mode bytes, then
//! length-prefixed sections. All integers and floats are little-endian;
//! floats are 64-bit. Strings are u32-length-prefixed UTF-8.

use std::path::Path;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use crate::dataset::{ClassLabel, CLASS_COUNT};
use crate::error::{Error, Result};
use crate::features::{count_vectorize, tfidf_transform, IdfWeights, SparseVector, Vocabulary};
use crate::linear::{
    logreg_predict_proba, nb_predict_log_proba, LogRegConfig, LogRegModel, NbModel,
};
use crate::mlp::{mlp_predict_proba, MlpParameters};
use crate::prob::argmax;
use crate::tokenizer::tokenize;

pub const MAGIC: [u8; 4] = *b"USFT";
pub const FORMAT_VERSION: u8 = 1;
const SUPPORTED_VERSIONS: [u8; 1] = [FORMAT_VERSION];

/// Which classifier a bundle carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    NaiveBayes,
    LogReg,
    Mlp,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::NaiveBayes => "nb",
            ModelKind::LogReg => "logreg",
            ModelKind::Mlp => "mlp",
        }
    }

    fn tag(self) -> u8 {
        match self {
            ModelKind::NaiveBayes => 0,
            ModelKind::LogReg => 1,
            ModelKind::Mlp => 2,
        }
    }

    fn from_tag(tag: u8) -> Option<ModelKind> {
        match tag {
            0 => Some(ModelKind::NaiveBayes),
            1 => Some(ModelKind::LogReg),
            2 => Some(ModelKind::Mlp),
            _ => None,
        }
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModelKind> {
        match s.to_ascii_lowercase().as_str() {
            "nb" => Ok(ModelKind::NaiveBayes),
            "logreg" => Ok(ModelKind::LogReg),
            "mlp" => Ok(ModelKind::Mlp),
            other => Err(Error::Config(format!(
                "unknown model kind '{other}' (expected one of nb, logreg, mlp)"
            ))),
        }
    }
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether inference feeds the model TF-IDF vectors or raw counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FeatureMode {
    TfIdf,
    Counts,
}

impl FeatureMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FeatureMode::TfIdf => "tfidf",
            FeatureMode::Counts => "counts",
        }
    }

    fn tag(self) -> u8 {
        match self {
            FeatureMode::TfIdf => 0,
            FeatureMode::Counts => 1,
        }
    }

    fn from_tag(tag: u8) -> Option<FeatureMode> {
        match tag {
            0 => Some(FeatureMode::TfIdf),
            1 => Some(FeatureMode::Counts),
            _ => None,
        }
    }
}

impl FromStr for FeatureMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<FeatureMode> {
        match s.to_ascii_lowercase().as_str() {
            "tfidf" => Ok(FeatureMode::TfIdf),
            "counts" => Ok(FeatureMode::Counts),
            other => Err(Error::Config(format!(
                "unknown feature mode '{other}' (expected tfidf or counts)"
            ))),
        }
    }
}

/// Training provenance stored with a bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct BundleMeta {
    pub seed: u64,
    pub dataset_digest: u64,
    pub created_unix: u64,
    /// Free-form `(key, value)` pairs: hyperparameters and split settings.
    pub hyperparams: Vec<(String, String)>,
}

impl BundleMeta {
    pub fn new(seed: u64, dataset_digest: u64, hyperparams: Vec<(String, String)>) -> BundleMeta {
        let created_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        BundleMeta {
            seed,
            dataset_digest,
            created_unix,
            hyperparams,
        }
    }

    pub fn hyperparam(&self, key: &str) -> Option<&str> {
        self.hyperparams
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

/// One trained model of any supported kind.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelParams {
    NaiveBayes(NbModel),
    LogReg(LogRegModel),
    Mlp(MlpParameters),
}

impl ModelParams {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelParams::NaiveBayes(_) => ModelKind::NaiveBayes,
            ModelParams::LogReg(_) => ModelKind::LogReg,
            ModelParams::Mlp(_) => ModelKind::Mlp,
        }
    }

    fn input_dim(&self) -> usize {
        match self {
            ModelParams::NaiveBayes(m) => m.dim(),
            ModelParams::LogReg(m) => m.dim(),
            ModelParams::Mlp(m) => m.input_dim(),
        }
    }
}

/// Everything needed to classify URLs without the training data.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelBundle {
    pub feature_mode: FeatureMode,
    pub vocabulary: Vocabulary,
    pub idf: IdfWeights,
    pub params: ModelParams,
    pub meta: BundleMeta,
}

/// Classification outcome for one URL.
#[derive(Clone, Debug, PartialEq)]
pub struct Prediction {
    pub label: ClassLabel,
    pub probabilities: [f64; CLASS_COUNT],
}

impl Prediction {
    /// Probability of the predicted class.
    pub fn confidence(&self) -> f64 {
        self.probabilities[self.label.code()]
    }
}

impl ModelBundle {
    pub fn kind(&self) -> ModelKind {
        self.params.kind()
    }

    /// Check cross-component dimension agreement.
    pub fn validate(&self) -> Result<()> {
        let v = self.vocabulary.size();
        if self.idf.len() != v {
            return Err(Error::Internal(format!(
                "bundle inconsistency: vocabulary has {v} columns, IDF has {}",
                self.idf.len()
            )));
        }
        if self.params.input_dim() != v {
            return Err(Error::Internal(format!(
                "bundle inconsistency: vocabulary has {v} columns, model expects {}",
                self.params.input_dim()
            )));
        }
        Ok(())
    }

    /// Vectorize a URL exactly as training did.
    pub fn vectorize(&self, url: &str) -> Result<SparseVector> {
        let tokens = tokenize(url)?;
        let counts = count_vectorize(&tokens, &self.vocabulary);
        match self.feature_mode {
            FeatureMode::TfIdf => tfidf_transform(&counts, &self.idf),
            FeatureMode::Counts => Ok(counts),
        }
    }

    /// Tokenize, vectorize, and classify one URL.
    pub fn classify(&self, url: &str) -> Result<Prediction> {
        let features = self.vectorize(url)?;
        let probabilities = match &self.params {
            ModelParams::NaiveBayes(model) => {
                let log_proba = nb_predict_log_proba(model, &features)?;
                [
                    log_proba[0].exp(),
                    log_proba[1].exp(),
                    log_proba[2].exp(),
                    log_proba[3].exp(),
                ]
            }
            ModelParams::LogReg(model) => logreg_predict_proba(model, &features)?,
            ModelParams::Mlp(params) => mlp_predict_proba(params, &features)?,
        };
        let label = ClassLabel::from_code(argmax(&probabilities)).unwrap();
        Ok(Prediction {
            label,
            probabilities,
        })
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

struct Writer {
    buf: Vec<u8>,
}

impl Writer {
    fn new() -> Writer {
        Writer { buf: Vec::new() }
    }

    fn u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn f64(&mut self, v: f64) {
        self.buf.extend_from_slice(&v.to_le_bytes());
    }

    fn f64_slice(&mut self, values: &[f64]) {
        for &v in values {
            self.f64(v);
        }
    }

    fn string(&mut self, s: &str) {
        self.u32(s.len() as u32);
        self.buf.extend_from_slice(s.as_bytes());
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(buf: &'a [u8]) -> Reader<'a> {
        Reader { buf, pos: 0 }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.pos + n > self.buf.len() {
            return Err(Error::Format(format!(
                "truncated bundle: wanted {n} bytes at offset {}, file has {}",
                self.pos,
                self.buf.len()
            )));
        }
        let slice = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(slice)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn f64(&mut self) -> Result<f64> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn f64_vec(&mut self, n: usize) -> Result<Vec<f64>> {
        let bytes = self.take(n * 8)?;
        Ok(bytes
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
            .collect())
    }

    fn string(&mut self) -> Result<String> {
        let len = self.u32()? as usize;
        let offset = self.pos;
        let bytes = self.take(len)?;
        String::from_utf8(bytes.to_vec())
            .map_err(|_| Error::Format(format!("invalid UTF-8 string at offset {offset}")))
    }

    fn finished(&self) -> bool {
        self.pos == self.buf.len()
    }
}

fn encode(bundle: &ModelBundle) -> Vec<u8> {
    let mut w = Writer::new();
    w.buf.extend_from_slice(&MAGIC);
    w.u8(FORMAT_VERSION);
    w.u8(bundle.kind().tag());
    w.u8(bundle.feature_mode.tag());

    // metadata
    w.u64(bundle.meta.seed);
    w.u64(bundle.meta.dataset_digest);
    w.u64(bundle.meta.created_unix);
    w.u32(bundle.meta.hyperparams.len() as u32);
    for (key, value) in &bundle.meta.hyperparams {
        w.string(key);
        w.string(value);
    }

    // vocabulary
    let vocab = &bundle.vocabulary;
    w.u32(vocab.min_df());
    w.u64(vocab.max_features() as u64);
    w.u64(vocab.fitted_on());
    w.u64(vocab.size() as u64);
    for (token, _, df) in vocab.rows() {
        w.string(token);
        w.u64(df);
    }

    // idf
    w.string(bundle.idf.formula());
    w.u64(bundle.idf.len() as u64);
    w.f64_slice(bundle.idf.weights());

    // model parameters
    match &bundle.params {
        ModelParams::NaiveBayes(model) => {
            w.f64(model.alpha());
            w.f64_slice(model.log_priors());
            w.f64_slice(model.log_likelihood());
        }
        ModelParams::LogReg(model) => {
            let config = model.config();
            w.f64(config.learning_rate);
            w.f64(config.l2);
            w.u64(config.epochs as u64);
            w.u64(config.batch_size as u64);
            w.u64(config.seed);
            w.f64_slice(model.bias());
            w.f64_slice(model.weights());
        }
        ModelParams::Mlp(params) => {
            w.u64(params.init_seed());
            w.u64(params.layer_sizes().len() as u64);
            for &size in params.layer_sizes() {
                w.u64(size as u64);
            }
            for layer in 0..params.num_weight_layers() {
                w.f64_slice(params.layer_weights(layer));
                w.f64_slice(params.layer_biases(layer));
            }
        }
    }
    w.buf
}

fn decode(bytes: &[u8]) -> Result<ModelBundle> {
    let mut r = Reader::new(bytes);
    let magic = r.take(4)?;
    if magic != MAGIC {
        return Err(Error::Format(
            "not a model bundle: missing USFT magic".to_string(),
        ));
    }
    let version = r.u8()?;
    if !SUPPORTED_VERSIONS.contains(&version) {
        return Err(Error::Format(format!(
            "unsupported bundle version {version} (supported: {})",
            SUPPORTED_VERSIONS
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    let kind = ModelKind::from_tag(r.u8()?)
        .ok_or_else(|| Error::Format("unknown model kind tag".to_string()))?;
    let feature_mode = FeatureMode::from_tag(r.u8()?)
        .ok_or_else(|| Error::Format("unknown feature mode tag".to_string()))?;

    let seed = r.u64()?;
    let dataset_digest = r.u64()?;
    let created_unix = r.u64()?;
    let n_hyper = r.u32()? as usize;
    let mut hyperparams = Vec::with_capacity(n_hyper.min(1024));
    for _ in 0..n_hyper {
        let key = r.string()?;
        let value = r.string()?;
        hyperparams.push((key, value));
    }
    let meta = BundleMeta {
        seed,
        dataset_digest,
        created_unix,
        hyperparams,
    };

    let min_df = r.u32()?;
    let max_features = r.u64()? as usize;
    let fitted_on = r.u64()?;
    let vocab_size = r.u64()? as usize;
    let mut tokens = Vec::with_capacity(vocab_size.min(1 << 20));
    let mut doc_freq = Vec::with_capacity(vocab_size.min(1 << 20));
    for _ in 0..vocab_size {
        tokens.push(r.string()?);
        doc_freq.push(r.u64()?);
    }
    let vocabulary = Vocabulary::from_parts(tokens, doc_freq, min_df, max_features, fitted_on)?;

    let formula = r.string()?;
    let idf_len = r.u64()? as usize;
    if idf_len != vocab_size {
        return Err(Error::Format(format!(
            "corrupt bundle: vocabulary has {vocab_size} columns but IDF has {idf_len}"
        )));
    }
    let idf = IdfWeights::from_parts(r.f64_vec(idf_len)?, formula);

    let params = match kind {
        ModelKind::NaiveBayes => {
            let alpha = r.f64()?;
            let priors = r.f64_vec(CLASS_COUNT)?;
            let log_likelihood = r.f64_vec(CLASS_COUNT * vocab_size)?;
            let log_priors = [priors[0], priors[1], priors[2], priors[3]];
            ModelParams::NaiveBayes(NbModel::from_parts(
                log_priors,
                log_likelihood,
                alpha,
                vocab_size,
            )?)
        }
        ModelKind::LogReg => {
            let learning_rate = r.f64()?;
            let l2 = r.f64()?;
            let epochs = r.u64()? as usize;
            let batch_size = r.u64()? as usize;
            let lr_seed = r.u64()?;
            let bias_vec = r.f64_vec(CLASS_COUNT)?;
            let weights = r.f64_vec(vocab_size * CLASS_COUNT)?;
            let bias = [bias_vec[0], bias_vec[1], bias_vec[2], bias_vec[3]];
            let config = LogRegConfig {
                learning_rate,
                epochs,
                l2,
                batch_size,
                seed: lr_seed,
            };
            ModelParams::LogReg(LogRegModel::from_parts(weights, bias, config, vocab_size)?)
        }
        ModelKind::Mlp => {
            let init_seed = r.u64()?;
            let n_layers = r.u64()? as usize;
            if !(3..=64).contains(&n_layers) {
                return Err(Error::Format(format!(
                    "corrupt bundle: implausible MLP layer count {n_layers}"
                )));
            }
            let mut layer_sizes = Vec::with_capacity(n_layers);
            for _ in 0..n_layers {
                layer_sizes.push(r.u64()? as usize);
            }
            let mut weights = Vec::with_capacity(n_layers - 1);
            let mut biases = Vec::with_capacity(n_layers - 1);
            for k in 0..n_layers - 1 {
                weights.push(r.f64_vec(layer_sizes[k] * layer_sizes[k + 1])?);
                biases.push(r.f64_vec(layer_sizes[k + 1])?);
            }
            ModelParams::Mlp(MlpParameters::from_parts(
                layer_sizes,
                weights,
                biases,
                init_seed,
            )?)
        }
    };

    if !r.finished() {
        return Err(Error::Format(format!(
            "corrupt bundle: {} trailing bytes after model parameters",
            bytes.len() - r.pos
        )));
    }

    let bundle = ModelBundle {
        feature_mode,
        vocabulary,
        idf,
        params,
        meta,
    };
    bundle.validate().map_err(|e| match e {
        Error::Internal(msg) => Error::Format(format!("corrupt bundle: {msg}")),
        other => other,
    })?;
    Ok(bundle)
}

/// Serialize a bundle to disk. The write goes through a temporary file in
/// the same directory followed by a rename, so a crash never leaves a
/// half-written bundle at `path`.
pub fn save_bundle(bundle: &ModelBundle, path: &Path) -> Result<()> {
    bundle.validate()?;
    let bytes = encode(bundle);
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp_path = Path::new(&tmp);
    std::fs::write(tmp_path, &bytes).map_err(|e| Error::io(tmp_path, e))?;
    std::fs::rename(tmp_path, path).map_err(|e| Error::io(path, e))?;
    Ok(())
}

/// Load and fully validate a bundle. Never returns a partially valid model.
pub fn load_bundle(path: &Path) -> Result<ModelBundle> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    decode(&bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::ClassLabel;
    use crate::features::{build_vocabulary, fit_idf};
    use crate::linear::{train_logreg, train_multinomial_nb};
    use crate::mlp::{init_mlp, train_mlp, TrainConfig};
    use crate::tokenizer::tokenize_batch;

    /// Small synthetic corpus with one strong token per class.
    fn fixture_urls() -> (Vec<String>, Vec<ClassLabel>) {
        let mut urls = Vec::new();
        let mut labels = Vec::new();
        for i in 0..12 {
            urls.push(format!("www.safe{i}.com/home", i = i % 4));
            labels.push(ClassLabel::Benign);
            urls.push(format!("deface{i}.org/index.php?id={i}"));
            labels.push(ClassLabel::Defacement);
            urls.push(format!("10.0.0.{i}/payload{i}.exe"));
            labels.push(ClassLabel::Malware);
            urls.push(format!("login-verify{i}.bank.example/signin"));
            labels.push(ClassLabel::Phishing);
        }
        (urls, labels)
    }

    fn make_bundle(kind: ModelKind) -> ModelBundle {
        let (urls, labels) = fixture_urls();
        let sequences = tokenize_batch(&urls).unwrap();
        let vocabulary = build_vocabulary(&sequences, 1, 500).unwrap();
        let counts: Vec<SparseVector> = sequences
            .iter()
            .map(|s| count_vectorize(s, &vocabulary))
            .collect();
        let idf = fit_idf(&counts).unwrap();
        let features: Vec<SparseVector> = counts
            .iter()
            .map(|c| tfidf_transform(c, &idf).unwrap())
            .collect();

        let params = match kind {
            ModelKind::NaiveBayes => {
                ModelParams::NaiveBayes(train_multinomial_nb(&features, &labels, 1.0).unwrap())
            }
            ModelKind::LogReg => ModelParams::LogReg(
                train_logreg(&features, &labels, &LogRegConfig::default()).unwrap(),
            ),
            ModelKind::Mlp => {
                let init = init_mlp(&[vocabulary.size(), 8, 4], 11).unwrap();
                let config = TrainConfig {
                    epochs: 5,
                    batch_size: 16,
                    early_stop_patience: None,
                    validation_fraction: 0.0,
                    ..TrainConfig::default()
                };
                ModelParams::Mlp(train_mlp(init, &features, &labels, &config).unwrap().0)
            }
        };

        ModelBundle {
            feature_mode: FeatureMode::TfIdf,
            vocabulary,
            idf,
            params,
            meta: BundleMeta::new(
                42,
                0xdead_beef,
                vec![("test-fraction".into(), "0.2".into())],
            ),
        }
    }

    #[test]
    fn round_trip_preserves_every_field_and_prediction() {
        for kind in [ModelKind::NaiveBayes, ModelKind::LogReg, ModelKind::Mlp] {
            let bundle = make_bundle(kind);
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("model.usft");
            save_bundle(&bundle, &path).unwrap();
            let loaded = load_bundle(&path).unwrap();
            assert_eq!(bundle, loaded, "{kind} bundle round-trip");

            let (urls, _) = fixture_urls();
            for url in urls.iter().chain(
                [
                    "unseen-token.example/path".to_string(),
                    "WWW.SAFE0.COM/home".to_string(),
                ]
                .iter(),
            ) {
                let a = bundle.classify(url).unwrap();
                let b = loaded.classify(url).unwrap();
                assert_eq!(a.label, b.label);
                assert_eq!(a.probabilities, b.probabilities, "bit-exact for {url}");
            }

            // no temp file left behind
            assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        }
    }

    #[test]
    fn bad_magic_is_a_format_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.usft");
        std::fs::write(&path, b"NOPE rest of file").unwrap();
        match load_bundle(&path) {
            Err(Error::Format(msg)) => assert!(msg.contains("magic"), "{msg}"),
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn unsupported_version_names_supported_ones() {
        let bundle = make_bundle(ModelKind::NaiveBayes);
        let mut bytes = encode(&bundle);
        bytes[4] = 255;
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v255.usft");
        std::fs::write(&path, &bytes).unwrap();
        match load_bundle(&path) {
            Err(Error::Format(msg)) => {
                assert!(msg.contains("255"), "{msg}");
                assert!(msg.contains("supported: 1"), "{msg}");
            }
            other => panic!("expected format error, got {other:?}"),
        }
    }

    #[test]
    fn truncation_reports_offset_and_never_yields_a_model() {
        let bundle = make_bundle(ModelKind::LogReg);
        let bytes = encode(&bundle);
        let dir = tempfile::tempdir().unwrap();
        for cut in [3usize, 5, 20, bytes.len() / 2, bytes.len() - 1] {
            let path = dir.path().join(format!("cut{cut}.usft"));
            std::fs::write(&path, &bytes[..cut]).unwrap();
            match load_bundle(&path) {
                Err(Error::Format(msg)) => {
                    if cut >= 4 {
                        assert!(msg.contains("offset") || msg.contains("truncated"), "{msg}");
                    }
                }
                other => panic!("cut at {cut}: expected format error, got {other:?}"),
            }
        }
    }

    #[test]
    fn trailing_garbage_is_rejected() {
        let bundle = make_bundle(ModelKind::NaiveBayes);
        let mut bytes = encode(&bundle);
        bytes.extend_from_slice(b"extra");
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trailing.usft");
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(load_bundle(&path), Err(Error::Format(_))));
    }

    #[test]
    fn dimension_mismatch_is_corruption() {
        let bundle = make_bundle(ModelKind::NaiveBayes);
        let mut inconsistent = bundle.clone();
        inconsistent.idf = IdfWeights::from_weights(vec![1.0; 3]);
        assert!(matches!(inconsistent.validate(), Err(Error::Internal(_))));
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.usft");
        assert!(matches!(
            save_bundle(&inconsistent, &path),
            Err(Error::Internal(_))
        ));
        assert!(!path.exists());
    }

    #[test]
    fn kind_and_mode_parse_from_strings() {
        assert_eq!("mlp".parse::<ModelKind>().unwrap(), ModelKind::Mlp);
        assert_eq!("NB".parse::<ModelKind>().unwrap(), ModelKind::NaiveBayes);
        assert!(matches!(
            "forest".parse::<ModelKind>(),
            Err(Error::Config(_))
        ));
        assert_eq!("tfidf".parse::<FeatureMode>().unwrap(), FeatureMode::TfIdf);
        assert!(matches!(
            "raw".parse::<FeatureMode>(),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn classify_is_deterministic_and_probabilities_sum_to_one() {
        let bundle = make_bundle(ModelKind::Mlp);
        let a = bundle
            .classify("login-verify0.bank.example/signin")
            .unwrap();
        let b = bundle
            .classify("login-verify0.bank.example/signin")
            .unwrap();
        assert_eq!(a, b);
        assert!((a.probabilities.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        assert!(a.confidence() >= 0.25);
    }
}
