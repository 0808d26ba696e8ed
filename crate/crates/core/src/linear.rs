//! Classical baselines: Multinomial Naive Bayes (closed form) and
//! multinomial Logistic Regression trained by seeded mini-batch SGD.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dataset::{ClassLabel, CLASS_COUNT};
use crate::error::{Error, Result};
use crate::features::SparseVector;
use crate::prob::{log_softmax, softmax};

fn check_training_shapes(x: &[SparseVector], y: &[ClassLabel]) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::Data(format!(
            "{} feature vectors but {} labels",
            x.len(),
            y.len()
        )));
    }
    let first = x
        .first()
        .ok_or_else(|| Error::Data("training set is empty".to_string()))?;
    let dim = first.dim();
    if dim == 0 {
        return Err(Error::Data("feature dimension must be >= 1".to_string()));
    }
    for (i, v) in x.iter().enumerate() {
        if v.dim() != dim {
            return Err(Error::Data(format!(
                "dimension mismatch: sample {i} has dimension {}, expected {dim}",
                v.dim()
            )));
        }
    }
    Ok(dim)
}

fn class_counts(y: &[ClassLabel]) -> [usize; CLASS_COUNT] {
    let mut counts = [0usize; CLASS_COUNT];
    for &label in y {
        counts[label.code()] += 1;
    }
    counts
}

// ---------------------------------------------------------------------------
// Multinomial Naive Bayes
// ---------------------------------------------------------------------------

/// Trained Multinomial Naive Bayes parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct NbModel {
    log_priors: [f64; CLASS_COUNT],
    /// Class-major `4 x V` feature log-likelihoods.
    log_likelihood: Vec<f64>,
    alpha: f64,
    dim: usize,
}

impl NbModel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn log_priors(&self) -> &[f64; CLASS_COUNT] {
        &self.log_priors
    }

    /// Log-likelihood row for one class, length V.
    pub fn class_log_likelihood(&self, class: ClassLabel) -> &[f64] {
        let start = class.code() * self.dim;
        &self.log_likelihood[start..start + self.dim]
    }

    /// Full class-major log-likelihood table.
    pub fn log_likelihood(&self) -> &[f64] {
        &self.log_likelihood
    }

    pub(crate) fn from_parts(
        log_priors: [f64; CLASS_COUNT],
        log_likelihood: Vec<f64>,
        alpha: f64,
        dim: usize,
    ) -> Result<NbModel> {
        if log_likelihood.len() != CLASS_COUNT * dim {
            return Err(Error::Format(format!(
                "corrupt bundle: NB likelihood table has {} entries, expected {}",
                log_likelihood.len(),
                CLASS_COUNT * dim
            )));
        }
        Ok(NbModel {
            log_priors,
            log_likelihood,
            alpha,
            dim,
        })
    }
}

/// Closed-form Multinomial Naive Bayes training with additive smoothing.
///
/// `log_prior_c = ln(count_c / N)`;
/// `log_likelihood_{c,j} = ln((sum_{i in c} x_ij + alpha) / (sum_j sum_{i in c} x_ij + alpha V))`.
pub fn train_multinomial_nb(x: &[SparseVector], y: &[ClassLabel], alpha: f64) -> Result<NbModel> {
    if alpha <= 0.0 || !alpha.is_finite() {
        return Err(Error::Config(format!(
            "NB smoothing alpha must be a positive finite number, got {alpha}"
        )));
    }
    let dim = check_training_shapes(x, y)?;
    for (i, v) in x.iter().enumerate() {
        if v.iter().any(|(_, value)| value < 0.0) {
            return Err(Error::Data(format!(
                "sample {i} has a negative feature value; multinomial NB needs counts >= 0"
            )));
        }
    }
    let counts = class_counts(y);
    for label in ClassLabel::ALL {
        if counts[label.code()] == 0 {
            return Err(Error::Data(format!(
                "class '{label}' absent from training data"
            )));
        }
    }

    let n = x.len() as f64;
    let mut log_priors = [0.0; CLASS_COUNT];
    for c in 0..CLASS_COUNT {
        log_priors[c] = (counts[c] as f64 / n).ln();
    }

    let mut feature_sums = vec![0.0f64; CLASS_COUNT * dim];
    for (v, &label) in x.iter().zip(y) {
        let base = label.code() * dim;
        for (j, value) in v.iter() {
            feature_sums[base + j as usize] += value;
        }
    }

    let mut log_likelihood = vec![0.0f64; CLASS_COUNT * dim];
    for c in 0..CLASS_COUNT {
        let base = c * dim;
        let total: f64 = feature_sums[base..base + dim].iter().sum();
        let denominator = total + alpha * dim as f64;
        for j in 0..dim {
            log_likelihood[base + j] = ((feature_sums[base + j] + alpha) / denominator).ln();
        }
    }

    Ok(NbModel {
        log_priors,
        log_likelihood,
        alpha,
        dim,
    })
}

/// Log posterior over the four classes, normalized so `exp` sums to 1.
pub fn nb_predict_log_proba(model: &NbModel, x: &SparseVector) -> Result<[f64; CLASS_COUNT]> {
    if x.dim() != model.dim {
        return Err(Error::Data(format!(
            "dimension mismatch: input has dimension {}, model expects {}",
            x.dim(),
            model.dim
        )));
    }
    let mut scores = model.log_priors;
    for (j, value) in x.iter() {
        for (c, score) in scores.iter_mut().enumerate() {
            *score += value * model.log_likelihood[c * model.dim + j as usize];
        }
    }
    let normalized = log_softmax(&scores);
    Ok([normalized[0], normalized[1], normalized[2], normalized[3]])
}

// ---------------------------------------------------------------------------
// Multinomial Logistic Regression
// ---------------------------------------------------------------------------

/// Logistic regression hyperparameters.
#[derive(Clone, Debug, PartialEq)]
pub struct LogRegConfig {
    pub learning_rate: f64,
    pub epochs: usize,
    pub l2: f64,
    pub batch_size: usize,
    pub seed: u64,
}

impl Default for LogRegConfig {
    fn default() -> Self {
        LogRegConfig {
            learning_rate: 0.1,
            epochs: 10,
            l2: 1e-6,
            batch_size: 256,
            seed: 42,
        }
    }
}

/// Trained multinomial logistic regression parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct LogRegModel {
    /// Feature-major `V x 4` weight storage: `weights[j*4 + c]`.
    weights: Vec<f64>,
    bias: [f64; CLASS_COUNT],
    config: LogRegConfig,
    dim: usize,
}

impl LogRegModel {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Weight for (class, feature column).
    pub fn weight(&self, class: ClassLabel, column: usize) -> f64 {
        self.weights[column * CLASS_COUNT + class.code()]
    }

    /// Raw feature-major weight storage.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn bias(&self) -> &[f64; CLASS_COUNT] {
        &self.bias
    }

    pub fn config(&self) -> &LogRegConfig {
        &self.config
    }

    pub(crate) fn from_parts(
        weights: Vec<f64>,
        bias: [f64; CLASS_COUNT],
        config: LogRegConfig,
        dim: usize,
    ) -> Result<LogRegModel> {
        if weights.len() != dim * CLASS_COUNT {
            return Err(Error::Format(format!(
                "corrupt bundle: logreg weight table has {} entries, expected {}",
                weights.len(),
                dim * CLASS_COUNT
            )));
        }
        Ok(LogRegModel {
            weights,
            bias,
            config,
            dim,
        })
    }
}

fn logit_scores(
    weights: &[f64],
    scale: f64,
    bias: &[f64; CLASS_COUNT],
    x: &SparseVector,
) -> [f64; CLASS_COUNT] {
    let mut acc = [0.0f64; CLASS_COUNT];
    for (j, value) in x.iter() {
        let row = &weights[j as usize * CLASS_COUNT..(j as usize + 1) * CLASS_COUNT];
        for c in 0..CLASS_COUNT {
            acc[c] += value * row[c];
        }
    }
    let mut scores = *bias;
    for (score, dot) in scores.iter_mut().zip(&acc) {
        *score += scale * dot;
    }
    scores
}

/// Accumulate the data term of the batch gradient (softmax cross-entropy,
/// gradient taken with respect to the effective weights `scale * weights`).
/// Returns the summed loss over the batch.
#[allow(clippy::too_many_arguments)]
fn accumulate_batch_gradient(
    weights: &[f64],
    scale: f64,
    bias: &[f64; CLASS_COUNT],
    x: &[SparseVector],
    y: &[ClassLabel],
    batch: &[usize],
    grad_rows: &mut BTreeMap<u32, [f64; CLASS_COUNT]>,
    grad_bias: &mut [f64; CLASS_COUNT],
) -> f64 {
    let mut loss_sum = 0.0;
    for &i in batch {
        let scores = logit_scores(weights, scale, bias, &x[i]);
        let probs = softmax(&scores);
        loss_sum += -(probs[y[i].code()].max(1e-12)).ln();
        let mut delta = [probs[0], probs[1], probs[2], probs[3]];
        delta[y[i].code()] -= 1.0;
        for c in 0..CLASS_COUNT {
            grad_bias[c] += delta[c];
        }
        for (j, value) in x[i].iter() {
            let row = grad_rows.entry(j).or_insert([0.0; CLASS_COUNT]);
            for c in 0..CLASS_COUNT {
                row[c] += value * delta[c];
            }
        }
    }
    loss_sum
}

/// Train multinomial logistic regression by seeded, shuffled mini-batch SGD
/// on mean cross-entropy plus `(l2/2) * ||W||^2`.
///
/// L2 decay on the weight matrix is applied through a running scale factor,
/// so each step only touches the weight rows present in the batch.
/// Deterministic given `(x, y, config)`.
pub fn train_logreg(
    x: &[SparseVector],
    y: &[ClassLabel],
    config: &LogRegConfig,
) -> Result<LogRegModel> {
    if config.learning_rate <= 0.0 || !config.learning_rate.is_finite() {
        return Err(Error::Config(format!(
            "learning rate must be positive, got {}",
            config.learning_rate
        )));
    }
    if config.epochs < 1 {
        return Err(Error::Config("epochs must be >= 1".to_string()));
    }
    if config.batch_size < 1 {
        return Err(Error::Config("batch size must be >= 1".to_string()));
    }
    if config.l2.is_nan() || config.l2 < 0.0 || config.learning_rate * config.l2 >= 1.0 {
        return Err(Error::Config(format!(
            "l2 strength {} is not usable with learning rate {}",
            config.l2, config.learning_rate
        )));
    }
    let dim = check_training_shapes(x, y)?;
    let distinct = class_counts(y).iter().filter(|&&c| c > 0).count();
    if distinct < 2 {
        return Err(Error::Data(
            "logistic regression needs at least 2 distinct classes".to_string(),
        ));
    }

    let mut weights = vec![0.0f64; dim * CLASS_COUNT];
    let mut bias = [0.0f64; CLASS_COUNT];
    let mut scale = 1.0f64;
    let decay = 1.0 - config.learning_rate * config.l2;

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut order: Vec<usize> = (0..x.len()).collect();
    let mut grad_rows: BTreeMap<u32, [f64; CLASS_COUNT]> = BTreeMap::new();

    for epoch in 0..config.epochs {
        order.shuffle(&mut rng);
        for (batch_no, batch) in order.chunks(config.batch_size).enumerate() {
            grad_rows.clear();
            let mut grad_bias = [0.0f64; CLASS_COUNT];
            let loss_sum = accumulate_batch_gradient(
                &weights,
                scale,
                &bias,
                x,
                y,
                batch,
                &mut grad_rows,
                &mut grad_bias,
            );
            let batch_len = batch.len() as f64;
            if !(loss_sum / batch_len).is_finite() {
                return Err(Error::Numerical(format!(
                    "non-finite training loss at epoch {}, batch {}",
                    epoch + 1,
                    batch_no + 1
                )));
            }
            scale *= decay;
            let step = config.learning_rate / (batch_len * scale);
            for (&j, row) in grad_rows.iter() {
                let w = &mut weights[j as usize * CLASS_COUNT..(j as usize + 1) * CLASS_COUNT];
                for c in 0..CLASS_COUNT {
                    w[c] -= step * row[c];
                }
            }
            for c in 0..CLASS_COUNT {
                bias[c] -= config.learning_rate * grad_bias[c] / batch_len;
            }
        }
    }

    for w in &mut weights {
        *w *= scale;
    }
    if weights.iter().any(|w| !w.is_finite()) || bias.iter().any(|b| !b.is_finite()) {
        return Err(Error::Numerical(
            "trained logistic regression parameters are not finite".to_string(),
        ));
    }

    Ok(LogRegModel {
        weights,
        bias,
        config: config.clone(),
        dim,
    })
}

/// Class probabilities `softmax(Wx + b)`, stable under large logits.
pub fn logreg_predict_proba(model: &LogRegModel, x: &SparseVector) -> Result<[f64; CLASS_COUNT]> {
    if x.dim() != model.dim {
        return Err(Error::Data(format!(
            "dimension mismatch: input has dimension {}, model expects {}",
            x.dim(),
            model.dim
        )));
    }
    let scores = logit_scores(&model.weights, 1.0, &model.bias, x);
    let probs = softmax(&scores);
    Ok([probs[0], probs[1], probs[2], probs[3]])
}

/// Mean cross-entropy of the model over a dataset (no regularization term).
pub fn logreg_mean_loss(model: &LogRegModel, x: &[SparseVector], y: &[ClassLabel]) -> Result<f64> {
    if x.is_empty() || x.len() != y.len() {
        return Err(Error::Data(
            "loss needs matching non-empty inputs".to_string(),
        ));
    }
    let mut total = 0.0;
    for (v, &label) in x.iter().zip(y) {
        let probs = logreg_predict_proba(model, v)?;
        total += -(probs[label.code()].max(1e-12)).ln();
    }
    Ok(total / x.len() as f64)
}
