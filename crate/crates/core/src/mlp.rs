//! Fully connected multi-layer perceptron: ReLU hidden layers, softmax
//! output, cross-entropy loss, explicit backpropagation, seeded mini-batch
//! SGD with optional early stopping.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::{ClassLabel, CLASS_COUNT};
use crate::error::{Error, Result};
use crate::features::SparseVector;
use crate::prob::softmax;

/// Cross-entropy clamp floor; keeps the loss finite when a probability
/// underflows to zero.
const PROB_FLOOR: f64 = 1e-12;

/// MLP parameters: `layer_sizes = [V, h1, .., 4]` with one weight matrix and
/// bias vector per consecutive pair. Weight matrices are stored in-major:
/// `weights[k][i * out + o]` connects input unit `i` to output unit `o`.
#[derive(Clone, Debug, PartialEq)]
pub struct MlpParameters {
    layer_sizes: Vec<usize>,
    weights: Vec<Vec<f64>>,
    biases: Vec<Vec<f64>>,
    seed: u64,
}

impl MlpParameters {
    pub fn layer_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    pub fn input_dim(&self) -> usize {
        self.layer_sizes[0]
    }

    /// Number of weight layers (`layer_sizes.len() - 1`).
    pub fn num_weight_layers(&self) -> usize {
        self.layer_sizes.len() - 1
    }

    /// In-major weight matrix of one layer.
    pub fn layer_weights(&self, layer: usize) -> &[f64] {
        &self.weights[layer]
    }

    pub fn layer_biases(&self, layer: usize) -> &[f64] {
        &self.biases[layer]
    }

    pub fn init_seed(&self) -> u64 {
        self.seed
    }

    /// Total parameter count (weights plus biases).
    pub fn parameter_count(&self) -> usize {
        self.weights.iter().map(Vec::len).sum::<usize>()
            + self.biases.iter().map(Vec::len).sum::<usize>()
    }

    pub fn all_finite(&self) -> bool {
        self.weights
            .iter()
            .chain(self.biases.iter())
            .all(|v| v.iter().all(|x| x.is_finite()))
    }

    pub(crate) fn from_parts(
        layer_sizes: Vec<usize>,
        weights: Vec<Vec<f64>>,
        biases: Vec<Vec<f64>>,
        seed: u64,
    ) -> Result<MlpParameters> {
        validate_layer_sizes(&layer_sizes)?;
        if weights.len() != layer_sizes.len() - 1 || biases.len() != layer_sizes.len() - 1 {
            return Err(Error::Format(
                "corrupt bundle: MLP layer count mismatch".to_string(),
            ));
        }
        for k in 0..weights.len() {
            if weights[k].len() != layer_sizes[k] * layer_sizes[k + 1]
                || biases[k].len() != layer_sizes[k + 1]
            {
                return Err(Error::Format(format!(
                    "corrupt bundle: MLP layer {k} has wrong parameter shape"
                )));
            }
        }
        Ok(MlpParameters {
            layer_sizes,
            weights,
            biases,
            seed,
        })
    }
}

fn validate_layer_sizes(layer_sizes: &[usize]) -> Result<()> {
    if layer_sizes.len() < 3 {
        return Err(Error::Config(format!(
            "MLP needs at least input, one hidden, and output layer; got {layer_sizes:?}"
        )));
    }
    if *layer_sizes.last().unwrap() != CLASS_COUNT {
        return Err(Error::Config(format!(
            "MLP output layer must have exactly {CLASS_COUNT} units, got {}",
            layer_sizes.last().unwrap()
        )));
    }
    if layer_sizes.contains(&0) {
        return Err(Error::Config(
            "every MLP layer needs at least 1 unit".to_string(),
        ));
    }
    Ok(())
}

/// Initialize an MLP with uniform Xavier/Glorot weights and zero biases.
///
/// Weights are drawn layer by layer in storage order from a ChaCha8 stream
/// seeded with `seed`, so identical arguments give bit-identical parameters.
pub fn init_mlp(layer_sizes: &[usize], seed: u64) -> Result<MlpParameters> {
    validate_layer_sizes(layer_sizes)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut weights = Vec::with_capacity(layer_sizes.len() - 1);
    let mut biases = Vec::with_capacity(layer_sizes.len() - 1);
    for window in layer_sizes.windows(2) {
        let (fan_in, fan_out) = (window[0], window[1]);
        let limit = (6.0 / (fan_in + fan_out) as f64).sqrt();
        let mut w = vec![0.0f64; fan_in * fan_out];
        for value in &mut w {
            *value = rng.random_range(-limit..limit);
        }
        weights.push(w);
        biases.push(vec![0.0f64; fan_out]);
    }
    Ok(MlpParameters {
        layer_sizes: layer_sizes.to_vec(),
        weights,
        biases,
        seed,
    })
}

/// Per-layer pre-activations and activations for one input; the final
/// activation is the class probability vector.
#[derive(Clone, Debug)]
pub struct ForwardTrace {
    input: SparseVector,
    pre_activations: Vec<Vec<f64>>,
    activations: Vec<Vec<f64>>,
}

impl ForwardTrace {
    pub fn input(&self) -> &SparseVector {
        &self.input
    }

    pub fn pre_activation(&self, layer: usize) -> &[f64] {
        &self.pre_activations[layer]
    }

    pub fn activation(&self, layer: usize) -> &[f64] {
        &self.activations[layer]
    }

    /// Output probability vector (softmax of the last pre-activation).
    pub fn probabilities(&self) -> &[f64] {
        self.activations.last().unwrap()
    }
}

/// Forward pass with an extra scale on the first weight matrix; the scale is
/// how training folds L2 decay into the sparse first layer without touching
/// every row per step.
fn forward_scaled(params: &MlpParameters, x: &SparseVector, w0_scale: f64) -> Result<ForwardTrace> {
    if x.dim() != params.input_dim() {
        return Err(Error::Data(format!(
            "dimension mismatch: input has dimension {}, MLP expects {}",
            x.dim(),
            params.input_dim()
        )));
    }
    let layers = params.num_weight_layers();
    let mut pre_activations = Vec::with_capacity(layers);
    let mut activations = Vec::with_capacity(layers);

    // first layer: sparse input, never densified
    let out0 = params.layer_sizes[1];
    let mut z = vec![0.0f64; out0];
    for (j, value) in x.iter() {
        let row = &params.weights[0][j as usize * out0..(j as usize + 1) * out0];
        for o in 0..out0 {
            z[o] += value * row[o];
        }
    }
    for (value, bias) in z.iter_mut().zip(&params.biases[0]) {
        *value = w0_scale * *value + bias;
    }
    push_layer(&mut pre_activations, &mut activations, z, layers == 1);

    for k in 1..layers {
        let input = activations[k - 1].clone();
        let (fan_in, fan_out) = (params.layer_sizes[k], params.layer_sizes[k + 1]);
        let mut z = params.biases[k].clone();
        for (i, &a) in input.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            let row = &params.weights[k][i * fan_out..(i + 1) * fan_out];
            for o in 0..fan_out {
                z[o] += a * row[o];
            }
        }
        debug_assert_eq!(z.len(), fan_out);
        let _ = fan_in;
        push_layer(&mut pre_activations, &mut activations, z, k == layers - 1);
    }

    Ok(ForwardTrace {
        input: x.clone(),
        pre_activations,
        activations,
    })
}

fn push_layer(
    pre_activations: &mut Vec<Vec<f64>>,
    activations: &mut Vec<Vec<f64>>,
    z: Vec<f64>,
    is_output: bool,
) {
    let activation = if is_output {
        softmax(&z)
    } else {
        z.iter().map(|&v| v.max(0.0)).collect()
    };
    pre_activations.push(z);
    activations.push(activation);
}

/// Forward pass: ReLU hidden layers, stable softmax output.
pub fn forward(params: &MlpParameters, x: &SparseVector) -> Result<ForwardTrace> {
    forward_scaled(params, x, 1.0)
}

/// Convenience wrapper returning only the output probabilities.
pub fn mlp_predict_proba(params: &MlpParameters, x: &SparseVector) -> Result<[f64; CLASS_COUNT]> {
    let trace = forward(params, x)?;
    let p = trace.probabilities();
    Ok([p[0], p[1], p[2], p[3]])
}

/// `-ln(max(probs[label], 1e-12))`.
pub fn cross_entropy_loss(probs: &[f64], label: ClassLabel) -> f64 {
    -(probs[label.code()].max(PROB_FLOOR)).ln()
}

/// Loss gradients shaped like [`MlpParameters`]. The first-layer weight
/// gradient is sparse: only rows touched by the input are present.
#[derive(Clone, Debug)]
pub struct MlpGradients {
    first_layer_rows: Vec<(u32, Vec<f64>)>,
    upper_weights: Vec<Vec<f64>>,
    biases: Vec<Vec<f64>>,
}

impl MlpGradients {
    /// Gradient of a weight entry; absent first-layer rows are zero.
    pub fn weight(&self, layer: usize, input: usize, output: usize) -> f64 {
        if layer == 0 {
            match self
                .first_layer_rows
                .binary_search_by_key(&(input as u32), |&(j, _)| j)
            {
                Ok(pos) => self.first_layer_rows[pos].1[output],
                Err(_) => 0.0,
            }
        } else {
            let out = self.biases[layer].len();
            self.upper_weights[layer - 1][input * out + output]
        }
    }

    pub fn bias(&self, layer: usize, output: usize) -> f64 {
        self.biases[layer][output]
    }

    pub fn first_layer_rows(&self) -> &[(u32, Vec<f64>)] {
        &self.first_layer_rows
    }

    pub fn upper_weights(&self) -> &[Vec<f64>] {
        &self.upper_weights
    }

    pub fn all_biases(&self) -> &[Vec<f64>] {
        &self.biases
    }

    /// Largest absolute gradient entry.
    pub fn max_abs(&self) -> f64 {
        let rows = self
            .first_layer_rows
            .iter()
            .flat_map(|(_, row)| row.iter().copied());
        let upper = self.upper_weights.iter().flatten().copied();
        let biases = self.biases.iter().flatten().copied();
        rows.chain(upper)
            .chain(biases)
            .fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// Exact analytic gradient of `cross_entropy_loss(forward(params, x), label)`
/// by backpropagation. Output-layer delta is `probs - one_hot(label)`; the
/// ReLU derivative at zero is taken as 0.
pub fn backward(
    params: &MlpParameters,
    trace: &ForwardTrace,
    label: ClassLabel,
) -> Result<MlpGradients> {
    let layers = params.num_weight_layers();
    if trace.pre_activations.len() != layers
        || trace.input.dim() != params.input_dim()
        || trace
            .pre_activations
            .iter()
            .enumerate()
            .any(|(k, z)| z.len() != params.layer_sizes[k + 1])
    {
        return Err(Error::Internal(
            "forward trace does not match parameter shapes".to_string(),
        ));
    }

    let probs = trace.probabilities();
    let mut delta: Vec<f64> = probs.to_vec();
    delta[label.code()] -= 1.0;

    let mut upper_weights: Vec<Vec<f64>> = Vec::with_capacity(layers.saturating_sub(1));
    let mut biases: Vec<Vec<f64>> = vec![Vec::new(); layers];

    for k in (1..layers).rev() {
        let fan_out = params.layer_sizes[k + 1];
        let a_prev = &trace.activations[k - 1];
        let mut grad_w = vec![0.0f64; a_prev.len() * fan_out];
        for (i, &a) in a_prev.iter().enumerate() {
            if a != 0.0 {
                for o in 0..fan_out {
                    grad_w[i * fan_out + o] = a * delta[o];
                }
            }
        }
        biases[k] = delta.clone();
        upper_weights.push(grad_w);

        // propagate through weights, then gate by ReLU'(z_{k-1})
        let mut delta_prev = vec![0.0f64; a_prev.len()];
        for (i, dp) in delta_prev.iter_mut().enumerate() {
            let row = &params.weights[k][i * fan_out..(i + 1) * fan_out];
            let mut sum = 0.0;
            for o in 0..fan_out {
                sum += row[o] * delta[o];
            }
            *dp = if trace.pre_activations[k - 1][i] > 0.0 {
                sum
            } else {
                0.0
            };
        }
        delta = delta_prev;
    }
    upper_weights.reverse();

    biases[0] = delta.clone();
    let first_layer_rows = trace
        .input
        .iter()
        .map(|(j, value)| (j, delta.iter().map(|&d| value * d).collect()))
        .collect();

    Ok(MlpGradients {
        first_layer_rows,
        upper_weights,
        biases,
    })
}

/// MLP training hyperparameters.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub batch_size: usize,
    pub epochs: usize,
    pub l2: f64,
    pub seed: u64,
    /// Early stopping patience on held-out loss; `None` disables the
    /// validation carve-out entirely.
    pub early_stop_patience: Option<usize>,
    /// Fraction of the training set carved out for validation when early
    /// stopping is enabled.
    pub validation_fraction: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: 0.05,
            batch_size: 256,
            epochs: 15,
            l2: 1e-6,
            seed: 42,
            early_stop_patience: Some(3),
            validation_fraction: 0.05,
        }
    }
}

/// One row of the training history.
#[derive(Clone, Debug, PartialEq)]
pub struct EpochStats {
    pub epoch: usize,
    pub train_loss: f64,
    pub val_loss: Option<f64>,
}

fn materialize(params: &MlpParameters, w0_scale: f64) -> MlpParameters {
    let mut out = params.clone();
    for w in &mut out.weights[0] {
        *w *= w0_scale;
    }
    out
}

fn mean_loss_scaled(
    params: &MlpParameters,
    w0_scale: f64,
    x: &[SparseVector],
    y: &[ClassLabel],
    indices: &[usize],
) -> Result<f64> {
    let mut total = 0.0;
    for &i in indices {
        let trace = forward_scaled(params, &x[i], w0_scale)?;
        total += cross_entropy_loss(trace.probabilities(), y[i]);
    }
    Ok(total / indices.len() as f64)
}

/// Mean cross-entropy of an MLP over a dataset.
pub fn mlp_mean_loss(params: &MlpParameters, x: &[SparseVector], y: &[ClassLabel]) -> Result<f64> {
    if x.is_empty() || x.len() != y.len() {
        return Err(Error::Data(
            "loss needs matching non-empty inputs".to_string(),
        ));
    }
    let indices: Vec<usize> = (0..x.len()).collect();
    mean_loss_scaled(params, 1.0, x, y, &indices)
}

/// Train an MLP by seeded, shuffled mini-batch SGD from the given initial
/// parameters.
///
/// With early stopping enabled the returned parameters are the snapshot with
/// the lowest held-out loss; otherwise the final parameters. The history has
/// one entry per completed epoch. Deterministic given `(initial, x, y, config)`.
pub fn train_mlp(
    initial: MlpParameters,
    x: &[SparseVector],
    y: &[ClassLabel],
    config: &TrainConfig,
) -> Result<(MlpParameters, Vec<EpochStats>)> {
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
    if !(0.0..1.0).contains(&config.validation_fraction) {
        return Err(Error::Config(format!(
            "validation fraction must lie in [0, 1), got {}",
            config.validation_fraction
        )));
    }
    if x.len() != y.len() || x.is_empty() {
        return Err(Error::Data(format!(
            "training set must be non-empty with matching lengths ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    for (i, v) in x.iter().enumerate() {
        if v.dim() != initial.input_dim() {
            return Err(Error::Data(format!(
                "dimension mismatch: sample {i} has dimension {}, MLP expects {}",
                v.dim(),
                initial.input_dim()
            )));
        }
    }
    let mut counts = [0usize; CLASS_COUNT];
    for &label in y {
        counts[label.code()] += 1;
    }
    for label in ClassLabel::ALL {
        if counts[label.code()] == 0 {
            return Err(Error::Data(format!(
                "class '{label}' absent from training data"
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    // validation carve-out, stratified per class in fixed class order
    let mut train_idx: Vec<usize> = Vec::with_capacity(x.len());
    let mut val_idx: Vec<usize> = Vec::new();
    if config.early_stop_patience.is_some() && config.validation_fraction > 0.0 {
        let mut by_class: [Vec<usize>; CLASS_COUNT] = Default::default();
        for (i, &label) in y.iter().enumerate() {
            by_class[label.code()].push(i);
        }
        for class_indices in &mut by_class {
            class_indices.shuffle(&mut rng);
            let want = (config.validation_fraction * class_indices.len() as f64).round() as usize;
            let take = want.min(class_indices.len().saturating_sub(1));
            val_idx.extend_from_slice(&class_indices[..take]);
            train_idx.extend_from_slice(&class_indices[take..]);
        }
        train_idx.sort_unstable();
        val_idx.sort_unstable();
    } else {
        train_idx.extend(0..x.len());
    }
    let early_stopping = config.early_stop_patience.is_some() && !val_idx.is_empty();

    let hidden_width = initial.layer_sizes[1];
    let layers = initial.num_weight_layers();
    let mut params = initial;
    let mut w0_scale = 1.0f64;
    let decay = 1.0 - config.learning_rate * config.l2;

    let mut history = Vec::with_capacity(config.epochs);
    let mut best: Option<(f64, MlpParameters)> = None;
    let mut epochs_without_improvement = 0usize;

    let mut first_rows: BTreeMap<u32, Vec<f64>> = BTreeMap::new();

    'training: for epoch in 1..=config.epochs {
        train_idx.shuffle(&mut rng);
        let mut epoch_loss_sum = 0.0;

        for (batch_no, batch) in train_idx.chunks(config.batch_size).enumerate() {
            first_rows.clear();
            let mut upper: Vec<Vec<f64>> = (1..layers)
                .map(|k| vec![0.0f64; params.layer_sizes[k] * params.layer_sizes[k + 1]])
                .collect();
            let mut bias_grads: Vec<Vec<f64>> = (0..layers)
                .map(|k| vec![0.0f64; params.layer_sizes[k + 1]])
                .collect();

            let mut batch_loss_sum = 0.0;
            for &i in batch {
                let trace = forward_scaled(&params, &x[i], w0_scale)?;
                batch_loss_sum += cross_entropy_loss(trace.probabilities(), y[i]);
                let grads = backward(&params, &trace, y[i])?;
                for (j, row) in grads.first_layer_rows {
                    let acc = first_rows
                        .entry(j)
                        .or_insert_with(|| vec![0.0f64; hidden_width]);
                    for (a, g) in acc.iter_mut().zip(&row) {
                        *a += g;
                    }
                }
                for (acc, g) in upper.iter_mut().zip(&grads.upper_weights) {
                    for (a, v) in acc.iter_mut().zip(g) {
                        *a += v;
                    }
                }
                for (acc, g) in bias_grads.iter_mut().zip(&grads.biases) {
                    for (a, v) in acc.iter_mut().zip(g) {
                        *a += v;
                    }
                }
            }

            let batch_len = batch.len() as f64;
            if !(batch_loss_sum / batch_len).is_finite() {
                return Err(Error::Numerical(format!(
                    "non-finite training loss at epoch {epoch}, batch {}",
                    batch_no + 1
                )));
            }
            epoch_loss_sum += batch_loss_sum;

            // first layer: multiplicative L2 decay via the scale factor,
            // sparse data-gradient update on touched rows only
            w0_scale *= decay;
            let step0 = config.learning_rate / (batch_len * w0_scale);
            for (&j, row) in first_rows.iter() {
                let w = &mut params.weights[0]
                    [j as usize * hidden_width..(j as usize + 1) * hidden_width];
                for (value, g) in w.iter_mut().zip(row) {
                    *value -= step0 * g;
                }
            }
            for k in 1..layers {
                let lr = config.learning_rate;
                for (value, g) in params.weights[k].iter_mut().zip(&upper[k - 1]) {
                    *value = *value * decay - lr * g / batch_len;
                }
            }
            for (layer_biases, grads) in params.biases.iter_mut().zip(&bias_grads) {
                let lr = config.learning_rate;
                for (value, g) in layer_biases.iter_mut().zip(grads) {
                    *value -= lr * g / batch_len;
                }
            }
        }

        let train_loss = epoch_loss_sum / train_idx.len() as f64;
        let val_loss = if early_stopping {
            Some(mean_loss_scaled(&params, w0_scale, x, y, &val_idx)?)
        } else {
            None
        };
        history.push(EpochStats {
            epoch,
            train_loss,
            val_loss,
        });

        if early_stopping {
            let current = val_loss.unwrap();
            if !current.is_finite() {
                return Err(Error::Numerical(format!(
                    "non-finite validation loss at epoch {epoch}"
                )));
            }
            let improved = best.as_ref().is_none_or(|(b, _)| current < *b);
            if improved {
                best = Some((current, materialize(&params, w0_scale)));
                epochs_without_improvement = 0;
            } else {
                epochs_without_improvement += 1;
                if epochs_without_improvement >= config.early_stop_patience.unwrap() {
                    break 'training;
                }
            }
        }
    }

    let final_params = match best {
        Some((_, best_params)) if early_stopping => best_params,
        _ => materialize(&params, w0_scale),
    };
    if !final_params.all_finite() {
        return Err(Error::Numerical(
            "trained MLP parameters are not finite".to_string(),
        ));
    }
    Ok((final_params, history))
}

/// Compare [`backward`] against central finite differences of the loss on a
/// small network; returns the maximum relative error over all parameters.
/// Near-zero pairs (both sides below 1e-8) count as exact matches.
pub fn gradient_check(
    params: &MlpParameters,
    x: &SparseVector,
    label: ClassLabel,
    epsilon: f64,
) -> Result<f64> {
    if epsilon <= 0.0 || !epsilon.is_finite() {
        return Err(Error::Config(format!(
            "epsilon must be a positive finite number, got {epsilon}"
        )));
    }
    if params.parameter_count() > 1000 {
        return Err(Error::Config(format!(
            "gradient_check is limited to networks of at most 1000 parameters, got {}",
            params.parameter_count()
        )));
    }

    let trace = forward(params, x)?;
    let analytic = backward(params, &trace, label)?;

    let loss_at = |p: &MlpParameters| -> Result<f64> {
        let t = forward(p, x)?;
        Ok(cross_entropy_loss(t.probabilities(), label))
    };

    let mut max_rel = 0.0f64;
    let mut check = |analytic_value: f64, numeric_value: f64| {
        if analytic_value.abs() <= 1e-8 && numeric_value.abs() <= 1e-8 {
            return;
        }
        let rel =
            (analytic_value - numeric_value).abs() / analytic_value.abs().max(numeric_value.abs());
        max_rel = max_rel.max(rel);
    };

    let layers = params.num_weight_layers();
    let mut work = params.clone();
    for k in 0..layers {
        let (fan_in, fan_out) = (params.layer_sizes[k], params.layer_sizes[k + 1]);
        for i in 0..fan_in {
            for o in 0..fan_out {
                let idx = i * fan_out + o;
                let original = work.weights[k][idx];
                work.weights[k][idx] = original + epsilon;
                let plus = loss_at(&work)?;
                work.weights[k][idx] = original - epsilon;
                let minus = loss_at(&work)?;
                work.weights[k][idx] = original;
                check(analytic.weight(k, i, o), (plus - minus) / (2.0 * epsilon));
            }
        }
        for o in 0..fan_out {
            let original = work.biases[k][o];
            work.biases[k][o] = original + epsilon;
            let plus = loss_at(&work)?;
            work.biases[k][o] = original - epsilon;
            let minus = loss_at(&work)?;
            work.biases[k][o] = original;
            check(analytic.bias(k, o), (plus - minus) / (2.0 * epsilon));
        }
    }
    Ok(max_rel)
}
