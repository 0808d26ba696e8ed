//! Effective configuration: command-line flags override the optional config
//! file (`URLSIFT_CONFIG`), which overrides built-in defaults. The resolved
//! values are echoed into report headers and stored in bundle metadata.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use urlsift_core::bundle::{FeatureMode, ModelKind};
use urlsift_core::{Error, Result};

/// Key/value pairs loaded from the config file named by `URLSIFT_CONFIG`.
#[derive(Debug, Default)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

const KNOWN_KEYS: [&str; 15] = [
    "seed",
    "test-fraction",
    "url-column",
    "label-column",
    "min-df",
    "max-features",
    "features",
    "alpha",
    "lr",
    "epochs",
    "batch-size",
    "l2",
    "hidden",
    "patience",
    "val-fraction",
];

impl ConfigFile {
    /// Load from the `URLSIFT_CONFIG` environment variable, if set.
    pub fn from_env() -> Result<ConfigFile> {
        match std::env::var_os("URLSIFT_CONFIG") {
            Some(path) => ConfigFile::load(Path::new(&path)),
            None => Ok(ConfigFile::default()),
        }
    }

    /// Parse `key = value` lines; `#` starts a comment.
    pub fn load(path: &Path) -> Result<ConfigFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut values = BTreeMap::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!(
                    "config file {} line {}: expected 'key = value'",
                    path.display(),
                    line_no + 1
                ))
            })?;
            let key = key.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(Error::Config(format!(
                    "config file {} line {}: unknown key '{key}'",
                    path.display(),
                    line_no + 1
                )));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(ConfigFile { values })
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                Error::Config(format!("config key '{key}' has unparsable value '{raw}'"))
            }),
        }
    }
}

/// flag > config file > default.
pub fn resolve<T>(flag: Option<T>, config: Option<T>, default: T) -> T {
    flag.or(config).unwrap_or(default)
}

/// Fully resolved training settings.
#[derive(Debug, Clone)]
pub struct TrainSettings {
    pub model: ModelKind,
    pub feature_mode: FeatureMode,
    pub seed: u64,
    pub test_fraction: f64,
    pub url_column: String,
    pub label_column: String,
    pub min_df: u32,
    pub max_features: usize,
    pub alpha: f64,
    pub learning_rate: f64,
    pub epochs: usize,
    pub batch_size: usize,
    pub l2: f64,
    pub hidden: Vec<usize>,
    pub patience: Option<usize>,
    pub val_fraction: f64,
}

impl TrainSettings {
    pub fn from_args(args: &crate::args::TrainArgs, config: &ConfigFile) -> Result<TrainSettings> {
        let model: ModelKind = args.model.parse()?;
        let feature_mode: FeatureMode = match &args.features {
            Some(s) => s.parse()?,
            None => match config.get::<String>("features")? {
                Some(s) => s.parse()?,
                None => FeatureMode::TfIdf,
            },
        };

        // lr and epochs default per model kind
        let (default_lr, default_epochs) = match model {
            ModelKind::Mlp => (0.05, 15),
            _ => (0.1, 10),
        };

        let hidden_spec = resolve(
            args.hidden.clone(),
            config.get::<String>("hidden")?,
            "128".to_string(),
        );
        let hidden = parse_hidden(&hidden_spec)?;

        let patience = if args.no_early_stop {
            None
        } else {
            Some(resolve(args.patience, config.get("patience")?, 3))
        };

        let settings = TrainSettings {
            model,
            feature_mode,
            seed: resolve(args.seed, config.get("seed")?, 42),
            test_fraction: resolve(args.test_fraction, config.get("test-fraction")?, 0.2),
            url_column: resolve(
                args.url_column.clone(),
                config.get("url-column")?,
                "url".to_string(),
            ),
            label_column: resolve(
                args.label_column.clone(),
                config.get("label-column")?,
                "type".to_string(),
            ),
            min_df: resolve(args.min_df, config.get("min-df")?, 2),
            max_features: resolve(args.max_features, config.get("max-features")?, 100_000),
            alpha: resolve(args.alpha, config.get("alpha")?, 1.0),
            learning_rate: resolve(args.lr, config.get("lr")?, default_lr),
            epochs: resolve(args.epochs, config.get("epochs")?, default_epochs),
            batch_size: resolve(args.batch_size, config.get("batch-size")?, 256),
            l2: resolve(args.l2, config.get("l2")?, 1e-6),
            hidden,
            patience,
            val_fraction: resolve(args.val_fraction, config.get("val-fraction")?, 0.05),
        };
        Ok(settings)
    }

    /// Hyperparameter pairs relevant to the chosen model, for bundle
    /// metadata and report headers.
    pub fn hyperparam_pairs(&self) -> Vec<(String, String)> {
        let mut pairs = vec![
            (
                "features".to_string(),
                self.feature_mode.as_str().to_string(),
            ),
            ("seed".to_string(), self.seed.to_string()),
            ("test-fraction".to_string(), self.test_fraction.to_string()),
            ("min-df".to_string(), self.min_df.to_string()),
            ("max-features".to_string(), self.max_features.to_string()),
        ];
        match self.model {
            ModelKind::NaiveBayes => {
                pairs.push(("alpha".to_string(), self.alpha.to_string()));
            }
            ModelKind::LogReg => {
                pairs.push(("lr".to_string(), self.learning_rate.to_string()));
                pairs.push(("epochs".to_string(), self.epochs.to_string()));
                pairs.push(("batch-size".to_string(), self.batch_size.to_string()));
                pairs.push(("l2".to_string(), self.l2.to_string()));
            }
            ModelKind::Mlp => {
                let hidden = self
                    .hidden
                    .iter()
                    .map(|h| h.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                pairs.push(("hidden".to_string(), hidden));
                pairs.push(("lr".to_string(), self.learning_rate.to_string()));
                pairs.push(("epochs".to_string(), self.epochs.to_string()));
                pairs.push(("batch-size".to_string(), self.batch_size.to_string()));
                pairs.push(("l2".to_string(), self.l2.to_string()));
                pairs.push((
                    "patience".to_string(),
                    self.patience.map_or("none".to_string(), |p| p.to_string()),
                ));
                pairs.push(("val-fraction".to_string(), self.val_fraction.to_string()));
            }
        }
        pairs
    }
}

fn parse_hidden(spec: &str) -> Result<Vec<usize>> {
    let widths: Vec<usize> = spec
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Config(format!("bad hidden layer width '{part}'")))
        })
        .collect::<Result<_>>()?;
    if widths.is_empty() || widths.contains(&0) {
        return Err(Error::Config(format!(
            "hidden layer spec '{spec}' must list positive widths"
        )));
    }
    Ok(widths)
}

/// Render pairs as `k=v k=v ...` for report headers.
pub fn render_pairs(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}
