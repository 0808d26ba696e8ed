use urlsift_core::bundle::load_bundle;
use urlsift_core::dataset::{load_csv, stratified_split, ClassLabel};
use urlsift_core::metrics::{
    classification_report, confusion_matrix, render_confusion, render_report, ReportFormat,
};
use urlsift_core::{Error, Result};

use crate::args::EvaluateArgs;
use crate::settings::{render_pairs, resolve, ConfigFile};

#[derive(Clone, Copy, PartialEq)]
enum Split {
    Test,
    Train,
}

pub fn run(args: &EvaluateArgs) -> Result<()> {
    let config = ConfigFile::from_env()?;
    let bundle = load_bundle(&args.bundle)?;

    let url_column = resolve(
        args.url_column.clone(),
        config.get("url-column")?,
        "url".to_string(),
    );
    let label_column = resolve(
        args.label_column.clone(),
        config.get("label-column")?,
        "type".to_string(),
    );
    let format: ReportFormat = match &args.format {
        Some(s) => s.parse()?,
        None => ReportFormat::Text,
    };
    let split = match args.split.as_deref() {
        None | Some("test") => Split::Test,
        Some("train") => Split::Train,
        Some(other) => {
            return Err(Error::Config(format!(
                "unknown split '{other}' (expected test or train)"
            )))
        }
    };

    // split parameters come from the bundle unless overridden
    let meta_fraction: Option<f64> = bundle
        .meta
        .hyperparam("test-fraction")
        .and_then(|v| v.parse().ok());
    let seed = args.seed.unwrap_or(bundle.meta.seed);
    let test_fraction = args.test_fraction.or(meta_fraction).unwrap_or(0.2);

    let dataset = load_csv(&args.data, &url_column, &label_column)?;

    let mut warnings = Vec::new();
    if dataset.source_digest != bundle.meta.dataset_digest {
        warnings.push(format!(
            "WARNING: dataset digest {:#018x} differs from the bundle's {:#018x}; the split may not match training",
            dataset.source_digest, bundle.meta.dataset_digest
        ));
    }
    if args.seed.is_some() && seed != bundle.meta.seed {
        warnings.push(format!(
            "WARNING: seed {seed} overrides the bundle's {}; the split differs from training",
            bundle.meta.seed
        ));
    }
    if let (Some(flag), Some(meta)) = (args.test_fraction, meta_fraction) {
        if flag != meta {
            warnings.push(format!(
                "WARNING: test fraction {flag} overrides the bundle's {meta}"
            ));
        }
    }

    let (train, test) = stratified_split(&dataset, test_fraction, seed)?;
    let subset = match split {
        Split::Test => test,
        Split::Train => train,
    };

    println!("# urlsift evaluate");
    println!("# bundle: {} ({})", args.bundle.display(), bundle.kind());
    println!(
        "# data: {} digest {:#018x}",
        args.data.display(),
        dataset.source_digest
    );
    println!(
        "# split: {}  seed: {seed}  test-fraction: {test_fraction}",
        match split {
            Split::Test => "test",
            Split::Train => "TRAIN SPLIT",
        }
    );
    println!("# trained-with: {}", render_pairs(&bundle.meta.hyperparams));
    for warning in &warnings {
        println!("# {warning}");
    }
    println!();

    let y_true = subset.labels();
    let mut y_pred: Vec<ClassLabel> = Vec::with_capacity(subset.len());
    for url in subset.urls() {
        y_pred.push(bundle.classify(url)?.label);
    }
    let cm = confusion_matrix(&y_true, &y_pred)?;
    let report = classification_report(&cm);
    print!("{}", render_report(&report, format));
    println!();
    print!("{}", render_confusion(&cm, format));
    Ok(())
}
