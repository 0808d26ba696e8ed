use urlsift_core::bundle::{
    save_bundle, BundleMeta, FeatureMode, ModelBundle, ModelKind, ModelParams,
};
use urlsift_core::dataset::{class_distribution, load_csv, stratified_split};
use urlsift_core::features::{
    build_vocabulary, count_vectorize, fit_idf, tfidf_transform, SparseVector,
};
use urlsift_core::linear::{train_logreg, train_multinomial_nb, LogRegConfig};
use urlsift_core::mlp::{init_mlp, train_mlp, TrainConfig};
use urlsift_core::tokenizer::tokenize_batch;
use urlsift_core::Result;

use crate::args::TrainArgs;
use crate::settings::{render_pairs, ConfigFile, TrainSettings};

pub fn run(args: &TrainArgs) -> Result<()> {
    let config = ConfigFile::from_env()?;
    let settings = TrainSettings::from_args(args, &config)?;

    let dataset = load_csv(&args.data, &settings.url_column, &settings.label_column)?;
    let (train, test) = stratified_split(&dataset, settings.test_fraction, settings.seed)?;

    println!("# urlsift train");
    println!("# model: {}", settings.model);
    println!("# data: {}", args.data.display());
    println!("# digest: {:#018x}", dataset.source_digest);
    println!("# config: {}", render_pairs(&settings.hyperparam_pairs()));
    println!();
    println!("train split ({} records)", train.len());
    print!("{}", class_distribution(&train)?.render_text());
    println!();
    println!("test split ({} records)", test.len());
    print!("{}", class_distribution(&test)?.render_text());
    println!();

    let sequences = tokenize_batch(&train.urls())?;
    let vocabulary = build_vocabulary(&sequences, settings.min_df, settings.max_features)?;
    let counts: Vec<SparseVector> = sequences
        .iter()
        .map(|s| count_vectorize(s, &vocabulary))
        .collect();
    let idf = fit_idf(&counts)?;
    let features: Vec<SparseVector> = match settings.feature_mode {
        FeatureMode::TfIdf => counts
            .iter()
            .map(|c| tfidf_transform(c, &idf))
            .collect::<Result<_>>()?,
        FeatureMode::Counts => counts,
    };
    let labels = train.labels();
    println!(
        "vocabulary: {} tokens (min-df {}, cap {})",
        vocabulary.size(),
        settings.min_df,
        settings.max_features
    );

    let params = match settings.model {
        ModelKind::NaiveBayes => {
            ModelParams::NaiveBayes(train_multinomial_nb(&features, &labels, settings.alpha)?)
        }
        ModelKind::LogReg => {
            let lr_config = LogRegConfig {
                learning_rate: settings.learning_rate,
                epochs: settings.epochs,
                l2: settings.l2,
                batch_size: settings.batch_size,
                seed: settings.seed,
            };
            ModelParams::LogReg(train_logreg(&features, &labels, &lr_config)?)
        }
        ModelKind::Mlp => {
            let mut layer_sizes = Vec::with_capacity(settings.hidden.len() + 2);
            layer_sizes.push(vocabulary.size());
            layer_sizes.extend_from_slice(&settings.hidden);
            layer_sizes.push(4);
            let initial = init_mlp(&layer_sizes, settings.seed)?;
            let train_config = TrainConfig {
                learning_rate: settings.learning_rate,
                batch_size: settings.batch_size,
                epochs: settings.epochs,
                l2: settings.l2,
                seed: settings.seed,
                early_stop_patience: settings.patience,
                validation_fraction: settings.val_fraction,
            };
            let (params, history) = train_mlp(initial, &features, &labels, &train_config)?;
            println!();
            println!("epoch,train_loss,val_loss");
            for stats in &history {
                println!(
                    "{},{:.6},{}",
                    stats.epoch,
                    stats.train_loss,
                    stats.val_loss.map_or(String::new(), |v| format!("{v:.6}"))
                );
            }
            ModelParams::Mlp(params)
        }
    };

    let bundle = ModelBundle {
        feature_mode: settings.feature_mode,
        vocabulary,
        idf,
        params,
        meta: BundleMeta::new(
            settings.seed,
            dataset.source_digest,
            settings.hyperparam_pairs(),
        ),
    };
    save_bundle(&bundle, &args.out)?;
    println!();
    println!("wrote bundle to {}", args.out.display());
    Ok(())
}
