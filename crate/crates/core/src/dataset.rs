//! Labeled URL corpus: CSV ingest, seeded stratified splitting, class
//! distribution reports.

use std::fmt;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Number of URL classes.
pub const CLASS_COUNT: usize = 4;

/// The four URL classes, in the fixed order used by every table, vector,
/// and tie-break rule in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum ClassLabel {
    Benign = 0,
    Defacement = 1,
    Malware = 2,
    Phishing = 3,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; CLASS_COUNT] = [
        ClassLabel::Benign,
        ClassLabel::Defacement,
        ClassLabel::Malware,
        ClassLabel::Phishing,
    ];

    /// Fixed integer code in `[0, 3]`.
    pub fn code(self) -> usize {
        self as usize
    }

    pub fn from_code(code: usize) -> Option<ClassLabel> {
        ClassLabel::ALL.get(code).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Benign => "benign",
            ClassLabel::Defacement => "defacement",
            ClassLabel::Malware => "malware",
            ClassLabel::Phishing => "phishing",
        }
    }

    /// Case-insensitive parse of the four label names.
    pub fn parse(s: &str) -> Option<ClassLabel> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "benign" => Some(ClassLabel::Benign),
            "defacement" => Some(ClassLabel::Defacement),
            "malware" => Some(ClassLabel::Malware),
            "phishing" => Some(ClassLabel::Phishing),
            _ => None,
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One corpus row: a trimmed, non-empty URL and its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UrlRecord {
    pub url: String,
    pub label: ClassLabel,
}

/// Ordered list of records plus a digest of the file they came from.
#[derive(Clone, Debug, PartialEq)]
pub struct LabeledDataset {
    pub records: Vec<UrlRecord>,
    pub source_digest: u64,
}

impl LabeledDataset {
    pub fn new(records: Vec<UrlRecord>, source_digest: u64) -> Self {
        Self {
            records,
            source_digest,
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn labels(&self) -> Vec<ClassLabel> {
        self.records.iter().map(|r| r.label).collect()
    }

    pub fn urls(&self) -> Vec<&str> {
        self.records.iter().map(|r| r.url.as_str()).collect()
    }
}

/// Per-class counts and fractions for one dataset.
#[derive(Clone, Debug, PartialEq)]
pub struct DistributionReport {
    pub counts: [usize; CLASS_COUNT],
    pub fractions: [f64; CLASS_COUNT],
    pub total: usize,
}

impl DistributionReport {
    /// Aligned text table, one row per class.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<12} {:>10} {:>10}\n",
            "class", "count", "fraction"
        ));
        for label in ClassLabel::ALL {
            out.push_str(&format!(
                "{:<12} {:>10} {:>10.6}\n",
                label.as_str(),
                self.counts[label.code()],
                self.fractions[label.code()]
            ));
        }
        out.push_str(&format!(
            "{:<12} {:>10} {:>10.6}\n",
            "total", self.total, 1.0
        ));
        out
    }

    /// `class,count,fraction` rows with fractions at 6 decimal places.
    pub fn render_csv(&self) -> String {
        let mut out = String::from("class,count,fraction\n");
        for label in ClassLabel::ALL {
            out.push_str(&format!(
                "{},{},{:.6}\n",
                label.as_str(),
                self.counts[label.code()],
                self.fractions[label.code()]
            ));
        }
        out
    }
}

/// 64-bit FNV-1a over a byte slice; used as the dataset digest.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// Load a labeled URL corpus from a headered CSV file.
///
/// Rows are returned in file order. Labels are matched case-insensitively
/// against the four class names; anything else is a row-numbered data error,
/// as are empty URL fields and non-UTF-8 rows.
pub fn load_csv(path: &Path, url_column: &str, label_column: &str) -> Result<LabeledDataset> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let digest = fnv1a64(&bytes);

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(bytes.as_slice());

    let headers = reader
        .byte_headers()
        .map_err(|e| Error::Data(format!("cannot read CSV header of {}: {e}", path.display())))?
        .clone();
    let find_column = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name.as_bytes())
            .ok_or_else(|| {
                Error::Config(format!(
                    "column '{name}' not found in {} (header: {})",
                    path.display(),
                    String::from_utf8_lossy(&headers.iter().collect::<Vec<_>>().join(&b","[..]))
                ))
            })
    };
    let url_idx = find_column(url_column)?;
    let label_idx = find_column(label_column)?;

    let mut records = Vec::new();
    for (i, row) in reader.byte_records().enumerate() {
        let row_no = i + 1; // 1-based data row, header excluded
        let row = row.map_err(|e| Error::Data(format!("row {row_no}: malformed CSV: {e}")))?;
        let url_raw = row
            .get(url_idx)
            .ok_or_else(|| Error::Data(format!("row {row_no}: missing field '{url_column}'")))?;
        let url = std::str::from_utf8(url_raw)
            .map_err(|_| Error::Data(format!("row {row_no}: URL field is not valid UTF-8")))?
            .trim();
        if url.is_empty() {
            return Err(Error::Data(format!("row {row_no}: empty URL field")));
        }
        let label_raw = row
            .get(label_idx)
            .ok_or_else(|| Error::Data(format!("row {row_no}: missing field '{label_column}'")))?;
        let label_str = std::str::from_utf8(label_raw)
            .map_err(|_| Error::Data(format!("row {row_no}: label field is not valid UTF-8")))?;
        let label = ClassLabel::parse(label_str).ok_or_else(|| {
            Error::Data(format!(
                "row {row_no}: unknown label '{}' (expected one of benign, defacement, malware, phishing)",
                label_str.trim()
            ))
        })?;
        records.push(UrlRecord {
            url: url.to_string(),
            label,
        });
    }

    Ok(LabeledDataset::new(records, digest))
}

/// Deterministic stratified train/test split.
///
/// Per class `c`, the test partition receives `round(test_fraction * |c|)`
/// records, chosen by a seeded shuffle of that class's row indices. Records
/// keep their original file order inside each partition. Identical
/// `(dataset, fraction, seed)` inputs give identical splits.
pub fn stratified_split(
    dataset: &LabeledDataset,
    test_fraction: f64,
    seed: u64,
) -> Result<(LabeledDataset, LabeledDataset)> {
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(Error::Config(format!(
            "test fraction must lie in (0, 1), got {test_fraction}"
        )));
    }

    let mut by_class: [Vec<usize>; CLASS_COUNT] = Default::default();
    for (i, rec) in dataset.records.iter().enumerate() {
        by_class[rec.label.code()].push(i);
    }
    for label in ClassLabel::ALL {
        let n = by_class[label.code()].len();
        if n == 1 {
            return Err(Error::Data(format!(
                "class '{label}' has only 1 record; stratified splitting needs at least 2"
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut test_mask = vec![false; dataset.len()];
    for label in ClassLabel::ALL {
        let indices = &mut by_class[label.code()];
        indices.shuffle(&mut rng);
        let take = (test_fraction * indices.len() as f64).round() as usize;
        for &idx in indices.iter().take(take) {
            test_mask[idx] = true;
        }
    }

    let mut train = Vec::with_capacity(dataset.len());
    let mut test = Vec::new();
    for (i, rec) in dataset.records.iter().enumerate() {
        if test_mask[i] {
            test.push(rec.clone());
        } else {
            train.push(rec.clone());
        }
    }

    Ok((
        LabeledDataset::new(train, dataset.source_digest),
        LabeledDataset::new(test, dataset.source_digest),
    ))
}

/// Per-class counts and fractions.
pub fn class_distribution(dataset: &LabeledDataset) -> Result<DistributionReport> {
    if dataset.is_empty() {
        return Err(Error::Data(
            "cannot report class distribution of an empty dataset".to_string(),
        ));
    }
    let mut counts = [0usize; CLASS_COUNT];
    for rec in &dataset.records {
        counts[rec.label.code()] += 1;
    }
    let total = dataset.len();
    let mut fractions = [0.0; CLASS_COUNT];
    for c in 0..CLASS_COUNT {
        fractions[c] = counts[c] as f64 / total as f64;
    }
    Ok(DistributionReport {
        counts,
        fractions,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::io::Write;

    fn write_csv(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f.flush().unwrap();
        f
    }

    fn dataset_from(labels: &[ClassLabel]) -> LabeledDataset {
        let records = labels
            .iter()
            .enumerate()
            .map(|(i, &label)| UrlRecord {
                url: format!("site{i}.example/{label}"),
                label,
            })
            .collect();
        LabeledDataset::new(records, 0)
    }

    #[test]
    fn label_codes_are_fixed_and_bijective() {
        assert_eq!(ClassLabel::Benign.code(), 0);
        assert_eq!(ClassLabel::Defacement.code(), 1);
        assert_eq!(ClassLabel::Malware.code(), 2);
        assert_eq!(ClassLabel::Phishing.code(), 3);
        for label in ClassLabel::ALL {
            assert_eq!(ClassLabel::from_code(label.code()), Some(label));
            assert_eq!(ClassLabel::parse(label.as_str()), Some(label));
        }
        assert_eq!(ClassLabel::from_code(4), None);
    }

    #[test]
    fn load_csv_parses_rows_in_order() {
        let f = write_csv("url,type\nbr-icloud.com.br,phishing\nhttp://a.b/c,BENIGN\n");
        let ds = load_csv(f.path(), "url", "type").unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(
            ds.records[0],
            UrlRecord {
                url: "br-icloud.com.br".to_string(),
                label: ClassLabel::Phishing
            }
        );
        // case-folded label
        assert_eq!(ds.records[1].label, ClassLabel::Benign);
        assert_eq!(ds.records[1].url, "http://a.b/c");
    }

    #[test]
    fn load_csv_strips_whitespace_and_keeps_duplicates() {
        let f = write_csv("url,type\n  spaced.example  ,benign\nspaced.example,benign\n");
        let ds = load_csv(f.path(), "url", "type").unwrap();
        assert_eq!(ds.records[0].url, "spaced.example");
        assert_eq!(ds.len(), 2);
    }

    #[test]
    fn load_csv_rejects_unknown_label_with_row_number() {
        let f = write_csv("url,type\nhttp://x.y,spam\n");
        let err = load_csv(f.path(), "url", "type").unwrap_err();
        match err {
            Error::Data(msg) => {
                assert!(msg.contains("row 1"), "message was: {msg}");
                assert!(msg.contains("spam"), "message was: {msg}");
            }
            other => panic!("expected data error, got {other:?}"),
        }
    }

    #[test]
    fn load_csv_rejects_empty_url_with_row_number() {
        let f = write_csv("url,type\nok.example,benign\n   ,benign\n");
        let err = load_csv(f.path(), "url", "type").unwrap_err();
        match err {
            Error::Data(msg) => assert!(msg.contains("row 2"), "message was: {msg}"),
            other => panic!("expected data error, got {other:?}"),
        }
    }

    #[test]
    fn load_csv_missing_column_is_config_error_naming_it() {
        let f = write_csv("address,type\nx.y,benign\n");
        let err = load_csv(f.path(), "url", "type").unwrap_err();
        match err {
            Error::Config(msg) => assert!(msg.contains("'url'"), "message was: {msg}"),
            other => panic!("expected config error, got {other:?}"),
        }
    }

    #[test]
    fn load_csv_rejects_non_utf8_row() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(b"url,type\n").unwrap();
        f.write_all(b"\xff\xfe.example,benign\n").unwrap();
        f.flush().unwrap();
        let err = load_csv(f.path(), "url", "type").unwrap_err();
        match err {
            Error::Data(msg) => assert!(msg.contains("UTF-8"), "message was: {msg}"),
            other => panic!("expected data error, got {other:?}"),
        }
    }

    #[test]
    fn load_csv_missing_file_is_io_error() {
        let err = load_csv(Path::new("/nonexistent/x.csv"), "url", "type").unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn split_takes_rounded_per_class_counts() {
        let ds =
            dataset_from(&[vec![ClassLabel::Benign; 5], vec![ClassLabel::Phishing; 5]].concat());
        for seed in [0u64, 1, 42, 12345] {
            let (train, test) = stratified_split(&ds, 0.2, seed).unwrap();
            let test_counts = class_distribution(&test).unwrap().counts;
            assert_eq!(test_counts[ClassLabel::Benign.code()], 1);
            assert_eq!(test_counts[ClassLabel::Phishing.code()], 1);
            assert_eq!(train.len(), 8);
        }
    }

    #[test]
    fn split_is_deterministic() {
        let ds = dataset_from(
            &[
                vec![ClassLabel::Benign; 20],
                vec![ClassLabel::Defacement; 7],
                vec![ClassLabel::Malware; 3],
                vec![ClassLabel::Phishing; 11],
            ]
            .concat(),
        );
        let a = stratified_split(&ds, 0.25, 99).unwrap();
        let b = stratified_split(&ds, 0.25, 99).unwrap();
        assert_eq!(a, b);
        let c = stratified_split(&ds, 0.25, 100).unwrap();
        assert_ne!(a.1.records, c.1.records);
    }

    #[test]
    fn split_rejects_singleton_class() {
        let ds =
            dataset_from(&[vec![ClassLabel::Benign; 4], vec![ClassLabel::Malware; 1]].concat());
        let err = stratified_split(&ds, 0.5, 0).unwrap_err();
        assert!(matches!(err, Error::Data(_)));
    }

    #[test]
    fn split_rejects_out_of_range_fraction() {
        let ds = dataset_from(&[vec![ClassLabel::Benign; 4]].concat());
        assert!(matches!(
            stratified_split(&ds, 0.0, 0),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            stratified_split(&ds, 1.0, 0),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn distribution_of_balanced_two_class_set() {
        let ds =
            dataset_from(&[vec![ClassLabel::Benign; 2], vec![ClassLabel::Phishing; 2]].concat());
        let report = class_distribution(&ds).unwrap();
        assert_eq!(report.counts, [2, 0, 0, 2]);
        assert_eq!(report.fractions, [0.5, 0.0, 0.0, 0.5]);
        assert_eq!(report.total, 4);
    }

    #[test]
    fn distribution_of_empty_dataset_is_error() {
        let ds = LabeledDataset::new(vec![], 0);
        assert!(matches!(class_distribution(&ds), Err(Error::Data(_))));
    }

    #[test]
    fn distribution_csv_uses_six_decimals() {
        let ds =
            dataset_from(&[vec![ClassLabel::Benign; 1], vec![ClassLabel::Phishing; 2]].concat());
        let csv = class_distribution(&ds).unwrap().render_csv();
        assert!(csv.contains("benign,1,0.333333"), "csv was: {csv}");
        assert!(csv.contains("phishing,2,0.666667"), "csv was: {csv}");
    }

    #[test]
    fn fnv_digest_is_stable() {
        // reference value for "hello" under 64-bit FNV-1a
        assert_eq!(fnv1a64(b"hello"), 0xa430d84680aabd0b);
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
    }

    fn class_counts_strategy() -> impl Strategy<Value = [usize; 4]> {
        let per_class = prop_oneof![Just(0usize), 2usize..30];
        [
            per_class.clone(),
            per_class.clone(),
            per_class.clone(),
            per_class,
        ]
        .prop_filter("need at least one splittable class", |c| {
            c.iter().sum::<usize>() >= 2
        })
    }

    proptest! {
        #[test]
        fn split_is_a_partition(counts in class_counts_strategy(),
                                fraction in 0.05f64..0.95,
                                seed in any::<u64>()) {
            let mut labels = Vec::new();
            for (code, &n) in counts.iter().enumerate() {
                labels.extend(std::iter::repeat_n(ClassLabel::from_code(code).unwrap(), n));
            }
            let ds = dataset_from(&labels);
            let (train, test) = stratified_split(&ds, fraction, seed).unwrap();

            // partition: union (as multiset, order-insensitive) equals input, no overlap
            prop_assert_eq!(train.len() + test.len(), ds.len());
            let mut merged: Vec<&UrlRecord> = train.records.iter().chain(test.records.iter()).collect();
            merged.sort_by(|a, b| a.url.cmp(&b.url));
            let mut original: Vec<&UrlRecord> = ds.records.iter().collect();
            original.sort_by(|a, b| a.url.cmp(&b.url));
            prop_assert_eq!(merged, original);

            // stratification: per-class test share within 1/|class| of the fraction
            for label in ClassLabel::ALL {
                let class_total = counts[label.code()];
                if class_total == 0 {
                    continue;
                }
                let in_test = test.records.iter().filter(|r| r.label == label).count();
                let share = in_test as f64 / class_total as f64;
                prop_assert!((share - fraction).abs() <= 1.0 / class_total as f64 + 1e-12,
                    "class {} share {} fraction {} n {}", label, share, fraction, class_total);
            }
        }

        #[test]
        fn distribution_fractions_sum_to_one(counts in class_counts_strategy()) {
            let mut labels = Vec::new();
            for (code, &n) in counts.iter().enumerate() {
                labels.extend(std::iter::repeat_n(ClassLabel::from_code(code).unwrap(), n));
            }
            let ds = dataset_from(&labels);
            let report = class_distribution(&ds).unwrap();
            prop_assert_eq!(report.counts.iter().sum::<usize>(), ds.len());
            let sum: f64 = report.fractions.iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-9);
        }
    }
}
