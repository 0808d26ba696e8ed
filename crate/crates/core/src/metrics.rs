//! Evaluation artifacts: confusion matrix and per-class
//! precision/recall/F1/support report with macro and weighted averages.

use std::str::FromStr;

use crate::dataset::{ClassLabel, CLASS_COUNT};
use crate::error::{Error, Result};

/// 4x4 counts; cell `[i][j]` is the number of samples with true class `i`
/// predicted as class `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfusionMatrix {
    cells: [[u64; CLASS_COUNT]; CLASS_COUNT],
}

impl ConfusionMatrix {
    pub fn from_cells(cells: [[u64; CLASS_COUNT]; CLASS_COUNT]) -> ConfusionMatrix {
        ConfusionMatrix { cells }
    }

    pub fn cell(&self, true_class: ClassLabel, predicted: ClassLabel) -> u64 {
        self.cells[true_class.code()][predicted.code()]
    }

    pub fn row_sum(&self, true_class: ClassLabel) -> u64 {
        self.cells[true_class.code()].iter().sum()
    }

    pub fn col_sum(&self, predicted: ClassLabel) -> u64 {
        (0..CLASS_COUNT)
            .map(|i| self.cells[i][predicted.code()])
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().flatten().sum()
    }

    pub fn trace(&self) -> u64 {
        (0..CLASS_COUNT).map(|i| self.cells[i][i]).sum()
    }
}

/// Per-class metrics row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: u64,
}

/// Averaged metrics row (macro or weighted).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AvgMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Full classification report in the usual table shape.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassificationReport {
    pub per_class: [ClassMetrics; CLASS_COUNT],
    pub accuracy: f64,
    pub macro_avg: AvgMetrics,
    pub weighted_avg: AvgMetrics,
    pub total: u64,
}

/// Report output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(ReportFormat::Text),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Config(format!(
                "unknown report format '{other}' (expected text or csv)"
            ))),
        }
    }
}

/// Count (true, predicted) pairs into a confusion matrix.
pub fn confusion_matrix(y_true: &[ClassLabel], y_pred: &[ClassLabel]) -> Result<ConfusionMatrix> {
    if y_true.len() != y_pred.len() {
        return Err(Error::Data(format!(
            "label vectors differ in length: {} vs {}",
            y_true.len(),
            y_pred.len()
        )));
    }
    if y_true.is_empty() {
        return Err(Error::Data("cannot evaluate zero samples".to_string()));
    }
    let mut cells = [[0u64; CLASS_COUNT]; CLASS_COUNT];
    for (&t, &p) in y_true.iter().zip(y_pred) {
        cells[t.code()][p.code()] += 1;
    }
    Ok(ConfusionMatrix { cells })
}

fn ratio(numerator: u64, denominator: u64) -> f64 {
    if denominator == 0 {
        0.0
    } else {
        numerator as f64 / denominator as f64
    }
}

/// Derive precision/recall/F1/support per class plus accuracy, macro and
/// weighted averages. Every 0/0 is defined as 0.
pub fn classification_report(cm: &ConfusionMatrix) -> ClassificationReport {
    let total = cm.total();
    let mut per_class = [ClassMetrics {
        precision: 0.0,
        recall: 0.0,
        f1: 0.0,
        support: 0,
    }; CLASS_COUNT];

    for label in ClassLabel::ALL {
        let tp = cm.cell(label, label);
        let precision = ratio(tp, cm.col_sum(label));
        let recall = ratio(tp, cm.row_sum(label));
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        per_class[label.code()] = ClassMetrics {
            precision,
            recall,
            f1,
            support: cm.row_sum(label),
        };
    }

    let accuracy = ratio(cm.trace(), total);
    let macro_avg = AvgMetrics {
        precision: per_class.iter().map(|m| m.precision).sum::<f64>() / CLASS_COUNT as f64,
        recall: per_class.iter().map(|m| m.recall).sum::<f64>() / CLASS_COUNT as f64,
        f1: per_class.iter().map(|m| m.f1).sum::<f64>() / CLASS_COUNT as f64,
    };
    let weighted = |metric: fn(&ClassMetrics) -> f64| -> f64 {
        if total == 0 {
            return 0.0;
        }
        per_class
            .iter()
            .map(|m| m.support as f64 * metric(m))
            .sum::<f64>()
            / total as f64
    };
    let weighted_avg = AvgMetrics {
        precision: weighted(|m| m.precision),
        recall: weighted(|m| m.recall),
        f1: weighted(|m| m.f1),
    };

    ClassificationReport {
        per_class,
        accuracy,
        macro_avg,
        weighted_avg,
        total,
    }
}

/// Render a report as an aligned text table (metrics at 2 decimal places)
/// or as CSV rows at full 6-decimal precision.
pub fn render_report(report: &ClassificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:>12} {:>9} {:>9} {:>9} {:>9}\n\n",
                "", "precision", "recall", "f1-score", "support"
            ));
            for label in ClassLabel::ALL {
                let m = &report.per_class[label.code()];
                out.push_str(&format!(
                    "{:>12} {:>9.2} {:>9.2} {:>9.2} {:>9}\n",
                    label.as_str(),
                    m.precision,
                    m.recall,
                    m.f1,
                    m.support
                ));
            }
            out.push('\n');
            out.push_str(&format!(
                "{:>12} {:>9} {:>9} {:>9.2} {:>9}\n",
                "accuracy", "", "", report.accuracy, report.total
            ));
            out.push_str(&format!(
                "{:>12} {:>9.2} {:>9.2} {:>9.2} {:>9}\n",
                "macro avg",
                report.macro_avg.precision,
                report.macro_avg.recall,
                report.macro_avg.f1,
                report.total
            ));
            out.push_str(&format!(
                "{:>12} {:>9.2} {:>9.2} {:>9.2} {:>9}\n",
                "weighted avg",
                report.weighted_avg.precision,
                report.weighted_avg.recall,
                report.weighted_avg.f1,
                report.total
            ));
            out
        }
        ReportFormat::Csv => {
            let mut out = String::from("class,precision,recall,f1,support\n");
            for label in ClassLabel::ALL {
                let m = &report.per_class[label.code()];
                out.push_str(&format!(
                    "{},{:.6},{:.6},{:.6},{}\n",
                    label.as_str(),
                    m.precision,
                    m.recall,
                    m.f1,
                    m.support
                ));
            }
            out.push_str(&format!(
                "accuracy,,,{:.6},{}\n",
                report.accuracy, report.total
            ));
            out.push_str(&format!(
                "macro avg,{:.6},{:.6},{:.6},{}\n",
                report.macro_avg.precision,
                report.macro_avg.recall,
                report.macro_avg.f1,
                report.total
            ));
            out.push_str(&format!(
                "weighted avg,{:.6},{:.6},{:.6},{}\n",
                report.weighted_avg.precision,
                report.weighted_avg.recall,
                report.weighted_avg.f1,
                report.total
            ));
            out
        }
    }
}

/// Render the confusion matrix as an aligned grid or as labeled CSV rows.
pub fn render_confusion(cm: &ConfusionMatrix, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let mut out = String::from("confusion matrix (rows: true, columns: predicted)\n");
            out.push_str(&format!("{:>12}", ""));
            for label in ClassLabel::ALL {
                out.push_str(&format!(" {:>11}", label.as_str()));
            }
            out.push('\n');
            for t in ClassLabel::ALL {
                out.push_str(&format!("{:>12}", t.as_str()));
                for p in ClassLabel::ALL {
                    out.push_str(&format!(" {:>11}", cm.cell(t, p)));
                }
                out.push('\n');
            }
            out
        }
        ReportFormat::Csv => {
            let mut out = String::from("true\\predicted,benign,defacement,malware,phishing\n");
            for t in ClassLabel::ALL {
                out.push_str(t.as_str());
                for p in ClassLabel::ALL {
                    out.push_str(&format!(",{}", cm.cell(t, p)));
                }
                out.push('\n');
            }
            out
        }
    }
}
