//! Scoring: per-class precision/recall/F1 and the support-weighted F1,
//! reported on a 0-100 scale.
//!
//! Blank is never a class of its own: a missed mark is a false negative
//! of the gold class, a spurious mark a false positive of the predicted
//! class, and a wrong-mark substitution counts as both. Weights are gold
//! supports; classes with zero support contribute nothing.

use std::path::Path;

use crate::corpus_io::{align_text_file, read_timed_file, LabeledDocument, PunctClass};
use crate::error::{Error, Result};

/// Confusion counts and derived scores for one punctuation mark.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassScores {
    pub class: PunctClass,
    pub true_positives: u64,
    pub false_positives: u64,
    pub false_negatives: u64,
    /// 0-100
    pub precision: f64,
    /// 0-100
    pub recall: f64,
    /// 0-100; zero when precision + recall is zero
    pub f1: f64,
}

impl ClassScores {
    /// Gold occurrences of this class.
    pub fn support(&self) -> u64 {
        self.true_positives + self.false_negatives
    }
}

/// Scores for the six marks plus the support-weighted F1.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub per_class: Vec<ClassScores>,
    pub weighted_f1: f64,
}

impl EvalReport {
    pub fn class(&self, class: PunctClass) -> Option<&ClassScores> {
        self.per_class.iter().find(|s| s.class == class)
    }

    pub fn support(&self, class: PunctClass) -> u64 {
        self.class(class).map(|s| s.support()).unwrap_or(0)
    }

    /// Two-row table in the scores-table column order.
    pub fn table(&self) -> String {
        let mut names = vec!["Weighted-F1".to_string()];
        let mut values = vec![format!("{:.2}", self.weighted_f1)];
        for scores in &self.per_class {
            names.push(format!("{}-F1", scores.class.display_name()));
            values.push(format!("{:.2}", scores.f1));
        }
        let mut out = String::new();
        for row in [&names, &values] {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                let width = names[i].chars().count().max(values[i].chars().count());
                for _ in 0..width - cell.chars().count() {
                    out.push(' ');
                }
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }

    /// Machine-readable key=value block.
    pub fn machine_block(&self) -> String {
        let mut out = format!("weighted_f1={:.2}\n", self.weighted_f1);
        for scores in &self.per_class {
            let slug = scores.class.slug();
            out.push_str(&format!("{slug}_precision={:.2}\n", scores.precision));
            out.push_str(&format!("{slug}_recall={:.2}\n", scores.recall));
            out.push_str(&format!("{slug}_f1={:.2}\n", scores.f1));
            out.push_str(&format!("{slug}_support={}\n", scores.support()));
            out.push_str(&format!("{slug}_tp={}\n", scores.true_positives));
            out.push_str(&format!("{slug}_fp={}\n", scores.false_positives));
            out.push_str(&format!("{slug}_fn={}\n", scores.false_negatives));
        }
        out
    }
}

/// Score predictions against gold labels. Documents pair up 1:1 and must
/// agree in length.
pub fn evaluate(gold: &[LabeledDocument], pred: &[LabeledDocument]) -> Result<EvalReport> {
    if gold.len() != pred.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} gold documents with {} predicted",
            gold.len(),
            pred.len()
        )));
    }
    let mut tp = [0u64; PunctClass::COUNT];
    let mut fp = [0u64; PunctClass::COUNT];
    let mut fneg = [0u64; PunctClass::COUNT];
    for (i, (g, p)) in gold.iter().zip(pred).enumerate() {
        if g.labels.len() != p.labels.len() {
            return Err(Error::ShapeMismatch(format!(
                "document {}: {} gold labels with {} predicted",
                i + 1,
                g.labels.len(),
                p.labels.len()
            )));
        }
        for (&gl, &pl) in g.labels.iter().zip(&p.labels) {
            if gl == pl {
                if gl != PunctClass::Blank {
                    tp[gl.index()] += 1;
                }
            } else {
                if pl != PunctClass::Blank {
                    fp[pl.index()] += 1;
                }
                if gl != PunctClass::Blank {
                    fneg[gl.index()] += 1;
                }
            }
        }
    }

    let mut per_class = Vec::with_capacity(PunctClass::MARKS.len());
    let mut weighted_sum = 0.0;
    let mut support_sum = 0u64;
    for class in PunctClass::MARKS {
        let i = class.index();
        let (tp, fp, fnn) = (tp[i], fp[i], fneg[i]);
        let precision = ratio(tp, tp + fp);
        let recall = ratio(tp, tp + fnn);
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        let support = tp + fnn;
        weighted_sum += support as f64 * f1;
        support_sum += support;
        per_class.push(ClassScores {
            class,
            true_positives: tp,
            false_positives: fp,
            false_negatives: fnn,
            precision,
            recall,
            f1,
        });
    }
    let weighted_f1 = if support_sum > 0 {
        weighted_sum / support_sum as f64
    } else {
        0.0
    };
    Ok(EvalReport {
        per_class,
        weighted_f1,
    })
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        100.0 * num as f64 / den as f64
    }
}

/// Score an out-file against an expected-file, both aligned 1:1 by line
/// number with the in-file.
pub fn evaluate_files(expected_path: &Path, out_path: &Path, in_path: &Path) -> Result<EvalReport> {
    let in_docs = read_timed_file(in_path)?;
    let gold = align_text_file(expected_path, &in_docs)?;
    let pred = align_text_file(out_path, &in_docs)?;
    evaluate(&gold, &pred)
}
