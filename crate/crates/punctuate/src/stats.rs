//! Dataset-profile statistics: sample counts, mean words per sample, and
//! per-1000-word punctuation rates.

use std::collections::BTreeMap;

use crate::corpus_io::{LabeledDocument, PunctClass};
use crate::error::{Error, Result};

/// Profile of one corpus. Rates are occurrences per 1000 words.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusStats {
    pub samples: usize,
    pub total_words: usize,
    pub mean_words_per_sample: f64,
    pub rate_per_1000: BTreeMap<PunctClass, f64>,
}

impl CorpusStats {
    pub fn rate(&self, class: PunctClass) -> f64 {
        self.rate_per_1000.get(&class).copied().unwrap_or(0.0)
    }
}

/// Count samples, words and mark occurrences over a labeled corpus.
pub fn compute_stats(docs: &[LabeledDocument]) -> Result<CorpusStats> {
    let samples = docs.len();
    let total_words: usize = docs.iter().map(|d| d.len()).sum();
    if samples == 0 || total_words == 0 {
        return Err(Error::EmptyCorpus);
    }
    let mut counts = [0usize; PunctClass::COUNT];
    for doc in docs {
        for label in &doc.labels {
            counts[label.index()] += 1;
        }
    }
    let rate_per_1000 = PunctClass::MARKS
        .iter()
        .map(|&class| {
            let rate = 1000.0 * counts[class.index()] as f64 / total_words as f64;
            (class, rate)
        })
        .collect();
    Ok(CorpusStats {
        samples,
        total_words,
        mean_words_per_sample: total_words as f64 / samples as f64,
        rate_per_1000,
    })
}

/// Render corpora as a table with the columns of the dataset-statistics
/// convention: means to 2 decimals, rates to 3.
pub fn format_stats_table(rows: &[(String, CorpusStats)]) -> String {
    let mut header: Vec<String> = vec![
        "Dataset".into(),
        "Samples".into(),
        "Mean Words per Sample".into(),
    ];
    header.extend(
        PunctClass::MARKS
            .iter()
            .map(|c| c.display_name().to_string()),
    );

    let mut table: Vec<Vec<String>> = vec![header];
    for (name, stats) in rows {
        let mut row = vec![
            name.clone(),
            stats.samples.to_string(),
            format!("{:.2}", stats.mean_words_per_sample),
        ];
        row.extend(
            PunctClass::MARKS
                .iter()
                .map(|&c| format!("{:.3}", stats.rate(c))),
        );
        table.push(row);
    }

    let columns = table[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            table
                .iter()
                .map(|row| row[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &table {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                // dataset name left-aligned, numbers right-aligned
                out.push_str(cell);
                for _ in 0..pad {
                    out.push(' ');
                }
            } else {
                for _ in 0..pad {
                    out.push(' ');
                }
                out.push_str(cell);
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}
