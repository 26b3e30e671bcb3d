//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::path::{Path, PathBuf};

use punctuate::corpus_io::{
    render_punctuated, LabeledDocument, PunctClass, RawDocument, TimedWord,
};

pub const SAMPLE_LINE: &str = "I:5880-5880 teraz:5940-6180 mamy:6330-6450 drugi:6480-6900 \
     dzień:6960-7080 takiej:7170-7410 ładnej:7440-7650 pogody:7830-8400 Ała:8430-8430 \
     Nie:8760-8820 bij:8850-8970 mnie:9120-9330 kijem:9450-9870 To:10020-10080 boli:10170-10260";
pub const SAMPLE_GOLD: &str =
    "I teraz mamy drugi dzień takiej ładnej pogody... Ała! Nie bij mnie kijem! To boli!";

/// Deterministic generator for randomized fixtures; independent of the
/// library's internals.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

const VOCAB: [&str; 16] = [
    "ala", "ma", "kota", "pies", "szczeka", "dom", "stoi", "las", "rośnie", "noc", "zapada",
    "dzień", "wstaje", "kot", "śpi", "okno",
];

/// Sentences of five words; sentence-initial words are capitalized and
/// every fifth word carries a full stop.
pub fn synthetic_sentences(count: usize, rng: &mut SplitMix64) -> LabeledDocument {
    let mut words = Vec::with_capacity(count * 5);
    let mut labels = Vec::with_capacity(count * 5);
    for _ in 0..count {
        for position in 0..5 {
            let mut word = VOCAB[rng.below(VOCAB.len() as u64) as usize].to_string();
            if position == 0 {
                let mut chars = word.chars();
                let first = chars.next().unwrap().to_uppercase().to_string();
                word = first + chars.as_str();
            }
            words.push(word);
            labels.push(if position == 4 {
                PunctClass::FullStop
            } else {
                PunctClass::Blank
            });
        }
    }
    LabeledDocument::new("", words, labels).unwrap()
}

/// Corpus of documents holding 2-6 sentences each, `total` sentences
/// overall.
pub fn synthetic_corpus(total: usize, seed: u64) -> Vec<LabeledDocument> {
    let mut rng = SplitMix64(seed);
    let mut docs = Vec::new();
    let mut remaining = total;
    while remaining > 0 {
        let sentences = usize::min(remaining, 2 + rng.below(5) as usize);
        let mut doc = synthetic_sentences(sentences, &mut rng);
        doc.doc_id = docs.len().to_string();
        docs.push(doc);
        remaining -= sentences;
    }
    docs
}

/// Attach synthetic timestamps so a labeled document can be fed back in
/// as transcript input.
pub fn raw_document(doc: &LabeledDocument, doc_id: &str) -> RawDocument {
    RawDocument {
        doc_id: doc_id.to_string(),
        words: doc
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| TimedWord {
                text: w.clone(),
                start_ms: i as u64 * 100,
                end_ms: i as u64 * 100 + 60,
            })
            .collect(),
    }
}

pub fn timed_line(doc: &LabeledDocument) -> String {
    doc.words
        .iter()
        .enumerate()
        .map(|(i, w)| format!("{w}:{}-{}", i * 100, i * 100 + 60))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Write a corpus as an in-file/expected-file pair under `dir`.
pub fn write_corpus_files(dir: &Path, stem: &str, docs: &[LabeledDocument]) -> (PathBuf, PathBuf) {
    let in_path = dir.join(format!("{stem}.in.tsv"));
    let expected_path = dir.join(format!("{stem}.expected.tsv"));
    let mut in_lines = String::new();
    let mut expected_lines = String::new();
    for doc in docs {
        in_lines.push_str(&timed_line(doc));
        in_lines.push('\n');
        expected_lines.push_str(&render_punctuated(doc));
        expected_lines.push('\n');
    }
    std::fs::write(&in_path, in_lines).unwrap();
    std::fs::write(&expected_path, expected_lines).unwrap();
    (in_path, expected_path)
}
