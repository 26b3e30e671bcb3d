//! A trainable context-window tagger: sparse features over a small word
//! window, an averaged multi-class perceptron, chunked prediction, a
//! diff-friendly model file format, and ingestion of externally produced
//! punctuated text.
//!
//! The tagger's effective dependence radius is `max(context_radius, 1)`
//! (the end-of-document and capitalization flags look one word ahead), so
//! chunked prediction with `overlap >= 2 * max(context_radius, 1)`
//! matches whole-document prediction exactly.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::chunker::{make_chunks_with, stitch, ChunkConfig};
use crate::corpus_io::{align_text_file, LabeledDocument, PunctClass, RawDocument};
use crate::error::{Error, Result};

/// Feature keys are exact-match strings, `template=value`.
pub type FeatureKey = String;

const PAD: &str = "<PAD>";
const MODEL_MAGIC: &str = "punctuate-model v1";

/// Pause-gap features bucketed from word timestamps. Off by default:
/// timestamps carry no measurable signal for this task, but the plumbing
/// stays available for experiments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauseFeatureConfig {
    pub enabled: bool,
    /// Ascending bucket edges in milliseconds.
    pub bucket_edges_ms: Vec<u64>,
}

impl Default for PauseFeatureConfig {
    fn default() -> Self {
        PauseFeatureConfig {
            enabled: false,
            bucket_edges_ms: vec![50, 200, 500],
        }
    }
}

impl PauseFeatureConfig {
    pub fn enabled_with_edges(bucket_edges_ms: Vec<u64>) -> Result<PauseFeatureConfig> {
        if bucket_edges_ms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::ShapeMismatch(
                "pause bucket edges must be strictly ascending".into(),
            ));
        }
        Ok(PauseFeatureConfig {
            enabled: true,
            bucket_edges_ms,
        })
    }

    fn bucket_label(&self, gap_ms: i64) -> String {
        let edges = &self.bucket_edges_ms;
        if edges.is_empty() {
            return "any".to_string();
        }
        let idx = edges.partition_point(|&e| (e as i64) <= gap_ms);
        if idx == 0 {
            format!("<{}", edges[0])
        } else if idx == edges.len() {
            format!(">={}", edges[idx - 1])
        } else {
            format!("{}..{}", edges[idx - 1], edges[idx])
        }
    }
}

fn offset_tag(offset: isize) -> String {
    if offset > 0 {
        format!("+{offset}")
    } else {
        offset.to_string()
    }
}

/// Sparse features for one position: lowercased word identities over the
/// context window, 1-3 character suffixes of the focus word, an
/// end-of-document flag, a next-word-capitalized flag, and (when enabled)
/// the bucketed pause before the next word.
pub fn extract_features(
    words: &[String],
    times: Option<&[(u64, u64)]>,
    position: usize,
    context_radius: usize,
    pauses: &PauseFeatureConfig,
) -> Result<Vec<FeatureKey>> {
    if position >= words.len() {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: words.len(),
        });
    }
    let mut features = Vec::with_capacity(2 * context_radius + 6);
    let radius = context_radius as isize;
    for offset in -radius..=radius {
        let idx = position as isize + offset;
        let value = if idx < 0 || idx >= words.len() as isize {
            PAD.to_string()
        } else {
            words[idx as usize].to_lowercase()
        };
        features.push(format!("word@{}={}", offset_tag(offset), value));
    }
    let focus: Vec<char> = words[position].to_lowercase().chars().collect();
    for k in 1..=focus.len().min(3) {
        let suffix: String = focus[focus.len() - k..].iter().collect();
        features.push(format!("suffix{k}@0={suffix}"));
    }
    if position + 1 == words.len() {
        features.push("position=last".to_string());
    }
    if let Some(next) = words.get(position + 1) {
        if next.chars().next().is_some_and(char::is_uppercase) {
            features.push("nextcap=1".to_string());
        }
    }
    if pauses.enabled {
        if let Some(times) = times {
            if position + 1 < times.len() {
                let gap = times[position + 1].0 as i64 - times[position].1 as i64;
                features.push(format!("pause@0={}", pauses.bucket_label(gap)));
            }
        }
    }
    Ok(features)
}

/// Linear multi-class model: one weight per (feature, class).
#[derive(Debug, Clone, PartialEq)]
pub struct LinearModel {
    weights: HashMap<FeatureKey, [f64; PunctClass::COUNT]>,
    pub averaged: bool,
    pub epochs_trained: u32,
    pub context_radius: usize,
    pub pauses: PauseFeatureConfig,
}

impl Default for LinearModel {
    fn default() -> Self {
        LinearModel {
            weights: HashMap::new(),
            averaged: false,
            epochs_trained: 0,
            context_radius: 2,
            pauses: PauseFeatureConfig::default(),
        }
    }
}

impl LinearModel {
    pub fn num_features(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, key: &str, class: PunctClass) -> f64 {
        self.weights
            .get(key)
            .map(|w| w[class.index()])
            .unwrap_or(0.0)
    }

    pub fn score(&self, features: &[FeatureKey]) -> [f64; PunctClass::COUNT] {
        let mut scores = [0.0; PunctClass::COUNT];
        for feature in features {
            if let Some(w) = self.weights.get(feature) {
                for (s, wc) in scores.iter_mut().zip(w) {
                    *s += wc;
                }
            }
        }
        scores
    }

    /// Argmax over class scores; ties break toward the earliest class, so
    /// a zero model predicts `Blank`.
    pub fn classify(&self, features: &[FeatureKey]) -> PunctClass {
        argmax(&self.score(features))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut out = BufWriter::new(File::create(path)?);
        self.write_to(&mut out)?;
        out.flush()?;
        Ok(())
    }

    /// Versioned line-oriented text format: header key=value lines, then
    /// one `feature TAB 7 weights` line per feature, sorted by key for
    /// diff-friendly bit-exact reload.
    pub fn write_to<W: Write>(&self, out: &mut W) -> Result<()> {
        writeln!(out, "{MODEL_MAGIC}")?;
        writeln!(out, "averaged={}", self.averaged)?;
        writeln!(out, "epochs={}", self.epochs_trained)?;
        writeln!(out, "context_radius={}", self.context_radius)?;
        let edges: Vec<String> = self
            .pauses
            .bucket_edges_ms
            .iter()
            .map(|e| e.to_string())
            .collect();
        writeln!(
            out,
            "pauses={}:{}",
            if self.pauses.enabled { "on" } else { "off" },
            edges.join(",")
        )?;
        writeln!(out, "features={}", self.weights.len())?;
        writeln!(out, "---")?;
        let mut keys: Vec<&FeatureKey> = self.weights.keys().collect();
        keys.sort();
        for key in keys {
            write!(out, "{key}")?;
            for w in &self.weights[key] {
                write!(out, "\t{w}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<LinearModel> {
        Self::read_from(&mut BufReader::new(File::open(path)?))
    }

    pub fn read_from<R: BufRead>(input: &mut R) -> Result<LinearModel> {
        let bad = |line: usize, reason: &str| Error::ModelFormat {
            line,
            reason: reason.to_string(),
        };
        let mut lines = Vec::new();
        for line in input.lines() {
            lines.push(line?);
        }
        let mut it = lines.iter().enumerate();
        let mut header = |key: &str| -> Result<String> {
            let (i, line) = it
                .next()
                .ok_or_else(|| bad(lines.len(), "truncated header"))?;
            if key.is_empty() {
                return Ok(line.clone()); // magic line, taken verbatim
            }
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| bad(i + 1, &format!("expected {key}=...")))
        };

        if header("")? != MODEL_MAGIC {
            return Err(bad(1, "unrecognized magic/version line"));
        }
        let averaged = header("averaged")?
            .parse::<bool>()
            .map_err(|_| bad(2, "averaged must be true or false"))?;
        let epochs_trained = header("epochs")?
            .parse::<u32>()
            .map_err(|_| bad(3, "epochs must be an integer"))?;
        let context_radius = header("context_radius")?
            .parse::<usize>()
            .map_err(|_| bad(4, "context_radius must be an integer"))?;
        let pauses_raw = header("pauses")?;
        let (state, edges_csv) = pauses_raw
            .split_once(':')
            .ok_or_else(|| bad(5, "pauses must be on:EDGES or off:EDGES"))?;
        let enabled = match state {
            "on" => true,
            "off" => false,
            _ => return Err(bad(5, "pauses must be on or off")),
        };
        let mut bucket_edges_ms = Vec::new();
        if !edges_csv.is_empty() {
            for part in edges_csv.split(',') {
                bucket_edges_ms.push(part.parse::<u64>().map_err(|_| bad(5, "bad pause edge"))?);
            }
        }
        let feature_count = header("features")?
            .parse::<usize>()
            .map_err(|_| bad(6, "features must be an integer"))?;
        let (sep_idx, sep) = it.next().ok_or_else(|| bad(lines.len(), "missing ---"))?;
        if sep != "---" {
            return Err(bad(sep_idx + 1, "expected --- separator"));
        }

        let mut weights = HashMap::with_capacity(feature_count);
        for (i, line) in it {
            let mut parts = line.split('\t');
            let key = parts
                .next()
                .filter(|k| !k.is_empty())
                .ok_or_else(|| bad(i + 1, "empty feature key"))?;
            let mut row = [0.0; PunctClass::COUNT];
            for slot in row.iter_mut() {
                let field = parts
                    .next()
                    .ok_or_else(|| bad(i + 1, "expected 7 weights"))?;
                *slot = field
                    .parse::<f64>()
                    .map_err(|_| bad(i + 1, "bad weight value"))?;
            }
            if parts.next().is_some() {
                return Err(bad(i + 1, "expected 7 weights"));
            }
            if weights.insert(key.to_string(), row).is_some() {
                return Err(bad(i + 1, "duplicate feature key"));
            }
        }
        if weights.len() != feature_count {
            return Err(bad(
                lines.len(),
                &format!(
                    "feature count mismatch: header says {feature_count}, found {}",
                    weights.len()
                ),
            ));
        }
        Ok(LinearModel {
            weights,
            averaged,
            epochs_trained,
            context_radius,
            pauses: PauseFeatureConfig {
                enabled,
                bucket_edges_ms,
            },
        })
    }
}

fn argmax(scores: &[f64; PunctClass::COUNT]) -> PunctClass {
    let mut best = 0usize;
    for (i, s) in scores.iter().enumerate().skip(1) {
        if *s > scores[best] {
            best = i;
        }
    }
    PunctClass::from_index(best).expect("index in range")
}

/// Training knobs. Defaults match the CLI defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrainOptions {
    pub epochs: u32,
    pub seed: u64,
    pub context_radius: usize,
    pub pauses: PauseFeatureConfig,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions {
            epochs: 5,
            seed: 42,
            context_radius: 2,
            pauses: PauseFeatureConfig::default(),
        }
    }
}

// splitmix64; self-contained so shuffles stay reproducible forever.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn shuffle<T>(items: &mut [T], rng: &mut SplitMix64) {
    for i in (1..items.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

#[derive(Default, Clone)]
struct FeatureTrainState {
    weight: [f64; PunctClass::COUNT],
    acc: [f64; PunctClass::COUNT],
    last_step: [u64; PunctClass::COUNT],
}

impl FeatureTrainState {
    fn bump(&mut self, class: usize, delta: f64, step: u64) {
        self.acc[class] += (step - self.last_step[class]) as f64 * self.weight[class];
        self.weight[class] += delta;
        self.last_step[class] = step;
    }
}

/// Train an averaged multi-class perceptron. Deterministic given the
/// seed: document order is reshuffled per epoch with a seeded generator,
/// positions run left to right. `epochs = 0` yields an all-zero model.
pub fn train(corpus: &[LabeledDocument], options: &TrainOptions) -> Result<LinearModel> {
    let total_words: usize = corpus.iter().map(|d| d.len()).sum();
    if corpus.is_empty() || total_words == 0 {
        return Err(Error::EmptyCorpus);
    }

    let mut states: HashMap<FeatureKey, FeatureTrainState> = HashMap::new();
    let mut order: Vec<usize> = (0..corpus.len()).collect();
    let mut rng = SplitMix64(options.seed);
    let mut step: u64 = 0;

    for _ in 0..options.epochs {
        shuffle(&mut order, &mut rng);
        for &doc_index in &order {
            let doc = &corpus[doc_index];
            let times = doc.word_times.as_deref();
            for position in 0..doc.len() {
                let features = extract_features(
                    &doc.words,
                    times,
                    position,
                    options.context_radius,
                    &options.pauses,
                )?;
                let mut scores = [0.0; PunctClass::COUNT];
                for feature in &features {
                    if let Some(state) = states.get(feature) {
                        for (s, w) in scores.iter_mut().zip(&state.weight) {
                            *s += w;
                        }
                    }
                }
                let guess = argmax(&scores);
                let gold = doc.labels[position];
                if guess != gold {
                    for feature in &features {
                        let state = states.entry(feature.clone()).or_default();
                        state.bump(gold.index(), 1.0, step);
                        state.bump(guess.index(), -1.0, step);
                    }
                }
                step += 1;
            }
        }
    }

    let mut weights = HashMap::with_capacity(states.len());
    for (key, mut state) in states {
        let mut averaged = [0.0; PunctClass::COUNT];
        for (class, avg) in averaged.iter_mut().enumerate() {
            state.acc[class] += (step - state.last_step[class]) as f64 * state.weight[class];
            *avg = state.acc[class] / step as f64;
        }
        if averaged.iter().any(|&w| w != 0.0) {
            weights.insert(key, averaged);
        }
    }

    Ok(LinearModel {
        weights,
        averaged: true,
        epochs_trained: options.epochs,
        context_radius: options.context_radius,
        pauses: options.pauses.clone(),
    })
}

/// Label a document with chunked sliding-window inference: each window is
/// scored independently and keep-spans are stitched back together.
pub fn predict(
    model: &LinearModel,
    doc: &RawDocument,
    chunk_config: &ChunkConfig,
) -> Result<LabeledDocument> {
    let words = doc.word_texts();
    let times = doc.word_times();
    let chunks = make_chunks_with(words.len(), chunk_config)?;
    let mut per_chunk = Vec::with_capacity(chunks.len());
    for chunk in &chunks {
        let window_words = &words[chunk.begin..chunk.end];
        let window_times = &times[chunk.begin..chunk.end];
        let mut labels = Vec::with_capacity(window_words.len());
        for position in 0..window_words.len() {
            let features = extract_features(
                window_words,
                Some(window_times),
                position,
                model.context_radius,
                &model.pauses,
            )?;
            labels.push(model.classify(&features));
        }
        per_chunk.push(labels);
    }
    let labels = stitch(&chunks, &per_chunk)?;
    LabeledDocument::new(doc.doc_id.clone(), words, labels)?.with_times(times)
}

/// Ingest externally produced predictions: a file of punctuated lines,
/// 1:1 with the in-file documents, normalized and aligned like golden
/// text. This is how a separately fine-tuned model plugs into the
/// evaluator.
pub fn load_external_predictions(
    path: &Path,
    in_docs: &[RawDocument],
) -> Result<Vec<LabeledDocument>> {
    align_text_file(path, in_docs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus_io::parse_timed_line;
    use proptest::prelude::*;

    const SAMPLE_LINE: &str = "I:5880-5880 teraz:5940-6180 mamy:6330-6450 drugi:6480-6900 \
         dzień:6960-7080 takiej:7170-7410 ładnej:7440-7650 pogody:7830-8400 Ała:8430-8430 \
         Nie:8760-8820 bij:8850-8970 mnie:9120-9330 kijem:9450-9870 To:10020-10080 \
         boli:10170-10260";

    fn sample_words() -> Vec<String> {
        parse_timed_line(SAMPLE_LINE).unwrap().word_texts()
    }

    #[test]
    fn features_at_last_position_pad_right() {
        let words = sample_words();
        let feats = extract_features(
            &words,
            None,
            words.len() - 1,
            2,
            &PauseFeatureConfig::default(),
        )
        .unwrap();
        assert!(feats.contains(&"position=last".to_string()));
        assert!(feats.contains(&"word@+1=<PAD>".to_string()));
        assert!(feats.contains(&"word@+2=<PAD>".to_string()));
    }

    #[test]
    fn features_for_sample_focus_word() {
        let words = sample_words();
        // focus "pogody", next word "Ała"
        let feats = extract_features(&words, None, 7, 2, &PauseFeatureConfig::default()).unwrap();
        assert!(feats.contains(&"word@0=pogody".to_string()));
        assert!(feats.contains(&"suffix3@0=ody".to_string()));
        assert!(feats.contains(&"suffix1@0=y".to_string()));
        assert!(feats.contains(&"word@+1=ała".to_string()));
        assert!(feats.contains(&"word@-1=ładnej".to_string()));
        assert!(feats.contains(&"nextcap=1".to_string()));
        assert!(!feats.iter().any(|f| f.starts_with("pause@")));
    }

    #[test]
    fn pause_feature_buckets_sample_gap() {
        let doc = parse_timed_line(SAMPLE_LINE).unwrap();
        let times = doc.word_times();
        // gap pogody -> Ała is 8430 - 8400 = 30ms
        let pauses = PauseFeatureConfig::enabled_with_edges(vec![50, 200, 500]).unwrap();
        let feats = extract_features(&doc.word_texts(), Some(&times), 7, 2, &pauses).unwrap();
        assert!(feats.contains(&"pause@0=<50".to_string()));
        // gap Ała -> Nie is 8760 - 8430 = 330ms
        let feats = extract_features(&doc.word_texts(), Some(&times), 8, 2, &pauses).unwrap();
        assert!(feats.contains(&"pause@0=200..500".to_string()));
    }

    #[test]
    fn position_out_of_range_errors() {
        let words = sample_words();
        assert!(matches!(
            extract_features(&words, None, words.len(), 2, &PauseFeatureConfig::default()),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn rejects_unsorted_pause_edges() {
        assert!(PauseFeatureConfig::enabled_with_edges(vec![100, 100]).is_err());
        assert!(PauseFeatureConfig::enabled_with_edges(vec![200, 100]).is_err());
    }

    fn tiny_corpus() -> Vec<LabeledDocument> {
        // "koniec" is always followed by a full stop, everything else blank.
        (0..20)
            .map(|i| {
                let words: Vec<String> =
                    ["ala", "ma", "kota", "koniec", "pies", "szczeka", "koniec"]
                        .iter()
                        .map(|w| w.to_string())
                        .collect();
                let labels = words
                    .iter()
                    .map(|w| {
                        if w == "koniec" {
                            PunctClass::FullStop
                        } else {
                            PunctClass::Blank
                        }
                    })
                    .collect();
                LabeledDocument::new(i.to_string(), words, labels).unwrap()
            })
            .collect()
    }

    #[test]
    fn zero_epochs_predicts_blank() {
        let model = train(
            &tiny_corpus(),
            &TrainOptions {
                epochs: 0,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(model.num_features(), 0);
        let doc = parse_timed_line(SAMPLE_LINE).unwrap();
        let labeled = predict(&model, &doc, &ChunkConfig::default()).unwrap();
        assert_eq!(labeled.labels, vec![PunctClass::Blank; doc.len()]);
    }

    #[test]
    fn learns_tiny_pattern() {
        let model = train(&tiny_corpus(), &TrainOptions::default()).unwrap();
        let doc = parse_timed_line("ala:0-1 ma:2-3 koniec:4-5 kota:6-7").unwrap();
        let labeled = predict(&model, &doc, &ChunkConfig::default()).unwrap();
        assert_eq!(labeled.labels[2], PunctClass::FullStop);
        assert_eq!(labeled.labels[0], PunctClass::Blank);
    }

    #[test]
    fn training_is_deterministic() {
        let a = train(&tiny_corpus(), &TrainOptions::default()).unwrap();
        let b = train(&tiny_corpus(), &TrainOptions::default()).unwrap();
        assert_eq!(a, b);
        let mut buf_a = Vec::new();
        let mut buf_b = Vec::new();
        a.write_to(&mut buf_a).unwrap();
        b.write_to(&mut buf_b).unwrap();
        assert_eq!(buf_a, buf_b);
    }

    #[test]
    fn empty_corpus_errors() {
        assert!(matches!(
            train(&[], &TrainOptions::default()),
            Err(Error::EmptyCorpus)
        ));
        let empty = LabeledDocument::default();
        assert!(matches!(
            train(&[empty], &TrainOptions::default()),
            Err(Error::EmptyCorpus)
        ));
    }

    #[test]
    fn model_round_trips_through_text_format() {
        let model = train(&tiny_corpus(), &TrainOptions::default()).unwrap();
        let mut buf = Vec::new();
        model.write_to(&mut buf).unwrap();
        let reloaded = LinearModel::read_from(&mut buf.as_slice()).unwrap();
        assert_eq!(model, reloaded);
        let mut buf2 = Vec::new();
        reloaded.write_to(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }

    #[test]
    fn model_format_errors_carry_line_numbers() {
        let err = LinearModel::read_from(&mut "garbage\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::ModelFormat { line: 1, .. }));
        let text = format!("{MODEL_MAGIC}\naveraged=yes\n");
        let err = LinearModel::read_from(&mut text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::ModelFormat { line: 2, .. }));
        let text = format!(
            "{MODEL_MAGIC}\naveraged=true\nepochs=1\ncontext_radius=2\npauses=off:\nfeatures=1\n---\nk\t1\t2\n"
        );
        let err = LinearModel::read_from(&mut text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::ModelFormat { line: 8, .. }));
    }

    #[test]
    fn predict_empty_document() {
        let model = LinearModel::default();
        let doc = parse_timed_line("").unwrap();
        let labeled = predict(&model, &doc, &ChunkConfig::default()).unwrap();
        assert!(labeled.is_empty());
    }

    #[test]
    fn external_predictions_align_like_gold() {
        let dir = tempfile::tempdir().unwrap();
        let doc = parse_timed_line(SAMPLE_LINE).unwrap();
        let in_docs = vec![doc.clone()];

        // punctuated output from some external model, raw three-dot form
        let path = dir.path().join("external.tsv");
        std::fs::write(
            &path,
            "I teraz mamy drugi dzień takiej ładnej pogody... Ała! Nie bij mnie kijem! To boli!\n",
        )
        .unwrap();
        let labeled = load_external_predictions(&path, &in_docs).unwrap();
        assert_eq!(labeled.len(), 1);
        assert_eq!(labeled[0].labels[7], PunctClass::Ellipsis);
        assert_eq!(labeled[0].labels[8], PunctClass::Exclamation);

        // unpunctuated copy of the input is all blank
        std::fs::write(
            &path,
            format!("{}\n", crate::corpus_io::strip_timestamps(&doc)),
        )
        .unwrap();
        let labeled = load_external_predictions(&path, &in_docs).unwrap();
        assert!(labeled[0].labels.iter().all(|&l| l == PunctClass::Blank));

        // a missing line is a count mismatch
        std::fs::write(&path, "").unwrap();
        assert!(matches!(
            load_external_predictions(&path, &in_docs),
            Err(Error::LineCountMismatch {
                expected: 1,
                found: 0,
                ..
            })
        ));
    }

    // Weak monotonicity: on a separable corpus, more epochs never hurt
    // training-set accuracy.
    #[test]
    fn more_epochs_do_not_hurt_training_accuracy() {
        let corpus = tiny_corpus();
        let accuracy = |epochs: u32| -> f64 {
            let model = train(
                &corpus,
                &TrainOptions {
                    epochs,
                    ..Default::default()
                },
            )
            .unwrap();
            let mut hits = 0usize;
            let mut total = 0usize;
            for doc in &corpus {
                let line: String = doc
                    .words
                    .iter()
                    .enumerate()
                    .map(|(i, w)| format!("{w}:{i}-{i}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let raw = parse_timed_line(&line).unwrap();
                let predicted = predict(&model, &raw, &ChunkConfig::default()).unwrap();
                hits += predicted
                    .labels
                    .iter()
                    .zip(&doc.labels)
                    .filter(|(p, g)| p == g)
                    .count();
                total += doc.len();
            }
            hits as f64 / total as f64
        };
        let first = accuracy(1);
        let last = accuracy(5);
        assert!(last >= first, "accuracy fell from {first} to {last}");
        assert!(last > 0.99, "separable corpus not learned: {last}");
    }

    proptest! {
        #[test]
        fn predict_length_matches_input(
            words in prop::collection::vec("[a-z]{1,6}", 0..220),
            chunk_size in 5usize..40,
        ) {
            let line = words
                .iter()
                .enumerate()
                .map(|(i, w)| format!("{w}:{i}-{i}"))
                .collect::<Vec<_>>()
                .join(" ");
            let doc = parse_timed_line(&line).unwrap();
            let model = LinearModel::default();
            let config = ChunkConfig { chunk_size, overlap: (chunk_size - 1) / 2 };
            let labeled = predict(&model, &doc, &config).unwrap();
            prop_assert_eq!(labeled.len(), words.len());
        }
    }
}
