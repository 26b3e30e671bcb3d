//! Punctuation prediction for timestamped ASR transcripts.
//!
//! The pipeline: parse the `token:start-end` line format, derive
//! word-level punctuation labels from golden text, train and apply a
//! lightweight context-window tagger with overlapping-chunk inference
//! (or ingest predictions from an external model), and score outputs
//! with support-weighted F1.

pub mod chunker;
pub mod corpus_io;
pub mod error;
pub mod evaluator;
pub mod stats;
pub mod tagger;

pub use chunker::{make_chunks, stitch, Chunk, ChunkConfig};
pub use corpus_io::{
    align_gold, align_gold_document, normalize_ellipsis, parse_timed_line, render_punctuated,
    strip_timestamps, LabeledDocument, PunctClass, RawDocument, TimedWord,
};
pub use error::{Error, Result};
pub use evaluator::{evaluate, evaluate_files, ClassScores, EvalReport};
pub use stats::{compute_stats, CorpusStats};
pub use tagger::{
    extract_features, load_external_predictions, predict, train, LinearModel, PauseFeatureConfig,
    TrainOptions,
};
