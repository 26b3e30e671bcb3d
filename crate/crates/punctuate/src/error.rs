use thiserror::Error;

/// Errors produced by parsing, alignment, chunking, training and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// An in-file record that does not match `token:start-end`.
    #[error("malformed field {index} ({field:?}): {reason}")]
    MalformedField {
        index: usize,
        field: String,
        reason: &'static str,
    },

    /// Golden text and transcript words disagree at a position.
    #[error(
        "alignment failed at word {position}: transcript has {expected:?}, gold has {found:?}"
    )]
    Alignment {
        position: usize,
        expected: String,
        found: String,
    },

    /// Golden text and transcript word counts cannot be reconciled.
    #[error("cannot reconcile {words} transcript words with {gold_tokens} gold word tokens")]
    LengthMismatch { words: usize, gold_tokens: usize },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error(
        "bad chunk config: chunk_size={chunk_size}, overlap={overlap} \
         (need chunk_size >= 1 and 2*overlap < chunk_size)"
    )]
    BadChunkConfig { chunk_size: usize, overlap: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("position {index} out of range for {len} words")]
    IndexOutOfRange { index: usize, len: usize },

    /// A line-per-document file whose line count disagrees with the in-file.
    #[error("{file}: has {found} lines, expected {expected}")]
    LineCountMismatch {
        file: String,
        expected: usize,
        found: usize,
    },

    #[error("bad model file, line {line}: {reason}")]
    ModelFormat { line: usize, reason: String },

    /// Adds the 1-based line number of the offending document to an error.
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }

    /// Process exit code used by the CLI: parse/config errors 2,
    /// alignment errors 3, shape errors 4, I/O 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::MalformedField { .. }
            | Error::ModelFormat { .. }
            | Error::EmptyCorpus
            | Error::BadChunkConfig { .. } => 2,
            Error::Alignment { .. } | Error::LengthMismatch { .. } => 3,
            Error::ShapeMismatch(_)
            | Error::IndexOutOfRange { .. }
            | Error::LineCountMismatch { .. } => 4,
            Error::AtLine { source, .. } => source.exit_code(),
            Error::Io(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
