//! The timestamped transcript format and its text plumbing: parsing
//! `token:start-end` records, ellipsis normalization, gold-to-transcript
//! alignment, and rendering labeled documents back to punctuated text.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};

/// The single-character ellipsis, U+2026. Never confused with three dots.
pub const ELLIPSIS_CHAR: char = '\u{2026}';

/// Word-level label alphabet: no mark, or one of the six marks that may
/// follow a word.
///
/// Variant order is the tie-break order used everywhere: on equal scores
/// the earliest variant wins, so an untrained model predicts `Blank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PunctClass {
    Blank,
    FullStop,
    Comma,
    Question,
    Exclamation,
    Hyphen,
    Ellipsis,
}

impl PunctClass {
    pub const COUNT: usize = 7;

    /// All classes in tie-break order.
    pub const ALL: [PunctClass; 7] = [
        PunctClass::Blank,
        PunctClass::FullStop,
        PunctClass::Comma,
        PunctClass::Question,
        PunctClass::Exclamation,
        PunctClass::Hyphen,
        PunctClass::Ellipsis,
    ];

    /// The six non-blank marks, in report column order.
    pub const MARKS: [PunctClass; 6] = [
        PunctClass::FullStop,
        PunctClass::Comma,
        PunctClass::Question,
        PunctClass::Exclamation,
        PunctClass::Hyphen,
        PunctClass::Ellipsis,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<PunctClass> {
        Self::ALL.get(index).copied()
    }

    /// Surface character appended after a word; `None` for `Blank`.
    pub const fn surface(self) -> Option<char> {
        match self {
            PunctClass::Blank => None,
            PunctClass::FullStop => Some('.'),
            PunctClass::Comma => Some(','),
            PunctClass::Question => Some('?'),
            PunctClass::Exclamation => Some('!'),
            PunctClass::Hyphen => Some('-'),
            PunctClass::Ellipsis => Some(ELLIPSIS_CHAR),
        }
    }

    pub fn from_mark(c: char) -> Option<PunctClass> {
        match c {
            '.' => Some(PunctClass::FullStop),
            ',' => Some(PunctClass::Comma),
            '?' => Some(PunctClass::Question),
            '!' => Some(PunctClass::Exclamation),
            '-' => Some(PunctClass::Hyphen),
            ELLIPSIS_CHAR => Some(PunctClass::Ellipsis),
            _ => None,
        }
    }

    /// Column name used in stats and score tables.
    pub const fn display_name(self) -> &'static str {
        match self {
            PunctClass::Blank => "Blank",
            PunctClass::FullStop => "Fullstop",
            PunctClass::Comma => "Comma",
            PunctClass::Question => "Question Mark",
            PunctClass::Exclamation => "Exclamation Mark",
            PunctClass::Hyphen => "Hyphen",
            PunctClass::Ellipsis => "Ellipsis",
        }
    }

    /// Upper-case token used in label dumps.
    pub const fn label_name(self) -> &'static str {
        match self {
            PunctClass::Blank => "BLANK",
            PunctClass::FullStop => "FULLSTOP",
            PunctClass::Comma => "COMMA",
            PunctClass::Question => "QUESTION",
            PunctClass::Exclamation => "EXCLAMATION",
            PunctClass::Hyphen => "HYPHEN",
            PunctClass::Ellipsis => "ELLIPSIS",
        }
    }

    /// Lower-case key used in machine-readable output.
    pub const fn slug(self) -> &'static str {
        match self {
            PunctClass::Blank => "blank",
            PunctClass::FullStop => "fullstop",
            PunctClass::Comma => "comma",
            PunctClass::Question => "question_mark",
            PunctClass::Exclamation => "exclamation_mark",
            PunctClass::Hyphen => "hyphen",
            PunctClass::Ellipsis => "ellipsis",
        }
    }
}

/// One transcript token with start/end timestamps in milliseconds.
///
/// Invariants: `text` is non-empty and contains no whitespace;
/// `end_ms >= start_ms` (equal is allowed, zero-length words occur in
/// real transcripts). [`parse_timed_line`] enforces both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimedWord {
    pub text: String,
    pub start_ms: u64,
    pub end_ms: u64,
}

/// One input line: an ordered sequence of timed words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawDocument {
    pub doc_id: String,
    pub words: Vec<TimedWord>,
}

impl RawDocument {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_texts(&self) -> Vec<String> {
        self.words.iter().map(|w| w.text.clone()).collect()
    }

    pub fn word_times(&self) -> Vec<(u64, u64)> {
        self.words.iter().map(|w| (w.start_ms, w.end_ms)).collect()
    }
}

/// A word sequence with one [`PunctClass`] per word (the mark following
/// that word), plus the source timestamps when they are known.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabeledDocument {
    pub doc_id: String,
    pub words: Vec<String>,
    pub labels: Vec<PunctClass>,
    /// Per-word `(start_ms, end_ms)` carried over from the transcript, if
    /// any. Only consulted by pause features; same length as `words`.
    pub word_times: Option<Vec<(u64, u64)>>,
}

impl LabeledDocument {
    pub fn new(
        doc_id: impl Into<String>,
        words: Vec<String>,
        labels: Vec<PunctClass>,
    ) -> Result<LabeledDocument> {
        if words.len() != labels.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} words with {} labels",
                words.len(),
                labels.len()
            )));
        }
        Ok(LabeledDocument {
            doc_id: doc_id.into(),
            words,
            labels,
            word_times: None,
        })
    }

    pub fn with_times(mut self, times: Vec<(u64, u64)>) -> Result<LabeledDocument> {
        if times.len() != self.words.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} words with {} timestamps",
                self.words.len(),
                times.len()
            )));
        }
        self.word_times = Some(times);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Parse one input record: space-separated `token:start-end` fields.
///
/// The timestamp split uses the last `:` of a field, so tokens that
/// themselves contain colons survive. An empty (or whitespace-only) line
/// is an empty document.
pub fn parse_timed_line(line: &str) -> Result<RawDocument> {
    let mut words = Vec::new();
    for (index, field) in line.split_whitespace().enumerate() {
        let malformed = |reason: &'static str| Error::MalformedField {
            index,
            field: field.to_string(),
            reason,
        };
        let (token, times) = field
            .rsplit_once(':')
            .ok_or_else(|| malformed("missing ':' separator"))?;
        if token.is_empty() {
            return Err(malformed("empty token"));
        }
        let (start, end) = times
            .split_once('-')
            .ok_or_else(|| malformed("missing '-' between timestamps"))?;
        let start_ms: u64 = start
            .parse()
            .map_err(|_| malformed("non-integer start timestamp"))?;
        let end_ms: u64 = end
            .parse()
            .map_err(|_| malformed("non-integer end timestamp"))?;
        if end_ms < start_ms {
            return Err(malformed("end timestamp precedes start"));
        }
        words.push(TimedWord {
            text: token.to_string(),
            start_ms,
            end_ms,
        });
    }
    Ok(RawDocument {
        doc_id: String::new(),
        words,
    })
}

/// Word texts joined by single spaces; timestamps dropped.
pub fn strip_timestamps(doc: &RawDocument) -> String {
    let texts: Vec<&str> = doc.words.iter().map(|w| w.text.as_str()).collect();
    texts.join(" ")
}

/// Fold each complete group of three consecutive `.` into one `…`,
/// scanning left to right; leftover one or two dots are kept verbatim.
/// Existing `…` characters pass through unchanged. Idempotent.
pub fn normalize_ellipsis(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut dots = 0usize;
    for c in text.chars() {
        if c == '.' {
            dots += 1;
        } else {
            flush_dots(&mut out, dots);
            dots = 0;
            out.push(c);
        }
    }
    flush_dots(&mut out, dots);
    out
}

fn flush_dots(out: &mut String, run: usize) {
    for _ in 0..run / 3 {
        out.push(ELLIPSIS_CHAR);
    }
    for _ in 0..run % 3 {
        out.push('.');
    }
}

/// Split `token` into its core and the trailing run of label-alphabet
/// marks, marks returned in reading order (the mark adjacent to the core
/// first).
fn peel_trailing_marks(token: &str) -> (&str, Vec<PunctClass>) {
    let mut cut = token.len();
    let mut marks = Vec::new();
    for (i, c) in token.char_indices().rev() {
        match PunctClass::from_mark(c) {
            Some(mark) => {
                cut = i;
                marks.push(mark);
            }
            None => break,
        }
    }
    marks.reverse();
    (&token[..cut], marks)
}

fn eq_ignore_case(a: &str, b: &str) -> bool {
    a == b || a.to_lowercase() == b.to_lowercase()
}

/// Derive one label per transcript word from the golden punctuated text.
///
/// Gold tokens are whitespace-split; trailing marks from the label
/// alphabet are peeled off each token and the remainder is matched to the
/// next transcript word case-insensitively (diacritics preserved). A word
/// keeps the mark adjacent to it; further stacked marks are dropped with
/// a warning. A gold token that is nothing but marks attaches to the
/// preceding word. Leading and internal punctuation never produces a
/// label.
///
/// `gold_text` is expected to be ellipsis-normalized already.
pub fn align_gold(words: &[String], gold_text: &str) -> Result<LabeledDocument> {
    let peeled: Vec<(&str, Vec<PunctClass>)> = gold_text
        .split_whitespace()
        .map(peel_trailing_marks)
        .collect();
    let gold_word_tokens = peeled.iter().filter(|(core, _)| !core.is_empty()).count();

    let mut labels = vec![PunctClass::Blank; words.len()];
    let mut next = 0usize;
    for (core, marks) in peeled {
        if core.is_empty() {
            // Standalone punctuation token: suffix labeling attaches it
            // to the preceding word.
            if next == 0 {
                log::warn!("ignoring standalone punctuation before the first word");
                continue;
            }
            let mut marks = marks.into_iter();
            let mut dropped = 0usize;
            if labels[next - 1] == PunctClass::Blank {
                labels[next - 1] = marks.next().expect("all-mark token is non-empty");
            } else {
                dropped += 1;
                marks.next();
            }
            dropped += marks.count();
            if dropped > 0 {
                log::warn!(
                    "word {:?}: dropping {dropped} stacked trailing mark(s)",
                    words[next - 1]
                );
            }
            continue;
        }
        if next >= words.len() {
            return Err(Error::LengthMismatch {
                words: words.len(),
                gold_tokens: gold_word_tokens,
            });
        }
        if !eq_ignore_case(&words[next], core) {
            return Err(Error::Alignment {
                position: next,
                expected: words[next].clone(),
                found: core.to_string(),
            });
        }
        if let Some((first, rest)) = marks.split_first() {
            labels[next] = *first;
            if !rest.is_empty() {
                log::warn!(
                    "word {:?}: dropping {} stacked trailing mark(s)",
                    words[next],
                    rest.len()
                );
            }
        }
        next += 1;
    }
    if next != words.len() {
        return Err(Error::LengthMismatch {
            words: words.len(),
            gold_tokens: gold_word_tokens,
        });
    }

    LabeledDocument::new(String::new(), words.to_vec(), labels)
}

/// [`align_gold`] against a parsed document, carrying over its id and
/// timestamps.
pub fn align_gold_document(doc: &RawDocument, gold_text: &str) -> Result<LabeledDocument> {
    let mut labeled = align_gold(&doc.word_texts(), gold_text)?;
    labeled.doc_id = doc.doc_id.clone();
    labeled.with_times(doc.word_times())
}

/// Words joined by single spaces, each non-blank label's surface
/// character appended directly to its word. Casing is left untouched.
pub fn render_punctuated(doc: &LabeledDocument) -> String {
    let mut out = String::new();
    for (i, (word, label)) in doc.words.iter().zip(&doc.labels).enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(word);
        if let Some(c) = label.surface() {
            out.push(c);
        }
    }
    out
}

/// Read an in-file: one document per line, doc ids are 1-based line
/// numbers.
pub fn read_timed_file(path: &Path) -> Result<Vec<RawDocument>> {
    let mut docs = Vec::new();
    for (i, line) in read_text_lines(path)?.into_iter().enumerate() {
        let mut doc = parse_timed_line(&line).map_err(|e| e.at_line(i + 1))?;
        doc.doc_id = (i + 1).to_string();
        docs.push(doc);
    }
    Ok(docs)
}

/// Read a UTF-8 file as lines, tolerating CRLF endings.
pub fn read_text_lines(path: &Path) -> Result<Vec<String>> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = Vec::new();
    for line in reader.lines() {
        let mut line = line?;
        if line.ends_with('\r') {
            line.pop();
        }
        lines.push(line);
    }
    Ok(lines)
}

/// Read an expected-file or out-file and align every line against its
/// in-file document: lines are ellipsis-normalized, then labeled via
/// [`align_gold`]. Line counts must match 1:1.
pub fn align_text_file(path: &Path, in_docs: &[RawDocument]) -> Result<Vec<LabeledDocument>> {
    let lines = read_text_lines(path)?;
    if lines.len() != in_docs.len() {
        return Err(Error::LineCountMismatch {
            file: path.display().to_string(),
            expected: in_docs.len(),
            found: lines.len(),
        });
    }
    in_docs
        .iter()
        .zip(&lines)
        .enumerate()
        .map(|(i, (doc, line))| {
            align_gold_document(doc, &normalize_ellipsis(line)).map_err(|e| e.at_line(i + 1))
        })
        .collect()
}
