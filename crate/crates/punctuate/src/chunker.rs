//! Overlapping fixed-size word windows for bounded-context prediction,
//! and the stitcher that merges per-window predictions back into one
//! label per word.
//!
//! Every window owns a keep-span: the central sub-range whose predictions
//! survive stitching. Keep-spans of one document always partition
//! `[0, word_count)`, so boundary predictions (the least reliable ones
//! for a context-limited model) are discarded wherever a neighbouring
//! window covers the same position closer to its own center.

use crate::corpus_io::PunctClass;
use crate::error::{Error, Result};

/// One window into a document's words. `begin..end` is what the
/// predictor sees, `keep_begin..keep_end` is what stitching retains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chunk {
    pub begin: usize,
    pub end: usize,
    pub keep_begin: usize,
    pub keep_end: usize,
}

impl Chunk {
    pub fn window_len(&self) -> usize {
        self.end - self.begin
    }

    pub fn keep_range(&self) -> std::ops::Range<usize> {
        self.keep_begin..self.keep_end
    }
}

/// Windowing parameters. The defaults leave a context-window tagger's
/// few-word radius far inside the trim margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChunkConfig {
    pub chunk_size: usize,
    pub overlap: usize,
}

impl Default for ChunkConfig {
    fn default() -> Self {
        ChunkConfig {
            chunk_size: 100,
            overlap: 20,
        }
    }
}

/// Cover `[0, word_count)` with windows of `chunk_size` words advancing
/// by `chunk_size - overlap`, trimming half the overlap from each side of
/// the keep-span (the odd half is trimmed on the right).
///
/// Requires `chunk_size >= 1` and `2 * overlap < chunk_size`.
pub fn make_chunks(word_count: usize, chunk_size: usize, overlap: usize) -> Result<Vec<Chunk>> {
    if chunk_size == 0 || 2 * overlap >= chunk_size {
        return Err(Error::BadChunkConfig {
            chunk_size,
            overlap,
        });
    }
    if word_count == 0 {
        return Ok(Vec::new());
    }
    if word_count <= chunk_size {
        return Ok(vec![Chunk {
            begin: 0,
            end: word_count,
            keep_begin: 0,
            keep_end: word_count,
        }]);
    }

    let stride = chunk_size - overlap;
    let left_trim = overlap / 2;
    let right_trim = overlap - left_trim;
    let mut chunks = Vec::new();
    let mut begin = 0usize;
    loop {
        let end = usize::min(begin + chunk_size, word_count);
        let keep_begin = if begin == 0 { 0 } else { begin + left_trim };
        let keep_end = if end == word_count {
            word_count
        } else {
            end - right_trim
        };
        chunks.push(Chunk {
            begin,
            end,
            keep_begin,
            keep_end,
        });
        if end == word_count {
            return Ok(chunks);
        }
        begin += stride;
    }
}

pub fn make_chunks_with(word_count: usize, config: &ChunkConfig) -> Result<Vec<Chunk>> {
    make_chunks(word_count, config.chunk_size, config.overlap)
}

/// Merge per-window label sequences into one label per word. Position `p`
/// takes its label from the unique chunk whose keep-span contains `p`.
pub fn stitch(chunks: &[Chunk], per_chunk_labels: &[Vec<PunctClass>]) -> Result<Vec<PunctClass>> {
    if chunks.len() != per_chunk_labels.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} chunks with {} label sequences",
            chunks.len(),
            per_chunk_labels.len()
        )));
    }
    let word_count = chunks.iter().map(|c| c.keep_end).max().unwrap_or(0);
    let mut merged: Vec<Option<PunctClass>> = vec![None; word_count];
    for (chunk, labels) in chunks.iter().zip(per_chunk_labels) {
        if labels.len() != chunk.window_len() {
            return Err(Error::ShapeMismatch(format!(
                "chunk [{}, {}) expects {} labels, got {}",
                chunk.begin,
                chunk.end,
                chunk.window_len(),
                labels.len()
            )));
        }
        for p in chunk.keep_range() {
            let slot = merged.get_mut(p).ok_or_else(|| {
                Error::ShapeMismatch(format!("keep-span position {p} out of range"))
            })?;
            if slot.is_some() {
                return Err(Error::ShapeMismatch(format!(
                    "keep-spans overlap at position {p}"
                )));
            }
            *slot = Some(labels[p - chunk.begin]);
        }
    }
    merged
        .into_iter()
        .enumerate()
        .map(|(p, label)| {
            label.ok_or_else(|| Error::ShapeMismatch(format!("no keep-span covers position {p}")))
        })
        .collect()
}
