//! C ABI for the punctuate toolkit.
//!
//! Conventions: objects cross the boundary as opaque handles owned by
//! Rust and released with the matching `*_free` function; fallible calls
//! return a status code (or a null pointer) and leave a message readable
//! via [`punct_last_error`]; returned strings are NUL-terminated UTF-8
//! owned by the caller and released with [`punct_string_free`].
//!
//! The `punctuate.h` header is generated by cbindgen at build time into
//! `include/`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::ptr;

use punctuate::chunker::ChunkConfig;
use punctuate::corpus_io::{
    align_text_file, normalize_ellipsis, parse_timed_line, read_timed_file, render_punctuated,
    strip_timestamps,
};
use punctuate::error::Error;
use punctuate::evaluator::{evaluate_files, EvalReport};
use punctuate::tagger::{predict, train, LinearModel, PauseFeatureConfig, TrainOptions};

/// Result of a fallible call. Families match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PunctStatus {
    Ok = 0,
    Io = 1,
    Parse = 2,
    Alignment = 3,
    Shape = 4,
    NullArgument = 5,
    InvalidUtf8 = 6,
}

/// Opaque handle to a trained tagger model.
pub struct PunctModel {
    inner: LinearModel,
}

/// Opaque handle to an evaluation report.
pub struct PunctReport {
    inner: EvalReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(error: &Error) -> PunctStatus {
    match error.exit_code() {
        2 => PunctStatus::Parse,
        3 => PunctStatus::Alignment,
        4 => PunctStatus::Shape,
        _ => PunctStatus::Io,
    }
}

fn fail(error: &Error) -> PunctStatus {
    set_error(&error.to_string());
    status_of(error)
}

/// Last error message for this thread, owned by the library. The pointer
/// stays valid until the next failing punctuate call on the same thread.
#[no_mangle]
pub extern "C" fn punct_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn punct_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned by a punctuate call, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn required_str<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, PunctStatus> {
    if ptr.is_null() {
        set_error(&format!("{name} must not be null"));
        return Err(PunctStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(&format!("{name} is not valid UTF-8"));
        PunctStatus::InvalidUtf8
    })
}

fn to_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => {
            set_error("result contains an interior NUL byte");
            ptr::null_mut()
        }
    }
}

fn chunk_config(chunk_size: usize, overlap: usize) -> ChunkConfig {
    if chunk_size == 0 {
        ChunkConfig::default()
    } else {
        ChunkConfig {
            chunk_size,
            overlap,
        }
    }
}

/// Fold runs of three full stops into the ellipsis character. Returns a
/// new string, or null on error.
///
/// # Safety
/// `text` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn punct_normalize_ellipsis(text: *const c_char) -> *mut c_char {
    let text = match required_str(text, "text") {
        Ok(t) => t,
        Err(_) => return ptr::null_mut(),
    };
    to_c_string(normalize_ellipsis(text))
}

/// Parse one `token:start-end` line and return the words joined by
/// spaces, or null on parse error.
///
/// # Safety
/// `line` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn punct_strip_timestamps(line: *const c_char) -> *mut c_char {
    let line = match required_str(line, "line") {
        Ok(l) => l,
        Err(_) => return ptr::null_mut(),
    };
    match parse_timed_line(line) {
        Ok(doc) => to_c_string(strip_timestamps(&doc)),
        Err(e) => {
            fail(&e);
            ptr::null_mut()
        }
    }
}

unsafe fn collect_paths(
    paths: *const *const c_char,
    count: usize,
    name: &str,
) -> Result<Vec<PathBuf>, PunctStatus> {
    if paths.is_null() {
        set_error(&format!("{name} must not be null"));
        return Err(PunctStatus::NullArgument);
    }
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let p = *paths.add(i);
        out.push(PathBuf::from(required_str(p, name)?));
    }
    Ok(out)
}

/// Train a tagger on `count` in-file/expected-file pairs, concatenated in
/// order. Pass `use_pauses = false` unless the in-files' timestamps
/// should feed pause features. Returns a model handle, or null on error.
///
/// # Safety
/// `in_paths` and `expected_paths` must point to `count` valid
/// NUL-terminated strings each.
#[no_mangle]
pub unsafe extern "C" fn punct_model_train_files(
    in_paths: *const *const c_char,
    expected_paths: *const *const c_char,
    count: usize,
    epochs: u32,
    seed: u64,
    context_radius: usize,
    use_pauses: bool,
) -> *mut PunctModel {
    let ins = match collect_paths(in_paths, count, "in_paths") {
        Ok(v) => v,
        Err(_) => return ptr::null_mut(),
    };
    let expecteds = match collect_paths(expected_paths, count, "expected_paths") {
        Ok(v) => v,
        Err(_) => return ptr::null_mut(),
    };
    let mut corpus = Vec::new();
    for (in_path, expected_path) in ins.iter().zip(&expecteds) {
        let docs = match read_timed_file(in_path) {
            Ok(d) => d,
            Err(e) => {
                fail(&e);
                return ptr::null_mut();
            }
        };
        match align_text_file(expected_path, &docs) {
            Ok(labeled) => corpus.extend(labeled),
            Err(e) => {
                fail(&e);
                return ptr::null_mut();
            }
        }
    }
    let options = TrainOptions {
        epochs,
        seed,
        context_radius,
        pauses: PauseFeatureConfig {
            enabled: use_pauses,
            ..PauseFeatureConfig::default()
        },
    };
    match train(&corpus, &options) {
        Ok(model) => Box::into_raw(Box::new(PunctModel { inner: model })),
        Err(e) => {
            fail(&e);
            ptr::null_mut()
        }
    }
}

/// Load a model file written by train. Returns null on error.
///
/// # Safety
/// `path` must be a valid NUL-terminated string or null.
#[no_mangle]
pub unsafe extern "C" fn punct_model_load(path: *const c_char) -> *mut PunctModel {
    let path = match required_str(path, "path") {
        Ok(p) => p,
        Err(_) => return ptr::null_mut(),
    };
    match LinearModel::load(Path::new(path)) {
        Ok(model) => Box::into_raw(Box::new(PunctModel { inner: model })),
        Err(e) => {
            fail(&e);
            ptr::null_mut()
        }
    }
}

/// Write a model to a file in the versioned text format.
///
/// # Safety
/// `model` must be a live handle from this library; `path` a valid
/// NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn punct_model_save(
    model: *const PunctModel,
    path: *const c_char,
) -> PunctStatus {
    let Some(model) = model.as_ref() else {
        set_error("model must not be null");
        return PunctStatus::NullArgument;
    };
    let path = match required_str(path, "path") {
        Ok(p) => p,
        Err(status) => return status,
    };
    match model.inner.save(Path::new(path)) {
        Ok(()) => PunctStatus::Ok,
        Err(e) => fail(&e),
    }
}

/// Number of features in the model; 0 for null.
///
/// # Safety
/// `model` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_model_num_features(model: *const PunctModel) -> usize {
    model.as_ref().map_or(0, |m| m.inner.num_features())
}

/// Release a model handle.
///
/// # Safety
/// `model` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_model_free(model: *mut PunctModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Punctuate one `token:start-end` line; returns the punctuated text, or
/// null on error. `chunk_size = 0` selects the default window config.
///
/// # Safety
/// `model` must be a live handle; `line` a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn punct_model_predict_line(
    model: *const PunctModel,
    line: *const c_char,
    chunk_size: usize,
    overlap: usize,
) -> *mut c_char {
    let Some(model) = model.as_ref() else {
        set_error("model must not be null");
        return ptr::null_mut();
    };
    let line = match required_str(line, "line") {
        Ok(l) => l,
        Err(_) => return ptr::null_mut(),
    };
    let doc = match parse_timed_line(line) {
        Ok(d) => d,
        Err(e) => {
            fail(&e);
            return ptr::null_mut();
        }
    };
    match predict(&model.inner, &doc, &chunk_config(chunk_size, overlap)) {
        Ok(labeled) => to_c_string(render_punctuated(&labeled)),
        Err(e) => {
            fail(&e);
            ptr::null_mut()
        }
    }
}

/// Punctuate a whole in-file and write the out-file of punctuated lines.
/// `chunk_size = 0` selects the default window config.
///
/// # Safety
/// `model` must be a live handle; both paths valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn punct_model_predict_file(
    model: *const PunctModel,
    in_path: *const c_char,
    out_path: *const c_char,
    chunk_size: usize,
    overlap: usize,
) -> PunctStatus {
    let Some(model) = model.as_ref() else {
        set_error("model must not be null");
        return PunctStatus::NullArgument;
    };
    let in_path = match required_str(in_path, "in_path") {
        Ok(p) => p,
        Err(status) => return status,
    };
    let out_path = match required_str(out_path, "out_path") {
        Ok(p) => p,
        Err(status) => return status,
    };
    let config = chunk_config(chunk_size, overlap);
    let run = || -> Result<(), Error> {
        let docs = read_timed_file(Path::new(in_path))?;
        let mut out = String::new();
        for doc in &docs {
            let labeled = predict(&model.inner, doc, &config)?;
            out.push_str(&render_punctuated(&labeled));
            out.push('\n');
        }
        std::fs::write(out_path, out)?;
        Ok(())
    };
    match run() {
        Ok(()) => PunctStatus::Ok,
        Err(e) => fail(&e),
    }
}

/// Score an out-file against an expected-file, both 1:1 with the in-file.
/// Returns a report handle, or null on error.
///
/// # Safety
/// All paths must be valid NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn punct_evaluate_files(
    expected_path: *const c_char,
    out_path: *const c_char,
    in_path: *const c_char,
) -> *mut PunctReport {
    let expected = match required_str(expected_path, "expected_path") {
        Ok(p) => p,
        Err(_) => return ptr::null_mut(),
    };
    let out = match required_str(out_path, "out_path") {
        Ok(p) => p,
        Err(_) => return ptr::null_mut(),
    };
    let input = match required_str(in_path, "in_path") {
        Ok(p) => p,
        Err(_) => return ptr::null_mut(),
    };
    match evaluate_files(Path::new(expected), Path::new(out), Path::new(input)) {
        Ok(report) => Box::into_raw(Box::new(PunctReport { inner: report })),
        Err(e) => {
            fail(&e);
            ptr::null_mut()
        }
    }
}

/// Support-weighted F1 on the 0-100 scale; -1 for null.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_report_weighted_f1(report: *const PunctReport) -> f64 {
    report.as_ref().map_or(-1.0, |r| r.inner.weighted_f1)
}

/// F1 of one mark, indexed 0..6 in the order fullstop, comma, question
/// mark, exclamation mark, hyphen, ellipsis; -1 on bad index or null.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_report_class_f1(
    report: *const PunctReport,
    class_index: usize,
) -> f64 {
    report
        .as_ref()
        .and_then(|r| r.inner.per_class.get(class_index))
        .map_or(-1.0, |scores| scores.f1)
}

/// The report as a machine-readable key=value block; null for null input.
///
/// # Safety
/// `report` must be a live handle from this library, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_report_machine_block(report: *const PunctReport) -> *mut c_char {
    match report.as_ref() {
        Some(r) => to_c_string(r.inner.machine_block()),
        None => {
            set_error("report must not be null");
            ptr::null_mut()
        }
    }
}

/// Release a report handle.
///
/// # Safety
/// `report` must be a handle from this library, not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn punct_report_free(report: *mut PunctReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
