//! Exercises the C ABI the way a foreign binding would: C strings in,
//! handles and status codes out.

use std::ffi::{CStr, CString};
use std::path::Path;
use std::ptr;

use punctuate_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null(), "unexpected null: {}", last_error());
    let s = CStr::from_ptr(ptr).to_str().unwrap().to_string();
    punct_string_free(ptr);
    s
}

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(punct_last_error())
            .to_string_lossy()
            .into_owned()
    }
}

const SAMPLE_LINE: &str = "I:5880-5880 teraz:5940-6180 mamy:6330-6450 drugi:6480-6900 \
     dzień:6960-7080 takiej:7170-7410 ładnej:7440-7650 pogody:7830-8400 Ała:8430-8430 \
     Nie:8760-8820 bij:8850-8970 mnie:9120-9330 kijem:9450-9870 To:10020-10080 boli:10170-10260";
const SAMPLE_GOLD: &str =
    "I teraz mamy drugi dzień takiej ładnej pogody... Ała! Nie bij mnie kijem! To boli!";

fn write_sample_pair(dir: &Path) -> (CString, CString) {
    let in_path = dir.join("in.tsv");
    let expected_path = dir.join("expected.tsv");
    std::fs::write(&in_path, format!("{SAMPLE_LINE}\n")).unwrap();
    std::fs::write(&expected_path, format!("{SAMPLE_GOLD}\n")).unwrap();
    (
        c(in_path.to_str().unwrap()),
        c(expected_path.to_str().unwrap()),
    )
}

#[test]
fn version_is_non_empty() {
    let version = unsafe { CStr::from_ptr(punct_version()) };
    assert!(!version.to_bytes().is_empty());
}

#[test]
fn normalize_and_strip() {
    unsafe {
        let text = c("pogody... Ała!");
        let normalized = take_string(punct_normalize_ellipsis(text.as_ptr()));
        assert_eq!(normalized, "pogody… Ała!");

        let line = c("To:10020-10080 boli:10170-10260");
        let stripped = take_string(punct_strip_timestamps(line.as_ptr()));
        assert_eq!(stripped, "To boli");
    }
}

#[test]
fn null_arguments_are_reported() {
    unsafe {
        assert!(punct_normalize_ellipsis(ptr::null()).is_null());
        assert!(last_error().contains("null"));
        assert_eq!(
            punct_model_save(ptr::null(), c("x").as_ptr()),
            PunctStatus::NullArgument
        );
        assert_eq!(punct_model_num_features(ptr::null()), 0);
        assert_eq!(punct_report_weighted_f1(ptr::null()), -1.0);
        // frees tolerate null
        punct_model_free(ptr::null_mut());
        punct_report_free(ptr::null_mut());
        punct_string_free(ptr::null_mut());
    }
}

#[test]
fn parse_errors_surface_through_status() {
    unsafe {
        let bad = c("boli:10170-abc");
        assert!(punct_strip_timestamps(bad.as_ptr()).is_null());
        assert!(last_error().contains("non-integer"), "{}", last_error());
    }
}

#[test]
fn train_predict_evaluate_round_trip() {
    let dir = tempfile::tempdir().unwrap();

    // a small corpus where "koniec" always ends a sentence
    let mut in_lines = String::new();
    let mut expected_lines = String::new();
    for _ in 0..30 {
        in_lines.push_str("Ala:0-60 ma:100-160 kota:200-260 koniec:300-360\n");
        expected_lines.push_str("Ala ma kota koniec.\n");
    }
    let train_in = dir.path().join("train.in.tsv");
    let train_expected = dir.path().join("train.expected.tsv");
    std::fs::write(&train_in, &in_lines).unwrap();
    std::fs::write(&train_expected, &expected_lines).unwrap();

    unsafe {
        let in_c = c(train_in.to_str().unwrap());
        let expected_c = c(train_expected.to_str().unwrap());
        let in_ptrs = [in_c.as_ptr()];
        let expected_ptrs = [expected_c.as_ptr()];
        let model =
            punct_model_train_files(in_ptrs.as_ptr(), expected_ptrs.as_ptr(), 1, 5, 42, 2, false);
        assert!(!model.is_null(), "{}", last_error());
        assert!(punct_model_num_features(model) > 0);

        // save, reload, and predict a line
        let model_path = c(dir.path().join("model.txt").to_str().unwrap());
        assert_eq!(
            punct_model_save(model, model_path.as_ptr()),
            PunctStatus::Ok
        );
        let reloaded = punct_model_load(model_path.as_ptr());
        assert!(!reloaded.is_null(), "{}", last_error());
        assert_eq!(
            punct_model_num_features(reloaded),
            punct_model_num_features(model)
        );

        let line = c("Ala:0-60 ma:100-160 kota:200-260 koniec:300-360");
        let punctuated = take_string(punct_model_predict_line(reloaded, line.as_ptr(), 0, 0));
        assert_eq!(punctuated, "Ala ma kota koniec.");

        // file-level predict + evaluate
        let out_path = c(dir.path().join("out.tsv").to_str().unwrap());
        assert_eq!(
            punct_model_predict_file(reloaded, in_c.as_ptr(), out_path.as_ptr(), 0, 0),
            PunctStatus::Ok
        );
        let report = punct_evaluate_files(expected_c.as_ptr(), out_path.as_ptr(), in_c.as_ptr());
        assert!(!report.is_null(), "{}", last_error());
        assert_eq!(punct_report_weighted_f1(report), 100.0);
        // fullstop is class index 0 in report order
        assert_eq!(punct_report_class_f1(report, 0), 100.0);
        assert_eq!(punct_report_class_f1(report, 99), -1.0);
        let block = take_string(punct_report_machine_block(report));
        assert!(block.contains("weighted_f1=100.00"), "{block}");

        punct_report_free(report);
        punct_model_free(reloaded);
        punct_model_free(model);
    }
}

#[test]
fn evaluate_alignment_error_sets_message() {
    let dir = tempfile::tempdir().unwrap();
    let (in_c, expected_c) = write_sample_pair(dir.path());
    let out_path = dir.path().join("out.tsv");
    std::fs::write(&out_path, "całkiem inne słowa zupełnie\n").unwrap();
    let out_c = c(out_path.to_str().unwrap());
    unsafe {
        let report = punct_evaluate_files(expected_c.as_ptr(), out_c.as_ptr(), in_c.as_ptr());
        assert!(report.is_null());
        assert!(last_error().contains("line 1"), "{}", last_error());
    }
}

#[test]
fn generated_header_covers_the_surface() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/punctuate.h"))
            .expect("cbindgen header exists");
    for symbol in [
        "punct_last_error",
        "punct_version",
        "punct_string_free",
        "punct_normalize_ellipsis",
        "punct_strip_timestamps",
        "punct_model_train_files",
        "punct_model_load",
        "punct_model_save",
        "punct_model_num_features",
        "punct_model_free",
        "punct_model_predict_line",
        "punct_model_predict_file",
        "punct_evaluate_files",
        "punct_report_weighted_f1",
        "punct_report_class_f1",
        "punct_report_machine_block",
        "punct_report_free",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
    assert!(header.contains("typedef struct PunctModel PunctModel;"));
    assert!(header.contains("typedef struct PunctReport PunctReport;"));
    assert!(header.contains("PUNCT_STATUS_ALIGNMENT"));
}
