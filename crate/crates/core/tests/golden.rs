//! Every known discrepancy is pinned to its canonical diff set.
//!
//! Run with `QRS_BLESS=1` to rewrite the files after an intentional change.

use std::path::PathBuf;

use qrs::verifier::{self, Expected};

fn golden_path(id: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{id}.json"))
}

fn diff_set(id: &str) -> String {
    let reports = verifier::sweep(&[id], &[], &verifier::default_ranges()).unwrap();
    serde_json::to_string_pretty(&reports).unwrap() + "\n"
}

#[test]
fn known_discrepancies_match_golden_files() {
    let bless = std::env::var_os("QRS_BLESS").is_some();
    let mut stale = Vec::new();
    for rec in verifier::catalog().iter().filter(|r| r.expected == Expected::KnownDiscrepancy) {
        let current = diff_set(rec.id);
        let path = golden_path(rec.id);
        if bless {
            std::fs::write(&path, &current).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(stored) if stored == current => {}
            Ok(_) => stale.push(format!("{} differs", rec.id)),
            Err(_) => stale.push(format!("{} has no golden file", rec.id)),
        }
    }
    assert!(stale.is_empty(), "golden files out of date (rerun with QRS_BLESS=1): {stale:#?}");
}

#[test]
fn every_golden_file_has_a_known_discrepancy_record() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        let id = name.strip_suffix(".json").expect("only json files");
        let rec = verifier::find(id).unwrap();
        assert_eq!(rec.expected, Expected::KnownDiscrepancy, "{id}");
    }
}

#[test]
fn every_golden_file_records_at_least_one_mismatch() {
    for rec in verifier::catalog().iter().filter(|r| r.expected == Expected::KnownDiscrepancy) {
        let stored = std::fs::read_to_string(golden_path(rec.id)).unwrap();
        let reports: Vec<qrs::report::VerificationReport> = serde_json::from_str(&stored).unwrap();
        assert!(reports.iter().any(|r| r.first_mismatch.is_some()), "{} never mismatches", rec.id);
    }
}
