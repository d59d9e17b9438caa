use std::fs;
use std::path::Path;

use powertuple::search::{run_search, FindingClass, SearchConfig, SearchError};
use serde_json::Value;

fn cfg(b: u64, partitions: u64, out: &Path) -> SearchConfig {
    SearchConfig {
        height_bound: b,
        partitions,
        out: Some(out.to_path_buf()),
        checkpoint_every: 16,
        ..SearchConfig::default()
    }
}

fn part_path(out: &Path, i: u64, ext: &str) -> std::path::PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(format!(".part-{i}.{ext}"));
    s.into()
}

#[test]
fn height_ten_has_no_pairs() {
    // |u^4 - v^4| >= 15 > floor(10 / q) for every admissible a.
    let outcome = run_search(&SearchConfig { height_bound: 10, ..SearchConfig::default() }).unwrap();
    assert_eq!(outcome.stats.a_values, 63);
    assert_eq!(outcome.stats.pairs_examined, 0);
    assert!(outcome.findings.is_empty());
}

#[test]
fn height_hundred_regression() {
    let outcome = run_search(&SearchConfig { height_bound: 100, ..SearchConfig::default() }).unwrap();
    let s = &outcome.stats;
    assert_eq!((s.pairs_examined, s.triples, s.almost_quadruples, s.quadruples), (211, 6, 0, 0));
    for rec in &outcome.findings {
        assert_eq!(rec.finding.class, FindingClass::Triple);
        assert!(rec.finding.roots.iter().all(|e| e.fourth_root.is_some()));
    }
}

#[test]
fn separate_partition_runs_merge_like_one_run() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("whole.jsonl");
    run_search(&cfg(100, 3, &whole)).unwrap();

    let split = dir.path().join("split.jsonl");
    for i in [2, 0] {
        let outcome = run_search(&SearchConfig { partition_index: Some(i), ..cfg(100, 3, &split) }).unwrap();
        assert!(!outcome.complete);
        assert!(!split.exists());
    }
    let last = run_search(&SearchConfig { partition_index: Some(1), ..cfg(100, 3, &split) }).unwrap();
    assert!(last.complete);
    assert_eq!(fs::read(&whole).unwrap(), fs::read(&split).unwrap());
}

#[test]
fn resume_drops_unflushed_tail_and_reemits_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run.jsonl");
    let first = run_search(&cfg(100, 2, &out)).unwrap();
    let merged = fs::read(&out).unwrap();

    // A torn write after the last checkpoint.
    let part = part_path(&out, 0, "jsonl");
    let mut body = fs::read_to_string(&part).unwrap();
    body.push_str("{\"class\":\"triple\",\"elem");
    fs::write(&part, body).unwrap();

    let resumed = run_search(&SearchConfig { resume: true, ..cfg(100, 2, &out) }).unwrap();
    assert_eq!(resumed.stats.pairs_examined, first.stats.pairs_examined);
    assert_eq!(fs::read(&out).unwrap(), merged);
    let lines = fs::read_to_string(&part).unwrap().lines().count();
    assert_eq!(lines, first.partitions[0].records.len());
}

#[test]
fn resume_from_midway_checkpoint_finishes_the_range() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mid.jsonl");
    let first = run_search(&cfg(100, 1, &out)).unwrap();
    let merged = fs::read(&out).unwrap();
    let records = &first.partitions[0].records;
    assert!(records.len() >= 2);

    // Rewind the checkpoint to just before the a-index of the last record.
    let cut_index = records.last().unwrap().finding.source.as_ref().unwrap().a_index - 1;
    let kept = records
        .iter()
        .filter(|r| r.finding.source.as_ref().unwrap().a_index <= cut_index)
        .count();
    let ckpt_path = part_path(&out, 0, "checkpoint.json");
    let mut ckpt: Value = serde_json::from_str(&fs::read_to_string(&ckpt_path).unwrap()).unwrap();
    ckpt["last_completed"] = cut_index.into();
    ckpt["records_flushed"] = (kept as u64).into();
    ckpt["complete"] = false.into();
    fs::write(&ckpt_path, ckpt.to_string()).unwrap();
    fs::remove_file(&out).unwrap();

    run_search(&SearchConfig { resume: true, ..cfg(100, 1, &out) }).unwrap();
    let findings = |bytes: &[u8]| -> Vec<String> {
        String::from_utf8(bytes.to_vec())
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str::<Value>(l).unwrap()["elements"].to_string())
            .collect()
    };
    assert_eq!(findings(&fs::read(&out).unwrap()), findings(&merged));
}

#[test]
fn resume_with_different_config_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cfg.jsonl");
    run_search(&cfg(100, 1, &out)).unwrap();
    let err = run_search(&SearchConfig { resume: true, ext_bound: 50, ..cfg(100, 1, &out) }).unwrap_err();
    assert!(matches!(err, SearchError::CheckpointMismatch { .. }));
}

#[test]
fn unwritable_output_is_an_io_failure() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("x.jsonl");
    let err = run_search(&cfg(100, 1, &out)).unwrap_err();
    assert!(matches!(err, SearchError::IoFailure { .. }));
}
