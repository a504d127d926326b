use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_t3embed"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn decide(args: &[&str]) -> (Output, Option<Value>) {
    let out = bin().arg("decide").args(args).output().unwrap();
    let json = serde_json::from_slice(&out.stdout).ok();
    (out, json)
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn subtorus_embeds() {
    let (out, report) = decide(&[fixture("subtorus.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report = report.unwrap();
    assert_eq!(report["verdict"]["case"], "PrimitiveRank2");
    assert!(report["invariants"].is_null());
    assert!(report["witness"].is_null());
}

#[test]
fn klein_bottle_rejected_by_surjectivity() {
    let (out, report) = decide(&[fixture("klein_bottle.json").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let report = report.unwrap();
    let c4 = &report["conditions"][3];
    assert_eq!(c4["id"], "surjective");
    assert_eq!(c4["holds"], false);
    assert_eq!(c4["evidence"]["image"]["rank"], 1);
}

#[test]
fn bad_column_sum_is_an_input_error() {
    let (out, report) = decide(&[fixture("bad_column_sum.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(report.is_none());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("torsion generator must map to zero"), "{err}");
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("broken.json", "{\"surface\": "),
        ("shape.json", r#"{"surface": {"type": "orientable", "genus": 2}, "matrix": [[1,0],[0,1],[0,0]]}"#),
        ("genus.json", r#"{"surface": {"type": "nonorientable", "genus": 0}, "matrix": [[],[],[]]}"#),
    ];
    for (name, text) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let (out, _) = decide(&[path.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{name}");
        assert!(!out.stderr.is_empty());
    }
    let (out, _) = decide(&["/nonexistent/job.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn standard_u4_witness() {
    let (out, report) = decide(&[fixture("u4_standard.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report = report.unwrap();
    assert_eq!(report["verdict"]["case"], "NonorientableAllFive");
    let w = &report["witness"];
    assert_eq!(w["shape"], "NonorientableStandard");
    assert_eq!(w["torus_image"], serde_json::json!([[1, 0, 0], [0, 1, 0]]));
    assert_eq!(w["cross_tube_class"], serde_json::json!([0, 0, 1]));
    assert_eq!(w["handle_pairs"], serde_json::json!([]));
    assert_eq!(report["invariants"]["kernel"]["det_gram"], 1);
}

#[test]
fn flags_override_job_options() {
    let path = fixture("u6_handle_pair.json");
    let (_, brief) = decide(&[path.to_str().unwrap(), "--report", "verdict"]);
    assert!(brief.unwrap()["invariants"].is_null());
    let (out, full) = decide(&[fixture("subtorus.json").to_str().unwrap(), "--witness", "--report=full"]);
    assert_eq!(code(&out), 0);
    let full = full.unwrap();
    assert_eq!(full["witness"]["shape"], "TorusWithHandles");
    assert_eq!(full["invariants"]["omega"]["x*y"], 1);
}

#[test]
fn m_caveat_in_notes() {
    let (out, report) = decide(&[fixture("u6_handle_pair.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report = report.unwrap();
    assert_eq!(report["witness"]["handle_pairs"].as_array().unwrap().len(), 1);
    assert!(report["notes"][0].as_str().unwrap().contains("m-coefficient"));
}

#[test]
fn reports_are_byte_identical() {
    let path = fixture("u6_handle_pair.json");
    let a = bin().args(["decide", path.to_str().unwrap()]).output().unwrap();
    let b = bin().args(["decide", path.to_str().unwrap()]).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reads_standard_input_and_keeps_big_integers_exact() {
    let job = r#"{"surface": {"type": "orientable", "genus": 1},
                  "matrix": [[100000000000000000000, 0], [0, 1], [0, 0]],
                  "options": {"report": "full"}}"#;
    let mut child = bin()
        .args(["decide", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(job.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["invariants"]["omega"]["x*y"], "100000000000000000000");
    assert_eq!(report["invariants"]["matrix"][0][0], "100000000000000000000");
}

fn sample(args: &[&str]) -> (i32, Vec<Value>) {
    let out = bin().arg("sample").args(args).output().unwrap();
    let lines = String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    (code(&out), lines)
}

#[test]
fn sample_is_reproducible() {
    let args = ["--surface", "o:1", "--bound", "1", "--count", "10", "--seed", "7"];
    let (c, a) = sample(&args);
    let (_, b) = sample(&args);
    assert_eq!(c, 0);
    assert_eq!(a.len(), 10);
    assert_eq!(a, b);
    let (_, other) = sample(&["--surface", "o:1", "--bound", "1", "--count", "10", "--seed", "8"]);
    assert_ne!(a, other);
}

#[test]
fn sample_odd_genus_never_embeds() {
    let (_, lines) = sample(&["--surface", "n:3", "--bound", "3", "--count", "200", "--seed", "1"]);
    assert!(lines.iter().all(|l| l["embeddable"] == false));
}

#[test]
fn sample_u4_finds_embeddable_maps() {
    let (_, lines) = sample(&["--surface", "n:4", "--bound", "2", "--count", "2000", "--seed", "1"]);
    let hits = lines.iter().filter(|l| l["embeddable"] == true).count();
    assert!(hits > 0, "no embeddable maps among {}", lines.len());
}

#[test]
fn sample_rejects_bad_parameters() {
    for args in [
        vec!["--surface", "o:1", "--bound", "0"],
        vec!["--surface", "o:1", "--count", "0"],
        vec!["--surface", "q:1"],
        vec!["--surface", "n:0"],
    ] {
        let (c, _) = sample(&args);
        assert_eq!(c, 2, "{args:?}");
    }
}

#[test]
fn selftest_passes() {
    let out = bin().arg("selftest").output().unwrap();
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 9);
    assert!(!text.contains("FAIL "));
}
