//! End-to-end tests of the ringinv binary: documented invocations, JSON
//! shape, exit codes, and byte-for-byte determinism.

use std::process::{Command, Output};

fn ringinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringinv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn computes_the_documented_examples() {
    let out = ringinv(&[
        "compute", "--ring", "zmod:7", "--op", "invert-along", "--a", "5", "--d", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "3\n");

    let out = ringinv(&[
        "compute",
        "--ring",
        "gqmat:2",
        "--op",
        "invert-along",
        "--a",
        "[[1,0],[1,0]]",
        "--d",
        "[[1,1],[0,0]]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "[[1/2,1/2],[0,0]]\n");
}

#[test]
fn exhaustive_verification_passes_with_a_pinned_sigma() {
    let out = ringinv(&[
        "verify",
        "--ring",
        "zmod:9",
        "--law",
        "absorption-cross",
        "--sigma",
        "2",
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("violations: 0"), "unexpected output: {text}");
}

#[test]
fn json_output_round_trips_through_the_element_grammar() {
    let out = ringinv(&[
        "compute", "--ring", "zmod:9", "--op", "invert-along", "--a", "7", "--d", "4", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    for key in ["b", "u", "u_inv", "v", "v_inv", "left_witness", "right_witness"] {
        let lit = v[key].as_str().unwrap_or_else(|| panic!("missing {key}"));
        // every reported value must parse back as an element of the ring
        let n: u64 = lit.parse().expect("modular literal");
        assert!(n < 9);
    }
    assert_eq!(v["b"], "4");
}

#[test]
fn drazin_output_carries_the_index() {
    let out = ringinv(&["compute", "--ring", "zmod:8", "--op", "drazin", "--a", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "0\nindex: 3\n");

    let out = ringinv(&[
        "compute", "--ring", "zmod:8", "--op", "drazin", "--a", "2", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["b"], "0");
    assert_eq!(v["index"], 3);
}

#[test]
fn absent_inverses_exit_one_with_a_reason() {
    let out = ringinv(&["compute", "--ring", "zmod:4", "--op", "group", "--a", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out), "absent: not-regular\n");

    let out = ringinv(&[
        "compute", "--ring", "zmod:4", "--op", "group", "--a", "2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["absent"], "not-regular");
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["compute", "--ring", "zfoo:7", "--op", "group", "--a", "5"],
        &["compute", "--ring", "zmod:7", "--op", "invert-along", "--a", "5"],
        &["compute", "--ring", "zmod:7", "--op", "group", "--a", "5", "--d", "3"],
        &["verify", "--ring", "zmod:7", "--law", "nope", "--exhaustive"],
        &["verify", "--ring", "gqmat:2", "--law", "absorption", "--exhaustive"],
        &["verify", "--ring", "zmod:7", "--law", "absorption"],
        &["verify", "--ring", "zmod:7", "--law", "absorption", "--inputs", "[\"1\"]"],
        &["search", "--ring", "zmod:6", "--law", "jacobson", "--drop", "sigma-bijective"],
    ];
    for args in cases {
        let out = ringinv(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}

#[test]
fn verify_checks_a_single_instance() {
    let out = ringinv(&[
        "verify",
        "--ring",
        "zmod:9",
        "--law",
        "reverse-order",
        "--inputs",
        r#"["7","5","4"]"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("verdict: holds"));
    assert!(text.contains("lhs: 8"));
}

#[test]
fn search_exposes_the_gap_behind_the_bijectivity_requirement() {
    let out = ringinv(&[
        "search",
        "--ring",
        "zmod:6",
        "--law",
        "along-sigma-criterion",
        "--drop",
        "sigma-bijective",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["checked"], 216);
    let hit = v["violations"].as_array().unwrap().iter().any(|r| {
        r["inputs"]["a"] == "4" && r["inputs"]["d"] == "2" && r["sigma"] == "3"
    });
    assert!(hit, "expected the a=4, d=2, sigma=3 witness");
}

#[test]
fn candidate_files_drive_matrix_searches() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("candidates.json");
    std::fs::write(
        &path,
        r#"["[[1,0],[1,0]]","[[0,0],[1,1]]","[[1,1],[0,0]]","[[1,1],[1,1]]"]"#,
    )
    .unwrap();
    let out = ringinv(&[
        "search",
        "--ring",
        "gqmat:2",
        "--law",
        "absorption-cross",
        "--drop",
        "d1-eq-sigma-d2",
        "--candidates",
        path.to_str().unwrap(),
        "--sigma",
        "[[1,0],[0,1]]",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let hit = v["violations"].as_array().unwrap().iter().any(|r| {
        r["inputs"]["a"] == "[[1,0],[1,0]]"
            && r["inputs"]["b"] == "[[0,0],[1,1]]"
            && r["inputs"]["d1"] == "[[1,1],[0,0]]"
            && r["inputs"]["d2"] == "[[1,1],[1,1]]"
            && r["lhs"] == "[[1,1],[1/2,1/2]]"
            && r["rhs"] == "[[1,1],[0,0]]"
    });
    assert!(hit, "expected the unlinked-alignment violation");
}

#[test]
fn identical_invocations_yield_identical_bytes() {
    let args = [
        "search",
        "--ring",
        "zmod:6",
        "--law",
        "along-sigma-criterion",
        "--drop",
        "sigma-bijective",
        "--json",
    ];
    let first = ringinv(&args);
    let second = ringinv(&args);
    assert_eq!(first.stdout, second.stdout);

    // output must not depend on the worker count either
    let capped = Command::new(env!("CARGO_BIN_EXE_ringinv"))
        .args(args)
        .env("RINGINV_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, capped.stdout);
}
