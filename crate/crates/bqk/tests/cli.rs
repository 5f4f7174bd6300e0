//! End-to-end tests of the command-line interface: values, exit codes,
//! and byte-determinism of file outputs across thread counts.

use std::path::Path;
use std::process::{Command, Output};

fn bqk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bqk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn fixture(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel).display().to_string()
}

#[test]
fn invariant_count_and_polynomial() {
    let out = bqk(&["invariant", "L2a1", "--alexander", "3,1,1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "27");

    let out = bqk(&[
        "invariant",
        "L2a1",
        "--biquasile",
        &fixture("biquasiles/order2.json"),
        "--weight",
        &fixture("weights/order2_z5.json"),
    ]);
    assert_eq!(stdout(&out).trim(), "4 + 4u");

    let out = bqk(&[
        "invariant",
        "L6a4",
        "--biquasile",
        &fixture("biquasiles/order2.json"),
        "--weight",
        &fixture("weights/order2_z6_w1.json"),
    ]);
    assert_eq!(stdout(&out).trim(), "16");

    // 0-crossing unknot: order² colorings.
    let out = bqk(&["invariant", "PD[]", "--biquasile", &fixture("biquasiles/order2.json")]);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn invariant_accepts_pd_literals_and_dual_graph_json() {
    let out = bqk(&["invariant", "PD[X[4,1,3,2],X[2,3,1,4]]", "--alexander", "3,1,1,2"]);
    assert_eq!(stdout(&out).trim(), "27");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.json");
    let regions = bqk(&["regions", "L2a1", "--format", "json"]);
    std::fs::write(&path, stdout(&regions)).unwrap();
    let out = bqk(&["invariant", path.to_str().unwrap(), "--alexander", "3,1,1,2"]);
    assert_eq!(stdout(&out).trim(), "27", "dual-graph JSON accepted as direct input");
}

#[test]
fn check_biquasile_exit_codes() {
    let good = bqk(&["check-biquasile", &fixture("biquasiles/z3_d1_s1_n2.json")]);
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(stdout(&good).trim(), "pass");

    let dir = tempfile::tempdir().unwrap();
    let bad_latin = dir.path().join("bad.json");
    std::fs::write(&bad_latin, r#"{"order":2,"star":[[1,1],[2,2]],"dot":[[1,2],[2,1]]}"#).unwrap();
    let out = bqk(&["check-biquasile", bad_latin.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "axiom failure exits 1");

    let missing = bqk(&["check-biquasile", "/nonexistent/x.json"]);
    assert_eq!(missing.status.code(), Some(2), "i/o failure exits 2");

    let malformed = dir.path().join("bad2.json");
    std::fs::write(&malformed, "{").unwrap();
    let out = bqk(&["check-biquasile", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "format failure exits 2");
}

#[test]
fn mutated_table_matches_library_verdict() {
    // Randomly mutate one entry of a valid table; the CLI verdict must
    // agree with the library's.
    let json = std::fs::read_to_string(fixture("biquasiles/z3_d1_s1_n2.json")).unwrap();
    let base: bqk::biquasile::BiquasileJson = serde_json::from_str(&json).unwrap();
    let dir = tempfile::tempdir().unwrap();
    for i in 0..6 {
        let mut mutated = base.clone();
        mutated.star[i / 3][i % 3] = 1 + ((mutated.star[i / 3][i % 3] as usize) % 3) as u8;
        let path = dir.path().join(format!("m{i}.json"));
        std::fs::write(&path, serde_json::to_string(&mutated).unwrap()).unwrap();
        let out = bqk(&["check-biquasile", path.to_str().unwrap()]);
        let lib = bqk::biquasile::check_axioms(&mutated.star, &mutated.dot).unwrap();
        let expected = if lib == bqk::biquasile::Verdict::Pass { 0 } else { 1 };
        assert_eq!(out.status.code(), Some(expected), "mutation {i}");
    }
}

#[test]
fn solve_weights_and_enumerate() {
    let out = bqk(&[
        "solve-weights",
        "--biquasile",
        &fixture("biquasiles/order2.json"),
        "--modulus",
        "5",
    ]);
    assert_eq!(stdout(&out).trim(), "125 solutions");

    let out = bqk(&["enumerate-biquasiles", "1"]);
    assert_eq!(stdout(&out).trim(), "1 biquasile of order 1");

    let out = bqk(&["enumerate-biquasiles", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn color_and_regions_output() {
    let out = bqk(&["color", "L2a1", "--alexander", "3,1,1,2"]);
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("27 colorings"));
    assert_eq!(text.lines().count(), 28);

    let out = bqk(&["color", "L2a1", "--alexander", "3,1,1,2", "--format", "json"]);
    let rows: Vec<Vec<u8>> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rows.len(), 27);
    assert!(rows.iter().all(|r| r.len() == 4 && r.iter().all(|&c| (1..=3).contains(&c))));

    let out = bqk(&["regions", "8_1"]);
    assert!(stdout(&out).starts_with("10 regions, 8 crossings"));
}

#[test]
fn presentation_output() {
    let out = bqk(&["presentation", "L2a1"]);
    let text = stdout(&out);
    assert!(text.contains('⟨') && text.contains('∗'), "unicode by default: {text}");
    let out = bqk(&["presentation", "L2a1", "--ascii"]);
    let text = stdout(&out);
    assert!(text.contains('<') && text.contains('*'), "ascii fallback: {text}");
}

#[test]
fn linear_weight_json() {
    let out = bqk(&["linear-weight", "--alexander", "3,2,2,1", "--linear", "2"]);
    let j: bqk::boltzmann::WeightJson = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(j.coeffs.get("1,1,1"), Some(&2));
    assert_eq!(j.coeffs.get("2,1,3"), Some(&1));
    assert_eq!(j.coeffs.len(), 18);
}

#[test]
fn scan_is_deterministic_across_thread_counts_and_resumable() {
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    let args = |out: &str, threads: &str| {
        vec![
            "scan-conjecture".to_string(),
            "--max-n".into(),
            "3".into(),
            "--knots".into(),
            "4".into(),
            "--links".into(),
            "4".into(),
            "--out".into(),
            out.to_string(),
            "--threads".into(),
            threads.to_string(),
        ]
    };
    let a1: Vec<String> = args(dir1.path().to_str().unwrap(), "1");
    let a2: Vec<String> = args(dir2.path().to_str().unwrap(), "4");
    let o1 = Command::new(env!("CARGO_BIN_EXE_bqk")).args(&a1).output().unwrap();
    let o2 = Command::new(env!("CARGO_BIN_EXE_bqk")).args(&a2).output().unwrap();
    assert!(o1.status.success() && o2.status.success());
    let r1 = std::fs::read(dir1.path().join("scan.jsonl")).unwrap();
    let r2 = std::fs::read(dir2.path().join("scan.jsonl")).unwrap();
    assert_eq!(r1, r2, "report bytes agree across thread counts");
    assert_eq!(stdout(&o1), stdout(&o2));

    // Resuming over a complete report recomputes nothing and rewrites the
    // same bytes.
    let o3 = Command::new(env!("CARGO_BIN_EXE_bqk")).args(&a1).output().unwrap();
    assert!(o3.status.success());
    let r3 = std::fs::read(dir1.path().join("scan.jsonl")).unwrap();
    assert_eq!(r1, r3);
}

#[test]
fn env_var_sets_threads() {
    let out = Command::new(env!("CARGO_BIN_EXE_bqk"))
        .env("BQK_THREADS", "2")
        .args(["invariant", "L2a1", "--alexander", "3,1,1,2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "27");
}

#[test]
fn unknown_link_is_format_error() {
    let out = bqk(&["invariant", "NoSuchLink", "--alexander", "3,1,1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn split_diagram_is_validation_error() {
    let out = bqk(&["invariant", "PD[X[1,1,2,2],X[3,3,4,4]]", "--alexander", "3,1,1,2"]);
    assert_eq!(out.status.code(), Some(1));
}
