//! Golden-file and exit-code tests for every subcommand, driving the real
//! binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_yangbax"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden(name)).expect("golden file")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(bin()).args(args).env(key, value).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Compare JSON documents with byte-exact strings in rational mode and
/// tolerance on numbers (for float documents).
fn assert_json_close(a: &serde_json::Value, b: &serde_json::Value, tol: f64) {
    match (a, b) {
        (serde_json::Value::Number(x), serde_json::Value::Number(y)) => {
            let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            assert!((x - y).abs() <= tol, "{x} vs {y}");
        }
        (serde_json::Value::Array(xs), serde_json::Value::Array(ys)) => {
            assert_eq!(xs.len(), ys.len());
            for (x, y) in xs.iter().zip(ys) {
                assert_json_close(x, y, tol);
            }
        }
        (serde_json::Value::Object(xs), serde_json::Value::Object(ys)) => {
            assert_eq!(
                xs.keys().collect::<Vec<_>>(),
                ys.keys().collect::<Vec<_>>()
            );
            for (k, x) in xs {
                assert_json_close(x, &ys[k], tol);
            }
        }
        _ => assert_eq!(a, b),
    }
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

#[test]
fn build_8v_matches_golden_byte_exact() {
    let out = run(&["build", "8v", "a=1", "b=1", "c=1", "x=2", "y=3", "z=5", "v=7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), read_golden("build_8v.json"));
}

#[test]
fn build_rational_families_golden() {
    for (golden_name, args) in [
        (
            "build_6v_asym.json",
            vec!["build", "6v-asym-rational", "a=1", "b=2", "c=3", "d=4", "e=5", "f=6"],
        ),
        (
            "build_6vff.json",
            vec![
                "build", "6vff", "b11=2", "b12=3", "b21=1", "b22=2", "c11=1", "c12=1", "c21=1",
                "c22=2",
            ],
        ),
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{golden_name}: {}", stderr(&out));
        assert_eq!(stdout(&out), read_golden(golden_name), "{golden_name}");
    }
}

#[test]
fn build_baxter_matches_golden_numerically() {
    let out = run(&["build", "8v-baxter", "sigma=0.3", "chi=0.5", "gamma=1.1", "k=0.6"]);
    assert!(out.status.success());
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let want: serde_json::Value =
        serde_json::from_str(&read_golden("build_baxter.json")).unwrap();
    assert_json_close(&got, &want, 1e-12);
}

#[test]
fn build_unknown_family_exits_2() {
    let out = run(&["build", "9v", "x=1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown family"));
}

#[test]
fn build_constraint_violation_exits_3_with_relation() {
    let out = run(&[
        "build", "5vff", "p1=2", "p2=3", "q2=5", "q3=7", "g12=1", "g13=1", "g23=1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("g12*g23 != g13*(1-p2*q2)"));
}

#[test]
fn build_degenerate_5v1_warns_but_succeeds() {
    let out = run(&["build", "5v1", "d=1", "q1=1", "q2=1", "q3=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn build_8v_degenerate_stratum_warns() {
    let out = run(&["build", "8v", "a=1", "b=1", "c=1", "x=2", "y=3", "z=5", "v=3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("v = y"));
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[test]
fn verify_pass_and_fail_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("t.json");
    let built = run(&["build", "8v", "a=1", "b=1", "c=1", "x=2", "y=3", "z=5", "v=7"]);
    std::fs::write(&doc, stdout(&built)).unwrap();

    let ok = run(&["verify", "--in", doc.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("PASS"));

    // tamper with one entry
    let mut text = std::fs::read_to_string(&doc).unwrap();
    text = text.replacen("\"5/3\"", "\"8/3\"", 1);
    std::fs::write(&doc, text).unwrap();
    let bad = run(&["verify", "--in", doc.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL"));
}

#[test]
fn verify_identity_triplet_passes() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("id.json");
    let identity_row = |d: &str| {
        (0..4)
            .map(|c| format!("\"{}\"", if c.to_string() == *d { "1" } else { "0" }))
            .collect::<Vec<_>>()
            .join(",")
    };
    let m = format!(
        "[[{}],[{}],[{}],[{}]]",
        identity_row("0"),
        identity_row("1"),
        identity_row("2"),
        identity_row("3")
    );
    let json = format!(
        r#"{{"format_version":"1","scalar_mode":"rational","matrices":{{"A":{m},"B":{m},"C":{m}}}}}"#
    );
    std::fs::write(&doc, json).unwrap();
    let out = run(&["verify", "--in", doc.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_honors_yangbax_tol_env() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("b.json");
    let built = run(&["build", "8v-baxter", "sigma=0.3", "chi=0.5", "gamma=1.1", "k=0.6"]);
    let mut text = stdout(&built);
    // perturb one float entry
    text = text.replacen("0.5546958003774298", "0.55469", 1);
    std::fs::write(&doc, text).unwrap();
    let strict = run(&["verify", "--in", doc.to_str().unwrap()]);
    assert_eq!(strict.status.code(), Some(1));
    let loose = run_env(&["verify", "--in", doc.to_str().unwrap()], "YANGBAX_TOL", "1.0");
    assert_eq!(loose.status.code(), Some(0));
    // explicit flag beats the environment
    let flag = run_env(
        &["verify", "--in", doc.to_str().unwrap(), "--tol", "1e-12"],
        "YANGBAX_TOL",
        "1.0",
    );
    assert_eq!(flag.status.code(), Some(1));
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

#[test]
fn invariants_golden_reports() {
    for (doc, report) in [
        ("build_8v.json", "invariants_8v.json"),
        ("build_6v_asym.json", "invariants_6v_asym.json"),
        ("build_6vff.json", "invariants_6vff.json"),
    ] {
        let out = run(&["invariants", "--in", golden(doc).to_str().unwrap()]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), read_golden(report), "{report}");
    }
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

#[test]
fn transform_involution_word_returns_the_input_matrices() {
    let out = run(&[
        "transform",
        "--in",
        golden("build_8v.json").to_str().unwrap(),
        "--word",
        "a,a",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), read_golden("transform_word_aa_8v.json"));
    // and the matrices agree with the original document
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let orig: serde_json::Value =
        serde_json::from_str(&read_golden("build_8v.json")).unwrap();
    assert_eq!(got["matrices"], orig["matrices"]);
}

#[test]
fn transform_word_preserves_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("t.json");
    let out = run(&[
        "transform",
        "--in",
        golden("build_8v.json").to_str().unwrap(),
        "--word",
        "a",
    ]);
    assert!(out.status.success());
    std::fs::write(&doc, stdout(&out)).unwrap();
    let v = run(&["verify", "--in", doc.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn transform_diagonal_gauge_rescales_abc_as_predicted() {
    // (t1,t2,t3) = (2,3,5) sends (a,b,c) = (1,1,1) to (1/36, 1/100, 1/225)
    let out = run(&[
        "transform",
        "--in",
        golden("build_8v.json").to_str().unwrap(),
        "--gauge",
        "t1=2,t2=3,t3=5",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), read_golden("transform_gauge_8v.json"));
    let rescaled = run(&[
        "build", "8v", "a=1/36", "b=1/100", "c=1/225", "x=2", "y=3", "z=5", "v=7",
    ]);
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let want: serde_json::Value = serde_json::from_str(&stdout(&rescaled)).unwrap();
    assert_eq!(got["matrices"], want["matrices"]);
}

#[test]
fn transform_needs_exactly_one_action() {
    let doc = golden("build_8v.json");
    let neither = run(&["transform", "--in", doc.to_str().unwrap()]);
    assert_eq!(neither.status.code(), Some(2));
    let both = run(&[
        "transform",
        "--in",
        doc.to_str().unwrap(),
        "--word",
        "a",
        "--gauge",
        "t1=1,t2=1,t3=1",
    ]);
    assert_eq!(both.status.code(), Some(2));
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

#[test]
fn orbit_csv_golden_with_period_flag() {
    let out = run(&[
        "orbit",
        "--in",
        golden("build_8v.json").to_str().unwrap(),
        "--word",
        "a",
        "--max-iter",
        "8",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), read_golden("orbit_8v_a.csv"));
    assert!(stderr(&out).contains("period 2"));
}

#[test]
fn orbit_rejects_empty_word() {
    let out = run(&[
        "orbit",
        "--in",
        golden("build_8v.json").to_str().unwrap(),
        "--word",
        "",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

// ---------------------------------------------------------------------------
// convert
// ---------------------------------------------------------------------------

#[test]
fn convert_xyzv_to_q_golden_and_back() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("xyzv.json");
    std::fs::write(&input, r#"{"x":2,"y":3,"z":5,"v":7}"#).unwrap();
    let out = run(&["convert", "--in", input.to_str().unwrap(), "--from", "xyzv", "--to", "q"]);
    assert!(out.status.success());
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let want: serde_json::Value =
        serde_json::from_str(&read_golden("convert_xyzv_q.json")).unwrap();
    assert_json_close(&got, &want, 1e-12);

    // round trip through the q form
    let qfile = dir.path().join("q.json");
    std::fs::write(&qfile, stdout(&out)).unwrap();
    let back = run(&["convert", "--in", qfile.to_str().unwrap(), "--from", "q", "--to", "xyzv"]);
    assert!(back.status.success());
    let round: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    for (key, expect) in [("x", 2.0), ("y", 3.0), ("z", 5.0), ("v", 7.0)] {
        let got = round[key].as_f64().unwrap();
        assert!((got - expect).abs() < 1e-10, "{key}: {got}");
    }
}

#[test]
fn convert_baxter_lands_on_the_invariant_surface() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("b.json");
    std::fs::write(&input, r#"{"sigma":0.3,"chi":0.5,"gamma":1.1,"k":0.6}"#).unwrap();
    let out = run(&[
        "convert", "--in", input.to_str().unwrap(), "--from", "baxter", "--to", "xyzv",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let (x, y, z, vv) = (
        v["x"].as_f64().unwrap(),
        v["y"].as_f64().unwrap(),
        v["z"].as_f64().unwrap(),
        v["v"].as_f64().unwrap(),
    );
    let w = x * y * z;
    let d1 = vv * (2.0 * vv - w - x - y - z) / w;
    let d2 = (vv - x) * (vv - y) * (vv - z) * (vv - w) / (w * w);
    assert!((d1 - v["Delta1"].as_f64().unwrap()).abs() < 1e-10);
    assert!((d2 - v["Delta2"].as_f64().unwrap()).abs() < 1e-10);

    // k = 0 lands in the six-vertex stratum: Delta2 = 0
    std::fs::write(&input, r#"{"sigma":0.3,"chi":0.5,"gamma":1.1,"k":0.0}"#).unwrap();
    let out = run(&[
        "convert", "--in", input.to_str().unwrap(), "--from", "baxter", "--to", "xyzv",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["Delta2"].as_f64().unwrap().abs() < 1e-14);
}

#[test]
fn convert_rejects_unknown_direction() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("x.json");
    std::fs::write(&input, r#"{"x":2}"#).unwrap();
    let out = run(&["convert", "--in", input.to_str().unwrap(), "--from", "q", "--to", "baxter"]);
    assert_eq!(out.status.code(), Some(2));
}

// ---------------------------------------------------------------------------
// documents and selftest
// ---------------------------------------------------------------------------

#[test]
fn rational_documents_round_trip_bit_exactly() {
    // the empty word is the identity, so this drives a full
    // parse -> rebuild -> serialize round trip through the binary
    let out = run(&[
        "transform",
        "--in",
        golden("build_8v.json").to_str().unwrap(),
        "--word",
        "",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), read_golden("transform_word_aa_8v.json"));
    let got: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let orig: serde_json::Value = serde_json::from_str(&read_golden("build_8v.json")).unwrap();
    assert_eq!(got["matrices"], orig["matrices"]);
}

#[test]
fn selftest_is_seeded_and_passes() {
    let a = run(&["selftest", "--seed", "7", "--samples", "4"]);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["selftest", "--seed", "7", "--samples", "4"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).lines().filter(|l| l.ends_with("PASS")).count() >= 8);
}
