//! Acceptance criterion 10: every command exercised against golden files,
//! bit-exact JSON round trips in rational mode, documented exit codes
//! honored. The per-command details live in tests/cli.rs; this target is
//! the one-line summary gate.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_yangbax"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn criterion_10_cli_golden_files_roundtrips_exit_codes() {
    let dir = tempfile::tempdir().unwrap();

    // build: golden, byte-exact in rational mode
    let build = run(&["build", "8v", "a=1", "b=1", "c=1", "x=2", "y=3", "z=5", "v=7"]);
    assert_eq!(build.status.code(), Some(0));
    assert_eq!(stdout(&build), std::fs::read_to_string(golden("build_8v.json")).unwrap());
    let doc = dir.path().join("t8.json");
    std::fs::write(&doc, stdout(&build)).unwrap();

    // verify: pass = 0
    assert_eq!(run(&["verify", "--in", doc.to_str().unwrap()]).status.code(), Some(0));

    // invariants: golden report
    let inv = run(&["invariants", "--in", doc.to_str().unwrap()]);
    assert_eq!(inv.status.code(), Some(0));
    assert_eq!(stdout(&inv), std::fs::read_to_string(golden("invariants_8v.json")).unwrap());

    // transform: identity word reproduces the matrices bit-exactly
    let aa = run(&["transform", "--in", doc.to_str().unwrap(), "--word", "a,a"]);
    assert_eq!(aa.status.code(), Some(0));
    assert_eq!(
        stdout(&aa),
        std::fs::read_to_string(golden("transform_word_aa_8v.json")).unwrap()
    );

    // orbit: golden CSV
    let orb = run(&[
        "orbit", "--in", doc.to_str().unwrap(), "--word", "a", "--max-iter", "8",
    ]);
    assert_eq!(orb.status.code(), Some(0));
    assert_eq!(stdout(&orb), std::fs::read_to_string(golden("orbit_8v_a.csv")).unwrap());

    // convert: q-form round trip
    let params = dir.path().join("xyzv.json");
    std::fs::write(&params, r#"{"x":2,"y":3,"z":5,"v":7}"#).unwrap();
    let q = run(&["convert", "--in", params.to_str().unwrap(), "--from", "xyzv", "--to", "q"]);
    assert_eq!(q.status.code(), Some(0));
    let qfile = dir.path().join("q.json");
    std::fs::write(&qfile, stdout(&q)).unwrap();
    let back = run(&["convert", "--in", qfile.to_str().unwrap(), "--from", "q", "--to", "xyzv"]);
    assert_eq!(back.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&back)).unwrap();
    for (key, expect) in [("x", 2.0), ("y", 3.0), ("z", 5.0), ("v", 7.0)] {
        assert!((v[key].as_f64().unwrap() - expect).abs() < 1e-10);
    }

    // selftest: exit 0
    assert_eq!(run(&["selftest", "--seed", "3", "--samples", "3"]).status.code(), Some(0));

    // documented nonzero exit codes: 1 verify-fail, 2 usage, 3 constraint
    let mut tampered = std::fs::read_to_string(&doc).unwrap();
    tampered = tampered.replacen("\"5/3\"", "\"7/3\"", 1);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, tampered).unwrap();
    assert_eq!(run(&["verify", "--in", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["build", "9v", "x=1"]).status.code(), Some(2));
    assert_eq!(
        run(&["build", "5vff", "p1=2", "p2=3", "q2=5", "q3=7", "g12=1", "g13=1", "g23=1"])
            .status
            .code(),
        Some(3)
    );

    println!(
        "ACCEPTANCE 10 (CLI golden files per command, bit-exact rational round trip, \
         exit codes 0/1/2/3): PASS"
    );
}
