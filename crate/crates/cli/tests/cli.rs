use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn tricolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricolor")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn arcs_with_verification() {
    let o = tricolor(&["solve", "arcs", "--n", "5", "--k", "2", "--seed", "1", "--verify"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json_out(&o);
    assert_eq!(v["counts"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["verification"]["member"], Value::Bool(true));
    assert!(v["arcs"].as_array().unwrap().len() <= 2);
}

#[test]
fn diagonal_fixture_is_a_precondition_failure() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = dir.path().join("diagonal_fixture.json");
    assert_eq!(code(&tricolor(&["gen", "--kind", "lattice-diagonal-counterexample", "--n", "3", "--out", path(&fixture)])), 0);
    let o = tricolor(&["solve", "lline", "--in", path(&fixture)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("monochromatic"));
}

#[test]
fn render_highlights_a_face() {
    let dir = tempfile::tempdir().unwrap();
    let arr = dir.path().join("arrangement.json");
    let svg = dir.path().join("a.svg");
    assert_eq!(code(&tricolor(&["gen", "--kind", "simple-lines-3c", "--n", "6", "--seed", "4", "--out", path(&arr)])), 0);
    let before = std::fs::read_to_string(&arr).unwrap();
    assert_eq!(code(&tricolor(&["render", "--in", path(&arr), "--out", path(&svg)])), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<polygon"));
    assert!(text.contains("<line"));
    assert_eq!(std::fs::read_to_string(&arr).unwrap(), before);
}

#[test]
fn saved_answers_verify_again() {
    let dir = tempfile::tempdir().unwrap();
    for (solver, kind, n, k) in [
        ("cell", "simple-lines-3c", "8", None),
        ("segment", "simple-lines-3c", "5", None),
        ("halving", "balanced-lines-3c", "1", None),
        ("wedge111", "points-3c", "7", None),
        ("wedge", "balanced-points-3c", "2", None),
        ("arcs", "circle-points-3c", "4", Some("3")),
        ("lline", "lattice-red-hull", "4", None),
        ("parity", "colored-sphere", "3", None),
    ] {
        let inst = dir.path().join(format!("{solver}.json"));
        let ans = dir.path().join(format!("{solver}.answer.json"));
        assert_eq!(code(&tricolor(&["gen", "--kind", kind, "--n", n, "--seed", "9", "--out", path(&inst)])), 0);
        let mut args = vec!["solve", solver, "--in", path(&inst), "--verify", "--out", path(&ans)];
        if let Some(k) = k {
            args.extend(["--k", k]);
        }
        let o = tricolor(&args);
        assert_eq!(code(&o), 0, "{solver}: {}", String::from_utf8_lossy(&o.stderr));
        let mut args = vec!["verify", "--solver", solver, "--in", path(&inst), "--answer", path(&ans)];
        if let Some(k) = k {
            args.extend(["--k", k]);
        }
        let o = tricolor(&args);
        assert_eq!(code(&o), 0, "{solver}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(json_out(&o)["member"], Value::Bool(true));
    }
}

#[test]
fn tampered_answer_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("c.json");
    let ans = dir.path().join("a.json");
    tricolor(&["gen", "--kind", "circle-points-3c", "--n", "4", "--seed", "2", "--out", path(&inst)]);
    tricolor(&["solve", "arcs", "--in", path(&inst), "--k", "1", "--out", path(&ans)]);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&ans).unwrap()).unwrap();
    v["arcs"] = serde_json::json!([["0", "1/2"]]);
    std::fs::write(&ans, v.to_string()).unwrap();
    let o = tricolor(&["verify", "--solver", "arcs", "--in", path(&inst), "--answer", path(&ans), "--k", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn gen_is_reproducible() {
    let a = tricolor(&["gen", "--kind", "lattice-red-hull", "--n", "6", "--seed", "3"]);
    let b = tricolor(&["gen", "--kind", "lattice-red-hull", "--n", "6", "--seed", "3"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_usage_exits_2() {
    assert_eq!(code(&tricolor(&["solve", "nope"])), 2);
    assert_eq!(code(&tricolor(&["solve", "wedge", "--frobnicate"])), 2);
    assert_eq!(code(&tricolor(&["gen", "--kind", "no-such-kind"])), 2);
    assert_eq!(code(&tricolor(&["solve", "lline", "--n", "3"])), 2);
    assert_eq!(code(&tricolor(&["solve", "arcs", "--n", "3"])), 2);
}

#[test]
fn svg_format() {
    let o = tricolor(&["solve", "lline", "--n", "5", "--seed", "1", "--format", "svg"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("<svg"));
}

#[test]
fn wedge_prints_its_dual_segment() {
    let o = tricolor(&["solve", "wedge", "--n", "2", "--seed", "5"]);
    assert_eq!(code(&o), 0);
    let v = json_out(&o);
    assert!(v["wedge"].is_object());
    assert!(v["dual_segment"].is_object());
}
