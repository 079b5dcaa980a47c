use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mobiuslab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--output", &p]);
    assert!(run(&all).status.success());
    p
}

#[test]
fn mobius_value_and_schema() {
    let dir = tempfile::tempdir().unwrap();
    let b3 = gen(dir.path(), "b3.json", &["boolean", "--n", "3"]);
    let out = run(&["mu", "--poset", &b3, "--from", "", "--to", "123"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["mu"], -1);
    assert_eq!(v["schema"], 1);
    let csv = run(&["zeta", "--poset", &b3, "--format", "csv"]);
    assert_eq!(String::from_utf8(csv.stdout).unwrap().lines().count(), 9);
}

#[test]
fn tree_determinant() {
    let out = run(&["tree", "--det", "--n", "6", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["det"], -80);
    assert_eq!(v["closed_form"], -80);
    assert_eq!(v["pass"], true);
    assert_eq!(
        run(&["tree", "--n", "9", "--seed", "4"]).status.code(),
        Some(0)
    );
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"elements\": [\"a\",\n  oops]}").unwrap();
    let out = run(&["mu", "--poset", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(
        run(&["mu", "--poset", "/no/such/file"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let edges = dir.path().join("g.txt");
    fs::write(&edges, "0 1\n1 x\n").unwrap();
    let out = run(&["chromatic", "--graph", edges.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("line 2, column 3"));
}

#[test]
fn lattice_only_commands_reject_non_lattices() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = gen(dir.path(), "b2.json", &["boolean", "--n", "2"]);
    let f = dir.path().join("f.json");
    // strength 0, support of size 2 at heights 0 and 1: the bound 2 is met
    fs::write(&f, r#"{"": 1, "1": -1}"#).unwrap();
    let out = run(&[
        "nulldesign",
        "--poset",
        &b2,
        "--function",
        f.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["strength"], 0);

    let bowtie = dir.path().join("bowtie.json");
    fs::write(
        &bowtie,
        r#"{"elements": ["0","a","b","c","d","1"],
            "covers": [["0","a"],["0","b"],["a","c"],["a","d"],["b","c"],["b","d"],["c","1"],["d","1"]]}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["lattice-check", "--poset", bowtie.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let out = run(&["euler", "--poset", bowtie.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn lattice_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = gen(dir.path(), "p4.json", &["partition", "--n", "4"]);
    let v = json(&run(&["lattice-check", "--poset", &p4]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["properties"]["geometric"], true);
    assert_eq!(v["properties"]["modular"], false);
    assert_eq!(json(&run(&["weisner", "--poset", &p4]))["pass"], true);
    let c = json(&run(&["cutset", "--poset", &p4]));
    assert_eq!(c["sum"], -6);
    assert_eq!(
        json(&run(&["charpoly", "--poset", &p4]))["polynomial"],
        "x^3 - 6x^2 + 11x - 6"
    );
    let w = json(&run(&["whitney", "--poset", &p4]));
    assert_eq!(w["nbc"], serde_json::json!([1, 6, 11, 6]));
    let n = json(&run(&["nulldesign", "--poset", &p4, "--partition-claim"]));
    assert!(n["claim_fails_at"].as_u64().unwrap() > 0);
    let ch = json(&run(&[
        "chains", "--poset", &p4, "--from", "1|2|3|4", "--to", "1234",
    ]));
    assert_eq!(ch["hall_sum"], ch["mu"]);
}

#[test]
fn inversion_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = gen(dir.path(), "d.json", &["divisor", "--n", "12"]);
    let f = dir.path().join("f.json");
    fs::write(&f, r#"{"1": 1, "2": 2, "3": 3, "4": 4, "6": 6, "12": 12}"#).unwrap();
    let inv = json(&run(&[
        "invert",
        "--poset",
        &d,
        "--function",
        f.to_str().unwrap(),
        "--direction",
        "down",
    ]));
    // Σ_{d | n} φ(d) = n
    let phi = serde_json::json!({"1": 1, "2": 1, "3": 2, "4": 2, "6": 2, "12": 4});
    assert_eq!(inv["f"], phi);
    let g = dir.path().join("g.json");
    fs::write(&g, phi.to_string()).unwrap();
    let back = json(&run(&[
        "invert",
        "--poset",
        &d,
        "--function",
        g.to_str().unwrap(),
        "--direction",
        "down",
        "--sum",
    ]));
    assert_eq!(back["f"]["12"], 12);
}

#[test]
fn graphs_and_contraction_lattices() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4e.txt");
    fs::write(&g, "# 4\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let v = json(&run(&["chromatic", "--graph", g.to_str().unwrap()]));
    assert_eq!(v["polynomial"], "x^4 - 5x^3 + 8x^2 - 4x");
    assert_eq!(v["values"][3], serde_json::json!([3, 6]));
    let l = gen(
        dir.path(),
        "l.json",
        &["contraction", "--graph", g.to_str().unwrap()],
    );
    assert_eq!(
        json(&run(&["charpoly", "--poset", &l]))["polynomial"],
        "x^3 - 5x^2 + 8x - 4"
    );
}

#[test]
fn output_is_byte_identical() {
    let a = run(&["gen", "random-poset", "--n", "8", "--seed", "5"]);
    let b = run(&["gen", "random-poset", "--n", "8", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["verify-all", "--only", "4,10,12"]);
    let b = run(&["verify-all", "--only", "4,10,12"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        String::from_utf8(a.stderr)
            .unwrap()
            .lines()
            .filter(|l| l.contains("PASS"))
            .count(),
        3
    );
}

#[test]
fn size_guard_and_override() {
    let out = run(&["gen", "partition", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_mobiuslab"))
        .args(["gen", "boolean", "--n", "3"])
        .env("MOBIUSLAB_MAX_ELEMENTS", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_small() {
    let out = run(&["verify-all", "--suite", "small"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 20);
    assert_eq!(v["pass"], true);
}
