//! End-to-end runs of the `hodge-micro` binary: reports, exit codes and
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use monodromic::{block_tuple, synthesize, Block, BlockKind, MonodromicTuple, NormalForm};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-micro"))
        .args(args)
        .env_remove("HODGE_MICRO_SEED")
        .output()
        .expect("binary runs")
}

fn run_with_seed(args: &[&str], seed: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-micro"))
        .args(args)
        .env("HODGE_MICRO_SEED", seed)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn statuses(report: &Value) -> Vec<(String, String)> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["name"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
        .collect()
}

fn all_pass(report: &Value) -> bool {
    statuses(report).iter().all(|(_, s)| s == "pass")
}

fn write_input(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn tuple_file(name: &str, t: &MonodromicTuple) -> PathBuf {
    write_input(name, &serde_json::to_string(t).unwrap())
}

fn output_blocks(report: &Value, key: &str) -> NormalForm {
    let blocks: Vec<Block> = serde_json::from_value(report["output"][key]["blocks"].clone()).unwrap();
    NormalForm::new(blocks)
}

#[test]
fn homtables_pass_and_report_sorted_checks() {
    let out = run(&["verify-homtables", "--smax", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(all_pass(&r));
    let names: Vec<String> = statuses(&r).into_iter().map(|(n, _)| n).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    // 15 A→A pairs, 21 A→P pairs, 6 Sky→A.
    assert_eq!(names.len(), 42);
}

#[test]
fn homtables_trivial_subset() {
    let out = run(&["verify-homtables", "--smax", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(statuses(&report(&out)).len(), 2);
}

#[test]
fn corrupted_catalog_lists_failures() {
    let out = run(&["verify-homtables", "--smax", "3", "--corrupt-catalog"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert!(statuses(&r).iter().any(|(_, s)| s == "fail"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("check failed"));
}

#[test]
fn malformed_flags_exit_2() {
    assert_eq!(run(&["verify-homtables", "--smax", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify-homtables"]).status.code(), Some(2));
    assert_eq!(run(&["endo", "--n", "0", "--variant", "core"]).status.code(), Some(2));
    assert_eq!(run(&["endo", "--n", "2", "--variant", "both"]).status.code(), Some(2));
    assert_eq!(run(&["koszul", "--algebra", "bgamma", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["koszul", "--algebra", "lgamma", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bar", "--pn", "0", "--degree-cutoff", "4"]).status.code(), Some(2));
    assert_eq!(run(&["fourier", "--roundtrip"]).status.code(), Some(2));
    assert_eq!(run(&["fourier"]).status.code(), Some(2));
    assert_eq!(run_with_seed(&["fourier", "--roundtrip", "--dims", "4", "--trials", "1"], "x").status.code(), Some(2));
}

#[test]
fn fourier_of_the_skyscraper() {
    let path = tuple_file("sky.json", &block_tuple(BlockKind::Sky, 1).unwrap());
    let out = run(&["fourier", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(all_pass(&r));
    assert_eq!(output_blocks(&r, "fourier").to_string(), "{P_1[1](1/2)}");
}

#[test]
fn fourier_input_errors() {
    let bad = write_input("nonnilpotent.json", r#"{"psi":1,"phi":1,"can":[[1]],"var":[[1]]}"#);
    assert_eq!(run(&["fourier", "--input", bad.to_str().unwrap()]).status.code(), Some(3));
    let garbled = write_input("garbled.json", r#"{"psi":1,"phi":"#);
    assert_eq!(run(&["fourier", "--input", garbled.to_str().unwrap()]).status.code(), Some(2));
    let shape = write_input("shape.json", r#"{"psi":2,"phi":1,"can":[[1]],"var":[[0]]}"#);
    assert_eq!(run(&["fourier", "--input", shape.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["fourier", "--input", "/nonexistent/tuple.json"]).status.code(), Some(2));
}

#[test]
fn fourier_roundtrip_is_deterministic_per_seed() {
    let args = ["fourier", "--roundtrip", "--dims", "12", "--trials", "100"];
    let strip = |mut v: Value| {
        v["elapsed_ms"] = Value::from(0);
        v
    };
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    let ra = report(&a);
    assert!(all_pass(&ra));
    assert_eq!(ra["parameters"]["seed"], 0);
    let b = run_with_seed(&args, "0");
    assert_eq!(strip(ra.clone()), strip(report(&b)));
    let c = run_with_seed(&args, "17");
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(report(&c)["parameters"]["seed"], 17);
}

#[test]
fn endo_core_one_component() {
    let out = run(&["endo", "--n", "1", "--variant", "core"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(all_pass(&r));
    assert_eq!(r["output"]["n"], 1);
    assert_eq!(r["output"]["variant"], "core");
    let table: Vec<(i64, i64, u64)> = r["output"]["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["a"].as_i64().unwrap(), e["b"].as_i64().unwrap(), e["dim"].as_u64().unwrap()))
        .collect();
    assert_eq!(table, (0..=6).map(|m| (m, 2 * m, 1)).collect::<Vec<_>>());
}

#[test]
fn endo_relcore_four_components() {
    let out = run(&["endo", "--n", "4", "--variant", "relcore"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(all_pass(&r));
    let check = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "pair totals are min(i, j)").unwrap();
    let totals: Vec<u64> = serde_json::from_value(check["actual"].clone()).unwrap();
    assert_eq!(totals, vec![1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 3, 3, 1, 2, 3, 4]);
}

#[test]
fn endo_markdown_format() {
    let out = run(&["endo", "--n", "2", "--variant", "core", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# endo"));
    assert!(text.contains("| a \\ b |"));
    assert!(text.contains("| ginzburg cohomology | pass |"));
}

#[test]
fn koszul_suites() {
    for args in [
        ["koszul", "--algebra", "lgamma", "--n", "5", "--cutoff", "10"],
        ["koszul", "--algebra", "agamma", "--n", "3", "--cutoff", "12"],
        ["koszul", "--algebra", "mgamma", "--n", "2", "--cutoff", "12"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(all_pass(&report(&out)), "{args:?}");
    }
    let out = run(&["koszul", "--algebra", "lgamma", "--n", "3"]);
    let names: Vec<String> = statuses(&report(&out)).into_iter().map(|(n, _)| n).collect();
    assert_eq!(
        names,
        ["classical koszul", "closed form dims", "ext equals dual dims", "resolution of k is exact"]
    );
}

#[test]
fn bar_tables() {
    for (pn, cutoff) in [("1", "8"), ("2", "9")] {
        let out = run(&["bar", "--pn", pn, "--degree-cutoff", cutoff]);
        assert_eq!(out.status.code(), Some(0));
        assert!(all_pass(&report(&out)));
        assert!(out.stderr.is_empty());
    }
    let out = run(&["bar", "--pn", "2", "--degree-cutoff", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let r = report(&out);
    assert_eq!(r["output"]["table"].as_array().unwrap().len(), 2);
}

#[test]
fn decompose_examples() {
    let cases = [
        ("b3.json", NormalForm::new(vec![Block::perverse(BlockKind::B, 3).unwrap()])),
        ("zero.json", NormalForm::empty()),
        (
            "a2_sky.json",
            NormalForm::new(vec![Block::perverse(BlockKind::A, 2).unwrap(), Block::sky()]),
        ),
    ];
    for (name, nf) in cases {
        let path = tuple_file(name, &synthesize(&nf).unwrap());
        let out = run(&["decompose", "--input", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let r = report(&out);
        assert!(all_pass(&r), "{name}");
        assert_eq!(output_blocks(&r, "normal_form"), nf, "{name}");
    }
}

#[test]
fn reports_are_byte_identical_apart_from_timing() {
    let args = ["endo", "--n", "3", "--variant", "relcore"];
    let strip = |out: Output| {
        let text = String::from_utf8(out.stdout).unwrap();
        text.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(strip(run(&args)), strip(run(&args)));
}
