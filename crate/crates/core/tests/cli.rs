//! The command line: reports, exit codes, determinism and file formats.

use std::path::Path;
use std::process::Command;
use usf_lab::catalog;
use usf_lab::cli::run;
use usf_lab::format::{parse_json, parse_text, to_json, to_text};
use usf_lab::hypergraph::isomorphic_with_boundary;

fn usf(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("usf-lab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn path_three_is_faithful_at_sixteen_only() {
    let (code, out, _) = usf(&["classify", "path:3", "--dim", "16"]);
    assert_eq!(code, 0);
    assert!(out.contains("d=16: faithfully ubiquitous: yes"), "{out}");
    let (_, out, _) = usf(&["classify", "path:3", "--dim", "17"]);
    assert!(out.contains("d=17: faithfully ubiquitous: no"), "{out}");
}

#[test]
fn five_set_edge_in_low_dimensions() {
    let (code, out, _) = usf(&["classify", "edge:5", "--dims", "5..6", "--mode", "hypergraph", "--format", "csv"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "d,mode,faithful,ubiquitous,minmax,coarsening,quotient");
    assert!(rows[1].starts_with("5,hypergraph,true,"), "{out}");
    assert!(rows[2].starts_with("6,hypergraph,false,"), "{out}");
}

#[test]
fn profiles_mark_the_critical_dimensions() {
    for (name, last) in [("tree-family:13", 13), ("three-pairs", 7), ("edge:2", 8)] {
        let mode = if name == "three-pairs" { "hypergraph" } else { "graph" };
        let (code, out, _) = usf(&["profile", name, "--dims", "5..16", "--mode", mode, "--format", "json"]);
        assert_eq!(code, 0, "{name}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["critical"]["faithful"], last, "{name}");
        let faithful: Vec<bool> = v["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["faithfully_ubiquitous"].as_bool().unwrap())
            .collect();
        assert!(faithful.windows(2).all(|w| w[0] >= w[1]), "{name}: not monotone");
    }
    let (_, text, _) = usf(&["profile", "tree-family:13", "--dims", "12..14"]);
    assert!(text.contains("critical: faithful through d=13"), "{text}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.hg", "boundary: a\nedge e a b c\n");
    let dangling = write(dir.path(), "dangling.hg", "boundary: a\nedge e: a zz\n");
    let objective = write(
        dir.path(),
        "big.um",
        "points: a b c d e f g h i j k\nterm 1: a,b\n",
    );
    assert_eq!(usf(&["classify", "path:2", "--dim", "9"]).0, 0);
    assert_eq!(usf(&["classify", "path:2", "--dim", "3"]).0, 2);
    assert_eq!(usf(&["classify", "path:2", "--dims", "9..70"]).0, 2);
    assert_eq!(usf(&["classify", "path:2", "--bogus"]).0, 2);
    assert_eq!(usf(&["classify", "/no/such/file", "--dim", "9"]).0, 2);
    let (code, _, err) = usf(&["classify", &bad, "--dim", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(usf(&["classify", &dangling, "--dim", "9"]).0, 3);
    let (code, _, err) = usf(&["classify", "edge:3", "--dim", "6"]);
    assert_eq!(code, 3);
    assert!(err.contains("--mode hypergraph"), "{err}");
    assert_eq!(usf(&["ultrametric", &objective]).0, 3);
    assert_eq!(usf(&["simulate", "--dim", "2", "--side", "1", "--stat", "forest"]).0, 2);
}

#[test]
fn oversized_boxes_exit_four() {
    let status = Command::new(env!("CARGO_BIN_EXE_usf-lab"))
        .args(["simulate", "--d", "5", "--side", "64", "--stat", "component-count"])
        .env_remove("USF_LAB_MEM_BUDGET_MB")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(4));
    let small = Command::new(env!("CARGO_BIN_EXE_usf-lab"))
        .args(["simulate", "--d", "3", "--side", "100", "--stat", "component-count", "--samples", "1"])
        .env("USF_LAB_MEM_BUDGET_MB", "1")
        .output()
        .unwrap();
    assert_eq!(small.status.code(), Some(4));
}

#[test]
fn simulations_repeat_byte_for_byte() {
    let args = ["simulate", "--d", "2", "--side", "4", "--samples", "1000", "--stat", "component-count", "--seed", "7"];
    let first = Command::new(env!("CARGO_BIN_EXE_usf-lab")).args(args).output().unwrap();
    let second = Command::new(env!("CARGO_BIN_EXE_usf-lab")).args(args).output().unwrap();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let (_, one_thread, _) = usf(&[&args[..], &["--threads", "1"]].concat());
    let (_, three_threads, _) = usf(&[&args[..], &["--threads", "3"]].concat());
    assert_eq!(one_thread.as_bytes(), &first.stdout[..]);
    assert_eq!(one_thread, three_threads);
    assert!(one_thread.contains("# seed=7"));
    assert!(one_thread.contains("seed,d,L,statistic,value"));
}

#[test]
fn pair_connect_table_decreases() {
    let (code, out, _) = usf(&[
        "simulate", "--d", "5", "--side", "12", "--stat", "pair-connect", "--pairs", "auto", "--samples", "3000",
        "--seed", "3",
    ]);
    assert_eq!(code, 0);
    let ps: Vec<f64> = out
        .lines()
        .filter(|l| !l.starts_with('#'))
        .filter_map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            (cols.len() == 5 && cols[3].starts_with("pair-connect@") && !cols[3].contains(".ci")).then(|| cols[4].parse().unwrap())
        })
        .collect();
    assert!(ps.len() >= 3, "{out}");
    assert!(ps.windows(2).all(|w| w[1] < w[0]), "{ps:?}");
}

#[test]
fn forest_dump_parses_back() {
    let (code, out, _) = usf(&["simulate", "--d", "2", "--side", "5", "--stat", "forest", "--seed", "4"]);
    assert_eq!(code, 0);
    let bx = usf_lab::sim::LatticeBox::new(2, 5).unwrap();
    let f = usf_lab::sim::LatticeForest::parse_edge_list(bx, &out).unwrap();
    f.validate().unwrap();
    let body: String = out.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(f.edge_list(), body);
}

#[test]
fn json_and_text_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    for (name, h) in catalog::builtin_examples() {
        let text = to_text(&h);
        let json = to_json(&h);
        assert!(isomorphic_with_boundary(&parse_text(&text).unwrap(), &h), "{name}");
        assert!(isomorphic_with_boundary(&parse_json(&json).unwrap(), &h), "{name}");
        let mode = if h.max_edge_degree() > 2 { "hypergraph" } else { "graph" };
        let t = write(dir.path(), "h.hg", &text);
        let j = write(dir.path(), "h.json", &json);
        let strip = |out: String| {
            let mut v: serde_json::Value = serde_json::from_str(&out).unwrap();
            v["input"] = serde_json::Value::Null;
            v
        };
        let (_, a, _) = usf(&["classify", &t, "--dims", "9..10", "--mode", mode, "--format", "json"]);
        let (_, b, _) = usf(&["classify", &j, "--dims", "9..10", "--mode", mode, "--format", "json"]);
        let (_, c, _) = usf(&["classify", &name, "--dims", "9..10", "--mode", mode, "--format", "json"]);
        assert_eq!(strip(a.clone()), strip(b), "{name}");
        assert_eq!(strip(a), strip(c), "{name}");
    }
}

#[test]
fn ultrametric_reports() {
    let dir = tempfile::tempdir().unwrap();
    let neg = write(dir.path(), "neg.um", "points: a b c\nterm -2: a,b\n");
    let (code, out, _) = usf(&["ultrametric", &neg, "--samples", "100"]);
    assert_eq!(code, 0);
    assert!(out.contains("maximum: 0"), "{out}");
    assert!(out.contains("partition: {a,b} {c}"), "{out}");

    let spec = write(dir.path(), "spec.um", "points: a b c d\nterm 3: a,b c,d\nterm -1: a,c\nterm 2: b,d\n");
    let (code, out, _) = usf(&["ultrametric", &spec, "--format", "json", "--samples", "500", "--seed", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let f = usf_lab::ultrametric::Objective::parse(&std::fs::read_to_string(&spec).unwrap()).unwrap();
    let lib = usf_lab::ultrametric::maximize_over_polytope(&f).unwrap();
    assert_eq!(v["maximum"], lib.value.to_string());
    assert_eq!(v["audit"]["samples"], 500);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let (code, out, _) = usf(&["classify", "star:3", "--dim", "10", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("d=10"));
}

#[test]
fn witness_counts_run() {
    let (code, out, _) = usf(&[
        "simulate", "--d", "3", "--side", "6", "--stat", "witness-count", "--input", "edge:2", "--r", "3",
        "--samples", "5", "--seed", "1",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().any(|l| l.contains(",witness-count,")), "{out}");
}
