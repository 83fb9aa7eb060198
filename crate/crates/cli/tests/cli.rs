//! Drives the binary through every verb.

use operad_forge::rota_baxter::{regular_module, samples};
use operad_forge::{catalog, json, Configuration};
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_operad-forge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn assert_pass(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(code(&o), 0, "{args:?}\n{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, contents: &str) -> String {
    let p = scratch(name);
    std::fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn show() {
    let out = assert_pass(&["show"]);
    assert!(out.lines().any(|l| l == "PartDend3"));
    let out = assert_pass(&["show", "--presentation", "builtin:Lie"]);
    assert!(out.starts_with("Lie (symmetric)\n"));
    let out = assert_pass(&["show", "--config", "capped:2", "--leaf-max", "3"]);
    assert!(out.contains("C_3: {1} {2} {3} {1,2} {1,3} {2,3}"), "{out}");
    let json_out = assert_pass(&["show", "--presentation", "builtin:As", "--format", "json"]);
    let back = json::presentation_from_str(&json_out).unwrap();
    assert_eq!(back.relations(), catalog::assoc().unwrap().relations());
}

#[test]
fn split_renders_dendriform() {
    let out = assert_pass(&["split", "--presentation", "builtin:As", "--config", "arity"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("(x1 ≻ x2) ≺ x3 = x1 ≻ (x2 ≺ x3)"));
    let tex = assert_pass(&["split", "--presentation", "builtin:As", "--config", "arity", "--format", "latex"]);
    assert!(tex.starts_with("\\documentclass{article}"));
    assert!(tex.trim_end().ends_with("\\end{document}"));
    assert_eq!(tex.matches("&=").count(), 3);
    assert!(tex.contains(r"\left(x_{1} \succ x_{2}\right) \prec x_{3} &= x_{1} \succ \left(x_{2} \prec x_{3}\right)"));
    let trivial = assert_pass(&["split", "--presentation", "builtin:As", "--config", "trivial"]);
    assert_eq!(trivial, "(x1 · x2) · x3 = x1 · (x2 · x3)\n");
    let part = assert_pass(&["split", "--presentation", "builtin:PAs3", "--config", "arity"]);
    assert_eq!(part.lines().count(), 5);
    assert!(part.lines().all(|l| l.ends_with("= 0")));
    let custom = assert_pass(&[
        "split",
        "--presentation",
        "builtin:As",
        "--config",
        "power",
        "--glyphs",
        "mu[1,2]=*",
    ]);
    assert!(custom.contains("x1 * x2"));
    // two binary generators: no default glyphs
    let fallback = assert_pass(&["split", "--presentation", "builtin:PostLie", "--config", "arity"]);
    assert!(fallback.contains("(br,e_{1})(x"), "{fallback}");
}

#[test]
fn verify_suites() {
    let out = assert_pass(&[
        "verify",
        "splitting-sum",
        "--presentation",
        "builtin:3Lie",
        "--config",
        "arity",
        "--leaf-max",
        "6",
    ]);
    assert!(out.contains("0 failed"));
    assert_pass(&["verify", "canonical", "--presentation", "builtin:3Lie", "--config", "arity"]);
    assert_pass(&["verify", "canonical", "--presentation", "builtin:As", "--config", "power", "--variant", "top"]);
    assert_pass(&["verify", "closure", "--config", "capped:2"]);
    assert_pass(&["verify", "restriction", "--presentation", "builtin:As", "--config", "arity", "--larger", "power"]);
    assert_pass(&[
        "verify",
        "morphism",
        "--presentation",
        "builtin:GenLie3",
        "--target",
        "builtin:3Lie",
        "--map",
        "br=br",
        "--config",
        "arity",
    ]);
    let known = assert_pass(&["verify", "known-splitting"]);
    assert!(known.contains("Sp(As, power) = TriDend"));
    assert_pass(&["verify", "known-splitting", "--presentation", "builtin:PAs3", "--config", "arity"]);
    assert_pass(&["verify", "ainf", "--n", "4"]);
    assert_pass(&["verify", "diagram"]);
    let counts = assert_pass(&["verify", "tree-counts"]);
    assert!(counts.contains("enumerated 903, recursion 903"));
    assert_pass(&["verify", "normal-form", "--presentation", "builtin:3PreLie", "--leaf-max", "4"]);
    assert_pass(&["verify", "presentation", "--presentation", "builtin:PostLie"]);
}

#[test]
fn span_comparison_with_files() {
    let dend = write("dend.json", &json::to_pretty(&json::presentation_to_json(&catalog::dend().unwrap())));
    let split = run(&["split", "--presentation", "builtin:As", "--config", "arity", "--format", "json"]);
    let split = stdout(&split);
    // rename the split generators to Dend's names
    let renamed = write("split.json", &split.replace("mu[1]", "prec").replace("mu[2]", "succ"));
    let out = assert_pass(&["verify", "span", "--presentation", &renamed, "--other", &dend]);
    assert!(out.contains("relation Equal"));
    let tri = write("tridend.json", &json::to_pretty(&json::presentation_to_json(&catalog::tridend().unwrap())));
    let o = run(&["verify", "span", "--presentation", &renamed, "--other", &tri]);
    assert_eq!(code(&o), 1);
}

#[test]
fn closure_counterexample_fails() {
    let path = write("bad_config.json", r#"{"kind":"explicit","n_max":3,"sets":{"3":[[2]]}}"#);
    let o = run(&["verify", "closure", "--config", &path]);
    let out = stdout(&o);
    assert_eq!(code(&o), 1, "{out}");
    assert!(out.contains("FAIL closure"), "{out}");
    assert!(out.contains("witness: tree #2(1,#2(2,3)) with J = {2}"), "{out}");
}

/// `extra` followed by the upper triangular algebra, As and the arity configuration.
fn with<'a>(extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = extra.to_vec();
    v.extend(["--algebra", "builtin:upper-triangular", "--presentation", "builtin:As", "--config", "arity"]);
    v
}

#[test]
fn rota_baxter_pipeline() {
    let args = with(&["rb-check", "--operator", "builtin:upper-triangular-rb"]);
    assert_pass(&args);
    let bad = write("bad_op.json", r#"{"matrix":[["1","0","0"],["0","0","0"],["0","0","0"]]}"#);
    let args = with(&["rb-check", "--operator", &bad]);
    let o = run(&args);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert!(stdout(&o).contains("witness"));

    let args = with(&["rb-search", "--entries", "-1,0,1", "--format", "json"]);
    let found: serde_json::Value = serde_json::from_str(&assert_pass(&args)).unwrap();
    assert!(found["count"].as_u64().unwrap() >= 1);

    let split_path = scratch("dend_algebra.json");
    let split = split_path.to_str().unwrap();
    assert_pass(&with(&["rb-induce", "--operator", "builtin:upper-triangular-rb", "--format", "json", "--out", split]));
    assert_pass(&["verify", "algebra", "--algebra", split, "--presentation", "builtin:As", "--config", "arity"]);
    let o = run(&["verify", "algebra", "--algebra", "builtin:upper-triangular", "--presentation", "builtin:Lie"]);
    assert_eq!(code(&o), 2, "missing bracket is an input error");
    let out = assert_pass(&["roundtrip", "--algebra", split, "--presentation", "builtin:As", "--config", "arity"]);
    assert!(out.contains("round trip"));
    assert_pass(&[
        "roundtrip",
        "--algebra",
        "builtin:upper-triangular",
        "--operator",
        "builtin:upper-triangular-rb",
        "--presentation",
        "builtin:As",
        "--config",
        "arity",
    ]);

    let alg = samples::upper_triangular();
    let p = catalog::assoc().unwrap();
    let m = regular_module(&alg, &p, &Configuration::arity()).unwrap();
    let module = write("regular.json", &json::to_pretty(&json::module_to_json(&m)));
    let out = assert_pass(&[
        "module-check",
        "--algebra",
        "builtin:upper-triangular",
        "--presentation",
        "builtin:As",
        "--config",
        "arity",
        "--module",
        &module,
        "--operator",
        "builtin:upper-triangular-rb",
    ]);
    assert!(out.contains("lifted"));
}

#[test]
fn three_lie_operator() {
    let o = run(&[
        "rb-search",
        "--algebra",
        "builtin:complement-bracket",
        "--presentation",
        "builtin:3Lie",
        "--config",
        "arity",
        "--positions",
        "0,1;1,0;2,3;3,2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["operators"].is_array());
}

#[test]
fn exit_codes_and_formats() {
    assert_eq!(code(&run(&["split", "--presentation", "builtin:As"])), 2);
    assert_eq!(code(&run(&["split", "--presentation", "builtin:Nope", "--config", "arity"])), 2);
    assert_eq!(code(&run(&["split", "--presentation", "As", "--config", "arity"])), 2);
    assert_eq!(code(&run(&["verify", "ainf", "--n", "40"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
    let o = run(&["verify", "canonical", "--presentation", "builtin:As", "--config", "trivial", "--variant", "sum-arity", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"].is_array());
    let tex = assert_pass(&["verify", "ainf", "--n", "3", "--format", "latex"]);
    assert!(tex.contains("\\begin{itemize}"));
    assert!(tex.is_ascii());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["split", "--presentation", "builtin:3Lie", "--config", "arity", "--format", "json"][..],
        &["verify", "known-splitting", "--presentation", "builtin:Lie"][..],
        &["rb-search", "--algebra", "builtin:upper-triangular", "--presentation", "builtin:As", "--config", "power", "--weight", "1"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
