use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect()
}

fn msgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_msgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).unwrap()
}

fn lexicon() -> String {
    fixture("lexicon.json").display().to_string()
}

#[test]
fn eval_reflexive_sentence_as_dot() {
    let out = msgraph(&[
        "eval",
        "--lexicon",
        &lexicon(),
        "--term",
        "app_s(app_o(wash,self),raven)",
        "--mode",
        "relaxed",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph {\n"));
    assert_eq!(dot.matches(" -> ").count(), 2);
    assert!(dot.contains("[label=\"ARG0\"]") && dot.contains("[label=\"ARG1\"]"));
    assert!(dot.contains("label=\"raven\""));
    assert!(dot.contains("label=\"wash, rt\""));
    assert!(stderr(&out).is_empty());
}

#[test]
fn eval_original_mode_names_condition_two() {
    let out = msgraph(&[
        "eval",
        "--lexicon",
        &lexicon(),
        "--term",
        "app_s(app_o(wash,self),raven)",
        "--mode",
        "original",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("condition 2:"), "{}", stderr(&out));
}

#[test]
fn eval_strict_root() {
    let out = msgraph(&[
        "eval",
        "--lexicon",
        &lexicon(),
        "--term",
        "app_s(wash,self)",
        "--strict-root",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("condition 4-strict"), "{}", stderr(&out));
}

#[test]
fn eval_json_is_an_as_graph_document() {
    let out = msgraph(&["eval", "--lexicon", &lexicon(), "--term", "app_o(wash,self)"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert_eq!(doc["type"], serde_json::json!({"s": {"type": {}}}));
    assert_eq!(doc["graph"]["vertices"].as_array().unwrap().len(), 2);
}

#[test]
fn eval_unknown_lexeme_is_an_input_error() {
    let out = msgraph(&["eval", "--lexicon", &lexicon(), "--term", "app_o(wash,crow)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("crow"));
}

#[test]
fn output_is_byte_reproducible() {
    let args = [
        "eval",
        "--lexicon",
        &lexicon(),
        "--term",
        "app_s(app_o(wash,raven),raven)",
    ];
    let first = msgraph(&args);
    let second = msgraph(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn iso_on_identical_files() {
    let single = fixture("single.json").display().to_string();
    let out = msgraph(&["iso", &single, &single]);
    assert_eq!(out.status.code(), Some(0));
    let mapping: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert_eq!(mapping, serde_json::json!({"ab": "ab"}));
}

#[test]
fn iso_on_different_graphs() {
    let out = msgraph(&[
        "iso",
        &fixture("single.json").display().to_string(),
        &fixture("separate.json").display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
}

#[test]
fn compose_merges_and_classic_refuses() {
    let separate = fixture("separate.json").display().to_string();
    let single = fixture("single.json").display().to_string();
    let out = msgraph(&["compose", &separate, &single]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 1);

    let out = msgraph(&["compose", &separate, &single, "--classic"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not an s-graph"));
}

#[test]
fn dot_subcommand_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("single.dot");
    let out = msgraph(&[
        "dot",
        &fixture("single.json").display().to_string(),
        "--output",
        &target.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let dot = std::fs::read_to_string(&target).unwrap();
    assert_eq!(dot, "digraph {\n  \"ab\" [label=\"A, B\"];\n}\n");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\"vertices\": [], \"edges\": [], \"sources\": {\"a\": \"x\"}}").unwrap();
    let out = msgraph(&["dot", &broken.display().to_string()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("dangling source"), "{}", stderr(&out));

    let missing = dir.path().join("missing.json");
    let out = msgraph(&["dot", &missing.display().to_string()]);
    assert_eq!(out.status.code(), Some(2));

    let out = msgraph(&["compose", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());

    let out = msgraph(&["eval", "--lexicon", &lexicon(), "--term", "app_(wash,self)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = msgraph(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("check-equivalence"));
}

#[test]
fn small_campaign_passes() {
    let out = msgraph(&[
        "check-equivalence",
        "--max-vertices",
        "2",
        "--max-edges",
        "1",
        "--labels",
        "a,rt",
        "--trials",
        "300",
        "--seed",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let reports: serde_json::Value = serde_json::from_str(stdout(&out)).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for report in reports {
        assert_eq!(report["failures"], serde_json::json!([]));
    }
    assert_eq!(reports[1]["parameters"]["seed"], 9);
}

#[test]
fn campaign_budget_is_an_input_error() {
    let out = msgraph(&[
        "check-equivalence",
        "--max-vertices",
        "6",
        "--campaign",
        "composition",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
}

#[test]
fn run_in_process() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = msgraph_cli::run(
        ["msgraph", "dot", &fixture("separate.json").display().to_string()],
        &mut out,
        &mut err,
    );
    assert_eq!(code, msgraph_cli::EXIT_OK);
    assert!(err.is_empty());
    assert_eq!(
        String::from_utf8(out).unwrap(),
        "digraph {\n  \"a\" [label=\"A\"];\n  \"b\" [label=\"B\"];\n}\n"
    );

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = msgraph_cli::run(["msgraph", "--version"], &mut out, &mut err);
    assert_eq!(code, msgraph_cli::EXIT_OK);
    assert!(String::from_utf8(out).unwrap().starts_with("msgraph "));
}
