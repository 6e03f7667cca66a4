use std::path::PathBuf;
use std::process::{Command, Output};

use fintop::{enumerate_topologies, SpaceDocument};

fn fintop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fintop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn axiom_value(out: &str, name: &str) -> Option<bool> {
    out.lines()
        .find(|l| l.trim_end().ends_with(&format!("[{name}]")))
        .map(|l| l.contains("= true"))
}

#[test]
fn enumerate_counts() {
    for (n, count) in [(1, "1"), (2, "4"), (3, "29"), (4, "355"), (5, "6942")] {
        let o = fintop(&["enumerate", "-n", &n.to_string(), "--count"]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), count);
    }
}

#[test]
fn enumerate_rejects_large_n() {
    let o = fintop(&["enumerate", "-n", "7", "--count"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds"));
}

#[test]
fn enumerate_stream_round_trips() {
    for n in 1..=4 {
        let o = fintop(&["enumerate", "-n", &n.to_string()]);
        let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
        let spaces: Vec<_> = enumerate_topologies(n).unwrap().collect();
        assert_eq!(lines.len(), spaces.len());
        for (line, space) in lines.iter().zip(&spaces) {
            let doc = SpaceDocument::parse(line).unwrap();
            assert_eq!(&doc.bind().unwrap().space, space);
            // and through the inline form
            let inline = SpaceDocument::parse(&doc.to_inline()).unwrap();
            assert_eq!(&inline.bind().unwrap().space, space);
        }
    }
}

#[test]
fn analyze_tau2_table() {
    let o = fintop(&["analyze", &fixture("tau2.json")]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("points: a, b, c, d"));
    assert_eq!(axiom_value(&out, "c0"), Some(true));
    assert_eq!(axiom_value(&out, "c1"), Some(false));
    assert_eq!(axiom_value(&out, "semi-c1"), Some(true));
    assert_eq!(axiom_value(&out, "sc*-c0"), Some(true));
}

#[test]
fn analyze_indiscrete_inline() {
    let o = fintop(&["analyze", "--inline", "a,b | -; *"]);
    assert!(o.status.success());
    assert_eq!(axiom_value(&stdout(&o), "c0"), Some(false));
}

#[test]
fn analyze_sigma1_semi_family() {
    let o = fintop(&["analyze", &fixture("sigma1.json"), "--class", "semi"]);
    let out = stdout(&o);
    assert!(out.contains("semi-open (13):"), "{out}");
}

#[test]
fn analyze_closures_and_kernels() {
    let o = fintop(&[
        "analyze",
        "tau-example",
        "--class",
        "h*",
        "--class",
        "alpha",
        "--closure",
        "c",
        "--kernel",
        "a",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("h*-closure of {c} = {c}"), "{out}");
    assert!(out.contains("alpha-closure of {c} = {c}"), "{out}");
    assert!(out.contains("h*-kernel of a ="), "{out}");
}

#[test]
fn analyze_json_output() {
    let o = fintop(&["analyze", "sigma", "--class", "semi", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["axioms"]["c0"], serde_json::Value::Bool(true));
    assert_eq!(v["families"][0]["family"], "semi-open");
}

#[test]
fn parse_errors_report_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"points\": [\"a\"],\n \"opens\": [[] [\"a\"]]}").unwrap();
    let o = fintop(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column"), "{}", stderr(&o));

    let o = fintop(&["analyze", "--inline", "a,b | -; q; *"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 10"), "{}", stderr(&o));
}

#[test]
fn validation_errors_are_verbatim() {
    let o = fintop(&["analyze", "--inline", "a,b,c | -; a; b; *"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("not closed under union: {a} ∪ {b}"), "{err}");
    assert_eq!(err.matches("not closed under union").count(), 1);

    let o = fintop(&["analyze", "--inline", "a,b | a; *"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_outputs() {
    let o = fintop(&["search", "--holds", "c1", "--fails", "c0", "-n", "4"]);
    assert_eq!(stdout(&o).trim(), "none up to n_max = 4");
    let o = fintop(&["search", "--holds", "t1", "--fails", "t0", "-n", "3"]);
    assert_eq!(stdout(&o).trim(), "none up to n_max = 3");
    let o = fintop(&[
        "search", "--holds", "sc*-c0", "--fails", "semi-c0", "-n", "4",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.trim() != "none up to n_max = 4");
    let first = out.lines().next().unwrap();
    SpaceDocument::parse(first).unwrap().bind().unwrap();
    let o = fintop(&["search", "--holds", "bogus", "--fails", "c0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bogus"));
}

#[test]
fn claims_single_row() {
    let o = fintop(&["claims", "--id", "EX-4.1.1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("EX-")).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].contains("confirmed"));
}

#[test]
fn claims_json_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = fintop(&["claims", "--json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let file: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        v["verdicts"].as_array().unwrap().len(),
        file["verdicts"].as_array().unwrap().len()
    );
    assert!(v["summary"]["total"].as_u64().unwrap() >= 70);
}

#[test]
fn claims_exit_codes() {
    // refutations alone do not fail the command
    let o = fintop(&["claims", "--id", "THM-2.5-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("refuted"));
    // but they do under --expect-paper
    let o = fintop(&["claims", "--id", "THM-2.5-3", "--expect-paper"]);
    assert_eq!(o.status.code(), Some(1));
    let o = fintop(&["claims", "--id", "EX-4.1.1", "--expect-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let o = fintop(&["claims", "--id", "NOPE"]);
    assert_eq!(o.status.code(), Some(2));
    let o = fintop(&["claims", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn claims_diff_strict() {
    let o = fintop(&["claims", "--kind", "implication", "--diff-strict"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("H*g"));
}

#[test]
fn classes_lists_every_family() {
    let o = fintop(&["classes", &fixture("sigma.json")]);
    let out = stdout(&o);
    assert!(out.contains("α*-set"));
    assert!(out.contains("C-set"));
    assert!(out.contains("H*g-closed"));
    let o = fintop(&["classes", &fixture("sigma.json"), "--class", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}
