use std::process::{Command, Output};

fn chief(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chief"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("structured output is JSON")
}

#[test]
fn analyze_s5_against_jcs_u() {
    let o = chief(&["--format", "structured", "analyze", "S(5)", "Jcs(U, all)"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["member"], true);
    let series = v["chief_series"].as_array().unwrap();
    assert_eq!(series.len(), 2);
    assert_eq!(series[0]["order"], 60);
    assert_eq!(series[0]["simple_type"], "A5");
    assert_eq!(series[0]["abelian"], false);
    assert_eq!(series[1]["order"], 2);
    assert_eq!(series[1]["central"], true);
    assert_eq!(v["t2"]["b1"], true);
    assert_eq!(v["t2"]["b2"], true);
    assert_eq!(v["t2"]["b3"], true);
}

#[test]
fn analyze_a4_against_u_names_the_order_four_factor() {
    let o = chief(&["--format", "structured", "analyze", "A(4)", "U"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["member"], false);
    assert_eq!(v["witness"]["order"], 4);
    assert!(v["t2"].is_null());
    let text = stdout(&chief(&["analyze", "A(4)", "U"]));
    assert!(text.contains("member: false"));
    assert!(text.contains("witness: factor 1 of order 4"));
}

#[test]
fn analyze_wreath_against_ca() {
    let o = chief(&["--format", "structured", "analyze", "wr(A5,C(2))", "ca(E(S|A5))"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["member"], false);
    assert_eq!(v["order"], 7200);
    assert!(v["int_order"].is_null());
}

#[test]
fn structured_output_is_deterministic() {
    let args = ["--format", "structured", "analyze", "SL25", "Jcs(U, all)"];
    let a = chief(&args);
    let b = chief(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["hypercenter_order"], 120);
    assert_eq!(v["residual_order"], 1);
}

#[test]
fn parse_errors_exit_with_two() {
    let o = chief(&["analyze", "S(4", "U"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 3"));
    assert_eq!(chief(&["analyze", "S4", "Jcs(U,"]).status.code(), Some(2));
    assert_eq!(chief(&["analyze", "S4", "Q"]).status.code(), Some(2));
    assert_eq!(chief(&["--cap", "0", "tables"]).status.code(), Some(2));
    assert_eq!(chief(&["--format", "xml", "tables"]).status.code(), Some(2));
}

#[test]
fn budget_errors_exit_with_three() {
    assert_eq!(chief(&["--cap", "10", "analyze", "S5", "U"]).status.code(), Some(3));
    // no shortcut exists for Jcs over a class that misses some nilpotent groups
    let o = chief(&["--sd-budget", "1", "analyze", "S3", "Jcs(Ab, all)"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no centrality shortcut"));
}

#[test]
fn unknown_check_lists_valid_ids() {
    let o = chief(&["verify", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("nosuch"));
    assert!(err.contains("baer") && err.contains("thm2_equiv"));
}

#[test]
fn verify_baer_passes() {
    let o = chief(&["verify", "baer"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.starts_with("baer ")).unwrap();
    assert!(line.contains("pass"));
    assert!(text.contains("skipped [wr(A5,C2)]"));
}

#[test]
fn verify_with_a_manifest() {
    let dir = std::env::temp_dir().join(format!("chief-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "# small corpus\ns4 := S4\nsl := SL25\nd := D(8)\na := A5 x C2\n").unwrap();
    let o = chief(&["--format", "structured", "verify", "robinson", "member_iff_hypercenter", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["member_iff_hypercenter", "robinson"]);
    assert_eq!(v[0]["evaluated"], 4);

    std::fs::write(&path, "broken line\n").unwrap();
    let o = chief(&["verify", "baer", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = chief(&["verify", "baer", "--corpus", dir.join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn vacuous_corpus_fails_the_check() {
    let dir = std::env::temp_dir().join(format!("chief-cli-v-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.txt");
    std::fs::write(&path, "c := C2\n").unwrap();
    let o = chief(&["verify", "p9", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("non-vacuous"));
}

#[test]
fn disabled_check_runs_only_by_name() {
    let o = chief(&["--format", "structured", "verify", "thm3_converse"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)[0]["status"], "disabled");
}

#[test]
fn verify_all_passes_on_the_default_corpus() {
    let o = chief(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(!text.contains("FAIL"));
    assert!(!text.contains("thm3_converse"));
}

#[test]
fn tables_rows() {
    let text = stdout(&chief(&["tables"]));
    let row = |name: &str| -> Vec<String> {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .unwrap()
            .split_whitespace()
            .map(str::to_string)
            .collect()
    };
    assert_eq!(row("A5")[..4], ["A5", "60", "2", "true"]);
    assert_eq!(row("A6")[..4], ["A6", "360", "4", "true"]);
    assert_eq!(row("M11")[..4], ["M11", "7920", "1", "true"]);
    let v = json(&chief(&["--format", "structured", "tables"]));
    assert!(v.as_array().unwrap().iter().any(|r| r["name"] == "PSL(2,7)" && r["order"] == 168));
}
