use std::path::Path;
use std::process::{Command, Output};

use pfiliform_cli::AlgebraFile;

fn pf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pfiliform"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build_to(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let path_s = path.to_str().unwrap().to_string();
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path_s]);
    let o = pf(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path_s
}

#[test]
fn build_writes_labels_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = build_to(dir.path(), "g11.json", &["g11", "--dim", "7"]);
    let file = AlgebraFile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(file.labels.len(), 7);
    let g = file.to_algebra().unwrap();
    assert_eq!(g, pfiliform::catalog::build_family(11, 7, None).unwrap());

    let o = pf(&["catalog", "build", "11", "--dim", "7"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&o));
}

#[test]
fn alpha_lands_in_the_phi2_brackets_only() {
    let o = pf(&["build", "g24", "--dim", "7", "--alpha", "3/2"]);
    assert_eq!(o.status.code(), Some(0));
    let file = AlgebraFile::parse(&stdout(&o)).unwrap();
    let mut carriers = Vec::new();
    for b in &file.brackets {
        for t in &b.terms {
            if t.c.ends_with("3/2") {
                carriers.push((b.i, b.j, t.k));
            }
        }
    }
    // [X3,X2] = αX5 and [X4,X2] = αX6, stored with i < j.
    assert_eq!(carriers, [(2, 3, 5), (2, 4, 6)]);
}

#[test]
fn inadmissible_builds_exit_two() {
    assert_eq!(pf(&["build", "g1", "--dim", "9"]).status.code(), Some(2));
    assert_eq!(pf(&["build", "g24", "--dim", "7"]).status.code(), Some(2));
    assert_eq!(pf(&["build", "g46", "--dim", "8"]).status.code(), Some(2));
    assert_eq!(pf(&["build", "gx", "--dim", "8"]).status.code(), Some(2));
    assert_eq!(
        pf(&["build", "g24", "--dim", "7", "--alpha", "1.5"]).status.code(),
        Some(2)
    );
}

#[test]
fn analyze_reports_invariants() {
    let dir = tempfile::tempdir().unwrap();
    let g0 = build_to(dir.path(), "g0.json", &["g0", "--dim", "7"]);
    let o = pf(&["analyze", &g0, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["commutativity_index"], 1);
    assert_eq!(v["characteristically_nilpotent"], false);
    assert_eq!(v["lcs_dims"], serde_json::json!([7, 4, 3, 2, 1, 0]));
    assert_eq!(v["torus_dim"], 3);

    let g11 = build_to(dir.path(), "g11.json", &["g11", "--dim", "7"]);
    let o = pf(&["analyze", &g11]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("characteristically nilpotent true"), "{text}");
    assert!(text.contains("(5,1,1)"), "{text}");
}

#[test]
fn analyze_rejects_bad_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad_rational = dir.path().join("r.json");
    std::fs::write(
        &bad_rational,
        r#"{"dim":3,"brackets":[{"i":1,"j":2,"terms":[{"k":3,"c":"1.5"}]}]}"#,
    )
    .unwrap();
    assert_eq!(pf(&["analyze", bad_rational.to_str().unwrap()]).status.code(), Some(2));

    // [X1,X2] = X3, [X1,X3] = X2, [X2,X3] = X2 is not a Lie bracket.
    let not_lie = dir.path().join("j.json");
    std::fs::write(
        &not_lie,
        r#"{"dim":3,"brackets":[
            {"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},
            {"i":1,"j":3,"terms":[{"k":2,"c":"1"}]},
            {"i":2,"j":3,"terms":[{"k":2,"c":"1"}]}]}"#,
    )
    .unwrap();
    let o = pf(&["analyze", not_lie.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(X1,X2,X3)"));

    assert_eq!(pf(&["analyze", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn e6_command() {
    let o = pf(&["e6", "1,4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "TwoAbelian");
    assert_eq!(v["heights"], serde_json::json!([2, 2]));
    assert_eq!(v["sum"], "(1,2,2,3,2,1)");

    assert!(stdout(&pf(&["e6", "1"])).contains("OneAbelian"));
    assert_eq!(pf(&["e6", "7"]).status.code(), Some(2));
    assert_eq!(pf(&["e6", ""]).status.code(), Some(2));
}

#[test]
fn verify_exit_status_follows_the_report() {
    let o = pf(&["verify", "--suite", "cocycles", "--max-dim", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("suite cocycles (seed 0, max-dim 8)"));

    let o = pf(&["verify", "--suite", "e6", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let two_abelian = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().starts_with("c8.two-abelian."))
        .count();
    assert_eq!(two_abelian, 16);
    let failed = v["summary"]["failed"].as_u64().unwrap();
    assert_eq!(o.status.code(), Some(if failed == 0 { 0 } else { 1 }));
}

#[test]
fn catalog_list_has_every_family() {
    let o = pf(&["catalog", "list", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 45);
    assert_eq!(v[10]["listed_cn_dims"], serde_json::json!([7]));
}
