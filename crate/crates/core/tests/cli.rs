use std::process::{Command, Output};

fn eqkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqkl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_outputs() {
    let o = eqkl(&["compute", "thagomizer", "--n", "4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "s[4]: 1 + 3t\ns[3,1]: 2t\ns[2,2]: t + t^2\n");
    assert_eq!(
        stdout(&eqkl(&["compute", "uniform", "--k", "4", "--nonequivariant"])),
        "1 + 2t\n"
    );
    assert_eq!(stdout(&eqkl(&["compute", "thagomizer", "--n", "1"])), "s[1]: 1\n");
    assert_eq!(
        stdout(&eqkl(&["compute", "thagomizer", "--n", "4", "--nonequivariant"])),
        "1 + 11t + 2t^2\n"
    );
}

#[test]
fn json_layout() {
    let o = eqkl(&["compute", "thagomizer", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["degree"], 3);
    assert_eq!(v["basis"], "schur");
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([3]));
    assert_eq!(v["terms"][0]["coeffs"], serde_json::json!(["1", "2"]));
    assert_eq!(v["terms"][1]["partition"], serde_json::json!([2, 1]));
    assert_eq!(v["terms"][1]["coeffs"], serde_json::json!(["0", "1"]));
}

#[test]
fn report_carries_all_three_routes() {
    let o = eqkl(&["compute", "thagomizer", "--n", "5", "--report", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["p_recursion"], v["r_poly"]);
    assert_eq!(v["r_poly"], v["p_closed_form"]);
    assert_eq!(v["equal"]["recursion_closed_form"], true);
    assert!(v.get("first_difference").is_none());
    assert!(v["nonequiv"].is_array());
}

#[test]
fn verify_exit_codes() {
    let o = eqkl(&["verify", "--checks", "recursion", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS recursion"));
    let o = eqkl(&["verify", "--mutate", "kappa", "--checks", "closed_form"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample: n = 3:"));
    assert_eq!(eqkl(&["verify", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(eqkl(&["compute", "uniform", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--format", "json", "--max-n", "8", "--oracle-max-n", "4"];
    let a = eqkl(&args);
    let b = eqkl(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn expand_lists_components() {
    let out = stdout(&eqkl(&["expand", "--n", "4"]));
    assert!(out.starts_with("Schur basis:\ns[4]: 1 + 3t\n"));
    assert!(out.contains("B2:\ns[2,2]: t^2\n"));
    assert!(out.contains("h basis:\n"));
}

#[test]
fn matroid_from_file() {
    let dir = std::env::temp_dir().join(format!("eqkl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k112.json");
    std::fs::write(&path, r#"{"vertices": 4, "edges": [[0,1],[0,2],[1,2],[0,3],[1,3]]}"#).unwrap();
    let o = eqkl(&["matroid", "--graph", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kl"], serde_json::json!(["1", "1"]));
    assert_eq!(v["rank"], 3);

    std::fs::write(&path, r#"{"vertices": 2, "edges": [[0,5]]}"#).unwrap();
    assert_eq!(
        eqkl(&["matroid", "--graph", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
