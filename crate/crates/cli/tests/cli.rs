use std::process::{Command, Output};

use serde_json::Value;

fn shoda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shoda"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = shoda(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn dims(v: &Value) -> Vec<u64> {
    v["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["dim"].as_u64().unwrap())
        .collect()
}

#[test]
fn essp_of_cyclic_four() {
    let v = json(&["essp", "cyclic:4", "--format", "json"]);
    assert_eq!(dims(&v), vec![1, 1, 2]);
    assert_eq!(v["complete"], true);
    assert_eq!(v["verdict"], "normally_monomial");
    assert_eq!(v["pairs"][1]["k"], serde_json::json!(["(0 2)(1 3)"]));
    assert_eq!(v["pairs"][2]["k"], serde_json::json!([]));
}

#[test]
fn symmetric_four_is_not_normally_monomial() {
    let out = shoda(&["is-normally-monomial", "symmetric:4"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "false (sum_dim 6 of 24)\n");
    let v = json(&["is-normally-monomial", "symmetric:4", "--format", "json"]);
    assert_eq!(v["normally_monomial"], false);
    assert_eq!(v["sum_dim"], 6);
}

#[test]
fn ssp_completes_symmetric_four() {
    let v = json(&["ssp", "symmetric:4", "--format", "json"]);
    assert_eq!(dims(&v), vec![1, 1, 4, 9, 9]);
    assert_eq!(v["verdict"], "strongly_monomial_only");
    assert_eq!(v["pairs"][3]["kind"], "strong");
    assert_eq!(v["counters"]["lattice_computed"], true);
}

#[test]
fn pcis_of_dihedral_eight() {
    let v = json(&["pcis", "dihedral:8", "--method", "essp", "--format", "json"]);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 5);
    assert_eq!(v["sum_is_one"], true);
    let first = &v["idempotents"][0]["terms"];
    assert_eq!(first.as_array().unwrap().len(), 8);
    assert_eq!(first[0], serde_json::json!(["()", "1", "8"]));
}

#[test]
fn json_output_is_deterministic() {
    for cmd in ["essp", "ssp", "pcis"] {
        let a = shoda(&[cmd, "dicyclic:12", "--format", "json"]);
        let b = shoda(&[cmd, "dicyclic:12", "--format", "json"]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn group_files_are_accepted() {
    let dir = std::env::temp_dir().join(format!("shoda-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("d10.txt");
    std::fs::write(&good, "degree: 5\n(0 1 2 3 4)\n(1 4)(2 3)\n").unwrap();
    let v = json(&["essp", good.to_str().unwrap(), "--format", "json"]);
    assert_eq!(v["group"]["order"], 10);
    assert_eq!(dims(&v), vec![1, 1, 8]);

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "degree: 4\n(0 1)\n(0 7)\n").unwrap();
    let out = shoda(&["essp", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 4"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(shoda(&["essp", "cyclic:1"]).status.code(), Some(0));
    assert_eq!(shoda(&["essp", "tetrahedral:4"]).status.code(), Some(2));
    assert_eq!(shoda(&["essp", "cyclic:x"]).status.code(), Some(2));
    assert_eq!(shoda(&["essp", "cyclic:4", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(shoda(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(shoda(&["essp", "symmetric:8", "--order-cap", "1000"]).status.code(), Some(1));
    assert_eq!(shoda(&["ssp", "symmetric:4", "--lattice-cap", "5"]).status.code(), Some(1));
}

#[test]
fn verify_reports_pass() {
    let v = json(&["verify", "dicyclic:8", "--method", "essp", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["dim_sum"], 8);
    assert_eq!(v["count_consistent"], true);
    let v = json(&["verify", "sl2:3", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["complete"], false);
}

#[test]
fn bench_ablations_keep_idempotents() {
    let out = shoda(&[
        "bench", "symmetric:4", "--no-lemma1", "--no-lemma3", "--direct-ssp", "--format", "csv",
        "--repeat", "1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r[col("same_idempotents")] == "true"));
    assert_eq!(rows[2][col("strategy")], "direct");
    assert_eq!(rows[2][col("lattice_computed")], "true");
}

#[test]
fn bench_skips_lattice_for_normally_monomial_groups() {
    let v = json(&["bench", "dihedral:16", "--direct-ssp", "--format", "json", "--repeat", "1"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["lattice_computed"], false);
    assert_eq!(rows[1]["lattice_computed"], true);
    assert_eq!(rows[1]["same_idempotents"], true);
}
