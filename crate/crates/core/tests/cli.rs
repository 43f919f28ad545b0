use std::fs;
use std::process::{Command, Output};

fn o2n(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_o2n")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dim_prints_weyl_and_count() {
    let o = o2n(&["dim", "--n", "2", "--lambda", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 1\n");
    let o = o2n(&["dim", "--n", "2", "--lambda", "0,-1"]);
    assert_eq!(stdout(&o), "4 4\n");
    let o = o2n(&["dim", "--n", "3", "--lambda", "-1/2,-1/2,-1/2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["patterns"], 4);
    assert_eq!(v["weyl_dim"], "4");
}

#[test]
fn dim_rejects_non_dominant_weights() {
    let o = o2n(&["dim", "--n", "2", "--lambda", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("-|λ_1| ≥ λ_2"));
    let o = o2n(&["dim", "--n", "2", "--lambda", "1/2,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity"));
}

#[test]
fn branch_tables() {
    let o = o2n(&["branch", "--n", "2", "--lambda", "0,0", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"(0)\":1}\n");
    let o = o2n(&["branch", "--n", "2", "--lambda", "0,-1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let first = out.lines().next().unwrap();
    let v: serde_json::Value = serde_json::from_str(first).unwrap();
    assert_eq!(v, serde_json::json!({"(0)": 2, "(1)": 1, "(-1)": 1}));
    assert!(out.contains("= 4 = 4 ="));
}

#[test]
fn patterns_listing() {
    let o = o2n(&["patterns", "--n", "2", "--lambda", "0,-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[2], serde_json::json!({"rows_twice": [[0, -2], [-2], [2]]}));
}

#[test]
fn build_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "3")] {
        let o = o2n(&["build", "--n", "3", "--lambda", "0,-1,-1", "--out", path.to_str().unwrap(), "--jobs", jobs]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn build_archive_contents() {
    let o = o2n(&["build", "--n", "2", "--lambda", "0,0"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["format_version"], 1);
    let gens = v["generators"].as_object().unwrap();
    assert_eq!(gens.len(), 6);
    for m in gens.values() {
        assert_eq!(m, &serde_json::json!({"dim": 1, "entries": []}));
    }
    let o = o2n(&["build", "--n", "2", "--lambda", "0,-1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["generators"].as_object().unwrap().values().all(|m| m["dim"] == 4));
}

#[test]
fn verify_from_params_and_archive() {
    let o = o2n(&["verify", "--n", "2", "--lambda", "0,0", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 9);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let p = path.to_str().unwrap();
    o2n(&["build", "--n", "2", "--lambda", "0,-1", "--out", p]);
    let o = o2n(&["verify", "--archive", p, "--suite", "brackets,weights", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "brackets: pass\nweights: pass\n");

    // flip one stored entry of F(1,-2)
    let text = fs::read_to_string(&path).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entries = v["generators"]["F(1,-2)"]["entries"].as_array_mut().unwrap();
    entries[0][2] = serde_json::json!("7");
    fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let o = o2n(&["verify", "--archive", p, "--suite", "brackets"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports[0]["pass"], false);
    assert!(!reports[0]["counterexamples"].as_array().unwrap().is_empty());
}

#[test]
fn archive_version_is_checked() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let p = path.to_str().unwrap();
    o2n(&["build", "--n", "2", "--lambda", "0,0", "--out", p]);
    let text = fs::read_to_string(&path).unwrap().replace("\"format_version\":1", "\"format_version\":99");
    fs::write(&path, text).unwrap();
    let o = o2n(&["verify", "--archive", p]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("version 99"));
}

#[test]
fn matrix_command() {
    let o = o2n(&["matrix", "--n", "2", "--lambda", "0,-1", "--gen", "F(1,-2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 0 0 0\n0 0 0 0\n0 1 0 0\n1 0 0 0\n");
    // non-canonical label through F_{-j,-i} = -F_ij
    let o = o2n(&["matrix", "--n", "2", "--lambda", "0,-1", "--gen", "F(2,-1)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, serde_json::json!({"dim": 4, "entries": [[0, 3, "-1"], [1, 2, "-1"]]}));
    let o = o2n(&["matrix", "--n", "2", "--lambda", "0,-1", "--gen", "F(3,1)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = o2n(&["matrix", "--n", "2", "--lambda", "0,-1", "--gen", "G12"]);
    assert_eq!(o.status.code(), Some(2));
}
