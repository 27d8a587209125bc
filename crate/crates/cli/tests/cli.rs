use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn braidcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcalc")).args(args).current_dir(data()).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = braidcalc(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn table(v: &Value, title: &str) -> Vec<Vec<u64>> {
    let item = v["results"].as_array().unwrap().iter().find(|i| i["title"] == title).unwrap();
    item["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect())
        .collect()
}

#[test]
fn check_hopf_builtin_passes() {
    let (code, v) = json(&["check-hopf", "builtin:sweedler"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    let checks = v["reports"][0]["checks"].as_array().unwrap();
    assert!(checks.len() >= 12);
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert!(v["conventions"]["basis"].as_str().unwrap().contains("row-major"));
}

#[test]
fn check_hopf_corrupted_fails_with_witness() {
    let out = braidcalc(&["check-hopf", "corrupted.json"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] associativity  (entry"), "{text}");

    let (code, v) = json(&["check-hopf", "corrupted.json"]);
    assert_eq!(code, 1);
    let failing: Vec<&Value> =
        v["reports"][0]["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| c["witness"].is_object()));
}

#[test]
fn exterior_of_quantum_plane() {
    let (code, v) = json(&["exterior", "--braiding", "qplane-q2.json", "--max-degree", "5"]);
    assert_eq!(code, 0);
    let rows = table(&v, "dimensions");
    let dims: Vec<u64> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(dims, vec![1, 2, 1, 0, 0, 0]);
    assert!(rows.iter().all(|r| r[0] == r[1]));
}

#[test]
fn exterior_text_matches_golden_file() {
    let out = braidcalc(&["exterior", "--braiding", "qplane-q2.json", "--max-degree", "5"]);
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/exterior-qplane.txt");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(golden).unwrap());
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["check-hopf", "does-not-exist.json"][..],
        &["check-hopf", "builtin:nonsense"],
        &["exterior", "--braiding", "sweedler.json"],
        &["--minpoly", "1,0,-1", "exterior", "--braiding", "qplane-q2.json"],
        &["frobnicate"],
    ] {
        let out = braidcalc(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn default_field_flags() {
    // the braiding has rational entries, so any field of characteristic zero works
    let out = braidcalc(&["--minpoly", "1,1,1", "exterior", "--braiding", "qplane-q2.json"]);
    assert_eq!(out.status.code(), Some(0));
    let out = braidcalc(&["--field", "cyclotomic:5", "exterior", "--braiding", "qplane-q2.json"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn smash_output_feeds_check_hopf() {
    let dir = std::env::temp_dir().join(format!("braidcalc-smash-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("smash.json");
    let p = path.to_str().unwrap();
    let out = braidcalc(&["smash", "braided-line.object.json", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    let (code, v) = json(&["check-hopf", p]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][1]["value"], "4");
    // the shipped file was produced the same way
    let written = std::fs::read_to_string(&path).unwrap();
    let shipped: Value = serde_json::from_str(&std::fs::read_to_string(data().join("kz2-braided-line.json")).unwrap()).unwrap();
    let mut ours: Value = serde_json::from_str(&written).unwrap();
    ours["name"] = shipped["name"].clone();
    assert_eq!(ours, shipped);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn constructive_verbs_pass_on_shipped_data() {
    for args in [
        &["check-yd", "braided-line.yd.json"][..],
        &["check-bimodule", "sweedler-regular.bimodule.json"],
        &["braid", "braided-line.yd.json"],
        &["bosonize", "z2-triangular.qt.json", "braided-line.inner.json"],
        &["decompose", "braided-line.projection.json"],
        &["exterior", "--braiding", "braided-line.braided.json"],
    ] {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}: {v}");
    }
}

#[test]
fn calculus_on_kz3() {
    let (code, v) = json(&["calculus", "kz3-universal.calculus.json", "--max-degree", "4"]);
    assert_eq!(code, 0);
    let rows = table(&v, "dimensions");
    assert_eq!(rows, vec![vec![3, 1], vec![6, 2], vec![3, 1], vec![0, 0], vec![0, 0]]);
    let d0 = v["results"].as_array().unwrap().iter().find(|i| i["title"] == "d_0").unwrap();
    assert_eq!((d0["rows"].as_u64(), d0["cols"].as_u64()), (Some(6), Some(3)));
}

#[test]
fn module_errors_exit_with_one() {
    // a degree beyond the enumeration guard is reported, not a crash
    let (code, v) = json(&["exterior", "--braiding", "qplane-q2.json", "--max-degree", "9"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["name"], "DegreeTooLarge");
}
