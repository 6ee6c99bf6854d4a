use std::process::{Command, Output};

use serde_json::Value;

fn cubewalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubewalk")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cubewalk(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn walks() {
    assert_eq!(json(&["walks", "-n", "3", "--from", "000", "--to", "110", "-k", "4"])["result"]["count"], "20");
    assert_eq!(json(&["walks", "-n", "3", "--from", "000", "--to", "000", "-k", "0"])["result"]["count"], "1");
    let v = json(&["walks", "-n", "3", "--from", "000", "--to", "111", "-k", "5", "--method", "all"]);
    for route in ["brute", "spectral", "closed"] {
        assert_eq!(v["result"]["routes"][route], "60");
    }
    assert_eq!(v["verification"]["all_match"], true);
}

#[test]
fn dims() {
    for (algebra, want) in [("z2n", "21"), ("sn", "14"), ("g21n", "4")] {
        let v = json(&["dim", "-k", "2", "-n", "3", "--algebra", algebra, "--verify"]);
        assert_eq!(v["result"]["dimension"], want);
        assert_eq!(v["verification"]["all_match"], true);
    }
    let v = json(&["dim", "-k", "2", "-n", "3"]);
    assert_eq!((&v["result"]["spectral"], &v["result"]["diagrammatic"]), (&Value::from("21"), &Value::from("21")));
}

#[test]
fn series() {
    let v = json(&["series", "-n", "3", "-a", "000", "--kind", "poincare", "-K", "8", "--verify"]);
    assert_eq!(strings(&v["result"]["coefficients"]), ["1", "0", "3", "0", "21", "0", "183", "0", "1641"]);
    assert_eq!(v["verification"]["all_match"], true);
    assert_eq!(strings(&v["result"]["raw"]["den"]), ["1", "0", "-12", "0", "30", "0", "-28", "0", "9"]);
    let v = json(&["series", "-n", "3", "-a", "111", "--kind", "egf", "-K", "7", "--verify"]);
    assert_eq!(strings(&v["result"]["coefficients"]), ["0", "0", "0", "6", "0", "60", "0", "546"]);
    let v = json(&["series", "-n", "1", "-a", "0", "--kind", "poincare", "-K", "4"]);
    assert_eq!(strings(&v["result"]["coefficients"]), ["1", "0", "1", "0", "1"]);
    assert_eq!(v["result"]["reduced"]["den_factors"], serde_json::json!([[1, 1], [-1, 1]]));
}

#[test]
fn diagrams() {
    assert_eq!(json(&["diagrams", "-k", "2", "-n", "3", "--even-only"])["result"]["count"], 4);
    let v = json(&["diagrams", "-k", "2", "-n", "3", "--even-only", "--expand", "--verify"]);
    let counts: Vec<u64> =
        v["result"]["diagrams"].as_array().unwrap().iter().map(|d| d["summand_count"].as_u64().unwrap()).collect();
    assert_eq!(counts, [3, 6, 6, 6]);
    assert_eq!(v["result"]["total_summands"], 21);
    assert_eq!(v["verification"]["all_match"], true);
    let v = json(&["diagrams", "-k", "1", "-n", "1"]);
    assert_eq!(v["result"]["count"], 2);
    assert_eq!(v["result"]["diagrams"][0]["blocks"], serde_json::json!([[1, 2]]));
    assert_eq!(v["result"]["diagrams"][1]["blocks"], serde_json::json!([[1], [2]]));
    let table = stdout(&["diagrams", "-k", "2", "-n", "3", "--even-only", "--expand"]);
    assert!(table.contains("T_d = E_11^11 + E_22^22 + E_33^33  (3 summands)"));
}

#[test]
fn bratteli() {
    let v = json(&["bratteli", "-n", "3", "--k-max", "6", "--verify"]);
    let sums: Vec<&str> = v["result"]["levels"].as_array().unwrap().iter().map(|l| l["sum_of_squares"].as_str().unwrap()).collect();
    assert_eq!(sums, ["1", "3", "21", "183", "1641", "14763", "132861"]);
    let level4: Vec<&str> = v["result"]["levels"][4]["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["multiplicity"].as_str().unwrap())
        .collect();
    assert_eq!(level4, ["21", "20", "20", "20"]);
    let table = stdout(&["bratteli", "-n", "1", "--k-max", "3"]);
    assert_eq!(table, "k=0: (0)_1 | 1\nk=1: (1)_1 | 1\nk=2: (0)_1 | 1\nk=3: (1)_1 | 1\n");
}

#[test]
fn selftest_modes() {
    let out = cubewalk(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    let out = cubewalk(&["selftest", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = cubewalk(&["selftest", "--corrupt-fixture"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[FAIL] 1."));
}

#[test]
fn deterministic_and_idempotent_json() {
    let cases: [&[&str]; 5] = [
        &["bratteli", "-n", "3", "--k-max", "6", "--verify"],
        &["series", "-n", "2", "-a", "10", "--verify"],
        &["diagrams", "-k", "2", "-n", "2", "--expand"],
        &["walks", "-n", "4", "--from", "0101", "--to", "1100", "-k", "6", "--method", "all"],
        &["selftest"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let first = stdout(&full);
        assert_eq!(first, stdout(&full), "{args:?} not deterministic");
        let parsed: Value = serde_json::from_str(&first).unwrap();
        let once = serde_json::to_string_pretty(&parsed).unwrap();
        let twice = serde_json::to_string_pretty(&serde_json::from_str::<Value>(&once).unwrap()).unwrap();
        assert_eq!(once, twice);
        assert_eq!(once + "\n", first);
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cubewalk(&["walks", "-n", "3", "--from", "0x0", "--to", "000", "-k", "1"]).status.code(), Some(2));
    assert_eq!(cubewalk(&["walks", "-n", "3", "--to", "000", "-k", "1"]).status.code(), Some(2));
    assert_eq!(cubewalk(&["frobnicate"]).status.code(), Some(2));
    let out = cubewalk(&["bratteli", "-n", "13"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-n"));
    assert_eq!(cubewalk(&["--max-n", "13", "bratteli", "-n", "13", "--k-max", "1"]).status.code(), Some(0));
    assert_eq!(cubewalk(&["--budget", "10", "diagrams", "-k", "3", "-n", "3"]).status.code(), Some(3));
    assert_eq!(cubewalk(&["series", "-n", "13", "-a", "0000000000000"]).status.code(), Some(3));
    assert_eq!(cubewalk(&["series", "-n", "13", "-a", "0000000000000", "--kind", "egf"]).status.code(), Some(0));
}
