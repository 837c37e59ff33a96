use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn surfgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfgen")).args(args).output().expect("spawn surfgen")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn construct(dir: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["construct", "--json", "--out", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    surfgen(&args)
}

const REPORT_KEYS: [&str; 13] = [
    "betti", "char", "checks", "effective_seed", "ideals", "input", "passed", "recipe", "schema", "scheme", "seed", "smooth",
    "wall_time_ms",
];

fn assert_report_shape(v: &Value) {
    let obj = v.as_object().expect("object");
    for k in REPORT_KEYS {
        assert!(obj.contains_key(k), "missing {k}");
    }
    assert_eq!(obj.len(), REPORT_KEYS.len());
    assert_eq!(v["schema"], 1);
}

#[test]
fn construct_prop2_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = construct(dir.path(), &["prop2_1", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_report_shape(&v);
    assert_eq!(v["scheme"]["degree"], 12);
    assert_eq!(v["scheme"]["sectional_genus"], 13);
    assert_eq!(v["scheme"]["chi_O"], 3);
    assert_eq!(v["passed"], true);
    assert!(dir.path().join("prop2_1.ideal").exists());
    let stored: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("prop2_1.json")).unwrap()).unwrap();
    assert_eq!(stored["scheme"], v["scheme"]);
    assert_eq!(stored["betti"], v["betti"]);

    let text = serde_json::to_string(&v).unwrap();
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, v);

    let again = surfgen(&["invariants", "--json", dir.path().join("prop2_1.ideal").to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    let inv = json(&again);
    assert_report_shape(&inv);
    assert_eq!(inv["scheme"], v["scheme"]);
    assert_eq!(inv["betti"], v["betti"]);
}

#[test]
fn unknown_recipe_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = construct(dir.path(), &["nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn linkage_other_seed_and_stage_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = construct(dir.path(), &["prop3_1_linkage", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["scheme"]["degree"], 14);
    assert_eq!(v["scheme"]["sectional_genus"], 19);
    for f in ["prop3_1_linkage.ideal", "prop3_1_linkage.Y.ideal", "prop3_1_linkage.Z.ideal"] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let z = json(&surfgen(&["invariants", "--json", dir.path().join("prop3_1_linkage.Z.ideal").to_str().unwrap()]));
    assert_eq!(z["scheme"]["degree"], 11);
    assert_eq!(z["scheme"]["sectional_genus"], 10);
}

#[test]
fn parallel_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let out = construct(dir.path(), &["lemma3_2", "hm_module", "segre_cubic", "--jobs", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let runs = v.as_array().expect("array of reports");
    let names: Vec<&str> = runs.iter().map(|r| r["recipe"].as_str().unwrap()).collect();
    assert_eq!(names, ["lemma3_2", "hm_module", "segre_cubic"]);
    assert!(runs.iter().all(|r| r["passed"] == true));
}

#[test]
fn plane_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("plane.ideal");
    fs::write(&p, "ring 5 char 31991\n# a plane\nx0\nx1\n").unwrap();
    let v = json(&surfgen(&["invariants", "--json", p.to_str().unwrap()]));
    assert_eq!(v["scheme"]["dim"], 2);
    assert_eq!(v["scheme"]["degree"], 1);
    assert_eq!(v["scheme"]["sectional_genus"], 0);
    assert_eq!(v["scheme"]["acm"], true);
}

#[test]
fn malformed_polynomial_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.ideal");
    fs::write(&p, "ring 5 char 31991\nx0\nx1+*x2\n").unwrap();
    let out = surfgen(&["invariants", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 4"), "{err}");
}

#[test]
fn numeric_formulas() {
    let v = json(&surfgen(&["numeric", "lebarz", "--d", "14", "--pi", "19", "--chi", "2", "--json"]));
    assert_eq!(v["n6"], 22);
    let v = json(&surfgen(&["numeric", "double-point", "--d", "14", "--pi", "19", "--chi", "2", "--json"]));
    assert_eq!(v["k2"], -15);
    let v = json(&surfgen(&["numeric", "liaison", "--d", "18", "--pi", "39", "--m", "5", "--n", "5", "--json"]));
    assert_eq!((v["d"].as_i64(), v["pi"].as_i64()), (Some(7), Some(6)));
    let v = json(&surfgen(&["numeric", "liaison", "--d", "11", "--pi", "10", "--chi", "3", "--m", "5", "--n", "5", "--json"]));
    assert_eq!((v["d"].as_i64(), v["pi"].as_i64(), v["chi"].as_i64()), (Some(14), Some(19), Some(2)));
    let v = json(&surfgen(&["numeric", "adjunction", "--h2", "14", "--hk", "22", "--k2", "-15", "--chi", "2", "--a", "0", "--json"]));
    assert_eq!(v["h2"], 43);
    assert_eq!(v["pi"], 26);
    let v = json(&surfgen(&["numeric", "bott", "--p", "1", "--t", "2", "--json"]));
    assert_eq!(v["h0"], 10);
}

#[test]
fn numeric_errors() {
    assert_eq!(surfgen(&["numeric", "wat"]).status.code(), Some(2));
    assert_ne!(surfgen(&["numeric", "lebarz", "--d", "14"]).status.code(), Some(0));
}
