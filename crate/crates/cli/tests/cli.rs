use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperlambda"));
    cmd.env_remove("HYPERLAMBDA_JOBS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let path = dir.path().join(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

fn load(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(Path::new(path)).unwrap()).unwrap()
}

#[test]
fn gen_families() {
    let dir = TempDir::new().unwrap();
    let star = load(&gen(&dir, "s.json", &["star", "--r", "7", "--c", "4", "--m", "3"]));
    assert_eq!(star["vertices"].as_array().unwrap().len(), 13);
    let complete = load(&gen(&dir, "c.json", &["complete", "--n", "4", "--r", "3"]));
    assert_eq!(complete["edges"].as_array().unwrap().len(), 4);
    let product = load(&gen(&dir, "p.json", &["product", "--left", "star:3,1,2", "--right", "complete:3"]));
    assert_eq!(product["vertices"].as_array().unwrap().len(), 15);
    let o = run(&["gen", "star", "--r", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_round_trip_and_diagnostics() {
    let dir = TempDir::new().unwrap();
    let p = gen(&dir, "h.json", &["hyperpath", "--r", "3", "--m", "3"]);
    let canon = dir.path().join("canon.json");
    let o = run(&["validate", &p, "--canonical", canon.to_str().unwrap()]);
    assert!(o.status.success());
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["summary"]["diameter"], 3);
    assert_eq!(report["summary"]["linear"], true);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), std::fs::read_to_string(&canon).unwrap());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"vertices":["a","b","c"],"edges":[["a","b"],["a","b","c"],["a"]]}"#).unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("contained in edge"), "{err}");
    assert!(err.contains("needs at least 2"), "{err}");
}

#[test]
fn lambda_methods() {
    let dir = TempDir::new().unwrap();
    let star = gen(&dir, "k.json", &["star", "--r", "3", "--c", "1", "--m", "2"]);
    let witness = dir.path().join("w.json");
    let o = run(&["lambda", &star, "--h", "2", "--k", "1", "--method", "exact", "--witness", witness.to_str().unwrap()]);
    assert!(o.status.success());
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["lambda"], 5);
    assert_eq!(report["certified"], true);
    let colours = load(witness.to_str().unwrap());
    assert_eq!(colours.as_object().unwrap().len(), 5);

    let scheme = run(&["lambda", &star, "--method", "scheme:star"]);
    assert!(scheme.status.success());
    let report: Value = serde_json::from_str(&stdout(&scheme)).unwrap();
    assert_eq!(report["upper"], 5);

    let k4 = gen(&dir, "k4.json", &["complete", "--n", "4"]);
    let o = run(&["lambda", &k4, "--method", "scheme:star"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().contains("scheme does not apply"));
    let o = run(&["lambda", &k4, "--h", "1", "--k", "0"]);
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["lambda"], 3);
    let o = run(&["lambda", &k4, "--h", "1", "--k", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn lambda_budget_exhaustion() {
    let dir = TempDir::new().unwrap();
    let cube = gen(&dir, "q4.json", &["cube", "--d", "4"]);
    let o = run(&["lambda", &cube, "--node-limit", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["certified"], false);
    assert_eq!(report["lambda"], Value::Null);
    assert!(report["lower"].as_u64().unwrap() < report["upper"].as_u64().unwrap());
}

#[test]
fn bounds_rows() {
    let dir = TempDir::new().unwrap();
    let pet = gen(&dir, "pet.json", &["petersen"]);
    let o = run(&["bounds", &pet]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "name,lhs,rhs,relation,holds,parameters");
    assert_eq!(lines.len(), 6);
    let names: Vec<&str> = lines[1..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["cheeger_lower", "cheeger_upper", "lambda_expansion", "gap_corollary", "griggs_yeh"]);
    assert!(lines[1..].iter().all(|l| l.contains(",true,")));

    let c6 = gen(&dir, "c6.json", &["cycle", "--n", "6"]);
    let o = run(&["bounds", &c6, "--format", "json"]);
    assert!(o.status.success());
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rows[0]["holds"].as_bool().unwrap() && rows[1]["holds"].as_bool().unwrap());
    assert_eq!(rows[4]["status"], "skipped");

    let tree = gen(&dir, "tree.json", &["path", "--n", "5"]);
    let o = run(&["bounds", &tree, "--upper"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("cheeger_lower,,,,skipped")));
    assert!(text.lines().any(|l| l.starts_with("strong_partition,") && l.contains(",true,")));
}

#[test]
fn bounds_violation_exit_code() {
    let dir = TempDir::new().unwrap();
    let pet = gen(&dir, "pet.json", &["petersen"]);
    // A false λ pushes λ past the Griggs–Yeh bound.
    let o = run(&["bounds", &pet, "--lambda", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).lines().any(|l| l.starts_with("griggs_yeh,10,9,<=,false")));
}

#[test]
fn reproduce_campaigns() {
    let o = run(&["reproduce", "product-10-13"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("product-10-13: PASS"));
    let o = run(&["reproduce", "star-product-97"]);
    assert!(stdout(&o).contains("span 97"));
    let o = run(&["reproduce", "section-equality", "--count", "20", "--seed", "5"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = run(&["reproduce", "bogus"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn jobs_from_environment() {
    let dir = TempDir::new().unwrap();
    let pet = gen(&dir, "pet.json", &["petersen"]);
    let o = bin().args(["lambda", &pet]).env("HYPERLAMBDA_JOBS", "2").output().unwrap();
    assert!(o.status.success());
    let o = bin().args(["lambda", &pet]).env("HYPERLAMBDA_JOBS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
