use std::path::Path;
use std::process::{Command, Output};

fn qlie(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlie")).current_dir(dir).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

#[test]
fn bad_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = qlie(dir.path(), &["verify", "--suite", "quantum"]);
    assert_eq!(code(&o), 3, "missing cache: {}", text(&o.stderr));
    assert!(text(&o.stderr).contains("no family cache"));
    assert_eq!(code(&qlie(dir.path(), &["verify", "--suite", "everything"])), 3);
    assert_eq!(code(&qlie(dir.path(), &["verify", "--suite", "classical", "--max-n", "9"])), 3);
    std::fs::create_dir_all(dir.path().join("qlie-cache")).unwrap();
    std::fs::write(dir.path().join("qlie-cache/families.json"), "{not json").unwrap();
    assert_eq!(code(&qlie(dir.path(), &["verify"])), 3);
}

#[test]
fn classical_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = qlie(dir.path(), &["verify", "--suite", "classical", "--max-n", "2", "--report", "r.json"]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert!(report["entries"].as_array().unwrap().iter().all(|e| e["status"] == "pass"));
}

#[test]
fn synthesize_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = qlie(dir.path(), &["synthesize"]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    assert!(text(&o.stdout).contains("R = ++--, R' = +-+-"));
    let cache = dir.path().join("qlie-cache/families.json");
    assert!(cache.exists());

    let o = qlie(dir.path(), &["verify", "--report", "report.json"]);
    assert_eq!(code(&o), 1);
    let err = text(&o.stderr);
    let fails: Vec<&str> = err.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 2, "{err}");
    assert!(fails[0].starts_with("FAIL quantum.limit-module[V1]"));
    assert!(fails[1].starts_with("FAIL quantum.limit-module[V3]"));

    let o = qlie(dir.path(), &["verify", "--suite", "quantum", "--max-n", "2"]);
    assert_eq!(code(&o), 1);

    let o = qlie(dir.path(), &["dump", "--object", "R", "--lambda", "0"]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    let o = qlie(dir.path(), &["dump", "--object", "R", "--lambda", "v^2/(v^4+1)"]);
    assert_eq!(code(&o), 3);
    assert!(text(&o.stderr).contains("pole"), "{}", text(&o.stderr));

    let mut bundle: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cache).unwrap()).unwrap();
    bundle["adjoint"]["X"]["entries"][0][2] = "7".into();
    std::fs::write(&cache, bundle.to_string()).unwrap();
    let o = qlie(dir.path(), &["verify", "--suite", "quantum", "--max-n", "1"]);
    assert_eq!(code(&o), 1);
    assert!(text(&o.stderr).lines().any(|l| l.starts_with("FAIL quantum.ybe:")), "{}", text(&o.stderr));
}

#[test]
fn dumps_without_families() {
    let dir = tempfile::tempdir().unwrap();
    let o = qlie(dir.path(), &["dump", "--object", "qint3"]);
    assert_eq!(code(&o), 0);
    assert!(text(&o.stdout).contains("(v^8+v^4+1)/(v^4)"));
    let o = qlie(dir.path(), &["dump", "--object", "rhat11", "--at-q-one", "--out", "swap.json"]);
    assert_eq!(code(&o), 0);
    let m: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("swap.json")).unwrap()).unwrap();
    assert_eq!(m["rows"], 4);
    assert_eq!(m["entries"].as_array().unwrap().len(), 4);
    assert_eq!(code(&qlie(dir.path(), &["dump", "--object", "nonsense"])), 3);
}

#[test]
fn corpus_load() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let dir = tempfile::tempdir().unwrap();
    let o = qlie(dir.path(), &["corpus", "--load", corpus.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    let out = text(&o.stdout);
    assert!(out.contains("sl2 dim 3"), "{out}");
    assert!(out.contains("jacobi false"), "{out}");
    std::fs::write(dir.path().join("bad.json"), r#"{"name":"x","dim":2,"structure":[[],[[9,"1"]],[],[]]}"#).unwrap();
    let o = qlie(dir.path(), &["corpus", "--load", "bad.json"]);
    assert_eq!(code(&o), 3);
    assert!(text(&o.stderr).contains("structure[1][0]"));
}
