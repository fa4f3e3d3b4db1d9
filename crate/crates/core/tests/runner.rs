use std::sync::OnceLock;

use qlie_core::report::VerificationReport;
use qlie_core::runner::{
    dump_operator, exit_code, load_or_synthesize, quantum_entries, read_bundle, run_verify, write_bundle, FamilyBundle,
    Families, Suite, VerifyOptions, DEFAULT_CATALOG_DEPTH, DEFAULT_SEED,
};
use qlie_core::{Error, FieldElement};

fn families() -> &'static Families {
    static F: OnceLock<Families> = OnceLock::new();
    F.get_or_init(|| Families::synthesize(DEFAULT_CATALOG_DEPTH, DEFAULT_SEED).unwrap())
}

fn cached() -> qlie_core::Result<Families> {
    Ok(families().clone())
}

#[test]
fn bundle_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sub/families.json");
    write_bundle(families(), &path).unwrap();
    let back = read_bundle(&path).unwrap();
    assert_eq!(back.adjoint.x, families().adjoint.x);
    assert_eq!(back.primed.a0, families().primed.a0);
    assert_eq!(back.modules.len(), 3);
    assert_eq!(back.to_bundle().unwrap(), families().to_bundle().unwrap());
}

#[test]
fn stale_or_missing_cache_is_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("families.json");
    assert!(matches!(load_or_synthesize(&path, false, DEFAULT_CATALOG_DEPTH, DEFAULT_SEED), Err(Error::BadInput(_))));
    let mut b = families().to_bundle().unwrap();
    b.content_hash = "0".repeat(64);
    std::fs::write(&path, serde_json::to_string(&b).unwrap()).unwrap();
    assert!(matches!(read_bundle(&path), Err(Error::BadInput(m)) if m.contains("stale")));
}

#[test]
fn corrupted_family_entry_fails_a_named_check() {
    let mut b: FamilyBundle = families().to_bundle().unwrap();
    b.adjoint.x.entries[0].2 = "7".into();
    let f = Families::from_bundle(&b).unwrap();
    let failing: Vec<String> =
        quantum_entries(&f, 1).into_iter().filter(|e| !e.passed()).map(|e| e.id).collect();
    assert!(failing.iter().any(|id| id == "quantum.ybe"), "{failing:?}");
}

#[test]
fn verify_reports_only_the_odd_degenerations() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("families.json");
    write_bundle(families(), &cache).unwrap();
    let report_path = dir.path().join("report.json");
    let opts = VerifyOptions { suite: Suite::All, max_n: 3, report: Some(report_path.clone()), cache, ..Default::default() };
    let r = run_verify(&opts).unwrap();
    let failing: Vec<&str> = r.failing().map(|e| e.id.as_str()).collect();
    assert_eq!(failing, ["quantum.limit-module[V1]", "quantum.limit-module[V3]"]);
    assert_eq!(exit_code(&r), 1);
    let written: VerificationReport = serde_json::from_str(&std::fs::read_to_string(report_path).unwrap()).unwrap();
    assert_eq!(written.entries.len(), r.entries.len());
}

#[test]
fn classical_suite_needs_no_cache() {
    let dir = tempfile::tempdir().unwrap();
    let opts = VerifyOptions { suite: Suite::Classical, max_n: 2, cache: dir.path().join("none.json"), ..Default::default() };
    let r = run_verify(&opts).unwrap();
    assert!(r.all_pass());
    assert_eq!(exit_code(&r), 0);
    let bad = VerifyOptions { max_n: 4, ..opts };
    assert!(matches!(run_verify(&bad), Err(Error::BadInput(_))));
}

#[test]
fn dumps() {
    let q3 = dump_operator("qint3", None, false, &cached).unwrap();
    assert_eq!(q3.entries, [(0, 0, "(v^8+v^4+1)/(v^4)".to_string())]);
    let swap = dump_operator("rhat11", None, true, &cached).unwrap();
    let mut nonzero: Vec<(usize, usize)> = swap.entries.iter().map(|(i, j, _)| (*i, *j)).collect();
    nonzero.sort();
    assert_eq!(nonzero, [(0, 0), (1, 2), (2, 1), (3, 3)]);
    assert!(swap.entries.iter().all(|(_, _, s)| s == "1"));
    let pole = FieldElement::from_int(1).checked_div(&qlie_core::qint(2)).unwrap().to_string();
    assert!(matches!(dump_operator("R", Some(&pole), false, &cached), Err(Error::Pole { .. })));
    assert!(dump_operator("R", Some("0"), false, &cached).is_ok());
    assert!(matches!(dump_operator("nonsense", None, false, &cached), Err(Error::BadInput(_))));
}
