use std::path::PathBuf;

use qlie_core::classical::{
    abelian, defects, dump_algebra, load_algebra, load_algebra_str, module_flip_residual, module_ybe_residual,
    non_jacobi_example, random_corpus, sl2_data, verify_classical, ClassicalCheck, ClassicalData,
};
use qlie_core::Error;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn sl2_modules_satisfy_the_module_relation() {
    for n in 0..=4 {
        let (g, a) = sl2_data(n).unwrap();
        assert!(module_ybe_residual(&g, &a).unwrap().is_zero(), "V{n}");
    }
}

#[test]
fn sl2_flips() {
    for m in 1..=3 {
        for n in 1..=3 {
            let (g, a) = sl2_data(m).unwrap();
            let (_, b) = sl2_data(n).unwrap();
            assert!(module_flip_residual(&g, &a, &b).unwrap().is_zero(), "V{m}, V{n}");
        }
    }
}

#[test]
fn every_check_passes_on_sl2() {
    let (g, a) = sl2_data(2).unwrap();
    let (_, b) = sl2_data(1).unwrap();
    let data = ClassicalData { algebra: g, modules: vec![a, b] };
    for c in ClassicalCheck::ALL {
        let e = verify_classical(c, &data);
        assert!(e.passed(), "{}: {}", e.id, e.residual);
        assert_eq!(ClassicalCheck::from_id(c.id()), Some(c));
    }
}

#[test]
fn non_jacobi_breaks_ybe_but_not_inversion() {
    let g = non_jacobi_example();
    let d = defects(&g, None).unwrap();
    assert!(d.antisymmetry.is_zero);
    assert!(!d.jacobi.is_zero);
    let data = ClassicalData { algebra: g, modules: vec![] };
    let ybe = verify_classical(ClassicalCheck::Ybe, &data);
    assert!(ybe.passed(), "equivalence holds");
    assert_ne!(ybe.residual, "zero");
    assert_eq!(ybe.defect_zero, Some(false));
    assert_eq!(verify_classical(ClassicalCheck::InversePair, &data).residual, "zero");
}

#[test]
fn equivalences_hold_across_the_corpus() {
    let corpus = random_corpus(1996, 20);
    assert_eq!(corpus.len(), 20);
    let mut nonzero_defects = 0;
    for g in corpus.into_iter().chain([abelian(2), non_jacobi_example()]) {
        let data = ClassicalData { algebra: g, modules: vec![] };
        for c in [ClassicalCheck::InversePair, ClassicalCheck::Ybe, ClassicalCheck::YbePrimed] {
            let e = verify_classical(c, &data);
            assert!(e.passed(), "{}: {}", e.id, e.residual);
            nonzero_defects += usize::from(e.defect_zero == Some(false));
        }
    }
    assert!(nonzero_defects > 0, "corpus exercises the failing direction");
}

#[test]
fn corpus_is_seeded() {
    let a: Vec<String> = random_corpus(7, 5).iter().map(|g| dump_algebra(g, &[])).collect();
    let b: Vec<String> = random_corpus(7, 5).iter().map(|g| dump_algebra(g, &[])).collect();
    assert_eq!(a, b);
}

#[test]
fn corpus_files_load_and_round_trip() {
    for name in ["sl2.json", "abelian2.json", "non_jacobi.json"] {
        let (g, acts) = load_algebra(&corpus_dir().join(name)).unwrap();
        let (h, b) = load_algebra_str(&dump_algebra(&g, &acts)).unwrap();
        assert_eq!((h, b), (g, acts), "{name}");
    }
    let (g, acts) = load_algebra(&corpus_dir().join("sl2.json")).unwrap();
    assert_eq!(g.dim(), 3);
    for a in &acts {
        assert!(defects(&g, Some(a)).unwrap().action.unwrap().is_zero, "{}", a.name);
    }
}

fn bad_input(text: &str) -> String {
    match load_algebra_str(text) {
        Err(Error::BadInput(m)) => m,
        other => panic!("expected bad input, got {other:?}"),
    }
}

#[test]
fn load_errors_name_the_position() {
    let m = bad_input(r#"{"name":"x","dim":2,"structure":[[],[[5,"1"]],[],[]]}"#);
    assert!(m.contains("structure[1][0]") && m.contains("out of range"), "{m}");
    let m = bad_input(r#"{"name":"x","dim":2,"structure":[[],[]]}"#);
    assert!(m.contains("expected 4 rows"), "{m}");
    let m = bad_input(r#"{"name":"x","dim":1,"structure":[[]],"actions":[{"dim":1,"entries":[[[0,"1/0"]]]}]}"#);
    assert!(m.contains("actions[0].entries[0][0]"), "{m}");
    let m = bad_input("{\"name\":\n  oops}");
    assert!(m.contains("line 2"), "{m}");
}

#[test]
fn missing_file_is_an_error() {
    assert!(load_algebra(&corpus_dir().join("does-not-exist.json")).is_err());
}
