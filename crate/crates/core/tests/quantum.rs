use std::sync::OnceLock;

use qlie_core::quantum::{
    adjoint_limit_residual, adjoint_patterns, inverse_residuals, lambda_denominator, module_hom_dim, module_limit_residual,
    module_relation_residual, synthesize_adjoint_family, tensor_module, ybe_residual, ModuleSolution, SynthesisResult,
};
use qlie_core::runner::{Families, DEFAULT_CATALOG_DEPTH, DEFAULT_SEED};
use qlie_core::{qint, Error, FieldElement};

fn synthesis() -> &'static SynthesisResult {
    static S: OnceLock<SynthesisResult> = OnceLock::new();
    S.get_or_init(|| synthesize_adjoint_family(DEFAULT_CATALOG_DEPTH, DEFAULT_SEED).unwrap())
}

fn families() -> &'static Families {
    static F: OnceLock<Families> = OnceLock::new();
    F.get_or_init(|| Families::synthesize(DEFAULT_CATALOG_DEPTH, DEFAULT_SEED).unwrap())
}

#[test]
fn exactly_one_certified_pair() {
    let s = synthesis();
    assert_eq!(adjoint_patterns(DEFAULT_CATALOG_DEPTH).len(), 16);
    assert_eq!(s.certified.len(), 1);
    assert_eq!(s.adjoint.pattern, "++--");
    assert_eq!(s.primed.pattern, "+-+-");
    for k in ["inverse", "ybe", "ybe-primed", "limit", "limit-primed", "anchor-a", "anchor-c"] {
        assert_eq!(s.certificate.get(k).map(String::as_str), Some("zero"), "{k}");
    }
}

#[test]
fn certified_pair_is_inverse_and_solves_ybe() {
    let s = synthesis();
    let (r, rp) = (s.adjoint.cleared().unwrap(), s.primed.cleared().unwrap());
    let d = lambda_denominator();
    for res in inverse_residuals(&r, &rp, &(d.clone() * d)).unwrap() {
        assert!(res.is_zero());
    }
    assert!(ybe_residual(&r).unwrap().is_zero());
    assert!(ybe_residual(&rp).unwrap().is_zero());
}

#[test]
fn synthesis_is_deterministic() {
    let again = synthesize_adjoint_family(DEFAULT_CATALOG_DEPTH, DEFAULT_SEED).unwrap();
    assert_eq!(again.adjoint.x, synthesis().adjoint.x);
    assert_eq!(again.screened, synthesis().screened);
}

#[test]
fn boxed_presentation_reassembles() {
    let r = &synthesis().adjoint;
    assert_eq!(r.boxed().unwrap().assemble().unwrap(), r.assemble().unwrap());
}

#[test]
fn pole_at_inverse_quantum_two() {
    let r = &synthesis().adjoint;
    assert!(matches!(r.assemble_at(&qint(2).inv().unwrap()), Err(Error::Pole { .. })));
    assert_eq!(r.assemble_at(&FieldElement::zero()).unwrap(), r.x);
}

#[test]
fn degeneration_with_two_recovers_the_classical_pair() {
    let s = synthesis();
    assert!(adjoint_limit_residual(&s.adjoint, false).unwrap().is_zero());
    assert!(adjoint_limit_residual(&s.primed, true).unwrap().is_zero());
}

#[test]
fn module_degeneration_with_two_matches_for_all_n() {
    for (n, m) in &families().modules {
        assert!(module_limit_residual(m, 2).unwrap().is_zero(), "V{n}");
    }
}

#[test]
fn module_degeneration_with_n_fails_for_odd_n() {
    let f = families();
    for n in [1u32, 3] {
        let m = f.module(n as usize).unwrap();
        assert!(!module_limit_residual(m, n).unwrap().is_zero(), "V{n}");
    }
    assert!(module_limit_residual(f.module(2).unwrap(), 2).unwrap().is_zero());
}

#[test]
fn module_families_satisfy_the_module_relation() {
    let f = families();
    let r = f.adjoint.cleared().unwrap();
    for (n, m) in &f.modules {
        let sol = ModuleSolution::from_family(m).unwrap();
        assert!(module_relation_residual(&r, &sol).unwrap().is_zero(), "V{n}");
    }
}

#[test]
fn tensor_of_modules_is_a_module() {
    let f = families();
    let r = f.adjoint.cleared().unwrap();
    let s = ModuleSolution::from_family(f.module(1).unwrap()).unwrap();
    let t = tensor_module(&s, &s).unwrap();
    assert!(module_relation_residual(&r, &t).unwrap().is_zero());
    let u = tensor_module(&ModuleSolution::unit(), &s).unwrap();
    assert_eq!(u.cleared, s.cleared);
}

#[test]
fn intertwiner_dimensions() {
    assert_eq!(module_hom_dim(1).unwrap(), 5);
    assert_eq!(module_hom_dim(2).unwrap(), 6);
    assert_eq!(module_hom_dim(3).unwrap(), 6);
}
