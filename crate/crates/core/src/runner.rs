//! Batch verification: suites of checks, the certified family cache and the
//! named-operator dump registry.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::classical::{
    abelian, classical_r, classical_rv, non_jacobi_example, random_actions, random_corpus, sl2, sl2_data,
    verify_classical, ClassicalCheck, ClassicalData,
};
use crate::error::{Error, Result};
use crate::field::{qint, FieldElement};
use crate::poly::Var;
use crate::quantum::{
    adjoint_limit_residual, anchor_a_residual, anchor_c_residual, bracket_identity_classical_residual,
    bracket_identity_sides, flip_residual, gt, inverse_residuals, lambda_denominator, module_hom_dim,
    module_limit_residual, module_relation_residual, synthesize_adjoint_family, synthesize_module_family,
    tensor_module, ybe_residual, ModuleFamily, ModuleSolution, QuantumFamily, ScreenRecord,
};
use crate::report::{Outcome, VerificationEntry, VerificationReport};
use crate::tensor::{LinearOperator, MatrixJson, Space};
use crate::uqsl2::{
    bracket_ambient, cabled_braiding, coproduct, defect_is_zero, defect_summary, equivariance_defect,
    hom_space, intertwiners, isotypic_multiplicities, qmodule, quantum_bracket, Rep, MAX_MODULE,
};

pub const DEFAULT_SEED: u64 = 1996;
pub const DEFAULT_CATALOG_DEPTH: usize = 4;
pub const CORPUS_SIZE: usize = 20;
/// Largest module index with a quantum family.
pub const MAX_QUANTUM_MODULE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Classical,
    Quantum,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(Suite::Classical),
            "quantum" => Ok(Suite::Quantum),
            "all" => Ok(Suite::All),
            _ => Err(Error::BadInput(format!("unknown suite {s:?} (classical, quantum, all)"))),
        }
    }
}

/// Process exit status of a run.
pub fn exit_code(report: &VerificationReport) -> i32 {
    if report.all_pass() {
        0
    } else {
        1
    }
}

pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Synthesis(_) => 2,
        _ => 3,
    }
}

// ---- jobs ----

type Check<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

struct Job<'a> {
    id: String,
    anchor: String,
    f: Check<'a>,
}

fn job<'a>(id: impl Into<String>, anchor: impl Into<String>, f: impl Fn() -> Result<Outcome> + Send + Sync + 'a) -> Job<'a> {
    Job { id: id.into(), anchor: anchor.into(), f: Box::new(f) }
}

fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<VerificationEntry> {
    jobs.par_iter().map(|j| VerificationEntry::run(j.id.clone(), j.anchor.clone(), || (j.f)())).collect()
}

fn zero(op: LinearOperator) -> Outcome {
    Outcome::identity(op.is_zero(), op.residual_summary())
}

fn equal(a: &LinearOperator, b: &LinearOperator) -> Result<Outcome> {
    Ok(zero(a.sub(b)?))
}

fn all_zero(ops: impl IntoIterator<Item = LinearOperator>) -> Outcome {
    for op in ops {
        if !op.is_zero() {
            return zero(op);
        }
    }
    Outcome::identity(true, "zero".into())
}

fn count(found: usize, expected: usize) -> Outcome {
    Outcome::identity(found == expected, format!("found {found}, expected {expected}"))
}

fn id(s: &Space) -> LinearOperator {
    LinearOperator::identity(s.clone())
}

// ---- classical suite ----

/// Classical checks: sl₂ identities, modules `V_n` for `n ≤ max_n + 1`,
/// flips for `m, n ≤ max_n`, and the iff-directions on the seeded corpus.
pub fn classical_entries(max_n: usize, seed: u64) -> Result<Vec<VerificationEntry>> {
    let g = sl2();
    let mut data: Vec<(ClassicalCheck, ClassicalData)> = Vec::new();
    let plain = |a: &crate::classical::AlgebraPresentation| ClassicalData { algebra: a.clone(), modules: vec![] };
    for c in [ClassicalCheck::InversePair, ClassicalCheck::Ybe, ClassicalCheck::YbePrimed, ClassicalCheck::Unitarity] {
        data.push((c, plain(&g)));
    }
    for n in 0..=max_n + 1 {
        data.push((ClassicalCheck::ModuleYbe, ClassicalData { algebra: g.clone(), modules: vec![sl2_data(n as i64)?.1] }));
    }
    for m in 1..=max_n {
        for n in 1..=max_n {
            let modules = vec![sl2_data(m as i64)?.1, sl2_data(n as i64)?.1];
            data.push((ClassicalCheck::ModuleFlip, ClassicalData { algebra: g.clone(), modules }));
        }
    }
    let mut corpus = random_corpus(seed, CORPUS_SIZE);
    corpus.push(non_jacobi_example());
    corpus.push(abelian(2));
    for a in &corpus {
        for c in [ClassicalCheck::InversePair, ClassicalCheck::Ybe, ClassicalCheck::YbePrimed] {
            data.push((c, plain(a)));
        }
    }
    for act in random_actions(seed, 8) {
        data.push((ClassicalCheck::ModuleYbe, ClassicalData { algebra: g.clone(), modules: vec![act] }));
    }
    Ok(data.par_iter().map(|(c, d)| verify_classical(*c, d)).collect())
}

// ---- certified families ----

/// The certified adjoint pair and module families a quantum run uses.
#[derive(Clone, Debug)]
pub struct Families {
    pub adjoint: QuantumFamily,
    pub primed: QuantumFamily,
    pub modules: BTreeMap<usize, ModuleFamily>,
    pub certificates: BTreeMap<String, BTreeMap<String, String>>,
    pub seed: u64,
    pub catalog_depth: usize,
    /// Screening verdicts per family when synthesized in this process.
    pub screened: Vec<(String, ScreenRecord)>,
}

impl Families {
    pub fn synthesize(catalog_depth: usize, seed: u64) -> Result<Self> {
        let s = synthesize_adjoint_family(catalog_depth, seed)?;
        let mut certificates = BTreeMap::new();
        certificates.insert("adjoint".to_string(), s.certificate.clone());
        certificates.insert("primed".to_string(), s.certificate.clone());
        let mods: Vec<Result<(usize, crate::quantum::ModuleSynthesis)>> = (1..=MAX_QUANTUM_MODULE)
            .into_par_iter()
            .map(|n| Ok((n, synthesize_module_family(n, &s.adjoint, seed)?)))
            .collect();
        let mut modules = BTreeMap::new();
        let mut screened: Vec<(String, ScreenRecord)> = s.screened.into_iter().map(|r| ("adjoint".to_string(), r)).collect();
        for m in mods {
            let (n, m) = m?;
            certificates.insert(format!("V{n}"), m.certificate);
            screened.extend(m.screened.into_iter().map(|r| (format!("V{n}"), r)));
            modules.insert(n, m.family);
        }
        Ok(Families { adjoint: s.adjoint, primed: s.primed, modules, certificates, seed, catalog_depth, screened })
    }

    pub fn module(&self, n: usize) -> Result<&ModuleFamily> {
        self.modules.get(&n).ok_or_else(|| Error::BadInput(format!("no module family for V{n}")))
    }

    pub fn to_bundle(&self) -> Result<FamilyBundle> {
        let cert = |k: &str| self.certificates.get(k).cloned().unwrap_or_default();
        let fj = |f: &QuantumFamily, k: &str| FamilyJson {
            x: f.x.to_json(),
            a0: f.a0.to_json(),
            b0: f.b0.to_json(),
            pattern: f.pattern.clone(),
            basis_doc: f.basis_doc.clone(),
            certificate: cert(k),
            seed: self.seed,
        };
        Ok(FamilyBundle {
            version: format!("qlie {}", env!("CARGO_PKG_VERSION")),
            content_hash: content_hash()?,
            seed: self.seed,
            catalog_depth: self.catalog_depth,
            adjoint: fj(&self.adjoint, "adjoint"),
            primed: fj(&self.primed, "primed"),
            modules: self.modules.iter().map(|(n, m)| (n.to_string(), fj(&m.fam, &format!("V{n}")))).collect(),
        })
    }

    /// Reads a bundle back; a stale content hash is an error.
    pub fn from_bundle(b: &FamilyBundle) -> Result<Self> {
        let h = content_hash()?;
        if b.content_hash != h {
            return Err(Error::BadInput(format!("family cache is stale (hash {}, expected {h})", b.content_hash)));
        }
        let v4 = Space::v1_pow(4);
        let adjoint = b.adjoint.read(&v4, &v4)?;
        let primed = b.primed.read(&v4, &v4)?;
        let mut modules = BTreeMap::new();
        let mut certificates = BTreeMap::new();
        certificates.insert("adjoint".to_string(), b.adjoint.certificate.clone());
        certificates.insert("primed".to_string(), b.primed.certificate.clone());
        for (k, fj) in &b.modules {
            let n: usize = k.parse().map_err(|_| Error::BadInput(format!("modules: bad key {k:?}")))?;
            let (dom, cod) = crate::quantum::module_bases(n)?;
            let fam = fj.read(cod.space(), dom.space())?;
            modules.insert(n, ModuleFamily::from_restricted(n, fam)?);
            certificates.insert(format!("V{n}"), fj.certificate.clone());
        }
        Ok(Families {
            adjoint,
            primed,
            modules,
            certificates,
            seed: b.seed,
            catalog_depth: b.catalog_depth,
            screened: Vec::new(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    #[serde(rename = "X")]
    pub x: MatrixJson,
    #[serde(rename = "A0")]
    pub a0: MatrixJson,
    #[serde(rename = "B0")]
    pub b0: MatrixJson,
    pub pattern: String,
    pub basis_doc: String,
    pub certificate: BTreeMap<String, String>,
    pub seed: u64,
}

impl FamilyJson {
    fn read(&self, cod: &Space, dom: &Space) -> Result<QuantumFamily> {
        let m = |j: &MatrixJson| LinearOperator::from_json(j, cod.clone(), dom.clone());
        Ok(QuantumFamily {
            x: m(&self.x)?,
            a0: m(&self.a0)?,
            b0: m(&self.b0)?,
            pattern: self.pattern.clone(),
            basis_doc: self.basis_doc.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBundle {
    pub version: String,
    pub content_hash: String,
    pub seed: u64,
    pub catalog_depth: usize,
    pub adjoint: FamilyJson,
    pub primed: FamilyJson,
    pub modules: BTreeMap<String, FamilyJson>,
}

/// SHA-256 of the diagram and representation outputs the families are built
/// from, so a cache written by a different calculus is rejected.
pub fn content_hash() -> Result<String> {
    let b = intertwiners();
    let mut h = Sha256::new();
    h.update(format!("{:?}", coproduct()));
    let mut ops = vec![&b.eps1, &b.delta1, &b.rhat, &b.rhat_inv];
    let mods: Vec<_> = (1..=MAX_MODULE).map(qmodule).collect::<Result<_>>()?;
    ops.extend(mods.iter().map(|m| &m.projector));
    for op in ops {
        h.update(serde_json::to_string(&op.to_json()).expect("matrix serializes"));
    }
    Ok(h.finalize().iter().map(|x| format!("{x:02x}")).collect())
}

pub fn write_bundle(f: &Families, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    let text = serde_json::to_string_pretty(&f.to_bundle()?).expect("bundle serializes");
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_bundle(path: &Path) -> Result<Families> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let b: FamilyBundle =
        serde_json::from_str(&text).map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    Families::from_bundle(&b)
}

/// Loads the cache, or synthesizes (and rewrites it) when allowed.
pub fn load_or_synthesize(cache: &Path, allow_synthesize: bool, catalog_depth: usize, seed: u64) -> Result<Families> {
    let cached = if cache.exists() { Some(read_bundle(cache)) } else { None };
    match cached {
        Some(Ok(f)) => Ok(f),
        Some(Err(e)) if !allow_synthesize => Err(e),
        None if !allow_synthesize => Err(Error::BadInput(format!(
            "no family cache at {} (run synthesize or pass --allow-synthesize)",
            cache.display()
        ))),
        _ => {
            let f = Families::synthesize(catalog_depth, seed)?;
            write_bundle(&f, cache)?;
            Ok(f)
        }
    }
}

// ---- quantum suite ----

fn basic_jobs<'a>() -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    jobs.push(job("basic.loop-value", "ε₁∘δ₁ = −(q+q⁻¹)", || {
        let b = intertwiners();
        equal(&b.eps1.compose(&b.delta1)?, &LinearOperator::scalar(-qint(2)))
    }));
    jobs.push(job("basic.jones-wenzl-2", "p₂ = 1 + δ₁ε₁/[2], p₂² = p₂, ε₁p₂ = 0", || {
        let b = intertwiners();
        let p2 = &qmodule(2)?.projector;
        let formula = id(&gt()).add(&b.delta1.compose(&b.eps1)?.scale(&qint(2).inv()?))?;
        Ok(all_zero([p2.sub(&formula)?, p2.compose(p2)?.sub(p2)?, b.eps1.compose(p2)?]))
    }));
    jobs.push(job("basic.braid-relation", "Ř₁Ř₂Ř₁ = Ř₂Ř₁Ř₂ on V1⊗3", || {
        let r = &intertwiners().rhat;
        let (r1, r2) = (r.strand_place(1, 3)?, r.strand_place(2, 3)?);
        equal(&LinearOperator::chain(&[&r1, &r2, &r1])?, &LinearOperator::chain(&[&r2, &r1, &r2])?)
    }));
    jobs.push(job("basic.braiding-inverse", "Ř Ř⁻¹ = Ř⁻¹ Ř = 1", || {
        let b = intertwiners();
        let i = id(&gt());
        Ok(all_zero([b.rhat.compose(&b.rhat_inv)?.sub(&i)?, b.rhat_inv.compose(&b.rhat)?.sub(&i)?]))
    }));
    jobs.push(job("basic.braiding-quadratic", "(Ř − q^{-1/2})(Ř + q^{3/2}) = 0", || {
        let r = &intertwiners().rhat;
        let i = id(&gt());
        let lhs = r.sub(&i.scale(&FieldElement::v_pow(-1)))?.compose(&r.add(&i.scale(&FieldElement::v_pow(3)))?)?;
        Ok(zero(lhs))
    }));
    jobs.push(job("basic.cup-cap-equivariant", "ε₁ and δ₁ commute with the Uq(sl2) action", || {
        let b = intertwiners();
        let (v2, t) = (Rep::v1_pow(2, coproduct()), Rep::trivial());
        let d1 = equivariance_defect(&b.eps1, &v2, &t)?;
        let d2 = equivariance_defect(&b.delta1, &t, &v2)?;
        let ok = defect_is_zero(&d1) && defect_is_zero(&d2);
        Ok(Outcome::identity(ok, if ok { "zero".into() } else { format!("{}; {}", defect_summary(&d1), defect_summary(&d2)) }))
    }));
    jobs.push(job("basic.cable-1-1", "Ř(V1⊗V1) = Ř₁₁", || equal(&cabled_braiding(1, 1)?, &intertwiners().rhat)));
    jobs.push(job("basic.cable-braid-relation[V1,V2,V1]", "braid relation for mixed cables on V1⊗V2⊗V1", || {
        let (v1, v2) = (qmodule(1)?.space().clone(), qmodule(2)?.space().clone());
        let (c12, c21, c11) = (cabled_braiding(1, 2)?, cabled_braiding(2, 1)?, cabled_braiding(1, 1)?);
        let lhs = LinearOperator::chain(&[&c21.kron(&id(&v1)), &id(&v2).kron(&c11), &c12.kron(&id(&v1))])?;
        let rhs = LinearOperator::chain(&[&id(&v1).kron(&c12), &c11.kron(&id(&v2)), &id(&v1).kron(&c21)])?;
        equal(&lhs, &rhs)
    }));
    jobs
}

fn structural_jobs<'a>(f: &'a Families, max_n: usize) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    jobs.push(job("structure.hom-dim[End(g~⊗g~)]", "dim End_U(V1⊗4) = 14", || {
        let r = Rep::v1_pow(4, coproduct());
        Ok(count(hom_space(&r, &r)?.len(), 14))
    }));
    jobs.push(job("structure.isotypic[V1⊗4]", "V1⊗4 = V4 ⊕ 3V2 ⊕ 2V0", || {
        let m = isotypic_multiplicities(&Rep::v1_pow(4, coproduct()), 4)?;
        Ok(Outcome::identity(m == vec![2, 0, 3, 0, 1], format!("{m:?}")))
    }));
    for n in 1..=max_n.min(MAX_QUANTUM_MODULE) {
        let expected = if n == 1 { 5 } else { 6 };
        jobs.push(job(format!("structure.hom-dim[V{n}]"), "dim Hom_U(g~⊗V_n, V_n⊗g~)", move || {
            Ok(count(module_hom_dim(n)?, expected))
        }));
    }
    for n in 1..=MAX_MODULE {
        jobs.push(job(format!("structure.rank[p{n}]"), "rank p_n = n+1", move || {
            Ok(count(qmodule(n)?.projector.rank(), n + 1))
        }));
    }
    jobs.push(job("structure.bracket-unique", "[,]_q ≠ 0 and dim Hom_U(V2⊗V2, V2) = 1", || {
        quantum_bracket().map(|_| Outcome::identity(true, "zero".into()))
    }));
    let adj_eq = |name: &'static str, fam: &'a QuantumFamily| {
        job(format!("structure.equivariance[{name}]"), "X, A₀, B₀ commute with Uq(sl2)", move || {
            let r = Rep::v1_pow(4, coproduct());
            for op in [&fam.x, &fam.a0, &fam.b0] {
                let d = equivariance_defect(op, &r, &r)?;
                if !defect_is_zero(&d) {
                    return Ok(Outcome::identity(false, defect_summary(&d)));
                }
            }
            Ok(Outcome::identity(true, "zero".into()))
        })
    };
    jobs.push(adj_eq("R", &f.adjoint));
    jobs.push(adj_eq("R'", &f.primed));
    for (n, m) in f.modules.range(..=max_n) {
        jobs.push(job(format!("structure.equivariance[R_V{n}]"), "X_V, A_V, B_V commute with Uq(sl2)", move || {
            let (rin, rout) = m.reps()?;
            for op in [&m.fam.x, &m.fam.a0, &m.fam.b0] {
                let d = equivariance_defect(op, &rin, &rout)?;
                if !defect_is_zero(&d) {
                    return Ok(Outcome::identity(false, defect_summary(&d)));
                }
            }
            Ok(Outcome::identity(true, "zero".into()))
        }));
    }
    for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        jobs.push(job(format!("structure.equivariance[cable {a},{b}]"), "Ř(V_m⊗V_n) commutes with Uq(sl2)", move || {
            let (vm, vn) = (&qmodule(a)?.rep, &qmodule(b)?.rep);
            let d = equivariance_defect(
                &cabled_braiding(a, b)?,
                &vm.tensor(vn, coproduct()),
                &vn.tensor(vm, coproduct()),
            )?;
            Ok(Outcome::identity(defect_is_zero(&d), defect_summary(&d)))
        }));
    }
    jobs
}

fn vanish_at_one(fam: &QuantumFamily) -> Result<Outcome> {
    Ok(all_zero([fam.a().at_q_one()?, fam.b().at_q_one()?]))
}

fn quantum_jobs<'a>(f: &'a Families, max_n: usize) -> Vec<Job<'a>> {
    let mut jobs = Vec::new();
    let (r, rp) = (&f.adjoint, &f.primed);
    jobs.push(job("quantum.inverse", "R^q(λ)R^q(λ)' = R^q(λ)'R^q(λ) = 1", move || {
        let d = lambda_denominator();
        let [a, b] = inverse_residuals(&r.cleared()?, &rp.cleared()?, &(d.clone() * d))?;
        Ok(all_zero([a, b]))
    }));
    jobs.push(job("quantum.ybe", "R^q12 R^q23 R^q12 = R^q23 R^q12 R^q23", move || Ok(zero(ybe_residual(&r.cleared()?)?))));
    jobs.push(job("quantum.ybe-primed", "R^q'12 R^q'23 R^q'12 = R^q'23 R^q'12 R^q'23", move || {
        Ok(zero(ybe_residual(&rp.cleared()?)?))
    }));
    jobs.push(job("quantum.vanish-at-q-one[R]", "A and B vanish at q = 1", move || vanish_at_one(r)));
    jobs.push(job("quantum.vanish-at-q-one[R']", "A' and B' vanish at q = 1", move || vanish_at_one(rp)));
    jobs.push(job("quantum.boxed-presentation", "r + (λ−1/[2])a + b/([2]([2]λ−1)) + c/[2]² = X + λA + λB/([2]λ−1)", move || {
        equal(&r.boxed()?.assemble()?, &r.assemble()?)
    }));
    jobs.push(job("quantum.pole", "λ = 1/[2] is rejected and λ = 0 gives X", move || {
        let pole = matches!(r.assemble_at(&qint(2).inv()?), Err(Error::Pole { .. }));
        let at0 = r.assemble_at(&FieldElement::zero())?;
        Ok(Outcome::identity(pole && at0 == r.x, format!("pole rejected: {pole}")))
    }));
    jobs.push(job("quantum.x-at-q-one", "X at q = 1 is the transposition of g~⊗g~", move || {
        equal(&r.x.at_q_one()?, &LinearOperator::swap(&gt(), &gt()))
    }));
    jobs.push(job("quantum.limit-adjoint", "λ = μ/([2](1−q⁻²)), q = 1: R^q(λ) → R(μ)", move || {
        Ok(zero(adjoint_limit_residual(r, false)?))
    }));
    jobs.push(job("quantum.limit-adjoint-primed", "λ = μ/([2](1−q⁻²)), q = 1: R^q(λ)' → R(μ)'", move || {
        Ok(zero(adjoint_limit_residual(rp, true)?))
    }));
    jobs.push(job("quantum.anchor-a[R]", "a(g_q) = [2](1−q⁻²)[,]_q", move || Ok(zero(anchor_a_residual(&r.a())?))));
    jobs.push(job("quantum.anchor-c[R]", "c(g_q) = −(q³+q⁻³)Id", move || {
        Ok(zero(anchor_c_residual(&r.x, &r.a(), &r.b())?))
    }));
    let modules: Vec<(usize, &'a ModuleFamily)> = f.modules.range(..=max_n).map(|(n, m)| (*n, m)).collect();
    for &(n, m) in &modules {
        jobs.push(job(format!("quantum.module-ybe[V{n}]"), "(R_V⊗1)(1⊗R_V)(R⊗1_V) = (1_V⊗R)(R_V⊗1)(1⊗R_V)", move || {
            Ok(zero(module_relation_residual(&r.cleared()?, &ModuleSolution::from_family(m)?)?))
        }));
        jobs.push(job(format!("quantum.vanish-at-q-one[R_V{n}]"), "A_V and B_V vanish at q = 1", move || {
            vanish_at_one(&m.fam)
        }));
        jobs.push(job(format!("quantum.limit-module[V{n}]"), "λ = μ/([n](1−q⁻²)), q = 1: R^q_V(λ) → R_V(μ)", move || {
            Ok(zero(module_limit_residual(m, n as u32)?))
        }));
        jobs.push(job(format!("quantum.limit-module-2[V{n}]"), "λ = μ/([2](1−q⁻²)), q = 1: R^q_V(λ) → R_V(μ)", move || {
            Ok(zero(module_limit_residual(m, 2)?))
        }));
    }
    for (a, b) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
        if a > max_n || b > max_n {
            continue;
        }
        let (Some(ma), Some(mb)) = (f.modules.get(&a), f.modules.get(&b)) else { continue };
        jobs.push(job(
            format!("quantum.module-flip[V{a},V{b}]"),
            "(Ř(V⊗W)⊗1)(1_V⊗R_W)(R_V⊗1_W) = (1_W⊗R_V)(R_W⊗1_V)(1⊗Ř(V⊗W))",
            move || {
                let res = flip_residual(&ModuleSolution::from_family(ma)?, &ModuleSolution::from_family(mb)?, &cabled_braiding(a, b)?)?;
                Ok(zero(res))
            },
        ));
    }
    if let Ok(m2) = f.module(2) {
        if max_n >= 2 {
            jobs.push(job("quantum.anchor-a[V2]", "a(g_q) = [2](1−q⁻²)[,]_q on the g_q⊗g_q → g_q block", move || {
                Ok(zero(anchor_a_residual(&m2.ambient(&m2.fam.a())?)?))
            }));
            jobs.push(job("quantum.anchor-c[V2]", "c(g_q) = −(q³+q⁻³)Id on the g_q → g_q block", move || {
                let amb = |op: &LinearOperator| m2.ambient(op);
                Ok(zero(anchor_c_residual(&amb(&m2.fam.x)?, &amb(&m2.fam.a())?, &amb(&m2.fam.b())?)?))
            }));
            jobs.push(job(
                "quantum.bracket-identity",
                "(q²+q⁻²−1)[,]_q([,]_q⊗1) = [,]_q(1⊗[,]_q)(1 − r(g_q)⊗1)",
                move || {
                    let (l, rr) = bracket_identity_sides(m2)?;
                    equal(&l, &rr)
                },
            ));
            jobs.push(job("quantum.bracket-identity-classical", "at q = 1 both sides are [[x,y],z] for sl2", move || {
                Ok(zero(bracket_identity_classical_residual(m2)?))
            }));
        }
    }
    if let Ok(m1) = f.module(1) {
        let contract = move |sol: ModuleSolution| -> Result<Outcome> {
            let res = module_relation_residual(&r.cleared()?, &sol)?;
            Ok(zero(res))
        };
        jobs.push(job("quantum.tensor-module[V1⊗V1]", "R_{V⊗W} = (1_V⊗R_W)(R_V⊗1_W) satisfies the module relation", move || {
            let s = ModuleSolution::from_family(m1)?;
            contract(tensor_module(&s, &s)?)
        }));
        jobs.push(job("quantum.tensor-module[V0⊗V1]", "the trivial module is a unit for the tensor product", move || {
            let s = ModuleSolution::from_family(m1)?;
            let u = ModuleSolution::unit();
            let (l, rr) = (tensor_module(&u, &s)?, tensor_module(&s, &u)?);
            Ok(all_zero([l.cleared.sub(&s.cleared)?, rr.cleared.sub(&s.cleared)?]))
        }));
        jobs.push(job("quantum.tensor-module[V1⊗V1⊗V1]", "((V⊗V)⊗V) = (V⊗(V⊗V)) and the composite satisfies the module relation", move || {
            let s = ModuleSolution::from_family(m1)?;
            let left = tensor_module(&tensor_module(&s, &s)?, &s)?;
            let right = tensor_module(&s, &tensor_module(&s, &s)?)?;
            let assoc = left.cleared.sub(&right.cleared)?;
            if !assoc.is_zero() {
                return Ok(zero(assoc));
            }
            contract(left)
        }));
        if let Ok(m2) = f.module(2) {
            if max_n >= 2 {
                jobs.push(job("quantum.tensor-module[V1⊗V2]", "R_{V⊗W} = (1_V⊗R_W)(R_V⊗1_W) satisfies the module relation", move || {
                    contract(tensor_module(&ModuleSolution::from_family(m1)?, &ModuleSolution::from_family(m2)?)?)
                }));
            }
        }
    }
    jobs
}

/// Basic calculus, structural and quantum family checks.
pub fn quantum_entries(f: &Families, max_n: usize) -> Vec<VerificationEntry> {
    let mut jobs = basic_jobs();
    jobs.extend(structural_jobs(f, max_n));
    jobs.extend(quantum_jobs(f, max_n));
    run_jobs(jobs)
}

// ---- verify ----

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub max_n: usize,
    pub report: Option<PathBuf>,
    pub allow_synthesize: bool,
    pub cache: PathBuf,
    pub seed: u64,
    pub catalog_depth: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suite: Suite::All,
            max_n: 3,
            report: None,
            allow_synthesize: false,
            cache: PathBuf::from("qlie-cache/families.json"),
            seed: DEFAULT_SEED,
            catalog_depth: DEFAULT_CATALOG_DEPTH,
        }
    }
}

/// Runs a suite and writes the report. Errors are bad input or synthesis
/// failures; verification failures are in the report.
pub fn run_verify(o: &VerifyOptions) -> Result<VerificationReport> {
    if o.max_n == 0 || o.max_n > MAX_QUANTUM_MODULE {
        return Err(Error::BadInput(format!("max-n must be between 1 and {MAX_QUANTUM_MODULE}")));
    }
    let mut entries = Vec::new();
    if o.suite != Suite::Classical {
        let f = load_or_synthesize(&o.cache, o.allow_synthesize, o.catalog_depth, o.seed)?;
        entries.extend(quantum_entries(&f, o.max_n));
    }
    if o.suite != Suite::Quantum {
        entries.extend(classical_entries(o.max_n, o.seed)?);
    }
    let report = VerificationReport::new(o.seed, entries);
    if let Some(p) = &o.report {
        std::fs::write(p, report.to_json()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(report)
}

// ---- dump registry ----

pub const REGISTRY: &[&str] = &[
    "eps1",
    "delta1",
    "rhat11",
    "rhat11_inv",
    "p1",
    "p2",
    "p3",
    "p4",
    "bracket_q",
    "bracket_q_ambient",
    "cable_<m>_<n>",
    "qint<n>",
    "R",
    "R_primed",
    "R_cleared",
    "R_V<n>",
    "classical_R_sl2",
    "classical_R_sl2_primed",
    "classical_RV_sl2_<n>",
];

fn parse_index(s: &str, name: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::BadInput(format!("unknown object {name:?}")))
}

/// Looks up a named operator. Family objects are taken from `families`,
/// which is only called when needed.
pub fn named_operator(name: &str, families: &dyn Fn() -> Result<Families>) -> Result<LinearOperator> {
    let b = intertwiners();
    Ok(match name {
        "eps1" => b.eps1.clone(),
        "delta1" => b.delta1.clone(),
        "rhat11" => b.rhat.clone(),
        "rhat11_inv" => b.rhat_inv.clone(),
        "bracket_q" => quantum_bracket()?,
        "bracket_q_ambient" => bracket_ambient()?,
        "R" => families()?.adjoint.assemble()?,
        "R_primed" => families()?.primed.assemble()?,
        "R_cleared" => families()?.adjoint.cleared()?,
        "classical_R_sl2" => classical_r(&sl2(), false),
        "classical_R_sl2_primed" => classical_r(&sl2(), true),
        _ => {
            if let Some(n) = name.strip_prefix("qint") {
                let n: u32 = n.parse().map_err(|_| Error::BadInput(format!("unknown object {name:?}")))?;
                LinearOperator::scalar(qint(n))
            } else if let Some(n) = name.strip_prefix("p") {
                qmodule(parse_index(n, name)?)?.projector.clone()
            } else if let Some(rest) = name.strip_prefix("cable_") {
                let (m, n) = rest.split_once('_').ok_or_else(|| Error::BadInput(format!("unknown object {name:?}")))?;
                cabled_braiding(parse_index(m, name)?, parse_index(n, name)?)?
            } else if let Some(n) = name.strip_prefix("R_V") {
                let n = parse_index(n, name)?;
                families()?.module(n)?.fam.assemble()?
            } else if let Some(n) = name.strip_prefix("classical_RV_sl2_") {
                let (g, act) = sl2_data(parse_index(n, name)? as i64)?;
                classical_rv(&g, &act)?
            } else {
                return Err(Error::BadInput(format!("unknown object {name:?}; known: {}", REGISTRY.join(", "))));
            }
        }
    })
}

/// The matrix dump of a named operator, optionally at a given `λ` and/or
/// at `q = 1`.
pub fn dump_operator(
    name: &str,
    lambda: Option<&str>,
    at_q_one: bool,
    families: &dyn Fn() -> Result<Families>,
) -> Result<MatrixJson> {
    let mut op = named_operator(name, families)?;
    if let Some(l) = lambda {
        let lam = FieldElement::parse(l).map_err(|e| Error::BadInput(format!("--lambda {l:?}: {e}")))?;
        if name.starts_with('R') {
            let den = lambda_denominator().substitute(Var::Lam, &lam)?;
            if den.is_zero() {
                return Err(Error::Pole { var: "lam".into(), value: lam.to_string() });
            }
        }
        op = op.substitute(Var::Lam, &lam)?;
    }
    if at_q_one {
        op = op.at_q_one()?;
    }
    Ok(op.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_families() -> Result<Families> {
        Err(Error::BadInput("not needed".into()))
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("some".parse::<Suite>().is_err());
    }

    #[test]
    fn qint_dump() {
        let j = dump_operator("qint3", None, false, &no_families).unwrap();
        assert_eq!(j.entries, vec![(0, 0, qint(3).to_string())]);
    }

    #[test]
    fn unknown_name_is_bad_input() {
        let e = dump_operator("nope", None, false, &no_families).unwrap_err();
        assert_eq!(error_exit_code(&e), 3);
    }

    #[test]
    fn bundle_round_trip() {
        let f = Families::synthesize(DEFAULT_CATALOG_DEPTH, DEFAULT_SEED).unwrap();
        let b = f.to_bundle().unwrap();
        let g = Families::from_bundle(&b).unwrap();
        assert_eq!(g.adjoint, f.adjoint);
        assert_eq!(g.modules[&3].fam, f.modules[&3].fam);
        let mut stale = b.clone();
        stale.content_hash = "0".into();
        assert!(Families::from_bundle(&stale).is_err());
    }
}
