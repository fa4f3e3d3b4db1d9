//! The classical families `R(λ)`, `R(λ)'` and `R_V(λ)` for an arbitrary
//! finite-dimensional algebra, their defect tensors and the checks pairing
//! each identity with its algebraic condition.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::Var;
use crate::report::{Outcome, VerificationEntry};
use crate::tensor::{LinearOperator, Space};

/// An algebra given by structure constants `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
/// No axioms are assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub name: String,
    dim: usize,
    structure: Vec<FieldElement>,
}

/// A bilinear map `A: g⊗V → V`, `A(x_i, v_p) = Σ_q a[i][p][q] v_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAction {
    pub name: String,
    alg_dim: usize,
    dim: usize,
    action: Vec<FieldElement>,
}

impl AlgebraPresentation {
    pub fn zero(name: impl Into<String>, dim: usize) -> Self {
        AlgebraPresentation { name: name.into(), dim, structure: vec![FieldElement::zero(); dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, x: FieldElement) -> Result<()> {
        let d = self.dim;
        if i >= d || j >= d || k >= d {
            return Err(Error::BadInput(format!("index ({i},{j},{k}) out of range for dim {d}")));
        }
        self.structure[(i * d + j) * d + k] = x;
        Ok(())
    }

    pub fn algebra_space(&self) -> Space {
        Space::named("g", self.dim)
    }

    /// `g~ = g ⊕ ℂ`, basis `(x_0, …, x_{d-1}, unit)`.
    pub fn extended_space(&self) -> Space {
        Space::named("g~", self.dim + 1)
    }

    pub fn unit_index(&self) -> usize {
        self.dim
    }

    /// The adjoint action of the algebra on itself.
    pub fn adjoint(&self) -> ModuleAction {
        ModuleAction {
            name: format!("ad({})", self.name),
            alg_dim: self.dim,
            dim: self.dim,
            action: self.structure.clone(),
        }
    }

    /// The bracket as an operator `g⊗g → g`.
    pub fn bracket_operator(&self) -> LinearOperator {
        let d = self.dim;
        let g = self.algebra_space();
        let mut trip = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    trip.push((k, i * d + j, self.c(i, j, k).clone()));
                }
            }
        }
        LinearOperator::from_triplets(g.clone(), g.tensor(&g), trip.into_iter().filter(|t| !t.2.is_zero()))
            .expect("indices in range")
    }
}

impl ModuleAction {
    pub fn zero(name: impl Into<String>, alg_dim: usize, dim: usize) -> Self {
        ModuleAction { name: name.into(), alg_dim, dim, action: vec![FieldElement::zero(); alg_dim * dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn a(&self, i: usize, p: usize, q: usize) -> &FieldElement {
        &self.action[(i * self.dim + p) * self.dim + q]
    }

    pub fn set(&mut self, i: usize, p: usize, q: usize, x: FieldElement) -> Result<()> {
        let (g, d) = (self.alg_dim, self.dim);
        if i >= g || p >= d || q >= d {
            return Err(Error::BadInput(format!("index ({i},{p},{q}) out of range for {g}×{d}")));
        }
        self.action[(i * d + p) * d + q] = x;
        Ok(())
    }

    pub fn space(&self) -> Space {
        Space::named(self.name.clone(), self.dim)
    }

    pub fn scaled(&self, c: &FieldElement) -> ModuleAction {
        ModuleAction { action: self.action.iter().map(|x| x * c).collect(), ..self.clone() }
    }
}

/// `R(λ)` (or `R(λ)'` when `primed`) on `g~⊗g~`, with `λ` symbolic:
/// `(x+α)⊗(y+β) ↦ (y+β)⊗(x+α) + [x,y]⊗λ` (primed: `λ⊗[x,y]`).
pub fn classical_r(alg: &AlgebraPresentation, primed: bool) -> LinearOperator {
    let d = alg.dim;
    let n = d + 1;
    let u = alg.unit_index();
    let lam = FieldElement::lam();
    let mut trip = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let col = a * n + b;
            trip.push((b * n + a, col, FieldElement::one()));
            if a < d && b < d {
                for k in 0..d {
                    let c = alg.c(a, b, k);
                    if !c.is_zero() {
                        let row = if primed { u * n + k } else { k * n + u };
                        trip.push((row, col, c * &lam));
                    }
                }
            }
        }
    }
    let s = alg.extended_space().tensor(&alg.extended_space());
    LinearOperator::from_triplets(s.clone(), s, trip).expect("indices in range")
}

/// `R_V(λ): g~⊗V → V⊗g~`, `(x+α)⊗v ↦ v⊗(x+α) + A(x,v)⊗λ`.
pub fn classical_rv(alg: &AlgebraPresentation, act: &ModuleAction) -> Result<LinearOperator> {
    if act.alg_dim != alg.dim {
        return Err(Error::Shape(format!("action of a {}-dim algebra on a {}-dim algebra", act.alg_dim, alg.dim)));
    }
    let n = alg.dim + 1;
    let dv = act.dim;
    let u = alg.unit_index();
    let lam = FieldElement::lam();
    let mut trip = Vec::new();
    for a in 0..n {
        for p in 0..dv {
            let col = a * dv + p;
            trip.push((p * n + a, col, FieldElement::one()));
            if a < alg.dim {
                for q in 0..dv {
                    let c = act.a(a, p, q);
                    if !c.is_zero() {
                        trip.push((q * n + u, col, c * &lam));
                    }
                }
            }
        }
    }
    let g = alg.extended_space();
    let v = act.space();
    LinearOperator::from_triplets(v.tensor(&g), g.tensor(&v), trip)
}

/// A defect tensor as an operator, with its vanishing flag.
#[derive(Clone, Debug)]
pub struct Defect {
    pub tensor: LinearOperator,
    pub is_zero: bool,
}

impl Defect {
    fn new(tensor: LinearOperator) -> Self {
        let is_zero = tensor.is_zero();
        Defect { tensor, is_zero }
    }
}

#[derive(Clone, Debug)]
pub struct Defects {
    /// `[x,y] + [y,x]`, as `g⊗g → g`.
    pub antisymmetry: Defect,
    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`, as `g⊗g⊗g → g`.
    pub jacobi: Defect,
    /// `[[x,y],z] − [x,[y,z]] + [y,[x,z]]`, the form the YBE for `R(λ)` is
    /// equivalent to; it agrees with the cyclic form for antisymmetric brackets.
    pub leibniz: Defect,
    /// `A([x,y],v) − A(x,A(y,v)) + A(y,A(x,v))`, as `g⊗g⊗V → V`.
    pub action: Option<Defect>,
}

pub fn defects(alg: &AlgebraPresentation, act: Option<&ModuleAction>) -> Result<Defects> {
    let d = alg.dim;
    let g = alg.algebra_space();
    let c = |i, j, k| alg.c(i, j, k);
    let mut anti = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                anti.push((k, i * d + j, c(i, j, k) + c(j, i, k)));
            }
        }
    }
    let mut jac = Vec::new();
    let mut leib = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                let col = (i * d + j) * d + l;
                for k in 0..d {
                    let mut cyc = FieldElement::zero();
                    let mut lz = FieldElement::zero();
                    for m in 0..d {
                        cyc = cyc + c(i, j, m) * c(m, l, k) + c(j, l, m) * c(m, i, k) + c(l, i, m) * c(m, j, k);
                        lz = lz + c(i, j, m) * c(m, l, k) - c(j, l, m) * c(i, m, k) + c(i, l, m) * c(j, m, k);
                    }
                    jac.push((k, col, cyc));
                    leib.push((k, col, lz));
                }
            }
        }
    }
    let nz = |v: Vec<(usize, usize, FieldElement)>| v.into_iter().filter(|t| !t.2.is_zero()).collect::<Vec<_>>();
    let g2 = g.tensor(&g);
    let g3 = g2.tensor(&g);
    let antisymmetry = Defect::new(LinearOperator::from_triplets(g.clone(), g2.clone(), nz(anti))?);
    let jacobi = Defect::new(LinearOperator::from_triplets(g.clone(), g3.clone(), nz(jac))?);
    let leibniz = Defect::new(LinearOperator::from_triplets(g.clone(), g3, nz(leib))?);
    let action = match act {
        None => None,
        Some(a) => {
            if a.alg_dim != d {
                return Err(Error::Shape("action and algebra dimensions differ".into()));
            }
            let dv = a.dim;
            let mut t = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    for p in 0..dv {
                        let col = (i * d + j) * dv + p;
                        for q in 0..dv {
                            let mut x = FieldElement::zero();
                            for m in 0..d {
                                x = x + c(i, j, m) * a.a(m, p, q);
                            }
                            for r in 0..dv {
                                x = x - a.a(j, p, r) * a.a(i, r, q) + a.a(i, p, r) * a.a(j, r, q);
                            }
                            t.push((q, col, x));
                        }
                    }
                }
            }
            let v = a.space();
            Some(Defect::new(LinearOperator::from_triplets(v.clone(), g2.tensor(&v), nz(t))?))
        }
    };
    Ok(Defects { antisymmetry, jacobi, leibniz, action })
}

/// The classical checks, each pairing an identity with (where applicable)
/// the algebraic condition it is equivalent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalCheck {
    /// `R(λ)R(λ)' = R(λ)'R(λ) = 1` iff the bracket is antisymmetric.
    InversePair,
    /// YBE for `R(λ)` iff the Jacobi identity holds.
    Ybe,
    /// YBE for `R(λ)'` iff the Jacobi identity holds.
    YbePrimed,
    /// `R(λ)R₂₁(−λ) = R₂₁(λ)R(−λ) = 1`.
    Unitarity,
    /// Mixed YBE for `R_V(λ)` iff `A` is an action.
    ModuleYbe,
    /// Compatibility of `R_V`, `R_W` with the flip of `V⊗W`.
    ModuleFlip,
}

impl ClassicalCheck {
    pub const ALL: [ClassicalCheck; 6] = [
        ClassicalCheck::InversePair,
        ClassicalCheck::Ybe,
        ClassicalCheck::YbePrimed,
        ClassicalCheck::Unitarity,
        ClassicalCheck::ModuleYbe,
        ClassicalCheck::ModuleFlip,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClassicalCheck::InversePair => "classical.inverse-pair",
            ClassicalCheck::Ybe => "classical.ybe",
            ClassicalCheck::YbePrimed => "classical.ybe-primed",
            ClassicalCheck::Unitarity => "classical.unitarity",
            ClassicalCheck::ModuleYbe => "classical.module-ybe",
            ClassicalCheck::ModuleFlip => "classical.module-flip",
        }
    }

    pub fn anchor(self) -> &'static str {
        match self {
            ClassicalCheck::InversePair => "R(λ)R(λ)' = R(λ)'R(λ) = 1 iff [,] is antisymmetric",
            ClassicalCheck::Ybe => "R12 R23 R12 = R23 R12 R23 iff [,] satisfies Jacobi",
            ClassicalCheck::YbePrimed => "R'12 R'23 R'12 = R'23 R'12 R'23 iff [,] satisfies Jacobi",
            ClassicalCheck::Unitarity => "R(λ)R21(-λ) = R21(λ)R(-λ) = 1",
            ClassicalCheck::ModuleYbe => "(R_V⊗1)(1⊗R_V)(R⊗1) = (1⊗R)(R_V⊗1)(1⊗R_V) iff A is an action",
            ClassicalCheck::ModuleFlip => "(σ(V⊗W)⊗1)(1⊗R_W)(R_V⊗1) = (1⊗R_V)(R_W⊗1)(1⊗σ(V⊗W))",
        }
    }

    pub fn from_id(s: &str) -> Option<ClassicalCheck> {
        Self::ALL.into_iter().find(|c| c.id() == s)
    }
}

/// The data a classical check runs on.
#[derive(Clone, Debug)]
pub struct ClassicalData {
    pub algebra: AlgebraPresentation,
    pub modules: Vec<ModuleAction>,
}

fn id_of(s: &Space) -> LinearOperator {
    LinearOperator::identity(s.clone())
}

fn residual(lhs: &LinearOperator, rhs: &LinearOperator) -> Result<LinearOperator> {
    lhs.sub(rhs)
}

fn neg_lambda(op: &LinearOperator) -> Result<LinearOperator> {
    op.substitute(Var::Lam, &-FieldElement::lam())
}

/// YBE residual `R12 R23 R12 − R23 R12 R23`.
pub fn ybe_residual(r: &LinearOperator) -> Result<LinearOperator> {
    let i = id_of(&r.domain().slice(0, 1));
    let r12 = r.kron(&i);
    let r23 = i.kron(r);
    residual(&LinearOperator::chain(&[&r12, &r23, &r12])?, &LinearOperator::chain(&[&r23, &r12, &r23])?)
}

/// Runs one check. Failures are reported in the entry, not as errors.
pub fn verify_classical(check: ClassicalCheck, data: &ClassicalData) -> VerificationEntry {
    let label = match check {
        ClassicalCheck::ModuleYbe => data.modules.first().map(|m| m.name.clone()).unwrap_or_default(),
        ClassicalCheck::ModuleFlip => data.modules.iter().take(2).map(|m| m.name.clone()).collect::<Vec<_>>().join(","),
        _ => String::new(),
    };
    let id = if label.is_empty() {
        format!("{}[{}]", check.id(), data.algebra.name)
    } else {
        format!("{}[{};{}]", check.id(), data.algebra.name, label)
    };
    VerificationEntry::run(id, check.anchor(), || run_check(check, data))
}

fn both_zero(a: LinearOperator, b: LinearOperator) -> (bool, String) {
    if !a.is_zero() {
        (false, a.residual_summary())
    } else if !b.is_zero() {
        (false, b.residual_summary())
    } else {
        (true, "zero".into())
    }
}

fn run_check(check: ClassicalCheck, data: &ClassicalData) -> Result<Outcome> {
    let alg = &data.algebra;
    let g = alg.extended_space();
    let gg = g.tensor(&g);
    match check {
        ClassicalCheck::InversePair => {
            let r = classical_r(alg, false);
            let rp = classical_r(alg, true);
            let id = id_of(&gg);
            let (z, s) = both_zero(residual(&r.compose(&rp)?, &id)?, residual(&rp.compose(&r)?, &id)?);
            Ok(Outcome::equivalence(z, s, defects(alg, None)?.antisymmetry.is_zero))
        }
        ClassicalCheck::Ybe | ClassicalCheck::YbePrimed => {
            let r = classical_r(alg, check == ClassicalCheck::YbePrimed);
            let res = ybe_residual(&r)?;
            Ok(Outcome::equivalence(res.is_zero(), res.residual_summary(), defects(alg, None)?.jacobi.is_zero))
        }
        ClassicalCheck::Unitarity => {
            let r = classical_r(alg, false);
            let s = LinearOperator::swap(&g, &g);
            let r21 = LinearOperator::chain(&[&s, &r, &s])?;
            let id = id_of(&gg);
            let (z, msg) = both_zero(
                residual(&r.compose(&neg_lambda(&r21)?)?, &id)?,
                residual(&r21.compose(&neg_lambda(&r)?)?, &id)?,
            );
            Ok(Outcome::identity(z, msg))
        }
        ClassicalCheck::ModuleYbe => {
            let act = data.modules.first().ok_or_else(|| Error::BadInput("module check needs an action".into()))?;
            let res = module_ybe_residual(alg, act)?;
            let dz = defects(alg, Some(act))?.action.map(|d| d.is_zero).unwrap_or(false);
            Ok(Outcome::equivalence(res.is_zero(), res.residual_summary(), dz))
        }
        ClassicalCheck::ModuleFlip => {
            let (v, w) = match data.modules.as_slice() {
                [v, w, ..] => (v, w),
                _ => return Err(Error::BadInput("flip check needs two actions".into())),
            };
            let res = module_flip_residual(alg, v, w)?;
            Ok(Outcome::identity(res.is_zero(), res.residual_summary()))
        }
    }
}

pub fn module_ybe_residual(alg: &AlgebraPresentation, act: &ModuleAction) -> Result<LinearOperator> {
    let g = alg.extended_space();
    let v = act.space();
    let r = classical_r(alg, false);
    let rv = classical_rv(alg, act)?;
    let (ig, iv) = (id_of(&g), id_of(&v));
    let lhs = LinearOperator::chain(&[&rv.kron(&ig), &ig.kron(&rv), &r.kron(&iv)])?;
    let rhs = LinearOperator::chain(&[&iv.kron(&r), &rv.kron(&ig), &ig.kron(&rv)])?;
    residual(&lhs, &rhs)
}

pub fn module_flip_residual(alg: &AlgebraPresentation, va: &ModuleAction, wa: &ModuleAction) -> Result<LinearOperator> {
    let g = alg.extended_space();
    let (v, w) = (va.space(), wa.space());
    let rv = classical_rv(alg, va)?;
    let rw = classical_rv(alg, wa)?;
    let (ig, iv, iw) = (id_of(&g), id_of(&v), id_of(&w));
    let lhs = LinearOperator::chain(&[&LinearOperator::swap(&v, &w).kron(&ig), &iv.kron(&rw), &rv.kron(&iw)])?;
    let rhs = LinearOperator::chain(&[&iw.kron(&rv), &rw.kron(&iv), &ig.kron(&LinearOperator::swap(&v, &w))])?;
    residual(&lhs, &rhs)
}

/// sl₂ in the basis `(e, f, h)` and its module `V_n` in the weight basis
/// `w_0..w_n`.
pub fn sl2_data(n: i64) -> Result<(AlgebraPresentation, ModuleAction)> {
    if n < 0 {
        return Err(Error::BadInput(format!("V_{n} needs n ≥ 0")));
    }
    let fe = FieldElement::from_int;
    let mut g = AlgebraPresentation::zero("sl2", 3);
    let (e, f, h) = (0, 1, 2);
    g.set(h, e, e, fe(2))?;
    g.set(e, h, e, fe(-2))?;
    g.set(h, f, f, fe(-2))?;
    g.set(f, h, f, fe(2))?;
    g.set(e, f, h, fe(1))?;
    g.set(f, e, h, fe(-1))?;
    let nu = n as usize;
    let mut a = ModuleAction::zero(format!("V{n}"), 3, nu + 1);
    for k in 0..=nu {
        let ki = k as i64;
        if k > 0 {
            a.set(e, k, k - 1, fe(n - ki + 1))?;
        }
        if k < nu {
            a.set(f, k, k + 1, fe(ki + 1))?;
        }
        a.set(h, k, k, fe(n - 2 * ki))?;
    }
    Ok((g, a))
}

pub fn sl2() -> AlgebraPresentation {
    sl2_data(0).expect("n = 0 is valid").0
}

/// `[x,y] = z, [y,z] = x, [z,x] = x` (antisymmetric, not Jacobi).
pub fn non_jacobi_example() -> AlgebraPresentation {
    let mut g = AlgebraPresentation::zero("non-jacobi", 3);
    let one = FieldElement::one;
    let m1 = || FieldElement::from_int(-1);
    let (x, y, z) = (0, 1, 2);
    for (i, j, k) in [(x, y, z), (y, z, x), (z, x, x)] {
        g.set(i, j, k, one()).expect("in range");
        g.set(j, i, k, m1()).expect("in range");
    }
    g
}

pub fn abelian(dim: usize) -> AlgebraPresentation {
    AlgebraPresentation::zero(format!("abelian{dim}"), dim)
}

/// Seeded random brackets: dims 2-3, sparse integer constants in [−2, 2];
/// every other algebra is forced antisymmetric.
pub fn random_corpus(seed: u64, count: usize) -> Vec<AlgebraPresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|idx| {
            let dim = rng.gen_range(2..=3);
            let anti = idx % 2 == 0;
            let mut g = AlgebraPresentation::zero(format!("random{idx}"), dim);
            for i in 0..dim {
                for j in 0..dim {
                    if anti && j <= i {
                        continue;
                    }
                    for k in 0..dim {
                        if rng.gen_bool(0.5) {
                            continue;
                        }
                        let c: i64 = rng.gen_range(-2..=2);
                        g.set(i, j, k, FieldElement::from_int(c)).expect("in range");
                        if anti {
                            g.set(j, i, k, FieldElement::from_int(-c)).expect("in range");
                        }
                    }
                }
            }
            g
        })
        .collect()
}

/// Seeded random action candidates of sl₂ on a 2-dim space, plus the genuine
/// `V_n` (n ≤ 2) and a rescaled one (not an action).
pub fn random_actions(seed: u64, count: usize) -> Vec<ModuleAction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for idx in 0..count {
        let mut a = ModuleAction::zero(format!("cand{idx}"), 3, 2);
        for i in 0..3 {
            for p in 0..2 {
                for q in 0..2 {
                    if rng.gen_bool(0.6) {
                        continue;
                    }
                    let c: i64 = rng.gen_range(-1..=1);
                    a.set(i, p, q, FieldElement::from_int(c)).expect("in range");
                }
            }
        }
        out.push(a);
    }
    for n in 0..=2 {
        out.push(sl2_data(n).expect("valid").1);
    }
    let mut twice = sl2_data(1).expect("valid").1.scaled(&FieldElement::from_int(2));
    twice.name = "2V1".into();
    out.push(twice);
    out
}

// ---- JSON ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub dim: usize,
    #[serde(default)]
    pub name: Option<String>,
    /// Entry `i*dim + p` lists `[q, coeff]` with `A(x_i, v_p) ∋ coeff·v_q`.
    pub entries: Vec<Vec<(usize, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default)]
    pub name: Option<String>,
    pub dim: usize,
    /// Entry `i*dim + j` lists `[k, coeff]` with `[x_i, x_j] ∋ coeff·x_k`.
    pub structure: Vec<Vec<(usize, String)>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub actions: Vec<ActionJson>,
}

impl AlgebraPresentation {
    pub fn to_json(&self) -> AlgebraJson {
        let d = self.dim;
        let structure = (0..d * d)
            .map(|ij| {
                (0..d)
                    .filter_map(|k| {
                        let c = &self.structure[ij * d + k];
                        (!c.is_zero()).then(|| (k, c.to_string()))
                    })
                    .collect()
            })
            .collect();
        AlgebraJson { name: Some(self.name.clone()), dim: d, structure, actions: Vec::new() }
    }
}

impl ModuleAction {
    pub fn to_json(&self) -> ActionJson {
        let d = self.dim;
        let entries = (0..self.alg_dim * d)
            .map(|ip| {
                (0..d)
                    .filter_map(|q| {
                        let c = &self.action[ip * d + q];
                        (!c.is_zero()).then(|| (q, c.to_string()))
                    })
                    .collect()
            })
            .collect();
        ActionJson { dim: d, name: Some(self.name.clone()), entries }
    }
}

fn parse_coeff(s: &str, at: &str) -> Result<FieldElement> {
    FieldElement::parse(s).map_err(|e| Error::BadInput(format!("{at}: malformed coefficient {s:?}: {e}")))
}

/// Validates a parsed corpus file, reporting the JSON position of the first
/// offending entry.
pub fn load_algebra_json(j: &AlgebraJson) -> Result<(AlgebraPresentation, Vec<ModuleAction>)> {
    let d = j.dim;
    if d == 0 {
        return Err(Error::BadInput("dim: must be positive".into()));
    }
    if j.structure.len() != d * d {
        return Err(Error::BadInput(format!("structure: expected {} rows (dim²), found {}", d * d, j.structure.len())));
    }
    let mut g = AlgebraPresentation::zero(j.name.clone().unwrap_or_else(|| "algebra".into()), d);
    for (ij, row) in j.structure.iter().enumerate() {
        for (t, (k, s)) in row.iter().enumerate() {
            let at = format!("structure[{ij}][{t}]");
            if *k >= d {
                return Err(Error::BadInput(format!("{at}: index {k} out of range for dim {d}")));
            }
            g.set(ij / d, ij % d, *k, parse_coeff(s, &at)?)?;
        }
    }
    let mut acts = Vec::new();
    for (a_idx, aj) in j.actions.iter().enumerate() {
        let dv = aj.dim;
        if aj.entries.len() != d * dv {
            return Err(Error::BadInput(format!(
                "actions[{a_idx}].entries: expected {} rows (dim·dim_V), found {}",
                d * dv,
                aj.entries.len()
            )));
        }
        let mut a = ModuleAction::zero(aj.name.clone().unwrap_or_else(|| format!("V{a_idx}")), d, dv);
        for (ip, row) in aj.entries.iter().enumerate() {
            for (t, (q, s)) in row.iter().enumerate() {
                let at = format!("actions[{a_idx}].entries[{ip}][{t}]");
                if *q >= dv {
                    return Err(Error::BadInput(format!("{at}: index {q} out of range for dim {dv}")));
                }
                a.set(ip / dv, ip % dv, *q, parse_coeff(s, &at)?)?;
            }
        }
        acts.push(a);
    }
    Ok((g, acts))
}

/// Parses corpus text. JSON syntax errors carry line and column.
pub fn load_algebra_str(text: &str) -> Result<(AlgebraPresentation, Vec<ModuleAction>)> {
    let j: AlgebraJson = serde_json::from_str(text)
        .map_err(|e| Error::BadInput(format!("line {} column {}: {e}", e.line(), e.column())))?;
    load_algebra_json(&j)
}

pub fn load_algebra(path: &std::path::Path) -> Result<(AlgebraPresentation, Vec<ModuleAction>)> {
    let text = std::fs::read_to_string(path)?;
    load_algebra_str(&text).map_err(|e| match e {
        Error::BadInput(m) => Error::BadInput(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn dump_algebra(g: &AlgebraPresentation, actions: &[ModuleAction]) -> String {
    let mut j = g.to_json();
    j.actions = actions.iter().map(|a| a.to_json()).collect();
    serde_json::to_string_pretty(&j).expect("serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_r_is_the_flip() {
        let g = abelian(2);
        let s = g.extended_space();
        assert_eq!(classical_r(&g, false), LinearOperator::swap(&s, &s));
    }

    #[test]
    fn sl2_e_f_term() {
        let g = sl2();
        let r = classical_r(&g, false);
        let n = 4;
        // e⊗f ↦ f⊗e + λ h⊗unit
        let col = 1;
        assert_eq!(r.get(n, col), FieldElement::one());
        assert_eq!(r.get(2 * n + 3, col), FieldElement::lam());
        assert_eq!(r.get(15, 15), FieldElement::one());
    }

    #[test]
    fn sl2_defects_vanish() {
        for n in 0..=3 {
            let (g, a) = sl2_data(n).unwrap();
            let d = defects(&g, Some(&a)).unwrap();
            assert!(d.antisymmetry.is_zero && d.jacobi.is_zero && d.leibniz.is_zero);
            assert!(d.action.unwrap().is_zero);
        }
    }

    #[test]
    fn counterexample_jacobi_value() {
        let g = non_jacobi_example();
        let d = defects(&g, None).unwrap();
        assert!(d.antisymmetry.is_zero);
        assert!(!d.jacobi.is_zero);
        // (x, y, z) ↦ z
        let col = (0 * 3 + 1) * 3 + 2;
        assert_eq!(d.jacobi.tensor.get(2, col), FieldElement::one());
        assert_eq!(d.jacobi.tensor.get(0, col), FieldElement::zero());
        assert_eq!(d.jacobi.tensor.get(1, col), FieldElement::zero());
    }

    #[test]
    fn symmetric_product_is_not_antisymmetric() {
        let mut g = AlgebraPresentation::zero("sym", 2);
        g.set(0, 1, 0, FieldElement::one()).unwrap();
        g.set(1, 0, 0, FieldElement::one()).unwrap();
        assert!(!defects(&g, None).unwrap().antisymmetry.is_zero);
    }

    #[test]
    fn sl2_checks_pass() {
        let (g, v1) = sl2_data(1).unwrap();
        let (_, v2) = sl2_data(2).unwrap();
        let data = ClassicalData { algebra: g, modules: vec![v1, v2] };
        for c in ClassicalCheck::ALL {
            let e = verify_classical(c, &data);
            assert!(e.passed(), "{e:?}");
        }
    }

    #[test]
    fn adjoint_module_matches_mixed_blocks() {
        let g = sl2();
        let r = classical_r(&g, false);
        let rv = classical_rv(&g, &g.adjoint()).unwrap();
        for a in 0..4 {
            for p in 0..3 {
                for q in 0..3 {
                    for b in 0..4 {
                        assert_eq!(rv.get(q * 4 + b, a * 3 + p), r.get(q * 4 + b, a * 4 + p));
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_and_diagnostics() {
        let (g, a) = sl2_data(2).unwrap();
        let text = dump_algebra(&g, std::slice::from_ref(&a));
        let (g2, acts) = load_algebra_str(&text).unwrap();
        assert_eq!(g2, g);
        assert_eq!(acts, vec![a]);
        let bad = r#"{"dim": 2, "structure": [[], [[5, "1"]], [], []]}"#;
        let err = load_algebra_str(bad).unwrap_err().to_string();
        assert!(err.contains("structure[1][0]"), "{err}");
    }
}
