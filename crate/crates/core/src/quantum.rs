//! Quantum deformations of the classical families for sl₂: the adjoint
//! families `R^q(λ)`, `R^q(λ)'`, the module families `R^q_V(λ)` and their
//! verification.
//!
//! `g~_q = V1⊗V1 ≅ V2 ⊕ V0` is kept inside two `V1` strands. A family is
//! stored as `X + λ·A + λ/([2]λ−1)·B` with `A = (1−q⁻²)A₀`, `B = (1−q⁻²)B₀`.
//! Candidates for `X` are the crossing patterns carrying one pair of strands
//! past another; `A` and `B` are read off by grading `X` by the number of
//! `V0` summands, which makes every candidate a conjugate of `X` by the
//! rescaling `t = 1 − [2]λ` of the `V0` summand.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classical::{classical_r, classical_rv, sl2, sl2_data};
use crate::diagrams::{Crossing, CrossingDiagram};
use crate::error::{Error, Result};
use crate::field::{qint, FieldElement};
use crate::poly::Var;
use crate::tensor::{embed, restrict, ImageBasis, LinearOperator, Space};
use crate::uqsl2::{
    braid_operator, bracket_ambient, coproduct, defect_is_zero, equivariance_defect, intertwiners, qmodule, Rep,
};

/// The ambient space of `g~_q`.
pub fn gt() -> Space {
    Space::v1_pow(2)
}

fn id(s: &Space) -> LinearOperator {
    LinearOperator::identity(s.clone())
}

/// `1 − q⁻²`.
pub fn deformation_factor() -> FieldElement {
    FieldElement::one() - FieldElement::q_pow(-2)
}

/// `[2]λ − 1`.
pub fn lambda_denominator() -> FieldElement {
    qint(2) * FieldElement::lam() - FieldElement::one()
}

/// `λ/([2]λ − 1)`.
pub fn b_coefficient() -> FieldElement {
    FieldElement::lam().checked_div(&lambda_denominator()).expect("nonzero")
}

/// `p₂` and `p₀ = 1 − p₂` on `V1⊗V1`: projections onto `g_q` and the unit.
pub fn slot_projectors() -> Result<[LinearOperator; 2]> {
    let p2 = qmodule(2)?.projector.clone();
    let p0 = id(&gt()).sub(&p2)?;
    Ok([p2, p0])
}

/// Splits an operator on `g~⊗g~` by the change in the number of `V0` slots.
pub fn pair_grading(x: &LinearOperator) -> Result<BTreeMap<i32, LinearOperator>> {
    let p = slot_projectors()?;
    let mut out: BTreeMap<i32, LinearOperator> = BTreeMap::new();
    for a in 0..2 {
        for b in 0..2 {
            let pin = p[a].kron(&p[b]);
            let xin = x.compose(&pin)?;
            for c in 0..2 {
                for d in 0..2 {
                    let blk = p[c].kron(&p[d]).compose(&xin)?;
                    let delta = (c + d) as i32 - (a + b) as i32;
                    let e = out.entry(delta).or_insert_with(|| LinearOperator::zero(x.codomain().clone(), x.domain().clone()));
                    *e = e.add(&blk)?;
                }
            }
        }
    }
    Ok(out)
}

/// The same grading for an operator `g~⊗V1^n → V1^n⊗g~` sandwiched by `p_n`.
pub fn module_grading(x: &LinearOperator, n: usize) -> Result<BTreeMap<i32, LinearOperator>> {
    let p = slot_projectors()?;
    let pn = &qmodule(n)?.projector;
    let mut out: BTreeMap<i32, LinearOperator> = BTreeMap::new();
    for a in 0..2 {
        let xin = x.compose(&p[a].kron(pn))?;
        for c in 0..2 {
            let blk = pn.kron(&p[c]).compose(&xin)?;
            let delta = c as i32 - a as i32;
            let e = out.entry(delta).or_insert_with(|| LinearOperator::zero(x.codomain().clone(), x.domain().clone()));
            *e = e.add(&blk)?;
        }
    }
    Ok(out)
}

/// Crossing signs of the pair transposition `g~⊗g~ → g~⊗g~`, listed as
/// `(a×d, a×c, b×d, b×c)` for the moving pair `a b` and the fixed pair `c d`.
/// `b` crosses first.
pub fn pair_pattern(signs: [bool; 4]) -> CrossingDiagram {
    let [ad, ac, bd, bc] = signs;
    let c = |pos, positive| Crossing { pos, positive };
    CrossingDiagram { strands: 4, crossings: vec![c(2, bc), c(3, bd), c(1, ac), c(2, ad)] }
}

/// `b` (the second strand of `g~`) crosses the `n` strands of `V` with
/// signs `sb`, then `a` with signs `sa`.
pub fn module_pattern(sa: &[bool], sb: &[bool]) -> CrossingDiagram {
    let n = sa.len();
    let mut crossings = Vec::with_capacity(2 * n);
    for (t, &s) in sb.iter().enumerate() {
        crossings.push(Crossing { pos: 2 + t, positive: s });
    }
    for (t, &s) in sa.iter().enumerate() {
        crossings.push(Crossing { pos: 1 + t, positive: s });
    }
    CrossingDiagram { strands: n + 2, crossings }
}

pub fn signs_label(s: &[bool]) -> String {
    s.iter().map(|&b| if b { '+' } else { '-' }).collect()
}

/// A one-parameter family `X + λ·A + λ/([2]λ−1)·B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumFamily {
    pub x: LinearOperator,
    pub a0: LinearOperator,
    pub b0: LinearOperator,
    pub pattern: String,
    pub basis_doc: String,
}

/// The boxed presentation `r + (λ − 1/[2])a + b/([2]([2]λ−1)) + c/[2]²`.
#[derive(Clone, Debug)]
pub struct Boxed {
    pub r: LinearOperator,
    pub a: LinearOperator,
    pub b: LinearOperator,
    pub c: LinearOperator,
}

impl QuantumFamily {
    /// Builds the family of an adjoint pattern operator `X`.
    pub fn from_pair_operator(x: LinearOperator, pattern: String) -> Result<Self> {
        let parts = pair_grading(&x)?;
        for d in [-2, 2] {
            if let Some(p) = parts.get(&d) {
                if !p.is_zero() {
                    return Err(Error::Synthesis(format!("pattern {pattern} changes the unit count by {d}")));
                }
            }
        }
        Self::from_parts(x, &parts, pattern, "g~⊗g~ → g~⊗g~ on V1⊗4, g~ = V1⊗V1 (basis v¹, v⁻¹, big-endian)")
    }

    fn from_parts(x: LinearOperator, parts: &BTreeMap<i32, LinearOperator>, pattern: String, doc: &str) -> Result<Self> {
        let m2 = -qint(2);
        let zero = || LinearOperator::zero(x.codomain().clone(), x.domain().clone());
        let a = parts.get(&1).cloned().unwrap_or_else(zero).scale(&m2);
        let b = parts.get(&-1).cloned().unwrap_or_else(zero).scale(&m2);
        let f = deformation_factor().inv()?;
        Ok(QuantumFamily { a0: a.scale(&f), b0: b.scale(&f), x, pattern, basis_doc: doc.to_string() })
    }

    pub fn a(&self) -> LinearOperator {
        self.a0.scale(&deformation_factor())
    }

    pub fn b(&self) -> LinearOperator {
        self.b0.scale(&deformation_factor())
    }

    /// `X + λA + λ/([2]λ−1)B` over ℚ(v, lam).
    pub fn assemble(&self) -> Result<LinearOperator> {
        self.x.add(&self.a().scale(&FieldElement::lam()))?.add(&self.b().scale(&b_coefficient()))
    }

    /// The family at a given `λ`; `λ = 1/[2]` is a pole.
    pub fn assemble_at(&self, lam: &FieldElement) -> Result<LinearOperator> {
        let den = lambda_denominator().substitute(Var::Lam, lam)?;
        if den.is_zero() {
            return Err(Error::Pole { var: "lam".into(), value: lam.to_string() });
        }
        let cb = lam.checked_div(&den)?;
        self.x.add(&self.a().scale(lam))?.add(&self.b().scale(&cb))
    }

    /// `([2]λ−1)·R(λ)`, polynomial in `λ`.
    pub fn cleared(&self) -> Result<LinearOperator> {
        let d = lambda_denominator();
        self.x
            .scale(&d)
            .add(&self.a().scale(&(FieldElement::lam() * &d)))?
            .add(&self.b().scale(&FieldElement::lam()))
    }

    /// Substitutes `λ = μ/([k](1−q⁻²))` into the coefficient functions and
    /// takes `v = 1`.
    pub fn degenerate(&self, k: u32) -> Result<LinearOperator> {
        let lam = FieldElement::mu().checked_div(&(qint(k) * deformation_factor()))?;
        let ca = lam.clone() * deformation_factor();
        let den = lambda_denominator().substitute(Var::Lam, &lam)?;
        let cb = lam.checked_div(&den)? * deformation_factor();
        let full = self.x.add(&self.a0.scale(&ca))?.add(&self.b0.scale(&cb))?;
        full.at_q_one()
    }

    /// The boxed presentation for an adjoint family.
    pub fn boxed(&self) -> Result<Boxed> {
        let [p2, p0] = slot_projectors()?;
        let two = qint(2);
        let y = self.x.add(&self.a().add(&self.b())?.scale(&two.inv()?))?;
        let c = LinearOperator::chain(&[&p2.kron(&p0), &y, &p0.kron(&p2)])?.scale(&(two.clone() * &two));
        let r = y.sub(&c.scale(&(two.clone() * &two).inv()?))?;
        Ok(Boxed { r, a: self.a(), b: self.b(), c })
    }
}

impl Boxed {
    /// Reassembles the family from the boxed coefficients.
    pub fn assemble(&self) -> Result<LinearOperator> {
        let two = qint(2);
        let ca = FieldElement::lam() - two.inv()?;
        let cb = (two.clone() * lambda_denominator()).inv()?;
        let cc = (two.clone() * &two).inv()?;
        self.r.add(&self.a.scale(&ca))?.add(&self.b.scale(&cb))?.add(&self.c.scale(&cc))
    }
}

/// A module family, stored on `g~⊗V_n → V_n⊗g~` with `V_n` the Jones-Wenzl
/// image.
#[derive(Clone, Debug)]
pub struct ModuleFamily {
    pub n: usize,
    pub fam: QuantumFamily,
    pub dom: ImageBasis,
    pub cod: ImageBasis,
}

impl ModuleFamily {
    pub fn from_pattern(n: usize, sa: &[bool], sb: &[bool]) -> Result<Self> {
        let x = braid_operator(&module_pattern(sa, sb))?;
        let parts = module_grading(&x, n)?;
        let (dom, cod) = module_bases(n)?;
        let pattern = format!("a{}b{}", signs_label(sa), signs_label(sb));
        let doc = format!("g~⊗V{n} → V{n}⊗g~, V{n} = image of p{n} in V1⊗{n}, g~ = V1⊗V1");
        let amb = QuantumFamily::from_parts(x, &parts, pattern, &doc)?;
        let res = |op: &LinearOperator| restrict(op, &dom, &cod);
        let fam = QuantumFamily {
            x: res(&amb.x)?,
            a0: res(&amb.a0)?,
            b0: res(&amb.b0)?,
            pattern: amb.pattern,
            basis_doc: amb.basis_doc,
        };
        Ok(ModuleFamily { n, fam, dom, cod })
    }

    /// Wraps already restricted operators, e.g. read back from a cache.
    pub fn from_restricted(n: usize, fam: QuantumFamily) -> Result<Self> {
        let (dom, cod) = module_bases(n)?;
        for op in [&fam.x, &fam.a0, &fam.b0] {
            if op.domain() != dom.space() || op.codomain() != cod.space() {
                return Err(Error::Shape(format!("module family for V{n} has the wrong spaces")));
            }
        }
        Ok(ModuleFamily { n, fam, dom, cod })
    }

    pub fn space(&self) -> Space {
        Space::new(vec![crate::uqsl2::module_factor(self.n)])
    }

    /// Embeds a restricted operator in `V1^⊗(2+n)`, sandwiched by `p_n`.
    pub fn ambient(&self, op: &LinearOperator) -> Result<LinearOperator> {
        embed(op, &self.dom, &self.cod)
    }

    /// The restricted representation on `g~⊗V_n` and `V_n⊗g~`.
    pub fn reps(&self) -> Result<(Rep, Rep)> {
        let g = Rep::v1_pow(2, coproduct());
        let vn = &qmodule(self.n)?.rep;
        Ok((g.tensor(vn, coproduct()), vn.tensor(&g, coproduct())))
    }
}

/// Bases of `g~⊗V_n` and `V_n⊗g~` inside `V1^⊗(2+n)` and `V1^⊗(n+2)`.
pub fn module_bases(n: usize) -> Result<(ImageBasis, ImageBasis)> {
    let vn = qmodule(n)?;
    Ok((ImageBasis::identity(gt()).kron(&vn.basis), vn.basis.kron(&ImageBasis::identity(gt()))))
}

/// A solution of the module relation given by its cleared operator
/// `([2]λ−1)^degree · R_V(λ)`; composites come from tensor products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSolution {
    pub label: String,
    pub space: Space,
    pub cleared: LinearOperator,
    pub degree: u32,
}

impl ModuleSolution {
    pub fn from_family(m: &ModuleFamily) -> Result<Self> {
        Ok(ModuleSolution { label: format!("V{}", m.n), space: m.space(), cleared: m.fam.cleared()?, degree: 1 })
    }

    /// The trivial module: `R_{V0}(λ) = 1_{g~}`.
    pub fn unit() -> Self {
        ModuleSolution { label: "V0".into(), space: Space::unit(), cleared: id(&gt()), degree: 0 }
    }
}

/// `R_{V⊗W} = (1_V⊗R_W)(R_V⊗1_W)`.
pub fn tensor_module(v: &ModuleSolution, w: &ModuleSolution) -> Result<ModuleSolution> {
    let lhs = id(&v.space).kron(&w.cleared);
    let rhs = v.cleared.kron(&id(&w.space));
    Ok(ModuleSolution {
        label: format!("({}⊗{})", v.label, w.label),
        space: v.space.tensor(&w.space),
        cleared: lhs.compose(&rhs)?,
        degree: v.degree + w.degree,
    })
}

/// Residual of the module relation
/// `(R_V⊗1)(1⊗R_V)(R⊗1_V) = (1_V⊗R)(R_V⊗1)(1⊗R_V)`, denominators cleared.
pub fn module_relation_residual(adjoint: &LinearOperator, m: &ModuleSolution) -> Result<LinearOperator> {
    let g = gt();
    let (ig, iv) = (id(&g), id(&m.space));
    let t = &m.cleared;
    let lhs = LinearOperator::chain(&[&t.kron(&ig), &ig.kron(t), &adjoint.kron(&iv)])?;
    let rhs = LinearOperator::chain(&[&iv.kron(adjoint), &t.kron(&ig), &ig.kron(t)])?;
    lhs.sub(&rhs)
}

/// YBE residual on `g~⊗g~⊗g~`.
pub fn ybe_residual(r: &LinearOperator) -> Result<LinearOperator> {
    let i = id(&gt());
    let r12 = r.kron(&i);
    let r23 = i.kron(r);
    LinearOperator::chain(&[&r12, &r23, &r12])?.sub(&LinearOperator::chain(&[&r23, &r12, &r23])?)
}

/// `R R' − c` and `R' R − c`, `c` the identity scaled by the clearing factor.
pub fn inverse_residuals(r: &LinearOperator, rp: &LinearOperator, scale: &FieldElement) -> Result<[LinearOperator; 2]> {
    let i = id(r.domain()).scale(scale);
    Ok([r.compose(rp)?.sub(&i)?, rp.compose(r)?.sub(&i)?])
}

/// `(Ř(V⊗W)⊗1)(1_V⊗R_W)(R_V⊗1_W) − (1_W⊗R_V)(R_W⊗1_V)(1⊗Ř(V⊗W))`.
pub fn flip_residual(rv: &ModuleSolution, rw: &ModuleSolution, braid: &LinearOperator) -> Result<LinearOperator> {
    let g = gt();
    let (ig, iv, iw) = (id(&g), id(&rv.space), id(&rw.space));
    let lhs = LinearOperator::chain(&[&braid.kron(&ig), &iv.kron(&rw.cleared), &rv.cleared.kron(&iw)])?;
    let rhs = LinearOperator::chain(&[&iw.kron(&rv.cleared), &rw.cleared.kron(&iv), &ig.kron(braid)])?;
    lhs.sub(&rhs)
}

// ---- classical identification at v = 1 ----

/// `g~ → V1⊗V1` at `v = 1`: `e ↦ −2w₀`, `f ↦ 2w₂`, `h ↦ 2w₁`, unit ↦ `δ₁`,
/// with `w_k = f^k(v¹⊗v¹)/k!`.
pub fn classical_frame_adjoint() -> LinearOperator {
    let cols: [[i64; 4]; 4] = [[-2, 0, 0, 0], [0, 0, 0, 2], [0, 2, 2, 0], [0, 1, -1, 0]];
    LinearOperator::from_fn(gt(), sl2().extended_space(), |i, j| FieldElement::from_int(cols[j][i]))
}

/// `V_n → V1^⊗n` at `v = 1`: `w_k ↦ f^k(v¹⊗…⊗v¹)/k!`.
pub fn classical_frame_module(n: usize) -> Result<LinearOperator> {
    let amb = Space::v1_pow(n);
    let f = Rep::v1_pow(n, coproduct()).f.at_q_one()?;
    let mut cur: Vec<FieldElement> = vec![FieldElement::zero(); amb.dim()];
    cur[0] = FieldElement::one();
    let mut trip = Vec::new();
    for k in 0..=n {
        for (i, x) in cur.iter().enumerate() {
            if !x.is_zero() {
                trip.push((i, k, x.clone()));
            }
        }
        let mut next = vec![FieldElement::zero(); amb.dim()];
        for (i, row) in f.rows().iter().enumerate() {
            for (j, x) in row {
                next[i] = next[i].add_ref(&(x * &cur[*j]));
            }
        }
        let inv = FieldElement::from_int(k as i64 + 1).inv()?;
        cur = next.into_iter().map(|x| x * &inv).collect();
    }
    let dom = sl2_data(n as i64)?.1.space();
    LinearOperator::from_triplets(amb, dom, trip)
}

/// `L∘(Φ⊗Φ) − (Φ⊗Φ)∘R_cl(μ)` for the adjoint family degenerated with `[2]`.
pub fn adjoint_limit_residual(fam: &QuantumFamily, primed: bool) -> Result<LinearOperator> {
    let l = fam.degenerate(2)?;
    let phi = classical_frame_adjoint();
    let phi2 = phi.kron(&phi);
    let rcl = classical_r(&sl2(), primed).substitute(Var::Lam, &FieldElement::mu())?;
    l.compose(&phi2)?.sub(&phi2.compose(&rcl)?)
}

/// The module version, degenerated with `[k]`.
pub fn module_limit_residual(m: &ModuleFamily, k: u32) -> Result<LinearOperator> {
    let lim = |op: &LinearOperator| m.ambient(op);
    let f = &m.fam;
    let amb = QuantumFamily {
        x: lim(&f.x)?,
        a0: lim(&f.a0)?,
        b0: lim(&f.b0)?,
        pattern: f.pattern.clone(),
        basis_doc: String::new(),
    };
    let l = amb.degenerate(k)?;
    let pg = classical_frame_adjoint();
    let pn = classical_frame_module(m.n)?;
    let (g, act) = sl2_data(m.n as i64)?;
    let rcl = classical_rv(&g, &act)?.substitute(Var::Lam, &FieldElement::mu())?;
    l.compose(&pg.kron(&pn))?.sub(&pn.kron(&pg).compose(&rcl)?)
}

// ---- anchors ----

/// `a` as a map `g⊗g → g` (output unit stripped) minus `[2](1−q⁻²)[,]_q`,
/// on ambient operators `g~⊗X → X⊗g~` with `X = V1⊗V1`.
pub fn anchor_a_residual(a_amb: &LinearOperator) -> Result<LinearOperator> {
    let [p2, _] = slot_projectors()?;
    let eps = &intertwiners().eps1;
    let strip = id(&gt()).kron(eps);
    let a_map = LinearOperator::chain(&[&strip, a_amb, &p2.kron(&p2)])?.scale(&(-qint(2)).inv()?);
    a_map.sub(&bracket_ambient()?.scale(&(qint(2) * deformation_factor())))
}

/// `c` as a map `g → g` minus `−(q³+q⁻³)·Id`, from the ℂ⊗g → g⊗ℂ block of
/// `Y = X + (A+B)/[2]`.
pub fn anchor_c_residual(x_amb: &LinearOperator, a_amb: &LinearOperator, b_amb: &LinearOperator) -> Result<LinearOperator> {
    let [p2, p0] = slot_projectors()?;
    let b = intertwiners();
    let two = qint(2);
    let y = x_amb.add(&a_amb.add(b_amb)?.scale(&two.inv()?))?;
    let block = LinearOperator::chain(&[&p2.kron(&p0), &y, &p0.kron(&p2)])?;
    let c_map = LinearOperator::chain(&[&id(&gt()).kron(&b.eps1), &block, &b.delta1.kron(&id(&gt()))])?;
    let expect = p2.scale(&-(FieldElement::q_pow(3) + FieldElement::q_pow(-3)));
    c_map.sub(&expect)
}

// ---- the identity relating r(g_q) and the bracket ----

/// `(q²+q⁻²−1)[,]([,]⊗1) − [,](1⊗[,])(1 − r⊗1)` on `g_q⊗g_q⊗g_q`, with `r`
/// the `g⊗g → g⊗g` block of the `n = 2` module family.
pub fn bracket_identity_sides(m2: &ModuleFamily) -> Result<(LinearOperator, LinearOperator)> {
    let [p2, _] = slot_projectors()?;
    let br = bracket_ambient()?;
    let x = m2.ambient(&m2.fam.x)?;
    let pp = p2.kron(&p2);
    let r = LinearOperator::chain(&[&pp, &x, &pp])?;
    let p3 = pp.kron(&p2);
    let c = FieldElement::q_pow(2) + FieldElement::q_pow(-2) - FieldElement::one();
    let lhs = LinearOperator::chain(&[&br, &br.kron(&p2), &p3])?.scale(&c);
    let inner = p3.sub(&r.kron(&p2).compose(&p3)?)?;
    let rhs = LinearOperator::chain(&[&br, &p2.kron(&br), &inner])?;
    Ok((lhs, rhs))
}

/// At `v = 1` both sides of the bracket identity agree with the classical
/// `[[x,y],z]` transported by the frame.
pub fn bracket_identity_classical_residual(m2: &ModuleFamily) -> Result<LinearOperator> {
    let (lhs, _) = bracket_identity_sides(m2)?;
    let g = sl2();
    let phi_full = classical_frame_adjoint();
    // restrict the frame to g (drop the unit column)
    let phi = LinearOperator::from_fn(gt(), g.algebra_space(), |i, j| phi_full.get(i, j));
    let br = g.bracket_operator();
    let ig = id(&g.algebra_space());
    let cl = br.compose(&br.kron(&ig))?;
    let phi3 = phi.kron(&phi).kron(&phi);
    lhs.at_q_one()?.compose(&phi3)?.sub(&phi.compose(&cl)?)
}

// ---- synthesis ----

/// Seeded rational points `(v, λ, 0)` for screening, avoiding `v ∈ {0, ±1}`.
pub fn sample_points(seed: u64, count: usize) -> Vec<[BigRational; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = BigRational::new(rng.gen_range(2i64..=9).into(), rng.gen_range(1i64..=5).into());
        if v.is_one() {
            continue;
        }
        let lam = BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into());
        out.push([v, lam, BigRational::zero()]);
    }
    out
}

/// One screening verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScreenRecord {
    pub pattern: String,
    pub verdict: String,
}

fn eval_all(op: &LinearOperator, pts: &[[BigRational; 3]]) -> Vec<LinearOperator> {
    pts.iter().filter_map(|p| op.eval_at(p)).collect()
}

#[derive(Clone, Debug)]
pub struct SynthesisResult {
    pub adjoint: QuantumFamily,
    pub primed: QuantumFamily,
    /// Every certified `(R, R')` pair in deterministic order; the first one is
    /// canonical.
    pub certified: Vec<(QuantumFamily, QuantumFamily)>,
    pub screened: Vec<ScreenRecord>,
    pub certificate: BTreeMap<String, String>,
    pub seed: u64,
    pub catalog_depth: usize,
}

/// Crossing patterns with at most `depth` negative crossings, fewest
/// negatives first.
pub fn adjoint_patterns(depth: usize) -> Vec<[bool; 4]> {
    let mut out: Vec<[bool; 4]> = (0..16u32)
        .map(|m| [m & 8 == 0, m & 4 == 0, m & 2 == 0, m & 1 == 0])
        .filter(|s| s.iter().filter(|&&b| !b).count() <= depth)
        .collect();
    out.sort_by_key(|s| (s.iter().filter(|&&b| !b).count(), s.map(|b| !b)));
    out
}

struct Candidate {
    fam: QuantumFamily,
    primed: bool,
    cleared_points: Vec<LinearOperator>,
}

/// Screens one pattern. Returns the candidate (and whether it degenerates
/// to the primed classical family) or the reason it was rejected.
fn screen_adjoint(signs: [bool; 4], pts: &[[BigRational; 3]]) -> std::result::Result<Candidate, String> {
    let label = signs_label(&signs);
    let x = braid_operator(&pair_pattern(signs)).map_err(|e| e.to_string())?;
    let fam = QuantumFamily::from_pair_operator(x, label).map_err(|e| match e {
        Error::Synthesis(m) => m,
        e => e.to_string(),
    })?;
    if !fam.a().at_q_one().map(|m| m.is_zero()).unwrap_or(false) {
        return Err("λ-term does not vanish at q = 1".into());
    }
    // C3: classical degeneration selects the unprimed or primed type
    let unprimed = adjoint_limit_residual(&fam, false).map(|r| r.is_zero()).unwrap_or(false);
    let primed = adjoint_limit_residual(&fam, true).map(|r| r.is_zero()).unwrap_or(false);
    if !unprimed && !primed {
        return Err("classical degeneration does not match R(μ) or R(μ)'".into());
    }
    // C4: anchors for the unprimed family
    if unprimed {
        let a_ok = anchor_a_residual(&fam.a()).map(|r| r.is_zero()).unwrap_or(false);
        let c_ok = anchor_c_residual(&fam.x, &fam.a(), &fam.b()).map(|r| r.is_zero()).unwrap_or(false);
        if !(a_ok && c_ok) {
            return Err("anchor normalization fails".into());
        }
    }
    // C1 at rational points
    let cleared = fam.cleared().map_err(|e| e.to_string())?;
    let cleared_points = eval_all(&cleared, pts);
    if cleared_points.len() < 3 {
        return Err("too few pole-free screening points".into());
    }
    for t in &cleared_points {
        if !ybe_residual(t).map(|r| r.is_zero()).unwrap_or(false) {
            return Err("YBE fails at a screening point".into());
        }
    }
    Ok(Candidate { fam, primed: primed && !unprimed, cleared_points })
}

/// Synthesizes the adjoint pair `(R^q, R^q')`.
pub fn synthesize_adjoint_family(catalog_depth: usize, seed: u64) -> Result<SynthesisResult> {
    let pts = sample_points(seed, 4);
    let patterns = adjoint_patterns(catalog_depth);
    let results: Vec<([bool; 4], std::result::Result<Candidate, String>)> =
        patterns.par_iter().map(|&s| (s, screen_adjoint(s, &pts))).collect();
    let mut screened = Vec::new();
    let mut unprimed = Vec::new();
    let mut primed = Vec::new();
    for (s, r) in results {
        let pattern = signs_label(&s);
        match r {
            Ok(c) => {
                screened.push(ScreenRecord {
                    pattern,
                    verdict: if c.primed { "survives (primed type)".into() } else { "survives".into() },
                });
                if c.primed {
                    primed.push(c);
                } else {
                    unprimed.push(c);
                }
            }
            Err(why) => screened.push(ScreenRecord { pattern, verdict: why }),
        }
    }
    // C2 pairing at the screening points, then full symbolic certification
    let scale2 = {
        let d = lambda_denominator();
        d.clone() * d
    };
    let mut certified = Vec::new();
    let mut certificate = BTreeMap::new();
    for r in &unprimed {
        for rp in &primed {
            let paired = r.cleared_points.iter().zip(&rp.cleared_points).zip(&pts).all(|((a, b), p)| {
                let s = scale2.eval(p).map(|x| FieldElement::from_rational(&x));
                match s {
                    Some(s) => inverse_residuals(a, b, &s).map(|[x, y]| x.is_zero() && y.is_zero()).unwrap_or(false),
                    None => false,
                }
            });
            if !paired {
                continue;
            }
            let cert = certify_adjoint(&r.fam, &rp.fam)?;
            if cert.values().all(|v| v == "zero") {
                if certified.is_empty() {
                    certificate = cert;
                }
                certified.push((r.fam.clone(), rp.fam.clone()));
            }
        }
    }
    let (adjoint, primed_fam) = certified.first().cloned().ok_or_else(|| {
        Error::Synthesis(format!(
            "no certified family among {} patterns at catalog depth {catalog_depth}",
            patterns.len()
        ))
    })?;
    Ok(SynthesisResult {
        adjoint,
        primed: primed_fam,
        certified,
        screened,
        certificate,
        seed,
        catalog_depth,
    })
}

/// The full symbolic certificate for an adjoint pair.
pub fn certify_adjoint(r: &QuantumFamily, rp: &QuantumFamily) -> Result<BTreeMap<String, String>> {
    let t = r.cleared()?;
    let tp = rp.cleared()?;
    let d = lambda_denominator();
    let jobs: Vec<(&str, Box<dyn Fn() -> Result<String> + Sync + Send>)> = vec![
        ("inverse", Box::new(|| {
            let [a, b] = inverse_residuals(&t, &tp, &(d.clone() * &d))?;
            Ok(if a.is_zero() { b.residual_summary() } else { a.residual_summary() })
        })),
        ("ybe", Box::new(|| Ok(ybe_residual(&t)?.residual_summary()))),
        ("ybe-primed", Box::new(|| Ok(ybe_residual(&tp)?.residual_summary()))),
        ("limit", Box::new(|| Ok(adjoint_limit_residual(r, false)?.residual_summary()))),
        ("limit-primed", Box::new(|| Ok(adjoint_limit_residual(rp, true)?.residual_summary()))),
        ("anchor-a", Box::new(|| Ok(anchor_a_residual(&r.a())?.residual_summary()))),
        ("anchor-c", Box::new(|| Ok(anchor_c_residual(&r.x, &r.a(), &r.b())?.residual_summary()))),
    ];
    let out: Vec<(String, String)> = jobs
        .par_iter()
        .map(|(k, f)| (k.to_string(), f().unwrap_or_else(|e| format!("error: {e}"))))
        .collect();
    Ok(out.into_iter().collect())
}

/// Module candidates: `a` and `b` each cross all of `V_n` with one sign.
pub fn module_patterns(n: usize) -> Vec<(Vec<bool>, Vec<bool>)> {
    let mut out = Vec::new();
    for sa in [true, false] {
        for sb in [true, false] {
            out.push((vec![sa; n], vec![sb; n]));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct ModuleSynthesis {
    pub family: ModuleFamily,
    pub certified_patterns: Vec<String>,
    pub screened: Vec<ScreenRecord>,
    pub hom_dim: usize,
    pub certificate: BTreeMap<String, String>,
}

/// Dimension of the equivariant maps `g~⊗V_n → V_n⊗g~`.
pub fn module_hom_dim(n: usize) -> Result<usize> {
    let g = Rep::v1_pow(2, coproduct());
    let vn = &qmodule(n)?.rep;
    let hom = crate::uqsl2::hom_space(&g.tensor(vn, coproduct()), &vn.tensor(&g, coproduct()))?;
    Ok(hom.len())
}

/// Synthesizes `R^q_{V_n}` against a certified adjoint family.
pub fn synthesize_module_family(n: usize, adjoint: &QuantumFamily, seed: u64) -> Result<ModuleSynthesis> {
    if n == 0 || n > 3 {
        return Err(Error::BadInput(format!("module families are built for 1 ≤ n ≤ 3, not {n}")));
    }
    let hom_dim = module_hom_dim(n)?;
    let pts = sample_points(seed ^ (n as u64), 3);
    let adj = adjoint.cleared()?;
    let adj_pts = eval_all(&adj, &pts);
    let mut screened = Vec::new();
    let mut survivors = Vec::new();
    for (sa, sb) in module_patterns(n) {
        let label = format!("a{}b{}", signs_label(&sa), signs_label(&sb));
        let verdict = (|| -> Result<std::result::Result<ModuleFamily, String>> {
            let m = ModuleFamily::from_pattern(n, &sa, &sb)?;
            let (rin, rout) = m.reps()?;
            for op in [&m.fam.x, &m.fam.a0, &m.fam.b0] {
                if !defect_is_zero(&equivariance_defect(op, &rin, &rout)?) {
                    return Ok(Err("not an intertwiner".into()));
                }
            }
            if !module_limit_residual(&m, 2)?.is_zero() {
                return Ok(Err("classical degeneration does not match R_V(μ)".into()));
            }
            if n == 2 {
                let a_ok = anchor_a_residual(&m.ambient(&m.fam.a())?)?.is_zero();
                let c_ok = anchor_c_residual(&m.ambient(&m.fam.x)?, &m.ambient(&m.fam.a())?, &m.ambient(&m.fam.b())?)?
                    .is_zero();
                if !(a_ok && c_ok) {
                    return Ok(Err("anchor normalization fails".into()));
                }
            }
            let cleared = m.fam.cleared()?;
            for (p, a) in pts.iter().zip(&adj_pts) {
                let Some(t) = cleared.eval_at(p) else { continue };
                let sol = ModuleSolution { label: String::new(), space: m.space(), cleared: t, degree: 1 };
                if !module_relation_residual(a, &sol)?.is_zero() {
                    return Ok(Err("module relation fails at a screening point".into()));
                }
            }
            Ok(Ok(m))
        })();
        match verdict {
            Ok(Ok(m)) => {
                screened.push(ScreenRecord { pattern: label, verdict: "survives".into() });
                survivors.push(m);
            }
            Ok(Err(why)) => screened.push(ScreenRecord { pattern: label, verdict: why }),
            Err(e) => screened.push(ScreenRecord { pattern: label, verdict: format!("error: {e}") }),
        }
    }
    let mut certified = Vec::new();
    let mut certificate = BTreeMap::new();
    for m in survivors {
        let res = module_relation_residual(&adj, &ModuleSolution::from_family(&m)?)?;
        if res.is_zero() {
            if certified.is_empty() {
                certificate.insert("module-relation".to_string(), "zero".to_string());
                certificate.insert("limit-2".to_string(), module_limit_residual(&m, 2)?.residual_summary());
            }
            certified.push(m);
        }
    }
    let certified_patterns = certified.iter().map(|m| m.fam.pattern.clone()).collect();
    let family = certified
        .into_iter()
        .next()
        .ok_or_else(|| Error::Synthesis(format!("no certified module family for V{n}")))?;
    Ok(ModuleSynthesis { family, certified_patterns, screened, hom_dim, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_order() {
        let p = adjoint_patterns(1);
        assert_eq!(p.len(), 5);
        assert_eq!(p[0], [true; 4]);
    }

    #[test]
    fn all_positive_cable_preserves_grading() {
        let x = braid_operator(&pair_pattern([true; 4])).unwrap();
        let parts = pair_grading(&x).unwrap();
        assert!(parts[&1].is_zero() && parts[&-1].is_zero());
    }

    #[test]
    fn certified_pattern_has_the_anchors() {
        let fam = QuantumFamily::from_pair_operator(
            braid_operator(&pair_pattern([true, true, false, false])).unwrap(),
            "++--".into(),
        )
        .unwrap();
        assert!(anchor_a_residual(&fam.a()).unwrap().is_zero());
        assert!(anchor_c_residual(&fam.x, &fam.a(), &fam.b()).unwrap().is_zero());
        assert!(adjoint_limit_residual(&fam, false).unwrap().is_zero());
    }

    #[test]
    fn boxed_reassembles() {
        let fam = QuantumFamily::from_pair_operator(
            braid_operator(&pair_pattern([true, true, false, false])).unwrap(),
            "++--".into(),
        )
        .unwrap();
        assert_eq!(fam.boxed().unwrap().assemble().unwrap(), fam.assemble().unwrap());
    }

    #[test]
    fn pole_at_inverse_of_two() {
        let fam = QuantumFamily::from_pair_operator(
            braid_operator(&pair_pattern([true, true, false, false])).unwrap(),
            "++--".into(),
        )
        .unwrap();
        let bad = qint(2).inv().unwrap();
        assert!(matches!(fam.assemble_at(&bad), Err(Error::Pole { .. })));
        assert_eq!(fam.assemble_at(&FieldElement::zero()).unwrap(), fam.x);
    }

    #[test]
    fn frames_are_invertible() {
        assert_eq!(classical_frame_adjoint().rank(), 4);
        for n in 1..=3 {
            assert_eq!(classical_frame_module(n).unwrap().rank(), n + 1);
        }
    }
}
