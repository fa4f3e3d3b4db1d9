//! The quantum group action on `V1` and its tensor powers, the basic
//! intertwiners, the modules `V_n` as Jones-Wenzl images, cabled braidings
//! and the quantum bracket.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::diagrams::{jones_wenzl, CrossingDiagram, PlanarDiagram, Regime};
use crate::error::{Error, Result};
use crate::field::{qint, FieldElement};
use crate::linalg::{self, SparseRow};
use crate::tensor::{restrict, Factor, ImageBasis, LinearOperator, Space};

#[derive(Clone, Debug)]
pub struct BasicIntertwiners {
    pub eps1: LinearOperator,
    pub delta1: LinearOperator,
    pub rhat: LinearOperator,
    pub rhat_inv: LinearOperator,
}

/// `ε₁`, `δ₁`, `Ř₁₁ = v·δ₁ε₁ + v⁻¹·I` and its inverse. The inverse is computed
/// by elimination and checked against `v⁻¹·δ₁ε₁ + v·I`.
pub fn basic_intertwiners() -> Result<BasicIntertwiners> {
    let eps1 = PlanarDiagram::new(2, 0, vec![(1, 2)])?.evaluate(Regime::Quantum);
    let delta1 = PlanarDiagram::new(0, 2, vec![(1, 2)])?.evaluate(Regime::Quantum);
    let e = delta1.compose(&eps1)?;
    let id = LinearOperator::identity(Space::v1_pow(2));
    let rhat = e.scale(&FieldElement::v()).add(&id.scale(&FieldElement::v_pow(-1)))?;
    let rhat_inv = rhat.inverse()?;
    let expect = e.scale(&FieldElement::v_pow(-1)).add(&id.scale(&FieldElement::v()))?;
    if rhat_inv != expect {
        return Err(Error::Consistency(format!(
            "inverse braiding differs from the skein form: {}",
            rhat_inv.sub(&expect)?.residual_summary()
        )));
    }
    Ok(BasicIntertwiners { eps1, delta1, rhat, rhat_inv })
}

pub fn intertwiners() -> &'static BasicIntertwiners {
    static CELL: OnceLock<BasicIntertwiners> = OnceLock::new();
    CELL.get_or_init(|| basic_intertwiners().expect("basic intertwiners are consistent"))
}

/// The two standard coproducts on the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coproduct {
    /// `Δ(E) = E⊗K + 1⊗E`, `Δ(F) = F⊗1 + K⁻¹⊗F`.
    Standard,
    /// `Δ(E) = E⊗1 + K⊗E`, `Δ(F) = F⊗K⁻¹ + 1⊗F`.
    Mirrored,
}

/// Generators `E, F, K, K⁻¹` acting on a labelled space.
#[derive(Clone, Debug)]
pub struct Rep {
    pub space: Space,
    pub e: LinearOperator,
    pub f: LinearOperator,
    pub k: LinearOperator,
    pub kinv: LinearOperator,
}

impl Rep {
    pub fn v1() -> Rep {
        let s = Space::v1_pow(1);
        let one = FieldElement::one;
        let z = FieldElement::zero;
        let e = LinearOperator::from_fn(s.clone(), s.clone(), |i, j| if (i, j) == (0, 1) { one() } else { z() });
        let f = LinearOperator::from_fn(s.clone(), s.clone(), |i, j| if (i, j) == (1, 0) { one() } else { z() });
        let diag = |a: i64| {
            LinearOperator::from_fn(s.clone(), s.clone(), move |i, j| match (i, j) {
                (0, 0) => FieldElement::q_pow(a),
                (1, 1) => FieldElement::q_pow(-a),
                _ => FieldElement::zero(),
            })
        };
        Rep { space: s.clone(), e, f, k: diag(1), kinv: diag(-1) }
    }

    pub fn trivial() -> Rep {
        let s = Space::unit();
        let z = LinearOperator::zero(s.clone(), s.clone());
        let id = LinearOperator::identity(s.clone());
        Rep { space: s, e: z.clone(), f: z, k: id.clone(), kinv: id }
    }

    pub fn tensor(&self, o: &Rep, cop: Coproduct) -> Rep {
        let ia = LinearOperator::identity(self.space.clone());
        let ib = LinearOperator::identity(o.space.clone());
        let sum = |x: LinearOperator, y: LinearOperator| x.add(&y).expect("same shape");
        let (e, f) = match cop {
            Coproduct::Standard => (
                sum(self.e.kron(&o.k), ia.kron(&o.e)),
                sum(self.f.kron(&ib), self.kinv.kron(&o.f)),
            ),
            Coproduct::Mirrored => (
                sum(self.e.kron(&ib), self.k.kron(&o.e)),
                sum(self.f.kron(&o.kinv), ia.kron(&o.f)),
            ),
        };
        Rep { space: self.space.tensor(&o.space), e, f, k: self.k.kron(&o.k), kinv: self.kinv.kron(&o.kinv) }
    }

    pub fn v1_pow(n: usize, cop: Coproduct) -> Rep {
        let mut r = Rep::trivial();
        for _ in 0..n {
            r = r.tensor(&Rep::v1(), cop);
        }
        r
    }

    /// The action on an invariant subspace.
    pub fn restrict(&self, b: &ImageBasis) -> Result<Rep> {
        Ok(Rep {
            space: b.space().clone(),
            e: restrict(&self.e, b, b)?,
            f: restrict(&self.f, b, b)?,
            k: restrict(&self.k, b, b)?,
            kinv: restrict(&self.kinv, b, b)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Residuals of `KE = q²EK`, `KF = q⁻²FK`, `EF − FE = (K−K⁻¹)/(q−q⁻¹)`
    /// and `KK⁻¹ = 1`.
    pub fn relation_defects(&self) -> Result<Vec<(&'static str, LinearOperator)>> {
        let q2 = FieldElement::q_pow(2);
        let qm2 = FieldElement::q_pow(-2);
        let ke = self.k.compose(&self.e)?.sub(&self.e.compose(&self.k)?.scale(&q2))?;
        let kf = self.k.compose(&self.f)?.sub(&self.f.compose(&self.k)?.scale(&qm2))?;
        let denom = (FieldElement::q() - FieldElement::q_pow(-1)).inv()?;
        let ef = self
            .e
            .compose(&self.f)?
            .sub(&self.f.compose(&self.e)?)?
            .sub(&self.k.sub(&self.kinv)?.scale(&denom))?;
        let kk = self.k.compose(&self.kinv)?.sub(&LinearOperator::identity(self.space.clone()))?;
        Ok(vec![("KE", ke), ("KF", kf), ("EF", ef), ("KKinv", kk)])
    }

    fn k_diagonal(&self) -> Option<Vec<FieldElement>> {
        let mut d = Vec::with_capacity(self.dim());
        for (i, r) in self.k.rows().iter().enumerate() {
            match r.as_slice() {
                [(j, x)] if *j == i => d.push(x.clone()),
                _ => return None,
            }
        }
        Some(d)
    }
}

/// `op ∘ g_in − g_out ∘ op` for `g ∈ {E, F, K}`.
pub fn equivariance_defect(op: &LinearOperator, rep_in: &Rep, rep_out: &Rep) -> Result<Vec<(&'static str, LinearOperator)>> {
    let mut out = Vec::new();
    for (name, a, b) in [("E", &rep_in.e, &rep_out.e), ("F", &rep_in.f, &rep_out.f), ("K", &rep_in.k, &rep_out.k)] {
        out.push((name, op.compose(a)?.sub(&b.compose(op)?)?));
    }
    Ok(out)
}

pub fn defect_is_zero(d: &[(&'static str, LinearOperator)]) -> bool {
    d.iter().all(|(_, m)| m.is_zero())
}

pub fn defect_summary(d: &[(&'static str, LinearOperator)]) -> String {
    match d.iter().find(|(_, m)| !m.is_zero()) {
        None => "zero".into(),
        Some((g, m)) => format!("{g}: {}", m.residual_summary()),
    }
}

/// Screens both standard coproducts against the equivariance of `ε₁` and
/// `δ₁`; exactly one must pass.
pub fn select_coproduct() -> Result<Coproduct> {
    let b = intertwiners();
    let mut passing = Vec::new();
    for cop in [Coproduct::Standard, Coproduct::Mirrored] {
        let v2 = Rep::v1_pow(2, cop);
        let unit = Rep::trivial();
        let ok = defect_is_zero(&equivariance_defect(&b.eps1, &v2, &unit)?)
            && defect_is_zero(&equivariance_defect(&b.delta1, &unit, &v2)?);
        if ok {
            passing.push(cop);
        }
    }
    match passing.as_slice() {
        [c] => Ok(*c),
        [] => Err(Error::Convention("neither coproduct makes ε₁ and δ₁ equivariant".into())),
        _ => Err(Error::Convention("both coproducts make ε₁ and δ₁ equivariant".into())),
    }
}

pub fn coproduct() -> Coproduct {
    static CELL: OnceLock<Coproduct> = OnceLock::new();
    *CELL.get_or_init(|| select_coproduct().expect("coproduct screen"))
}

/// The action on `V1^⊗n` under the selected coproduct.
pub fn uq_action(n: usize) -> Result<Rep> {
    if n == 0 {
        return Err(Error::BadInput("uq_action needs at least one strand".into()));
    }
    Ok(Rep::v1_pow(n, coproduct()))
}

/// Equivariance defect of an operator `V1^⊗n_in → V1^⊗n_out`.
pub fn equivariance_defect_strands(op: &LinearOperator, n_in: usize, n_out: usize) -> Result<Vec<(&'static str, LinearOperator)>> {
    if op.domain() != &Space::v1_pow(n_in) || op.codomain() != &Space::v1_pow(n_out) {
        return Err(Error::Shape(format!(
            "operator {}→{} is not V1^{n_in}→V1^{n_out}",
            op.domain(),
            op.codomain()
        )));
    }
    let cop = coproduct();
    equivariance_defect(op, &Rep::v1_pow(n_in, cop), &Rep::v1_pow(n_out, cop))
}

/// `V_n` realized as the image of `p_n` inside `V1^⊗n`.
#[derive(Clone, Debug)]
pub struct QModule {
    pub n: usize,
    pub ambient: Space,
    pub projector: LinearOperator,
    pub basis: ImageBasis,
    pub rep: Rep,
    pub ambient_rep: Rep,
}

impl QModule {
    pub fn build(n: usize) -> Result<QModule> {
        let ambient = Space::v1_pow(n);
        let projector = jones_wenzl(n, Regime::Quantum)?.evaluate();
        let basis = ImageBasis::of_idempotent(&projector, &format!("V{n}"))?;
        let ambient_rep = Rep::v1_pow(n, coproduct());
        let rep = ambient_rep.restrict(&basis)?;
        Ok(QModule { n, ambient, projector, basis, rep, ambient_rep })
    }

    pub fn space(&self) -> &Space {
        self.basis.space()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

pub const MAX_MODULE: usize = 4;

/// Cached `V_n`, `n ≤ 4`.
pub fn qmodule(n: usize) -> Result<&'static QModule> {
    static CACHE: [OnceLock<QModule>; MAX_MODULE + 1] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    if n > MAX_MODULE {
        return Err(Error::BadInput(format!("V{n} is beyond the supported range (n ≤ {MAX_MODULE})")));
    }
    if let Some(m) = CACHE[n].get() {
        return Ok(m);
    }
    let m = QModule::build(n)?;
    let _ = CACHE[n].set(m);
    Ok(CACHE[n].get().expect("just set"))
}

/// Product of placed `Ř₁₁^{±1}` operators, one per crossing.
pub fn braid_operator(cd: &CrossingDiagram) -> Result<LinearOperator> {
    let b = intertwiners();
    let mut acc = LinearOperator::identity(Space::v1_pow(cd.strands));
    for c in &cd.crossings {
        let local = if c.positive { &b.rhat } else { &b.rhat_inv };
        acc = local.strand_place(c.pos, cd.strands)?.compose(&acc)?;
    }
    Ok(acc)
}

/// The all-positive cable of `V_m` past `V_n` on the ambient strands,
/// sandwiched between Jones-Wenzl projectors.
pub fn cabled_braiding_ambient(m: usize, n: usize) -> Result<LinearOperator> {
    let (vm, vn) = (qmodule(m)?, qmodule(n)?);
    let x = braid_operator(&CrossingDiagram::cable(m, n, true))?;
    let pin = vm.projector.kron(&vn.projector);
    let pout = vn.projector.kron(&vm.projector);
    LinearOperator::chain(&[&pout, &x, &pin])
}

/// `Ř(V_m⊗V_n): V_m⊗V_n → V_n⊗V_m` on the Jones-Wenzl images.
pub fn cabled_braiding(m: usize, n: usize) -> Result<LinearOperator> {
    if m == 0 || n == 0 || m > MAX_MODULE || n > MAX_MODULE || m + n > 6 {
        return Err(Error::BadInput(format!("cable {m}×{n} is out of range")));
    }
    let (vm, vn) = (qmodule(m)?, qmodule(n)?);
    let x = braid_operator(&CrossingDiagram::cable(m, n, true))?;
    restrict(&x, &vm.basis.kron(&vn.basis), &vn.basis.kron(&vm.basis))
}

/// `p₂ ∘ (1⊗ε₁⊗1) ∘ (p₂⊗p₂)` on the ambient strands.
pub fn bracket_ambient() -> Result<LinearOperator> {
    let p2 = &qmodule(2)?.projector;
    let cap = intertwiners().eps1.place_in(2, &Space::v1_pow(4))?;
    LinearOperator::chain(&[p2, &cap, &p2.kron(p2)])
}

/// The quantum bracket `V2⊗V2 → V2`, checked nonzero and unique up to scalar.
pub fn quantum_bracket() -> Result<LinearOperator> {
    let v2 = qmodule(2)?;
    let amb = bracket_ambient()?;
    let br = restrict(&amb, &v2.basis.kron(&v2.basis), &v2.basis)?;
    if br.is_zero() {
        return Err(Error::Consistency("quantum bracket vanishes".into()));
    }
    let hom = hom_space(&v2.rep.tensor(&v2.rep, coproduct()), &v2.rep)?;
    if hom.len() != 1 {
        return Err(Error::Consistency(format!("Hom(V2⊗V2, V2) has dimension {}", hom.len())));
    }
    Ok(br)
}

/// A basis of the equivariant maps `rep_in → rep_out`, by exact kernel
/// computation of the commutation system.
pub fn hom_space(rep_in: &Rep, rep_out: &Rep) -> Result<Vec<LinearOperator>> {
    let (n_in, n_out) = (rep_in.dim(), rep_out.dim());
    let diag = match (rep_in.k_diagonal(), rep_out.k_diagonal()) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    };
    let mut unknowns: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..n_out {
        for j in 0..n_in {
            if let Some((ki, ko)) = &diag {
                if ko[i] != ki[j] {
                    continue;
                }
            }
            let k = unknowns.len();
            unknowns.insert((i, j), k);
        }
    }
    let mut gens = vec![(&rep_in.e, &rep_out.e), (&rep_in.f, &rep_out.f)];
    if diag.is_none() {
        gens.push((&rep_in.k, &rep_out.k));
    }
    let mut eqs: BTreeMap<(usize, usize, usize), SparseRow> = BTreeMap::new();
    for (g, (gin, gout)) in gens.iter().enumerate() {
        // (X·g_in)[i][j] = Σ_k X[i][k] g_in[k][j]
        for (&(i, k), &u) in &unknowns {
            for (j, x) in gin.row(k) {
                eqs.entry((g, i, *j)).or_default().push((u, x.clone()));
            }
        }
        // (g_out·X)[i][j] = Σ_k g_out[i][k] X[k][j]
        for i in 0..n_out {
            for (k, x) in gout.row(i) {
                for j in 0..n_in {
                    if let Some(&u) = unknowns.get(&(*k, j)) {
                        eqs.entry((g, i, j)).or_default().push((u, x.neg()));
                    }
                }
            }
        }
    }
    let ns = linalg::nullspace(eqs.into_values().collect(), unknowns.len());
    let by_index: Vec<(usize, usize)> = unknowns.keys().copied().collect();
    ns.into_iter()
        .map(|v| {
            LinearOperator::from_triplets(
                rep_out.space.clone(),
                rep_in.space.clone(),
                v.into_iter().map(|(u, x)| (by_index[u].0, by_index[u].1, x)),
            )
        })
        .collect()
}

/// Multiplicities of `V_0..=V_max` in a representation, read off from
/// `dim Hom(V_k, rep)`.
pub fn isotypic_multiplicities(rep: &Rep, max: usize) -> Result<Vec<usize>> {
    (0..=max)
        .map(|k| {
            let vk = if k == 0 { Rep::trivial() } else { qmodule(k)?.rep.clone() };
            Ok(hom_space(&vk, rep)?.len())
        })
        .collect()
}

/// The `V_n` factor label used in module spaces.
pub fn module_factor(n: usize) -> Factor {
    Factor::new(format!("V{n}"), n + 1)
}

/// `[n]` re-exported for callers building coefficient functions.
pub fn quantum_integer(n: u32) -> FieldElement {
    qint(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_and_rows() {
        let b = intertwiners();
        let l = b.eps1.compose(&b.delta1).unwrap();
        assert_eq!(l.get(0, 0), -qint(2));
        assert_eq!(b.eps1.get(0, 1), -FieldElement::q());
        assert_eq!(b.delta1.get(2, 0), -FieldElement::q_pow(-1));
    }

    #[test]
    fn coproduct_screen_picks_standard() {
        assert_eq!(select_coproduct().unwrap(), Coproduct::Standard);
    }

    #[test]
    fn relations_hold_on_tensor_powers() {
        for n in 1..=3 {
            for (name, d) in uq_action(n).unwrap().relation_defects().unwrap() {
                assert!(d.is_zero(), "{name} on {n} strands");
            }
        }
    }

    #[test]
    fn flip_is_not_an_intertwiner() {
        let s = LinearOperator::swap(&Space::v1_pow(1), &Space::v1_pow(1));
        assert!(!defect_is_zero(&equivariance_defect_strands(&s, 2, 2).unwrap()));
        let r = &intertwiners().rhat;
        assert!(defect_is_zero(&equivariance_defect_strands(r, 2, 2).unwrap()));
    }

    #[test]
    fn module_dimensions() {
        for n in 1..=3 {
            assert_eq!(qmodule(n).unwrap().dim(), n + 1);
        }
    }

    #[test]
    fn cable_one_one_is_rhat() {
        assert_eq!(cabled_braiding(1, 1).unwrap(), intertwiners().rhat);
    }

    #[test]
    fn bracket_is_unique() {
        assert!(!quantum_bracket().unwrap().is_zero());
    }
}
