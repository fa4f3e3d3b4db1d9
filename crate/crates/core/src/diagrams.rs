//! Planar (Temperley-Lieb) diagrams, skein resolution of crossings,
//! Jones-Wenzl idempotents and evaluation to operators on `V1^⊗n`.
//!
//! Boundary points are numbered `1..=top` along the top (left to right) and
//! `top+1..=top+bottom` along the bottom (left to right). The top boundary is
//! the domain: a pair of top points evaluates to the cap `ε₁`, a pair of
//! bottom points to the cup `δ₁`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg;
use crate::tensor::{LinearOperator, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Quantum,
    Classical,
}

impl Regime {
    /// `ε₁` as the row `(ε(v¹v¹), ε(v¹v⁻¹), ε(v⁻¹v¹), ε(v⁻¹v⁻¹))`.
    pub fn cap_entries(self) -> [FieldElement; 4] {
        match self {
            Regime::Quantum => [FieldElement::zero(), -FieldElement::q(), FieldElement::one(), FieldElement::zero()],
            Regime::Classical => [FieldElement::zero(), FieldElement::from_int(-1), FieldElement::one(), FieldElement::zero()],
        }
    }

    /// `δ₁ = v¹⊗v⁻¹ − q⁻¹ v⁻¹⊗v¹` as a column.
    pub fn cup_entries(self) -> [FieldElement; 4] {
        match self {
            Regime::Quantum => [FieldElement::zero(), FieldElement::one(), -FieldElement::q_pow(-1), FieldElement::zero()],
            Regime::Classical => [FieldElement::zero(), FieldElement::one(), FieldElement::from_int(-1), FieldElement::zero()],
        }
    }

    /// Value of a closed loop, `ε₁ ∘ δ₁`.
    pub fn loop_value(self) -> FieldElement {
        let cap = self.cap_entries();
        let cup = self.cup_entries();
        cap.iter().zip(cup.iter()).fold(FieldElement::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Coefficients `(of e, of id)` in the resolution of a crossing.
    pub fn crossing_coeffs(self, positive: bool) -> (FieldElement, FieldElement) {
        match (self, positive) {
            (Regime::Quantum, true) => (FieldElement::v(), FieldElement::v_pow(-1)),
            (Regime::Quantum, false) => (FieldElement::v_pow(-1), FieldElement::v()),
            (Regime::Classical, _) => (FieldElement::one(), FieldElement::one()),
        }
    }
}

/// A planar matching between `top` and `bottom` boundary points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    top: usize,
    bottom: usize,
    pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub top: usize,
    pub bottom: usize,
    pub pairs: Vec<(usize, usize)>,
    #[serde(default)]
    pub crossings: Vec<(usize, String)>,
}

impl PlanarDiagram {
    pub fn new(top: usize, bottom: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let total = top + bottom;
        if total % 2 != 0 {
            return Err(Error::Shape(format!("{top}+{bottom} boundary points cannot be matched")));
        }
        let mut seen = vec![false; total + 1];
        let mut norm = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            if a == 0 || b > total || a == b || seen[a] || seen[b] {
                return Err(Error::BadInput(format!("pair ({a}, {b}) is not part of a perfect matching")));
            }
            seen[a] = true;
            seen[b] = true;
            norm.push((a, b));
        }
        if norm.len() * 2 != total {
            return Err(Error::BadInput("matching is not perfect".into()));
        }
        norm.sort();
        let d = PlanarDiagram { top, bottom, pairs: norm };
        let pos: Vec<(usize, usize)> = d.pairs.iter().map(|&(a, b)| d.circ(a, b)).collect();
        for (i, &(a, b)) in pos.iter().enumerate() {
            for &(c, e) in &pos[i + 1..] {
                let inside = |x: usize| a < x && x < b;
                if inside(c) != inside(e) {
                    return Err(Error::BadInput(format!("pairs cross: {:?} and {:?}", d.pairs[i], (c, e))));
                }
            }
        }
        Ok(d)
    }

    fn circ_pos(&self, p: usize) -> usize {
        if p <= self.top {
            p - 1
        } else {
            self.top + self.bottom - (p - self.top)
        }
    }

    fn circ(&self, a: usize, b: usize) -> (usize, usize) {
        let (x, y) = (self.circ_pos(a), self.circ_pos(b));
        (x.min(y), x.max(y))
    }

    fn label_of_pos(top: usize, bottom: usize, pos: usize) -> usize {
        if pos < top {
            pos + 1
        } else {
            top + (bottom - (pos - top))
        }
    }

    pub fn identity(n: usize) -> Self {
        PlanarDiagram { top: n, bottom: n, pairs: (1..=n).map(|i| (i, n + i)).collect() }
    }

    /// The generator `e_i` of TL_n (cap and cup on strands `i, i+1`).
    pub fn e(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::Shape(format!("e_{i} is not a generator of TL_{n}")));
        }
        let mut pairs = vec![(i, i + 1), (n + i, n + i + 1)];
        pairs.extend((1..=n).filter(|&j| j != i && j != i + 1).map(|j| (j, n + j)));
        PlanarDiagram::new(n, n, pairs)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn is_identity(&self) -> bool {
        *self == PlanarDiagram::identity(self.top) && self.top == self.bottom
    }

    fn partner(&self) -> Vec<usize> {
        let mut p = vec![0; self.top + self.bottom + 1];
        for &(a, b) in &self.pairs {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    /// `self ∘ g`: `g` is stacked above `self`. Returns the diagram and the
    /// number of closed loops removed.
    pub fn compose(&self, g: &PlanarDiagram) -> Result<(PlanarDiagram, usize)> {
        if self.top != g.bottom {
            return Err(Error::Shape(format!(
                "cannot compose: {} outputs feed {} inputs",
                g.bottom, self.top
            )));
        }
        let (m, k, n) = (g.top, g.bottom, self.bottom);
        let pg = g.partner();
        let pf = self.partner();
        let mut seen_mid = vec![false; k + 1];
        // outer labels: inputs 1..=m, outputs m+1..=m+n
        let mut pairs = Vec::new();
        // walk from a middle point `j` going down into `self`; returns the
        // outer label reached
        let walk_down = |mut j: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                seen[j] = true;
                let t = pf[j];
                if t > k {
                    return m + (t - k);
                }
                seen[t] = true;
                let u = pg[m + t];
                if u <= m {
                    return u;
                }
                j = u - m;
            }
        };
        let walk_up = |mut j: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                seen[j] = true;
                let t = pg[m + j];
                if t <= m {
                    return t;
                }
                let t = t - m;
                seen[t] = true;
                let u = pf[t];
                if u > k {
                    return m + (u - k);
                }
                j = u;
            }
        };
        let mut done = vec![false; m + n + 1];
        for i in 1..=m {
            if done[i] {
                continue;
            }
            let t = pg[i];
            let end = if t <= m { t } else { walk_down(t - m, &mut seen_mid) };
            done[i] = true;
            done[end] = true;
            pairs.push((i, end));
        }
        for o in 1..=n {
            let lab = m + o;
            if done[lab] {
                continue;
            }
            let t = pf[k + o];
            let end = if t > k { m + (t - k) } else { walk_up(t, &mut seen_mid) };
            done[lab] = true;
            done[end] = true;
            pairs.push((lab, end));
        }
        let mut loops = 0;
        for j in 1..=k {
            if seen_mid[j] {
                continue;
            }
            loops += 1;
            let mut cur = j;
            loop {
                seen_mid[cur] = true;
                let t = pf[cur];
                seen_mid[t] = true;
                let u = pg[m + t] - m;
                if seen_mid[u] {
                    break;
                }
                cur = u;
            }
        }
        Ok((PlanarDiagram::new(m, n, pairs)?, loops))
    }

    /// Side-by-side juxtaposition, `self` on the left.
    pub fn tensor(&self, o: &PlanarDiagram) -> PlanarDiagram {
        let (m1, n1, m2, n2) = (self.top, self.bottom, o.top, o.bottom);
        let t = m1 + m2;
        let map1 = |p: usize| if p <= m1 { p } else { t + (p - m1) };
        let map2 = |p: usize| if p <= m2 { m1 + p } else { t + n1 + (p - m2) };
        let mut pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&(a, b)| (map1(a), map1(b))).collect();
        pairs.extend(o.pairs.iter().map(|&(a, b)| (map2(a), map2(b))));
        PlanarDiagram::new(t, n1 + n2, pairs).expect("juxtaposition of planar diagrams is planar")
    }

    /// Evaluates to the operator `V1^⊗top → V1^⊗bottom`.
    pub fn evaluate(&self, regime: Regime) -> LinearOperator {
        let (m, n) = (self.top, self.bottom);
        let cap = regime.cap_entries();
        let cup = regime.cup_entries();
        let mut caps = Vec::new();
        let mut cups = Vec::new();
        let mut through = Vec::new();
        for &(a, b) in &self.pairs {
            match (a <= m, b <= m) {
                (true, true) => caps.push((a - 1, b - 1)),
                (false, false) => cups.push((a - m - 1, b - m - 1)),
                _ => through.push((a - 1, b - m - 1)),
            }
        }
        let bit = |x: usize, len: usize, i: usize| (x >> (len - 1 - i)) & 1;
        let mut trip = Vec::new();
        for x in 0..(1usize << m) {
            let mut c = FieldElement::one();
            for &(i, j) in &caps {
                c = c * &cap[2 * bit(x, m, i) + bit(x, m, j)];
                if c.is_zero() {
                    break;
                }
            }
            if c.is_zero() {
                continue;
            }
            let mut base = 0usize;
            for &(i, o) in &through {
                base |= bit(x, m, i) << (n - 1 - o);
            }
            for choice in 0..(1usize << cups.len()) {
                let mut y = base;
                let mut coeff = c.clone();
                for (t, &(i, j)) in cups.iter().enumerate() {
                    // the two nonzero cup components: (v¹,v⁻¹) and (v⁻¹,v¹)
                    let (bi, bj) = if (choice >> t) & 1 == 0 { (0, 1) } else { (1, 0) };
                    coeff = coeff * &cup[2 * bi + bj];
                    y |= (bi << (n - 1 - i)) | (bj << (n - 1 - j));
                }
                if !coeff.is_zero() {
                    trip.push((y, x, coeff));
                }
            }
        }
        LinearOperator::from_triplets(Space::v1_pow(n), Space::v1_pow(m), trip).expect("indices in range")
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson { top: self.top, bottom: self.bottom, pairs: self.pairs.clone(), crossings: Vec::new() }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        if !j.crossings.is_empty() {
            return Err(Error::UnresolvedCrossings(j.crossings.len()));
        }
        PlanarDiagram::new(j.top, j.bottom, j.pairs.clone())
    }
}

/// All planar `(m, n)` diagrams, sorted by their encoding.
pub fn enumerate_tl(m: usize, n: usize) -> Result<Vec<PlanarDiagram>> {
    if (m + n) % 2 != 0 {
        return Err(Error::Shape(format!("{m}+{n} is odd")));
    }
    fn rec(pts: &[usize], out: &mut Vec<Vec<(usize, usize)>>, acc: &mut Vec<(usize, usize)>) {
        if pts.is_empty() {
            out.push(acc.clone());
            return;
        }
        for k in (1..pts.len()).step_by(2) {
            acc.push((pts[0], pts[k]));
            let mut inner = Vec::new();
            rec(&pts[1..k], &mut inner, &mut Vec::new());
            let mut outer = Vec::new();
            rec(&pts[k + 1..], &mut outer, &mut Vec::new());
            for a in &inner {
                for b in &outer {
                    let mut full = acc.clone();
                    full.extend(a.iter().copied());
                    full.extend(b.iter().copied());
                    out.push(full);
                }
            }
            acc.pop();
        }
    }
    let positions: Vec<usize> = (0..m + n).collect();
    let mut raw = Vec::new();
    rec(&positions, &mut raw, &mut Vec::new());
    let mut out: Vec<PlanarDiagram> = raw
        .into_iter()
        .map(|ps| {
            let pairs = ps
                .into_iter()
                .map(|(a, b)| (PlanarDiagram::label_of_pos(m, n, a), PlanarDiagram::label_of_pos(m, n, b)))
                .collect();
            PlanarDiagram::new(m, n, pairs)
        })
        .collect::<Result<_>>()?;
    out.sort();
    Ok(out)
}

/// A formal linear combination of planar diagrams of a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramSum {
    top: usize,
    bottom: usize,
    regime: Regime,
    loop_value: FieldElement,
    terms: BTreeMap<PlanarDiagram, FieldElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramTermJson {
    #[serde(flatten)]
    pub diagram: DiagramJson,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSumJson {
    pub top: usize,
    pub bottom: usize,
    pub regime: Regime,
    pub loop_value: String,
    pub terms: Vec<DiagramTermJson>,
}

impl DiagramSum {
    pub fn zero(top: usize, bottom: usize, regime: Regime) -> Self {
        DiagramSum { top, bottom, regime, loop_value: regime.loop_value(), terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: PlanarDiagram, regime: Regime) -> Self {
        let mut s = Self::zero(d.top, d.bottom, regime);
        s.terms.insert(d, FieldElement::one());
        s
    }

    pub fn identity(n: usize, regime: Regime) -> Self {
        Self::from_diagram(PlanarDiagram::identity(n), regime)
    }

    pub fn e(n: usize, i: usize, regime: Regime) -> Result<Self> {
        Ok(Self::from_diagram(PlanarDiagram::e(n, i)?, regime))
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn loop_value(&self) -> &FieldElement {
        &self.loop_value
    }

    pub fn terms(&self) -> &BTreeMap<PlanarDiagram, FieldElement> {
        &self.terms
    }

    pub fn coeff(&self, d: &PlanarDiagram) -> FieldElement {
        self.terms.get(d).cloned().unwrap_or_else(FieldElement::zero)
    }

    fn push(&mut self, d: PlanarDiagram, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d).or_insert_with(FieldElement::zero);
        *e = e.add_ref(&c);
        if e.is_zero() {
            self.terms.retain(|_, x| !x.is_zero());
        }
    }

    fn check_compatible(&self, o: &Self) -> Result<()> {
        if self.regime != o.regime {
            return Err(Error::Shape("diagram sums from different regimes".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_compatible(o)?;
        if (self.top, self.bottom) != (o.top, o.bottom) {
            return Err(Error::Shape(format!(
                "cannot add ({},{}) and ({},{}) diagrams",
                self.top, self.bottom, o.top, o.bottom
            )));
        }
        let mut out = self.clone();
        for (d, c) in &o.terms {
            out.push(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let mut out = Self::zero(self.top, self.bottom, self.regime);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(d, x)| (d.clone(), x.mul_ref(c))).collect();
        }
        out
    }

    /// `self ∘ g`, with `g` stacked above (acting first). Closed loops are
    /// replaced by the loop value.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_compatible(g)?;
        if self.top != g.bottom {
            return Err(Error::Shape(format!(
                "cannot compose: {} outputs feed {} inputs",
                g.bottom, self.top
            )));
        }
        let mut out = Self::zero(g.top, self.bottom, self.regime);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &g.terms {
                let (d, loops) = d1.compose(d2)?;
                let c = c1.mul_ref(c2).mul_ref(&self.loop_value.pow(loops as i64)?);
                out.push(d, c);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, o: &Self) -> Result<Self> {
        self.check_compatible(o)?;
        let mut out = Self::zero(self.top + o.top, self.bottom + o.bottom, self.regime);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &o.terms {
                out.push(d1.tensor(d2), c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    pub fn evaluate(&self) -> LinearOperator {
        let mut acc = LinearOperator::zero(Space::v1_pow(self.bottom), Space::v1_pow(self.top));
        for (d, c) in &self.terms {
            acc = acc.add(&d.evaluate(self.regime).scale(c)).expect("same shape");
        }
        acc
    }

    pub fn to_json(&self) -> DiagramSumJson {
        DiagramSumJson {
            top: self.top,
            bottom: self.bottom,
            regime: self.regime,
            loop_value: self.loop_value.to_string(),
            terms: self
                .terms
                .iter()
                .map(|(d, c)| DiagramTermJson { diagram: d.to_json(), coeff: c.to_string() })
                .collect(),
        }
    }
}

/// One crossing between strands `pos` and `pos+1` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub pos: usize,
    pub positive: bool,
}

/// An `n`-strand diagram made of crossings only, listed in acting order
/// (the first crossing is the topmost).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossingDiagram {
    pub strands: usize,
    pub crossings: Vec<Crossing>,
}

impl CrossingDiagram {
    pub fn new(strands: usize, crossings: Vec<Crossing>) -> Result<Self> {
        if let Some(c) = crossings.iter().find(|c| c.pos == 0 || c.pos >= strands) {
            return Err(Error::Shape(format!("crossing at {} on {strands} strands", c.pos)));
        }
        Ok(CrossingDiagram { strands, crossings })
    }

    /// The cable carrying a bundle of `m` strands across a bundle of `n`
    /// strands, every crossing with the given sign.
    pub fn cable(m: usize, n: usize, positive: bool) -> Self {
        let mut crossings = Vec::with_capacity(m * n);
        for i in (0..m).rev() {
            for t in 0..n {
                crossings.push(Crossing { pos: i + t + 1, positive });
            }
        }
        CrossingDiagram { strands: m + n, crossings }
    }

    /// Replaces each crossing by its skein resolution.
    pub fn skein_resolve(&self, regime: Regime) -> Result<DiagramSum> {
        let mut acc = DiagramSum::identity(self.strands, regime);
        for c in &self.crossings {
            let (ce, ci) = regime.crossing_coeffs(c.positive);
            let local = DiagramSum::e(self.strands, c.pos, regime)?
                .scale(&ce)
                .add(&DiagramSum::identity(self.strands, regime).scale(&ci))?;
            acc = local.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Direct evaluation is only defined once all crossings are resolved.
    pub fn evaluate_unresolved(&self) -> Result<LinearOperator> {
        if !self.crossings.is_empty() {
            return Err(Error::UnresolvedCrossings(self.crossings.len()));
        }
        Ok(LinearOperator::identity(Space::v1_pow(self.strands)))
    }

    pub fn to_json(&self) -> DiagramJson {
        let n = self.strands;
        DiagramJson {
            top: n,
            bottom: n,
            pairs: PlanarDiagram::identity(n).pairs,
            crossings: self
                .crossings
                .iter()
                .map(|c| (c.pos, if c.positive { "+" } else { "-" }.to_string()))
                .collect(),
        }
    }
}

/// The Jones-Wenzl idempotent `p_n`, found by solving `e_i·p = p·e_i = 0`
/// over the TL_n diagram basis and normalizing the identity coefficient.
pub fn jones_wenzl(n: usize, regime: Regime) -> Result<DiagramSum> {
    if n == 0 {
        return Ok(DiagramSum::identity(0, regime));
    }
    let basis = enumerate_tl(n, n)?;
    let index: BTreeMap<&PlanarDiagram, usize> = basis.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let lv = regime.loop_value();
    let mut eqs: BTreeMap<(usize, bool, usize), Vec<(usize, FieldElement)>> = BTreeMap::new();
    for i in 1..n {
        let e = PlanarDiagram::e(n, i)?;
        for (k, d) in basis.iter().enumerate() {
            for (left, (prod, loops)) in [(true, e.compose(d)?), (false, d.compose(&e)?)] {
                let c = lv.pow(loops as i64)?;
                eqs.entry((i, left, index[&prod])).or_default().push((k, c));
            }
        }
    }
    let rows: Vec<_> = eqs.into_values().collect();
    let ns = linalg::nullspace(rows, basis.len());
    if ns.len() != 1 {
        return Err(Error::Solver(format!("Jones-Wenzl system for n={n} has a {}-dimensional solution space", ns.len())));
    }
    let id_idx = index[&PlanarDiagram::identity(n)];
    let sol = &ns[0];
    let c_id = sol
        .iter()
        .find(|e| e.0 == id_idx)
        .map(|e| e.1.clone())
        .ok_or_else(|| Error::Solver("Jones-Wenzl solution has no identity component".into()))?;
    let norm = c_id.inv()?;
    let mut out = DiagramSum::zero(n, n, regime);
    for (k, x) in sol {
        out.push(basis[*k].clone(), x.mul_ref(&norm));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::qint;

    #[test]
    fn catalan_counts() {
        assert_eq!(enumerate_tl(1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_tl(2, 2).unwrap().len(), 2);
        assert_eq!(enumerate_tl(3, 3).unwrap().len(), 5);
        assert_eq!(enumerate_tl(4, 4).unwrap().len(), 14);
        assert_eq!(enumerate_tl(0, 4).unwrap().len(), 2);
        assert!(enumerate_tl(1, 2).is_err());
    }

    #[test]
    fn rejects_crossing_pairs() {
        assert!(PlanarDiagram::new(2, 2, vec![(1, 4), (2, 3)]).is_err());
        assert!(PlanarDiagram::new(2, 2, vec![(1, 3), (2, 4)]).is_ok());
    }

    #[test]
    fn loop_values() {
        assert_eq!(Regime::Quantum.loop_value(), -qint(2));
        assert_eq!(Regime::Classical.loop_value(), FieldElement::from_int(-2));
    }

    #[test]
    fn tl_relations() {
        let r = Regime::Quantum;
        let e1 = DiagramSum::e(3, 1, r).unwrap();
        let e2 = DiagramSum::e(3, 2, r).unwrap();
        assert_eq!(e1.compose(&e1).unwrap(), e1.scale(&-qint(2)));
        assert_eq!(e1.compose(&e2).unwrap().compose(&e1).unwrap(), e1);
        let id = DiagramSum::identity(3, r);
        assert_eq!(id.compose(&e2).unwrap(), e2);
    }

    #[test]
    fn evaluation_is_functorial() {
        let r = Regime::Quantum;
        let ds = enumerate_tl(3, 3).unwrap();
        for a in &ds {
            for b in &ds {
                let (c, loops) = a.compose(b).unwrap();
                let lhs = c.evaluate(r).scale(&r.loop_value().pow(loops as i64).unwrap());
                let rhs = a.evaluate(r).compose(&b.evaluate(r)).unwrap();
                assert_eq!(lhs, rhs, "{a:?} ∘ {b:?}");
            }
        }
    }

    #[test]
    fn e_block() {
        let e = PlanarDiagram::e(2, 1).unwrap().evaluate(Regime::Quantum);
        assert_eq!(e.get(1, 1), -FieldElement::q());
        assert_eq!(e.get(1, 2), FieldElement::one());
        assert_eq!(e.get(2, 1), FieldElement::one());
        assert_eq!(e.get(2, 2), -FieldElement::q_pow(-1));
        assert_eq!(e.nnz(), 4);
    }

    #[test]
    fn jones_wenzl_two() {
        for r in [Regime::Quantum, Regime::Classical] {
            let p = jones_wenzl(2, r).unwrap();
            let expect = DiagramSum::identity(2, r)
                .add(&DiagramSum::e(2, 1, r).unwrap().scale(&(-r.loop_value()).inv().unwrap()))
                .unwrap();
            assert_eq!(p, expect);
        }
    }

    #[test]
    fn jones_wenzl_is_idempotent() {
        for n in 1..=4 {
            let p = jones_wenzl(n, Regime::Quantum).unwrap();
            assert_eq!(p.compose(&p).unwrap(), p);
            assert_eq!(p.evaluate().rank(), n + 1);
        }
    }

    #[test]
    fn skein_of_crossing() {
        let r = Regime::Quantum;
        let cd = CrossingDiagram::new(2, vec![Crossing { pos: 1, positive: true }]).unwrap();
        let s = cd.skein_resolve(r).unwrap();
        assert_eq!(s.coeff(&PlanarDiagram::e(2, 1).unwrap()), FieldElement::v());
        assert_eq!(s.coeff(&PlanarDiagram::identity(2)), FieldElement::v_pow(-1));
        assert!(cd.evaluate_unresolved().is_err());
    }
}
