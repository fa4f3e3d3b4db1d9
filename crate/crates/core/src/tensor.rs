//! Sparse exact linear operators between labelled tensor spaces.
//!
//! Tensor indices are big-endian: the leftmost factor is the most
//! significant digit. `f.compose(&g)` is `f ∘ g`, so `g` acts first.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{self, SparseRow};
use crate::poly::{lcm, Poly, Var};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub name: String,
    pub dim: usize,
}

impl Factor {
    pub fn new(name: impl Into<String>, dim: usize) -> Factor {
        Factor { name: name.into(), dim }
    }

    pub fn v1() -> Factor {
        Factor::new("V1", 2)
    }
}

/// A strand signature: an ordered list of tensor factors. The empty list is
/// the ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Space {
    factors: Vec<Factor>,
}

impl Space {
    pub fn unit() -> Space {
        Space { factors: Vec::new() }
    }

    pub fn new(factors: Vec<Factor>) -> Space {
        Space { factors }
    }

    pub fn named(name: impl Into<String>, dim: usize) -> Space {
        Space { factors: vec![Factor::new(name, dim)] }
    }

    pub fn v1_pow(n: usize) -> Space {
        Space { factors: vec![Factor::v1(); n] }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).product()
    }

    pub fn tensor(&self, o: &Space) -> Space {
        let mut factors = self.factors.clone();
        factors.extend(o.factors.iter().cloned());
        Space { factors }
    }

    pub fn slice(&self, from: usize, to: usize) -> Space {
        Space { factors: self.factors[from..to].to_vec() }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let mut j = i;
            while j < self.factors.len() && self.factors[j] == self.factors[i] {
                j += 1;
            }
            if j - i > 1 {
                parts.push(format!("{}⊗{}", self.factors[i].name, j - i));
            } else {
                parts.push(self.factors[i].name.clone());
            }
            i = j;
        }
        f.write_str(&parts.join("⊗"))
    }
}

/// A sparse matrix over ℚ(v, lam, mu) mapping `domain` (columns) to
/// `codomain` (rows).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    codomain: Space,
    domain: Space,
    rows: Vec<SparseRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub basis: String,
    pub entries: Vec<(usize, usize, String)>,
}

impl LinearOperator {
    pub fn zero(codomain: Space, domain: Space) -> Self {
        let n = codomain.dim();
        LinearOperator { codomain, domain, rows: vec![Vec::new(); n] }
    }

    pub fn identity(space: Space) -> Self {
        let n = space.dim();
        let rows = (0..n).map(|i| vec![(i, FieldElement::one())]).collect();
        LinearOperator { codomain: space.clone(), domain: space, rows }
    }

    pub fn scalar(c: FieldElement) -> Self {
        let mut op = Self::zero(Space::unit(), Space::unit());
        if !c.is_zero() {
            op.rows[0].push((0, c));
        }
        op
    }

    pub fn from_triplets(
        codomain: Space,
        domain: Space,
        triplets: impl IntoIterator<Item = (usize, usize, FieldElement)>,
    ) -> Result<Self> {
        let (n, m) = (codomain.dim(), domain.dim());
        let mut rows: Vec<SparseRow> = vec![Vec::new(); n];
        for (i, j, x) in triplets {
            if i >= n || j >= m {
                return Err(Error::Shape(format!("entry ({i}, {j}) outside {n}x{m}")));
            }
            rows[i].push((j, x));
        }
        let rows = rows.into_iter().map(linalg::normalize_row).collect();
        Ok(LinearOperator { codomain, domain, rows })
    }

    pub fn from_fn(codomain: Space, domain: Space, f: impl Fn(usize, usize) -> FieldElement) -> Self {
        let (n, m) = (codomain.dim(), domain.dim());
        let rows = (0..n)
            .map(|i| (0..m).map(|j| (j, f(i, j))).filter(|e| !e.1.is_zero()).collect())
            .collect();
        LinearOperator { codomain, domain, rows }
    }

    pub fn from_rows(codomain: Space, domain: Space, rows: Vec<SparseRow>) -> Result<Self> {
        if rows.len() != codomain.dim() {
            return Err(Error::Shape(format!("{} rows given for codomain of dim {}", rows.len(), codomain.dim())));
        }
        let m = domain.dim();
        let rows: Vec<SparseRow> = rows.into_iter().map(linalg::normalize_row).collect();
        if rows.iter().any(|r| r.last().map(|e| e.0 >= m).unwrap_or(false)) {
            return Err(Error::Shape(format!("column index outside domain of dim {m}")));
        }
        Ok(LinearOperator { codomain, domain, rows })
    }

    /// σ(V⊗W): V⊗W → W⊗V.
    pub fn swap(v: &Space, w: &Space) -> Self {
        let (dv, dw) = (v.dim(), w.dim());
        let mut rows = vec![Vec::new(); dv * dw];
        for a in 0..dv {
            for b in 0..dw {
                rows[b * dv + a].push((a * dw + b, FieldElement::one()));
            }
        }
        LinearOperator { codomain: w.tensor(v), domain: v.tensor(w), rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.domain.dim()
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.rows[i]
            .binary_search_by_key(&j, |e| e.0)
            .map(|k| self.rows[i][k].1.clone())
            .unwrap_or_else(|_| FieldElement::zero())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &FieldElement)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, *j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Replaces the labels, keeping the matrix. Dimensions must agree.
    pub fn relabel(mut self, codomain: Space, domain: Space) -> Result<Self> {
        if codomain.dim() != self.codomain.dim() || domain.dim() != self.domain.dim() {
            return Err(Error::Shape(format!(
                "cannot relabel {}→{} as {}→{}",
                self.domain, self.codomain, domain, codomain
            )));
        }
        self.codomain = codomain;
        self.domain = domain;
        Ok(self)
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.ncols()];
        for (i, j, x) in self.entries() {
            rows[j].push((i, x.clone()));
        }
        LinearOperator { codomain: self.domain.clone(), domain: self.codomain.clone(), rows }
    }

    fn check_same_shape(&self, o: &Self) -> Result<()> {
        if self.domain != o.domain || self.codomain != o.codomain {
            return Err(Error::Shape(format!(
                "{}→{} vs {}→{}",
                self.domain, self.codomain, o.domain, o.codomain
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        let one = FieldElement::one().neg();
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| linalg::row_axpy(a, &one, b)).collect();
        Ok(LinearOperator { codomain: self.codomain.clone(), domain: self.domain.clone(), rows })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_same_shape(o)?;
        let one = FieldElement::one();
        let rows = self.rows.iter().zip(&o.rows).map(|(a, b)| linalg::row_axpy(a, &one, b)).collect();
        Ok(LinearOperator { codomain: self.codomain.clone(), domain: self.domain.clone(), rows })
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(self.codomain.clone(), self.domain.clone());
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, x)| (*j, x.mul_ref(c))).collect()).collect();
        LinearOperator { codomain: self.codomain.clone(), domain: self.domain.clone(), rows }
    }

    /// Applies `f` to every stored entry, dropping entries that become zero.
    pub fn try_map(&self, f: impl Fn(&FieldElement) -> Result<FieldElement> + Sync) -> Result<Self> {
        let rows: Result<Vec<SparseRow>> = self
            .rows
            .par_iter()
            .map(|r| {
                let mut out = Vec::with_capacity(r.len());
                for (j, x) in r {
                    let y = f(x)?;
                    if !y.is_zero() {
                        out.push((*j, y));
                    }
                }
                Ok(out)
            })
            .collect();
        Ok(LinearOperator { codomain: self.codomain.clone(), domain: self.domain.clone(), rows: rows? })
    }

    pub fn substitute(&self, var: Var, expr: &FieldElement) -> Result<Self> {
        self.try_map(|x| x.substitute(var, expr))
    }

    pub fn at_q_one(&self) -> Result<Self> {
        self.try_map(|x| x.at_q_one())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if self.domain != g.codomain {
            return Err(Error::Shape(format!(
                "cannot compose ({}→{}) ∘ ({}→{})",
                self.domain, self.codomain, g.domain, g.codomain
            )));
        }
        let work: usize = self.nnz() * 4;
        let row_product = |r: &SparseRow| -> SparseRow {
            let mut acc: BTreeMap<usize, FieldElement> = BTreeMap::new();
            for (k, a) in r {
                for (j, b) in &g.rows[*k] {
                    let p = a.mul_ref(b);
                    match acc.get_mut(j) {
                        Some(e) => *e = e.add_ref(&p),
                        None => {
                            acc.insert(*j, p);
                        }
                    }
                }
            }
            acc.into_iter().filter(|e| !e.1.is_zero()).collect()
        };
        let rows: Vec<SparseRow> = if work > 256 {
            self.rows.par_iter().map(row_product).collect()
        } else {
            self.rows.iter().map(row_product).collect()
        };
        Ok(LinearOperator { codomain: self.codomain.clone(), domain: g.domain.clone(), rows })
    }

    /// Composes a chain in written order: `chain([f, g, h]) = f ∘ g ∘ h`.
    pub fn chain(ops: &[&LinearOperator]) -> Result<Self> {
        let (last, rest) = ops.split_last().ok_or_else(|| Error::Shape("empty chain".into()))?;
        let mut acc = (*last).clone();
        for op in rest.iter().rev() {
            acc = op.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn kron(&self, g: &Self) -> Self {
        let (m2, n2) = (g.ncols(), g.nrows());
        let mut rows = Vec::with_capacity(self.nrows() * n2);
        for ra in &self.rows {
            for rb in &g.rows {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        row.push((ja * m2 + jb, a.mul_ref(b)));
                    }
                }
                rows.push(row);
            }
        }
        LinearOperator { codomain: self.codomain.tensor(&g.codomain), domain: self.domain.tensor(&g.domain), rows }
    }

    pub fn kron_all(ops: &[&LinearOperator]) -> Self {
        let mut acc = LinearOperator::identity(Space::unit());
        for op in ops {
            acc = acc.kron(op);
        }
        acc
    }

    /// Places `self` on the factors `start..start+k` (1-based `start`) of
    /// `ambient`, with identities elsewhere.
    pub fn place_in(&self, start: usize, ambient: &Space) -> Result<Self> {
        let k = self.domain.len();
        if start == 0 || start - 1 + k > ambient.len() {
            return Err(Error::Shape(format!(
                "cannot place {}-strand operator at {start} in {}",
                k,
                ambient
            )));
        }
        let s = start - 1;
        if ambient.slice(s, s + k) != self.domain {
            return Err(Error::Shape(format!(
                "operator domain {} does not match strands {}..{} of {}",
                self.domain,
                start,
                start + k - 1,
                ambient
            )));
        }
        let left = LinearOperator::identity(ambient.slice(0, s));
        let right = LinearOperator::identity(ambient.slice(s + k, ambient.len()));
        Ok(left.kron(self).kron(&right))
    }

    /// Places an operator on `V1` strands `start..` of `V1^⊗total`.
    pub fn strand_place(&self, start: usize, total: usize) -> Result<Self> {
        self.place_in(start, &Space::v1_pow(total))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::Shape("inverse of a non-square operator".into()));
        }
        let rows: Vec<SparseRow> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.push((n + i, FieldElement::one()));
                row
            })
            .collect();
        let red = linalg::rref(rows);
        if red.rank() < n || red.pivots[n - 1] >= n {
            return Err(Error::Solver("operator is singular".into()));
        }
        let inv_rows = red
            .rows
            .into_iter()
            .map(|r| r.into_iter().filter(|e| e.0 >= n).map(|(j, x)| (j - n, x)).collect())
            .collect();
        Ok(LinearOperator { codomain: self.domain.clone(), domain: self.codomain.clone(), rows: inv_rows })
    }

    pub fn rank(&self) -> usize {
        linalg::rank(self.rows.clone())
    }

    /// Multiplies by the lcm `s` of all denominators; returns the
    /// polynomial-entry operator and `s`.
    pub fn clear_denominators(&self) -> (Self, FieldElement) {
        let mut s = Poly::one();
        for (_, _, x) in self.entries() {
            if !x.denom().is_one() {
                s = lcm(&s, x.denom());
            }
        }
        let s = FieldElement::from_poly(s);
        (self.scale(&s), s)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.nrows(),
            cols: self.ncols(),
            basis: format!("{}→{}", self.domain, self.codomain),
            entries: self.entries().map(|(i, j, x)| (i, j, x.to_string())).collect(),
        }
    }

    /// Reads a matrix dump; the labels are supplied by the caller since the
    /// dump records them only as text.
    pub fn from_json(m: &MatrixJson, codomain: Space, domain: Space) -> Result<Self> {
        if m.rows != codomain.dim() || m.cols != domain.dim() {
            return Err(Error::Shape(format!(
                "matrix is {}x{}, expected {}x{}",
                m.rows,
                m.cols,
                codomain.dim(),
                domain.dim()
            )));
        }
        let mut trip = Vec::with_capacity(m.entries.len());
        for (i, j, s) in &m.entries {
            trip.push((*i, *j, FieldElement::parse(s)?));
        }
        Self::from_triplets(codomain, domain, trip)
    }

    /// Evaluates at a rational point; `None` if some entry has a pole there.
    pub fn eval_at(&self, point: &[num_rational::BigRational; 3]) -> Option<Self> {
        let mut rows = Vec::with_capacity(self.nrows());
        for r in &self.rows {
            let mut row = Vec::with_capacity(r.len());
            for (j, x) in r {
                let y = x.eval(point)?;
                if !num_traits::Zero::is_zero(&y) {
                    row.push((*j, FieldElement::from_rational(&y)));
                }
            }
            rows.push(row);
        }
        Some(LinearOperator { codomain: self.codomain.clone(), domain: self.domain.clone(), rows })
    }

    /// Short description of a residual: "zero" or the nonzero count and the
    /// first offending entry.
    pub fn residual_summary(&self) -> String {
        match self.entries().next() {
            None => "zero".to_string(),
            Some((i, j, x)) => {
                let s = x.to_string();
                let s = if s.len() > 80 { format!("{}…", &s[..80]) } else { s };
                format!("nonzero: {} entries, first ({i},{j}) = {s}", self.nnz())
            }
        }
    }
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearOperator {} → {} ({}x{})", self.domain, self.codomain, self.nrows(), self.ncols())?;
        for (i, j, x) in self.entries() {
            writeln!(f, "  ({i},{j}) {x}")?;
        }
        Ok(())
    }
}

/// A basis of the image of an idempotent, in reduced column echelon form.
/// `basis` maps the image (dim r) into the ambient space and `coords` reads
/// coordinates off the pivot rows, so `coords ∘ basis = I`. `to_image` is
/// `coords ∘ idem`, the projection onto the image written in the basis;
/// `basis ∘ to_image` is the idempotent itself.
#[derive(Clone, Debug)]
pub struct ImageBasis {
    pub basis: LinearOperator,
    pub coords: LinearOperator,
    pub to_image: LinearOperator,
    pub pivots: Vec<usize>,
}

impl ImageBasis {
    pub fn of_idempotent(idem: &LinearOperator, label: &str) -> Result<Self> {
        if idem.domain != idem.codomain {
            return Err(Error::Shape("idempotent must be an endomorphism".into()));
        }
        let sq = idem.compose(idem)?;
        if sq != *idem {
            return Err(Error::NotIdempotent(sq.sub(idem)?.residual_summary()));
        }
        let mut b = Self::of_columns(idem, label)?;
        b.to_image = b.coords.compose(idem)?;
        Ok(b)
    }

    /// Column space of `op` (no idempotence requirement).
    pub fn of_columns(op: &LinearOperator, label: &str) -> Result<Self> {
        let red = linalg::rref(op.transpose().rows.clone());
        let r = red.rank();
        let image = Space::named(label, r);
        let ambient = op.codomain.clone();
        let mut trip = Vec::new();
        for (k, row) in red.rows.iter().enumerate() {
            for (i, x) in row {
                trip.push((*i, k, x.clone()));
            }
        }
        let basis = LinearOperator::from_triplets(ambient.clone(), image.clone(), trip)?;
        let coords = LinearOperator::from_triplets(
            image,
            ambient,
            red.pivots.iter().enumerate().map(|(k, &p)| (k, p, FieldElement::one())),
        )?;
        Ok(ImageBasis { basis, to_image: coords.clone(), coords, pivots: red.pivots })
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn space(&self) -> &Space {
        self.basis.domain()
    }

    pub fn ambient(&self) -> &Space {
        self.basis.codomain()
    }

    pub fn kron(&self, o: &ImageBasis) -> ImageBasis {
        let basis = self.basis.kron(&o.basis);
        let coords = self.coords.kron(&o.coords);
        let to_image = self.to_image.kron(&o.to_image);
        let pivots = coords
            .rows()
            .iter()
            .map(|r| r[0].0)
            .collect();
        ImageBasis { basis, coords, to_image, pivots }
    }

    pub fn identity(space: Space) -> ImageBasis {
        let id = LinearOperator::identity(space.clone());
        ImageBasis { basis: id.clone(), coords: id.clone(), to_image: id, pivots: (0..space.dim()).collect() }
    }
}

/// Expresses `op` in the given image bases, checking that `op` maps the
/// domain image into the codomain image.
pub fn restrict(op: &LinearOperator, dom: &ImageBasis, cod: &ImageBasis) -> Result<LinearOperator> {
    let on_basis = op.compose(&dom.basis)?;
    let res = cod.coords.compose(&on_basis)?;
    let back = cod.basis.compose(&res)?;
    if back != on_basis {
        return Err(Error::Invariance(back.sub(&on_basis)?.residual_summary()));
    }
    Ok(res)
}

/// Restriction of `op` to the image of the idempotent `idem` on both sides.
pub fn image_restrict(op: &LinearOperator, idem: &LinearOperator) -> Result<LinearOperator> {
    let b = ImageBasis::of_idempotent(idem, "im")?;
    restrict(op, &b, &b)
}

/// Embeds a restricted operator back into the ambient spaces, precomposed
/// with the domain idempotent.
pub fn embed(res: &LinearOperator, dom: &ImageBasis, cod: &ImageBasis) -> Result<LinearOperator> {
    cod.basis.compose(res)?.compose(&dom.to_image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        FieldElement::parse(s).unwrap()
    }

    fn mat(n: usize, m: usize, xs: &[&str]) -> LinearOperator {
        LinearOperator::from_fn(Space::named("A", n), Space::named("B", m), |i, j| fe(xs[i * m + j]))
    }

    #[test]
    fn kron_identity() {
        let i2 = LinearOperator::identity(Space::v1_pow(1));
        assert_eq!(i2.kron(&i2), LinearOperator::identity(Space::v1_pow(2)));
    }

    #[test]
    fn kron_shape_and_order() {
        let a = mat(1, 2, &["1", "2"]);
        let b = mat(2, 1, &["v", "lam"]);
        let k = a.kron(&b);
        assert_eq!((k.nrows(), k.ncols()), (2, 2));
        assert_eq!(k.get(0, 0), fe("v"));
        assert_eq!(k.get(1, 1), fe("2*lam"));
    }

    #[test]
    fn compose_checks_labels() {
        let a = mat(2, 2, &["1", "0", "0", "1"]);
        assert!(a.compose(&a).is_err());
        let b = a.clone().relabel(Space::named("B", 2), Space::named("B", 2)).unwrap();
        assert_eq!(a.compose(&b).unwrap(), a);
    }

    #[test]
    fn placement_matches_kron() {
        let local = LinearOperator::from_fn(Space::v1_pow(2), Space::v1_pow(2), |i, j| {
            FieldElement::from_int((i * 4 + j) as i64)
        });
        let placed = local.strand_place(2, 3).unwrap();
        let i2 = LinearOperator::identity(Space::v1_pow(1));
        assert_eq!(placed, i2.kron(&local));
        assert_eq!(local.strand_place(1, 2).unwrap(), local);
        assert!(local.strand_place(3, 3).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let a = LinearOperator::from_fn(Space::named("A", 2), Space::named("A", 2), |i, j| match (i, j) {
            (0, 0) => fe("v"),
            (0, 1) => fe("1"),
            (1, 0) => fe("lam"),
            _ => fe("2"),
        });
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap(), LinearOperator::identity(Space::named("A", 2)));
    }

    #[test]
    fn image_of_projector() {
        let p = LinearOperator::from_fn(Space::named("A", 2), Space::named("A", 2), |_, _| fe("1/2"));
        let b = ImageBasis::of_idempotent(&p, "im").unwrap();
        assert_eq!(b.dim(), 1);
        let r = image_restrict(&LinearOperator::identity(Space::named("A", 2)), &p).unwrap();
        assert_eq!(r, LinearOperator::identity(Space::named("im", 1)));
        let not_idem = p.scale(&fe("2"));
        assert!(matches!(ImageBasis::of_idempotent(&not_idem, "x"), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn restriction_detects_leaving_the_image() {
        let p = LinearOperator::from_fn(Space::named("A", 2), Space::named("A", 2), |i, j| {
            if i == 0 && j == 0 {
                FieldElement::one()
            } else {
                FieldElement::zero()
            }
        });
        let flip = LinearOperator::from_fn(Space::named("A", 2), Space::named("A", 2), |i, j| {
            if i != j {
                FieldElement::one()
            } else {
                FieldElement::zero()
            }
        });
        assert!(matches!(image_restrict(&flip, &p), Err(Error::Invariance(_))));
    }

    #[test]
    fn clearing_denominators() {
        let a = mat(1, 2, &["1/v", "lam/(v^2+1)"]);
        let (b, s) = a.clear_denominators();
        assert!(b.entries().all(|(_, _, x)| x.is_polynomial()));
        assert_eq!(s, fe("v^3+v"));
    }

    #[test]
    fn json_dump_sorted() {
        let a = mat(2, 2, &["0", "v", "1", "0"]);
        let j = a.to_json();
        assert_eq!(j.entries, vec![(0, 1, "v".to_string()), (1, 0, "1".to_string())]);
        let back = LinearOperator::from_json(&j, Space::named("A", 2), Space::named("B", 2)).unwrap();
        assert_eq!(back, a);
    }
}
