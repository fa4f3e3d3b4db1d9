//! Sparse multivariate polynomials over ℤ in the indeterminates `v`, `lam`, `mu`.
//!
//! Terms are kept sorted by lexicographic order on the exponent triple
//! `(v, lam, mu)`, largest first. Exponents are packed into a single `u64`
//! so that this order is plain integer order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const NVARS: usize = 3;
pub const VAR_NAMES: [&str; NVARS] = ["v", "lam", "mu"];

const BITS: u32 = 21;
const MASK: u64 = (1 << BITS) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    V = 0,
    Lam = 1,
    Mu = 2,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::V, Var::Lam, Var::Mu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        VAR_NAMES[self as usize]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "v" => Some(Var::V),
            "lam" => Some(Var::Lam),
            "mu" => Some(Var::Mu),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn shift(var: usize) -> u32 {
        BITS * (NVARS as u32 - 1 - var as u32)
    }

    pub fn new(e: [u32; NVARS]) -> Monomial {
        let mut packed = 0u64;
        for (i, &x) in e.iter().enumerate() {
            assert!((x as u64) <= MASK, "exponent {x} too large");
            packed |= (x as u64) << Self::shift(i);
        }
        Monomial(packed)
    }

    pub fn var(var: Var, e: u32) -> Monomial {
        let mut x = [0; NVARS];
        x[var.index()] = e;
        Monomial::new(x)
    }

    pub fn exp(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & MASK) as u32
    }

    pub fn exps(self) -> [u32; NVARS] {
        [self.exp(0), self.exp(1), self.exp(2)]
    }

    pub fn total_degree(self) -> u32 {
        self.exps().iter().sum()
    }

    pub fn mul(self, o: Monomial) -> Monomial {
        // fields never reach 2^21 in practice, so packed addition cannot carry
        Monomial(self.0 + o.0)
    }

    pub fn divides(self, o: Monomial) -> bool {
        let e = self.exps();
        let f = o.exps();
        e[0] <= f[0] && e[1] <= f[1] && e[2] <= f[2]
    }

    /// `o / self`; caller guarantees divisibility.
    pub fn quotient_of(self, o: Monomial) -> Monomial {
        debug_assert!(self.divides(o));
        Monomial(o.0 - self.0)
    }

    pub fn min(self, o: Monomial) -> Monomial {
        let e = self.exps();
        let f = o.exps();
        Monomial::new([e[0].min(f[0]), e[1].min(f[1]), e[2].min(f[2])])
    }

    fn without(self, var: usize) -> Monomial {
        Monomial(self.0 & !(MASK << Self::shift(var)))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

fn fmt_monomial(m: Monomial, out: &mut String) {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(VAR_NAMES[i]);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Monomial::ONE, c)] }
        }
    }

    pub fn from_i64(c: i64) -> Poly {
        Poly::constant(BigInt::from(c))
    }

    pub fn var(var: Var) -> Poly {
        Poly::term(Monomial::var(var, 1), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(mut terms: Vec<(Monomial, BigInt)>) -> Poly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, BigInt)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self, var: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exp(var.index())).max().unwrap_or(0)
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.terms.iter().any(|t| t.0.exp(var.index()) > 0)
    }

    fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i) as u32).max().unwrap_or(0)
    }

    fn vars_present(&self) -> [bool; NVARS] {
        let mut out = [false; NVARS];
        for (m, _) in &self.terms {
            for (i, o) in out.iter_mut().enumerate() {
                if m.exp(i) > 0 {
                    *o = true;
                }
            }
        }
        out
    }

    /// Componentwise minimum of the exponents over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(first.0, |acc, t| acc.min(t.0)),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &o.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            return o.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        if o.terms.len() == 1 {
            return self.mul_term(o.terms[0].0, &o.terms[0].1);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                prods.push((ma.mul(*mb), ca * cb));
            }
        }
        Poly::from_terms(prods)
    }

    pub fn mul_term(&self, m: Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(Monomial::ONE, c)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn div_monomial(&self, m: Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(mm, c)| (m.quotient_of(*mm), c.clone())).collect() }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(*m) {
                    return None;
                }
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((dm.quotient_of(*m), qc));
            }
            return Some(Poly { terms: out });
        }
        for var in Var::ALL {
            if d.degree(var) > self.degree(var) {
                return None;
            }
        }
        let (dm, dc) = d.terms[0].clone();
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((rm, rc)) = r.terms.first().cloned() {
            if !dm.divides(rm) {
                return None;
            }
            let (qc, rem) = rc.div_rem(&dc);
            if !rem.is_zero() {
                return None;
            }
            let qm = dm.quotient_of(rm);
            r = r.sub(&d.mul_term(qm, &qc));
            q.push((qm, qc));
        }
        Some(Poly { terms: q })
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn content_int(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Multiplies by -1 if needed so the leading coefficient is positive.
    pub fn normalize_sign(self) -> Poly {
        if self.terms.first().map(|t| t.1.is_negative()).unwrap_or(false) {
            self.neg()
        } else {
            self
        }
    }

    fn to_uni(&self, var: usize) -> Vec<Poly> {
        let deg = self.terms.iter().map(|t| t.0.exp(var)).max().unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize].push((m.without(var), c.clone()));
        }
        out.into_iter().map(|terms| Poly { terms }).collect()
    }

    fn from_uni(coeffs: &[Poly], var: usize) -> Poly {
        let mut terms = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            let xm = Monomial::var(Var::ALL[var], d as u32);
            for (m, cc) in &c.terms {
                terms.push((m.mul(xm), cc.clone()));
            }
        }
        Poly::from_terms(terms)
    }

    /// Content with respect to `var`: the gcd of the coefficients of the powers of `var`.
    pub fn content_wrt(&self, var: Var) -> Poly {
        content_list(&self.to_uni(var.index()))
    }

    pub fn eval(&self, point: &[BigRational; NVARS]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, p) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t *= num_traits::pow::pow(p.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Sets `var` to an integer value.
    pub fn eval_var_int(&self, var: Var, value: &BigInt) -> Poly {
        let i = var.index();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(i);
            let c = if e == 0 { c.clone() } else { c * num_traits::pow::pow(value.clone(), e as usize) };
            terms.push((m.without(i), c));
        }
        Poly::from_terms(terms)
    }

    /// Substitutes `var := n/d` and multiplies through by `d^deg`, returning
    /// the homogenized polynomial and `deg`.
    pub fn substitute_homogenized(&self, var: Var, n: &Poly, d: &Poly) -> (Poly, u32) {
        let uni = self.to_uni(var.index());
        let deg = uni.len() as u32 - 1;
        let mut npow = vec![Poly::one()];
        let mut dpow = vec![Poly::one()];
        for k in 1..=deg as usize {
            npow.push(npow[k - 1].mul(n));
            dpow.push(dpow[k - 1].mul(d));
        }
        let mut acc = Poly::zero();
        for (k, c) in uni.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&c.mul(&npow[k]).mul(&dpow[deg as usize - k]));
        }
        (acc, deg)
    }
}

fn content_list(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Greatest common divisor in ℤ[v, lam, mu], normalized to a positive
/// leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone().normalize_sign();
    }
    if b.is_zero() {
        return a.clone().normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content_int().gcd(&b.content_int()));
    }
    if a == b {
        return a.clone().normalize_sign();
    }
    let ma = a.min_monomial();
    let mb = b.min_monomial();
    let m = ma.min(mb);
    let a1 = if ma == Monomial::ONE { a.clone() } else { a.div_monomial(ma) };
    let b1 = if mb == Monomial::ONE { b.clone() } else { b.div_monomial(mb) };
    let g = gcd_stripped(&a1, &b1);
    if m == Monomial::ONE {
        g
    } else {
        g.mul_term(m, &BigInt::one())
    }
}

fn gcd_stripped(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::constant(a.content_int().gcd(&b.content_int()));
    }
    if a.div_exact(b).is_some() {
        return b.clone().normalize_sign();
    }
    if b.div_exact(a).is_some() {
        return a.clone().normalize_sign();
    }
    let va = a.vars_present();
    let vb = b.vars_present();
    for x in 0..NVARS {
        if va[x] && !vb[x] {
            return gcd(&content_list(&a.to_uni(x)), b);
        }
        if vb[x] && !va[x] {
            return gcd(a, &content_list(&b.to_uni(x)));
        }
    }
    // Main variable of lowest degree keeps the remainder sequence short.
    let x = (0..NVARS)
        .filter(|&i| va[i])
        .min_by_key(|&i| a.degree_in(i).max(b.degree_in(i)))
        .expect("non-constant polynomial has a variable");
    let ua = a.to_uni(x);
    let ub = b.to_uni(x);
    let ca = content_list(&ua);
    let cb = content_list(&ub);
    let g = gcd(&ca, &cb);
    let pa: Vec<Poly> = ua.iter().map(|c| c.div_exact(&ca).expect("content divides")).collect();
    let pb: Vec<Poly> = ub.iter().map(|c| c.div_exact(&cb).expect("content divides")).collect();
    if coprime_image(&pa, &pb) {
        return g.normalize_sign();
    }
    let h = primitive_prs(pa, pb);
    Poly::from_uni(&h, x).mul(&g).normalize_sign()
}

/// Sound coprimality test for primitive univariate polynomials: if an
/// integer specialization keeps both degrees and the images are coprime over
/// ℚ, the gcd has degree zero and is therefore a unit.
fn coprime_image(a: &[Poly], b: &[Poly]) -> bool {
    const POINTS: [[i64; NVARS]; 2] = [[3, 5, 7], [-2, 11, 4]];
    POINTS.iter().any(|pt| {
        let (Some(ia), Some(ib)) = (specialize(a, pt), specialize(b, pt)) else {
            return false;
        };
        rational_gcd_degree(ia, ib) == 0
    })
}

fn specialize(u: &[Poly], pt: &[i64; NVARS]) -> Option<Vec<BigRational>> {
    let out: Vec<BigRational> = u
        .iter()
        .map(|c| {
            let mut c = c.clone();
            for (i, &val) in pt.iter().enumerate() {
                c = c.eval_var_int(Var::ALL[i], &BigInt::from(val));
            }
            BigRational::from_integer(c.constant_value().expect("fully specialized"))
        })
        .collect();
    if out.last().is_none_or(|l| l.is_zero()) {
        return None;
    }
    Some(out)
}

fn rational_gcd_degree(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> usize {
    while !b.is_empty() {
        let lb = b.last().expect("non-empty").clone();
        while a.len() >= b.len() {
            let f = a.last().expect("non-empty").clone() / &lb;
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[j + shift] -= &f * bj;
            }
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn uni_primitive(r: Vec<Poly>) -> Vec<Poly> {
    let c = content_list(&r);
    if c.is_one() {
        return r;
    }
    r.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
}

fn trim(r: &mut Vec<Poly>) {
    while r.last().map(|c| c.is_zero()).unwrap_or(false) {
        r.pop();
    }
}

fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[j + shift] = r[j + shift].sub(&lr.mul(bj));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Gcd of two primitive univariate polynomials over ℤ[other vars].
fn primitive_prs(mut a: Vec<Poly>, mut b: Vec<Poly>) -> Vec<Poly> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 {
            return vec![Poly::one()];
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = uni_primitive(r);
    }
}

/// Least common multiple, normalized to a positive leading coefficient.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    a.div_exact(&g).expect("gcd divides").mul(b).normalize_sign()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                fmt_monomial(*m, &mut out);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> Poly {
        Poly::var(Var::V)
    }
    fn lam() -> Poly {
        Poly::var(Var::Lam)
    }
    fn c(x: i64) -> Poly {
        Poly::from_i64(x)
    }

    #[test]
    fn monomial_order_is_lex_v_first() {
        let a = Monomial::new([1, 0, 0]);
        let b = Monomial::new([0, 5, 7]);
        assert!(a > b);
        assert!(Monomial::new([1, 1, 0]) > Monomial::new([1, 0, 9]));
    }

    #[test]
    fn display_orders_terms() {
        let p = v().pow(4).add(&c(1));
        assert_eq!(p.to_string(), "v^4+1");
        let p = c(1).sub(&v().mul(&lam()).scale(&BigInt::from(3)));
        assert_eq!(p.to_string(), "-3*v*lam+1");
    }

    #[test]
    fn exact_division() {
        let a = v().pow(2).sub(&c(1));
        let b = v().sub(&c(1));
        assert_eq!(a.div_exact(&b).unwrap(), v().add(&c(1)));
        assert!(b.div_exact(&v().add(&c(2))).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let f = v().add(&lam());
        let g = v().pow(2).sub(&lam().scale(&BigInt::from(2)));
        let h = lam().add(&c(3));
        let a = f.mul(&g).scale(&BigInt::from(6));
        let b = f.mul(&h).scale(&BigInt::from(4));
        assert_eq!(gcd(&a, &b), f.scale(&BigInt::from(2)));
        assert_eq!(gcd(&g, &h), c(1));
    }

    #[test]
    fn gcd_strips_monomials() {
        let a = v().pow(3).mul(&lam()).mul(&v().add(&c(1)));
        let b = v().pow(2).mul(&v().add(&c(1))).mul(&v().sub(&c(1)));
        assert_eq!(gcd(&a, &b), v().pow(2).mul(&v().add(&c(1))));
    }

    #[test]
    fn gcd_sign_is_positive() {
        let a = c(0).sub(&v()).sub(&c(1));
        assert_eq!(gcd(&a, &Poly::zero()), v().add(&c(1)));
    }

    #[test]
    fn homogenized_substitution() {
        // p = lam^2 + 1, lam := v/(v+1) -> (v^2 + (v+1)^2) / (v+1)^2
        let p = lam().pow(2).add(&c(1));
        let (h, d) = p.substitute_homogenized(Var::Lam, &v(), &v().add(&c(1)));
        assert_eq!(d, 2);
        assert_eq!(h, v().pow(2).add(&v().add(&c(1)).pow(2)));
    }
}
