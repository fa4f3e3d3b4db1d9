//! Canonical rational functions in ℚ(v, lam, mu), with q = v².

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, Monomial, Poly, Var, NVARS};

/// An element of ℚ(v, lam, mu) kept in canonical form: coprime numerator and
/// denominator, denominator with positive leading coefficient, joint integer
/// content 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: Poly,
    den: Poly,
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        FieldElement { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        FieldElement { num: Poly::from_i64(c), den: Poly::one() }
    }

    pub fn from_bigint(c: BigInt) -> Self {
        FieldElement { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self> {
        Self::from_polys(Poly::from_i64(n), Poly::from_i64(d))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_polys(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
            .expect("rational has nonzero denominator")
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElement { num: p, den: Poly::one() }
    }

    pub fn var(var: Var) -> Self {
        Self::from_poly(Poly::var(var))
    }

    pub fn v() -> Self {
        Self::var(Var::V)
    }

    pub fn lam() -> Self {
        Self::var(Var::Lam)
    }

    pub fn mu() -> Self {
        Self::var(Var::Mu)
    }

    /// q = v².
    pub fn q() -> Self {
        Self::v_pow(2)
    }

    /// v^k for any integer k.
    pub fn v_pow(k: i64) -> Self {
        let m = Poly::term(Monomial::var(Var::V, k.unsigned_abs() as u32), BigInt::one());
        if k >= 0 {
            FieldElement { num: m, den: Poly::one() }
        } else {
            FieldElement { num: Poly::one(), den: m }
        }
    }

    /// q^k = v^(2k).
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    /// Builds `n/d` and canonicalizes.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return FieldElement { num, den };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: Poly, den: Poly) -> Self {
        if den.leading_coeff().is_negative() {
            FieldElement { num: num.neg(), den: den.neg() }
        } else {
            FieldElement { num, den }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Value as a rational number when the element involves no indeterminate.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(BigRational::new(n, d))
    }

    pub fn contains_var(&self, var: Var) -> bool {
        self.num.contains_var(var) || self.den.contains_var(var)
    }

    /// Number of stored terms; a rough size measure used for pivoting.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn neg(&self) -> Self {
        FieldElement { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        self.add_sub(o, false)
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_sub(o, true)
    }

    fn add_sub(&self, o: &Self, negate: bool) -> Self {
        let combine = |a: &Poly, b: &Poly| if negate { a.sub(b) } else { a.add(b) };
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        if self.den.is_one() && o.den.is_one() {
            return FieldElement { num: combine(&self.num, &o.num), den: Poly::one() };
        }
        if self.den == o.den {
            let num = combine(&self.num, &o.num);
            return Self::canonical(num, self.den.clone());
        }
        if o.den.is_one() {
            let num = combine(&self.num, &o.num.mul(&self.den));
            return FieldElement { num, den: self.den.clone() }.renormalized_sign();
        }
        if self.den.is_one() {
            let num = combine(&self.num.mul(&o.den), &o.num);
            return FieldElement { num, den: o.den.clone() }.renormalized_sign();
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let num = combine(&self.num.mul(&o.den), &o.num.mul(&self.den));
            return FieldElement { num, den: self.den.mul(&o.den) }.renormalized_sign();
        }
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = o.den.div_exact(&g).expect("gcd divides");
        let num = combine(&self.num.mul(&db), &o.num.mul(&da));
        if num.is_zero() {
            return Self::zero();
        }
        let den = da.mul(&o.den);
        let h = gcd(&num, &g);
        if h.is_one() {
            Self::fix_sign(num, den)
        } else {
            Self::fix_sign(num.div_exact(&h).expect("gcd divides"), den.div_exact(&h).expect("gcd divides"))
        }
    }

    fn renormalized_sign(self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        Self::fix_sign(self.num, self.den)
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return FieldElement { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = if o.den.is_one() { Poly::one() } else { gcd(&self.num, &o.den) };
        let g2 = if self.den.is_one() { Poly::one() } else { gcd(&o.num, &self.den) };
        let div = |p: &Poly, g: &Poly| if g.is_one() { p.clone() } else { p.div_exact(g).expect("gcd divides") };
        let num = div(&self.num, &g1).mul(&div(&o.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&o.den, &g1));
        Self::fix_sign(num, den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        Ok(FieldElement { num: self.num.pow(e), den: self.den.pow(e) })
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.mul_ref(&Self::from_int(c))
    }

    /// Exact substitution `var := expr`, then canonicalization. Because the
    /// element is canonical before substituting, removable singularities have
    /// already cancelled; a vanishing denominator afterwards is a genuine pole.
    pub fn substitute(&self, var: Var, expr: &FieldElement) -> Result<Self> {
        if !self.contains_var(var) {
            return Ok(self.clone());
        }
        if *expr == Self::var(var) {
            return Ok(self.clone());
        }
        let pole = || Error::Pole { var: var.name().to_string(), value: expr.to_string() };
        if let Some(c) = expr.num.constant_value() {
            if expr.den.is_one() {
                let n = self.num.eval_var_int(var, &c);
                let d = self.den.eval_var_int(var, &c);
                if d.is_zero() {
                    return Err(pole());
                }
                return Ok(Self::canonical(n, d));
            }
        }
        let (n, dn) = self.num.substitute_homogenized(var, &expr.num, &expr.den);
        let (d, dd) = self.den.substitute_homogenized(var, &expr.num, &expr.den);
        if d.is_zero() {
            return Err(pole());
        }
        let (n, d) = if dd >= dn {
            (n.mul(&expr.den.pow(dd - dn)), d)
        } else {
            (n, d.mul(&expr.den.pow(dn - dd)))
        };
        Self::from_polys(n, d)
    }

    /// The q → 1 limit, i.e. substitution v := 1.
    pub fn at_q_one(&self) -> Result<Self> {
        self.substitute(Var::V, &Self::one())
    }

    /// Evaluates at a rational point `(v, lam, mu)`; `None` at a pole.
    pub fn eval(&self, point: &[BigRational; NVARS]) -> Option<BigRational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Parses the canonical string form (and, more leniently, any expression
    /// built from integers, v, lam, mu, + - * / ^ and parentheses).
    pub fn parse(s: &str) -> Result<Self> {
        crate::parse::parse_field(s)
    }
}

/// Balanced quantum integer [n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹) = Σ q^(n−1−2k).
pub fn qint(n: u32) -> FieldElement {
    if n == 0 {
        return FieldElement::zero();
    }
    let terms = (0..n).map(|j| (Monomial::var(Var::V, 4 * j), BigInt::one())).collect();
    let num = Poly::from_terms(terms);
    let den = Poly::term(Monomial::var(Var::V, 2 * (n - 1)), BigInt::one());
    FieldElement::from_polys(num, den).expect("nonzero denominator")
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for FieldElement {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl std::str::FromStr for FieldElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.$f(o)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                self.$f(&o)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                self.$f(o)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                self.$f(&o)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        FieldElement::parse(s).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = fe("v^2-1").checked_div(&fe("v-1")).unwrap();
        assert_eq!(r.to_string(), "v+1");
    }

    #[test]
    fn q_plus_q_inverse() {
        let r = FieldElement::q() + FieldElement::q_pow(-1);
        assert_eq!(r.to_string(), "(v^4+1)/(v^2)");
        assert_eq!(r, qint(2));
    }

    #[test]
    fn qint_values() {
        assert!(qint(1).is_one());
        assert_eq!(qint(3).to_string(), "(v^8+v^4+1)/(v^4)");
        for n in 1..=12 {
            assert_eq!(qint(n).at_q_one().unwrap(), FieldElement::from_int(n as i64));
        }
    }

    #[test]
    fn divide_by_zero_is_error() {
        assert_eq!(fe("v").checked_div(&FieldElement::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn sign_lives_in_numerator() {
        let r = fe("1").checked_div(&fe("-2*v")).unwrap();
        assert_eq!(r.to_string(), "(-1)/(2*v)");
    }

    #[test]
    fn specialization_chain() {
        // lam/([2]lam - 1) at lam = mu/([2](1-q^-2)), then v = 1
        let two = qint(2);
        let x = FieldElement::lam().checked_div(&(two.clone() * FieldElement::lam() - FieldElement::one())).unwrap();
        let lam_val = FieldElement::mu()
            .checked_div(&(two * (FieldElement::one() - FieldElement::q_pow(-1).pow(2).unwrap())))
            .unwrap();
        let y = x.substitute(Var::Lam, &lam_val).unwrap().at_q_one().unwrap();
        assert_eq!(y, FieldElement::from_ratio(1, 2).unwrap());
    }

    #[test]
    fn removable_singularity() {
        let x = fe("v^3-v^-1");
        assert!(x.at_q_one().unwrap().is_zero());
        let y = fe("(v^2-1)/(v-1)");
        assert_eq!(y.at_q_one().unwrap(), FieldElement::from_int(2));
    }

    #[test]
    fn genuine_pole() {
        let x = fe("1/(v-1)");
        assert!(matches!(x.at_q_one(), Err(Error::Pole { .. })));
    }

    #[test]
    fn identity_substitution() {
        let x = fe("(lam^2+v)/(v*lam-3)");
        assert_eq!(x.substitute(Var::Lam, &FieldElement::lam()).unwrap(), x);
    }

    #[test]
    fn canonical_string_round_trip() {
        for s in ["(v^4+1)/(v^2)", "-3*v*lam+mu^2", "(2*lam)/(v^4*lam+v^2-1)", "0", "1"] {
            assert_eq!(fe(s).to_string(), s);
        }
    }
}
