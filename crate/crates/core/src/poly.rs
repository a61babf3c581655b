//! Sparse multivariate polynomials with exact coefficients.
//!
//! Variables come in named families (`t_i`, `β_i`, `γ_i`, `α_i`, `x_i`, `y_i`, `z`, `c_i`).
//! Terms are kept in a `BTreeMap`, so iteration order and rendering are deterministic.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    T,
    Beta,
    Gamma,
    Alpha,
    X,
    Y,
    Z,
    C,
}

impl Family {
    pub fn symbol(self) -> &'static str {
        match self {
            Family::T => "t",
            Family::Beta => "b",
            Family::Gamma => "g",
            Family::Alpha => "a",
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::C => "c",
        }
    }

    fn from_name(name: &str) -> Option<Family> {
        Some(match name {
            "t" => Family::T,
            "b" | "beta" | "β" => Family::Beta,
            "g" | "gamma" | "γ" => Family::Gamma,
            "a" | "alpha" | "α" => Family::Alpha,
            "x" => Family::X,
            "y" => Family::Y,
            "z" => Family::Z,
            "c" => Family::C,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub fn new(family: Family, index: u32) -> Var {
        Var { family, index }
    }
    pub fn t(i: u32) -> Var {
        Var::new(Family::T, i)
    }
    pub fn beta(i: u32) -> Var {
        Var::new(Family::Beta, i)
    }
    pub fn gamma(i: u32) -> Var {
        Var::new(Family::Gamma, i)
    }
    pub fn alpha(i: u32) -> Var {
        Var::new(Family::Alpha, i)
    }
    pub fn x(i: u32) -> Var {
        Var::new(Family::X, i)
    }
    pub fn y(i: u32) -> Var {
        Var::new(Family::Y, i)
    }
    pub fn z() -> Var {
        Var::new(Family::Z, 0)
    }
    pub fn c(i: u32) -> Var {
        Var::new(Family::C, i)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::Z {
            write!(f, "z")
        } else {
            write!(f, "{}_{}", self.family.symbol(), self.index)
        }
    }
}

/// A power product, stored as `(variable, exponent)` pairs sorted by variable with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits into the part whose variables satisfy `keep` and the rest.
    pub fn split(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().partition(|(v, _)| keep(*v));
        (Monomial(a), Monomial(b))
    }

    /// Graded lexicographic comparison: higher total degree first, then the larger
    /// exponent on the earliest variable.
    pub fn glex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (x, y) in self.0.iter().zip(other.0.iter()) {
            if x.0 != y.0 {
                return if x.0 < y.0 { Ordering::Greater } else { Ordering::Less };
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

pub trait Coeff:
    Clone + Zero + One + Signed + PartialEq + fmt::Display + fmt::Debug + FromStr + Send + Sync
{
}
impl Coeff for BigInt {}
impl Coeff for BigRational {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C = BigInt> {
    terms: BTreeMap<Monomial, C>,
}

pub type ZPoly = Poly<BigInt>;
pub type QPoly = Poly<BigRational>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Poly::term(Monomial::var(v), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Maximum total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Terms in canonical graded lexicographic order, leading term first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.glex_cmp(a.0));
        v
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut p = Poly::zero();
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    /// Replaces each variable in `map` by the given polynomial.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly<C>>) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut rest = Vec::new();
            for &(v, e) in m.pairs() {
                match map.get(&v) {
                    Some(p) => term = &term * &p.pow(e),
                    None => rest.push((v, e)),
                }
            }
            out += term.mul_monomial(&Monomial(rest));
        }
        out
    }

    /// Groups terms by the part of each monomial whose variables satisfy `main`;
    /// the values are the cofactor polynomials in the remaining variables.
    pub fn split_by(&self, main: impl Fn(Var) -> bool) -> BTreeMap<Monomial, Poly<C>> {
        let mut out: BTreeMap<Monomial, Poly<C>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (a, b) = m.split(&main);
            out.entry(a).or_default().add_term(b, c.clone());
        }
        out
    }

    /// Leading monomial in graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| a.0.glex_cmp(b.0))
    }
}

impl ZPoly {
    pub fn from_i64(c: i64) -> ZPoly {
        Poly::constant(BigInt::from(c))
    }

    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// The sum `t_e - t_f` written in the `β_i = t_i - t_{i+1}` basis.
    pub fn t_interval_to_beta(e: u32, f: u32) -> Result<ZPoly> {
        if e == 0 || e >= f {
            return Err(Error::Unsupported(format!("interval t_{e}-t_{f} needs 1 <= e < f")));
        }
        let mut p = ZPoly::zero();
        for i in e..f {
            p += ZPoly::var(Var::beta(i));
        }
        Ok(p)
    }

    /// Rewrites a polynomial in the `t` variables as a polynomial in the `β` variables.
    /// Fails unless the polynomial is invariant under translating all `t_i` together.
    pub fn t_to_beta(&self) -> Result<ZPoly> {
        let ts: Vec<u32> = self
            .variables()
            .into_iter()
            .filter(|v| v.family == Family::T)
            .map(|v| v.index)
            .collect();
        let top = ts.iter().copied().max().unwrap_or(1);
        let mut fwd = BTreeMap::new();
        let mut back = BTreeMap::new();
        for i in 1..=top {
            let mut s = ZPoly::zero();
            for j in 1..i {
                s -= ZPoly::var(Var::beta(j));
            }
            fwd.insert(Var::t(i), s);
        }
        for j in 1..top {
            back.insert(Var::beta(j), ZPoly::var(Var::t(j)) - ZPoly::var(Var::t(j + 1)));
        }
        let b = self.substitute(&fwd);
        if b.substitute(&back) != *self {
            return Err(Error::Unsupported(format!(
                "{self} is not a polynomial in the differences t_i - t_(i+1)"
            )));
        }
        Ok(b)
    }
}

impl QPoly {
    pub fn to_integer(&self) -> Option<ZPoly> {
        let mut p = ZPoly::zero();
        for (m, c) in self.terms() {
            if !c.is_integer() {
                return None;
            }
            p.add_term(m.clone(), c.to_integer());
        }
        Some(p)
    }
}

impl<C: Coeff> AddAssign<Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: Poly<C>) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<C: Coeff> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: Poly<C>) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl<C: Coeff> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += rhs;
        self
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        p += rhs;
        p
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= rhs;
        self
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut p = self.clone();
        p -= rhs;
        p
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (m, c) in terms {
            map.serialize_entry(&m.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<C: Coeff> FromStr for Poly<C> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: &chars, i: 0 };
        let out = p.expr()?;
        if p.i != chars.len() {
            return Err(Error::Parse(format!("unexpected input at offset {} in {s:?}", p.i)));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    s: &'a [char],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.i).copied()
    }

    fn number(&mut self) -> String {
        let start = self.i;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.i += 1;
        }
        self.s[start..self.i].iter().collect()
    }

    fn expr<C: Coeff>(&mut self) -> Result<Poly<C>> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some('+') => {
                    self.i += 1;
                    false
                }
                Some('-') => {
                    self.i += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.product()?;
            if neg {
                acc -= t;
            } else {
                acc += t;
            }
        }
        Ok(acc)
    }

    fn product<C: Coeff>(&mut self) -> Result<Poly<C>> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.i += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some('^') {
            self.i += 1;
            let n = self.number();
            return n.parse().map_err(|_| Error::Parse("bad exponent".into()));
        }
        Ok(1)
    }

    fn factor<C: Coeff>(&mut self) -> Result<Poly<C>> {
        let base = match self.peek() {
            Some('(') => {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                self.i += 1;
                e
            }
            Some(c) if c.is_ascii_digit() => {
                let mut n = self.number();
                if self.peek() == Some('/') {
                    self.i += 1;
                    n = format!("{n}/{}", self.number());
                }
                let c = n
                    .parse::<C>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {n}")))?;
                Poly::constant(c)
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.i;
                while matches!(self.peek(), Some(c) if c.is_alphabetic()) {
                    self.i += 1;
                }
                let name: String = self.s[start..self.i].iter().collect();
                let fam = Family::from_name(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable family {name}")))?;
                if self.peek() == Some('_') {
                    self.i += 1;
                }
                let idx = self.number();
                let index = if fam == Family::Z {
                    0
                } else {
                    idx.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("variable {name} needs an index")))?
                };
                Poly::var(Var::new(fam, index))
            }
            _ => return Err(Error::Parse(format!("unexpected character at offset {}", self.i))),
        };
        let e = self.exponent()?;
        Ok(base.pow(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("(t_2-t_5)+(t_1-t_4)").to_string(), "t_1+t_2-t_4-t_5");
        assert_eq!(p("g_2^2 + g_1*g_2").to_string(), "g_1*g_2+g_2^2");
        assert_eq!(p("3*a_1*a_2^2 - 2 + z^3").to_string(), "3*a_1*a_2^2+z^3-2");
        assert_eq!(p("t_1 - t_1").to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["t_1+t_2-t_4-t_5", "2*g_1^3+3*g_1^2*g_2+g_1*g_2^2", "-b_1", "7"] {
            assert_eq!(p(s).to_string(), s);
        }
        let q: QPoly = "1/2*z^2 - 3".parse().unwrap();
        assert_eq!(q.to_string(), "1/2*z^2-3");
    }

    #[test]
    fn arithmetic() {
        let a = p("x_1 - y_1");
        assert_eq!((&a * &a).to_string(), "x_1^2-2*x_1*y_1+y_1^2");
        assert_eq!(a.pow(0), ZPoly::one());
        let mut m = BTreeMap::new();
        m.insert(Var::y(1), p("x_1"));
        assert!(a.substitute(&m).is_zero());
    }

    #[test]
    fn beta_conversion() {
        assert_eq!(ZPoly::t_interval_to_beta(2, 5).unwrap().to_string(), "b_2+b_3+b_4");
        assert!(ZPoly::t_interval_to_beta(3, 3).is_err());
        let c = p("(t_1-t_4)*(t_2-t_3)");
        let b = c.t_to_beta().unwrap();
        let e = ZPoly::t_interval_to_beta(1, 4).unwrap() * ZPoly::t_interval_to_beta(2, 3).unwrap();
        assert_eq!(b, e);
        assert!(p("t_1").t_to_beta().is_err());
    }
}
