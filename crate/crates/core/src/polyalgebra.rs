//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables come in three families, totally ordered as
//! `Q < t1 < t2 < … < x1 < x2 < …`. Monomials are compared lexicographically
//! on their exponent vectors under that order, and [`Polynomial`]'s
//! `Display` prints terms from the largest monomial down, e.g.
//! `t1**3/6 + t1*t2 + t3`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("unknown variable name {0:?}")]
    UnknownVariable(String),
    #[error("invalid coefficient {0:?}")]
    InvalidCoefficient(String),
}

/// A polynomial variable. The derived order is the crate's variable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    /// Hall–Littlewood deformation parameter.
    Q,
    /// Miwa coordinate `t_j`, `j ≥ 1`.
    T(u32),
    /// Alphabet variable `x_i`, `i ≥ 1`.
    X(u32),
}

impl Variable {
    pub fn t(index: u32) -> Self {
        assert!(index >= 1, "Miwa variables are indexed from 1");
        Variable::T(index)
    }

    pub fn x(index: u32) -> Self {
        assert!(index >= 1, "alphabet variables are indexed from 1");
        Variable::X(index)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Q => write!(f, "Q"),
            Variable::T(i) => write!(f, "t{i}"),
            Variable::X(i) => write!(f, "x{i}"),
        }
    }
}

impl FromStr for Variable {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let bad = || PolyError::UnknownVariable(s.to_string());
        if s == "Q" {
            return Ok(Variable::Q);
        }
        let (family, digits) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        if digits.is_empty()
            || digits.starts_with('0')
            || !digits.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let index: u32 = digits.parse().map_err(|_| bad())?;
        match family {
            "t" => Ok(Variable::T(index)),
            "x" => Ok(Variable::X(index)),
            _ => Err(bad()),
        }
    }
}

/// A power product of variables. Exponents are positive; the empty product is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    pub fn from_powers<I: IntoIterator<Item = (Variable, u32)>>(powers: I) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map_or(0, |i| self.0[i].1)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.0.iter().map(|&(v, _)| v)
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

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let d = other.0[j].1;
                j += 1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - d)),
                }
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    pub fn pow(&self, n: u32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * n)).collect())
    }
}

/// Lexicographic order on exponent vectors under the variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        for (&(va, ea), &(vb, eb)) in self.0.iter().zip(&other.0) {
            match va.cmp(&vb) {
                // `self` has a positive exponent where `other` has none.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e != 1 {
                write!(f, "**{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact sparse polynomial. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Variable) -> Self {
        Self::term(BigRational::one(), Monomial::var(v))
    }

    pub fn term(coeff: BigRational, monomial: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        Self { terms }
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    /// Sums like terms of an arbitrary term list.
    fn from_unsorted_terms(mut terms: Vec<(Monomial, BigRational)>) -> Polynomial {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => {
                    if merged.last().is_some_and(|(_, acc)| acc.is_zero()) {
                        merged.pop();
                    }
                    merged.push((m, c));
                }
            }
        }
        if merged.last().is_some_and(|(_, acc)| acc.is_zero()) {
            merged.pop();
        }
        Polynomial {
            terms: merged.into_iter().collect(),
        }
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // Multiplying by a monomial preserves the order, so the map can be rebuilt directly.
        Polynomial {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Integer power; negative exponents are rejected.
    pub fn pow(&self, exp: i64) -> Result<Polynomial, PolyError> {
        if exp < 0 {
            return Err(PolyError::NegativeExponent(exp));
        }
        Ok(self.pow_u32(exp as u32))
    }

    fn pow_u32(&self, mut exp: u32) -> Polynomial {
        if self.terms.len() == 1 {
            let (m, c) = self.leading_term().unwrap();
            return Polynomial::term(num_traits::pow(c.clone(), exp as usize), m.pow(exp));
        }
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution. Unbound variables are left in place.
    pub fn substitute(&self, bindings: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        let mut powers: HashMap<(Variable, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut product = Polynomial::one();
            for &(v, e) in m.powers() {
                match bindings.get(&v) {
                    Some(image) => {
                        let p = powers.entry((v, e)).or_insert_with(|| image.pow_u32(e));
                        product = &product * &*p;
                    }
                    None => kept.push((v, e)),
                }
            }
            out += &product.mul_term(&Monomial(kept), c);
        }
        out
    }

    /// Renames variables; `f` must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(Variable) -> Variable) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let renamed = Monomial::from_powers(m.powers().iter().map(|&(v, e)| (f(v), e)));
            out.add_term(renamed, c.clone());
        }
        out
    }

    /// Exact quotient `self / den`; fails unless `den` divides `self` in the
    /// polynomial ring.
    pub fn exact_divide(&self, den: &Polynomial) -> Result<Polynomial, PolyError> {
        let (lead_m, lead_c) = den.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = lead_c.recip();
        let tail: Vec<(&Monomial, &BigRational)> = den.terms.iter().rev().skip(1).collect();
        let mut rem = self.clone();
        // Quotient terms come out in strictly decreasing order.
        let mut quotient = Vec::new();
        // If den | rem then LT(rem) = LT(q)·LT(den), so a leading term that
        // is not a multiple of LT(den) proves the remainder is nonzero.
        while let Some((m, c)) = rem.terms.pop_last() {
            let qm = m.checked_div(lead_m).ok_or(PolyError::NotDivisible)?;
            let qc = c * &lead_inv;
            for &(dm, dc) in &tail {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quotient.push((qm, qc));
        }
        Ok(Polynomial {
            terms: quotient.into_iter().rev().collect(),
        })
    }

    /// Sum over terms of `Σ_v weight(v)·deg_v`, if all terms agree.
    pub fn weighted_degree(&self, weight: impl Fn(Variable) -> u32) -> Option<u32> {
        let mut degrees = self
            .terms
            .keys()
            .map(|m| m.powers().iter().map(|&(v, e)| weight(v) * e).sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::from_int(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut products: Vec<(Monomial, BigRational)> = Vec::with_capacity(self.len() * rhs.len());
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                products.push((m.mul(n), c * d));
            }
        }
        Polynomial::from_unsorted_terms(products)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { (&self).$f(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial { (&self).$f(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial { self.$f(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let numer = c.numer().abs();
            let denom = c.denom();
            if m.is_one() {
                write!(f, "{numer}")?;
            } else {
                if !numer.is_one() {
                    write!(f, "{numer}*")?;
                }
                write!(f, "{m}")?;
            }
            if !denom.is_one() {
                write!(f, "/{denom}")?;
            }
        }
        Ok(())
    }
}

struct MonomialJson<'a>(&'a Monomial);

impl Serialize for MonomialJson<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.powers().len()))?;
        for (v, e) in self.0.powers() {
            map.serialize_entry(&v.to_string(), e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    coeff: String,
    monomial: MonomialJson<'a>,
}

#[derive(Deserialize)]
struct TermJsonOwned {
    coeff: String,
    monomial: BTreeMap<String, u32>,
}

/// Encoded as an array of `{"coeff": "p/q", "monomial": {"t1": e, …}}`
/// terms in display order.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms.iter().rev() {
            seq.serialize_element(&TermJson {
                coeff: c.to_string(),
                monomial: MonomialJson(m),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<TermJsonOwned> = Vec::deserialize(deserializer)?;
        let mut out = Polynomial::zero();
        for term in raw {
            let coeff = parse_rational(&term.coeff).map_err(de::Error::custom)?;
            let mut powers = Vec::with_capacity(term.monomial.len());
            for (name, e) in term.monomial {
                powers.push((name.parse::<Variable>().map_err(de::Error::custom)?, e));
            }
            out.add_term(Monomial::from_powers(powers), coeff);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::InvalidCoefficient(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
