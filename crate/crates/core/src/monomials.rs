//! Monomials in the coefficients `a_0, ..., a_n` of a binary form, the
//! anti-lexicographic order on them, and sparse rational polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Result};

/// `a_0^{nu_0} a_1^{nu_1} ... a_n^{nu_n}`.
///
/// `Ord` is the anti-lexicographic order: the reversed exponent tuples
/// `(nu_n, ..., nu_0)` are compared lexicographically and the smaller tuple
/// is the greater monomial. Monomials over different `n` are ordered by `n`
/// first so that the ordering stays total; [`antilex_compare`] rejects such
/// comparisons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(!exps.is_empty(), "a monomial needs at least a_0");
        Self { exps }
    }

    /// The constant monomial for forms of degree `n`.
    pub fn one(n: u32) -> Self {
        Self::new(vec![0; n as usize + 1])
    }

    /// The variable `a_i`.
    pub fn var(n: u32, i: usize) -> Self {
        let mut exps = vec![0; n as usize + 1];
        exps[i] = 1;
        Self::new(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> u32 {
        (self.exps.len() - 1) as u32
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weight(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| i as u64 * e as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomials over different n"
        );
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * e).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps.len().cmp(&other.exps.len()).then_with(|| {
            for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Anti-lexicographic comparison of two monomials over the same `n`.
pub fn antilex_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.n() != b.n() {
        return Err(domain(format!(
            "cannot compare monomials over n = {} and n = {}",
            a.n(),
            b.n()
        )));
    }
    Ok(a.cmp(b))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "a_{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A sparse polynomial in `a_0, ..., a_n` with rational coefficients.
///
/// No stored coefficient is zero. Terms are kept in a `BTreeMap` under the
/// anti-lexicographic order, so the last entry is the leading term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SIPoly {
    n: u32,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SIPoly {
    pub fn zero(n: u32) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: u32, c: BigRational) -> Self {
        Self::from_terms(n, [(Monomial::one(n), c)])
    }

    pub fn one(n: u32) -> Self {
        Self::constant(n, BigRational::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let n = m.n();
        Self::from_terms(n, [(m, BigRational::one())])
    }

    /// Sums the given terms; zero coefficients are dropped.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.n(), n, "monomial {m} is not over n = {n}");
            accumulate(&mut out, m, c);
        }
        Self { n, terms: out }
    }

    /// Integer coefficients; convenient for literals.
    pub fn from_int_terms(n: u32, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            n,
            terms.iter().map(|&(c, e)| {
                (
                    Monomial::new(e.to_vec()),
                    BigRational::from_integer(c.into()),
                )
            }),
        )
    }

    /// Parses expressions such as `3a_1^2a_2^2 - 4a_1^3 a_3 + 1/2 a_0*a_4`.
    pub fn parse(n: u32, src: &str) -> Result<Self> {
        parse_sipoly(n, src)
    }

    pub fn n(&self) -> u32 {
        self.n
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

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    /// The greatest monomial with nonzero coefficient.
    pub fn leading_term(&self) -> Result<&Monomial> {
        self.terms
            .keys()
            .next_back()
            .ok_or_else(|| domain("the zero polynomial has no leading term"))
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// `(degree, weight)` shared by all terms, or `None` when the polynomial
    /// is zero or inhomogeneous.
    pub fn homogeneity(&self) -> Option<(u64, u64)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let dw = (first.degree(), first.weight());
        it.all(|m| (m.degree(), m.weight()) == dw).then_some(dw)
    }

    pub fn scale(&self, c: &BigRational) -> SIPoly {
        if c.is_zero() {
            return SIPoly::zero(self.n);
        }
        SIPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SIPoly {
        let mut acc = SIPoly::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rescales to integer coefficients with gcd 1 and a positive leading
    /// coefficient. The zero polynomial is returned unchanged.
    pub fn primitive(&self) -> SIPoly {
        if self.is_zero() {
            return self.clone();
        }
        let den_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if ints.last().is_some_and(Signed::is_negative) {
            g = -g;
        }
        SIPoly {
            n: self.n,
            terms: self
                .terms
                .keys()
                .cloned()
                .zip(ints)
                .map(|(m, x)| (m, BigRational::from_integer(x / &g)))
                .collect(),
        }
    }

    /// Exact evaluation at `a = (a_0, ..., a_n)`.
    pub fn evaluate(&self, a: &[BigRational]) -> BigRational {
        assert_eq!(a.len(), self.n as usize + 1, "need n + 1 values");
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in a.iter().zip(m.exponents()) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        total
    }

    fn check_same_n(&self, other: &SIPoly) {
        assert_eq!(self.n, other.n, "polynomials over different n");
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Add for &SIPoly {
    type Output = SIPoly;
    fn add(self, rhs: &SIPoly) -> SIPoly {
        self.check_same_n(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        SIPoly { n: self.n, terms }
    }
}

impl Sub for &SIPoly {
    type Output = SIPoly;
    fn sub(self, rhs: &SIPoly) -> SIPoly {
        self.check_same_n(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, m.clone(), -c);
        }
        SIPoly { n: self.n, terms }
    }
}

impl Neg for &SIPoly {
    type Output = SIPoly;
    fn neg(self) -> SIPoly {
        SIPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SIPoly {
    type Output = SIPoly;
    fn mul(self, rhs: &SIPoly) -> SIPoly {
        self.check_same_n(rhs);
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        // integer coefficients are the common case (kernel vectors are
        // primitive), so accumulate numerators over a common denominator
        let den = small
            .terms
            .values()
            .chain(large.terms.values())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = |p: &SIPoly| -> Vec<(Vec<u32>, BigInt)> {
            p.terms
                .iter()
                .map(|(m, c)| (m.exps.clone(), c.numer() * (&den / c.denom())))
                .collect()
        };
        let (a, b) = (scaled(small), scaled(large));
        let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(a.len() * b.len() / 4 + 1);
        let mut key = vec![0u32; self.n as usize + 1];
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                for ((k, x), y) in key.iter_mut().zip(ea).zip(eb) {
                    *k = x + y;
                }
                let prod = ca * cb;
                match acc.get_mut(&key) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(key.clone(), prod);
                    }
                }
            }
        }
        let den2 = &den * &den;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial { exps: e }, BigRational::new(c, den2.clone())))
            .collect();
        SIPoly { n: self.n, terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SIPoly {
            type Output = SIPoly;
            fn $m(self, rhs: SIPoly) -> SIPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for SIPoly {
    /// Descending order, e.g. `a_0^2 a_2 - a_0 a_1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SIPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SIPoly[n={}]({self})", self.n)
    }
}

/// One term of the JSON form of an [`SIPoly`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub nu: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl SIPoly {
    /// Terms in descending monomial order, coefficients as decimal strings.
    pub fn to_term_list(&self) -> Vec<TermJson> {
        self.terms()
            .map(|(m, c)| TermJson {
                nu: m.exps.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_term_list(n: u32, terms: &[TermJson]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for t in terms {
            if t.nu.len() != n as usize + 1 {
                return Err(domain(format!("term {:?} is not over n = {n}", t.nu)));
            }
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| domain(format!("bad numerator {}", t.num)))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| domain(format!("bad denominator {}", t.den)))?;
            if den.is_zero() {
                return Err(domain("zero denominator"));
            }
            accumulate(
                &mut out,
                Monomial::new(t.nu.clone()),
                BigRational::new(num, den),
            );
        }
        Ok(Self { n, terms: out })
    }
}

impl Serialize for SIPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_term_list().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SIPoly {
    /// `n` is inferred from the exponent vectors; the list must be nonempty.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let first = terms
            .first()
            .ok_or_else(|| serde::de::Error::custom("cannot infer n from an empty term list"))?;
        if first.nu.is_empty() {
            return Err(serde::de::Error::custom("empty exponent vector"));
        }
        let n = (first.nu.len() - 1) as u32;
        SIPoly::from_term_list(n, &terms).map_err(serde::de::Error::custom)
    }
}

fn parse_sipoly(n: u32, src: &str) -> Result<SIPoly> {
    let s: Vec<char> = src
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect();
    let mut pos = 0;
    let mut terms = Vec::new();
    let err = |what: &str, at: usize| domain(format!("parse error at {at} in {src:?}: {what}"));
    let number = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (*pos > start).then(|| s[start..*pos].iter().collect::<String>().parse().unwrap())
    };
    if s.is_empty() {
        return Err(err("empty input", 0));
    }
    while pos < s.len() {
        let mut sign = BigInt::one();
        if s[pos] == '+' || s[pos] == '-' {
            if s[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if !terms.is_empty() {
            return Err(err("expected + or -", pos));
        }
        let mut coeff = BigRational::from_integer(sign);
        if let Some(num) = number(&mut pos) {
            coeff *= BigRational::from_integer(num);
            if pos < s.len() && s[pos] == '/' {
                pos += 1;
                let den = number(&mut pos).ok_or_else(|| err("expected denominator", pos))?;
                if den.is_zero() {
                    return Err(err("zero denominator", pos));
                }
                coeff /= BigRational::from_integer(den);
            }
        } else if pos >= s.len() || s[pos] != 'a' {
            return Err(err("expected coefficient or a_i", pos));
        }
        let mut exps = vec![0u32; n as usize + 1];
        while pos < s.len() && s[pos] == 'a' {
            pos += 1;
            if pos >= s.len() || s[pos] != '_' {
                return Err(err("expected _ after a", pos));
            }
            pos += 1;
            let i = number(&mut pos).ok_or_else(|| err("expected index", pos))?;
            let i: usize = i.try_into().map_err(|_| err("index too large", pos))?;
            if i > n as usize {
                return Err(err("index exceeds n", pos));
            }
            let mut e = 1u32;
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                let x = number(&mut pos).ok_or_else(|| err("expected exponent", pos))?;
                e = x.try_into().map_err(|_| err("exponent too large", pos))?;
            }
            exps[i] += e;
        }
        terms.push((Monomial::new(exps), coeff));
    }
    Ok(SIPoly::from_terms(n, terms))
}
