//! Sparse polynomials over F_p with weighted degrees, and their text form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := nat | var ('^' nat)?
//! ```
//!
//! A term is usually written `[nat '*'] var^k * ...`; numeric factors are
//! accepted anywhere and multiplied into the coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

use crate::gfp::PrimeField;

pub type Exps = SmallVec<[u32; 8]>;

/// A monomial with its cached weighted degree. The derived order compares
/// degree first, then exponent vectors lexicographically (`x0 > x1 > ...`),
/// which is the graded-lex order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Exps,
}

impl Monomial {
    pub fn new(exps: &[u32], weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let degree = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        Self {
            degree,
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            degree: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(i: usize, weights: &[u32]) -> Self {
        let mut e = vec![0; weights.len()];
        e[i] = 1;
        Self::new(&e, weights)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            degree: self.degree * k,
            exps: self.exps.iter().map(|a| a * k).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: other.degree - self.degree,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let e: Vec<u32> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::new(&e, weights)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Variables (names and positive weights) over a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    weights: Vec<u32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VarError {
    #[error("duplicate variable '{0}'")]
    Duplicate(String),
    #[error("variable '{0}' has weight 0; weights must be positive")]
    ZeroWeight(String),
    #[error("invalid variable name '{0}'")]
    BadName(String),
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: &[(String, u32)]) -> Result<Self, VarError> {
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            if !valid_name(name) {
                return Err(VarError::BadName(name.clone()));
            }
            if names.contains(name) {
                return Err(VarError::Duplicate(name.clone()));
            }
            if *w == 0 {
                return Err(VarError::ZeroWeight(name.clone()));
            }
            names.push(name.clone());
            weights.push(*w);
        }
        Ok(Self { field, names, weights })
    }

    /// Standard-graded ring on the given names.
    pub fn standard(field: PrimeField, names: &[&str]) -> Result<Self, VarError> {
        let vars: Vec<(String, u32)> = names.iter().map(|n| (n.to_string(), 1)).collect();
        Self::new(field, &vars)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::new(exps, &self.weights)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty polynomial")]
    Empty,
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("malformed exponent at position {pos}")]
    MalformedExponent { pos: usize },
    #[error("unexpected character '{ch}' at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::UnknownVariable { pos, .. }
            | ParseError::MalformedExponent { pos }
            | ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnexpectedEnd { pos } => Some(*pos),
        }
    }
}

/// Polynomial over a [`PolyRing`]; no zero coefficients are stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, u32>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: u32) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Monomial::one(ring.nvars()), c);
        p
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(i, ring.weights()), 1)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, u32> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, u32> {
        self.terms
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

    /// Add `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: u32) {
        let f = self.field();
        let c = c % f.p();
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, u32)> {
        self.terms.iter().next_back().map(|(m, &c)| (m, c))
    }

    /// True iff all terms share one weighted degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|m| m.degree() == first.degree()),
        }
    }

    /// Weighted degree when homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            return None;
        }
        self.terms.keys().next().map(|m| m.degree())
    }

    /// Distinct degrees of the terms, ascending.
    pub fn term_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|m| m.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(self.field().neg(1)))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field().neg(1))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.field();
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, &a)| (t.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let f = self.field();
        let mut out = Polynomial::zero(&self.ring);
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                out.add_term(m1.mul(m2), f.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, mut k: u64) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `f^(p^e)`, computed term by term: in characteristic p the p-th power
    /// map is additive and fixes F_p.
    pub fn frobenius_pow(&self, e: u32) -> Polynomial {
        let q = (self.field().p() as u64).pow(e);
        let q = u32::try_from(q).expect("Frobenius exponent fits in u32");
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &c)| (m.pow(q), c)).collect(),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let f = self.field();
        let w = self.ring.weights();
        let mut out = Polynomial::zero(&self.ring);
        for (m, &c) in &self.terms {
            let k = m.exps()[var];
            if k == 0 {
                continue;
            }
            let coef = f.mul(c, (k as u64 % f.p() as u64) as u32);
            if coef == 0 {
                continue;
            }
            let mut e = m.exps().to_vec();
            e[var] -= 1;
            out.add_term(Monomial::new(&e, w), coef);
        }
        out
    }

    /// Homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            ring,
        }
        .poly()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        match self.src.get(self.pos) {
            None => ParseError::UnexpectedEnd { pos: self.pos },
            Some(_) => {
                let ch = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('\u{fffd}');
                ParseError::UnexpectedChar { ch, pos: self.pos }
            }
        }
    }

    fn poly(mut self) -> Result<Polynomial, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let f = self.ring.field();
        let mut out = Polynomial::zero(self.ring);
        let mut sign = 1u32;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = f.neg(1);
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, f.mul(c, sign));
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = f.neg(1);
                }
                Some(_) => return Err(self.unexpected()),
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, u32), ParseError> {
        let f = self.ring.field();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut coef = 1u32;
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let n = self.nat_mod(f.p());
                    coef = f.mul(coef, n);
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                    let idx = self.ring.var_index(name).ok_or_else(|| ParseError::UnknownVariable {
                        name: name.to_string(),
                        pos: start,
                    })?;
                    let mut k = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        k = self.exponent()?;
                    }
                    exps[idx] = exps[idx].checked_add(k).ok_or(ParseError::MalformedExponent { pos: self.pos })?;
                }
                _ => return Err(self.unexpected()),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(&exps, self.ring.weights()), coef))
    }

    fn nat_mod(&mut self, p: u32) -> u32 {
        let mut acc = 0u64;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            acc = (acc * 10 + (self.src[self.pos] - b'0') as u64) % p as u64;
            self.pos += 1;
        }
        acc as u32
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::MalformedExponent { pos: start });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse::<u32>()
            .map_err(|_| ParseError::MalformedExponent { pos: start })
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, names: &[String], f: &mut impl fmt::Write) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(&names[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

pub fn monomial_to_string(m: &Monomial, ring: &PolyRing) -> String {
    let mut s = String::new();
    fmt_monomial(m, ring.names(), &mut s).expect("string write");
    s
}

/// Leading term first; coefficients printed as canonical residues.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                if c != 1 {
                    write!(f, "{c}*")?;
                }
                fmt_monomial(m, self.ring.names(), f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        Arc::new(PolyRing::standard(PrimeField::new(p).unwrap(), names).unwrap())
    }

    fn random_poly(r: &Arc<PolyRing>, rng: &mut ChaCha8Rng, terms: usize, maxexp: u32) -> Polynomial {
        let p = r.field().p();
        Polynomial::from_terms(
            r,
            (0..terms).map(|_| {
                let e: Vec<u32> = (0..r.nvars()).map(|_| rng.gen_range(0..=maxexp)).collect();
                (r.monomial(&e), rng.gen_range(0..p))
            }),
        )
    }

    #[test]
    fn parses_fermat_cubic() {
        let r = ring(7, &["x", "y", "z"]);
        let f = Polynomial::parse("x^3 + y^3 + z^3", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(3));
    }

    #[test]
    fn reduces_negative_coefficients() {
        let r = ring(3, &["x", "y"]);
        let f = Polynomial::parse("2*x*y - y^2", &r).unwrap();
        let coefs: Vec<u32> = f.terms().values().copied().collect();
        assert_eq!(coefs, vec![2, 2]);
    }

    #[test]
    fn drops_zero_terms() {
        let r = ring(7, &["x", "y"]);
        let f = Polynomial::parse("x + 0*y", &r).unwrap();
        assert_eq!(f.to_string(), "x");
        assert!(Polynomial::parse("x - x", &r).unwrap().is_zero());
    }

    #[test]
    fn parse_errors_carry_positions() {
        let r = ring(7, &["x", "y"]);
        assert_eq!(Polynomial::parse("  ", &r), Err(ParseError::Empty));
        assert_eq!(
            Polynomial::parse("x + w", &r),
            Err(ParseError::UnknownVariable {
                name: "w".into(),
                pos: 4
            })
        );
        assert_eq!(Polynomial::parse("x^", &r), Err(ParseError::MalformedExponent { pos: 2 }));
        assert_eq!(Polynomial::parse("x^y", &r), Err(ParseError::MalformedExponent { pos: 2 }));
        assert_eq!(Polynomial::parse("x^99999999999", &r), Err(ParseError::MalformedExponent { pos: 2 }));
        assert_eq!(Polynomial::parse("x +", &r), Err(ParseError::UnexpectedEnd { pos: 3 }));
        assert!(matches!(Polynomial::parse("x $ y", &r), Err(ParseError::UnexpectedChar { ch: '$', pos: 2 })));
    }

    #[test]
    fn numeric_factors_and_constants() {
        let r = ring(5, &["x", "y"]);
        assert_eq!(Polynomial::parse("2*x*3", &r).unwrap().to_string(), "x");
        assert_eq!(Polynomial::parse("7", &r).unwrap().to_string(), "2");
        assert_eq!(Polynomial::parse("-1", &r).unwrap().to_string(), "4");
    }

    #[test]
    fn frobenius_freshman() {
        for p in [2u64, 3, 5, 7] {
            let r = ring(p, &["x", "y"]);
            let s = Polynomial::parse("x + y", &r).unwrap();
            let expect = Polynomial::parse(&format!("x^{p} + y^{p}"), &r).unwrap();
            assert_eq!(s.frobenius_pow(1), expect);
            assert_eq!(s.pow(p), expect);
        }
        let r = ring(3, &["x", "y"]);
        let x2 = Polynomial::parse("x^2", &r).unwrap();
        assert_eq!(x2.frobenius_pow(1).to_string(), "x^6");
        assert_eq!(x2.frobenius_pow(0), x2);
    }

    #[test]
    fn frobenius_matches_repeated_squaring() {
        let r = ring(5, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let f = random_poly(&r, &mut rng, 4, 3);
            // repeated squaring/multiplication oracle through the generic pow
            let mut oracle = Polynomial::one(&r);
            for _ in 0..5 {
                oracle = oracle.mul(&f);
            }
            assert_eq!(f.frobenius_pow(1), oracle);
            assert_eq!(f.frobenius_pow(2), f.pow(25));
        }
    }

    #[test]
    fn derivatives() {
        let r = ring(7, &["x", "y", "z"]);
        let f = Polynomial::parse("x^3 + y^3 + z^3", &r).unwrap();
        assert_eq!(f.partial_derivative(0).to_string(), "3*x^2");
        let r3 = ring(3, &["x"]);
        assert!(Polynomial::parse("x^3", &r3).unwrap().partial_derivative(0).is_zero());
        let r5 = ring(5, &["x", "y"]);
        let g = Polynomial::parse("2*x*y^2", &r5).unwrap();
        assert_eq!(g.partial_derivative(1).to_string(), "4*x*y");
    }

    #[test]
    fn weighted_degrees() {
        let f = PrimeField::new(7).unwrap();
        let r = Arc::new(PolyRing::new(f, &[("x".into(), 2), ("y".into(), 3)]).unwrap());
        let g = Polynomial::parse("x^3 + y^2", &r).unwrap();
        assert_eq!(g.degree(), Some(6));
        let h = Polynomial::parse("x + y", &r).unwrap();
        assert!(!h.is_homogeneous());
        assert_eq!(h.term_degrees(), vec![2, 3]);
    }

    #[test]
    fn duplicate_and_zero_weight_variables_rejected() {
        let f = PrimeField::new(7).unwrap();
        assert!(matches!(PolyRing::new(f, &[("x".into(), 1), ("x".into(), 1)]), Err(VarError::Duplicate(_))));
        assert!(matches!(PolyRing::new(f, &[("x".into(), 0)]), Err(VarError::ZeroWeight(_))));
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(seed in any::<u64>(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let r = ring(p, &["x", "y", "z", "w1"]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_poly(&r, &mut rng, 6, 4);
            prop_assert_eq!(Polynomial::parse(&f.to_string(), &r).unwrap(), f);
        }

        #[test]
        fn frobenius_is_additive(seed in any::<u64>(), e in 0u32..3) {
            let r = ring(3, &["x", "y"]);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = random_poly(&r, &mut rng, 4, 3);
            let g = random_poly(&r, &mut rng, 4, 3);
            prop_assert_eq!(f.add(&g).frobenius_pow(e), f.frobenius_pow(e).add(&g.frobenius_pow(e)));
        }

        #[test]
        fn degree_is_additive_on_products(a in 0u32..4, b in 0u32..4, c in 0u32..4, d in 0u32..4) {
            let f = PrimeField::new(5).unwrap();
            let r = Arc::new(PolyRing::new(f, &[("x".into(), 1), ("y".into(), 2)]).unwrap());
            let g = Polynomial::from_terms(&r, [(r.monomial(&[2 * a, b]), 1), (r.monomial(&[0, a + b]), 3)]);
            let h = Polynomial::from_terms(&r, [(r.monomial(&[c, d]), 2)]);
            prop_assert!(g.is_homogeneous());
            let gh = g.mul(&h);
            prop_assert_eq!(gh.degree(), Some(g.degree().unwrap() + h.degree().unwrap()));
        }
    }
}
