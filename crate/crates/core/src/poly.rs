//! Multivariate polynomials with a fixed monomial order, and the text
//! grammar used by all document formats.
//!
//! Grammar (emitted canonically, parsed leniently w.r.t. whitespace):
//! terms joined by `+`/`-`; a term is `coeff`, `coeff*mono`, or `mono`;
//! a mono is `x^2*y` style with `^` for exponents and `*` as separator;
//! coefficients are integers or `a/b` fractions.

use crate::field::{Coeff, FieldSpec};
use num::bigint::BigInt;
use num::rational::BigRational;
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector; length equals the ring's variable count.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                // graded part equal: the monomial whose rightmost differing
                // exponent is smaller is the larger one
                for i in (0..a.0.len()).rev() {
                    match a.0[i].cmp(&b.0[i]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
        }
    }
}

impl MonomialOrder {
    pub fn from_name(s: &str) -> Option<MonomialOrder> {
        match s {
            "lex" | "lexicographic" => Some(MonomialOrder::Lex),
            "grevlex" | "graded-reverse-lexicographic" => Some(MonomialOrder::GrevLex),
            _ => None,
        }
    }
}

/// Terms strictly sorted descending in the ambient order, no zero
/// coefficients, no duplicate monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial has no non-constant term.
    pub fn as_constant(&self, field: &FieldSpec) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(field.zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }
}

/// The ambient free polynomial ring: coefficient field, named variables,
/// monomial order. All polynomial arithmetic goes through this context so
/// the sortedness invariant is maintained against one fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: FieldSpec, vars: Vec<String>, order: MonomialOrder) -> PolyRing {
        PolyRing { field, vars, order }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero()
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(Monomial::one(self.nvars()), c)] }
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn from_i64(&self, n: i64) -> Polynomial {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial { terms: vec![(Monomial::var(self.nvars(), i), self.field.one())] }
    }

    pub fn monomial(&self, m: Monomial, c: Coeff) -> Polynomial {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary (monomial, coeff) pairs into canonical form.
    pub fn from_terms(&self, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let mut terms = terms;
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.order.cmp(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&a.terms[i].1, &b.terms[j].1);
                    if !self.field.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        Polynomial {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.neg(b))
    }

    /// `a * (m, c)` for a single term.
    pub fn mul_term(&self, a: &Polynomial, m: &Monomial, c: &Coeff) -> Polynomial {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(am, ac)| (am.mul(m), self.field.mul(ac, c)))
                .collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial, c: &Coeff) -> Polynomial {
        self.mul_term(a, &Monomial::one(self.nvars()), c)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let mut acc = Polynomial::zero();
        for (m, c) in &a.terms {
            acc = self.add(&acc, &self.mul_term(b, m, c));
        }
        acc
    }

    /// Leading coefficient made 1 (no-op on zero).
    pub fn monic(&self, a: &Polynomial) -> Polynomial {
        match a.leading() {
            None => Polynomial::zero(),
            Some((_, lc)) => {
                if self.field.is_one(lc) {
                    a.clone()
                } else {
                    self.scale(a, &self.field.inv(&lc.clone()))
                }
            }
        }
    }

    pub fn pow(&self, a: &Polynomial, e: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Substitutes `values[i]` for variable `i`, mapping coefficients through
    /// `map_coeff`. Used to specialize templates into another ring.
    pub fn eval_terms<T, E>(
        &self,
        a: &Polynomial,
        one: T,
        zero: T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
        values: &[T],
        map_coeff: impl Fn(&Coeff) -> Result<T, E>,
    ) -> Result<T, E> {
        assert_eq!(values.len(), self.nvars());
        let mut acc = zero;
        for (m, c) in &a.terms {
            let mut t = map_coeff(c)?;
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = mul(&t, &values[i]);
                }
            }
            acc = add(&acc, &t);
        }
        let _ = one;
        Ok(acc)
    }

    // ---- text grammar ----

    pub fn to_string(&self, a: &Polynomial) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in a.terms.iter().enumerate() {
            let cs = self.field.coeff_to_string(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.mono_to_string(m);
            match (&mono[..], &mag[..]) {
                ("", _) => s.push_str(&mag),
                (_, "1") => s.push_str(&mono),
                _ => {
                    s.push_str(&mag);
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }

    fn mono_to_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }

    pub fn parse(&self, input: &str) -> Result<Polynomial, ParseError> {
        Parser { ring: self, input, pos: 0 }.parse_poly()
    }
}

/// A parse failure, locating the offending token by byte offset.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    ring: &'a PolyRing,
    input: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.rest().starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn parse_poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
        self.skip_ws();
        let mut sign_neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        loop {
            self.skip_ws();
            let (m, c) = self.parse_term()?;
            let c = if sign_neg { self.ring.field.neg(&c) } else { c };
            terms.push((m, c));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => {
                    self.bump();
                    sign_neg = false;
                }
                Some('-') => {
                    self.bump();
                    sign_neg = true;
                }
                Some(c) => return self.err(format!("expected '+' or '-', found {c:?}")),
            }
        }
        Ok(self.ring.from_terms(terms))
    }

    fn parse_term(&mut self) -> Result<(Monomial, Coeff), ParseError> {
        let mut coeff = None;
        let mut mono = Monomial::one(self.ring.nvars());
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = Some(self.parse_coeff()?);
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                self.parse_mono(&mut mono)?;
            }
        } else {
            self.parse_mono(&mut mono)?;
        }
        let coeff = coeff.unwrap_or_else(|| self.ring.field.one());
        Ok((mono, coeff))
    }

    fn parse_coeff(&mut self) -> Result<Coeff, ParseError> {
        let num = self.parse_integer()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let start = self.pos;
            let den = self.parse_integer()?;
            if den == BigInt::from(0) {
                self.pos = start;
                return self.err("zero denominator");
            }
            let rat = BigRational::new(num, den);
            self.ring
                .field
                .from_rational(&rat)
                .map_err(|m| ParseError { offset: start, message: m })
        } else {
            Ok(self.ring.field.from_bigint(&num))
        }
    }

    fn parse_integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok(self.input[start..self.pos].parse::<BigInt>().unwrap())
    }

    fn parse_mono(&mut self, mono: &mut Monomial) -> Result<(), ParseError> {
        loop {
            let (i, e) = self.parse_var_power()?;
            mono.0[i] += e;
            self.skip_ws();
            // a '*' continues the monomial only when followed by a variable
            let save = self.pos;
            if self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
                if matches!(self.peek(), Some(c) if c.is_alphabetic() || c == '_') {
                    continue;
                }
                self.pos = save;
                return self.err("expected a variable after '*'");
            }
            return Ok(());
        }
    }

    fn parse_var_power(&mut self) -> Result<(usize, u32), ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.bump();
        }
        if self.pos == start {
            return self.err("expected a term");
        }
        let name = &self.input[start..self.pos];
        let Some(i) = self.ring.vars.iter().position(|v| v == name) else {
            self.pos = start;
            return self.err(format!("unknown variable {name:?}"));
        };
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let estart = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
            if self.pos == estart {
                return self.err("expected an exponent after '^'");
            }
            let e: u32 = self.input[estart..self.pos]
                .parse()
                .map_err(|_| ParseError { offset: estart, message: "exponent too large".into() })?;
            Ok((i, e))
        } else {
            Ok((i, 1))
        }
    }
}
