//! Laurent polynomials with a monomial denominator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg;

/// The variable `x_{ij}` of the segment between vertices `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    i: usize,
    j: usize,
}

impl Generator {
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "a generator joins two distinct vertices");
        Self {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    /// Boundary edge `(i, i+1)` or `(1, n)` of the n-gon.
    pub fn is_frozen(&self, n: usize) -> bool {
        self.j == self.i + 1 || (self.i == 1 && self.j == n)
    }

    /// `x13`, or `x1_12` once labels need two digits (`wide`).
    pub fn name(&self, wide: bool) -> String {
        if wide {
            format!("x{}_{}", self.i, self.j)
        } else {
            format!("x{}{}", self.i, self.j)
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name(self.j >= 10))
    }
}

/// Exponent vector, sparse. Ordered lexicographically with the smallest
/// generator most significant, which is a monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeMap<Generator, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of(g: Generator) -> Self {
        Self(BTreeMap::from([(g, 1)]))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, g: &Generator) -> u32 {
        self.0.get(g).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &u32)> {
        self.0.iter()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (g, e) in &other.0 {
            *out.entry(*g).or_insert(0) += e;
        }
        Self(out)
    }

    /// `self / other` if every exponent of `other` is at most ours.
    fn div(&self, other: &Self) -> Option<Self> {
        let mut out = self.0.clone();
        for (g, e) in &other.0 {
            let have = out.get_mut(g)?;
            match (*have).cmp(e) {
                Ordering::Less => return None,
                Ordering::Equal => {
                    out.remove(g);
                }
                Ordering::Greater => *have -= e,
            }
        }
        Some(Self(out))
    }

    fn lcm(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (g, e) in &other.0 {
            let slot = out.entry(*g).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Self(out)
    }

    fn reduce(&mut self, g: &Generator, by: u32) {
        if let Some(e) = self.0.get_mut(g) {
            *e -= by;
            if *e == 0 {
                self.0.remove(g);
            }
        }
    }

    fn render(&self, wide: bool) -> String {
        self.0
            .iter()
            .map(|(g, &e)| {
                if e == 1 {
                    g.name(wide)
                } else {
                    format!("{}^{e}", g.name(wide))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ga, ea)), Some((gb, eb))) => match ga.cmp(gb) {
                    // `self` has a positive exponent where `other` has none
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        unequal => return unequal,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type Terms = BTreeMap<Monomial, BigInt>;

/// `numerator / denominator` with an integer polynomial numerator and a
/// monomial denominator, kept in canonical form: no generator divides both
/// the denominator and every numerator term. Zero has an empty numerator
/// and denominator 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentElement {
    numerator: Terms,
    denominator: Monomial,
}

impl LaurentElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_parts(BTreeMap::from([(Monomial::one(), c.into())]), Monomial::one())
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_parts(BTreeMap::from([(Monomial::of(g), BigInt::one())]), Monomial::one())
    }

    /// Build from terms and a denominator, canonicalising.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>, denominator: Monomial) -> Self {
        let mut numerator = Terms::new();
        for (m, c) in terms {
            *numerator.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_parts(numerator, denominator)
    }

    fn from_parts(mut numerator: Terms, mut denominator: Monomial) -> Self {
        numerator.retain(|_, c| !c.is_zero());
        if numerator.is_empty() {
            return Self::zero();
        }
        let shared: Vec<(Generator, u32)> = denominator
            .iter()
            .map(|(g, &e)| {
                let low = numerator.keys().map(|m| m.exponent(g)).min().unwrap_or(0);
                (*g, low.min(e))
            })
            .filter(|&(_, e)| e > 0)
            .collect();
        if !shared.is_empty() {
            numerator = numerator
                .into_iter()
                .map(|(mut m, c)| {
                    for (g, e) in &shared {
                        m.reduce(g, *e);
                    }
                    (m, c)
                })
                .collect();
            for (g, e) in &shared {
                denominator.reduce(g, *e);
            }
        }
        Self {
            numerator,
            denominator,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    pub fn numerator(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Monomial {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.numerator.values().all(Signed::is_positive)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let denominator = self.denominator.lcm(&other.denominator);
        let lift = |e: &Self| -> Vec<(Monomial, BigInt)> {
            let factor = denominator.div(&e.denominator).expect("lcm is a multiple");
            e.numerator.iter().map(|(m, c)| (m.mul(&factor), c.clone())).collect()
        };
        let mut terms = lift(self);
        terms.extend(lift(other));
        Self::from_terms(terms, denominator)
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: self.numerator.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut terms = Terms::new();
        for (ma, ca) in &self.numerator {
            for (mb, cb) in &other.numerator {
                *terms.entry(ma.mul(mb)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        Self::from_parts(terms, self.denominator.mul(&other.denominator))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_parts(
            self.numerator.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            self.denominator.clone(),
        )
    }

    pub fn div_by_generator(&self, g: Generator) -> Self {
        Self::from_parts(self.numerator.clone(), self.denominator.mul(&Monomial::of(g)))
    }

    /// Exact quotient in the Laurent ring, or `None` if `divisor` does not
    /// divide `self` there.
    ///
    /// Monomials are units, so after pulling the monomial content out of the
    /// divisor's numerator the remaining polynomial must divide our numerator
    /// exactly. That division runs by leading-term elimination.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let content = divisor
            .numerator
            .keys()
            .skip(1)
            .fold(divisor.numerator.keys().next().cloned().unwrap_or_default(), |acc, m| {
                gcd_monomial(&acc, m)
            });
        let primitive: Terms = divisor
            .numerator
            .iter()
            .map(|(m, c)| (m.div(&content).expect("content divides every term"), c.clone()))
            .collect();
        let quotient = polynomial_exact_div(&self.numerator, &primitive)?;
        // self / divisor = quotient * D_divisor / (D_self * content)
        Some(Self::from_parts(
            quotient
                .into_iter()
                .map(|(m, c)| (m.mul(&divisor.denominator), c))
                .collect(),
            self.denominator.mul(&content),
        ))
    }

    /// Value at an assignment of the generators.
    pub fn evaluate(&self, value: impl Fn(Generator) -> BigInt) -> BigRational {
        let mono = |m: &Monomial| -> BigInt {
            m.iter()
                .fold(BigInt::one(), |acc, (g, &e)| acc * value(*g).pow(e))
        };
        let numerator: BigInt = self.numerator.iter().map(|(m, c)| c * mono(m)).sum();
        BigRational::new(numerator, mono(&self.denominator))
    }

    /// Sum of coefficients when the denominator is 1 after setting every
    /// generator to 1.
    pub fn at_one(&self) -> BigInt {
        self.numerator.values().sum()
    }

    /// Every generator that occurs, in numerator or denominator.
    pub fn generators(&self) -> Vec<Generator> {
        let mut gs: Vec<Generator> = self
            .numerator
            .keys()
            .flat_map(|m| m.iter().map(|(g, _)| *g).collect::<Vec<_>>())
            .chain(self.denominator.iter().map(|(g, _)| *g))
            .collect();
        gs.sort();
        gs.dedup();
        gs
    }

    /// Text form such as `(x12*x34 + x14*x23)/x13`. Generator names use the
    /// `x1_12` style when `wide` is set.
    pub fn render(&self, wide: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.numerator.iter().rev().enumerate() {
            let magnitude = c.abs();
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            match (m.is_one(), magnitude.is_one()) {
                (true, _) => out.push_str(&magnitude.to_string()),
                (false, true) => out.push_str(&m.render(wide)),
                (false, false) => {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                    out.push_str(&m.render(wide));
                }
            }
        }
        if self.denominator.is_one() {
            return out;
        }
        let numerator = if self.numerator.len() > 1 {
            format!("({out})")
        } else {
            out
        };
        let denominator = if self.denominator.degree() > 1 {
            format!("({})", self.denominator.render(wide))
        } else {
            self.denominator.render(wide)
        };
        format!("{numerator}/{denominator}")
    }
}

fn gcd_monomial(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial(
        a.0.iter()
            .filter_map(|(g, &e)| {
                let low = e.min(b.exponent(g));
                (low > 0).then_some((*g, low))
            })
            .collect(),
    )
}

fn polynomial_exact_div(dividend: &Terms, divisor: &Terms) -> Option<Terms> {
    let (lead_m, lead_c) = divisor.iter().next_back()?;
    let mut remainder = dividend.clone();
    let mut quotient = Terms::new();
    while let Some((m, c)) = remainder.iter().next_back() {
        let factor_m = m.div(lead_m)?;
        let (factor_c, rest) = num_integer::Integer::div_rem(c, lead_c);
        if !rest.is_zero() {
            return None;
        }
        for (dm, dc) in divisor {
            let key = dm.mul(&factor_m);
            let slot = remainder.entry(key.clone()).or_insert_with(BigInt::zero);
            *slot -= dc * &factor_c;
            if slot.is_zero() {
                remainder.remove(&key);
            }
        }
        quotient.insert(factor_m, factor_c);
    }
    Some(quotient)
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.generators().iter().any(|g| g.endpoints().1 >= 10);
        f.write_str(&self.render(wide))
    }
}

impl linalg::ExactDomain for LaurentElement {
    fn zero() -> Self {
        LaurentElement::zero()
    }
    fn one() -> Self {
        LaurentElement::one()
    }
    fn is_zero(&self) -> bool {
        LaurentElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentElement::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentElement::neg(self)
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        LaurentElement::exact_div(self, divisor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse Laurent element at byte {position}: {message}")]
pub struct ParseLaurentError {
    pub position: usize,
    pub message: String,
}

/// Parses the text form written by [`LaurentElement::render`].
impl FromStr for LaurentElement {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut p = Parser { chars: &compact, at: 0 };
        let value = p.quotient()?;
        if p.at != compact.len() {
            return Err(p.error("trailing input"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    chars: &'a [(usize, char)],
    at: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn error(&self, message: &str) -> ParseLaurentError {
        ParseLaurentError {
            position: self.chars.get(self.at).map_or(usize::MAX, |&(p, _)| p),
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn quotient(&mut self) -> Result<LaurentElement, ParseLaurentError> {
        let numerator = if self.eat('(') {
            let inner = self.sum()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            inner
        } else {
            self.sum()?
        };
        if !self.eat('/') {
            return Ok(numerator);
        }
        let denominator = if self.eat('(') {
            let m = self.monomial()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            m
        } else {
            self.monomial()?
        };
        Ok(LaurentElement::from_parts(numerator.numerator, denominator))
    }

    fn sum(&mut self) -> Result<LaurentElement, ParseLaurentError> {
        let mut terms = Vec::new();
        let mut negative = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(LaurentElement::from_terms(terms, Monomial::one()))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), ParseLaurentError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.number()?;
            if self.eat('*') {
                return Ok((self.monomial()?, c));
            }
            return Ok((Monomial::one(), c));
        }
        Ok((self.monomial()?, BigInt::one()))
    }

    fn number(&mut self) -> Result<BigInt, ParseLaurentError> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        let digits: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        digits.parse().map_err(|_| self.error("expected a number"))
    }

    fn monomial(&mut self) -> Result<Monomial, ParseLaurentError> {
        let mut m = self.power()?;
        while self.eat('*') {
            m = m.mul(&self.power()?);
        }
        Ok(m)
    }

    fn power(&mut self) -> Result<Monomial, ParseLaurentError> {
        if !self.eat('x') {
            return Err(self.error("expected a generator"));
        }
        let first = self.number()?;
        let (i, j) = if self.eat('_') {
            (first, self.number()?)
        } else {
            let text = first.to_string();
            if text.len() != 2 {
                return Err(self.error("generator names without '_' have two digits"));
            }
            let digit = |k: usize| BigInt::from(text.as_bytes()[k] - b'0');
            (digit(0), digit(1))
        };
        let label = |v: BigInt| -> Result<usize, ParseLaurentError> {
            usize::try_from(v)
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| self.error("bad vertex label"))
        };
        let (i, j) = (label(i)?, label(j)?);
        if i == j {
            return Err(self.error("generator endpoints must differ"));
        }
        let exponent = if self.eat('^') {
            u32::try_from(self.number()?).map_err(|_| self.error("exponent too large"))?
        } else {
            1
        };
        let mut m = Monomial::one();
        m.0.insert(Generator::new(i, j), exponent);
        Ok(m)
    }
}
