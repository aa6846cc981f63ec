use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

pub type Monomial = Vec<u32>;

/// Homogeneous polynomial over ℚ in `nvars` variables `x0..x{nvars-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousForm {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Monomial, Q>,
}

impl HomogeneousForm {
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Result<Self> {
        let poly = Poly::from_terms(nvars, terms);
        poly.into_form(None)
    }

    pub fn zero(nvars: usize, degree: u32) -> Self {
        HomogeneousForm {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut f = Self::zero(nvars, 0);
        if !c.is_zero() {
            f.terms.insert(vec![0; nvars], c);
        }
        f
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(m, Q::one())
    }

    pub fn monomial(exps: Monomial, coeff: Q) -> Self {
        let degree = exps.iter().sum();
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        HomogeneousForm {
            nvars,
            degree,
            terms,
        }
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(coeffs: &[Q]) -> Self {
        let nvars = coeffs.len();
        let mut f = Self::zero(nvars, 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0; nvars];
                m[i] = 1;
                f.terms.insert(m, c.clone());
            }
        }
        f
    }

    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let poly = Parser::new(s, nvars).parse()?;
        poly.into_form(None)
    }

    /// Parses and insists on the given degree (useful for the zero form).
    pub fn parse_with_degree(s: &str, nvars: usize, degree: u32) -> Result<Self> {
        let poly = Parser::new(s, nvars).parse()?;
        poly.into_form(Some(degree))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[u32]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn mul(&self, other: &HomogeneousForm) -> HomogeneousForm {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let m: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *terms.entry(m).or_insert_with(Q::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HomogeneousForm {
            nvars: self.nvars,
            degree: self.degree + other.degree,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> HomogeneousForm {
        let mut acc = HomogeneousForm::constant(self.nvars, Q::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn combine(&self, other: &HomogeneousForm, sign: i32) -> Result<HomogeneousForm> {
        if self.degree != other.degree {
            return Err(Error::MixedDegrees(self.degree, other.degree));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(m.clone()).or_insert_with(Q::zero);
            if sign > 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(HomogeneousForm {
            nvars: self.nvars,
            degree: self.degree,
            terms,
        })
    }

    pub fn add(&self, other: &HomogeneousForm) -> Result<HomogeneousForm> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HomogeneousForm) -> Result<HomogeneousForm> {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: &Q) -> HomogeneousForm {
        let mut f = self.clone();
        if c.is_zero() {
            f.terms.clear();
        } else {
            for v in f.terms.values_mut() {
                *v *= c;
            }
        }
        f
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().zip(x).fold(c.clone(), |acc, (e, xi)| {
                    acc * num_traits::pow(xi.clone(), *e as usize)
                })
            })
            .sum()
    }

    pub fn eval_int(&self, x: &[BigInt]) -> Q {
        let xs: Vec<Q> = x.iter().map(|v| Q::from_integer(v.clone())).collect();
        self.eval(&xs)
    }

    /// Scales to integer coefficients with content 1 and a positive leading
    /// coefficient. Same zero set, same ideal.
    pub fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), (c * Q::from_integer(lcm.clone())).to_integer()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        if g.is_zero() {
            return ints;
        }
        let g = if ints.last().is_some_and(|(_, c)| c.is_negative()) {
            -g
        } else {
            g
        };
        ints.into_iter().map(|(m, c)| (m, c / &g)).collect()
    }

    pub fn primitive(&self) -> HomogeneousForm {
        let terms = self
            .primitive_integer_terms()
            .into_iter()
            .map(|(m, c)| (m, Q::from_integer(c)))
            .collect();
        HomogeneousForm {
            nvars: self.nvars,
            degree: self.degree,
            terms,
        }
    }

    /// Sum of absolute values of the coefficients.
    pub fn length(&self) -> Q {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Substitutes `x_i ↦ Σ_j images[i][j]·s_j`; the result lives in
    /// `images[0].len()` variables.
    pub fn substitute_linear(&self, images: &[Vec<Q>]) -> HomogeneousForm {
        assert_eq!(images.len(), self.nvars);
        let m = images.first().map_or(0, |v| v.len());
        let lin: Vec<HomogeneousForm> = images.iter().map(|v| HomogeneousForm::linear(v)).collect();
        let mut acc = HomogeneousForm::zero(m, self.degree);
        for (mono, c) in &self.terms {
            let mut prod = HomogeneousForm::constant(m, c.clone());
            for (i, &e) in mono.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&lin[i].pow(e));
                }
            }
            acc = acc.add(&prod).expect("same degree");
        }
        acc
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{i}")
                    } else {
                        format!("x{i}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_q(&a), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Not-necessarily-homogeneous polynomial, used while parsing.
#[derive(Clone, Debug)]
struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Q::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { nvars, terms: acc }
    }

    fn constant(nvars: usize, c: Q) -> Self {
        Poly::from_terms(nvars, [(vec![0; nvars], c)])
    }

    fn add(self, other: Poly, sign: i32) -> Poly {
        let nvars = self.nvars;
        let rhs = other
            .terms
            .into_iter()
            .map(|(m, c)| (m, if sign < 0 { -c } else { c }));
        Poly::from_terms(nvars, self.terms.into_iter().chain(rhs))
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Vec::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.push((a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb));
            }
        }
        Poly::from_terms(self.nvars, out)
    }

    fn into_form(self, degree: Option<u32>) -> Result<HomogeneousForm> {
        let mut degrees = self.terms.keys().map(|m| m.iter().sum::<u32>());
        let d = match degrees.next() {
            None => degree.unwrap_or(0),
            Some(d) => d,
        };
        if self.terms.keys().any(|m| m.iter().sum::<u32>() != d) {
            return Err(Error::NotHomogeneous);
        }
        if let Some(want) = degree {
            if !self.terms.is_empty() && want != d {
                return Err(Error::MixedDegrees(want, d));
            }
        }
        Ok(HomogeneousForm {
            nvars: self.nvars,
            degree: d,
            terms: self.terms,
        })
    }
}

/// Recursive-descent parser for `x0^2*x1 - 3/2*x2^3`, `(x0+x1)^2`, `2x0x1`.
struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, nvars: usize) -> Self {
        Parser {
            src,
            chars: src.chars().collect(),
            pos: 0,
            nvars,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Poly> {
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut sign = 1;
        match self.peek() {
            Some('-') => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = Poly::constant(self.nvars, Q::zero()).add(first, sign);
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = acc.add(t, if c == '-' { -1 } else { 1 });
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(c) if c == 'x' || c == '(' || c.is_ascii_digit() => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            let mut acc = Poly::constant(self.nvars, Q::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some('x') => {
                self.pos += 1;
                let i = self.integer()?;
                let i: usize = i.try_into().map_err(|_| self.err("bad variable"))?;
                if i >= self.nvars {
                    return Err(Error::VariableOutOfRange {
                        index: i,
                        nvars: self.nvars,
                    });
                }
                let mut m = vec![0; self.nvars];
                m[i] = 1;
                Ok(Poly::from_terms(self.nvars, [(m, Q::one())]))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut v = Q::from_integer(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    v /= Q::from_integer(d);
                }
                Ok(Poly::constant(self.nvars, v))
            }
            _ => Err(self.err("expected number, variable or '('")),
        }
    }
}
