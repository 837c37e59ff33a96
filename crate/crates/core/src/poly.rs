//! Polynomial rings and their elements.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{usage, AlgebraError, Result};
use crate::field::Field;
use crate::mono::{Mono, Vars, MAX_EXP};

/// A graded polynomial ring `k[x0, ..., x_{n-1}]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    pub field: F,
    pub vars: Vars,
}

impl<F: Field> Ring<F> {
    pub fn new(field: F, n: usize) -> Self {
        Ring { field, vars: Vars::new(n) }
    }

    pub fn weighted(field: F, weights: &[u32]) -> Self {
        Ring { field, vars: Vars::weighted(weights) }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(c, Mono::ONE)
    }

    pub fn term(&self, c: F::Elem, m: Mono) -> Polynomial<F> {
        let terms = if self.field.is_zero(&c) { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial { ring: self.clone(), terms }
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.term(self.field.one(), self.vars.var(i))
    }

    pub fn monomial(&self, exps: &[u32]) -> Polynomial<F> {
        self.term(self.field.one(), self.vars.mono(exps))
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear_form(&self, coeffs: &[F::Elem]) -> Polynomial<F> {
        let terms = coeffs.iter().enumerate().map(|(i, c)| (self.vars.var(i), c.clone())).collect();
        Polynomial::from_terms(self, terms)
    }

    /// A random homogeneous form of degree `d`.
    pub fn random_form(&self, d: u32, rng: &mut dyn rand_core::RngCore) -> Polynomial<F> {
        let terms =
            self.vars.monomials_of_degree(d).into_iter().map(|m| (m, self.field.random(rng))).collect();
        Polynomial::from_terms(self, terms)
    }

    /// Random linear combination of `polys`.
    pub fn random_combination(&self, polys: &[Polynomial<F>], rng: &mut dyn rand_core::RngCore) -> Polynomial<F> {
        let mut acc = self.zero();
        for p in polys {
            acc = acc.add(&p.scale(&self.field.random(rng)));
        }
        acc
    }

    /// Parse the text grammar `3*x0^2*x1-x4^3`; whitespace is ignored.
    pub fn parse(&self, text: &str) -> Result<Polynomial<F>> {
        Parser { ring: self, chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0, len: text.len() }
            .polynomial()
    }

    fn same(&self, other: &Ring<F>) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}

/// A polynomial with terms sorted strictly descending in grevlex.
#[derive(Clone, PartialEq)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<(Mono, F::Elem)>,
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Clone, Debug)]
pub enum PolyOp<E> {
    Add,
    Mul,
    Scale(E),
}

/// Checked arithmetic: ring mismatches become usage errors.
pub fn poly_arith<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>, op: PolyOp<F::Elem>) -> Result<Polynomial<F>> {
    if !a.ring.same(&b.ring) {
        return Err(AlgebraError::RingMismatch);
    }
    Ok(match op {
        PolyOp::Add => a.add(b),
        PolyOp::Mul => a.mul(b),
        PolyOp::Scale(c) => a.scale(&c),
    })
}

impl<F: Field> Polynomial<F> {
    /// Build from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(ring: &Ring<F>, mut terms: Vec<(Mono, F::Elem)>) -> Self {
        terms.sort_by(|a, b| b.0.grevlex_cmp(a.0));
        let f = &ring.field;
        let mut out: Vec<(Mono, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if f.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if f.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusted constructor: terms already sorted, distinct, nonzero.
    pub(crate) fn from_sorted(ring: &Ring<F>, terms: Vec<(Mono, F::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.grevlex_cmp(w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Mono, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, F::Elem)> {
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

    pub fn lead(&self) -> Option<&(Mono, F::Elem)> {
        self.terms.first()
    }

    /// Largest degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.deg() == m.deg()),
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_homogeneous() {
            self.degree()
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: Mono) -> F::Elem {
        match self.terms.binary_search_by(|t| m.grevlex_cmp(t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert!(self.ring.same(&other.ring), "polynomials from different rings");
        let f = &self.ring.field;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let tb = |c: &F::Elem| if negate { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.grevlex_cmp(b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, tb(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(&a[i].1, &b[j].1) } else { f.add(&a[i].1, &b[j].1) };
                    if !f.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, tb(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(&self) -> Self {
        let f = &self.ring.field;
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect() }
    }

    pub fn mul_term(&self, c: &F::Elem, m: Mono) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), f.mul(a, c))).collect(),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.ring.same(&other.ring), "polynomials from different rings");
        let f = &self.ring.field;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                terms.push((m.mul(*n), f.mul(a, b)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.ring.field.inv(c).expect("nonzero lead")),
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let f = &self.ring.field;
        let xi = self.ring.vars.var(i);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| (xi.quotient_of(*m), f.mul(c, &f.from_i64(m.exp(i) as i64))))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        let f = &self.ring.field;
        let n = self.ring.nvars();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, x) in point.iter().enumerate().take(n) {
                for _ in 0..m.exp(i) {
                    v = f.mul(&v, x);
                }
            }
            acc = f.add(&acc, &v);
        }
        acc
    }

    /// Substitute `images[i]` for `x_i`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Polynomial<F> {
        let target = images.first().map(|p| p.ring.clone()).expect("at least one image");
        let n = self.ring.nvars();
        assert_eq!(images.len(), n, "one image per variable");
        let mut powers: Vec<Vec<Polynomial<F>>> = images.iter().map(|p| alloc::vec![target.one(), p.clone()]).collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&pw[1]);
                    pw.push(next);
                }
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Same coefficients, read in a ring with at least as many variables.
    pub fn embed(&self, ring: &Ring<F>) -> Polynomial<F> {
        assert!(ring.nvars() >= self.ring.nvars());
        let n = self.ring.nvars();
        let terms = self.terms.iter().map(|(m, c)| (ring.vars.mono(&m.exponents(n)), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return out.write_str("0");
        }
        let field = &self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut s = field.format(c);
            let neg = s.starts_with('-');
            if neg {
                s.remove(0);
            }
            if neg {
                out.write_str("-")?;
            } else if k > 0 {
                out.write_str("+")?;
            }
            if m.is_one() {
                out.write_str(&s)?;
                continue;
            }
            if s != "1" {
                write!(out, "{s}*")?;
            }
            write!(out, "{m:?}")?;
        }
        Ok(())
    }
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl<F: Field> Parser<'_, F> {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |c| c.0) + 1
    }

    fn err(&self, message: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse { column: self.column(), message: message.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }

    fn polynomial(mut self) -> Result<Polynomial<F>> {
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.peek().is_some() {
            let neg = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (m, mut c) = self.term()?;
            if neg {
                c = self.ring.field.neg(&c);
            }
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    fn term(&mut self) -> Result<(Mono, F::Elem)> {
        let field = &self.ring.field;
        let mut coef = field.one();
        if let Some(d) = self.digits() {
            coef = field.from_decimal(&d).map_err(|_| self.err("bad integer"))?;
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok((Mono::ONE, coef));
            }
        }
        let n = self.ring.nvars();
        let mut exps = alloc::vec![0u32; n];
        loop {
            if self.peek() != Some('x') {
                return Err(self.err("expected a variable `xI`"));
            }
            self.pos += 1;
            let col = self.column();
            let idx: usize = self.digits().ok_or_else(|| self.err("expected a variable index"))?.parse().unwrap_or(usize::MAX);
            if idx >= n {
                return Err(AlgebraError::Parse { column: col, message: "variable index out of range".to_string() });
            }
            let mut e = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                e = self
                    .digits()
                    .ok_or_else(|| self.err("expected an exponent"))?
                    .parse()
                    .ok()
                    .filter(|&e| e <= MAX_EXP)
                    .ok_or_else(|| self.err("exponent too large"))?;
            }
            exps[idx] += e;
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if exps.iter().enumerate().map(|(i, e)| e * self.ring.vars.weight(i)).sum::<u32>() > MAX_EXP {
            return Err(usage("degree too large"));
        }
        Ok((self.ring.vars.mono(&exps), coef))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use alloc::format;

    fn ring() -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), 5)
    }

    #[test]
    fn cancellation_and_difference_of_squares() {
        let r = ring();
        let (x0, x1) = (r.var(0), r.var(1));
        assert_eq!(x0.add(&x1).add(&x1.neg()), x0);
        assert_eq!(x0.add(&x1).mul(&x0.sub(&x1)), r.parse("x0^2-x1^2").unwrap());
    }

    #[test]
    fn scaling_over_f7() {
        let r = Ring::new(PrimeField::new(7).unwrap(), 5);
        let p = r.parse("3*x0").unwrap().scale(&5);
        assert_eq!(p, r.var(0));
    }

    #[test]
    fn mixed_rings_are_usage_errors() {
        let a = ring().var(0);
        let b = Ring::new(PrimeField::new(7).unwrap(), 5).var(0);
        assert_eq!(poly_arith(&a, &b, PolyOp::Add), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn round_trip_text() {
        let r = ring();
        for s in ["3*x0^2*x1-x4^3", "x0", "-5", "x0*x1*x2-2*x3^2+7", "0"] {
            let p = r.parse(s).unwrap();
            assert_eq!(format!("{p}"), s);
        }
        assert_eq!(format!("{}", r.parse(" 3 * x0 ^2*x1 - x4^3 ").unwrap()), "3*x0^2*x1-x4^3");
    }

    #[test]
    fn parse_errors_carry_columns() {
        let r = ring();
        match r.parse("x0+x9") {
            Err(AlgebraError::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(r.parse("x0+"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(r.parse("2x0"), Err(AlgebraError::Parse { .. })));
    }

    #[test]
    fn derivative_and_substitution() {
        let r = ring();
        let p = r.parse("x0^3*x1+x2").unwrap();
        assert_eq!(p.derivative(0), r.parse("3*x0^2*x1").unwrap());
        let imgs: Vec<_> = (0..5).map(|i| r.var((i + 1) % 5)).collect();
        assert_eq!(p.substitute(&imgs), r.parse("x1^3*x2+x3").unwrap());
    }
}
