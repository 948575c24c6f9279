use super::monomial::Monomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A nonzero term `coef * mono`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coef: u32,
}

/// Sparse polynomial with terms strictly descending in the ring order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: u32) -> Self {
        Self::monomial(ring, c, Monomial::ONE)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn monomial(ring: &Ring, c: u32, m: Monomial) -> Self {
        let c = c % ring.field().p();
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![Term { mono: m, coef: c }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::monomial(ring, 1, Monomial::var(i))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Self {
        let f = ring.field();
        let mut terms = terms;
        terms.sort_by(|a, b| ring.cmp_mono(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            let c = t.coef % f.p();
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coef = f.add(last.coef, c),
                _ => out.push(Term { mono: t.mono, coef: c }),
            }
        }
        out.retain(|t| t.coef != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already sorted, combined and nonzero.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp_mono(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coef != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
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

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    /// Nonzero constant polynomial.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// Maximum weighted degree of a term (`None` for zero).
    pub fn degree(&self) -> Option<i32> {
        self.terms.iter().map(|t| self.ring.wdeg(&t.mono)).max()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let d = self.ring.wdeg(&self.terms.first()?.mono);
        self.terms
            .iter()
            .all(|t| self.ring.wdeg(&t.mono) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::RingMismatch)
        } else {
            Ok(())
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let f = self.ring.field();
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.cmp_mono(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { f.neg(b[j].coef) } else { b[j].coef };
                    out.push(Term { mono: b[j].mono, coef: c });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        f.sub(a[i].coef, b[j].coef)
                    } else {
                        f.add(a[i].coef, b[j].coef)
                    };
                    if c != 0 {
                        out.push(Term { mono: a[i].mono, coef: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { f.neg(t.coef) } else { t.coef };
            out.push(Term { mono: t.mono, coef: c });
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Sum; panics on ring mismatch.
    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring mismatch")
    }

    /// Difference; panics on ring mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("ring mismatch")
    }

    /// Product; panics on ring mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring mismatch")
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        // Each row t * big is sorted; accumulate by merging rows.
        let mut acc = Self::zero(&self.ring);
        for t in &small.terms {
            let row = big.mul_term(t.coef, &t.mono);
            acc = acc.merge(&row, false);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono,
                    coef: f.neg(t.coef),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono,
                    coef: f.mul(t.coef, c),
                })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: u32, m: &Monomial) -> Self {
        let f = self.ring.field();
        let c = c % f.p();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    coef: f.mul(t.coef, c),
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so the lead coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(t.coef).expect("nonzero coefficient");
                self.scale(inv)
            }
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let f = self.ring.field();
        let v = Monomial::var(i);
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let e = t.mono.exponent(i);
                let c = f.mul(t.coef, e % f.p());
                (c != 0).then(|| Term {
                    mono: t.mono.div(&v),
                    coef: c,
                })
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Sum of `c * (mu / m)` over the terms `c * mu` with `m | mu`.
    pub fn contract(&self, m: &Monomial) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|t| m.divides(&t.mono))
            .map(|t| Term {
                mono: t.mono.div(m),
                coef: t.coef,
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Value at a point of F_p^n.
    pub fn eval(&self, point: &[u32]) -> u32 {
        let f = self.ring.field();
        let mut acc = 0;
        for t in &self.terms {
            let mut v = t.coef;
            for (i, &x) in point.iter().enumerate().take(self.ring.nvars()) {
                let e = t.mono.exponent(i);
                if e > 0 {
                    v = f.mul(v, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch("substitution images".into()));
        }
        if images.iter().any(|g| g.ring() != target) {
            return Err(Error::RingMismatch);
        }
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut v = Polynomial::constant(target, t.coef);
            for (i, img) in images.iter().enumerate() {
                let e = t.mono.exponent(i);
                if e > 0 {
                    let p = cache
                        .entry((i, e))
                        .or_insert_with(|| img.pow(e))
                        .clone();
                    v = v.mul(&p);
                }
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Same polynomial viewed in a ring with the same variables but possibly a
    /// different order or names.
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial> {
        if target.nvars() != self.ring.nvars() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Self::from_terms(target, self.terms.clone()))
    }

    /// Maps variable `i` to variable `map[i]` of `target`.
    pub fn rename_vars(&self, target: &Ring, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.ring.nvars() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0u32; target.nvars()];
                for i in 0..n {
                    e[map[i]] += t.mono.exponent(i);
                }
                Monomial::from_exponents(&e).map(|mono| Term { mono, coef: t.coef })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(target, terms))
    }

    /// Exact division by `g`; error unless `g` divides `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check(g)?;
        let lt = g.lead().ok_or(Error::DivisionByZero)?;
        let f = self.ring.field();
        let inv = f.inv(lt.coef)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.lead().copied() {
            if !lt.mono.divides(&t.mono) {
                return Err(Error::InvalidArgument("inexact division".into()));
            }
            let q = Term {
                mono: t.mono.div(&lt.mono),
                coef: f.mul(t.coef, inv),
            };
            rem = rem.sub(&g.mul_term(q.coef, &q.mono));
            quot.push(q);
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    /// Largest power of variable `i` dividing every term.
    pub fn var_content(&self, i: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.mono.exponent(i))
            .min()
            .unwrap_or(0)
    }

    /// Coefficient of the monomial `m`.
    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|t| t.mono == *m)
            .map(|t| t.coef)
            .unwrap_or(0)
    }

    /// True iff some variable in `vars` occurs.
    pub fn involves_any(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms
            .iter()
            .any(|t| vars.clone().any(|i| t.mono.exponent(i) > 0))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let f = self.ring.field();
        let names = self.ring.names();
        for (k, t) in self.terms.iter().enumerate() {
            let c = f.symmetric(t.coef);
            let mag = c.unsigned_abs();
            if c < 0 {
                write!(out, "-")?;
            } else if k > 0 {
                write!(out, "+")?;
            }
            let mut factors = Vec::new();
            if mag != 1 || t.mono.is_one() {
                factors.push(mag.to_string());
            }
            for (i, name) in names.iter().enumerate() {
                match t.mono.exponent(i) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(out, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
