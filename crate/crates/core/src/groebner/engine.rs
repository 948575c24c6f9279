//! Homogeneous Buchberger algorithm over graded free modules.
//!
//! Elements are vectors of terms `coef * mono * e_comp`; an ideal is the rank-1
//! case. Pairs are processed degree by degree (normal strategy). For
//! homogeneous input the sugar of a pair equals its degree, so the sugar
//! strategy and the normal strategy coincide. Input generators are fed in at
//! their degree after all pairs of that degree, which makes the input
//! generators that survive reduction a minimal generating set.

use crate::arith::PrimeField;
use crate::error::{Error, Result};
use crate::ring::{Monomial, Ring};
use std::cmp::Ordering;
use std::collections::HashMap;

/// Term of a module element; `deg` caches the weighted degree of `mono` plus
/// the twist of `comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct VTerm {
    pub mono: Monomial,
    pub deg: i32,
    pub comp: u32,
    pub coef: u32,
}

pub(crate) type Vector = Vec<VTerm>;

/// Term order on a graded free module: optionally components below `split`
/// dominate all others, then the ring order on degree-shifted monomials, then
/// lower component index first.
#[derive(Clone, Debug)]
pub(crate) struct ModOrder {
    pub ring: Ring,
    pub twists: Vec<i32>,
    pub split: u32,
}

impl ModOrder {
    pub fn ideal(ring: &Ring) -> Self {
        ModOrder {
            ring: ring.clone(),
            twists: vec![0],
            split: 0,
        }
    }

    pub fn module(ring: &Ring, twists: Vec<i32>) -> Self {
        ModOrder {
            ring: ring.clone(),
            twists,
            split: 0,
        }
    }

    #[inline]
    pub fn term(&self, mono: Monomial, comp: u32, coef: u32) -> VTerm {
        VTerm {
            mono,
            deg: self.ring.wdeg(&mono) + self.twists[comp as usize],
            comp,
            coef,
        }
    }

    #[inline]
    pub fn cmp(&self, a: &VTerm, b: &VTerm) -> Ordering {
        if self.split > 0 {
            let (pa, pb) = (a.comp < self.split, b.comp < self.split);
            if pa != pb {
                return pa.cmp(&pb);
            }
        }
        self.ring
            .cmp_with_deg(&a.mono, a.deg, &b.mono, b.deg)
            .then_with(|| b.comp.cmp(&a.comp))
    }

    /// Sorts terms descending and merges duplicates.
    pub fn normalize(&self, mut v: Vector) -> Vector {
        let f = self.ring.field();
        v.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vector = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(l) if l.mono == t.mono && l.comp == t.comp => l.coef = f.add(l.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        out
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct GbOptions {
    /// Stop once every remaining pair and input has degree above this.
    pub degree_limit: Option<i32>,
    /// Skip the final tail reduction (basis is then minimal but not reduced).
    pub skip_tail_reduction: bool,
}

pub(crate) struct GbResult {
    /// Minimal Gröbner basis, monic, sorted ascending by lead term; reduced
    /// unless tail reduction was skipped.
    pub basis: Vec<Vector>,
    /// Indices of the input generators that form a minimal generating set.
    pub min_gens: Vec<usize>,
    /// False when the degree limit cut the computation short.
    pub complete: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    deg: i32,
}

/// Reducer set with a memo from monomials to a reducing element.
pub(crate) struct Reducer<'a> {
    ord: &'a ModOrder,
    field: PrimeField,
    pub polys: Vec<Vector>,
    memo: HashMap<(u128, u32), (u32, u32)>,
    buf: Vector,
}

const NONE: u32 = u32::MAX;

impl<'a> Reducer<'a> {
    pub fn new(ord: &'a ModOrder) -> Self {
        Reducer {
            ord,
            field: ord.ring.field(),
            polys: Vec::new(),
            memo: HashMap::new(),
            buf: Vec::new(),
        }
    }

    /// Adds an element (made monic) and returns its index.
    pub fn push(&mut self, mut v: Vector) -> usize {
        let f = self.field;
        if let Some(l) = v.first() {
            if l.coef != 1 {
                let inv = f.inv(l.coef).expect("nonzero lead");
                for t in v.iter_mut() {
                    t.coef = f.mul(t.coef, inv);
                }
            }
        }
        self.polys.push(v);
        self.polys.len() - 1
    }

    fn find(&mut self, t: &VTerm) -> Option<usize> {
        let key = (t.mono.bits(), t.comp);
        let (found, scanned) = self.memo.get(&key).copied().unwrap_or((NONE, 0));
        if found != NONE {
            return Some(found as usize);
        }
        let mut hit = NONE;
        for (k, p) in self.polys.iter().enumerate().skip(scanned as usize) {
            let l = &p[0];
            if l.comp == t.comp && l.mono.divides(&t.mono) {
                hit = k as u32;
                break;
            }
        }
        self.memo.insert(key, (hit, self.polys.len() as u32));
        (hit != NONE).then_some(hit as usize)
    }

    /// `cur[from..] - c * u * g[1..]`, assuming `cur[from - 1]` cancels `c * u * g[0]`.
    fn sub_mul(&mut self, cur: &[VTerm], c: u32, u: &Monomial, du: i32, g: &[VTerm]) -> Vector {
        let f = self.field;
        let ord = self.ord;
        let negc = f.neg(c);
        let mut out = std::mem::take(&mut self.buf);
        out.clear();
        out.reserve(cur.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let gt = |k: usize| -> VTerm {
            let t = &g[k];
            VTerm {
                mono: t.mono.mul(u),
                deg: t.deg + du,
                comp: t.comp,
                coef: f.mul(t.coef, negc),
            }
        };
        let mut next_g = if j < g.len() { Some(gt(j)) } else { None };
        while i < cur.len() {
            let Some(b) = next_g else { break };
            match ord.cmp(&cur[i], &b) {
                Ordering::Greater => {
                    out.push(cur[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                    next_g = if j < g.len() { Some(gt(j)) } else { None };
                }
                Ordering::Equal => {
                    let s = f.add(cur[i].coef, b.coef);
                    if s != 0 {
                        out.push(VTerm { coef: s, ..cur[i] });
                    }
                    i += 1;
                    j += 1;
                    next_g = if j < g.len() { Some(gt(j)) } else { None };
                }
            }
        }
        out.extend_from_slice(&cur[i..]);
        while let Some(b) = next_g {
            out.push(b);
            j += 1;
            next_g = if j < g.len() { Some(gt(j)) } else { None };
        }
        out
    }

    /// Reduces `h`; with `full` every term is reduced, otherwise only the lead.
    pub fn reduce(&mut self, h: Vector, full: bool) -> Vector {
        let mut done: Vector = Vec::new();
        let mut cur = h;
        let mut start = 0;
        while start < cur.len() {
            let t = cur[start];
            match self.find(&t) {
                None => {
                    if !full {
                        done.extend_from_slice(&cur[start..]);
                        return done;
                    }
                    done.push(t);
                    start += 1;
                }
                Some(k) => {
                    let g = std::mem::take(&mut self.polys[k]);
                    let u = t.mono.div(&g[0].mono);
                    let du = t.deg - g[0].deg;
                    let next = self.sub_mul(&cur[start + 1..], t.coef, &u, du, &g[1..]);
                    self.polys[k] = g;
                    self.buf = std::mem::replace(&mut cur, next);
                    start = 0;
                }
            }
        }
        done
    }
}

struct Engine<'a> {
    ord: &'a ModOrder,
    red: Reducer<'a>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    product_criterion: bool,
}

impl<'a> Engine<'a> {
    fn lead(&self, k: usize) -> &VTerm {
        &self.red.polys[k][0]
    }

    fn pair_deg(&self, lcm: &Monomial, comp: u32) -> i32 {
        self.ord.ring.wdeg(lcm) + self.ord.twists[comp as usize]
    }

    /// Gebauer–Möller update after adding element `h`.
    fn update(&mut self, h: usize) {
        let lh = *self.lead(h);
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for &g in &self.active {
            let lg = self.lead(g);
            if lg.comp != lh.comp {
                continue;
            }
            let lcm = lh.mono.lcm(&lg.mono);
            let coprime = self.product_criterion && lh.mono.coprime(&lg.mono);
            cand.push((g, lcm, coprime));
        }
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cand.len() {
            let (g, lcm, coprime) = cand[idx];
            let divided = cand[idx + 1..].iter().any(|c| c.1.divides(&lcm))
                || kept.iter().any(|c| c.1.divides(&lcm));
            if coprime || !divided {
                kept.push((g, lcm, coprime));
            }
        }
        let comp = lh.comp;
        self.pairs.retain(|p| {
            if p.comp != comp || !lh.mono.divides(&p.lcm) {
                return true;
            }
            let li = self.red.polys[p.i][0].mono.lcm(&lh.mono);
            let lj = self.red.polys[p.j][0].mono.lcm(&lh.mono);
            li == p.lcm || lj == p.lcm
        });
        for (g, lcm, coprime) in kept {
            if !coprime {
                let deg = self.pair_deg(&lcm, comp);
                self.pairs.push(Pair {
                    i: g,
                    j: h,
                    lcm,
                    comp,
                    deg,
                });
            }
        }
        let polys = &self.red.polys;
        self.active.retain(|&g| {
            let lg = &polys[g][0];
            !(lg.comp == comp && lh.mono.divides(&lg.mono))
        });
        self.active.push(h);
    }

    fn spoly(&mut self, p: &Pair) -> Vector {
        let gi = std::mem::take(&mut self.red.polys[p.i]);
        let gj = &self.red.polys[p.j];
        let ui = p.lcm.div(&gi[0].mono);
        let uj = p.lcm.div(&gj[0].mono);
        let dui = self.ord.ring.wdeg(&ui);
        let duj = self.ord.ring.wdeg(&uj);
        let first: Vector = gi[1..]
            .iter()
            .map(|t| VTerm {
                mono: t.mono.mul(&ui),
                deg: t.deg + dui,
                ..*t
            })
            .collect();
        let gj = gj.clone();
        self.red.polys[p.i] = gi;
        self.red.sub_mul(&first, 1, &uj, duj, &gj[1..])
    }

    fn add(&mut self, v: Vector) -> usize {
        let k = self.red.push(v);
        self.update(k);
        k
    }
}

fn check_homogeneous(v: &Vector) -> Result<()> {
    if let Some(f) = v.first() {
        if v.iter().any(|t| t.deg != f.deg) {
            return Err(Error::Inhomogeneous(
                "Gröbner input must be homogeneous for the ring weights and twists".into(),
            ));
        }
    }
    Ok(())
}

/// Gröbner basis of the submodule generated by `gens` (each sorted by `ord`).
pub(crate) fn groebner(ord: &ModOrder, gens: &[Vector], opts: &GbOptions) -> Result<GbResult> {
    for g in gens {
        check_homogeneous(g)?;
    }
    let mut inputs: Vec<(i32, usize)> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_empty())
        .map(|(k, g)| (g[0].deg, k))
        .collect();
    inputs.sort();
    let mut eng = Engine {
        ord,
        red: Reducer::new(ord),
        active: Vec::new(),
        pairs: Vec::new(),
        product_criterion: ord.twists.len() == 1,
    };
    let mut min_gens = Vec::new();
    let mut next_input = 0;
    let mut complete = true;
    loop {
        let dp = eng.pairs.iter().map(|p| p.deg).min();
        let di = inputs.get(next_input).map(|x| x.0);
        let d = match (dp, di) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.degree_limit.is_some_and(|lim| d > lim) {
            complete = false;
            break;
        }
        if dp == Some(d) {
            let mut batch: Vec<Pair> = Vec::new();
            let mut rest = Vec::with_capacity(eng.pairs.len());
            for p in eng.pairs.drain(..) {
                if p.deg == d {
                    batch.push(p);
                } else {
                    rest.push(p);
                }
            }
            eng.pairs = rest;
            batch.sort_by(|a, b| {
                let ta = VTerm { mono: a.lcm, deg: a.deg, comp: a.comp, coef: 1 };
                let tb = VTerm { mono: b.lcm, deg: b.deg, comp: b.comp, coef: 1 };
                ord.cmp(&ta, &tb).then((a.i, a.j).cmp(&(b.i, b.j)))
            });
            for p in batch {
                let s = eng.spoly(&p);
                let r = eng.red.reduce(s, true);
                if !r.is_empty() {
                    eng.add(r);
                }
            }
            continue;
        }
        while let Some(&(dg, k)) = inputs.get(next_input) {
            if dg != d {
                break;
            }
            next_input += 1;
            let r = eng.red.reduce(gens[k].clone(), true);
            if !r.is_empty() {
                min_gens.push(k);
                eng.add(r);
            }
        }
    }
    let mut active = eng.active.clone();
    active.sort_by(|&a, &b| ord.cmp(eng.lead(a), eng.lead(b)));
    let mut basis = Vec::with_capacity(active.len());
    for &k in &active {
        let g = eng.red.polys[k].clone();
        if opts.skip_tail_reduction || g.len() == 1 {
            basis.push(g);
            continue;
        }
        let tail = eng.red.reduce(g[1..].to_vec(), true);
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(g[0]);
        v.extend(tail);
        basis.push(v);
    }
    min_gens.sort_unstable();
    Ok(GbResult {
        basis,
        min_gens,
        complete,
    })
}
