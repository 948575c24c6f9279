use super::engine::{groebner, GbOptions, ModOrder, Reducer, VTerm, Vector};
use crate::error::{Error, Result};
use crate::ring::{MonomialOrder, Polynomial, Ring, Term};
use std::fmt;
use std::sync::OnceLock;

pub(crate) fn to_vector(ord: &ModOrder, f: &Polynomial) -> Vector {
    f.terms()
        .iter()
        .map(|t| ord.term(t.mono, 0, t.coef))
        .collect()
}

pub(crate) fn from_vector(ring: &Ring, v: &Vector) -> Polynomial {
    Polynomial::from_sorted(
        ring,
        v.iter()
            .map(|t| Term {
                mono: t.mono,
                coef: t.coef,
            })
            .collect(),
    )
}

/// Reduced Gröbner basis of an ideal with respect to the order of `ring`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub(crate) fn from_elements(ring: &Ring, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            ring: ring.clone(),
            elements,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    /// Monic elements sorted ascending by lead term.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn lead_monomials(&self) -> Vec<crate::ring::Monomial> {
        self.elements
            .iter()
            .filter_map(|g| g.lead_monomial())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_unit())
    }

    /// Remainder of `f` on division by the basis; no term of the result is
    /// divisible by a lead term.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring().nvars() != self.ring.nvars() || f.ring().field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let f = if f.ring() == &self.ring {
            f.clone()
        } else {
            f.to_ring(&self.ring)?
        };
        let ord = ModOrder::ideal(&self.ring);
        let mut red = Reducer::new(&ord);
        for g in &self.elements {
            red.push(to_vector(&ord, g));
        }
        let mut out = Polynomial::zero(&self.ring);
        // reduce each homogeneous component separately so that inhomogeneous
        // input is handled as well
        let mut by_deg: std::collections::BTreeMap<i32, Vec<Term>> = Default::default();
        for t in f.terms() {
            by_deg.entry(self.ring.wdeg(&t.mono)).or_default().push(*t);
        }
        for (_, terms) in by_deg {
            let p = Polynomial::from_terms(&self.ring, terms);
            let r = red.reduce(to_vector(&ord, &p), true);
            out = out.add(&from_vector(&self.ring, &r));
        }
        Ok(out)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

/// Homogeneous ideal given by generators, with a lazily computed Gröbner
/// basis in the order of its ring.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Gröbner basis of homogeneous polynomials in the order of `ring`.
pub(crate) fn compute_gb(ring: &Ring, gens: &[Polynomial], opts: &GbOptions) -> Result<(GroebnerBasis, Vec<usize>, bool)> {
    let ord = ModOrder::ideal(ring);
    let vecs: Vec<Vector> = gens.iter().map(|g| to_vector(&ord, g)).collect();
    let res = groebner(&ord, &vecs, opts)?;
    let elements = res.basis.iter().map(|v| from_vector(ring, v)).collect();
    Ok((
        GroebnerBasis::from_elements(ring, elements),
        res.min_gens,
        res.complete,
    ))
}

impl Ideal {
    /// Ideal generated by `gens`; zero generators are dropped and every
    /// generator must be homogeneous for the ring weights.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(format!("generator {g}")));
            }
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("constant is homogeneous")
    }

    /// The irrelevant ideal `(x_0, ..., x_{n-1})`.
    pub fn irrelevant(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::new(ring, gens).expect("variables are homogeneous")
    }

    pub(crate) fn with_gb(ring: &Ring, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Ideal {
            ring: ring.clone(),
            gens,
            gb: cell,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_unit()) || (!self.is_zero() && self.groebner().is_unit())
    }

    /// Reduced Gröbner basis in the ring's order (computed once).
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            if self.gens.iter().any(|g| g.is_unit()) {
                return GroebnerBasis::from_elements(&self.ring, vec![Polynomial::one(&self.ring)]);
            }
            compute_gb(&self.ring, &self.gens, &GbOptions::default())
                .expect("generators checked homogeneous")
                .0
        })
    }

    /// Reduced Gröbner basis in another order on the same variables.
    pub fn groebner_in(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        let r = self.ring.with_order(order)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&r))
            .collect::<Result<Vec<_>>>()?;
        Ok(compute_gb(&r, &gens, &GbOptions::default())?.0)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if self.is_zero() {
            return Ok(f.is_zero());
        }
        self.groebner().contains(f)
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual containment.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^k`, returned with minimal generators.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?.mingens_ideal()?;
        }
        Ok(acc)
    }

    /// Minimal homogeneous generators, a subset of the given generators.
    pub fn mingens(&self) -> Result<Vec<Polynomial>> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        if let Some(u) = self.gens.iter().find(|g| g.is_unit()) {
            return Ok(vec![u.clone()]);
        }
        let (gb, idx, _) = compute_gb(&self.ring, &self.gens, &GbOptions::default())?;
        let _ = self.gb.set(gb);
        Ok(idx.into_iter().map(|k| self.gens[k].clone()).collect())
    }

    /// The same ideal with minimal generators (Gröbner basis kept).
    pub fn mingens_ideal(&self) -> Result<Ideal> {
        let gens = self.mingens()?;
        Ok(Ideal::with_gb(&self.ring, gens, self.groebner().clone()))
    }

    /// Generators sorted by degree, for display and serialization.
    pub fn gens_by_degree(&self) -> Vec<Polynomial> {
        let mut g = self.gens.clone();
        g.sort_by_key(|p| p.homogeneous_degree().unwrap_or(0));
        g
    }

    /// Degrees of the generators, ascending.
    pub fn generator_degrees(&self) -> Vec<i32> {
        let mut d: Vec<i32> = self
            .gens
            .iter()
            .map(|g| g.homogeneous_degree().unwrap_or(0))
            .collect();
        d.sort_unstable();
        d
    }

    /// Degree-truncated Gröbner basis: complete in degrees `<= d`.
    pub fn groebner_truncated(&self, d: i32) -> Result<GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let opts = GbOptions {
            degree_limit: Some(d),
            ..Default::default()
        };
        let (gb, _, complete) = compute_gb(&self.ring, &self.gens, &opts)?;
        if complete {
            let _ = self.gb.set(gb.clone());
        }
        Ok(gb)
    }

    /// Elements of the basis of the degree-`d` piece of the ideal, as
    /// polynomials in echelon form (distinct lead monomials).
    pub fn graded_piece_basis(&self, d: i32) -> Result<Vec<Polynomial>> {
        let gb = self.groebner_truncated(d)?;
        let mut out = Vec::new();
        for m in self.ring.monomials_of_degree(d) {
            if let Some(g) = gb
                .elements()
                .iter()
                .find(|g| g.lead_monomial().is_some_and(|l| l.divides(&m)))
            {
                let l = g.lead_monomial().expect("nonzero");
                let u = m.div(&l);
                let p = g.mul_term(1, &u);
                let tail = Polynomial::from_terms(&self.ring, p.terms()[1..].to_vec());
                let r = gb.normal_form(&tail)?;
                out.push(Polynomial::monomial(&self.ring, 1, m).add(&r));
            }
        }
        Ok(out)
    }
}

#[allow(dead_code)]
pub(crate) fn lead_vterm(v: &Vector) -> Option<&VTerm> {
    v.first()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::{parse_polynomial, random_form};

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    /// Every S-polynomial of the basis reduces to zero.
    fn assert_buchberger(gb: &GroebnerBasis) {
        let els = gb.elements();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                let (a, b) = (&els[i], &els[j]);
                let (la, lb) = (a.lead_monomial().unwrap(), b.lead_monomial().unwrap());
                let l = la.lcm(&lb);
                let s = a.mul_term(1, &l.div(&la)).sub(&b.mul_term(1, &l.div(&lb)));
                assert!(gb.normal_form(&s).unwrap().is_zero());
            }
        }
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                if i != j {
                    let lb = b.lead_monomial().unwrap();
                    assert!(a.terms().iter().all(|t| !lb.divides(&t.mono)));
                }
            }
        }
    }

    #[test]
    fn trivial_bases() {
        let r = ring(3);
        let i = ideal(&r, &["x0"]);
        assert_eq!(i.groebner().elements(), &[parse_polynomial(&r, "x0").unwrap()]);
        let j = ideal(&r, &["x0-x1", "x1-x2"]);
        let want: Vec<Polynomial> = ["x1-x2", "x0-x2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let mut got = j.groebner().elements().to_vec();
        got.sort_by_key(|p| p.to_string());
        let mut want = want;
        want.sort_by_key(|p| p.to_string());
        assert_eq!(got, want);
        assert!(j.contains(&parse_polynomial(&r, "x0^2-x1*x2").unwrap()).unwrap());
        assert!(!j.contains(&parse_polynomial(&r, "x0").unwrap()).unwrap());
    }

    #[test]
    fn random_ideals_satisfy_buchberger_criterion() {
        let r = ring(4);
        let mut rng = SeededRng::from_seed(8);
        for trial in 0..5 {
            let gens: Vec<Polynomial> = (0..3)
                .map(|k| random_form(&r, 2 + ((k + trial) % 2), &mut rng).unwrap())
                .collect();
            let i = Ideal::new(&r, gens.clone()).unwrap();
            let gb = i.groebner();
            assert_buchberger(gb);
            for g in &gens {
                assert!(gb.contains(g).unwrap());
            }
            let h = gens[0].mul(&random_form(&r, 2, &mut rng).unwrap());
            assert!(gb.normal_form(&h).unwrap().is_zero());
            let one = Polynomial::one(&r);
            assert_eq!(gb.normal_form(&one).unwrap(), one);
        }
    }

    #[test]
    fn mingens_examples() {
        let r = ring(3);
        let i = ideal(&r, &["x0", "x0^2", "x1"]);
        assert_eq!(i.mingens().unwrap().len(), 2);
        let t = ideal(&r, &["x0*x1", "x0^2*x1", "x2^3", "x0*x1*x2+x2^3"]);
        let m = t.mingens().unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn normal_form_is_linear_and_idempotent() {
        let r = ring(3);
        let i = ideal(&r, &["x0^2-x1*x2", "x1^2-x0*x2"]);
        let gb = i.groebner();
        let mut rng = SeededRng::from_seed(1);
        for _ in 0..100 {
            let f = random_form(&r, 3, &mut rng).unwrap();
            let g = random_form(&r, 3, &mut rng).unwrap();
            let nf = gb.normal_form(&f).unwrap();
            assert_eq!(gb.normal_form(&nf).unwrap(), nf);
            let lhs = gb.normal_form(&f.add(&g.scale(5))).unwrap();
            let rhs = nf.add(&gb.normal_form(&g).unwrap().scale(5));
            assert_eq!(lhs, rhs);
        }
    }
}
