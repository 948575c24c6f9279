use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{binomial_poly_eval, Monomial, Ring};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Integer polynomial in `t`, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertNumerator {
    pub coefficients: Vec<i64>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add_shifted(acc: &mut Vec<i64>, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += c;
    }
}

impl HilbertNumerator {
    pub fn new(coefficients: Vec<i64>) -> Self {
        HilbertNumerator {
            coefficients: trim(coefficients),
        }
    }

    pub fn one() -> Self {
        HilbertNumerator::new(vec![1])
    }

    pub fn coefficient(&self, j: usize) -> i64 {
        self.coefficients.get(j).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> i64 {
        self.coefficients.iter().sum()
    }

    /// Numerator of the alternating Betti sum `Σ (-1)^i β_ij t^j`.
    pub fn from_betti(entries: impl IntoIterator<Item = (usize, i32, u64)>) -> Result<Self> {
        let mut v: Vec<i64> = Vec::new();
        for (i, j, b) in entries {
            if j < 0 {
                return Err(Error::NegativeDegree(j as i64));
            }
            let s = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            add_shifted(&mut v, &[s], j as usize);
        }
        Ok(HilbertNumerator::new(v))
    }

    /// Divides by `(1 - t)` as often as possible; returns the quotient and the
    /// number of factors removed.
    pub fn strip_one_minus_t(&self, max: usize) -> (Vec<i64>, usize) {
        let mut q = self.coefficients.clone();
        let mut k = 0;
        while k < max && !q.is_empty() && q.iter().sum::<i64>() == 0 {
            // q = (1 - t) r  =>  r_j = q_0 + ... + q_j
            let mut r = Vec::with_capacity(q.len());
            let mut s = 0;
            for &c in &q[..q.len() - 1] {
                s += c;
                r.push(s);
            }
            q = trim(r);
            k += 1;
        }
        (q, k)
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (j, a) {
                (0, _) => format!("{a}"),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{a}t"),
                (_, 1) => format!("t^{j}"),
                _ => format!("{a}t^{j}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn wdeg(weights: &[i32], m: &Monomial) -> usize {
    weights
        .iter()
        .enumerate()
        .map(|(i, &w)| w as usize * m.exponent(i) as usize)
        .sum()
}

fn monomial_numerator(gens: Vec<Monomial>, weights: &[i32]) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(k, a)| gens[k + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = wdeg(weights, g);
            let mut next = acc.clone();
            add_shifted(&mut next, &acc.iter().map(|c| -c).collect::<Vec<_>>(), d);
            acc = next;
        }
        return trim(acc);
    }
    // pivot on a variable power taken from generators that are not pure powers
    let n = weights.len();
    let mixed: Vec<&Monomial> = gens
        .iter()
        .filter(|g| (0..n).filter(|&i| g.exponent(i) > 0).count() > 1)
        .collect();
    let mut best = (0usize, 0usize);
    for v in 0..n {
        let c = mixed.iter().filter(|g| g.exponent(v) > 0).count();
        if c > best.1 {
            best = (v, c);
        }
    }
    let v = best.0;
    let mut exps: Vec<u32> = mixed
        .iter()
        .map(|g| g.exponent(v))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pe = vec![0u32; n];
    pe[v] = e;
    let pivot = Monomial::from_exponents(&pe).expect("exponent below generator's");
    let mut with_pivot: Vec<Monomial> = gens
        .iter()
        .copied()
        .filter(|g| !pivot.divides(g))
        .collect();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents(n);
            ex[v] = ex[v].saturating_sub(e);
            Monomial::from_exponents(&ex[..n]).expect("smaller exponents")
        })
        .collect();
    let mut acc = monomial_numerator(with_pivot, weights);
    let c = monomial_numerator(colon, weights);
    add_shifted(&mut acc, &c, wdeg(weights, &pivot));
    trim(acc)
}

/// Numerator of the Hilbert series of `S/(leads)` over `Π (1 - t^{w_i})`.
pub fn monomial_hilbert_numerator(ring: &Ring, leads: &[Monomial]) -> HilbertNumerator {
    HilbertNumerator::new(monomial_numerator(leads.to_vec(), ring.weights()))
}

/// Numerator of the Hilbert series of `S/I` over `(1 - t)^n`, read off the
/// lead-term ideal of the Gröbner basis.
pub fn hilbert_numerator(ideal: &Ideal) -> HilbertNumerator {
    if ideal.is_zero() {
        return HilbertNumerator::one();
    }
    let leads = ideal.groebner().lead_monomials();
    monomial_hilbert_numerator(ideal.ring(), &leads)
}

/// Hilbert polynomial `P(d) = Σ_k q_k C(d - k + D - 1, D - 1)` of a module
/// whose Hilbert series is `q(t) / (1 - t)^D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    /// Krull dimension `D` of the module (0 for finite length).
    pub krull_dim: i64,
    /// Numerator after removing every factor `(1 - t)`.
    pub reduced_numerator: Vec<i64>,
}

impl HilbertPolynomial {
    /// From a numerator over `(1 - t)^nvars`.
    pub fn from_numerator(num: &HilbertNumerator, nvars: usize) -> Self {
        if num.is_zero() {
            return HilbertPolynomial {
                krull_dim: 0,
                reduced_numerator: Vec::new(),
            };
        }
        let (q, k) = num.strip_one_minus_t(nvars);
        HilbertPolynomial {
            krull_dim: (nvars - k) as i64,
            reduced_numerator: q,
        }
    }

    /// Projective dimension of the support; `-1` when empty.
    pub fn projective_dim(&self) -> i64 {
        self.krull_dim - 1
    }

    /// Leading coefficient times `(dim)!`, i.e. `q(1)`; the length for a
    /// module of finite length.
    pub fn degree(&self) -> i64 {
        self.reduced_numerator.iter().sum()
    }

    pub fn eval(&self, d: i64) -> i128 {
        if self.krull_dim == 0 {
            return 0;
        }
        let dm = self.krull_dim - 1;
        self.reduced_numerator
            .iter()
            .enumerate()
            .map(|(k, &q)| q as i128 * binomial_poly_eval(d - k as i64 + dm, dm))
            .sum()
    }

    /// Arithmetic genus `1 - P(0)` of a curve.
    pub fn arithmetic_genus(&self) -> Result<i64> {
        if self.projective_dim() != 1 {
            return Err(Error::GenusUndefined(self.projective_dim()));
        }
        Ok(1 - self.eval(0) as i64)
    }
}

/// Hilbert polynomial of `S/I` for a standard graded ring.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertPolynomial> {
    if !ideal.ring().is_standard_graded() {
        return Err(Error::InvalidArgument(
            "Hilbert polynomial needs a standard graded ring".into(),
        ));
    }
    let num = hilbert_numerator(ideal);
    Ok(HilbertPolynomial::from_numerator(&num, ideal.ring().nvars()))
}

/// Arithmetic genus of the curve defined by `I`.
pub fn genus(ideal: &Ideal) -> Result<i64> {
    hilbert_polynomial(ideal)?.arithmetic_genus()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::{parse_polynomial, random_form, Polynomial};
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    #[test]
    fn basic_numerators() {
        let r = ring(3);
        assert_eq!(hilbert_numerator(&Ideal::zero(&r)).coefficients, vec![1]);
        let f = Ideal::new(&r, vec![parse_polynomial(&r, "x0^3+x1^3+x2^3").unwrap()]).unwrap();
        assert_eq!(hilbert_numerator(&f).coefficients, vec![1, 0, 0, -1]);
        assert!(hilbert_numerator(&Ideal::unit(&r)).is_zero());
    }

    #[test]
    fn plane_curve_genus() {
        let r = ring(3);
        let mut rng = SeededRng::from_seed(2);
        let f = random_form(&r, 9, &mut rng).unwrap();
        let i = Ideal::new(&r, vec![f]).unwrap();
        let hp = hilbert_polynomial(&i).unwrap();
        assert_eq!(hp.projective_dim(), 1);
        assert_eq!(hp.degree(), 9);
        assert_eq!(hp.arithmetic_genus().unwrap(), 28);
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(4);
        let gens = ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let i = Ideal::new(&r, gens).unwrap();
        assert_eq!(hilbert_numerator(&i).coefficients, vec![1, 0, -3, 2]);
        let hp = hilbert_polynomial(&i).unwrap();
        assert_eq!((hp.projective_dim(), hp.degree()), (1, 3));
        assert_eq!(hp.arithmetic_genus().unwrap(), 0);
        for d in 0..6 {
            assert_eq!(hp.eval(d), 3 * d as i128 + 1);
        }
        let pts = Ideal::new(&r, vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2)]).unwrap();
        assert!(genus(&pts).is_err());
    }

    #[test]
    fn display() {
        let n = HilbertNumerator::new(vec![0, 0, 5, -12, 4]);
        assert_eq!(n.to_string(), "5t^2-12t^3+4t^4");
    }

    proptest! {
        #[test]
        fn recursion_matches_monomial_count(
            exps in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 1..6),
        ) {
            let r = ring(3);
            let gens: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
            let num = monomial_hilbert_numerator(&r, &gens);
            // expand num / (1-t)^3 and compare with a direct count
            let mut series = num.coefficients.clone();
            series.resize(16, 0);
            for _ in 0..3 {
                for k in 1..series.len() {
                    series[k] += series[k - 1];
                }
            }
            for d in 0..10 {
                let count = r
                    .monomials_of_degree(d)
                    .iter()
                    .filter(|m| !gens.iter().any(|g| g.divides(m)))
                    .count() as i64;
                prop_assert_eq!(series[d as usize], count);
            }
        }
    }
}
