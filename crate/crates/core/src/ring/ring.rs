use super::monomial::{var_mask, Monomial, MAX_VARS};
use crate::arith::PrimeField;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Monomial orders supported by the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order (weighted degree first).
    GRevLex,
    /// Product order of two grevlex blocks: variables `0..k` first, so any
    /// monomial involving them exceeds every monomial free of them.
    Eliminate(usize),
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    field: PrimeField,
    nvars: usize,
    weights: Vec<i32>,
    unit_weights: bool,
    order: MonomialOrder,
    names: Vec<String>,
}

/// Polynomial ring F_p[x_0..x_{n-1}] with a weight vector and monomial order.
///
/// Two rings are compatible iff all their data agree.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}]",
            self.0.field.p(),
            self.0.names.join(",")
        )
    }
}

impl Ring {
    /// Standard graded ring in variables `x0..x{n-1}` with grevlex order.
    pub fn new(field: PrimeField, nvars: usize) -> Result<Ring> {
        let names = (0..nvars).map(|i| format!("x{i}")).collect();
        Ring::build(field, vec![1; nvars], MonomialOrder::GRevLex, names)
    }

    pub fn with_names(field: PrimeField, names: &[&str]) -> Result<Ring> {
        let names = names.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        Ring::build(field, vec![1; names.len()], MonomialOrder::GRevLex, names)
    }

    fn build(
        field: PrimeField,
        weights: Vec<i32>,
        order: MonomialOrder,
        names: Vec<String>,
    ) -> Result<Ring> {
        let nvars = weights.len();
        if nvars > MAX_VARS {
            return Err(Error::TooManyVariables {
                max: MAX_VARS,
                got: nvars,
            });
        }
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::InvalidArgument("negative variable weight".into()));
        }
        if let MonomialOrder::Eliminate(k) = order {
            if k > nvars {
                return Err(Error::OutOfRange(format!("elimination block {k} > {nvars}")));
            }
        }
        let unit_weights = weights.iter().all(|&w| w == 1);
        Ok(Ring(Arc::new(RingData {
            field,
            nvars,
            weights,
            unit_weights,
            order,
            names,
        })))
    }

    /// Same variables and weights under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Ring::build(self.0.field, self.0.weights.clone(), order, self.0.names.clone())
    }

    /// Same variables and order with new weights.
    pub fn with_weights(&self, weights: Vec<i32>) -> Result<Ring> {
        if weights.len() != self.0.nvars {
            return Err(Error::DimensionMismatch("weight vector length".into()));
        }
        Ring::build(self.0.field, weights, self.0.order, self.0.names.clone())
    }

    /// Ring with the given variable names, weights and order over this field.
    pub fn custom(
        field: PrimeField,
        names: Vec<String>,
        weights: Vec<i32>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        if names.len() != weights.len() {
            return Err(Error::DimensionMismatch("names and weights".into()));
        }
        Ring::build(field, weights, order, names)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.0.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    pub fn weights(&self) -> &[i32] {
        &self.0.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.0.unit_weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Weighted degree of a monomial.
    #[inline]
    pub fn wdeg(&self, m: &Monomial) -> i32 {
        if self.0.unit_weights {
            m.degree() as i32
        } else {
            self.0
                .weights
                .iter()
                .enumerate()
                .map(|(i, w)| w * m.exponent(i) as i32)
                .sum()
        }
    }

    /// Compares monomials whose weighted degrees (possibly shifted by a
    /// module twist) are `da` and `db`.
    #[inline]
    pub(crate) fn cmp_with_deg(&self, a: &Monomial, da: i32, b: &Monomial, db: i32) -> Ordering {
        match self.0.order {
            MonomialOrder::GRevLex => da.cmp(&db).then_with(|| b.bits().cmp(&a.bits())),
            MonomialOrder::Eliminate(k) => {
                let m1 = var_mask(0, k);
                let (a1, b1) = (a.masked(m1), b.masked(m1));
                // the eliminated block is graded by plain degree so that
                // weight-0 variables still give a well-order
                let (ea, eb) = (a1.degree(), b1.degree());
                ea.cmp(&eb)
                    .then_with(|| b1.bits().cmp(&a1.bits()))
                    .then_with(|| (da - self.wdeg(&a1)).cmp(&(db - self.wdeg(&b1))))
                    .then_with(|| b.bits().cmp(&a.bits()))
            }
        }
    }

    #[inline]
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_with_deg(a, self.wdeg(a), b, self.wdeg(b))
    }

    /// Monomials of weighted degree `d`, in descending order.
    pub fn monomials_of_degree(&self, d: i32) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let n = self.nvars();
        let w = self.weights().to_vec();
        if w.contains(&0) && n > 0 {
            panic!("monomial enumeration needs positive weights");
        }
        let mut exps = vec![0u32; n];
        fn rec(i: usize, left: i32, w: &[i32], exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == w.len() {
                if left == 0 {
                    out.push(Monomial::from_exponents(exps).expect("exponent in range"));
                }
                return;
            }
            let mut e = 0;
            while e * w[i] <= left {
                exps[i] = e as u32;
                rec(i + 1, left - e * w[i], w, exps, out);
                e += 1;
            }
            exps[i] = 0;
        }
        rec(0, d, &w, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp_mono(b, a));
        out
    }

    /// Dimension of the degree-`d` piece of the ring.
    pub fn count_monomials(&self, d: i32) -> usize {
        if self.is_standard_graded() {
            if d < 0 {
                return 0;
            }
            binomial(d as i64 + self.nvars() as i64 - 1, self.nvars() as i64 - 1) as usize
        } else {
            self.monomials_of_degree(d).len()
        }
    }
}

/// Binomial coefficient with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Polynomial binomial `C(x + a, b)` evaluated at integer `x`, allowing
/// negative arguments (zero when `x + a < 0` is handled by the caller).
pub fn binomial_poly_eval(top: i64, k: i64) -> i128 {
    if k < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k {
        num *= (top - i) as i128;
        den *= (i + 1) as i128;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(101).unwrap(), n).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_examples() {
        let r = ring(3);
        // degree first
        assert_eq!(r.cmp_mono(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        // x0 x2 < x1^2 in grevlex
        assert_eq!(r.cmp_mono(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        // x0^2 > x0 x1 > x1^2 > x0 x2 > x1 x2 > x2^2
        let ms = r.monomials_of_degree(2);
        let want = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        assert_eq!(ms, want);
    }

    #[test]
    fn order_is_multiplicative() {
        let r = ring(4);
        let mons: Vec<Monomial> = (0..4).flat_map(|d| r.monomials_of_degree(d)).collect();
        for a in &mons {
            for b in &mons {
                for c in mons.iter().take(15) {
                    assert_eq!(r.cmp_mono(a, b), r.cmp_mono(&a.mul(c), &b.mul(c)));
                }
            }
        }
        let e = r.with_order(MonomialOrder::Eliminate(1)).unwrap();
        for a in &mons {
            for b in &mons {
                for c in mons.iter().take(15) {
                    assert_eq!(e.cmp_mono(a, b), e.cmp_mono(&a.mul(c), &b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let r = ring(3).with_order(MonomialOrder::Eliminate(1)).unwrap();
        assert_eq!(r.cmp_mono(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let t = r.with_weights(vec![0, 1, 1]).unwrap();
        assert_eq!(t.cmp_mono(&m(&[2, 0, 0]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(t.cmp_mono(&m(&[1, 0, 0]), &m(&[0, 3, 0])), Ordering::Greater);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(ring(3).count_monomials(4), 15);
        assert_eq!(binomial_poly_eval(-1, 2), 1);
    }
}
