use super::field::PrimeField;
use super::rng::SeededRng;
use crate::error::{Error, Result};

/// Attempts allowed for one randomized equal-degree split.
pub const SPLIT_ATTEMPTS: usize = 64;

/// Dense univariate polynomial over F_p, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl UnivariatePoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let mut f = UnivariatePoly {
            field,
            coeffs: coeffs.into_iter().map(|c| c % field.p()).collect(),
        };
        f.trim();
        f
    }

    pub fn zero(field: PrimeField) -> Self {
        UnivariatePoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::new(field, vec![0, 1])
    }

    /// Product of `(x - r)` over the given roots.
    pub fn from_roots(field: PrimeField, roots: &[u32]) -> Self {
        roots.iter().fold(Self::constant(field, 1), |acc, &r| {
            acc.mul(&Self::new(field, vec![field.neg(r % field.p()), 1]))
        })
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn eval(&self, a: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, a), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.field.add(a, b)
            })
            .collect();
        Self::new(self.field, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.field.sub(a, b)
            })
            .collect();
        Self::new(self.field, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = &self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Self::new(self.field, c)
    }

    pub fn scale(&self, s: u32) -> Self {
        Self::new(
            self.field,
            self.coeffs.iter().map(|&c| self.field.mul(c, s)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.p() as u64) as u32))
            .collect();
        Self::new(self.field, c)
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let dd = d.coeffs.len() - 1;
        let inv = f.inv(d.leading())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut q = vec![0u32; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c != 0 {
                for (j, &b) in d.coeffs.iter().enumerate() {
                    r[k + j] = f.sub(r[k + j], f.mul(c, b));
                }
            }
        }
        r.truncate(dd);
        Ok((Self::new(self.field, q), Self::new(self.field, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::constant(self.field, 1).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            base = base.mul(&base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, m)` with
    /// `f = Π g^m` and each `g` squarefree.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_rem(&c)?.0;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_rem(&y)?.0;
            if z.degree().unwrap_or(0) > 0 {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_rem(&w)?.0;
        }
        if !c.is_one() {
            let p = self.field.p() as usize;
            let root: Vec<u32> = c.coeffs.iter().step_by(p).copied().collect();
            let root = Self::new(self.field, root);
            for (g, m) in root.squarefree_decomposition()? {
                out.push((g, m * p));
            }
        }
        Ok(out)
    }

    /// Distinct-degree factorization of a squarefree monic polynomial:
    /// pairs `(g_i, i)` where `g_i` is the product of all degree-`i` factors.
    pub fn distinct_degree(&self) -> Result<Vec<(Self, usize)>> {
        let p = self.field.p() as u64;
        let x = Self::x(self.field);
        let mut g = self.monic();
        let mut out = Vec::new();
        let mut h = x.rem(&g)?;
        let mut i = 1;
        while g.degree().unwrap_or(0) >= 2 * i {
            h = h.pow_mod(p, &g)?;
            let d = g.gcd(&h.sub(&x));
            if d.degree().unwrap_or(0) > 0 {
                g = g.div_rem(&d)?.0;
                h = h.rem(&g)?;
                out.push((d, i));
            }
            i += 1;
        }
        if let Some(dg) = g.degree() {
            if dg > 0 {
                out.push((g, dg));
            }
        }
        Ok(out)
    }

    /// Splits a squarefree monic product of degree-`d` irreducibles into its
    /// factors (Cantor–Zassenhaus; trace map in characteristic 2).
    pub fn equal_degree(&self, d: usize, rng: &mut SeededRng) -> Result<Vec<Self>> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        if n == d {
            return Ok(vec![self.monic()]);
        }
        let field = self.field;
        let p = field.p() as u64;
        for _ in 0..SPLIT_ATTEMPTS {
            let a = Self::new(field, (0..n).map(|_| rng.element(&field)).collect());
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let b = if p == 2 {
                let mut t = a.rem(self)?;
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(self)?;
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
                let mut frob = a.rem(self)?;
                let mut norm = frob.clone();
                for _ in 1..d {
                    frob = frob.pow_mod(p, self)?;
                    norm = norm.mul(&frob).rem(self)?;
                }
                norm.pow_mod((p - 1) / 2, self)?
                    .sub(&Self::constant(field, 1))
            };
            let g = self.gcd(&b);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let h = self.div_rem(&g)?.0;
                let mut out = g.equal_degree(d, rng)?;
                out.extend(h.equal_degree(d, rng)?);
                return Ok(out);
            }
        }
        Err(Error::FactorizationFailed(SPLIT_ATTEMPTS))
    }

    /// Irreducible monic factors with multiplicities, sorted by degree and then
    /// coefficients.
    pub fn factor(&self, rng: &mut SeededRng) -> Result<Vec<(Self, usize)>> {
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition()? {
            for (h, d) in g.distinct_degree()? {
                for q in h.equal_degree(d, rng)? {
                    out.push((q, m));
                }
            }
        }
        out.sort_by(|a, b| {
            (a.0.coeffs.len(), &a.0.coeffs, a.1).cmp(&(b.0.coeffs.len(), &b.0.coeffs, b.1))
        });
        Ok(out)
    }

    /// Degrees of the irreducible factors, as sorted `(degree, multiplicity)`.
    pub fn factor_degrees(&self, rng: &mut SeededRng) -> Result<Vec<(usize, usize)>> {
        let mut out: Vec<(usize, usize)> = self
            .factor(rng)?
            .into_iter()
            .map(|(g, m)| (g.degree().unwrap_or(0), m))
            .collect();
        out.sort();
        Ok(out)
    }

    /// All roots in F_p, ascending, each listed once.
    pub fn rational_roots(&self, rng: &mut SeededRng) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let f = self.monic();
        let x = Self::x(self.field);
        let xp = x.pow_mod(self.field.p() as u64, &f)?;
        let g = f.gcd(&xp.sub(&x));
        if g.degree().unwrap_or(0) == 0 {
            return Ok(Vec::new());
        }
        let mut roots: Vec<u32> = g
            .equal_degree(1, rng)?
            .into_iter()
            .map(|l| self.field.neg(l.coeffs[0]))
            .collect();
        roots.sort_unstable();
        Ok(roots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn factor_degree_examples() {
        let mut rng = SeededRng::from_seed(1);
        let f5 = fp(5);
        let f = UnivariatePoly::new(f5, vec![4, 0, 1]);
        assert_eq!(f.factor_degrees(&mut rng).unwrap(), vec![(1, 1), (1, 1)]);
        let g = UnivariatePoly::new(fp(7), vec![1, 0, 1]);
        assert_eq!(g.factor_degrees(&mut rng).unwrap(), vec![(2, 1)]);
        for p in [2u32, 3, 5, 7, 11] {
            let mut c = vec![0u32; p as usize + 1];
            c[p as usize] = 1;
            c[1] = p - 1;
            let h = UnivariatePoly::new(fp(p), c);
            let d = h.factor_degrees(&mut rng).unwrap();
            assert_eq!(d, vec![(1, 1); p as usize]);
        }
        assert_eq!(
            UnivariatePoly::zero(f5).factor_degrees(&mut rng),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn repeated_factors() {
        let mut rng = SeededRng::from_seed(2);
        let f = fp(3);
        // (x-1)^3 (x^2+1)^2 over F_3: exercises the p-th root branch
        let a = UnivariatePoly::from_roots(f, &[1, 1, 1]);
        let b = UnivariatePoly::new(f, vec![1, 0, 1]);
        let g = a.mul(&b).mul(&b);
        assert_eq!(g.factor_degrees(&mut rng).unwrap(), vec![(1, 3), (2, 2)]);
    }

    #[test]
    fn root_examples() {
        let mut rng = SeededRng::from_seed(3);
        let f7 = fp(7);
        let f = UnivariatePoly::from_roots(f7, &[2, 3]);
        assert_eq!(f.rational_roots(&mut rng).unwrap(), vec![2, 3]);
        let g = UnivariatePoly::new(f7, vec![1, 0, 1]);
        assert!(g.rational_roots(&mut rng).unwrap().is_empty());
    }

    #[test]
    fn septic_root_fraction_over_f5() {
        let f5 = fp(5);
        let mut rng = SeededRng::new(11, 0);
        let mut hits = 0;
        for _ in 0..1000 {
            let mut c: Vec<u32> = (0..7).map(|_| rng.element(&f5)).collect();
            c.push(rng.nonzero_element(&f5));
            let f = UnivariatePoly::new(f5, c);
            let roots = f.rational_roots(&mut rng).unwrap();
            let brute: Vec<u32> = (0..5).filter(|&a| f.eval(a) == 0).collect();
            assert_eq!(roots, brute);
            if !roots.is_empty() {
                hits += 1;
            }
        }
        let frac = hits as f64 / 1000.0;
        assert!((0.55..=0.70).contains(&frac), "fraction {frac}");
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(p in prop::sample::select(vec![2u32, 3, 5, 7, 101]),
                                      coeffs in prop::collection::vec(0u32..1000, 1..12),
                                      seed in 0u64..1000) {
            let f = UnivariatePoly::new(fp(p), coeffs);
            prop_assume!(!f.is_zero());
            let mut rng = SeededRng::from_seed(seed);
            let facs = f.factor(&mut rng).unwrap();
            let total: usize = facs.iter().map(|(g, m)| g.degree().unwrap() * m).sum();
            prop_assert_eq!(total, f.degree().unwrap());
            let mut prod = UnivariatePoly::constant(fp(p), 1);
            for (g, m) in &facs {
                for _ in 0..*m { prod = prod.mul(g); }
            }
            prop_assert_eq!(prod, f.monic());
        }

        #[test]
        fn roots_match_exhaustive_evaluation(p in prop::sample::select(vec![2u32, 3, 5, 13, 101]),
                                             coeffs in prop::collection::vec(0u32..1000, 1..10),
                                             seed in 0u64..1000) {
            let f = UnivariatePoly::new(fp(p), coeffs);
            prop_assume!(!f.is_zero());
            let mut rng = SeededRng::from_seed(seed);
            let roots = f.rational_roots(&mut rng).unwrap();
            let brute: Vec<u32> = (0..p).filter(|&a| f.eval(a) == 0).collect();
            prop_assert_eq!(roots, brute);
        }
    }
}
