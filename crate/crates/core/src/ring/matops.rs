use super::module::{GradedFreeModule, GradedMatrix};
use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Determinants of square submatrices, memoized on (row subset, column mask).
struct MinorCache<'a> {
    m: &'a GradedMatrix,
    memo: HashMap<(u64, u64), Polynomial>,
}

impl MinorCache<'_> {
    fn det(&mut self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let ring = self.m.ring();
        if rows.is_empty() {
            return Polynomial::one(ring);
        }
        let rmask = rows.iter().fold(0u64, |a, &r| a | 1 << r);
        let cmask = cols.iter().fold(0u64, |a, &c| a | 1 << c);
        if let Some(p) = self.memo.get(&(rmask, cmask)) {
            return p.clone();
        }
        let f = ring.field();
        let r0 = rows[0];
        let mut acc = Polynomial::zero(ring);
        for (idx, &c) in cols.iter().enumerate() {
            let a = self.m.entry(r0, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = self.det(&rows[1..], &rest);
            if sub.is_zero() {
                continue;
            }
            let term = a.mul(&sub);
            acc = if idx % 2 == 0 {
                acc.add(&term)
            } else {
                acc.add(&term.scale(f.neg(1)))
            };
        }
        self.memo.insert((rmask, cmask), acc.clone());
        acc
    }
}

fn check_k(k: usize, m: &GradedMatrix) -> Result<()> {
    if k == 0 || k > m.nrows().min(m.ncols()) {
        return Err(Error::OutOfRange(format!(
            "minor size {k} for a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.nrows() > 64 || m.ncols() > 64 {
        return Err(Error::OutOfRange("matrices above 64x64".into()));
    }
    Ok(())
}

/// All `k x k` minors: row subsets in lexicographic order, and for each row
/// subset the column subsets in lexicographic order.
pub fn minors(k: usize, m: &GradedMatrix) -> Result<Vec<Polynomial>> {
    check_k(k, m)?;
    let mut cache = MinorCache {
        m,
        memo: HashMap::new(),
    };
    let rows = subsets(m.nrows(), k);
    let cols = subsets(m.ncols(), k);
    let mut out = Vec::with_capacity(rows.len() * cols.len());
    for r in &rows {
        for c in &cols {
            out.push(cache.det(r, c));
        }
    }
    Ok(out)
}

/// Determinant of a square matrix.
pub fn determinant(m: &GradedMatrix) -> Result<Polynomial> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
    }
    if m.nrows() == 0 {
        return Ok(Polynomial::one(m.ring()));
    }
    Ok(minors(m.nrows(), m)?.remove(0))
}

/// `k`-th exterior power: rows and columns indexed by lexicographic
/// `k`-subsets, entries the corresponding minors.
pub fn exterior_power(k: usize, m: &GradedMatrix) -> Result<GradedMatrix> {
    check_k(k, m)?;
    let rows = subsets(m.nrows(), k);
    let cols = subsets(m.ncols(), k);
    let entries = minors(k, m)?;
    let tw = |t: &GradedFreeModule, s: &[usize]| s.iter().map(|&i| t.twists[i]).sum::<i32>();
    let target = GradedFreeModule::new(rows.iter().map(|s| tw(m.target(), s)).collect());
    let source = GradedFreeModule::new(cols.iter().map(|s| tw(m.source(), s)).collect());
    GradedMatrix::new(m.ring(), target, source, entries)
}

fn pfaffian_rec(m: &GradedMatrix, idx: &[usize], memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
    let ring = m.ring();
    if idx.is_empty() {
        return Polynomial::one(ring);
    }
    let key = idx.iter().fold(0u64, |a, &i| a | 1 << i);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let f = ring.field();
    let mut acc = Polynomial::zero(ring);
    for j in 1..idx.len() {
        let a = m.entry(idx[0], idx[j]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[j]).collect();
        let term = a.mul(&pfaffian_rec(m, &rest, memo));
        acc = if j % 2 == 1 {
            acc.add(&term)
        } else {
            acc.add(&term.scale(f.neg(1)))
        };
    }
    memo.insert(key, acc.clone());
    acc
}

/// Pfaffians of all principal `k x k` submatrices of a skew-symmetric matrix,
/// index subsets in lexicographic order.
pub fn pfaffians(k: usize, m: &GradedMatrix) -> Result<Vec<Polynomial>> {
    if k % 2 == 1 {
        return Err(Error::OddPfaffian(k));
    }
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::NotSkew);
    }
    for i in 0..n {
        if !m.entry(i, i).is_zero() {
            return Err(Error::NotSkew);
        }
        for j in 0..i {
            if m.entry(i, j) != &m.entry(j, i).neg() {
                return Err(Error::NotSkew);
            }
        }
    }
    if k > n || n > 64 {
        return Err(Error::OutOfRange(format!("pfaffian size {k} for {n}x{n}")));
    }
    let mut memo = HashMap::new();
    Ok(subsets(n, k)
        .iter()
        .map(|s| pfaffian_rec(m, s, &mut memo))
        .collect())
}

/// Generic skew-symmetric matrix with the given entries above the diagonal,
/// listed row by row: `(0,1), (0,2), ..., (1,2), ...`.
pub fn skew_matrix(ring: &Ring, n: usize, upper: &[Polynomial]) -> Result<GradedMatrix> {
    if upper.len() != n * (n - 1) / 2 {
        return Err(Error::DimensionMismatch("skew matrix entries".into()));
    }
    let mut entries = vec![Polynomial::zero(ring); n * n];
    let mut it = upper.iter();
    for i in 0..n {
        for j in i + 1..n {
            let e = it.next().expect("counted above");
            entries[i * n + j] = e.clone();
            entries[j * n + i] = e.neg();
        }
    }
    let d = upper
        .iter()
        .find_map(|e| e.homogeneous_degree())
        .unwrap_or(0);
    GradedMatrix::new(
        ring,
        GradedFreeModule::new(vec![0; n]),
        GradedFreeModule::new(vec![d; n]),
        entries,
    )
}

/// Jacobian matrix: variables index rows, generators index columns.
pub fn jacobian(ring: &Ring, gens: &[Polynomial]) -> Result<GradedMatrix> {
    let n = ring.nvars();
    let mut entries = Vec::with_capacity(n * gens.len());
    let mut source = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous("jacobian generator".into()));
        }
        source.push(g.homogeneous_degree().unwrap_or(1));
    }
    let weights = ring.weights().to_vec();
    for i in 0..n {
        for g in gens {
            entries.push(g.derivative(i));
        }
    }
    GradedMatrix::new(
        ring,
        GradedFreeModule::new(weights),
        GradedFreeModule::new(source),
        entries,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::monomial::Monomial;
    use crate::ring::parse::parse_polynomial;
    use crate::ring::random::{random_form, random_matrix};

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    #[test]
    fn subset_order() {
        assert_eq!(
            subsets(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn two_by_two_determinant() {
        let r = ring(4);
        let v: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        let m = GradedMatrix::new(
            &r,
            GradedFreeModule::free(2),
            GradedFreeModule::new(vec![1, 1]),
            v.clone(),
        )
        .unwrap();
        assert_eq!(determinant(&m).unwrap(), v[0].mul(&v[3]).sub(&v[1].mul(&v[2])));
        assert!(minors(3, &m).is_err());
    }

    #[test]
    fn hilbert_burch_minors_and_syzygy() {
        let r = ring(3);
        let mut rng = SeededRng::from_seed(17);
        let target = GradedFreeModule::from_shifts(&[(3, -4), (1, -5)]);
        let source = GradedFreeModule::from_shifts(&[(3, -6)]);
        let a = random_matrix(&r, &target, &source, &mut rng).unwrap();
        let ms = minors(3, &a).unwrap();
        let degs: Vec<i32> = ms.iter().map(|m| m.homogeneous_degree().unwrap()).collect();
        // row subsets {0,1,2},{0,1,3},{0,2,3},{1,2,3} omit rows 3,2,1,0
        assert_eq!(degs, vec![6, 5, 5, 5]);
        // signed maximal minors annihilate the columns
        let f = r.field();
        for j in 0..3 {
            let mut acc = Polynomial::zero(&r);
            for (i, m) in ms.iter().enumerate() {
                let omitted = 3 - i;
                let sign = if omitted % 2 == 0 { 1 } else { f.neg(1) };
                acc = acc.add(&m.scale(sign).mul(a.entry(omitted, j)));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn pfaffian_closed_form_and_square() {
        let r = Ring::with_names(
            PrimeField::new(10007).unwrap(),
            &["a01", "a02", "a03", "a12", "a13", "a23"],
        )
        .unwrap();
        let v: Vec<Polynomial> = (0..6).map(|i| Polynomial::var(&r, i)).collect();
        let m = skew_matrix(&r, 4, &v).unwrap();
        let pf = pfaffians(4, &m).unwrap();
        let want = parse_polynomial(&r, "a01*a23-a02*a13+a03*a12").unwrap();
        assert_eq!(pf, vec![want.clone()]);
        assert_eq!(determinant(&m).unwrap(), want.pow(2));
        assert_eq!(pfaffians(3, &m), Err(Error::OddPfaffian(3)));
        let bad = GradedMatrix::identity(&r, GradedFreeModule::free(4));
        assert_eq!(pfaffians(2, &bad), Err(Error::NotSkew));
    }

    #[test]
    fn grassmannian_pfaffians_and_plucker_points() {
        let names: Vec<String> = subsets(6, 2).iter().map(|s| format!("p{}{}", s[0], s[1])).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let r = Ring::with_names(PrimeField::new(10007).unwrap(), &refs).unwrap();
        let v: Vec<Polynomial> = (0..15).map(|i| Polynomial::var(&r, i)).collect();
        let pf = pfaffians(4, &skew_matrix(&r, 6, &v).unwrap()).unwrap();
        assert_eq!(pf.len(), 15);
        assert!(pf.iter().all(|p| p.homogeneous_degree() == Some(2)));
        let mut rng = SeededRng::from_seed(4);
        let k = ring(1);
        let pt = random_matrix(&k, &GradedFreeModule::free(2), &GradedFreeModule::free(6), &mut rng)
            .unwrap();
        let e = exterior_power(2, &pt).unwrap();
        assert_eq!((e.nrows(), e.ncols()), (1, 15));
        let coords: Vec<u32> = e
            .entries()
            .iter()
            .map(|p| p.coefficient(&Monomial::ONE))
            .collect();
        for p in &pf {
            assert_eq!(p.eval(&coords), 0);
        }
        assert_eq!(exterior_power(1, &pt).unwrap().entries(), pt.entries());
    }

    #[test]
    fn jacobian_and_euler() {
        let r = ring(3);
        let f = parse_polynomial(&r, "x0^2").unwrap();
        let j = jacobian(&r, &[f]).unwrap();
        assert_eq!(j.column(0), vec![
            parse_polynomial(&r, "2*x0").unwrap(),
            Polynomial::zero(&r),
            Polynomial::zero(&r)
        ]);
        let mut rng = SeededRng::from_seed(3);
        for d in 1..6 {
            let g = random_form(&r, d, &mut rng).unwrap();
            let jg = jacobian(&r, std::slice::from_ref(&g)).unwrap();
            let mut acc = Polynomial::zero(&r);
            for i in 0..3 {
                acc = acc.add(&Polynomial::var(&r, i).mul(jg.entry(i, 0)));
            }
            assert_eq!(acc, g.scale(d as u32));
        }
    }
}
