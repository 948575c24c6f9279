use crate::arith::{SeededRng, UnivariatePoly};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Polynomial, Ring};
use std::collections::BTreeMap;

/// Restriction of a form to the line `{s·P + Q}`: `restriction(s) = f(s·P + Q)`.
#[derive(Clone, Debug)]
pub struct LineSection {
    pub p: Vec<u32>,
    pub q: Vec<u32>,
    pub restriction: UnivariatePoly,
}

impl LineSection {
    /// Coordinates of the point with parameter `s`.
    pub fn point(&self, ring: &Ring, s: u32) -> Vec<u32> {
        let f = ring.field();
        self.p
            .iter()
            .zip(&self.q)
            .map(|(&a, &b)| f.add(f.mul(s, a), b))
            .collect()
    }
}

fn restrict(f: &Polynomial, p: &[u32], q: &[u32]) -> UnivariatePoly {
    let ring = f.ring();
    let field = ring.field();
    let n = ring.nvars();
    let lin: Vec<UnivariatePoly> = (0..n)
        .map(|i| UnivariatePoly::new(field, vec![q[i], p[i]]))
        .collect();
    let mut powers: Vec<Vec<UnivariatePoly>> = lin
        .iter()
        .map(|l| vec![UnivariatePoly::constant(field, 1), l.clone()])
        .collect();
    let mut acc = UnivariatePoly::zero(field);
    for t in f.terms() {
        let mut v = UnivariatePoly::constant(field, t.coef);
        for (i, pw) in powers.iter_mut().enumerate() {
            let e = t.mono.exponent(i) as usize;
            while pw.len() <= e {
                let next = pw[pw.len() - 1].mul(&lin[i]);
                pw.push(next);
            }
            if e > 0 {
                v = v.mul(&pw[e]);
            }
        }
        acc = acc.add(&v);
    }
    acc
}

/// Restricts `f` to a random line. Returns `None` when the line is degenerate
/// or passes through a point where the parametrization loses degree (the
/// point `P` at `s = ∞` lies on `V(f)`), so the caller redraws.
pub fn random_line_section(f: &Polynomial, rng: &mut SeededRng) -> Option<LineSection> {
    let ring = f.ring();
    let field = ring.field();
    let n = ring.nvars();
    let p: Vec<u32> = (0..n).map(|_| rng.element(&field)).collect();
    let q: Vec<u32> = (0..n).map(|_| rng.element(&field)).collect();
    let independent = (0..n).any(|i| {
        (i + 1..n).any(|j| field.sub(field.mul(p[i], q[j]), field.mul(p[j], q[i])) != 0)
    });
    if !independent {
        return None;
    }
    let restriction = restrict(f, &p, &q);
    let d = f.homogeneous_degree()? as usize;
    if restriction.degree() != Some(d) {
        return None;
    }
    Some(LineSection { p, q, restriction })
}

/// Ideal of the point with coordinates `v`: the forms `v_k x_i − v_i x_k`
/// for a pivot `k` with `v_k ≠ 0`.
pub fn point_ideal(ring: &Ring, v: &[u32]) -> Result<Ideal> {
    let k = v
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::InvalidArgument("zero vector is not a point".into()))?;
    let gens = (0..ring.nvars())
        .filter(|&i| i != k)
        .map(|i| {
            Polynomial::var(ring, i)
                .scale(v[k])
                .sub(&Polynomial::var(ring, k).scale(v[i]))
        })
        .collect();
    Ideal::new(ring, gens)
}

fn curve_form(c: &Ideal) -> Result<Polynomial> {
    if c.ring().nvars() != 3 {
        return Err(Error::InvalidArgument(format!(
            "plane curve expected, ring has {} variables",
            c.ring().nvars()
        )));
    }
    c.gens_by_degree()
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidArgument("zero ideal is not a curve".into()))
}

/// An F_p-rational point of the plane curve `V(C)`, found on random lines by
/// taking a rational root of the restricted univariate polynomial.
pub fn random_rational_point(c: &Ideal, rng: &mut SeededRng, max_trials: usize) -> Result<Ideal> {
    let f = curve_form(c)?;
    let ring = c.ring();
    for trial in 0..max_trials {
        let Some(sec) = random_line_section(&f, rng) else {
            continue;
        };
        let roots = sec.restriction.rational_roots(rng)?;
        if roots.is_empty() {
            continue;
        }
        let s = roots[rng.below(roots.len())];
        let v = sec.point(ring, s);
        if c.gens().iter().any(|g| g.eval(&v) != 0) {
            continue;
        }
        log::debug!("rational point after {} line(s)", trial + 1);
        return point_ideal(ring, &v);
    }
    Err(Error::NotFound {
        what: "rational point".into(),
        attempts: max_trials,
    })
}

/// Census of factorization types of `f` restricted to `trials` random lines:
/// each key lists the degrees of the irreducible factors (with multiplicity)
/// in ascending order. Trial `t` draws from substream `t` of `rng`, and lines
/// that lose degree are redrawn within the same substream.
pub fn decomposition_tally(
    c: &Ideal,
    trials: usize,
    rng: &SeededRng,
) -> Result<BTreeMap<Vec<usize>, usize>> {
    let f = curve_form(c)?;
    let mut tally = BTreeMap::new();
    for t in 0..trials {
        let mut r = rng.substream(t as u64);
        let sec = loop {
            if let Some(sec) = random_line_section(&f, &mut r) {
                break sec;
            }
        };
        let mut parts: Vec<usize> = Vec::new();
        for (d, m) in sec.restriction.factor_degrees(&mut r)? {
            parts.extend(std::iter::repeat_n(d, m));
        }
        parts.sort_unstable();
        *tally.entry(parts).or_insert(0) += 1;
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::ring::parse_polynomial;

    fn ring(p: u32) -> Ring {
        Ring::new(PrimeField::new(p).unwrap(), 3).unwrap()
    }

    fn curve(r: &Ring, s: &str) -> Ideal {
        Ideal::new(r, vec![parse_polynomial(r, s).unwrap()]).unwrap()
    }

    #[test]
    fn points_on_a_line() {
        let r = ring(10007);
        let c = curve(&r, "x0");
        let mut rng = SeededRng::from_seed(1);
        for _ in 0..5 {
            let pt = random_rational_point(&c, &mut rng, 10).unwrap();
            assert!(pt.contains(&c.gens()[0]).unwrap());
            assert_eq!(pt.gens().len(), 2);
        }
        let t = decomposition_tally(&c, 20, &rng).unwrap();
        assert_eq!(t.get(&vec![1]), Some(&20));
    }

    #[test]
    fn pointless_cubic_over_f3() {
        // every conic over F_q has q + 1 points; the norm form of F_27 / F_3
        // is a cubic without F_3-points
        let r = ring(3);
        let c = curve(&r, "x0^3-x0^2*x2-x0*x1^2+x0*x2^2+x1^3-x1*x2^2+x2^3");
        for a in 0..3u32 {
            for b in 0..3u32 {
                for d in 0..3u32 {
                    if (a, b, d) != (0, 0, 0) {
                        assert_ne!(c.gens()[0].eval(&[a, b, d]), 0);
                    }
                }
            }
        }
        let mut rng = SeededRng::from_seed(2);
        let e = random_rational_point(&c, &mut rng, 50).unwrap_err();
        assert!(matches!(e, Error::NotFound { attempts: 50, .. }));
    }

    #[test]
    fn conic_census_matches_line_count() {
        // over F_q a smooth conic has q(q-1)/2 passant lines among q^2+q+1
        let p = 101u32;
        let r = ring(p);
        let c = curve(&r, "x0*x2-x1^2+x0^2");
        let f = &c.gens()[0];
        let field = r.field();
        let mut all = Vec::new();
        for x in 0..p {
            for y in 0..p {
                all.push([x, y, 1]);
            }
            all.push([x, 1, 0]);
        }
        all.push([1, 0, 0]);
        let on_conic: Vec<[u32; 3]> = all.iter().copied().filter(|v| f.eval(v) == 0).collect();
        assert_eq!(on_conic.len(), (p + 1) as usize);
        let lines = all.len();
        let passants = all
            .iter()
            .filter(|l| {
                !on_conic.iter().any(|v| {
                    let s = (0..3).fold(0, |acc, i| field.add(acc, field.mul(l[i], v[i])));
                    s == 0
                })
            })
            .count();
        assert_eq!(lines, (p * p + p + 1) as usize);
        assert_eq!(passants, (p * (p - 1) / 2) as usize);
        let expected = passants as f64 / lines as f64;
        let n = 2000;
        let t = decomposition_tally(&c, n, &SeededRng::from_seed(3)).unwrap();
        assert!(t.keys().all(|k| k == &vec![2] || k == &vec![1, 1]));
        let got = *t.get(&vec![2]).unwrap_or(&0) as f64 / n as f64;
        let sigma = (expected * (1.0 - expected) / n as f64).sqrt();
        assert!((got - expected).abs() < 4.0 * sigma, "{got} vs {expected}");
    }
}
