//! Invariant checks shared by the property suite and the acceptance run.

#![allow(dead_code)]

use curvelab::arith::{PrimeField, SeededRng, UnivariatePoly};
use curvelab::groebner::{intersect, quotient, saturate, Ideal};
use curvelab::homology::{hilbert_numerator, resolve_ideal, FreeResolution};
use curvelab::ring::{random_form, Polynomial, Ring};
use curvelab::Result;

pub fn ring(p: u32, n: usize) -> Ring {
    Ring::new(PrimeField::new(p).unwrap(), n).unwrap()
}

/// Ideal generated by `k` random forms of degrees in `1..=3`.
pub fn random_ideal(r: &Ring, seed: u64, k: usize) -> Ideal {
    let mut rng = SeededRng::from_seed(seed);
    let gens = (0..k)
        .map(|_| {
            let d = 1 + rng.below(3) as i32;
            random_form(r, d, &mut rng).unwrap()
        })
        .filter(|f| !f.is_zero())
        .collect();
    Ideal::new(r, gens).unwrap()
}

/// Random ideal whose generators are sparse: products of linear forms in a
/// few variables, giving nontrivial colon ideals and saturations.
pub fn random_structured_ideal(r: &Ring, seed: u64) -> Ideal {
    let mut rng = SeededRng::from_seed(seed);
    let n = r.nvars();
    let k = 2 + rng.below(2);
    let gens = (0..k)
        .map(|_| {
            let factors = 1 + rng.below(3);
            (0..factors).fold(Polynomial::one(r), |acc, _| {
                let i = rng.below(n);
                let j = rng.below(n);
                let c = rng.below(3) as u32;
                acc.mul(&Polynomial::var(r, i).add(&Polynomial::var(r, j).scale(c)))
            })
        })
        .collect();
    Ideal::new(r, gens).unwrap()
}

/// Every S-polynomial of the reduced Gröbner basis reduces to zero.
pub fn spairs_vanish(i: &Ideal) -> Result<bool> {
    let gb = i.groebner();
    let f = i.ring().field();
    let el = gb.elements();
    for a in 0..el.len() {
        for b in a + 1..el.len() {
            let (ta, tb) = (el[a].lead().unwrap(), el[b].lead().unwrap());
            let l = ta.mono.lcm(&tb.mono);
            let sa = el[a].mul_term(f.inv(ta.coef)?, &l.div(&ta.mono));
            let sb = el[b].mul_term(f.inv(tb.coef)?, &l.div(&tb.mono));
            if !gb.normal_form(&sa.sub(&sb))?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `d ∘ d = 0` and no unit entries in any differential.
pub fn resolution_is_minimal_complex(res: &FreeResolution) -> Result<bool> {
    Ok(res.is_complex()? && res.is_minimal())
}

/// The Hilbert numerator from the lead-term ideal equals the alternating sum
/// of the Betti numbers.
pub fn hilbert_routes_agree(i: &Ideal) -> Result<bool> {
    let from_gb = hilbert_numerator(i);
    let from_res = resolve_ideal(i)?.betti().hilbert_numerator()?;
    Ok(from_gb == from_res)
}

/// Defining containments of quotient, saturation and intersection.
pub fn containments_hold(i: &Ideal, j: &Ideal) -> Result<bool> {
    let q = quotient(i, j)?;
    let s = saturate(i, Some(j))?;
    let m = intersect(&[i.clone(), j.clone()])?;
    Ok(q.contains_ideal(i)?
        && i.contains_ideal(&q.product(j)?)?
        && s.contains_ideal(&q)?
        && i.contains_ideal(&m)?
        && j.contains_ideal(&m)?
        && m.contains_ideal(&i.product(j)?)?)
}

/// Factors multiply back to the polynomial and the rational roots are
/// exactly the zeros found by evaluating at every field element.
pub fn factorization_reconstructs(p: u32, seed: u64) -> Result<bool> {
    let field = PrimeField::new(p)?;
    let mut rng = SeededRng::from_seed(seed);
    let deg = 1 + rng.below(8);
    let mut coeffs: Vec<u32> = (0..=deg).map(|_| rng.element(&field)).collect();
    if coeffs[deg] == 0 {
        coeffs[deg] = 1;
    }
    let f = UnivariatePoly::new(field, coeffs);
    let factors = f.factor(&mut rng)?;
    let product = factors.iter().fold(UnivariatePoly::constant(field, f.leading()), |acc, (g, m)| {
        (0..*m).fold(acc, |a, _| a.mul(g))
    });
    let mut roots = f.rational_roots(&mut rng)?;
    roots.sort_unstable();
    let zeros: Vec<u32> = (0..p).filter(|&a| f.eval(a) == 0).collect();
    Ok(product == f && roots == zeros)
}
