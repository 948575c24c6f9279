use super::module::{GradedFreeModule, GradedMatrix};
use super::poly::{Polynomial, Term};
use super::ring::Ring;
use crate::arith::SeededRng;
use crate::error::{Error, Result};

/// Homogeneous form of degree `d` with every coefficient drawn uniformly,
/// monomials visited in descending order.
pub fn random_form(ring: &Ring, d: i32, rng: &mut SeededRng) -> Result<Polynomial> {
    if d < 0 {
        return Err(Error::NegativeDegree(d as i64));
    }
    let field = ring.field();
    let terms = ring
        .monomials_of_degree(d)
        .into_iter()
        .map(|mono| Term {
            mono,
            coef: rng.element(&field),
        })
        .filter(|t| t.coef != 0)
        .collect();
    Ok(Polynomial::from_sorted(ring, terms))
}

/// Random homogeneous map `source -> target`: entry `(i, j)` is a random form
/// of degree `source[j] - target[i]`, or zero when that is negative.
/// Entries are drawn row by row.
pub fn random_matrix(
    ring: &Ring,
    target: &GradedFreeModule,
    source: &GradedFreeModule,
    rng: &mut SeededRng,
) -> Result<GradedMatrix> {
    let mut entries = Vec::with_capacity(target.rank() * source.rank());
    for &a in &target.twists {
        for &b in &source.twists {
            let d = b - a;
            entries.push(if d >= 0 {
                random_form(ring, d, rng)?
            } else {
                Polynomial::zero(ring)
            });
        }
    }
    GradedMatrix::new(ring, target.clone(), source.clone(), entries)
}

/// Random homogeneous element of degree `d` of the ideal generated by `gens`:
/// `Σ r_i g_i` with each `r_i` a random form of degree `d - deg g_i`.
pub fn random_combination(
    ring: &Ring,
    gens: &[Polynomial],
    d: i32,
    rng: &mut SeededRng,
) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        let Some(e) = g.homogeneous_degree() else {
            continue;
        };
        if e <= d {
            acc = acc.add(&random_form(ring, d - e, rng)?.mul(g));
        }
    }
    Ok(acc)
}
