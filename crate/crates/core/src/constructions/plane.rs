use super::{brill_noether, dmin, retry, BrillNoetherData, DEFAULT_ATTEMPTS};
use crate::arith::SeededRng;
use crate::error::{Error, Result};
use crate::geometry::{certify_nodal_plane_curve, singular_locus, CertificateReport};
use crate::groebner::{codim, dimension_and_degree, graded_piece_dim, intersect, saturate, Ideal};
use crate::homology::genus;
use crate::ring::{
    binomial, jacobian, minors, random_form, random_matrix, GradedFreeModule, Monomial, Polynomial, Ring,
};
use serde_json::json;

/// Shape `(n, eps, a, b)` of the Hilbert–Burch matrix for `k` general points:
/// `n` is least with `C(n+2, 2) > k`, `eps = k − C(n+1, 2)`, `a = n + 1 − eps`
/// and `b = n − 2·eps`.
pub fn points_shape(k: i64) -> (i64, i64, i64, i64) {
    let mut n = 0;
    while binomial(n + 2, 2) as i64 <= k {
        n += 1;
    }
    let eps = k - binomial(n + 1, 2) as i64;
    (n, eps, n + 1 - eps, n - 2 * eps)
}

/// True when `I` defines a finite reduced scheme in `P^2`: projective
/// dimension 0 and no common zero with the 2 × 2 minors of its Jacobian.
pub fn distinct_plane_points(i: &Ideal) -> Result<bool> {
    let (pd, _) = dimension_and_degree(i)?;
    if pd != 0 {
        return Ok(false);
    }
    let gens = i.mingens()?;
    let jac = jacobian(i.ring(), &gens)?;
    if gens.len() < 2 {
        return Ok(false);
    }
    Ok(codim(&i.add_gens(&minors(2, &jac)?)?)? == 3)
}

/// True when the point sets share no point: `deg ∩ I_k = Σ deg I_k`.
pub fn disjoint_point_sets(sets: &[Ideal]) -> Result<bool> {
    let mut sum = 0;
    for s in sets {
        sum += dimension_and_degree(s)?.1;
    }
    Ok(dimension_and_degree(&intersect(sets)?)?.1 == sum)
}

/// Ideal of `k` random distinct points of `P^2` from the maximal minors of a
/// random Hilbert–Burch matrix; draws are repeated until the points are
/// distinct and of degree `k`.
pub fn random_distinct_plane_points(
    k: usize,
    ring: &Ring,
    rng: &SeededRng,
    max_attempts: usize,
) -> Result<Ideal> {
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument("points need a ring in 3 variables".into()));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("at least one point is required".into()));
    }
    let (_, eps, a, b) = points_shape(k as i64);
    let (target, source) = if b >= 0 {
        (
            GradedFreeModule::from_shifts(&[(a as usize, 0)]),
            GradedFreeModule::from_shifts(&[(b as usize, -1), (eps as usize, -2)]),
        )
    } else {
        (
            GradedFreeModule::from_shifts(&[(a as usize, 0), ((-b) as usize, -1)]),
            GradedFreeModule::from_shifts(&[(eps as usize, -2)]),
        )
    };
    let found = retry("distinct plane points", rng, max_attempts, |r| {
        let m = random_matrix(ring, &target, &source, r)?;
        let i = Ideal::new(ring, minors(source.rank(), &m)?)?.mingens_ideal()?;
        let ok = dimension_and_degree(&i)?.1 == k as i64 && distinct_plane_points(&i)?;
        Ok(ok.then_some(i))
    })?;
    Ok(found.value)
}

/// A plane model with `delta` nodes, the ideal of its nodes and the linear
/// system `saturate(I_Δ^2)` it was drawn from.
#[derive(Clone, Debug)]
pub struct PlaneCurve {
    pub curve: Ideal,
    pub nodes: Option<Ideal>,
    pub double_point_ideal: Option<Ideal>,
    pub data: BrillNoetherData,
    pub report: CertificateReport,
}

/// Random `delta`-nodal plane curve of genus `g ≤ 10` and minimal degree
/// `d = dmin(2, g)`: a random element of the degree-`d` piece of
/// `saturate(I_Δ^2)` for random nodes `Δ`, certified nodal.
pub fn random_nodal_plane_curve(g: i64, ring: &Ring, rng: &SeededRng) -> Result<PlaneCurve> {
    if !(0..=10).contains(&g) {
        return Err(Error::OutOfRange(format!("genus {g} outside 0..=10")));
    }
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument("plane curves need a ring in 3 variables".into()));
    }
    let d = dmin(2, g);
    let data = brill_noether(g, 2, d);
    let delta = data.delta;
    let found = retry("nodal plane curve", rng, DEFAULT_ATTEMPTS, |r| {
        let (f, nodes, j) = if delta == 0 {
            (random_form(ring, d as i32, r)?, None, None)
        } else {
            let nodes = random_distinct_plane_points(delta as usize, ring, &r.substream(0), DEFAULT_ATTEMPTS)?;
            let j = saturate(&nodes.power(2)?, None)?.mingens_ideal()?;
            let basis = j.graded_piece_basis(d as i32)?;
            if basis.is_empty() {
                return Ok(None);
            }
            let field = ring.field();
            let f = basis
                .iter()
                .fold(Polynomial::zero(ring), |acc, b| acc.add(&b.scale(r.element(&field))));
            (f, Some(nodes), Some(j))
        };
        if f.is_zero() {
            return Ok(None);
        }
        let curve = Ideal::new(ring, vec![f])?;
        let mut report = certify_nodal_plane_curve(&curve, delta, nodes.as_ref())?;
        if !report.passed() {
            return Ok(None);
        }
        report.expect("degree", d, curve.generator_degrees()[0] as i64);
        report.expect("arithmetic_genus", binomial(d - 1, 2) as i64, genus(&curve)?);
        report.expect("geometric_genus", g, binomial(d - 1, 2) as i64 - delta);
        if let Some(j) = &j {
            report.record(
                "linear_system.dim",
                json!(">= 1"),
                json!(graded_piece_dim(j, d as i32)?),
                true,
            );
        }
        Ok(Some(PlaneCurve {
            curve,
            nodes,
            double_point_ideal: j,
            data,
            report,
        }))
    })?;
    let mut pc = found.value;
    pc.report = pc
        .report
        .with_provenance(rng.seed(), found.stream, found.attempts);
    Ok(pc)
}

/// Outcome of the genus-11 search: the curve with its certificate and the
/// number of point sets drawn.
#[derive(Clone, Debug)]
pub struct Genus11Search {
    pub curve: Ideal,
    pub report: CertificateReport,
    pub attempts: usize,
}

fn triple_point_ideals(ring: &Ring) -> Result<(Ideal, Ideal)> {
    let x = |i| Polynomial::var(ring, i);
    Ok((
        Ideal::new(ring, vec![x(0), x(1)])?,
        Ideal::new(ring, vec![x(1), x(2)])?,
    ))
}

/// Certificate for a degree-10 candidate with triple points at `(0:0:1)` and
/// `(1:0:0)`: exactly 19 further double points, and both triple points
/// ordinary (their tangent cones, read off by contracting with `x2^7` and
/// `x0^7`, are three distinct lines).
pub fn check_genus11_candidate(f: &Ideal) -> Result<CertificateReport> {
    let ring = f.ring();
    let (i1, i2) = triple_point_ideals(ring)?;
    let gens = f.mingens()?;
    if gens.len() != 1 {
        return Err(Error::InvalidArgument("candidate must be principal".into()));
    }
    let g = &gens[0];
    let mut rep = CertificateReport::new();
    rep.expect("degree", 10, g.homogeneous_degree().unwrap_or(0));
    let triple = i1.power(3)?.contains(g)? && i2.power(3)?.contains(g)?;
    rep.expect("triple_points", true, triple);
    let sing = singular_locus(f, 1)?;
    let double = saturate(&sing, Some(&i1.product(&i2)?))?;
    rep.expect("double_points.degree", 19, dimension_and_degree(&double)?.1);
    for (name, v) in [("tangent_cone_1", 2usize), ("tangent_cone_2", 0usize)] {
        let m = Monomial::var(v).pow(7);
        let cone = Ideal::new(ring, vec![g.contract(&m)])?;
        let pd = if cone.is_zero() {
            2
        } else {
            dimension_and_degree(&singular_locus(&cone, 1)?)?.0
        };
        rep.expect(&format!("{name}.ordinary"), 0, pd);
    }
    rep.expect("geometric_genus", 11, binomial(9, 2) as i64 - 19 - 2 * 3);
    Ok(rep)
}

/// Searches for a degree-10 plane curve with triple points at `(0:0:1)`,
/// `(1:0:0)` and 19 nodes by drawing node sets until the linear system of
/// curves with these singularities is nonempty. Expected cost is of order
/// `p^4` draws.
pub fn search_plane_genus11_curve(ring: &Ring, attempts: usize, rng: &SeededRng) -> Result<Genus11Search> {
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument("plane curves need a ring in 3 variables".into()));
    }
    let (i1, i2) = triple_point_ideals(ring)?;
    let i1c = i1.power(3)?;
    let i2c = i2.power(3)?;
    let field = ring.field();
    for k in 0..attempts {
        let mut r = rng.substream(k as u64);
        let delta = retry("disjoint node set", &r.substream(0), DEFAULT_ATTEMPTS, |s| {
            let d = random_distinct_plane_points(19, ring, &s.substream(0), DEFAULT_ATTEMPTS)?;
            Ok(disjoint_point_sets(&[i1.clone(), i2.clone(), d.clone()])?.then_some(d))
        });
        let delta = match delta {
            Ok(d) => d.value,
            Err(Error::RetriesExhausted { .. }) => continue,
            Err(e) => return Err(e),
        };
        let j = intersect(&[i1c.clone(), i2c.clone(), saturate(&delta.power(2)?, None)?])?;
        let basis = j.graded_piece_basis(10)?;
        if basis.is_empty() {
            continue;
        }
        log::info!("genus 11 search: nonempty system of dimension {} at draw {}", basis.len(), k + 1);
        let f = if basis.len() == 1 {
            basis[0].clone()
        } else {
            loop {
                let f = basis
                    .iter()
                    .fold(Polynomial::zero(ring), |acc, b| acc.add(&b.scale(r.element(&field))));
                if !f.is_zero() {
                    break f;
                }
            }
        };
        let curve = Ideal::new(ring, vec![f])?;
        let report = check_genus11_candidate(&curve)?;
        if report.passed() {
            let report = report.with_provenance(rng.seed(), r.stream(), k + 1);
            return Ok(Genus11Search {
                curve,
                report,
                attempts: k + 1,
            });
        }
    }
    Err(Error::NotFound {
        what: "plane genus-11 curve".into(),
        attempts,
    })
}
