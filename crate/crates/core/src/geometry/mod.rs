//! Singular loci, smoothness and nodality certificates, and rational points on
//! plane curves.

mod points;
mod report;

pub use points::{decomposition_tally, point_ideal, random_line_section, random_rational_point, LineSection};
pub use report::{CertificateReport, Check};

use crate::error::{Error, Result};
use crate::groebner::{codim, dimension_and_degree, saturate, Ideal};
use crate::ring::{binomial, jacobian, minors, Polynomial};
use serde_json::json;

/// `I + (c × c minors of the Jacobian of the generators of I)`.
pub fn singular_locus(i: &Ideal, c: usize) -> Result<Ideal> {
    let gens = i.gens().to_vec();
    jacobian_minors_added(i, &gens, c)
}

/// `I + (c × c minors of the Jacobian of gens)`.
pub fn jacobian_minors_added(i: &Ideal, gens: &[Polynomial], c: usize) -> Result<Ideal> {
    if c == 0 {
        return Ok(Ideal::unit(i.ring()));
    }
    if c > gens.len() || c > i.ring().nvars() {
        return Ok(i.clone());
    }
    let jac = jacobian(i.ring(), gens)?;
    i.add_gens(&minors(c, &jac)?)
}

/// Nodal certificate for a plane curve `V(f)` with `delta` expected nodes:
///
/// * `sing.codim`, `sing.degree`: the singular scheme has codimension 2 and
///   degree `delta` (codimension 3 when `delta = 0`);
/// * `sing.reduced`: the saturated singular scheme is reduced, i.e. adding the
///   2 × 2 minors of its Jacobian gives codimension 3.
///
/// When the ideal of the node set is supplied, the possible splittings of the
/// curve into two components are ruled out as well (`irreducible`).
pub fn certify_nodal_plane_curve(
    f: &Ideal,
    delta: i64,
    nodes: Option<&Ideal>,
) -> Result<CertificateReport> {
    let ring = f.ring();
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument(format!(
            "plane curve expected, ring has {} variables",
            ring.nvars()
        )));
    }
    let gens = f.mingens()?;
    if gens.len() != 1 {
        return Err(Error::InvalidArgument(format!(
            "plane curve must be principal, got {} generators",
            gens.len()
        )));
    }
    let mut rep = CertificateReport::new();
    let sing = singular_locus(f, 1)?;
    let (pd, deg) = dimension_and_degree(&sing)?;
    let want_codim = if delta == 0 { 3 } else { 2 };
    rep.expect("sing.codim", want_codim, 3 - (pd + 1));
    rep.expect("sing.degree", delta, deg);
    let sat = saturate(&sing, None)?;
    let red = singular_locus(&sat, 2)?;
    rep.expect("sing.reduced.codim", 3, codim(&red)?);
    if let Some(nodes) = nodes {
        let d = gens[0].homogeneous_degree().unwrap_or(0) as i64;
        let open = open_splittings(d, delta, nodes)?;
        rep.record("irreducible", json!([]), json!(open), open.is_empty());
    }
    Ok(rep)
}

/// Degree splittings `(a, b)`, `a ≤ b`, `a + b = d`, of a `delta`-nodal curve
/// that the following rules fail to exclude. The `a·b` points of `C_1 ∩ C_2`
/// lie in the node set `Δ`, so a split is impossible when `a·b > delta`, when
/// `a·b = delta` and `Δ` is not a complete intersection, or when `a·b` points
/// of `Δ` would lie on a curve of degree `a` with `a·b ≥ C(a+2, 2)` although
/// `I_Δ` has no generator of degree `≤ a`.
pub fn open_splittings(d: i64, delta: i64, nodes: &Ideal) -> Result<Vec<(i64, i64)>> {
    let mins = nodes.mingens_ideal()?;
    let degs = mins.generator_degrees();
    let is_ci = degs.len() <= 2;
    let min_deg = degs.iter().copied().min().unwrap_or(i32::MAX) as i64;
    let mut open = Vec::new();
    for a in 1..=d / 2 {
        let b = d - a;
        let ab = a * b;
        let excluded = ab > delta
            || (ab == delta && !is_ci)
            || (ab >= binomial(a + 2, 2) as i64 && min_deg > a);
        if !excluded {
            open.push((a, b));
        }
    }
    Ok(open)
}

/// Jacobian criterion for a curve in `P^n` (a ring with `n + 1` variables):
/// passes iff the singular locus with `(n−1) × (n−1)` minors has codimension
/// `n + 1`, i.e. is empty.
pub fn certify_smooth_curve(i: &Ideal) -> Result<CertificateReport> {
    let n = i.ring().nvars() as i64 - 1;
    let mut rep = CertificateReport::new();
    rep.expect("codim", n - 1, codim(i)?);
    let sing = singular_locus(i, (n - 1) as usize)?;
    rep.expect("sing.codim", n + 1, codim(&sing)?);
    Ok(rep)
}

/// Staged smoothness check for a curve `C` residual to `C'` in a complete
/// intersection `CI` of codimension `c`: first the singular scheme of `CI`
/// must be finite of degree `expected_meet` (the points of `C ∩ C'`); then the
/// `c × c` minors of the Jacobian of `c_gens`, generators of `I_C` chosen to
/// include some outside `CI`, must remove those points, giving the empty set.
pub fn certify_smooth_residual(
    ci: &Ideal,
    c_gens: &[Polynomial],
    expected_meet: i64,
) -> Result<CertificateReport> {
    let ring = ci.ring();
    let n = ring.nvars() as i64;
    let c = codim(ci)?;
    let mut rep = CertificateReport::new();
    let sing_ci = singular_locus(ci, c as usize)?;
    let (pd, deg) = dimension_and_degree(&sing_ci)?;
    rep.expect("sing_ci.degree", expected_meet, deg);
    rep.expect("sing_ci.codim", n - 1, n - (pd + 1));
    let sing_c = jacobian_minors_added(&sing_ci, c_gens, c as usize)?;
    rep.expect("sing.codim", n, codim(&sing_c)?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::ring::{parse_polynomial, Ring};

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn smooth_conic_has_empty_singular_locus() {
        let r = ring(3);
        let c = ideal(&r, &["x0*x2-x1^2"]);
        assert_eq!(codim(&singular_locus(&c, 1).unwrap()).unwrap(), 3);
        let rep = certify_nodal_plane_curve(&c, 0, None).unwrap();
        assert!(rep.passed(), "{:?}", rep);
    }

    #[test]
    fn nodal_cubic_has_one_node() {
        let r = ring(3);
        let c = ideal(&r, &["x1^2*x2-x0^3-x0^2*x2"]);
        let s = singular_locus(&c, 1).unwrap();
        assert_eq!(dimension_and_degree(&s).unwrap(), (0, 1));
        let rep = certify_nodal_plane_curve(&c, 1, None).unwrap();
        assert!(rep.passed(), "{:?}", rep);
    }

    #[test]
    fn cuspidal_cubic_fails_reducedness() {
        let r = ring(3);
        let c = ideal(&r, &["x1^2*x2-x0^3"]);
        let rep = certify_nodal_plane_curve(&c, 1, None).unwrap();
        assert!(!rep.passed());
        // the cusp's singular scheme has length 2
        assert_eq!(rep.get("sing.degree").unwrap().observed, json!(2));
        assert!(!rep.get("sing.reduced.codim").unwrap().pass);
    }

    #[test]
    fn splittings_of_a_degree_nine_curve() {
        let r = ring(3);
        // a complete intersection of type (3, 6) leaves the split (3, 6) open
        let nodes = ideal(&r, &["x0^3", "x1^6"]);
        assert_eq!(open_splittings(9, 18, &nodes).unwrap(), vec![(3, 6)]);
        let nodes = ideal(&r, &["x0^5", "x1^5", "x2^5", "x0*x1*x2^3"]);
        assert!(open_splittings(9, 18, &nodes).unwrap().is_empty());
        // a conic splits off when the nodes lie on one
        let nodes = ideal(&r, &["x0*x2-x1^2", "x0^5"]);
        assert!(open_splittings(9, 18, &nodes).unwrap().contains(&(2, 7)));
    }

    #[test]
    fn twisted_cubic_is_smooth() {
        let r = ring(4);
        let c = ideal(&r, &["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"]);
        assert!(certify_smooth_curve(&c).unwrap().passed());
    }

    #[test]
    fn two_meeting_lines_are_singular() {
        let r = ring(4);
        let c = ideal(&r, &["x0*x1", "x2"]);
        let rep = certify_smooth_curve(&c).unwrap();
        assert!(rep.get("codim").unwrap().pass);
        assert!(!rep.passed());
    }

    #[test]
    fn residual_of_a_line_in_two_quadrics() {
        // two general quadrics through a line meet again in a twisted cubic,
        // which meets the line in two points
        let r = ring(4);
        let mut rng = crate::arith::SeededRng::from_seed(5);
        let x = |i| Polynomial::var(&r, i);
        let mut q = || {
            let a = crate::ring::random_form(&r, 1, &mut rng).unwrap();
            let b = crate::ring::random_form(&r, 1, &mut rng).unwrap();
            x(0).mul(&a).add(&x(1).mul(&b))
        };
        let ci = Ideal::new(&r, vec![q(), q()]).unwrap();
        let line = ideal(&r, &["x0", "x1"]);
        let res = crate::groebner::quotient(&ci, &line).unwrap();
        assert_eq!(dimension_and_degree(&res).unwrap(), (1, 3));
        let extra = res
            .mingens()
            .unwrap()
            .into_iter()
            .find(|g| !ci.contains(g).unwrap())
            .unwrap();
        let gens = vec![ci.gens()[0].clone(), extra];
        let rep = certify_smooth_residual(&ci, &gens, 2).unwrap();
        assert!(rep.passed(), "{:?}", rep);
    }
}
