use super::linalg::{kernel, rref, span_basis};
use super::{retry, DEFAULT_ATTEMPTS};
use crate::arith::SeededRng;
use crate::error::{Error, Result};
use crate::geometry::{certify_smooth_residual, point_ideal, CertificateReport};
use crate::groebner::{codim, dimension_and_degree, intersect, quotient, ring_map_kernel, Ideal};
use crate::homology::{genus, resolve_ideal, BettiTable};
use crate::ring::{
    exterior_power, pfaffians, random_combination, random_matrix, skew_matrix, GradedFreeModule, Polynomial,
    Ring, Term,
};
use serde_json::json;

/// A curve together with marked points on it.
#[derive(Clone, Debug)]
pub struct CurveWithMarkedPoints {
    pub curve: Ideal,
    pub points: Vec<Ideal>,
}

/// Plücker coordinates (lexicographic pairs `i < j`) of the row span of a
/// random `2 × 6` matrix.
fn random_plucker_point(plucker: &Ring, rng: &mut SeededRng) -> Result<Vec<u32>> {
    let a = random_matrix(plucker, &GradedFreeModule::free(2), &GradedFreeModule::free(6), rng)?;
    let row = exterior_power(2, &a)?;
    Ok(row
        .entries()
        .iter()
        .map(|e| e.terms().first().map_or(0, |t| t.coef))
        .collect())
}

fn linear_image(ring: &Ring, coeffs: &[(usize, u32)]) -> Polynomial {
    let terms = coeffs
        .iter()
        .filter(|(_, c)| *c != 0)
        .map(|&(i, coef)| Term {
            mono: crate::ring::Monomial::var(i),
            coef,
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Canonical curve of genus 8 as the section of the Grassmannian `G(2,6)`
/// in its Plücker embedding by the `P^7` spanned by 8 random points of the
/// Grassmannian, returned in the coordinates of `ring` (8 variables) with
/// the 8 points.
pub fn random_canonical_genus8_with_8_points(ring: &Ring, rng: &SeededRng) -> Result<CurveWithMarkedPoints> {
    if ring.nvars() != 8 {
        return Err(Error::InvalidArgument("canonical genus-8 curves live in P^7".into()));
    }
    let field = ring.field();
    let names: Vec<String> = (0..6)
        .flat_map(|i| (i + 1..6).map(move |j| format!("p{i}{j}")))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let plucker = Ring::with_names(field, &name_refs)?;
    let vars: Vec<Polynomial> = (0..15).map(|k| Polynomial::var(&plucker, k)).collect();
    let grass = pfaffians(4, &skew_matrix(&plucker, 6, &vars)?)?;
    let found = retry("genus 8 curve with 8 points", rng, DEFAULT_ATTEMPTS, |r| {
        let pts: Vec<Vec<u32>> = (0..8)
            .map(|_| random_plucker_point(&plucker, r))
            .collect::<Result<_>>()?;
        debug_assert!(pts.iter().all(|v| grass.iter().all(|q| q.eval(v) == 0)));
        // linear forms through the 8 points, in echelon form
        let mut span = kernel(&field, &pts, 15)?;
        if span.len() != 7 {
            return Ok(None);
        }
        let pivots = rref(&field, &mut span)?;
        let free: Vec<usize> = (0..15).filter(|c| !pivots.contains(c)).collect();
        let mut images = vec![Polynomial::zero(ring); 15];
        for (k, &f) in free.iter().enumerate() {
            images[f] = Polynomial::var(ring, k);
        }
        for (row, &p) in span.iter().zip(&pivots) {
            let coeffs: Vec<(usize, u32)> = free
                .iter()
                .enumerate()
                .map(|(k, &f)| (k, field.neg(row[f])))
                .collect();
            images[p] = linear_image(ring, &coeffs);
        }
        let quadrics = grass
            .iter()
            .map(|q| q.substitute(ring, &images))
            .collect::<Result<Vec<_>>>()?;
        let curve = Ideal::new(ring, quadrics)?.mingens_ideal()?;
        let points = pts
            .iter()
            .map(|v| {
                let w: Vec<u32> = free.iter().map(|&f| v[f]).collect();
                point_ideal(ring, &w)
            })
            .collect::<Result<Vec<_>>>()?;
        let (pd, deg) = dimension_and_degree(&curve)?;
        if curve.gens().len() != 15 || pd != 1 || deg != 14 || genus(&curve)? != 8 {
            return Ok(None);
        }
        Ok(Some(CurveWithMarkedPoints { curve, points }))
    })?;
    Ok(found.value)
}

/// Re-embedding of a random canonical genus-8 curve `C'` by the complete
/// linear system `|K + D_1 − D_2|`, where `D_1` and `D_2` are the first and
/// last four marked points: a normal curve of degree 14 in `P^6` (`ring` has
/// 7 variables).
pub fn random_normal_curve_genus8_degree14(ring: &Ring, rng: &SeededRng) -> Result<Ideal> {
    if ring.nvars() != 7 {
        return Err(Error::InvalidArgument("the re-embedded curve lives in P^6".into()));
    }
    let r8 = Ring::new(ring.field(), 8)?;
    let found = retry("genus 8 degree 14 curve", rng, DEFAULT_ATTEMPTS, |r| {
        let cw = random_canonical_genus8_with_8_points(&r8, &r.substream(0))?;
        let i = &cw.curve;
        let d1 = intersect(&cw.points[..4])?;
        let d2 = intersect(&cw.points[4..])?;
        let linear: Vec<Polynomial> = d1
            .gens()
            .iter()
            .filter(|g| g.homogeneous_degree() == Some(1))
            .cloned()
            .collect();
        let h1 = random_combination(&r8, &linear, 1, r)?;
        let e1 = quotient(&i.add_gens(&[h1])?, &d1)?;
        // the hyperplane section H_1 = D_1 + E_1 has degree 2g - 2 = 14
        if dimension_and_degree(&e1)? != (0, 10) {
            return Ok(None);
        }
        let gb = i.groebner();
        let quadrics = intersect(&[e1, d2])?.graded_piece_basis(2)?;
        let reduced = quadrics
            .iter()
            .map(|q| gb.normal_form(q))
            .collect::<Result<Vec<_>>>()?;
        let system = span_basis(&r8, &reduced, 2)?;
        if system.len() != 7 {
            return Ok(None);
        }
        let image = ring_map_kernel(i, &system, ring)?.mingens_ideal()?;
        let (pd, deg) = dimension_and_degree(&image)?;
        if pd != 1 || deg != 14 || genus(&image)? != 8 {
            return Ok(None);
        }
        Ok(Some(image))
    })?;
    Ok(found.value)
}

/// Curve of genus 14 and degree 18 in `P^6`, residual to a genus-8 degree-14
/// curve `C'` in a complete intersection of 5 quadrics containing `C'`.
#[derive(Clone, Debug)]
pub struct Genus14Curve {
    pub ideal: Ideal,
    pub linked: Ideal,
    pub complete_intersection: Ideal,
    pub betti: Option<BettiTable>,
    pub report: Option<CertificateReport>,
}

/// Arithmetic genus of a complete intersection of `k` quadrics in `P^{k+1}`:
/// `ω = O(2k − k − 2)`, so `p_a = 2^k (k − 2) / 2 + 1`.
fn ci_quadrics_genus(k: i64) -> i64 {
    (1i64 << k) * (k - 2) / 2 + 1
}

/// Random genus-14 curve. With `certify` the result is checked for degree
/// 18, codimension 5, genus 14 and smoothness (staged Jacobian criterion
/// through the 28 points of `C ∩ C'`), and its Betti table is computed;
/// failing draws are redrawn.
pub fn random_curve_genus14(ring: &Ring, rng: &SeededRng, certify: bool) -> Result<Genus14Curve> {
    if ring.nvars() != 7 {
        return Err(Error::InvalidArgument("genus-14 curves live in P^6".into()));
    }
    let found = retry("genus 14 curve", rng, DEFAULT_ATTEMPTS, |r| {
        let linked = random_normal_curve_genus8_degree14(ring, &r.substream(0))?;
        let quadrics: Vec<Polynomial> = (0..5)
            .map(|_| random_combination(ring, linked.gens(), 2, r))
            .collect::<Result<_>>()?;
        let ci = Ideal::new(ring, quadrics)?;
        let ideal = quotient(&ci, &linked)?.mingens_ideal()?;
        if !certify {
            return Ok(Some(Genus14Curve {
                ideal,
                linked,
                complete_intersection: ci,
                betti: None,
                report: None,
            }));
        }
        let mut rep = CertificateReport::new();
        let (pd, deg) = dimension_and_degree(&ideal)?;
        rep.expect("degree", 18, deg);
        rep.expect("codim", 5, 7 - (pd + 1));
        rep.expect("genus", 14, genus(&ideal)?);
        if !rep.passed() {
            return Ok(None);
        }
        let pa = ci_quadrics_genus(5);
        rep.expect("ci.arithmetic_genus", 49, pa);
        rep.expect("linked.genus_from_ci", 8, pa - 14 - 28 + 1);
        let mut by_degree = ideal.gens_by_degree();
        if by_degree.len() < 6 {
            return Ok(None);
        }
        by_degree.remove(4);
        by_degree.truncate(5);
        rep.extend("smooth", certify_smooth_residual(&ci, &by_degree, 28)?);
        if !rep.passed() {
            log::info!("genus 14 certificate failed: {:?}", rep.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>());
            return Ok(None);
        }
        let ci_codim = codim(&ci)?;
        rep.record("ci.codim", json!(5), json!(ci_codim), ci_codim == 5);
        let betti = resolve_ideal(&ideal)?.betti();
        Ok(Some(Genus14Curve {
            ideal,
            linked,
            complete_intersection: ci,
            betti: Some(betti),
            report: Some(rep),
        }))
    })?;
    let mut c = found.value;
    c.report = c
        .report
        .map(|r| r.with_provenance(rng.seed(), found.stream, found.attempts));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_intersection_genus() {
        assert_eq!(ci_quadrics_genus(5), 49);
        assert_eq!(49 - 14 - 28 + 1, 8);
        // two quadrics in P^3: an elliptic quartic
        assert_eq!(ci_quadrics_genus(2), 1);
    }

    fn ring(n: usize) -> Ring {
        Ring::new(crate::arith::PrimeField::new(10007).unwrap(), n).unwrap()
    }

    #[test]
    fn canonical_genus8_curve_with_points() {
        let r = ring(8);
        let cw = random_canonical_genus8_with_8_points(&r, &SeededRng::from_seed(3)).unwrap();
        assert_eq!(cw.curve.gens().len(), 15);
        assert_eq!(dimension_and_degree(&cw.curve).unwrap(), (1, 14));
        assert_eq!(genus(&cw.curve).unwrap(), 8);
        assert_eq!(cw.points.len(), 8);
        for p in &cw.points {
            assert!(cw.curve.gens().iter().all(|g| p.contains(g).unwrap()));
        }
        let all = intersect(&cw.points).unwrap();
        assert_eq!(dimension_and_degree(&all).unwrap(), (0, 8));
    }

    #[test]
    fn normal_genus8_degree14_curve() {
        let i = random_normal_curve_genus8_degree14(&ring(7), &SeededRng::from_seed(4)).unwrap();
        let want = BettiTable::from_rows(0, &[&[1], &[0, 7], &[0, 0, 35, 56, 35, 8]]);
        assert_eq!(resolve_ideal(&i).unwrap().betti(), want);
    }

    #[test]
    fn certified_genus14_curve() {
        let c = random_curve_genus14(&ring(7), &SeededRng::from_seed(5), true).unwrap();
        let rep = c.report.as_ref().unwrap();
        assert!(rep.passed(), "{}", rep.to_json());
        let want = BettiTable::from_entries([(0, 0, 1), (1, 2, 5), (1, 3, 8), (2, 4, 45), (3, 5, 56), (4, 6, 25), (5, 8, 2)]);
        assert_eq!(c.betti.unwrap(), want);
    }
}
