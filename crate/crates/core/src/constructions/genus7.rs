use super::linalg::span_basis;
use super::{random_nodal_plane_curve, retry, DEFAULT_ATTEMPTS};
use crate::arith::SeededRng;
use crate::error::{Error, Result};
use crate::geometry::{random_rational_point, CertificateReport};
use crate::groebner::{dimension_and_degree, intersect, quotient, ring_map_kernel, Ideal};
use crate::homology::{genus, resolve_ideal, satisfies_np, BettiTable};
use crate::ring::{random_combination, Polynomial, Ring};
use serde_json::json;

/// Trials allowed per rational point.
const POINT_TRIALS: usize = 200;

/// Curve of genus 7 and degree 14 in `P^7` with its Betti table and the
/// verdict on property `N_2`.
#[derive(Clone, Debug)]
pub struct Genus7Curve {
    pub ideal: Ideal,
    pub betti: BettiTable,
    pub n2: bool,
    pub report: CertificateReport,
}

/// Genus-7 curve embedded by a random divisor `D` of 14 rational points.
///
/// A septic with 8 nodes `Δ` is drawn in `ring` (3 variables), `D` is
/// collected with [`random_rational_point`], and `|D|` is cut out by sextics
/// through `Δ` and the residual `E` of `D + 2Δ` in a sextic through `D + Δ`.
pub fn random_genus7_degree14_curve(ring: &Ring, rng: &SeededRng) -> Result<Genus7Curve> {
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument("the plane model needs a ring in 3 variables".into()));
    }
    let target = Ring::new(ring.field(), 8)?;
    let found = retry("genus 7 degree 14 curve", rng, DEFAULT_ATTEMPTS, |r| {
        let plane = random_nodal_plane_curve(7, ring, &r.substream(0))?;
        let (Some(j), Some(j2)) = (plane.nodes, plane.double_point_ideal) else {
            return Ok(None);
        };
        let c = &plane.curve;
        let mut pr = r.substream(1);
        let points = (0..14)
            .map(|_| random_rational_point(c, &mut pr, POINT_TRIALS))
            .collect::<Result<Vec<_>>>()?;
        let d = intersect(&points)?;
        let mut report = CertificateReport::new();
        let deg_d = dimension_and_degree(&d)?.1;
        let deg_j = dimension_and_degree(&j)?.1;
        if deg_d != 14 {
            return Ok(None);
        }
        let dj = intersect(&[d.clone(), j.clone()])?;
        report.expect("divisor.degree", 14, deg_d);
        report.expect("divisor_and_nodes.degree", deg_d + deg_j, dimension_and_degree(&dj)?.1);
        let h = random_combination(ring, dj.gens(), 6, r)?;
        let hc = c.add_gens(&[h])?;
        let e = quotient(&quotient(&hc, &j2)?, &d)?;
        let deg_e = dimension_and_degree(&e)?.1;
        report.expect("residual.degree_sum", 42, deg_e + deg_d + 2 * deg_j);
        let gb = c.groebner();
        let sextics: Vec<Polynomial> = intersect(&[e, j])?
            .graded_piece_basis(6)?
            .iter()
            .map(|s| gb.normal_form(s))
            .collect::<Result<_>>()?;
        let system = span_basis(ring, &sextics, 6)?;
        report.expect("linear_system.dim", 8, system.len() as i64);
        if !report.passed() {
            return Ok(None);
        }
        let ideal = ring_map_kernel(c, &system, &target)?.mingens_ideal()?;
        let (pd, deg) = dimension_and_degree(&ideal)?;
        report.expect("codim", 6, 8 - (pd + 1));
        report.expect("degree", 14, deg);
        report.expect("genus", 7, genus(&ideal)?);
        if !report.passed() {
            return Ok(None);
        }
        let betti = resolve_ideal(&ideal)?.betti();
        let n2 = satisfies_np(&betti, 2);
        report.record("n2", json!(true), json!(n2), n2);
        Ok(Some(Genus7Curve {
            ideal,
            betti,
            n2,
            report,
        }))
    })?;
    let mut c = found.value;
    c.report = c.report.with_provenance(rng.seed(), found.stream, found.attempts);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    #[test]
    fn genus7_degree14_curve_satisfies_n2() {
        let ring = Ring::new(PrimeField::new(10007).unwrap(), 3).unwrap();
        let c = random_genus7_degree14_curve(&ring, &SeededRng::from_seed(7)).unwrap();
        assert!(c.report.passed(), "{}", c.report.to_json());
        let want = BettiTable::from_rows(0, &[&[1], &[0, 14, 28], &[0, 0, 0, 56, 70, 36, 7]]);
        assert_eq!(c.betti, want);
        assert!(c.n2);
    }
}
