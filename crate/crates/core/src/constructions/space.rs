use super::{retry, DEFAULT_ATTEMPTS};
use crate::arith::SeededRng;
use crate::error::{Error, Result};
use crate::geometry::{certify_smooth_curve, CertificateReport};
use crate::groebner::{dimension_and_degree, syzygies, Ideal, ModuleGroebner};
use crate::homology::{
    expected_natural_betti, ext_dual_presentation, genus, petri_injective_certificate, resolve_cokernel,
    resolve_ideal, BettiTable, FreeResolution, HilbertNumerator,
};
use crate::ring::{random_matrix, GradedFreeModule, GradedMatrix, Polynomial, Ring};
use serde_json::json;

/// `(5t^2 + 8t^3 + 6t^4)(1 − t)^4`, the numerator of the target module.
pub fn hartshorne_rao_target_numerator() -> HilbertNumerator {
    HilbertNumerator::new(vec![0, 0, 5, -12, 4, 4, 9, -16, 6])
}

/// Finite-length module `M` presented as the cokernel of `presentation`
/// (`S^5(−2) <- S^12(−3)`), with its minimal resolution.
#[derive(Clone, Debug)]
pub struct HartshorneRaoPresentation {
    pub presentation: GradedMatrix,
    pub resolution: FreeResolution,
    /// `(d, dim M_d)` for every degree with `M_d ≠ 0`.
    pub hilbert_function: Vec<(i32, usize)>,
    pub numerator: HilbertNumerator,
    pub natural: bool,
}

impl HartshorneRaoPresentation {
    pub fn betti(&self) -> BettiTable {
        self.resolution.betti()
    }
}

fn cokernel_dim(m: &GradedMatrix, gb: &ModuleGroebner, d: i32) -> usize {
    let ring = m.ring();
    let ambient: usize = m
        .target()
        .twists
        .iter()
        .filter(|&&t| d >= t)
        .map(|&t| ring.count_monomials(d - t))
        .sum();
    ambient - gb.graded_piece_dim(d)
}

/// Random module with Hilbert function `(5, 8, 6)` in degrees `(2, 3, 4)`:
/// `ψ: S^12(−3) <- S^4(−4)` is random, the degree-2 syzygies of `ψ^t` are
/// combined at random into five, and the transpose of the result presents `M`.
pub fn random_hartshorne_rao_module(ring: &Ring, rng: &SeededRng) -> Result<HartshorneRaoPresentation> {
    if ring.nvars() != 4 {
        return Err(Error::InvalidArgument("Hartshorne–Rao module lives over P^3".into()));
    }
    let target = hartshorne_rao_target_numerator();
    let found = retry("Hartshorne–Rao module", rng, DEFAULT_ATTEMPTS, |r| {
        let psi = random_matrix(
            ring,
            &GradedFreeModule::from_shifts(&[(12, -3)]),
            &GradedFreeModule::from_shifts(&[(4, -4)]),
            r,
        )?;
        let syz = syzygies(&psi.transpose())?;
        let cols: Vec<usize> = (0..syz.ncols()).filter(|&j| syz.source().twists[j] == -2).collect();
        if cols.len() < 8 {
            return Ok(None);
        }
        let k = syz.select_columns(&cols);
        let comb = random_matrix(ring, k.source(), &GradedFreeModule::from_shifts(&[(5, 2)]), r)?;
        let presentation = k.mul(&comb)?.transpose();
        let resolution = resolve_cokernel(&presentation)?;
        let betti = resolution.betti();
        let numerator = betti.hilbert_numerator()?;
        if numerator != target || resolution.length() != 4 {
            return Ok(None);
        }
        let gb = ModuleGroebner::new(&presentation)?;
        let hilbert_function: Vec<(i32, usize)> = (0..=8)
            .map(|d| (d, cokernel_dim(&presentation, &gb, d)))
            .filter(|&(_, n)| n > 0)
            .collect();
        let natural = expected_natural_betti(&numerator, Some(4)).is_ok_and(|t| t == betti);
        Ok(Some(HartshorneRaoPresentation {
            presentation,
            resolution,
            hilbert_function,
            numerator,
            natural,
        }))
    })?;
    Ok(found.value)
}

/// Space curve with its Betti table, canonical-module presentation table and
/// certificate.
#[derive(Clone, Debug)]
pub struct SpaceCurve {
    pub ideal: Ideal,
    pub betti: BettiTable,
    pub ext: BettiTable,
    pub module: HartshorneRaoPresentation,
    pub report: CertificateReport,
}

/// Ideal of the curve whose ideal sheaf is the cokernel of a random map
/// `φ: O(−4)^4 ⊕ O(−5)^2 → F`, where `F` is the sheaf of the second syzygy
/// module of `M`. A degree-0 syzygy `σ` of `φ^t`, composed with the second
/// differential, gives the generators of `I_C`.
fn curve_from_module(ring: &Ring, module: &HartshorneRaoPresentation, rng: &mut SeededRng) -> Result<Option<Ideal>> {
    let d2 = module
        .resolution
        .differential(2)
        .ok_or_else(|| Error::InvalidArgument("module resolution too short".into()))?;
    let l2 = GradedFreeModule::from_shifts(&[(4, -4), (2, -5)]);
    let phi = d2.mul(&random_matrix(ring, d2.source(), &l2, rng)?)?;
    let syz = syzygies(&phi.transpose())?;
    let cols: Vec<usize> = (0..syz.ncols()).filter(|&j| syz.source().twists[j] == 0).collect();
    if cols.is_empty() {
        return Ok(None);
    }
    let mut gens: Vec<Polynomial> = Vec::new();
    for j in cols {
        let sigma = syz.select_columns(&[j]).transpose();
        let row = sigma.mul(d2)?;
        gens.extend(row.entries().iter().cloned());
    }
    let ideal = Ideal::new(ring, gens)?;
    if ideal.is_zero() {
        return Ok(None);
    }
    Ok(Some(ideal.mingens_ideal()?))
}

/// Smooth curve of degree 13 and genus 12 in `P^3` built from a random
/// Hartshorne–Rao module, certified by `(codim, degree, genus)`, the Jacobian
/// criterion and injectivity of the Petri map read off `Ext^1(I_C, S(−4))`.
pub fn random_space_curve_genus12_degree13(ring: &Ring, rng: &SeededRng) -> Result<SpaceCurve> {
    if ring.nvars() != 4 {
        return Err(Error::InvalidArgument("space curves need a ring in 4 variables".into()));
    }
    let found = retry("genus 12 space curve", rng, DEFAULT_ATTEMPTS, |r| {
        let module = random_hartshorne_rao_module(ring, &r.substream(0))?;
        let Some(ideal) = curve_from_module(ring, &module, r)? else {
            return Ok(None);
        };
        let (pd, deg) = dimension_and_degree(&ideal)?;
        if pd != 1 || deg != 13 || genus(&ideal)? != 12 {
            return Ok(None);
        }
        let mut report = CertificateReport::new();
        report.expect("codim", 2, 4 - (pd + 1));
        report.expect("degree", 13, deg);
        report.expect("genus", 12, genus(&ideal)?);
        report.extend("smooth", certify_smooth_curve(&ideal)?);
        let betti = resolve_ideal(&ideal)?.betti();
        let ext = ext_dual_presentation(&ideal)?;
        report.record(
            "petri_injective",
            json!(true),
            json!(ext.to_json()),
            petri_injective_certificate(&ext),
        );
        Ok(Some(SpaceCurve {
            ideal,
            betti,
            ext,
            module,
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

    fn p3() -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), 4).unwrap()
    }

    #[test]
    fn target_numerator_is_hilbert_function_times_one_minus_t_to_the_4() {
        let h = [0i64, 0, 5, 8, 6];
        let mut num = vec![0i64; 9];
        // (1 - t)^4 = 1 - 4t + 6t^2 - 4t^3 + t^4
        let k = [1i64, -4, 6, -4, 1];
        for (i, a) in h.iter().enumerate() {
            for (j, b) in k.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        assert_eq!(HilbertNumerator::new(num), hartshorne_rao_target_numerator());
        assert_eq!(hartshorne_rao_target_numerator().at_one(), 0);
    }

    #[test]
    fn hartshorne_rao_module() {
        let m = random_hartshorne_rao_module(&p3(), &SeededRng::from_seed(1)).unwrap();
        assert_eq!(m.hilbert_function, vec![(2, 5), (3, 8), (4, 6)]);
        assert_eq!(m.resolution.length(), 4);
        assert!(m.natural);
        let want = BettiTable::from_rows(2, &[&[5, 12, 4], &[0, 0, 4], &[0, 0, 9, 16, 6]]);
        assert_eq!(m.betti(), want);
    }

    #[test]
    fn genus12_space_curve() {
        let c = random_space_curve_genus12_degree13(&p3(), &SeededRng::from_seed(2)).unwrap();
        assert!(c.report.passed(), "{}", c.report.to_json());
        let betti = BettiTable::from_entries([(0, 0, 1), (1, 5, 2), (1, 6, 9), (2, 7, 16), (3, 8, 6)]);
        assert_eq!(c.betti, betti);
        let ext = BettiTable::from_entries([(0, -1, 2), (0, 0, 4), (1, 1, 12)]);
        assert_eq!(c.ext, ext);
    }
}
