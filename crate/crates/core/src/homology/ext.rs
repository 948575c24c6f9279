use super::betti::BettiTable;
use super::resolution::{prune, resolve_ideal};
use crate::error::{Error, Result};
use crate::groebner::{codim, syzygies, Ideal};
use crate::ring::{GradedFreeModule, GradedMatrix};

/// Minimal presentation of `Ext^1(I, S(-4))` for a curve ideal `I` in four
/// variables: the homology of the dualized resolution of `I` at its second
/// term, generator degrees shifted by `+4`.
pub fn ext1_dual_presentation(i: &Ideal) -> Result<GradedMatrix> {
    let ring = i.ring();
    if ring.nvars() != 4 {
        return Err(Error::WrongCodimension(format!(
            "ring has {} variables",
            ring.nvars()
        )));
    }
    let c = codim(i)?;
    if c != 2 {
        return Err(Error::WrongCodimension(format!("codimension {c}")));
    }
    let res = resolve_ideal(i)?;
    let d2 = res
        .differential(2)
        .ok_or_else(|| Error::WrongCodimension("ideal is principal".into()))?;
    // dualized: F1* --d2t--> F2* --d3t--> F3*
    let d2t = d2.transpose();
    let f2_dual = d2t.target().clone();
    let kernel = match res.differential(3) {
        Some(d3) if d3.ncols() > 0 => syzygies(&d3.transpose())?,
        _ => GradedMatrix::identity(ring, f2_dual.clone()),
    };
    // relations among the kernel generators modulo the image of d2t
    let k = kernel.ncols();
    let both = kernel.hconcat(&d2t)?;
    let syz = syzygies(&both)?;
    let rows: Vec<usize> = (0..k).collect();
    let rel = syz.select_rows(&rows);
    let rel = GradedMatrix::new(
        ring,
        kernel.source().clone(),
        rel.source().clone(),
        rel.entries().to_vec(),
    )?;
    let p = prune(&rel.drop_zero_columns())?;
    Ok(p.shift(4))
}

/// Betti table of the minimal presentation: generators in column 0 and
/// relations in column 1.
pub fn ext_dual_presentation(i: &Ideal) -> Result<BettiTable> {
    let p = ext1_dual_presentation(i)?;
    Ok(presentation_betti(p.target(), p.source()))
}

pub(crate) fn presentation_betti(gens: &GradedFreeModule, rels: &GradedFreeModule) -> BettiTable {
    let mut t = BettiTable::new();
    for &j in &gens.twists {
        t.add(0, j, 1);
    }
    for &j in &rels.twists {
        t.add(1, j, 1);
    }
    t
}

/// True iff there is no relation in degree one above the least generator
/// degree: `β_{1, jmin + 1} = 0`.
pub fn petri_injective_certificate(ext: &BettiTable) -> bool {
    let jmin = ext
        .iter()
        .filter(|((i, _), _)| *i == 0)
        .map(|((_, j), _)| j)
        .min();
    match jmin {
        Some(j) => ext.get(1, j + 1) == 0,
        None => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::{random_form, Ring};

    fn ci(degs: &[i32], seed: u64) -> Ideal {
        let r = Ring::new(PrimeField::new(10007).unwrap(), 4).unwrap();
        let mut rng = SeededRng::from_seed(seed);
        let gens = degs.iter().map(|&d| random_form(&r, d, &mut rng).unwrap()).collect();
        Ideal::new(&r, gens).unwrap()
    }

    #[test]
    fn canonical_module_of_complete_intersections() {
        // omega = O_C(a + b - 4): generator in degree 4 - a - b
        let t = ext_dual_presentation(&ci(&[2, 3], 1)).unwrap();
        assert_eq!(t.total(0), 1);
        assert_eq!(t.get(0, -1), 1);
        let t = ext_dual_presentation(&ci(&[2, 2], 2)).unwrap();
        assert_eq!(t.total(0), 1);
        assert_eq!(t.get(0, 0), 1);
        assert_eq!(t.get(1, 2), 2);
        assert!(petri_injective_certificate(&t));
    }

    #[test]
    fn petri_condition() {
        let ext_table = BettiTable::from_entries([(0, -1, 2), (0, 0, 4), (1, 1, 12)]);
        assert!(petri_injective_certificate(&ext_table));
        let bad = BettiTable::from_entries([(0, -1, 2), (1, 0, 1)]);
        assert!(!petri_injective_certificate(&bad));
        assert!(petri_injective_certificate(&BettiTable::from_entries([(0, 0, 1)])));
    }

    #[test]
    fn rejects_wrong_codimension() {
        let r = Ring::new(PrimeField::new(10007).unwrap(), 4).unwrap();
        let mut rng = SeededRng::from_seed(3);
        let i = Ideal::new(&r, vec![random_form(&r, 2, &mut rng).unwrap()]).unwrap();
        assert!(matches!(ext_dual_presentation(&i), Err(Error::WrongCodimension(_))));
    }
}
