use super::betti::BettiTable;
use crate::error::{Error, Result};
use crate::groebner::{mingens_columns, syzygies, Ideal};
use crate::ring::{GradedFreeModule, GradedMatrix, Polynomial, Ring};

/// Graded free resolution `F_0 <- F_1 <- ... <- F_c` with `d_i: F_i -> F_{i-1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Ring,
    modules: Vec<GradedFreeModule>,
    differentials: Vec<GradedMatrix>,
    minimal: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `differentials()[i - 1]` is `d_i: F_i -> F_{i-1}`.
    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    pub fn differential(&self, i: usize) -> Option<&GradedMatrix> {
        i.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::new();
        for (i, f) in self.modules.iter().enumerate() {
            for &j in &f.twists {
                t.add(i, j, 1);
            }
        }
        t
    }

    /// True when `d_i ∘ d_{i+1} = 0` for every `i`.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when no differential has a nonzero constant entry.
    pub fn has_no_unit_entries(&self) -> bool {
        self.differentials
            .iter()
            .all(|d| d.entries().iter().all(|e| e.is_zero() || !e.is_unit()))
    }
}

/// Eliminates unit entries of a presentation matrix: each nonzero constant
/// `(i, j)` removes generator `i` of the target and relation `j`. The
/// cokernel is unchanged.
pub fn prune(m: &GradedMatrix) -> Result<GradedMatrix> {
    let ring = m.ring().clone();
    let field = ring.field();
    let mut rows: Vec<usize> = (0..m.nrows()).collect();
    let mut cols: Vec<usize> = (0..m.ncols()).collect();
    let mut ent: Vec<Vec<Polynomial>> = (0..m.nrows()).map(|i| m.row_entries(i)).collect();
    loop {
        let mut pivot = None;
        'search: for &j in &cols {
            for &i in &rows {
                let e = &ent[i][j];
                if !e.is_zero() && e.is_unit() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        let c = field.inv(ent[pi][pj].lead().expect("nonzero").coef)?;
        let prow: Vec<Polynomial> = ent[pi].iter().map(|p| p.scale(c)).collect();
        for &i in &rows {
            if i == pi || ent[i][pj].is_zero() {
                continue;
            }
            let f = ent[i][pj].clone();
            for &j in &cols {
                if !prow[j].is_zero() {
                    ent[i][j] = ent[i][j].sub(&f.mul(&prow[j]));
                }
            }
        }
        rows.retain(|&i| i != pi);
        cols.retain(|&j| j != pj);
    }
    let target = GradedFreeModule::new(rows.iter().map(|&i| m.target().twists[i]).collect());
    let source = GradedFreeModule::new(cols.iter().map(|&j| m.source().twists[j]).collect());
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for &i in &rows {
        for &j in &cols {
            entries.push(ent[i][j].clone());
        }
    }
    let pruned = GradedMatrix::new(&ring, target, source, entries)?;
    mingens_columns(&pruned.drop_zero_columns())
}

fn resolve_from(ring: &Ring, f0: GradedFreeModule, d1: GradedMatrix) -> Result<FreeResolution> {
    let n = ring.nvars();
    let mut modules = vec![f0];
    let mut differentials = Vec::new();
    let mut d = d1;
    while d.ncols() > 0 {
        if differentials.len() >= n {
            return Err(Error::ResolutionTooLong(n));
        }
        log::debug!(
            "resolution step {}: rank {}",
            differentials.len() + 1,
            d.ncols()
        );
        modules.push(d.source().clone());
        let next = syzygies(&d)?;
        differentials.push(d);
        d = next;
    }
    Ok(FreeResolution {
        ring: ring.clone(),
        modules,
        differentials,
        minimal: true,
    })
}

/// Minimal free resolution of `S/I` by iterated minimal syzygies.
pub fn resolve_ideal(i: &Ideal) -> Result<FreeResolution> {
    let ring = i.ring();
    let gens = i.mingens()?;
    if gens.iter().any(|g| g.is_unit()) {
        return Ok(FreeResolution {
            ring: ring.clone(),
            modules: Vec::new(),
            differentials: Vec::new(),
            minimal: true,
        });
    }
    let d1 = GradedMatrix::row(ring, &gens)?;
    resolve_from(ring, GradedFreeModule::free(1), d1)
}

/// Minimal free resolution of the cokernel of a presentation matrix.
pub fn resolve_cokernel(m: &GradedMatrix) -> Result<FreeResolution> {
    let p = prune(m)?;
    resolve_from(m.ring(), p.target().clone(), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::{parse_polynomial, random_form};

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    #[test]
    fn koszul_complexes() {
        for n in 1..=4 {
            let r = ring(n);
            let res = resolve_ideal(&Ideal::irrelevant(&r)).unwrap();
            let want: Vec<u64> = (0..=n as i64)
                .map(|k| crate::ring::binomial(n as i64, k) as u64)
                .collect();
            assert_eq!(res.betti().totals(), want);
            assert!(res.is_complex().unwrap());
            assert!(res.has_no_unit_entries());
        }
    }

    #[test]
    fn complete_intersection_of_two_quadrics() {
        let r = ring(4);
        let mut rng = SeededRng::from_seed(1);
        let gens = vec![random_form(&r, 2, &mut rng).unwrap(), random_form(&r, 2, &mut rng).unwrap()];
        let res = resolve_ideal(&Ideal::new(&r, gens).unwrap()).unwrap();
        let t = res.betti();
        assert_eq!(t, BettiTable::from_entries([(0, 0, 1), (1, 2, 2), (2, 4, 1)]));
        let num = t.hilbert_numerator().unwrap();
        let i = Ideal::new(&r, res.differential(1).unwrap().row_entries(0)).unwrap();
        assert_eq!(super::super::hilbert_numerator(&i), num);
    }

    #[test]
    fn twisted_cubic_resolution() {
        let r = ring(4);
        let gens = ["x0*x2-x1^2", "x1*x3-x2^2", "x0*x3-x1*x2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let res = resolve_ideal(&Ideal::new(&r, gens).unwrap()).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
        assert!(res.is_complex().unwrap());
    }

    #[test]
    fn prune_cancels_units() {
        let r = ring(2);
        // coker of [[x1, x0^2], [1, x0]] is S/(x0^2 - x0*x1)
        let m = GradedMatrix::new(
            &r,
            GradedFreeModule::new(vec![0, 1]),
            GradedFreeModule::new(vec![1, 2]),
            vec![
                parse_polynomial(&r, "x1").unwrap(),
                parse_polynomial(&r, "x0^2").unwrap(),
                Polynomial::one(&r),
                parse_polynomial(&r, "x0").unwrap(),
            ],
        )
        .unwrap();
        let p = prune(&m).unwrap();
        assert_eq!(p.target().twists, vec![0]);
        assert_eq!(p.ncols(), 1);
        let res = resolve_cokernel(&m).unwrap();
        assert_eq!(res.betti(), BettiTable::from_entries([(0, 0, 1), (1, 2, 1)]));
    }
}
