use super::engine::{groebner, GbOptions, ModOrder, Reducer, Vector};
use crate::error::{Error, Result};
use crate::ring::{GradedFreeModule, GradedMatrix, Monomial, Polynomial, Ring, Term};

/// Column `j` of `m` as a module vector, components offset by `offset`.
fn column_vector(ord: &ModOrder, m: &GradedMatrix, j: usize, offset: u32) -> Vector {
    let mut v = Vec::new();
    for i in 0..m.nrows() {
        for t in m.entry(i, j).terms() {
            v.push(ord.term(t.mono, i as u32 + offset, t.coef));
        }
    }
    ord.normalize(v)
}

/// Splits a vector into `rank` polynomial entries, components offset by `offset`.
fn vector_entries(ring: &Ring, v: &Vector, rank: usize, offset: u32) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<Term>> = vec![Vec::new(); rank];
    for t in v {
        parts[(t.comp - offset) as usize].push(Term {
            mono: t.mono,
            coef: t.coef,
        });
    }
    parts
        .into_iter()
        .map(|p| Polynomial::from_terms(ring, p))
        .collect()
}

fn vectors_to_matrix(
    ring: &Ring,
    target: &GradedFreeModule,
    vecs: &[Vector],
    offset: u32,
) -> Result<GradedMatrix> {
    let cols: Vec<Vec<Polynomial>> = vecs
        .iter()
        .map(|v| vector_entries(ring, v, target.rank(), offset))
        .collect();
    let source: Vec<i32> = vecs.iter().map(|v| v[0].deg).collect();
    let c = cols.len();
    let r = target.rank();
    let mut entries = vec![Polynomial::zero(ring); r * c];
    for (j, col) in cols.into_iter().enumerate() {
        for (i, e) in col.into_iter().enumerate() {
            entries[i * c + j] = e;
        }
    }
    GradedMatrix::new(ring, target.clone(), GradedFreeModule::new(source), entries)
}

/// Indices of a minimal generating subset of the given homogeneous vectors.
fn minimal_subset(ord: &ModOrder, vecs: &[Vector]) -> Result<Vec<usize>> {
    let opts = GbOptions {
        skip_tail_reduction: true,
        ..Default::default()
    };
    Ok(groebner(ord, vecs, &opts)?.min_gens)
}

/// Minimal generators of the kernel of `m`, as the columns of a matrix with
/// target `m.source()`.
pub fn syzygies(m: &GradedMatrix) -> Result<GradedMatrix> {
    let ring = m.ring();
    let (r, c) = (m.nrows(), m.ncols());
    if c == 0 {
        return Ok(GradedMatrix::zero(
            ring,
            m.source().clone(),
            GradedFreeModule::new(Vec::new()),
        ));
    }
    let mut twists = m.target().twists.clone();
    twists.extend_from_slice(&m.source().twists);
    let mut ord = ModOrder::module(ring, twists);
    ord.split = r as u32;
    let gens: Vec<Vector> = (0..c)
        .map(|j| {
            let mut v = column_vector(&ord, m, j, 0);
            v.push(ord.term(Monomial::ONE, (r + j) as u32, 1));
            ord.normalize(v)
        })
        .collect();
    let opts = GbOptions {
        skip_tail_reduction: true,
        ..Default::default()
    };
    let gb = groebner(&ord, &gens, &opts)?;
    let syz_ord = ModOrder::module(ring, m.source().twists.clone());
    let syz: Vec<Vector> = gb
        .basis
        .into_iter()
        .filter(|v| v[0].comp >= r as u32)
        .map(|v| {
            let shifted: Vector = v
                .into_iter()
                .map(|mut t| {
                    t.comp -= r as u32;
                    t
                })
                .collect();
            syz_ord.normalize(shifted)
        })
        .collect();
    let keep = minimal_subset(&syz_ord, &syz)?;
    let chosen: Vec<Vector> = keep.into_iter().map(|k| syz[k].clone()).collect();
    vectors_to_matrix(ring, m.source(), &chosen, 0)
}

/// Minimal generating subset of the columns of `m` (the image is unchanged).
pub fn mingens_columns(m: &GradedMatrix) -> Result<GradedMatrix> {
    let ord = ModOrder::module(m.ring(), m.target().twists.clone());
    let vecs: Vec<Vector> = (0..m.ncols()).map(|j| column_vector(&ord, m, j, 0)).collect();
    let keep = minimal_subset(&ord, &vecs)?;
    Ok(m.select_columns(&keep))
}

/// Gröbner basis of the image of a matrix, used for membership and normal
/// forms of column vectors.
pub struct ModuleGroebner {
    ring: Ring,
    target: GradedFreeModule,
    ord: ModOrder,
    basis: Vec<Vector>,
}

impl ModuleGroebner {
    pub fn new(m: &GradedMatrix) -> Result<Self> {
        let ord = ModOrder::module(m.ring(), m.target().twists.clone());
        let vecs: Vec<Vector> = (0..m.ncols()).map(|j| column_vector(&ord, m, j, 0)).collect();
        let basis = groebner(&ord, &vecs, &GbOptions::default())?.basis;
        Ok(ModuleGroebner {
            ring: m.ring().clone(),
            target: m.target().clone(),
            ord,
            basis,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Normal form of a homogeneous column vector.
    pub fn normal_form(&self, col: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if col.len() != self.target.rank() {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        let mut v = Vec::new();
        for (i, e) in col.iter().enumerate() {
            for t in e.terms() {
                v.push(self.ord.term(t.mono, i as u32, t.coef));
            }
        }
        let v = self.ord.normalize(v);
        let mut red = Reducer::new(&self.ord);
        for b in &self.basis {
            red.push(b.clone());
        }
        let r = red.reduce(v, true);
        Ok(vector_entries(&self.ring, &r, self.target.rank(), 0))
    }

    pub fn contains(&self, col: &[Polynomial]) -> Result<bool> {
        Ok(self.normal_form(col)?.iter().all(|e| e.is_zero()))
    }

    /// Number of basis elements of the image in degree `d`.
    pub fn graded_piece_dim(&self, d: i32) -> usize {
        let mut n = 0;
        for (i, &tw) in self.target.twists.iter().enumerate() {
            for m in self.ring.monomials_of_degree(d - tw) {
                if self
                    .basis
                    .iter()
                    .any(|b| b[0].comp == i as u32 && b[0].mono.divides(&m))
                {
                    n += 1;
                }
            }
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::{minors, parse_polynomial, random_matrix};

    fn ring(n: usize) -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), n).unwrap()
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(2);
        let m = GradedMatrix::row(&r, &[Polynomial::var(&r, 0), Polynomial::var(&r, 1)]).unwrap();
        let s = syzygies(&m).unwrap();
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.source().twists, vec![2]);
        let x1 = parse_polynomial(&r, "x1").unwrap();
        let c = s.column(0);
        // proportional to (x1, -x0)
        let scale = r.field().div(c[0].lead().unwrap().coef, 1).unwrap();
        assert_eq!(c[0], x1.scale(scale));
        assert_eq!(c[1], parse_polynomial(&r, "-x0").unwrap().scale(scale));
        assert!(m.mul(&s).unwrap().is_zero());
    }

    #[test]
    fn linear_12x4_transpose_has_8_linear_syzygies() {
        let r = ring(4);
        let mut rng = SeededRng::from_seed(3);
        let psi = random_matrix(
            &r,
            &GradedFreeModule::from_shifts(&[(12, 0)]),
            &GradedFreeModule::from_shifts(&[(4, -1)]),
            &mut rng,
        )
        .unwrap();
        let s = syzygies(&psi.transpose()).unwrap();
        assert!(psi.transpose().mul(&s).unwrap().is_zero());
        let low: Vec<i32> = s
            .source()
            .twists
            .iter()
            .copied()
            .filter(|&d| d == 1)
            .collect();
        assert_eq!(low.len(), 8);
    }

    #[test]
    fn hilbert_burch_recovered_from_minors() {
        let r = ring(3);
        let mut rng = SeededRng::from_seed(5);
        // 4x3 matrix with entries of degrees giving 3 quintics and a sextic
        let m = random_matrix(
            &r,
            &GradedFreeModule::new(vec![0, 0, 0, 1]),
            &GradedFreeModule::new(vec![2, 2, 2]),
            &mut rng,
        );
        let m = m.unwrap();
        let mins = minors(3, &m).unwrap();
        let gens: Vec<Polynomial> = mins
            .iter()
            .enumerate()
            .map(|(k, p)| if k % 2 == 1 { p.neg() } else { p.clone() })
            .collect();
        let row = GradedMatrix::row(&r, &gens).unwrap();
        let s = syzygies(&row).unwrap();
        assert_eq!(s.ncols(), 3);
        assert!(row.mul(&s).unwrap().is_zero());
    }

    #[test]
    fn module_membership() {
        let r = ring(3);
        let m = GradedMatrix::row(&r, &[parse_polynomial(&r, "x0^2").unwrap(), parse_polynomial(&r, "x1").unwrap()]).unwrap();
        let g = ModuleGroebner::new(&m).unwrap();
        assert!(g.contains(&[parse_polynomial(&r, "x0^3+x1*x2").unwrap()]).unwrap());
        assert!(!g.contains(&[parse_polynomial(&r, "x0*x2").unwrap()]).unwrap());
        assert_eq!(g.graded_piece_dim(1), 1);
        assert_eq!(g.graded_piece_dim(2), 4);
    }
}
