use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Graded free module `⊕ S(-a_i)`, stored as the generator degrees `a_i`.
///
/// The shift notation `S^{3:-4}` (three copies of `S(-4)`) corresponds to
/// `from_shifts(&[(3, -4)])`, i.e. generator degrees `[4, 4, 4]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        GradedFreeModule { twists }
    }

    /// `S^n` with all generators in degree 0.
    pub fn free(n: usize) -> Self {
        GradedFreeModule { twists: vec![0; n] }
    }

    /// Builds from `(count, shift)` pairs meaning `S(shift)^count`.
    pub fn from_shifts(parts: &[(usize, i32)]) -> Self {
        let twists = parts
            .iter()
            .flat_map(|&(n, s)| std::iter::repeat_n(-s, n))
            .collect();
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// `Hom(F, S)`: generator degrees negated.
    pub fn dual(&self) -> Self {
        GradedFreeModule {
            twists: self.twists.iter().map(|t| -t).collect(),
        }
    }

    /// `F(-d)`: generator degrees shifted up by `d`.
    pub fn shift(&self, d: i32) -> Self {
        GradedFreeModule {
            twists: self.twists.iter().map(|t| t + d).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        GradedFreeModule { twists }
    }
}

/// Homogeneous matrix `source -> target` over a polynomial ring, row-major.
/// Entry `(i, j)` is zero or homogeneous of degree
/// `source.twists[j] - target.twists[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: Ring,
    target: GradedFreeModule,
    source: GradedFreeModule,
    entries: Vec<Polynomial>,
}

impl GradedMatrix {
    pub fn new(
        ring: &Ring,
        target: GradedFreeModule,
        source: GradedFreeModule,
        entries: Vec<Polynomial>,
    ) -> Result<Self> {
        let (r, c) = (target.rank(), source.rank());
        if entries.len() != r * c {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {r}x{c} matrix",
                entries.len()
            )));
        }
        for i in 0..r {
            for j in 0..c {
                let e = &entries[i * c + j];
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if e.is_zero() {
                    continue;
                }
                let want = source.twists[j] - target.twists[i];
                if e.homogeneous_degree() != Some(want) {
                    return Err(Error::Inhomogeneous(format!(
                        "entry ({i},{j}) should have degree {want}"
                    )));
                }
            }
        }
        Ok(GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            entries,
        })
    }

    /// Matrix from columns of homogeneous polynomials; source degrees are
    /// inferred from the columns (zero columns get degree 0).
    pub fn from_columns(
        ring: &Ring,
        target: GradedFreeModule,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let r = target.rank();
        let mut source = Vec::with_capacity(columns.len());
        for col in &columns {
            if col.len() != r {
                return Err(Error::DimensionMismatch("column length".into()));
            }
            let d = col
                .iter()
                .enumerate()
                .find_map(|(i, e)| e.homogeneous_degree().map(|d| d + target.twists[i]))
                .unwrap_or(0);
            source.push(d);
        }
        let c = columns.len();
        let mut entries = vec![Polynomial::zero(ring); r * c];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, e) in col.into_iter().enumerate() {
                entries[i * c + j] = e;
            }
        }
        GradedMatrix::new(ring, target, GradedFreeModule::new(source), entries)
    }

    /// `1 x n` matrix of homogeneous generators with target `S`.
    pub fn row(ring: &Ring, gens: &[Polynomial]) -> Result<Self> {
        let cols = gens.iter().map(|g| vec![g.clone()]).collect();
        GradedMatrix::from_columns(ring, GradedFreeModule::free(1), cols)
    }

    pub fn zero(ring: &Ring, target: GradedFreeModule, source: GradedFreeModule) -> Self {
        let n = target.rank() * source.rank();
        GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            entries: vec![Polynomial::zero(ring); n],
        }
    }

    pub fn identity(ring: &Ring, module: GradedFreeModule) -> Self {
        let n = module.rank();
        let mut m = GradedMatrix::zero(ring, module.clone(), module);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.ncols() + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.nrows()).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.ncols()).map(|j| self.column(j)).collect()
    }

    pub fn row_entries(&self, i: usize) -> Vec<Polynomial> {
        (0..self.ncols()).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Composition `self * other`.
    pub fn mul(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.source.twists != other.target.twists {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let (r, k, c) = (self.nrows(), self.ncols(), other.ncols());
        let mut entries = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                let mut acc = Polynomial::zero(&self.ring);
                for l in 0..k {
                    let (a, b) = (self.entry(i, l), other.entry(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                entries.push(acc);
            }
        }
        GradedMatrix::new(&self.ring, self.target.clone(), other.source.clone(), entries)
    }

    /// Transpose, as the dual map `target^* -> source^*`.
    pub fn transpose(&self) -> GradedMatrix {
        let (r, c) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(r * c);
        for j in 0..c {
            for i in 0..r {
                entries.push(self.entry(i, j).clone());
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.source.dual(),
            source: self.target.dual(),
            entries,
        }
    }

    /// Submatrix on the given columns.
    pub fn select_columns(&self, cols: &[usize]) -> GradedMatrix {
        let r = self.nrows();
        let mut entries = Vec::with_capacity(r * cols.len());
        for i in 0..r {
            for &j in cols {
                entries.push(self.entry(i, j).clone());
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.target.clone(),
            source: GradedFreeModule::new(cols.iter().map(|&j| self.source.twists[j]).collect()),
            entries,
        }
    }

    /// Submatrix on the given rows.
    pub fn select_rows(&self, rows: &[usize]) -> GradedMatrix {
        let c = self.ncols();
        let mut entries = Vec::with_capacity(c * rows.len());
        for &i in rows {
            for j in 0..c {
                entries.push(self.entry(i, j).clone());
            }
        }
        GradedMatrix {
            ring: self.ring.clone(),
            target: GradedFreeModule::new(rows.iter().map(|&i| self.target.twists[i]).collect()),
            source: self.source.clone(),
            entries,
        }
    }

    /// `[self | other]` with a common target.
    pub fn hconcat(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        if self.target != other.target {
            return Err(Error::DimensionMismatch("targets differ".into()));
        }
        let cols: Vec<Vec<Polynomial>> = self.columns().into_iter().chain(other.columns()).collect();
        let source = self.source.direct_sum(&other.source);
        let r = self.nrows();
        let c = cols.len();
        let mut entries = vec![Polynomial::zero(&self.ring); r * c];
        for (j, col) in cols.into_iter().enumerate() {
            for (i, e) in col.into_iter().enumerate() {
                entries[i * c + j] = e;
            }
        }
        GradedMatrix::new(&self.ring, self.target.clone(), source, entries)
    }

    /// Same entries with the source twists replaced (used when the source
    /// degrees are only determined up to zero columns).
    pub fn with_source(&self, source: GradedFreeModule) -> Result<GradedMatrix> {
        GradedMatrix::new(&self.ring, self.target.clone(), source, self.entries.clone())
    }

    /// Same entries with both twist vectors shifted by `d`.
    pub fn shift(&self, d: i32) -> GradedMatrix {
        GradedMatrix {
            ring: self.ring.clone(),
            target: self.target.shift(d),
            source: self.source.shift(d),
            entries: self.entries.clone(),
        }
    }

    /// Columns that are not identically zero.
    pub fn drop_zero_columns(&self) -> GradedMatrix {
        let keep: Vec<usize> = (0..self.ncols())
            .filter(|&j| (0..self.nrows()).any(|i| !self.entry(i, j).is_zero()))
            .collect();
        self.select_columns(&keep)
    }
}

impl fmt::Debug for GradedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "matrix {:?} <- {:?}",
            self.target.twists, self.source.twists
        )?;
        for i in 0..self.nrows() {
            let row: Vec<String> = (0..self.ncols()).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
