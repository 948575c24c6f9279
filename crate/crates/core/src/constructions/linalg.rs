use crate::arith::PrimeField;
use crate::error::Result;
use crate::ring::{Polynomial, Ring, Term};
use std::collections::HashMap;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(field: &PrimeField, rows: &mut Vec<Vec<u32>>) -> Result<Vec<usize>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = field.inv(rows[r][c])?;
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Ok(pivots)
}

/// Basis of `{v : M v = 0}` for a matrix given by rows.
pub(crate) fn kernel(field: &PrimeField, rows: &[Vec<u32>], ncols: usize) -> Result<Vec<Vec<u32>>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m)?;
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![0u32; ncols];
            v[f] = 1;
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = field.neg(row[f]);
            }
            v
        })
        .collect())
}

/// Echelon basis of the span of forms of degree `d`.
pub(crate) fn span_basis(ring: &Ring, forms: &[Polynomial], d: i32) -> Result<Vec<Polynomial>> {
    let monos = ring.monomials_of_degree(d);
    let index: HashMap<_, _> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<Vec<u32>> = forms
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| {
            let mut row = vec![0u32; monos.len()];
            for t in f.terms() {
                row[index[&t.mono]] = t.coef;
            }
            row
        })
        .collect();
    rref(&ring.field(), &mut rows)?;
    Ok(rows
        .into_iter()
        .map(|row| {
            let terms = row
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, coef)| Term { mono: monos[i], coef })
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_a_rank_one_matrix() {
        let f = PrimeField::new(7).unwrap();
        let k = kernel(&f, &[vec![1, 2, 3]], 3).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = (0..3).fold(0, |a, i| f.add(a, f.mul([1, 2, 3][i], v[i])));
            assert_eq!(s, 0);
        }
    }
}
