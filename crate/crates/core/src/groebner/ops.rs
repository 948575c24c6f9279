use super::ideal::{compute_gb, GroebnerBasis, Ideal};
use super::engine::GbOptions;
use crate::error::{Error, Result};
use crate::homology::{hilbert_numerator, HilbertPolynomial};
use crate::ring::{MonomialOrder, Polynomial, Ring};

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Reduced GB of `gens` in `ring` (an elimination order), keeping only the
/// elements free of the first `k` variables.
fn eliminated_elements(ring: &Ring, gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    let (gb, _, _) = compute_gb(ring, gens, &GbOptions::default())?;
    Ok(gb
        .elements()
        .iter()
        .filter(|g| !g.involves_any(0..k))
        .cloned()
        .collect())
}

/// Moves elements that only use the variables `k..` of `big` into `small`.
fn drop_leading_vars(p: &Polynomial, small: &Ring, k: usize) -> Result<Polynomial> {
    let n = p.ring().nvars();
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(k)).collect();
    p.rename_vars(small, &map)
}

/// Ideal of `GB` elements known to form a reduced GB in `ring`'s order.
fn ideal_from_gb(ring: &Ring, elements: Vec<Polynomial>) -> Result<Ideal> {
    let gb = GroebnerBasis::from_elements(ring, elements.clone());
    Ok(Ideal::with_gb(ring, elements, gb))
}

/// `I ∩ J` from `t·I + (1 - t)·J` with `t` of weight 0 eliminated first.
pub fn intersect_pair(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    let n = ring.nvars();
    let mut names = vec!["_t".to_string()];
    names.extend(ring.names().iter().cloned());
    let mut weights = vec![0];
    weights.extend_from_slice(ring.weights());
    let big = Ring::custom(ring.field(), names, weights, MonomialOrder::Eliminate(1))?;
    let shift: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(f.rename_vars(&big, &shift)?.mul(&t));
    }
    for g in b.gens() {
        let g = g.rename_vars(&big, &shift)?;
        gens.push(g.sub(&g.mul(&t)));
    }
    let els = eliminated_elements(&big, &gens, 1)?;
    let out = els
        .iter()
        .map(|p| drop_leading_vars(p, ring, 1))
        .collect::<Result<Vec<_>>>()?;
    if ring.order() == MonomialOrder::GRevLex {
        ideal_from_gb(ring, out)
    } else {
        Ideal::new(ring, out)
    }
}

/// Intersection of a nonempty list of ideals in one ring.
pub fn intersect(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("intersection of no ideals".into()))?;
    let mut acc = first.clone();
    for i in rest {
        acc = intersect_pair(&acc, i)?;
    }
    Ok(acc)
}

/// `I : g` as `(I ∩ (g)) / g`.
pub fn quotient_element(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    if g.is_zero() || i.contains(g)? {
        return Ok(Ideal::unit(ring));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let both = intersect_pair(i, &principal)?;
    let gens = both
        .gens()
        .iter()
        .map(|f| f.div_exact(g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Colon ideal `I : J = { f : f J ⊆ I }`.
pub fn quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let parts = j
        .gens()
        .iter()
        .map(|g| quotient_element(i, g))
        .collect::<Result<Vec<_>>>()?;
    if parts.is_empty() {
        return Ok(Ideal::unit(i.ring()));
    }
    intersect(&parts)
}

/// `I : x_v^∞` via a grevlex basis with `x_v` last, dividing out `x_v`.
pub fn saturate_variable(i: &Ideal, v: usize) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    if i.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    // permutation sending v to the last slot, other variables in order
    let mut perm: Vec<usize> = (0..n).filter(|&k| k != v).collect();
    perm.push(v);
    let mut map = vec![0usize; n];
    for (slot, &k) in perm.iter().enumerate() {
        map[k] = slot;
    }
    let names: Vec<String> = perm.iter().map(|&k| ring.names()[k].clone()).collect();
    let weights: Vec<i32> = perm.iter().map(|&k| ring.weights()[k]).collect();
    let permuted = Ring::custom(ring.field(), names, weights, MonomialOrder::GRevLex)?;
    let gens = i
        .gens()
        .iter()
        .map(|f| f.rename_vars(&permuted, &map))
        .collect::<Result<Vec<_>>>()?;
    let (gb, _, _) = compute_gb(&permuted, &gens, &GbOptions::default())?;
    let mut back = vec![0usize; n];
    for (slot, &k) in perm.iter().enumerate() {
        back[slot] = k;
    }
    let last = n - 1;
    let mut out = Vec::with_capacity(gb.elements().len());
    for g in gb.elements() {
        let e = g.var_content(last);
        let mut ex = vec![0u32; n];
        ex[last] = e;
        let m = crate::ring::Monomial::from_exponents(&ex)?;
        let q = g.div_exact(&Polynomial::monomial(&permuted, 1, m))?;
        out.push(q.rename_vars(ring, &back)?);
    }
    Ideal::new(ring, out)
}

/// True when the last variable is a nonzerodivisor on `S/I`, read off the
/// grevlex basis; then `I` is saturated with respect to the irrelevant ideal.
pub fn last_variable_regular(i: &Ideal) -> bool {
    let ring = i.ring();
    if ring.order() != MonomialOrder::GRevLex || i.is_zero() {
        return i.is_zero();
    }
    let last = ring.nvars() - 1;
    i.groebner()
        .lead_monomials()
        .iter()
        .all(|m| m.exponent(last) == 0)
}

/// Saturation `I : J^∞`; `J` defaults to the irrelevant ideal.
pub fn saturate(i: &Ideal, j: Option<&Ideal>) -> Result<Ideal> {
    let ring = i.ring();
    match j {
        None => {
            if i.is_zero() || i.is_unit() || last_variable_regular(i) {
                return Ok(i.clone());
            }
            let parts = (0..ring.nvars())
                .map(|v| saturate_variable(i, v))
                .collect::<Result<Vec<_>>>()?;
            let parts: Vec<Ideal> = parts.into_iter().filter(|p| !p.is_unit()).collect();
            if parts.is_empty() {
                return Ok(Ideal::unit(ring));
            }
            intersect(&parts)?.mingens_ideal()
        }
        Some(j) => {
            same_ring(i, j)?;
            let mut cur = i.clone();
            loop {
                let next = quotient(&cur, j)?;
                if cur.contains_ideal(&next)? {
                    return cur.mingens_ideal();
                }
                cur = next;
            }
        }
    }
}

/// `I ∩ k[x_K, ..., x_{n-1}]`, computed in an elimination order for the
/// first `k` variables.
pub fn eliminate(i: &Ideal, k: usize) -> Result<Ideal> {
    let ring = i.ring();
    if k > ring.nvars() {
        return Err(Error::OutOfRange(format!("eliminate {k} variables")));
    }
    if k == 0 {
        let els = i.groebner().elements().to_vec();
        return Ideal::new(ring, els);
    }
    let er = ring.with_order(MonomialOrder::Eliminate(k))?;
    let gens = i
        .gens()
        .iter()
        .map(|f| f.to_ring(&er))
        .collect::<Result<Vec<_>>>()?;
    let els = eliminated_elements(&er, &gens, k)?
        .into_iter()
        .map(|p| p.to_ring(ring))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, els)
}

/// Kernel of `source -> R/Q`, `y_i ↦ images[i]`, by eliminating the
/// variables of `R` from the graph ideal `Q + (y_i - images_i)` with the
/// `y_i` weighted by the common image degree.
pub fn ring_map_kernel(target: &Ideal, images: &[Polynomial], source: &Ring) -> Result<Ideal> {
    let r = target.ring();
    if images.len() != source.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} variables",
            images.len(),
            source.nvars()
        )));
    }
    if !source.is_standard_graded() {
        return Err(Error::InvalidArgument("source ring must be standard graded".into()));
    }
    let mut d = None;
    for f in images {
        if f.ring() != r {
            return Err(Error::RingMismatch);
        }
        let e = f
            .homogeneous_degree()
            .ok_or_else(|| Error::Inhomogeneous(format!("image {f}")))?;
        if f.is_zero() {
            continue;
        }
        if *d.get_or_insert(e) != e {
            return Err(Error::Inhomogeneous("images of mixed degrees".into()));
        }
    }
    let d = d.unwrap_or(1);
    let (nr, ns) = (r.nvars(), source.nvars());
    let mut names: Vec<String> = r.names().to_vec();
    names.extend((0..ns).map(|k| format!("_y{k}")));
    let mut weights = r.weights().to_vec();
    weights.extend(std::iter::repeat_n(d, ns));
    let big = Ring::custom(r.field(), names, weights, MonomialOrder::Eliminate(nr))?;
    let embed: Vec<usize> = (0..nr).collect();
    let mut gens = Vec::new();
    for q in target.gens() {
        gens.push(q.rename_vars(&big, &embed)?);
    }
    for (k, f) in images.iter().enumerate() {
        gens.push(Polynomial::var(&big, nr + k).sub(&f.rename_vars(&big, &embed)?));
    }
    let els = eliminated_elements(&big, &gens, nr)?;
    let out = els
        .iter()
        .map(|p| drop_leading_vars(p, source, nr))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(source, out)
}

/// `dim_F (S/I)_d`.
pub fn quotient_piece_dim(i: &Ideal, d: i32) -> Result<usize> {
    if d < 0 {
        return Err(Error::NegativeDegree(d as i64));
    }
    let ring = i.ring();
    if i.is_zero() {
        return Ok(ring.count_monomials(d));
    }
    let gb = i.groebner_truncated(d)?;
    let leads = gb.lead_monomials();
    Ok(ring
        .monomials_of_degree(d)
        .iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count())
}

/// `dim_F I_d`.
pub fn graded_piece_dim(i: &Ideal, d: i32) -> Result<usize> {
    Ok(i.ring().count_monomials(d) - quotient_piece_dim(i, d)?)
}

/// Projective dimension of `V(I)` (−1 when empty) and its degree.
pub fn dimension_and_degree(i: &Ideal) -> Result<(i64, i64)> {
    if i.is_unit() {
        return Ok((-1, 0));
    }
    let hp = HilbertPolynomial::from_numerator(&hilbert_numerator(i), i.ring().nvars());
    if hp.krull_dim == 0 {
        return Ok((-1, 0));
    }
    Ok((hp.projective_dim(), hp.degree()))
}

/// Codimension `n - dim_affine` of `V(I)` in affine space.
pub fn codim(i: &Ideal) -> Result<i64> {
    let (pd, _) = dimension_and_degree(i)?;
    Ok(i.ring().nvars() as i64 - (pd + 1))
}
