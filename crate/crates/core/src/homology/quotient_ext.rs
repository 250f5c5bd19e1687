use serde::Serialize;

use super::ModulePresentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators_over, module_gb, syzygy_basis, Term, Vector, VectorOps};
use crate::poly::Polynomial;

/// Truncated minimal free resolution over `R = S/I`: generator degrees of
/// `P_0, ..., P_k` and the columns of each map `P_k -> P_{k-1}`.
#[derive(Clone, Debug)]
pub struct QuotientResolution<F: Field> {
    pub degrees: Vec<Vec<i32>>,
    pub maps: Vec<Vec<Vector<F>>>,
}

fn quotient_base<F: Field>(ideal: &[Polynomial<F>], rank: usize) -> Vec<Vector<F>> {
    let mut out = Vec::new();
    for f in ideal {
        for j in 0..rank {
            out.push(Vector::from_poly(f, j));
        }
    }
    out
}

/// Resolves a module over `S/I` to `steps` maps (fewer if it ends).
pub fn resolve_over_quotient<F: Field>(m: &ModulePresentation<F>, steps: usize) -> Result<QuotientResolution<F>> {
    let ideal = m.quotient_gens().ok_or_else(|| Error::Invariant("module is not over a quotient ring".into()))?;
    let ring = &**m.ring();
    let min = m.minimize();
    let mut degrees = vec![min.gen_degrees().to_vec()];
    let mut maps: Vec<Vec<Vector<F>>> = Vec::new();
    let mut current = min.relations().to_vec();
    while !current.is_empty() && maps.len() < steps {
        let src: Vec<i32> = current.iter().map(|c| c.degree(degrees.last().unwrap()).unwrap()).collect();
        maps.push(current);
        degrees.push(src);
        if maps.len() == steps {
            break;
        }
        let k = maps.len();
        let syz = syzygy_basis(ring, &degrees[k - 1], &maps[k - 1], &degrees[k], Some(&ideal));
        let base = quotient_base(&ideal, degrees[k].len());
        current = minimal_generators_over(ring, &degrees[k], &syz, &base);
    }
    Ok(QuotientResolution { degrees, maps })
}

/// Outcome of an `Ext^i_R(A, B)` vanishing test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientExt {
    pub index: usize,
    pub is_zero: bool,
    /// Generators found for the cocycles `ker(Hom(P_i, B) -> Hom(P_{i+1}, B))`.
    pub cocycle_generators: usize,
    /// Ranks of `P_0, ..., P_{i+1}` in the truncated resolution of `A`.
    pub resolution_ranks: Vec<usize>,
}

/// `Ext^i_R(A, B) = 0` for `i <= 2`, both modules over the same `R = S/I`.
pub fn ext_over_quotient<F: Field>(a: &ModulePresentation<F>, b: &ModulePresentation<F>, i: usize) -> Result<QuotientExt> {
    if i > 2 {
        return Err(Error::UnsupportedExtIndex(i));
    }
    let (Some(qa), Some(qb)) = (a.quotient(), b.quotient()) else {
        return Err(Error::Invariant("both modules must be over the quotient ring".into()));
    };
    if qa != qb {
        return Err(Error::MixedRings);
    }
    let ideal = qa.gb().polys().to_vec();
    let ring = &**a.ring();
    let ops = VectorOps::new(ring);
    let res = resolve_over_quotient(a, i + 1)?;
    let b = b.minimize();
    let nb = b.num_gens();
    let rank = |k: usize| res.degrees.get(k).map_or(0, |d| d.len());
    // Hom(P_k, B) sits in F_B^{p_k}; position (j, q) is j * nb + q
    let hom_degrees = |k: usize| -> Vec<i32> {
        let mut out = Vec::new();
        if let Some(pd) = res.degrees.get(k) {
            for &dj in pd {
                for &dq in b.gen_degrees() {
                    out.push(dq - dj);
                }
            }
        }
        out
    };
    let relation_blocks = |k: usize| -> Vec<Vector<F>> {
        let mut out = Vec::new();
        for j in 0..rank(k) {
            for r in b.relations() {
                out.push(r.shift(j * nb));
            }
        }
        out
    };
    // image under composition with the map P_k -> P_{k-1} of the basis element (m, q)
    let delta = |k: usize, m: usize, q: usize| -> Vector<F> {
        let mut terms = Vec::new();
        for (j, col) in res.maps[k - 1].iter().enumerate() {
            for t in col.terms().iter().filter(|t| t.pos == m) {
                terms.push(Term { pos: j * nb + q, mono: t.mono.clone(), coeff: t.coeff.clone() });
            }
        }
        ops.from_terms(terms)
    };

    let deg_i = hom_degrees(i);
    let dim_i = deg_i.len();
    let resolution_ranks: Vec<usize> = res.degrees.iter().map(|d| d.len()).collect();
    if dim_i == 0 {
        return Ok(QuotientExt { index: i, is_zero: true, cocycle_generators: 0, resolution_ranks });
    }
    let cocycles: Vec<Vector<F>> = if rank(i + 1) == 0 || res.maps.len() < i + 1 {
        (0..dim_i).map(|p| Vector::unit(ring, p)).collect()
    } else {
        let target = hom_degrees(i + 1);
        let mut cols: Vec<Vector<F>> = Vec::new();
        for m in 0..rank(i) {
            for q in 0..nb {
                cols.push(delta(i + 1, m, q));
            }
        }
        let mut src = deg_i.clone();
        for rel in relation_blocks(i + 1) {
            src.push(rel.degree(&target).unwrap());
            cols.push(rel);
        }
        let syz = syzygy_basis(ring, &target, &cols, &src, Some(&ideal));
        syz.iter().map(|v| v.project(0..dim_i)).filter(|v| !v.is_zero()).collect()
    };

    let mut boundaries = relation_blocks(i);
    boundaries.extend(quotient_base(&ideal, dim_i));
    if i >= 1 {
        for m in 0..rank(i - 1) {
            for q in 0..nb {
                boundaries.push(delta(i, m, q));
            }
        }
    }
    let gb = module_gb(ring, &deg_i, &boundaries);
    let is_zero = cocycles.iter().all(|c| gb.contains(ring, c));
    Ok(QuotientExt {
        index: i,
        is_zero,
        cocycle_generators: cocycles.len(),
        resolution_ranks,
    })
}
