use super::engine::{module_gb, Buchberger};
use super::Vector;
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

/// Generators of the syzygy module of `columns` inside `S^r` (generator
/// degrees `target_degrees`). The result lives in `S^m`, `m = columns.len()`,
/// whose generators have degrees `source_degrees`.
///
/// With `quotient = Some(gens)` the syzygies are computed over `S/(gens)`:
/// relations only need to vanish modulo the ideal in every coordinate.
pub fn syzygy_basis<F: Field>(
    ring: &PolyRing<F>,
    target_degrees: &[i32],
    columns: &[Vector<F>],
    source_degrees: &[i32],
    quotient: Option<&[Polynomial<F>]>,
) -> Vec<Vector<F>> {
    assert_eq!(columns.len(), source_degrees.len(), "one degree per column");
    let r = target_degrees.len();
    let m = columns.len();
    let mut degrees = target_degrees.to_vec();
    degrees.extend_from_slice(source_degrees);

    let mut gens = Vec::with_capacity(m);
    for (j, c) in columns.iter().enumerate() {
        debug_assert!(c.support_rank() <= r);
        let mut terms = c.terms().to_vec();
        terms.extend(Vector::unit(ring, r + j).terms().iter().cloned());
        gens.push(Vector::from_sorted(terms));
    }
    if let Some(q) = quotient {
        for f in q.iter().filter(|f| !f.is_zero()) {
            for i in 0..r {
                gens.push(Vector::from_poly(f, i));
            }
        }
    }
    let gb = module_gb(ring, &degrees, &gens);
    gb.elements()
        .iter()
        .filter(|v| v.lead().unwrap().pos >= r)
        .map(|v| v.project(r..r + m))
        .collect()
}

/// A minimal generating subset of the homogeneous submodule spanned by
/// `gens`, chosen greedily in order of increasing degree. Zero vectors are
/// dropped.
pub fn minimal_generators<F: Field>(ring: &PolyRing<F>, degrees: &[i32], gens: &[Vector<F>]) -> Vec<Vector<F>> {
    minimal_generators_over(ring, degrees, gens, &[])
}

/// Like [`minimal_generators`], but minimal modulo the submodule spanned by
/// `base` (which is never part of the output).
pub fn minimal_generators_over<F: Field>(
    ring: &PolyRing<F>,
    degrees: &[i32],
    gens: &[Vector<F>],
    base: &[Vector<F>],
) -> Vec<Vector<F>> {
    let mut idx: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i].is_zero()).collect();
    idx.sort_by_key(|&i| (gens[i].degree(degrees).unwrap(), i));
    let mut engine = Buchberger::new(ring, degrees);
    for b in base {
        engine.add(b);
    }
    engine.run();
    let mut kept = Vec::new();
    for i in idx {
        if engine.normal_form(&gens[i]).is_zero() {
            continue;
        }
        engine.add(&gens[i]);
        engine.run();
        kept.push(gens[i].clone());
    }
    debug_assert!(engine.is_complete());
    kept
}
