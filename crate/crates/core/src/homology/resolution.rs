use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::ModulePresentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators, module_gb, syzygy_basis, Vector, VectorOps};
use crate::poly::PolyRing;

/// Minimal graded free resolution `F0 <- F1 <- ... <- FL` of a module over `S`.
#[derive(Clone, Debug)]
pub struct ResolutionChain<F: Field> {
    /// Generator degrees of `F0, ..., FL`.
    degrees: Vec<Vec<i32>>,
    /// `maps[i]` holds the columns of `A_{i+1}: F_{i+1} -> F_i`.
    maps: Vec<Vec<Vector<F>>>,
    /// True when the last module is followed by zero.
    complete: bool,
}

/// Graded Betti numbers of one step: degree to count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub step: usize,
    pub total: usize,
    pub graded: BTreeMap<i32, usize>,
}

impl<F: Field> ResolutionChain<F> {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn degrees(&self, step: usize) -> &[i32] {
        self.degrees.get(step).map(|d| d.as_slice()).unwrap_or(&[])
    }

    /// Columns of `A_i: F_i -> F_{i-1}` (empty beyond the computed length).
    pub fn map(&self, i: usize) -> &[Vector<F>] {
        if i == 0 {
            return &[];
        }
        self.maps.get(i - 1).map(|m| m.as_slice()).unwrap_or(&[])
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn betti_totals(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    pub fn betti(&self) -> Vec<BettiRow> {
        self.degrees
            .iter()
            .enumerate()
            .map(|(step, ds)| {
                let mut graded = BTreeMap::new();
                for &d in ds {
                    *graded.entry(d).or_insert(0) += 1;
                }
                BettiRow { step, total: ds.len(), graded }
            })
            .collect()
    }

    /// Rows `step: total (degree: count, ...)`.
    pub fn render_betti(&self) -> String {
        let mut out = String::new();
        for row in self.betti() {
            let parts: Vec<String> = row.graded.iter().map(|(d, c)| format!("{d}: {c}")).collect();
            let _ = writeln!(out, "{}: {} ({})", row.step, row.total, parts.join(", "));
        }
        out
    }

    /// `A_i * A_{i+1} = 0` for all consecutive maps.
    pub fn composes_to_zero(&self, ring: &PolyRing<F>) -> bool {
        let ops = VectorOps::new(ring);
        for i in 1..self.maps.len() {
            let (a, b) = (&self.maps[i - 1], &self.maps[i]);
            for col in b {
                let comps = col.components(a.len());
                if !ops.combine(&comps, a).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Image of `A_{i+1}` equals the kernel of `A_i` for `1 <= i < length`,
    /// checked by comparing reduced module bases.
    pub fn is_exact(&self, ring: &PolyRing<F>) -> bool {
        for i in 1..=self.maps.len() {
            let a = &self.maps[i - 1];
            let src = &self.degrees[i];
            let kernel = syzygy_basis(ring, &self.degrees[i - 1], a, src, None);
            let image: &[Vector<F>] = if i < self.maps.len() { &self.maps[i] } else if self.complete { &[] } else { continue };
            let k = module_gb(ring, src, &kernel);
            let im = module_gb(ring, src, image);
            if k.elements() != im.elements() {
                return false;
            }
        }
        true
    }
}

/// Minimal free resolution of `m` (over `S`) up to `length` steps, or until
/// it terminates.
pub fn free_resolution<F: Field>(m: &ModulePresentation<F>, length: usize) -> Result<ResolutionChain<F>> {
    if length < 1 {
        return Err(Error::ResolutionLength);
    }
    if m.quotient().is_some() {
        return Err(Error::Invariant("free_resolution expects a module over the polynomial ring".into()));
    }
    let ring = &**m.ring();
    let min = m.minimize();
    let mut degrees = vec![min.gen_degrees().to_vec()];
    let mut maps: Vec<Vec<Vector<F>>> = Vec::new();
    let mut current = min.relations().to_vec();
    let mut complete = false;
    loop {
        if current.is_empty() {
            complete = true;
            break;
        }
        let src: Vec<i32> = current.iter().map(|c| c.degree(degrees.last().unwrap()).unwrap()).collect();
        let step = maps.len() + 1;
        maps.push(current);
        degrees.push(src);
        if step == length {
            break;
        }
        let prev = maps.last().unwrap();
        let target = degrees.last().unwrap();
        let syz = syzygy_basis(ring, &degrees[step - 1], prev, target, None);
        current = minimal_generators(ring, target, &syz);
    }
    if !complete && maps.len() == length {
        // the next syzygy module may already vanish
        let prev = maps.last().unwrap();
        let syz = syzygy_basis(ring, &degrees[length - 1], prev, &degrees[length], None);
        complete = syz.is_empty();
    }
    Ok(ResolutionChain { degrees, maps, complete })
}
