//! Graded modules given by presentations, free resolutions and Ext.

mod ext;
mod quotient_ext;
mod resolution;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators_over, module_gb, syzygy_basis, ModuleBasis, Vector, VectorOps};
use crate::ideal::Ideal;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::RingSpec;

pub use ext::{att_avoidance, canonical_module, depth, ext_module, ExtModule, ExtTable};
pub use quotient_ext::{ext_over_quotient, resolve_over_quotient, QuotientExt};
pub use resolution::{free_resolution, ResolutionChain};

/// `coker(F1 -> F0)`: generators with degree twists and relation columns,
/// optionally over a quotient `S/I` (then `I * F0` is part of the relations).
#[derive(Clone, Debug)]
pub struct ModulePresentation<F: Field> {
    ring: Arc<PolyRing<F>>,
    gen_degrees: Vec<i32>,
    relations: Vec<Vector<F>>,
    quotient: Option<Ideal<F>>,
    minimal: bool,
}

impl<F: Field> ModulePresentation<F> {
    /// Validates that every relation is homogeneous and fits the generators.
    pub fn new(
        ring: Arc<PolyRing<F>>,
        gen_degrees: Vec<i32>,
        relations: Vec<Vector<F>>,
        quotient: Option<Ideal<F>>,
    ) -> Result<Self> {
        for r in &relations {
            if r.support_rank() > gen_degrees.len() {
                return Err(Error::RankMismatch { expected: gen_degrees.len(), found: r.support_rank() });
            }
            if !r.is_homogeneous(&gen_degrees) {
                return Err(Error::NotHomogeneous(VectorOps::new(&ring).format(r, gen_degrees.len())));
            }
        }
        if let Some(q) = &quotient {
            if !Arc::ptr_eq(q.ring(), &ring) && **q.ring() != *ring {
                return Err(Error::MixedRings);
            }
        }
        let relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(Self { ring, gen_degrees, relations, quotient, minimal: false })
    }

    /// `S/J` as a cyclic module over `S`.
    pub fn cyclic(ideal: &Ideal<F>) -> Self {
        let relations = ideal.gens().iter().map(|g| Vector::from_poly(g, 0)).collect();
        Self { ring: ideal.ring().clone(), gen_degrees: vec![0], relations, quotient: None, minimal: false }
    }

    /// `R = S/I` as a module over `S`.
    pub fn of_ring(spec: &RingSpec<F>) -> Self {
        Self::cyclic(spec.ideal())
    }

    /// Free module with the given generator degrees.
    pub fn free(ring: Arc<PolyRing<F>>, gen_degrees: Vec<i32>) -> Self {
        Self { ring, gen_degrees, relations: Vec::new(), quotient: None, minimal: true }
    }

    /// The same generators and relations, regarded over `S/I`.
    pub fn over_quotient(&self, spec: &RingSpec<F>) -> Self {
        let mut out = self.clone();
        out.quotient = Some(spec.ideal().clone());
        out.minimal = false;
        out
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gen_degrees(&self) -> &[i32] {
        &self.gen_degrees
    }

    pub fn num_gens(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn relations(&self) -> &[Vector<F>] {
        &self.relations
    }

    pub fn quotient(&self) -> Option<&Ideal<F>> {
        self.quotient.as_ref()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn relation_degrees(&self) -> Vec<i32> {
        self.relations.iter().map(|r| r.degree(&self.gen_degrees).unwrap()).collect()
    }

    /// `f * e_j` for `f` in the quotient ideal's basis and every position.
    pub(crate) fn quotient_vectors(&self, rank_offset: usize, rank: usize) -> Vec<Vector<F>> {
        let mut out = Vec::new();
        if let Some(q) = &self.quotient {
            for f in q.gb().polys() {
                for j in 0..rank {
                    out.push(Vector::from_poly(f, rank_offset + j));
                }
            }
        }
        out
    }

    pub(crate) fn quotient_gens(&self) -> Option<Vec<Polynomial<F>>> {
        self.quotient.as_ref().map(|q| q.gb().polys().to_vec())
    }

    /// Gröbner basis of the full relation submodule of `F0`.
    pub fn relation_basis(&self) -> ModuleBasis<F> {
        let mut gens = self.relations.clone();
        gens.extend(self.quotient_vectors(0, self.num_gens()));
        module_gb(&self.ring, &self.gen_degrees, &gens)
    }

    /// Removes generators that are eliminated by relations with a constant
    /// entry, then keeps a minimal set of relations. Returns the presentation
    /// and the indices of the surviving original generators.
    pub fn minimize_tracked(&self) -> (Self, Vec<usize>) {
        let ring = &*self.ring;
        let field = ring.field();
        let ops = VectorOps::new(ring);
        let mut rels = self.relations.clone();
        let mut alive = vec![true; self.num_gens()];
        loop {
            let pivot = rels.iter().enumerate().find_map(|(c, r)| {
                r.terms().iter().find(|t| t.mono.is_one()).map(|t| (c, t.pos, t.coeff.clone()))
            });
            let Some((c, p, u)) = pivot else { break };
            let pivot_rel = rels.swap_remove(c);
            let minus_inv = field.neg(&field.inv(&u));
            for r in rels.iter_mut() {
                let rp = r.component(p);
                if rp.is_zero() {
                    continue;
                }
                let factor = ring.scale(&rp, &minus_inv);
                *r = ops.add(r, &ops.mul_poly(&factor, &pivot_rel));
                debug_assert!(r.component(p).is_zero());
            }
            alive[p] = false;
        }
        let kept: Vec<usize> = (0..self.num_gens()).filter(|&i| alive[i]).collect();
        let mut new_index = vec![usize::MAX; self.num_gens()];
        for (k, &i) in kept.iter().enumerate() {
            new_index[i] = k;
        }
        let degrees: Vec<i32> = kept.iter().map(|&i| self.gen_degrees[i]).collect();
        let rels: Vec<Vector<F>> = rels
            .iter()
            .map(|r| {
                ops.renumber(r, |p| {
                    debug_assert!(alive[p]);
                    Some(new_index[p])
                })
            })
            .filter(|r| !r.is_zero())
            .collect();
        let mut out = Self {
            ring: self.ring.clone(),
            gen_degrees: degrees,
            relations: Vec::new(),
            quotient: self.quotient.clone(),
            minimal: false,
        };
        let base = out.quotient_vectors(0, out.num_gens());
        out.relations = minimal_generators_over(ring, &out.gen_degrees, &rels, &base);
        out.minimal = true;
        (out, kept)
    }

    pub fn minimize(&self) -> Self {
        if self.minimal {
            return self.clone();
        }
        self.minimize_tracked().0
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> usize {
        self.minimize().num_gens()
    }

    /// Every generator lies in the relation submodule.
    pub fn is_zero(&self) -> bool {
        if self.num_gens() == 0 {
            return true;
        }
        let gb = self.relation_basis();
        (0..self.num_gens()).all(|j| gb.contains(&self.ring, &Vector::unit(&self.ring, j)))
    }

    /// `{f : f * M = 0}` as an ideal of `S` (containing the quotient ideal).
    pub fn annihilator(&self) -> Ideal<F> {
        let ring = &self.ring;
        let g = self.num_gens();
        let mut acc: Option<Ideal<F>> = None;
        let quotient = self.quotient_gens();
        let rel_degrees = self.relation_degrees();
        for j in 0..g {
            let mut cols = vec![Vector::unit(ring, j)];
            cols.extend(self.relations.iter().cloned());
            let mut src = vec![self.gen_degrees[j]];
            src.extend_from_slice(&rel_degrees);
            let syz = syzygy_basis(ring, &self.gen_degrees, &cols, &src, quotient.as_deref());
            let gens: Vec<Polynomial<F>> = syz.iter().map(|v| v.component(0)).collect();
            let colon = Ideal::new(ring, gens).expect("same ring");
            acc = Some(match acc {
                None => colon,
                Some(a) => a.intersect(&colon).expect("same ring"),
            });
        }
        let ann = acc.unwrap_or_else(|| Ideal::unit(ring));
        match &self.quotient {
            Some(q) => ann.sum(q).expect("same ring"),
            None => ann,
        }
    }

    /// Multiplication by `x` is injective on the module.
    pub fn is_nzd(&self, x: &Polynomial<F>) -> Result<bool> {
        self.ring.check(x)?;
        if x.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !x.is_homogeneous() {
            return Err(Error::NotHomogeneous(self.ring.format(x)));
        }
        let ring = &self.ring;
        let g = self.num_gens();
        if g == 0 {
            return Ok(true);
        }
        let dx = x.degree().unwrap() as i32;
        let mut cols: Vec<Vector<F>> = (0..g).map(|j| Vector::from_poly(x, j)).collect();
        cols.extend(self.relations.iter().cloned());
        let mut src: Vec<i32> = self.gen_degrees.iter().map(|d| d + dx).collect();
        src.extend(self.relation_degrees());
        let quotient = self.quotient_gens();
        let syz = syzygy_basis(ring, &self.gen_degrees, &cols, &src, quotient.as_deref());
        let gb = self.relation_basis();
        Ok(syz.iter().all(|v| gb.contains(ring, &v.project(0..g))))
    }

    /// Text form: generator degrees and relation columns.
    pub fn format(&self) -> String {
        let ops = VectorOps::new(&self.ring);
        let rels: Vec<String> = self.relations.iter().map(|r| ops.format(r, self.num_gens())).collect();
        format!("generators {:?}; relations [{}]", self.gen_degrees, rels.join(", "))
    }
}
