//! Buchberger's algorithm for ideals and for submodules of graded free modules.
//!
//! Ideals are handled as submodules of the rank-one free module, so there is a
//! single reduction kernel. Free-module elements use the position-over-term
//! order: a smaller position index is larger, ties are broken by the ring's
//! monomial order.

mod engine;
mod ideal_basis;
mod syzygy;

use std::cmp::Ordering;
use std::fmt;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

pub use engine::{module_gb, s_vectors_reduce_to_zero, ModuleBasis};
pub use ideal_basis::{is_member, normal_form, reduced_gb, GroebnerBasis};
pub use syzygy::{minimal_generators, minimal_generators_over, syzygy_basis};

/// One term `coeff * mono * e_pos` of a free-module element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term<F: Field> {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: F::Elem,
}

impl<F: Field> fmt::Debug for Term<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}*{:?}*e{}", self.coeff, self.mono, self.pos)
    }
}

/// Position-over-term comparison.
pub fn cmp_module(order: MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    if a.0 != b.0 {
        b.0.cmp(&a.0)
    } else {
        order.compare(a.1, b.1)
    }
}

/// Element of a free module `S^r`, terms strictly descending in the module order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector<F: Field> {
    terms: Vec<Term<F>>,
}

impl<F: Field> fmt::Debug for Vector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Default for Vector<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Vector<F> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub(crate) fn from_sorted(terms: Vec<Term<F>>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term<F>> {
        self.terms.first()
    }

    /// Largest position used, plus one.
    pub fn support_rank(&self) -> usize {
        self.terms.iter().map(|t| t.pos + 1).max().unwrap_or(0)
    }

    /// Unit vector `e_pos`.
    pub fn unit(ring: &PolyRing<F>, pos: usize) -> Self {
        Self { terms: vec![Term { pos, mono: Monomial::one(ring.nvars()), coeff: ring.field().one() }] }
    }

    /// `p * e_pos`.
    pub fn from_poly(p: &Polynomial<F>, pos: usize) -> Self {
        Self {
            terms: p.terms().iter().map(|(m, c)| Term { pos, mono: m.clone(), coeff: c.clone() }).collect(),
        }
    }

    /// Builds `sum_i comps[i] * e_{offset + i}`.
    pub fn from_components(comps: &[Polynomial<F>], offset: usize) -> Self {
        // smaller positions come first in POT
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| Term { pos: offset + i, mono: m.clone(), coeff: c.clone() }));
        }
        Self { terms }
    }

    /// Component at `pos` as a polynomial.
    pub fn component(&self, pos: usize) -> Polynomial<F> {
        Polynomial::from_sorted(
            self.terms.iter().filter(|t| t.pos == pos).map(|t| (t.mono.clone(), t.coeff.clone())).collect(),
        )
    }

    /// Dense list of the first `rank` components.
    pub fn components(&self, rank: usize) -> Vec<Polynomial<F>> {
        let mut out: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            if t.pos < rank {
                out[t.pos].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        out.into_iter().map(Polynomial::from_sorted).collect()
    }

    /// Keeps the components in `range`, shifting positions down by `range.start`.
    pub fn project(&self, range: std::ops::Range<usize>) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&t.pos))
                .map(|t| Term { pos: t.pos - range.start, mono: t.mono.clone(), coeff: t.coeff.clone() })
                .collect(),
        }
    }

    /// Renumbers positions with `map` (which must be order-preserving on the
    /// positions present) and shifts.
    pub fn shift(&self, offset: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term { pos: t.pos + offset, mono: t.mono.clone(), coeff: t.coeff.clone() })
                .collect(),
        }
    }

    /// Homogeneous degree of the leading term given generator degrees.
    pub fn degree(&self, degrees: &[i32]) -> Option<i32> {
        self.lead().map(|t| t.mono.degree() as i32 + degrees[t.pos])
    }

    /// Every term has the same twisted degree.
    pub fn is_homogeneous(&self, degrees: &[i32]) -> bool {
        match self.degree(degrees) {
            None => true,
            Some(d) => self.terms.iter().all(|t| t.mono.degree() as i32 + degrees[t.pos] == d),
        }
    }
}

/// Arithmetic on free-module elements for a fixed ring.
pub struct VectorOps<'a, F: Field> {
    pub ring: &'a PolyRing<F>,
}

impl<'a, F: Field> VectorOps<'a, F> {
    pub fn new(ring: &'a PolyRing<F>) -> Self {
        Self { ring }
    }

    fn cmp(&self, a: &Term<F>, b: &Term<F>) -> Ordering {
        cmp_module(self.ring.order(), (a.pos, &a.mono), (b.pos, &b.mono))
    }

    /// Canonicalizes an unsorted term list.
    pub fn from_terms(&self, mut terms: Vec<Term<F>>) -> Vector<F> {
        let field = self.ring.field();
        terms.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.pos == t.pos && last.mono == t.mono {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                    continue;
                }
                if field.is_zero(&last.coeff) {
                    out.pop();
                }
            }
            out.push(t);
        }
        if out.last().is_some_and(|t| field.is_zero(&t.coeff)) {
            out.pop();
        }
        Vector { terms: out }
    }

    /// `a + c * m * b`.
    pub fn add_scaled(&self, a: &Vector<F>, b: &Vector<F>, m: &Monomial, c: &F::Elem) -> Vector<F> {
        let field = self.ring.field();
        if field.is_zero(c) {
            return a.clone();
        }
        let (x, y) = (&a.terms, &b.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &Term<F>| Term { pos: t.pos, mono: t.mono.mul(m), coeff: field.mul(&t.coeff, c) };
        while i < x.len() && j < y.len() {
            let yt = scaled(&y[j]);
            match self.cmp(&x[i], &yt) {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(yt);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(&x[i].coeff, &yt.coeff);
                    if !field.is_zero(&s) {
                        out.push(Term { pos: yt.pos, mono: yt.mono, coeff: s });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend(y[j..].iter().map(scaled));
        Vector { terms: out }
    }

    pub fn add(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        self.add_scaled(a, b, &Monomial::one(self.ring.nvars()), &self.ring.field().one())
    }

    pub fn sub(&self, a: &Vector<F>, b: &Vector<F>) -> Vector<F> {
        let minus = self.ring.field().neg(&self.ring.field().one());
        self.add_scaled(a, b, &Monomial::one(self.ring.nvars()), &minus)
    }

    pub fn scale(&self, a: &Vector<F>, c: &F::Elem) -> Vector<F> {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Vector::zero();
        }
        Vector {
            terms: a
                .terms
                .iter()
                .map(|t| Term { pos: t.pos, mono: t.mono.clone(), coeff: field.mul(&t.coeff, c) })
                .collect(),
        }
    }

    /// `p * a` for a polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial<F>, a: &Vector<F>) -> Vector<F> {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = self.add_scaled(&acc, a, m, c);
        }
        acc
    }

    pub fn monic(&self, a: &Vector<F>) -> Vector<F> {
        match a.lead() {
            None => Vector::zero(),
            Some(t) if self.ring.field().is_one(&t.coeff) => a.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(&t.coeff);
                self.scale(a, &inv)
            }
        }
    }

    /// `sum_j coeffs[j] * vectors[j]`.
    pub fn combine(&self, coeffs: &[Polynomial<F>], vectors: &[Vector<F>]) -> Vector<F> {
        let mut acc = Vector::zero();
        for (p, v) in coeffs.iter().zip(vectors) {
            for (m, c) in p.terms() {
                acc = self.add_scaled(&acc, v, m, c);
            }
        }
        acc
    }

    /// Sorts terms after positions were renumbered non-monotonically.
    pub fn renumber(&self, a: &Vector<F>, map: impl Fn(usize) -> Option<usize>) -> Vector<F> {
        let terms = a
            .terms
            .iter()
            .filter_map(|t| map(t.pos).map(|p| Term { pos: p, mono: t.mono.clone(), coeff: t.coeff.clone() }))
            .collect();
        self.from_terms(terms)
    }

    /// Reorders the terms of a vector built under a different monomial order.
    pub fn reorder(&self, a: &Vector<F>) -> Vector<F> {
        self.from_terms(a.terms.clone())
    }

    pub fn format(&self, a: &Vector<F>, rank: usize) -> String {
        let comps = a.components(rank.max(a.support_rank()));
        let parts: Vec<String> = comps.iter().map(|p| self.ring.format(p)).collect();
        format!("[{}]", parts.join(", "))
    }
}
