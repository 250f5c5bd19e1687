use std::cmp::Ordering;
use std::collections::VecDeque;

use super::{cmp_module, Term, Vector, VectorOps};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::PolyRing;

/// Sugar of a vector: the largest twisted degree among its terms.
fn vector_sugar<F: Field>(v: &Vector<F>, degrees: &[i32]) -> i64 {
    v.terms().iter().map(|t| t.mono.degree() as i64 + degrees[t.pos] as i64).max().unwrap_or(0)
}

/// A list of monic vectors together with their leading data, used as a
/// reduction target.
#[derive(Clone, Debug)]
pub(crate) struct Reducer<F: Field> {
    elems: Vec<Vector<F>>,
    sugar: Vec<i64>,
    leads: Vec<(usize, Monomial)>,
    active: Vec<bool>,
}

impl<F: Field> Reducer<F> {
    fn new() -> Self {
        Self { elems: Vec::new(), sugar: Vec::new(), leads: Vec::new(), active: Vec::new() }
    }

    fn push(&mut self, v: Vector<F>, sugar: i64) -> usize {
        let lead = v.lead().expect("nonzero");
        self.leads.push((lead.pos, lead.mono.clone()));
        self.elems.push(v);
        self.sugar.push(sugar);
        self.active.push(true);
        self.elems.len() - 1
    }

    fn find_divisor(&self, pos: usize, mono: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (k, (p, m)) in self.leads.iter().enumerate() {
            if !self.active[k] || *p != pos || Some(k) == skip || !m.divides(mono) {
                continue;
            }
            // prefer short reducers
            if best.is_none_or(|b| self.elems[k].terms().len() < self.elems[b].terms().len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Reduces `v` by the active elements. With `full == false` only the
    /// leading term is reduced until it becomes irreducible.
    fn reduce(
        &self,
        ring: &PolyRing<F>,
        v: Vector<F>,
        mut sugar: i64,
        full: bool,
        skip: Option<usize>,
    ) -> (Vector<F>, i64) {
        let field = ring.field();
        let order = ring.order();
        let mut out: Vec<Term<F>> = Vec::new();
        let mut rest: VecDeque<Term<F>> = v.terms.into();
        while let Some(head) = rest.pop_front() {
            match self.find_divisor(head.pos, &head.mono, skip) {
                None => {
                    out.push(head);
                    if !full {
                        out.extend(rest.drain(..));
                        break;
                    }
                }
                Some(k) => {
                    let g = &self.elems[k];
                    let q = self.leads[k].1.quotient_of(&head.mono).expect("divisor");
                    let c = field.neg(&head.coeff);
                    sugar = sugar.max(q.degree() as i64 + self.sugar[k]);
                    rest = merge_scaled(field, order, rest, &g.terms()[1..], &q, &c);
                }
            }
        }
        (Vector::from_sorted(out), sugar)
    }
}

/// `a + c * q * b`, both inputs sorted descending.
fn merge_scaled<F: Field>(
    field: &F,
    order: crate::monomial::MonomialOrder,
    a: VecDeque<Term<F>>,
    b: &[Term<F>],
    q: &Monomial,
    c: &F::Elem,
) -> VecDeque<Term<F>> {
    let mut out = VecDeque::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.iter().map(|t| Term { pos: t.pos, mono: t.mono.mul(q), coeff: field.mul(&t.coeff, c) }).peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => cmp_module(order, (x.pos, &x.mono), (y.pos, &y.mono)),
        };
        match ord {
            Ordering::Greater => out.push_back(a.next().unwrap()),
            Ordering::Less => out.push_back(b.next().unwrap()),
            Ordering::Equal => {
                let x = a.next().unwrap();
                let y = b.next().unwrap();
                let s = field.add(&x.coeff, &y.coeff);
                if !field.is_zero(&s) {
                    out.push_back(Term { pos: x.pos, mono: x.mono, coeff: s });
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    sugar: i64,
}

/// Incremental Buchberger engine over a graded free module.
pub(crate) struct Buchberger<'a, F: Field> {
    ring: &'a PolyRing<F>,
    degrees: Vec<i32>,
    red: Reducer<F>,
    pairs: Vec<Pair>,
}

impl<'a, F: Field> Buchberger<'a, F> {
    pub(crate) fn new(ring: &'a PolyRing<F>, degrees: &[i32]) -> Self {
        Self { ring, degrees: degrees.to_vec(), red: Reducer::new(), pairs: Vec::new() }
    }

    fn rank_one(&self) -> bool {
        self.degrees.len() == 1
    }

    /// Adds a generator. Returns false if it already reduces to zero modulo
    /// the current elements (which only means "redundant" once `run` has
    /// completed).
    pub(crate) fn add(&mut self, v: &Vector<F>) -> bool {
        let s = vector_sugar(v, &self.degrees);
        let (h, s) = self.red.reduce(self.ring, v.clone(), s, true, None);
        if h.is_zero() {
            return false;
        }
        self.insert(h, s);
        true
    }

    /// True when the pending pair queue is empty.
    pub(crate) fn is_complete(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Normal form with respect to the current active elements.
    pub(crate) fn normal_form(&self, v: &Vector<F>) -> Vector<F> {
        self.red.reduce(self.ring, v.clone(), 0, true, None).0
    }

    fn insert(&mut self, h: Vector<F>, sugar: i64) {
        let h = VectorOps::new(self.ring).monic(&h);
        let lead = h.lead().unwrap();
        let (hpos, hm) = (lead.pos, lead.mono.clone());
        let k = self.red.elems.len();

        // drop old pairs made redundant by the new leading term
        let leads = &self.red.leads;
        self.pairs.retain(|p| {
            if p.pos != hpos || !hm.divides(&p.lcm) {
                return true;
            }
            let li = hm.lcm(&leads[p.i].1);
            let lj = hm.lcm(&leads[p.j].1);
            li == p.lcm || lj == p.lcm
        });

        // candidate new pairs
        let mut cands: Vec<(Pair, bool)> = Vec::new();
        for i in 0..k {
            if !self.red.active[i] || self.red.leads[i].0 != hpos {
                continue;
            }
            let gm = &self.red.leads[i].1;
            let lcm = gm.lcm(&hm);
            let qi = lcm.degree() as i64 - gm.degree() as i64;
            let qh = lcm.degree() as i64 - hm.degree() as i64;
            let s = (self.red.sugar[i] + qi).max(sugar + qh);
            let coprime = self.rank_one() && gm.is_coprime(&hm);
            cands.push((Pair { i, j: k, pos: hpos, lcm, sugar: s }, coprime));
        }
        // chain criterion: a candidate whose lcm is properly divided by another's is redundant
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            for b in 0..cands.len() {
                if a != b && cands[b].0.lcm.divides(&cands[a].0.lcm) && cands[b].0.lcm != cands[a].0.lcm {
                    keep[a] = false;
                    break;
                }
            }
        }
        // among equal lcms keep one, none if any of them is coprime
        let mut seen: Vec<usize> = Vec::new();
        for a in 0..cands.len() {
            if !keep[a] {
                continue;
            }
            if seen.iter().any(|&b| cands[b].0.lcm == cands[a].0.lcm) {
                keep[a] = false;
                continue;
            }
            seen.push(a);
        }
        for &a in &seen {
            let lcm = &cands[a].0.lcm;
            let any_coprime = cands.iter().any(|(p, c)| *c && p.lcm == *lcm);
            if !any_coprime {
                self.pairs.push(cands[a].0.clone());
            }
        }

        // elements whose lead is divisible by the new lead leave the active set
        for i in 0..k {
            if self.red.active[i] && self.red.leads[i].0 == hpos && hm.divides(&self.red.leads[i].1) {
                self.red.active[i] = false;
            }
        }
        self.red.push(h, sugar);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| cmp_module(order, (a.pos, &a.lcm), (b.pos, &b.lcm)))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn s_vector(&self, p: &Pair) -> Vector<F> {
        let ops = VectorOps::new(self.ring);
        let field = self.ring.field();
        let qi = self.red.leads[p.i].1.quotient_of(&p.lcm).unwrap();
        let qj = self.red.leads[p.j].1.quotient_of(&p.lcm).unwrap();
        let a = ops.add_scaled(&Vector::zero(), &self.red.elems[p.i], &qi, &field.one());
        ops.add_scaled(&a, &self.red.elems[p.j], &qj, &field.neg(&field.one()))
    }

    /// Processes pairs until the element list is a Gröbner basis.
    pub(crate) fn run(&mut self) {
        while let Some(p) = self.pop_pair() {
            let s = self.s_vector(&p);
            let (h, sugar) = self.red.reduce(self.ring, s, p.sugar, true, None);
            if !h.is_zero() {
                self.insert(h, sugar);
            }
        }
    }

    /// Reduced basis: active elements, tail-reduced, monic, sorted descending
    /// by leading term.
    pub(crate) fn reduced(&self) -> Vec<Vector<F>> {
        let ops = VectorOps::new(self.ring);
        let mut out = Vec::new();
        for k in 0..self.red.elems.len() {
            if !self.red.active[k] {
                continue;
            }
            let g = self.red.elems[k].clone();
            let (g, _) = self.red.reduce(self.ring, g, 0, true, Some(k));
            out.push(ops.monic(&g));
        }
        sort_desc(self.ring, &mut out);
        out
    }
}

pub(crate) fn sort_desc<F: Field>(ring: &PolyRing<F>, v: &mut [Vector<F>]) {
    let order = ring.order();
    v.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_module(order, (y.pos, &y.mono), (x.pos, &x.mono))
    });
}

/// A reduced Gröbner basis of a graded submodule of `S^r`.
#[derive(Clone, Debug)]
pub struct ModuleBasis<F: Field> {
    degrees: Vec<i32>,
    red: Reducer<F>,
}

impl<F: Field> ModuleBasis<F> {
    pub(crate) fn from_reduced(degrees: &[i32], elements: Vec<Vector<F>>) -> Self {
        let mut red = Reducer::new();
        for v in elements {
            let s = vector_sugar(&v, degrees);
            red.push(v, s);
        }
        Self { degrees: degrees.to_vec(), red }
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn elements(&self) -> &[Vector<F>] {
        &self.red.elems
    }

    pub fn len(&self) -> usize {
        self.red.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.elems.is_empty()
    }

    /// Leading terms as `(position, monomial)`.
    pub fn leading_terms(&self) -> &[(usize, Monomial)] {
        &self.red.leads
    }

    pub fn normal_form(&self, ring: &PolyRing<F>, v: &Vector<F>) -> Vector<F> {
        self.red.reduce(ring, v.clone(), 0, true, None).0
    }

    pub fn contains(&self, ring: &PolyRing<F>, v: &Vector<F>) -> bool {
        self.red.reduce(ring, v.clone(), 0, false, None).0.is_zero()
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens` in the free
/// module with generator degrees `degrees`.
pub fn module_gb<F: Field>(ring: &PolyRing<F>, degrees: &[i32], gens: &[Vector<F>]) -> ModuleBasis<F> {
    let mut engine = Buchberger::new(ring, degrees);
    for g in gens {
        debug_assert!(g.support_rank() <= degrees.len());
        engine.add(g);
    }
    engine.run();
    ModuleBasis::from_reduced(degrees, engine.reduced())
}

/// Buchberger's criterion, checked directly: every S-vector of two elements
/// with leads in the same position reduces to zero.
pub fn s_vectors_reduce_to_zero<F: Field>(ring: &PolyRing<F>, degrees: &[i32], basis: &[Vector<F>]) -> bool {
    let ops = VectorOps::new(ring);
    let monic: Vec<Vector<F>> = basis.iter().filter(|v| !v.is_zero()).map(|v| ops.monic(v)).collect();
    let target = ModuleBasis::from_reduced(degrees, monic.clone());
    let field = ring.field();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let (a, b) = (monic[i].lead().unwrap(), monic[j].lead().unwrap());
            if a.pos != b.pos {
                continue;
            }
            let lcm = a.mono.lcm(&b.mono);
            let s = ops.add_scaled(&Vector::zero(), &monic[i], &a.mono.quotient_of(&lcm).unwrap(), &field.one());
            let s = ops.add_scaled(&s, &monic[j], &b.mono.quotient_of(&lcm).unwrap(), &field.neg(&field.one()));
            if !target.normal_form(ring, &s).is_zero() {
                return false;
            }
        }
    }
    true
}
