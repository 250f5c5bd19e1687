//! Ideals of a polynomial ring with a lazily cached reduced Gröbner basis.
//!
//! Ideals of a quotient `S/I` are represented by ideals of `S` containing `I`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{minimal_generators, reduced_gb, GroebnerBasis, Vector};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};

pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Self { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.format())
    }
}

impl<F: Field> PartialEq for Ideal<F> {
    /// Equality of ideals (not of generator lists).
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.gb() == other.gb()
    }
}

impl<F: Field> Eq for Ideal<F> {}

fn same_ring<F: Field>(a: &Arc<PolyRing<F>>, b: &Arc<PolyRing<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> Ideal<F> {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &gens {
            ring.check(g)?;
        }
        Ok(Self::from_checked(ring, gens))
    }

    fn from_checked(ring: &Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Self {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    fn from_basis(ring: &Arc<PolyRing<F>>, gb: GroebnerBasis<F>) -> Self {
        let gens = gb.polys().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        Self { ring: ring.clone(), gens, gb: cell }
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Self::from_checked(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing<F>>) -> Self {
        Self::from_checked(ring, vec![ring.one()])
    }

    /// The irrelevant ideal generated by all variables.
    pub fn maximal(ring: &Arc<PolyRing<F>>) -> Self {
        Self::from_checked(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn principal(ring: &Arc<PolyRing<F>>, f: Polynomial<F>) -> Result<Self> {
        Self::new(ring, vec![f])
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    /// The reduced Gröbner basis, computed on first use.
    pub fn gb(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| {
            let gb = reduced_gb(&self.ring, &self.gens);
            assert!(gb.contains_all(&self.ring, &self.gens), "Gröbner basis does not reduce its generators to zero");
            gb
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant()) || self.gb().is_unit()
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        f.is_zero() || self.gb().contains(&self.ring, f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        self.gb().normal_form(&self.ring, f)
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gb() == other.gb())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_checked(&self.ring, gens))
    }

    /// Adds polynomials to the generator list.
    pub fn extend(&self, extra: &[Polynomial<F>]) -> Result<Self> {
        let mut gens = self.gens.clone();
        for g in extra {
            self.ring.check(g)?;
            gens.push(g.clone());
        }
        Ok(Self::from_checked(&self.ring, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(self.ring.mul(a, b));
            }
        }
        Ok(Self::from_checked(&self.ring, gens))
    }

    /// `self^k`; the zeroth power is the unit ideal.
    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Multiplies every generator by `f`.
    pub fn scale(&self, f: &Polynomial<F>) -> Self {
        Self::from_checked(&self.ring, self.gens.iter().map(|g| self.ring.mul(g, f)).collect())
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let r = &self.ring;
        let n = r.nvars();
        let mut names = vec![fresh_name(r.vars())];
        names.extend(r.vars().iter().cloned());
        let big = PolyRing::new(r.field().clone(), names, MonomialOrder::Block(1))?;
        let shift: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = big.sub(&big.one(), &t);
        let mut gens = Vec::new();
        for a in &self.gens {
            gens.push(big.mul(&t, &big.embed(a, &shift)));
        }
        for b in &other.gens {
            gens.push(big.mul(&one_minus_t, &big.embed(b, &shift)));
        }
        let gb = reduced_gb(&big, &gens);
        let kept: Vec<Polynomial<F>> =
            gb.polys().iter().filter(|p| !p.involves(0)).map(|p| drop_leading_vars(r, p, 1)).collect();
        Ok(Self::from_basis(r, reduced_gb(r, &kept)))
    }

    /// `(self : f)`, by intersecting with `(f)` and dividing.
    pub fn colon_poly(&self, f: &Polynomial<F>) -> Result<Self> {
        self.ring.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Self::from_checked(&self.ring, vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let q = self
                .ring
                .divide_exact(g, f)
                .ok_or_else(|| Error::Invariant("intersection element not divisible by f".into()))?;
            gens.push(q);
        }
        let out = Self::from_basis(&self.ring, reduced_gb(&self.ring, &gens));
        debug_assert!(out.gens.iter().all(|g| self.contains(&self.ring.mul(g, f))));
        Ok(out)
    }

    /// `(self : B) = ∩ (self : b)`; the colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc = Self::unit(&self.ring);
        for b in &other.gens {
            let c = self.colon_poly(b)?;
            acc = if acc.is_unit() { c } else { acc.intersect(&c)? };
        }
        Ok(acc)
    }

    /// `(self : f^∞)` and the least `k` with `(self : f^k) = (self : f^{k+1})`.
    pub fn saturate_poly(&self, f: &Polynomial<F>) -> Result<(Self, u32)> {
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.colon_poly(f)?;
            if next == cur {
                return Ok((cur, k));
            }
            cur = next;
            k += 1;
        }
    }

    /// `(self : B^∞)` and the least `k` with `(self : B^k) = (self : B^{k+1})`.
    pub fn saturate(&self, other: &Self) -> Result<(Self, u32)> {
        self.check_ring(other)?;
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok((cur, k));
            }
            cur = next;
            k += 1;
        }
    }

    /// `self ∩ K[remaining variables]`, as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Self> {
        let r = &self.ring;
        let n = r.nvars();
        let mut elim: Vec<usize> = vars.to_vec();
        elim.sort_unstable();
        elim.dedup();
        if let Some(&bad) = elim.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVariable(format!("index {bad}")));
        }
        if elim.len() == n {
            return Err(Error::EliminateAll);
        }
        if elim.is_empty() {
            return Ok(self.clone());
        }
        // move eliminated variables to the front
        let mut perm: Vec<usize> = elim.clone();
        perm.extend((0..n).filter(|i| !elim.contains(i)));
        let mut map = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            map[old] = new;
        }
        let names = perm.iter().map(|&i| r.vars()[i].clone()).collect();
        let big = PolyRing::new(r.field().clone(), names, MonomialOrder::Block(elim.len()))?;
        let gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| big.embed(g, &map)).collect();
        let gb = reduced_gb(&big, &gens);
        let back: Vec<Polynomial<F>> = gb
            .polys()
            .iter()
            .filter(|p| (0..elim.len()).all(|i| !p.involves(i)))
            .map(|p| r.embed(p, &perm))
            .collect();
        Ok(Self::from_basis(r, reduced_gb(r, &back)))
    }

    /// Minimal homogeneous generators, chosen greedily by degree.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<F>>> {
        if let Some(g) = self.gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(self.ring.format(g)));
        }
        let vecs: Vec<Vector<F>> = self.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        Ok(minimal_generators(&self.ring, &[0], &vecs).iter().map(|v| v.component(0)).collect())
    }

    /// `(g1, g2, ...)` using the generator list.
    pub fn format(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.format(g)).collect();
        format!("({})", parts.join(", "))
    }

    /// Generator list of the reduced Gröbner basis, or `(0)`.
    pub fn format_gb(&self) -> String {
        let parts: Vec<String> = self.gb().polys().iter().map(|g| self.ring.format(g)).collect();
        if parts.is_empty() {
            "(0)".to_string()
        } else {
            format!("({})", parts.join(", "))
        }
    }
}

fn fresh_name(vars: &[String]) -> String {
    let mut name = "t".to_string();
    while vars.contains(&name) {
        name.push('_');
    }
    name
}

/// Drops the first `k` variables (which must not occur in `p`).
fn drop_leading_vars<F: Field>(target: &PolyRing<F>, p: &Polynomial<F>, k: usize) -> Polynomial<F> {
    let terms = p.terms().iter().map(|(m, c)| (Monomial::new(m.exponents()[k..].iter().copied()), c.clone())).collect();
    target.from_terms(terms)
}
