use super::engine::{module_gb, ModuleBasis};
use super::Vector;
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Reduced Gröbner basis of an ideal: monic, sorted by leading monomial,
/// largest first.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    inner: ModuleBasis<F>,
    polys: Vec<Polynomial<F>>,
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.polys == other.polys
    }
}

impl<F: Field> Eq for GroebnerBasis<F> {}

impl<F: Field> GroebnerBasis<F> {
    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, ring: &PolyRing<F>, f: &Polynomial<F>) -> Polynomial<F> {
        self.inner.normal_form(ring, &Vector::from_poly(f, 0)).component(0)
    }

    pub fn contains(&self, ring: &PolyRing<F>, f: &Polynomial<F>) -> bool {
        self.inner.contains(ring, &Vector::from_poly(f, 0))
    }

    /// Every polynomial of `other` reduces to zero.
    pub fn contains_all(&self, ring: &PolyRing<F>, other: &[Polynomial<F>]) -> bool {
        other.iter().all(|f| self.contains(ring, f))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn reduced_gb<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    let vecs: Vec<Vector<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| Vector::from_poly(g, 0)).collect();
    let inner = module_gb(ring, &[0], &vecs);
    let polys = inner.elements().iter().map(|v| v.component(0)).collect();
    GroebnerBasis { inner, polys }
}

/// Remainder of `f` modulo a Gröbner basis; zero exactly for ideal members.
pub fn normal_form<F: Field>(ring: &PolyRing<F>, f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Polynomial<F> {
    gb.normal_form(ring, f)
}

pub fn is_member<F: Field>(ring: &PolyRing<F>, f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> bool {
    gb.contains(ring, f)
}
