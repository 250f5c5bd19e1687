//! Standard-graded quotient rings `R = S/I`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::invariants::krull_dimension;
use crate::poly::{PolyRing, Polynomial};

/// Largest supported number of variables (leading-term supports are bitsets).
pub const MAX_VARS: usize = 64;

/// `R = S/I` with `I` homogeneous and proper; `d = dim R` is computed once.
#[derive(Clone, Debug)]
pub struct RingSpec<F: Field> {
    ring: Arc<PolyRing<F>>,
    ideal: Ideal<F>,
    dim: usize,
}

impl<F: Field> RingSpec<F> {
    pub fn new(ring: Arc<PolyRing<F>>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        Self::from_ideal(Ideal::new(&ring, gens)?)
    }

    pub fn from_ideal(ideal: Ideal<F>) -> Result<Self> {
        let ring = ideal.ring().clone();
        if ring.nvars() > MAX_VARS {
            return Err(Error::Invariant(format!("at most {MAX_VARS} variables are supported")));
        }
        if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(ring.format(g)));
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let dim = krull_dimension(&ideal);
        debug_assert!(dim >= 0);
        Ok(Self { ring, ideal, dim: dim as usize })
    }

    /// The polynomial ring itself (`I = 0`).
    pub fn polynomial(ring: Arc<PolyRing<F>>) -> Self {
        let dim = ring.nvars();
        Self { ideal: Ideal::zero(&ring), ring, dim }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `n - d`, the index of the canonical Ext.
    pub fn codim(&self) -> usize {
        self.nvars() - self.dim
    }

    /// The lift `m + I` of the maximal ideal.
    pub fn maximal_ideal(&self) -> Ideal<F> {
        Ideal::maximal(&self.ring)
    }

    /// The ideal of `S` generated by `gens` and `I`.
    pub fn lift(&self, gens: &[Polynomial<F>]) -> Result<Ideal<F>> {
        let mut all = gens.to_vec();
        all.extend(self.ideal.gens().iter().cloned());
        Ideal::new(&self.ring, all)
    }

    /// `R/(extra)`.
    pub fn quotient_by(&self, extra: &[Polynomial<F>]) -> Result<Self> {
        Self::from_ideal(self.lift(extra)?)
    }

    pub fn describe(&self) -> String {
        format!("{}/{}", self.ring.describe(), self.ideal.format())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;

    fn ring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
        Arc::new(PolyRing::with_vars(Rationals, vars, MonomialOrder::Grevlex))
    }

    #[test]
    fn dimension_is_cached() {
        let r = ring(&["X", "Y", "Z", "T"]);
        let gens = ["X*Y", "X*T", "Z*Y", "Z*T"].iter().map(|s| r.parse(s).unwrap()).collect();
        let spec = RingSpec::new(r.clone(), gens).unwrap();
        assert_eq!((spec.nvars(), spec.dim(), spec.codim()), (4, 2, 2));
        let q = spec.quotient_by(&[r.parse("X + Y").unwrap(), r.parse("Z + T").unwrap()]).unwrap();
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn rejects_bad_ideals() {
        let r = ring(&["x", "y"]);
        assert!(matches!(RingSpec::new(r.clone(), vec![r.parse("x^2 - y").unwrap()]), Err(Error::NotHomogeneous(_))));
        assert_eq!(RingSpec::new(r.clone(), vec![r.parse("3").unwrap()]).unwrap_err(), Error::UnitIdeal);
        assert_eq!(RingSpec::polynomial(r).dim(), 2);
    }
}
