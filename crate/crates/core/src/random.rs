//! Seeded random forms.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::monomial::monomials_of_degree;
use crate::poly::{PolyRing, Polynomial};

/// A homogeneous form of the given degree with every monomial present and
/// coefficients drawn from the field's sampling distribution. Output depends
/// only on the ring and the seed.
pub fn random_homogeneous_form<F: Field>(ring: &PolyRing<F>, degree: u32, seed: u64) -> Polynomial<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_form_with(ring, degree, &mut rng)
}

pub(crate) fn random_form_with<F: Field, R: rand::Rng>(ring: &PolyRing<F>, degree: u32, rng: &mut R) -> Polynomial<F> {
    let terms = monomials_of_degree(ring.nvars(), degree)
        .into_iter()
        .map(|m| (m, ring.field().random_nonzero(rng)))
        .collect();
    ring.from_terms(terms)
}
