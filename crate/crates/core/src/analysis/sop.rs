use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::invariants::{is_m_primary, krull_dimension};
use crate::poly::Polynomial;
use crate::random::random_form_with;
use crate::ring::RingSpec;

/// Random candidates tried per degree once variables and their pairwise sums
/// are exhausted.
const RANDOM_ATTEMPTS_PER_DEGREE: usize = 8;

/// Homogeneous `x_1, ..., x_d` with `I + (x)` primary to the maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSystem<F: Field> {
    elems: Vec<Polynomial<F>>,
    seed: Option<u64>,
}

impl<F: Field> ParamSystem<F> {
    /// Checks the certificate: `d` homogeneous nonconstant elements with
    /// `I + (x)` m-primary.
    pub fn verify(spec: &RingSpec<F>, elems: Vec<Polynomial<F>>) -> Result<Self> {
        let ring = spec.ring();
        for x in &elems {
            ring.check(x)?;
            if !x.is_homogeneous() {
                return Err(Error::NotHomogeneous(ring.format(x)));
            }
            if x.is_constant() || x.is_zero() {
                return Err(Error::InvalidParameters(format!("`{}` has degree 0", ring.format(x))));
            }
        }
        if elems.len() != spec.dim() {
            return Err(Error::InvalidParameters(format!(
                "expected {} elements for a ring of dimension {}, got {}",
                spec.dim(),
                spec.dim(),
                elems.len()
            )));
        }
        let s = Self { elems, seed: None };
        if !s.certificate_holds(spec) {
            return Err(Error::InvalidParameters("I + (x) is not primary to the maximal ideal".into()));
        }
        Ok(s)
    }

    /// Re-checks that `I + (x)` is m-primary.
    pub fn certificate_holds(&self, spec: &RingSpec<F>) -> bool {
        match spec.lift(&self.elems) {
            Ok(j) => is_m_primary(&j) || (spec.nvars() == 0),
            Err(_) => false,
        }
    }

    pub fn elems(&self) -> &[Polynomial<F>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.elems.iter().map(|x| x.degree().unwrap_or(0)).collect()
    }

    /// Seed used when random candidates were needed.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// `x^n = (x_1^n, ..., x_d^n)`.
    pub fn powers(&self, spec: &RingSpec<F>, n: u32) -> Vec<Polynomial<F>> {
        self.elems.iter().map(|x| spec.ring().pow(x, n)).collect()
    }

    pub fn format(&self, spec: &RingSpec<F>) -> Vec<String> {
        self.elems.iter().map(|x| spec.ring().format(x)).collect()
    }
}

/// Greedy deterministic search: variables, then sums of two variables, then
/// seeded random forms of increasing degree. A candidate is kept when it
/// lowers the dimension by one.
pub fn find_sop<F: Field>(spec: &RingSpec<F>, seed: u64, max_degree: u32) -> Result<ParamSystem<F>> {
    let d = spec.dim();
    let ring = spec.ring();
    let n = ring.nvars();
    let mut chosen: Vec<Polynomial<F>> = Vec::new();
    let mut current: Ideal<F> = spec.ideal().clone();
    let mut attempts = 0;
    let mut used_random = false;

    let mut try_candidate = |c: Polynomial<F>, chosen: &mut Vec<Polynomial<F>>, current: &mut Ideal<F>| -> bool {
        attempts += 1;
        let next = current.extend(std::slice::from_ref(&c)).expect("same ring");
        if krull_dimension(&next) == (d - chosen.len()) as i32 - 1 {
            chosen.push(c);
            *current = next;
            true
        } else {
            false
        }
    };

    let mut singles = (0..n).map(|i| ring.var(i));
    let mut pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| ring.add(&ring.var(i), &ring.var(j)));
    while chosen.len() < d {
        let Some(c) = singles.next().or_else(|| pairs.next()) else { break };
        try_candidate(c, &mut chosen, &mut current);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'outer: for degree in 1..=max_degree {
        for _ in 0..RANDOM_ATTEMPTS_PER_DEGREE {
            if chosen.len() == d {
                break 'outer;
            }
            used_random = true;
            let c = random_form_with(ring, degree, &mut rng);
            try_candidate(c, &mut chosen, &mut current);
        }
    }
    drop(try_candidate);
    if chosen.len() < d {
        return Err(Error::SopExhausted { attempts, max_degree });
    }
    let mut sop = ParamSystem::verify(spec, chosen)?;
    if used_random {
        sop.seed = Some(seed);
    }
    Ok(sop)
}
