//! Invariants read off leading-term ideals: dimension, Hilbert functions,
//! lengths, minimal numbers of generators and socle dimensions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;

fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | (1u64 << i))
}

/// `dim S/J`, or `-1` for the unit ideal.
pub fn krull_dimension<F: Field>(j: &Ideal<F>) -> i32 {
    let n = j.ring().nvars();
    assert!(n <= 64, "too many variables");
    if j.is_unit() {
        return -1;
    }
    let masks: Vec<u64> = j.gb().leading_monomials().iter().map(support_mask).collect();
    let mut best = 0;
    independent_sets(&masks, n, 0, 0, 0, &mut best);
    best as i32
}

/// Branch-and-bound search for the largest variable set containing no
/// leading-monomial support.
fn independent_sets(masks: &[u64], n: usize, next: usize, chosen: u64, size: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if next == n || size + (n - next) <= *best {
        return;
    }
    let with = chosen | (1u64 << next);
    if masks.iter().all(|&m| m & !with != 0) {
        independent_sets(masks, n, next + 1, with, size + 1, best);
    }
    independent_sets(masks, n, next + 1, chosen, size, best);
}

/// Every variable has a pure power among the leading monomials.
pub fn is_m_primary<F: Field>(j: &Ideal<F>) -> bool {
    if j.is_unit() {
        return false;
    }
    let leads = j.gb().leading_monomials();
    (0..j.ring().nvars()).all(|i| leads.iter().any(|m| m.support().all(|k| k == i) && m.exponent(i) > 0))
}

fn standard_in_degree(leads: &[Monomial], nvars: usize, e: u32) -> u64 {
    crate::monomial::monomials_of_degree(nvars, e).iter().filter(|m| !leads.iter().any(|l| l.divides(m))).count()
        as u64
}

/// `dim_K (S/J)_e`.
pub fn hilbert_function<F: Field>(j: &Ideal<F>, e: u32) -> u64 {
    standard_in_degree(&j.gb().leading_monomials(), j.ring().nvars(), e)
}

/// Values of the Hilbert function of `S/J` in degrees `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub values: Vec<u64>,
    /// `dim_K S/J` when `J` is primary to the irrelevant ideal.
    pub total: Option<u64>,
}

pub fn hilbert_table<F: Field>(j: &Ideal<F>, bound: u32) -> HilbertTable {
    let leads = j.gb().leading_monomials();
    let n = j.ring().nvars();
    let values = (0..=bound).map(|e| standard_in_degree(&leads, n, e)).collect();
    let total = if is_m_primary(j) { Some(artinian_length(&leads, n)) } else { None };
    HilbertTable { values, total }
}

fn artinian_length(leads: &[Monomial], nvars: usize) -> u64 {
    let mut total = 0;
    for e in 0.. {
        let h = standard_in_degree(leads, nvars, e);
        if h == 0 {
            break;
        }
        total += h;
    }
    total
}

/// Number of standard monomials of an m-primary ideal, i.e. `dim_K S/J`.
/// The unit ideal has length zero.
pub fn vdim_artinian<F: Field>(j: &Ideal<F>) -> Result<u64> {
    if j.is_unit() {
        return Ok(0);
    }
    if !is_m_primary(j) {
        return Err(Error::NotMPrimary);
    }
    Ok(artinian_length(&j.gb().leading_monomials(), j.ring().nvars()))
}

fn check_homogeneous<F: Field>(j: &Ideal<F>) -> Result<()> {
    match j.gens().iter().find(|g| !g.is_homogeneous()) {
        Some(g) => Err(Error::NotHomogeneous(j.ring().format(g))),
        None => Ok(()),
    }
}

/// Minimal number of generators of `(J + I)/I` in `S/I`, from the Hilbert
/// functions of `J + I` and `mJ + I`.
pub fn mu_homogeneous<F: Field>(j: &Ideal<F>, context: &Ideal<F>) -> Result<usize> {
    check_homogeneous(j)?;
    check_homogeneous(context)?;
    let jj = j.sum(context)?;
    if jj.gb().is_empty() {
        return Ok(0);
    }
    let mj = Ideal::maximal(j.ring()).product(&jj)?.sum(context)?;
    let top = jj.gb().polys().iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let mut mu: i64 = 0;
    for e in 0..=top {
        mu += hilbert_function(&mj, e) as i64 - hilbert_function(&jj, e) as i64;
    }
    debug_assert!(mu >= 0);
    Ok(mu as usize)
}

/// `dim_K Soc(S/(a + I))`, computed as `λ(a) − λ(a : m)`.
pub fn socle_dimension<F: Field>(a: &Ideal<F>, context: &Ideal<F>) -> Result<u64> {
    let aa = a.sum(context)?;
    let top = vdim_artinian(&aa)?;
    let colon = aa.colon(&Ideal::maximal(a.ring()))?;
    Ok(top - vdim_artinian(&colon)?)
}

/// Outcome of the irreducibility test for an m-primary ideal of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibleCertificate {
    pub irreducible: bool,
    pub socle_dimension: u64,
    /// `μ(a : m)` in `S/I`.
    pub mu_colon: usize,
    /// `μ(a)` in `S/I`.
    pub mu_ideal: usize,
    /// Whether `μ(a : m) = μ(a) + 1` holds exactly when `a` is irreducible.
    pub generator_count_agrees: bool,
    /// `a ⊆ m²` modulo `I`; the generator count criterion is only reliable then.
    pub inside_m_squared: bool,
}

/// `a` is irreducible iff the socle of `S/(a + I)` is one-dimensional. The
/// certificate also compares against the generator count criterion.
pub fn is_irreducible_mprimary<F: Field>(a: &Ideal<F>, context: &Ideal<F>) -> Result<IrreducibleCertificate> {
    let aa = a.sum(context)?;
    let socle = socle_dimension(&aa, context)?;
    let colon = aa.colon(&Ideal::maximal(a.ring()))?;
    let mu_colon = mu_homogeneous(&colon, context)?;
    let mu_ideal = mu_homogeneous(&aa, context)?;
    let irreducible = socle == 1;
    let m2 = Ideal::maximal(a.ring()).power(2).sum(context)?;
    Ok(IrreducibleCertificate {
        irreducible,
        socle_dimension: socle,
        mu_colon,
        mu_ideal,
        generator_count_agrees: (mu_colon == mu_ideal + 1) == irreducible,
        inside_m_squared: m2.contains_ideal(&aa),
    })
}
