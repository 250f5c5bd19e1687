use serde::Serialize;

use super::limit::limit_closure;
use super::qg::{qg_check, QgReport};
use super::sop::ParamSystem;
use super::{gb_strings, Budgets};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::att_avoidance;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuchsbaumProbe {
    /// `m · {x}^lim ⊆ (x) + I`.
    pub annihilation: bool,
    /// `{x}^lim = ((x_1^2, ..., x_d^2) + I) : x_1 ... x_d`.
    pub colon_formula: bool,
    pub limit_closure: Vec<String>,
}

pub fn buchsbaum_probe<F: Field>(spec: &RingSpec<F>, x: &ParamSystem<F>, budgets: &Budgets) -> Result<BuchsbaumProbe> {
    let lim = limit_closure(spec, x, 1, budgets)?.ideal;
    let xi = spec.lift(x.elems())?;
    let m = spec.maximal_ideal();
    let annihilation = xi.contains_ideal(&m.product(&lim)?);
    let squares = spec.lift(&x.powers(spec, 2))?;
    let colon = squares.colon_poly(&spec.ring().product(x.elems()))?;
    Ok(BuchsbaumProbe { annihilation, colon_formula: colon == lim, limit_closure: gb_strings(&lim) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcmReport {
    /// Smallest `n` with `m^n {x}^lim ⊆ (x) + I` for every supplied system.
    pub exponent: u32,
    pub per_system: Vec<u32>,
    /// `m^n ((x_1..x_i) + I : x_{i+1}) ⊆ (x_1..x_i) + I` for every prefix.
    pub prefix_colons_hold: bool,
}

/// Smallest `n <= cap` with `m^n a ⊆ b`, for `a` and `b` containing `I`.
fn annihilating_power<F: Field>(a: &Ideal<F>, b: &Ideal<F>, m: &Ideal<F>, cap: u32) -> Result<Option<u32>> {
    let mut current = a.clone();
    for n in 0..=cap {
        let rest: Vec<Polynomial<F>> =
            current.gens().iter().map(|g| b.normal_form(g)).filter(|g| !g.is_zero()).collect();
        if rest.is_empty() {
            return Ok(Some(n));
        }
        current = m.product(&Ideal::new(a.ring(), rest)?)?;
    }
    Ok(None)
}

fn contained_after<F: Field>(a: &Ideal<F>, b: &Ideal<F>, m: &Ideal<F>, n: u32) -> Result<bool> {
    Ok(annihilating_power(a, b, m, n)?.is_some())
}

pub fn gcm_exponent<F: Field>(spec: &RingSpec<F>, systems: &[ParamSystem<F>], budgets: &Budgets) -> Result<GcmReport> {
    if systems.is_empty() {
        return Err(Error::InvalidParameters("no systems of parameters supplied".into()));
    }
    let cap = budgets.gcm_cap;
    let m = spec.maximal_ideal();
    let mut per_system = Vec::with_capacity(systems.len());
    for x in systems {
        let lim = limit_closure(spec, x, 1, budgets)?.ideal;
        let xi = spec.lift(x.elems())?;
        match annihilating_power(&lim, &xi, &m, cap)? {
            Some(n) => per_system.push(n),
            None => return Err(Error::GcmCapExceeded { cap }),
        }
    }
    let exponent = per_system.iter().copied().max().unwrap_or(0);
    let mut prefix_colons_hold = true;
    'systems: for x in systems {
        for i in 0..x.len() {
            let prefix = spec.lift(&x.elems()[..i])?;
            let colon = prefix.colon_poly(&x.elems()[i])?;
            if !contained_after(&colon, &prefix, &m, exponent)? {
                prefix_colons_hold = false;
                break 'systems;
            }
        }
    }
    Ok(GcmReport { exponent, per_system, prefix_colons_hold })
}

fn check_nzd<F: Field>(spec: &RingSpec<F>, x: &Polynomial<F>) -> Result<()> {
    let ring = spec.ring();
    ring.check(x)?;
    if x.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous(ring.format(x)));
    }
    if spec.ideal().colon_poly(x)? != *spec.ideal() {
        return Err(Error::ZeroDivisor(ring.format(x)));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformationProbe {
    /// Verdict for `R/x^n R`, `n = 1..=N`.
    pub verdicts: Vec<bool>,
    pub reports: Vec<QgReport>,
}

/// Runs the quasi-Gorenstein check on `R/x^n R` for `n = 1..=n_max`.
pub fn deformation_probe<F: Field>(
    spec: &RingSpec<F>,
    x: &Polynomial<F>,
    n_max: u32,
    budgets: &Budgets,
) -> Result<DeformationProbe> {
    check_nzd(spec, x)?;
    let mut reports = Vec::new();
    for n in 1..=n_max {
        let q = spec.quotient_by(&[spec.ring().pow(x, n)])?;
        reports.push(qg_check(&q, None, budgets)?);
    }
    Ok(DeformationProbe { verdicts: reports.iter().map(|r| r.quasi_gorenstein).collect(), reports })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientProbe {
    /// `R` itself passed the quasi-Gorenstein check.
    pub hypothesis_holds: bool,
    pub avoidance: bool,
    pub qg_quotient: bool,
    pub consistent: bool,
}

pub fn quotient_probe<F: Field>(spec: &RingSpec<F>, x: &Polynomial<F>, budgets: &Budgets) -> Result<QuotientProbe> {
    check_nzd(spec, x)?;
    let hypothesis_holds = qg_check(spec, None, budgets)?.quasi_gorenstein;
    let avoidance = att_avoidance(x, spec)?;
    let q = spec.quotient_by(std::slice::from_ref(x))?;
    let qg_quotient = qg_check(&q, None, budgets)?.quasi_gorenstein;
    Ok(QuotientProbe { hypothesis_holds, avoidance, qg_quotient, consistent: avoidance == qg_quotient })
}
