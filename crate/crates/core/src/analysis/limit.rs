use serde::Serialize;

use super::sop::ParamSystem;
use super::Budgets;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::invariants::socle_dimension;
use crate::ring::RingSpec;

/// `{x^n}^lim` with the chain `J_0 ⊆ J_1 ⊆ ...` that produced it.
#[derive(Clone, Debug)]
pub struct LimitClosure<F: Field> {
    pub ideal: Ideal<F>,
    pub t_stab: usize,
    pub chain: Vec<Ideal<F>>,
    pub window: usize,
    pub power: u32,
}

/// `J_t = ((x_1^{n+t}, ..., x_d^{n+t}) + I) : (x_1 ... x_d)^t` for `t = 0, 1, ...`
/// until `window` consecutive members agree.
pub fn limit_closure<F: Field>(
    spec: &RingSpec<F>,
    x: &ParamSystem<F>,
    power: u32,
    budgets: &Budgets,
) -> Result<LimitClosure<F>> {
    let w = budgets.window.max(1);
    if x.is_empty() {
        let ideal = spec.ideal().clone();
        return Ok(LimitClosure { chain: vec![ideal.clone()], ideal, t_stab: 0, window: w, power });
    }
    let ring = spec.ring();
    let product = ring.product(x.elems());
    let mut chain: Vec<Ideal<F>> = Vec::new();
    let mut run = 0;
    for t in 0..=budgets.t_max {
        let base = spec.lift(&x.powers(spec, power + t as u32))?;
        let j = if t == 0 { base } else { base.colon_poly(&ring.pow(&product, t as u32))? };
        if let Some(prev) = chain.last() {
            if !j.contains_ideal(prev) {
                return Err(Error::Invariant(format!("limit-closure chain is not ascending at t = {t}")));
            }
            if *prev == j {
                run += 1;
            } else {
                run = 1;
            }
        } else {
            run = 1;
        }
        chain.push(j);
        if run >= w {
            let t_stab = t + 1 - w;
            let ideal = chain[t_stab].clone();
            return Ok(LimitClosure { ideal, t_stab, chain, window: w, power });
        }
    }
    Err(Error::LimitNotStabilized { t_max: budgets.t_max })
}

/// Whether `{x}^lim = (x) + I`.
pub fn is_regular_sequence_via_limit<F: Field>(spec: &RingSpec<F>, x: &ParamSystem<F>, budgets: &Budgets) -> Result<bool> {
    let lim = limit_closure(spec, x, 1, budgets)?;
    Ok(lim.ideal == spec.lift(x.elems())?)
}

/// `s_n = dim Soc(R / {x^n}^lim)` for `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleSequence {
    pub values: Vec<u64>,
    /// Stabilization index of each limit closure.
    pub t_stab: Vec<usize>,
    /// The last two values agree.
    pub stabilized: bool,
}

impl SocleSequence {
    pub fn last(&self) -> Option<u64> {
        self.values.last().copied()
    }
}

pub fn socle_sequence<F: Field>(spec: &RingSpec<F>, x: &ParamSystem<F>, budgets: &Budgets) -> Result<SocleSequence> {
    let n_max = budgets.n_max.max(1);
    let mut values = Vec::with_capacity(n_max);
    let mut t_stab = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let lim = limit_closure(spec, x, n as u32, budgets)?;
        values.push(socle_dimension(&lim.ideal, spec.ideal())?);
        t_stab.push(lim.t_stab);
        if x.is_empty() {
            // every power gives I
            values.resize(n_max, values[0]);
            t_stab.resize(n_max, 0);
            break;
        }
    }
    let stabilized = values.len() < 2 || values[values.len() - 1] == values[values.len() - 2];
    Ok(SocleSequence { values, t_stab, stabilized })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;
    use crate::field::Rationals;

    fn spec(vars: &[&str], gens: &[&str]) -> RingSpec<Rationals> {
        let r = Arc::new(PolyRing::with_vars(Rationals, vars, MonomialOrder::Grevlex));
        let gens = gens.iter().map(|g| r.parse(g).unwrap()).collect();
        RingSpec::new(r, gens).unwrap()
    }

    fn sop(s: &RingSpec<Rationals>, xs: &[&str]) -> ParamSystem<Rationals> {
        ParamSystem::verify(s, xs.iter().map(|x| s.ring().parse(x).unwrap()).collect()).unwrap()
    }

    #[test]
    fn regular_sequence_is_its_own_limit() {
        let s = spec(&["x", "y", "z"], &[]);
        let x = sop(&s, &["x", "y", "z"]);
        let lim = limit_closure(&s, &x, 1, &Budgets::default()).unwrap();
        assert_eq!(lim.t_stab, 0);
        assert_eq!(lim.ideal, Ideal::maximal(s.ring()));
        assert!(is_regular_sequence_via_limit(&s, &x, &Budgets::default()).unwrap());
    }

    #[test]
    fn two_planes_limit_is_the_maximal_ideal() {
        let s = spec(&["X", "Y", "Z", "T"], &["X*Y", "X*T", "Z*Y", "Z*T"]);
        let x = sop(&s, &["X + Y", "Z + T"]);
        let lim = limit_closure(&s, &x, 1, &Budgets::default()).unwrap();
        assert_eq!(lim.ideal, Ideal::maximal(s.ring()));
        assert_eq!(lim.chain[1], lim.ideal);
        assert!(!is_regular_sequence_via_limit(&s, &x, &Budgets::default()).unwrap());
        let seq = socle_sequence(&s, &x, &Budgets::default()).unwrap();
        assert_eq!(seq.values[0], 1);
        assert!(seq.stabilized);
        assert_eq!(seq.last(), Some(2));
    }

    #[test]
    fn artinian_socle_sequence() {
        let s = spec(&["x", "y"], &["x^2", "x*y", "y^2"]);
        let x = sop(&s, &[]);
        let seq = socle_sequence(&s, &x, &Budgets::default()).unwrap();
        assert_eq!(seq.values, vec![2; 6]);
        assert!(seq.stabilized);
    }

    #[test]
    fn chain_budget_is_reported() {
        let s = spec(&["X", "Y", "Z", "T"], &["X*Y", "X*T", "Z*Y", "Z*T"]);
        let x = sop(&s, &["X + Y", "Z + T"]);
        let b = Budgets { t_max: 0, ..Budgets::default() };
        assert_eq!(limit_closure(&s, &x, 1, &b).unwrap_err(), Error::LimitNotStabilized { t_max: 0 });
    }
}
