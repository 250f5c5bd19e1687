use serde::Serialize;

use super::limit::{socle_sequence, SocleSequence};
use super::sop::{find_sop, ParamSystem};
use super::{gb_strings, Budgets};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::canonical_module;
use crate::ring::RingSpec;

/// Both routes of the quasi-Gorenstein test with their intermediate data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QgReport {
    pub quasi_gorenstein: bool,
    pub dim: usize,
    pub mu_omega: usize,
    /// Reduced basis of `ann(ω)`.
    pub omega_annihilator: Vec<String>,
    pub unmixed: bool,
    pub route_a: bool,
    /// `None` when the socle sequence did not stabilize.
    pub route_b: Option<bool>,
    pub routes_agree: Option<bool>,
    pub sop: Vec<String>,
    pub sop_seed: Option<u64>,
    pub socle_sequence: Vec<u64>,
    pub socle_stabilized: bool,
    pub limit_t_stab: Vec<usize>,
    pub n_used: usize,
    /// Set when the verdict rests on route A alone.
    pub flagged: bool,
}

/// Route A: `ω` cyclic and faithful. Route B: unmixed and the socle of
/// `H^d_m(R)` one-dimensional, read off the stabilized socle sequence.
/// Disagreement of completed routes is an error.
pub fn qg_check<F: Field>(spec: &RingSpec<F>, x: Option<&ParamSystem<F>>, budgets: &Budgets) -> Result<QgReport> {
    let omega = canonical_module(spec)?;
    let mu_omega = omega.presentation.mu();
    let ann = omega.presentation.annihilator();
    let unmixed = ann == *spec.ideal();
    let route_a = mu_omega == 1 && unmixed;

    let found;
    let x = match x {
        Some(x) => x,
        None => {
            found = find_sop(spec, budgets.seed, budgets.sop_max_degree)?;
            &found
        }
    };
    let SocleSequence { values, t_stab, stabilized } = socle_sequence(spec, x, budgets)?;
    let route_b = stabilized.then(|| unmixed && values.last() == Some(&1));
    let routes_agree = route_b.map(|b| b == route_a);
    if routes_agree == Some(false) {
        return Err(Error::RouteDisagreement {
            route_a,
            route_b: !route_a,
        });
    }
    Ok(QgReport {
        quasi_gorenstein: route_a,
        dim: spec.dim(),
        mu_omega,
        omega_annihilator: gb_strings(&ann),
        unmixed,
        route_a,
        route_b,
        routes_agree,
        sop: x.format(spec),
        sop_seed: x.seed(),
        n_used: values.len(),
        socle_sequence: values,
        socle_stabilized: stabilized,
        limit_t_stab: t_stab,
        flagged: !stabilized,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::poly::PolyRing;

    fn spec(vars: &[&str], gens: &[&str]) -> RingSpec<Rationals> {
        let r = Arc::new(PolyRing::with_vars(Rationals, vars, MonomialOrder::Grevlex));
        let gens = gens.iter().map(|g| r.parse(g).unwrap()).collect();
        RingSpec::new(r, gens).unwrap()
    }

    #[test]
    fn hypersurface_is_quasi_gorenstein() {
        let rep = qg_check(&spec(&["x", "y", "z"], &["x^3 + y^3 + z^3"]), None, &Budgets::default()).unwrap();
        assert!(rep.quasi_gorenstein && rep.route_b == Some(true));
        assert_eq!(rep.socle_sequence, vec![1; 6]);
    }

    #[test]
    fn two_planes_is_not() {
        let rep = qg_check(&spec(&["X", "Y", "Z", "T"], &["X*Y", "X*T", "Z*Y", "Z*T"]), None, &Budgets::default()).unwrap();
        assert!(!rep.quasi_gorenstein);
        assert!(rep.unmixed);
        assert_eq!(rep.mu_omega, 2);
        assert_eq!(rep.socle_sequence[0], 1);
        assert_eq!(rep.socle_sequence.last(), Some(&2));
        assert_eq!(rep.routes_agree, Some(true));
    }

    #[test]
    fn one_dimensional_socle_without_unmixedness() {
        let rep = qg_check(&spec(&["X", "Y"], &["X^4*Y^3", "X^3*Y^4"]), None, &Budgets::default()).unwrap();
        assert!(!rep.quasi_gorenstein);
        assert!(!rep.unmixed);
        assert_eq!(rep.mu_omega, 1);
        assert_eq!(rep.omega_annihilator, vec!["X^3*Y^3"]);
        assert_eq!(rep.socle_sequence.last(), Some(&1));
    }
}
