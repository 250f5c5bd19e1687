//! Systems of parameters, limit closures, socle sequences and the
//! quasi-Gorenstein checks built on them.

mod limit;
mod probes;
mod qg;
mod sop;

use serde::Serialize;

pub use limit::{is_regular_sequence_via_limit, limit_closure, socle_sequence, LimitClosure, SocleSequence};
pub use probes::{
    buchsbaum_probe, deformation_probe, gcm_exponent, quotient_probe, BuchsbaumProbe, DeformationProbe, GcmReport,
    QuotientProbe,
};
pub use qg::{qg_check, QgReport};
pub use sop::{find_sop, ParamSystem};

/// Search and iteration limits shared by the analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Largest `t` inspected in a limit-closure chain.
    pub t_max: usize,
    /// Number of powers `x^n` in a socle sequence.
    pub n_max: usize,
    /// Consecutive equal chain members required for stabilization.
    pub window: usize,
    /// Seed for random parameter candidates.
    pub seed: u64,
    /// Largest degree of random parameter candidates.
    pub sop_max_degree: u32,
    /// Largest exponent tried by the generalized Cohen-Macaulay probe.
    pub gcm_cap: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Self { t_max: 20, n_max: 6, window: 2, seed: 0, sop_max_degree: 3, gcm_cap: 8 }
    }
}

/// `(g1, g2, ...)` of the reduced Gröbner basis.
pub(crate) fn gb_strings<F: crate::field::Field>(ideal: &crate::ideal::Ideal<F>) -> Vec<String> {
    ideal.gb().polys().iter().map(|p| ideal.ring().format(p)).collect()
}
