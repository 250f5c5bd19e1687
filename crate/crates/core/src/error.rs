use thiserror::Error;

/// Everything that can go wrong inside the algebra kernel.
///
/// Mathematical "no" answers are never errors; these variants cover invalid
/// input, violated preconditions and exhausted computation budgets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {kind}")]
    Parse { pos: usize, kind: ParseErrorKind },
    #[error("{0} is not a prime in [2, 2^31)")]
    InvalidPrime(u64),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("free module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the defining ideal contains a unit")]
    UnitIdeal,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("cannot eliminate every variable of the ring")]
    EliminateAll,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ideal is not primary to the irrelevant ideal")]
    NotMPrimary,
    #[error("resolution length must be at least 1")]
    ResolutionLength,
    #[error("Ext over the quotient ring is only supported for i <= 2 (got {0})")]
    UnsupportedExtIndex(usize),
    #[error("operation requires a nonzero module")]
    ZeroModule,
    #[error("{0} is a zerodivisor on the ring")]
    ZeroDivisor(String),
    #[error("not a system of parameters: {0}")]
    InvalidParameters(String),
    #[error("no system of parameters found after {attempts} candidates (max degree {max_degree})")]
    SopExhausted { attempts: usize, max_degree: u32 },
    #[error("limit-closure chain did not stabilize for t <= {t_max}")]
    LimitNotStabilized { t_max: usize },
    #[error("no exponent n <= {cap} with m^n annihilating the limit closure modulo (x)")]
    GcmCapExceeded { cap: u32 },
    #[error("quasi-Gorenstein routes disagree: canonical module says {route_a}, socle route says {route_b}")]
    RouteDisagreement { route_a: bool, route_b: bool },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected}, found `{found}`")]
    Expected { expected: &'static str, found: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("expanded power exceeds total degree {0}")]
    DegreeLimit(u32),
    #[error("division by zero in coefficient literal")]
    ZeroDenominator,
    #[error("rational literal is not invertible in the coefficient field")]
    NonInvertibleDenominator,
}

impl Error {
    /// True for the variants that signal an exhausted budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::SopExhausted { .. } | Error::LimitNotStabilized { .. } | Error::GcmCapExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
