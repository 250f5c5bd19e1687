//! Commutative algebra kernel for graded quotients of polynomial rings.

pub mod analysis;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod random;
pub mod ring;

pub use error::{Error, ParseErrorKind, Result};
pub use ideal::Ideal;
pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use poly::{PolyRing, Polynomial};
pub use ring::RingSpec;
