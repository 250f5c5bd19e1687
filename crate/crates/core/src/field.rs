//! Exact coefficient fields: the rationals and prime fields `F_p`.

use std::fmt::Debug;
use std::hash::Hash;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default characteristic for randomized computations.
pub const DEFAULT_PRIME: u32 = 32003;

/// Range used for random rational coefficients: nonzero integers in `[-RANGE, RANGE]`.
const RATIONAL_SAMPLE_RANGE: i64 = 10;

/// A coefficient field with exact arithmetic.
///
/// Elements are plain values; the field object carries whatever context the
/// arithmetic needs (the modulus for `F_p`).
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// Image of `num/den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(Error::Parse { pos: 0, kind: crate::error::ParseErrorKind::NonInvertibleDenominator });
        }
        Ok(self.mul(&self.from_bigint(num), &self.inv(&d)))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Nonzero element drawn from the field's sampling distribution.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Printing helper: `(is_negative, magnitude_text)`. The magnitude text is
    /// `"1"` exactly when the element is plus or minus one.
    fn signed_text(&self, a: &Self::Elem) -> (bool, String);

    fn characteristic(&self) -> u64;

    /// Short name used in session files and reports (`Q`, `F32003`).
    fn name(&self) -> String;
}

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Parse { pos: 0, kind: crate::error::ParseErrorKind::ZeroDenominator });
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        loop {
            let v = rng.gen_range(-RATIONAL_SAMPLE_RANGE..=RATIONAL_SAMPLE_RANGE);
            if v != 0 {
                return BigRational::from_integer(BigInt::from(v));
            }
        }
    }
    fn signed_text(&self, a: &BigRational) -> (bool, String) {
        let neg = a.is_negative();
        let m = a.abs();
        let text = if m.is_integer() { m.numer().to_string() } else { format!("{}/{}", m.numer(), m.denom()) };
        (neg, text)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
}

/// The prime field `Z/pZ` with `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (*a as u64 + self.p as u64 - *b as u64) as u32
        }
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.reduce_i64(t0)
    }
    fn from_bigint(&self, n: &BigInt) -> u32 {
        let r = n % BigInt::from(self.p);
        let v = r.to_i64().expect("residue fits in i64");
        self.reduce_i64(v)
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(1..self.p)
    }
    fn signed_text(&self, a: &u32) -> (bool, String) {
        // symmetric representative keeps `x - y` readable
        if *a > self.p / 2 {
            (true, (self.p - a).to_string())
        } else {
            (false, a.to_string())
        }
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
}

/// Sign of a big integer as `-1`, `0` or `1`; small helper for parsers.
pub fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_checks() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert_eq!(PrimeField::new(1), Err(Error::InvalidPrime(1)));
        assert_eq!(PrimeField::new(32004), Err(Error::InvalidPrime(32004)));
        assert!(PrimeField::new(1u64 << 31).is_err());
        assert!(PrimeField::new(2147483647).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u32 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.signed_text(&100), (true, "1".to_string()));
        let big = PrimeField::new(2147483647).unwrap();
        let a = 2147483646u32;
        assert_eq!(big.mul(&a, &a), 1);
    }

    #[test]
    fn rationals_are_reduced() {
        let q = Rationals;
        let v = q.from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(v.numer(), &BigInt::from(-3));
        assert_eq!(v.denom(), &BigInt::from(2));
        assert_eq!(q.signed_text(&v), (true, "3/2".to_string()));
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_err());
    }

    #[test]
    fn non_invertible_denominator_in_fp() {
        let f = PrimeField::new(5).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(10)).is_err());
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), 3);
    }
}
