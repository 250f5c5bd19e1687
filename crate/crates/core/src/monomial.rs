//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Exponents = SmallVec<[u16; 8]>;

/// Dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn new(exps: impl IntoIterator<Item = u16>) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    /// The monomial `x_i`.
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product; `None` when an exponent would overflow.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b)?);
        }
        Some(Self { exps, degree: self.degree + other.degree })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn checked_pow(&self, k: u32) -> Option<Self> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for &a in &self.exps {
            let e = (a as u32).checked_mul(k)?;
            exps.push(u16::try_from(e).ok()?);
        }
        Some(Self { exps, degree: self.degree * k })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let exps: Exponents = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Self { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Monomial in a ring with variables permuted/embedded: variable `i` of
    /// `self` becomes variable `map[i]` of the result.
    pub fn remap(&self, target_nvars: usize, map: &[usize]) -> Self {
        let mut exps = Exponents::from_elem(0, target_nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] = e;
        }
        Self { exps, degree: self.degree }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Term orders on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Eliminates the first `k` variables; grevlex inside each block.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Block(k) => {
                let k = k.min(a.nvars());
                grevlex(&a.exponents()[..k], &b.exponents()[..k])
                    .then_with(|| grevlex(&a.exponents()[k..], &b.exponents()[k..]))
            }
        }
    }

    /// Comparison with a length check, for callers handling foreign input.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.compare(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

/// All monomials of total degree `degree` in `nvars` variables, in descending
/// lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u16; nvars];
    fill(&mut out, &mut cur, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u16>, i: usize, remaining: u32) {
    if cur.is_empty() {
        if remaining == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if i == cur.len() - 1 {
        cur[i] = remaining as u16;
        out.push(Monomial::new(cur.iter().copied()));
        cur[i] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        cur[i] = e as u16;
        fill(out, cur, i + 1, remaining - e);
    }
    cur[i] = 0;
}
