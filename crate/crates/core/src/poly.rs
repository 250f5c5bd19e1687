//! Polynomial rings `K[x_1, ..., x_n]` with flat sorted term lists.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial as a list of `(monomial, coefficient)` pairs, strictly
/// descending in the order of the ring that built it. No zero coefficients;
/// the zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Wraps a term list that is already canonical for some order.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, F::Elem)>) -> Self {
        Self { terms }
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    /// Does any term involve variable `i`?
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponent(i) > 0)
    }
}

/// The ambient polynomial ring: coefficient field, variable names, term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Invariant(format!("duplicate variable name `{v}`")));
            }
        }
        Ok(Self { field, vars, order })
    }

    /// Convenience constructor for tests and examples.
    pub fn with_vars(field: F, vars: &[&str], order: MonomialOrder) -> Self {
        Self::new(field, vars.iter().map(|s| s.to_string()).collect(), order).expect("distinct variable names")
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        Self { field: self.field.clone(), vars: self.vars.clone(), order }
    }

    /// `field[var list] order`, as used in reports.
    pub fn describe(&self) -> String {
        format!("{}[{}] {}", self.field.name(), self.vars.join(","), self.order)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Rejects polynomials whose exponent vectors do not fit this ring.
    pub fn check(&self, p: &Polynomial<F>) -> Result<()> {
        match p.terms.iter().find(|t| t.0.nvars() != self.nvars()) {
            Some(t) => Err(Error::LengthMismatch(t.0.nvars(), self.nvars())),
            None => Ok(()),
        }
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.term(Monomial::variable(self.nvars(), i), self.field.one())
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F> {
        self.term(m, self.field.one())
    }

    /// Canonicalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Polynomial<F> {
        terms.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if self.field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if self.field.is_zero(&last.1) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.merge(a, b, |x| x.clone())
    }

    pub fn sub(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        self.merge(a, b, |x| self.field.neg(x))
    }

    /// Ring-checked addition.
    pub fn try_add(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    /// Ring-checked multiplication.
    pub fn try_mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    fn merge(&self, a: &Polynomial<F>, b: &Polynomial<F>, map_b: impl Fn(&F::Elem) -> F::Elem) -> Polynomial<F> {
        let (x, y) = (&a.terms, &b.terms);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match self.order.compare(&x[i].0, &y[j].0) {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((y[j].0.clone(), map_b(&y[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&x[i].1, &map_b(&y[j].1));
                    if !self.field.is_zero(&c) {
                        out.push((x[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend(y[j..].iter().map(|t| (t.0.clone(), map_b(&t.1))));
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Polynomial<F>) -> Polynomial<F> {
        Polynomial { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    /// `c * m * a`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, a: &Polynomial<F>, m: &Monomial, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial { terms: a.terms.iter().map(|(x, y)| (x.mul(m), self.field.mul(y, c))).collect() }
    }

    pub fn mul(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Polynomial<F> {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        if a.len() == 1 {
            return self.mul_term(b, &a.terms[0].0, &a.terms[0].1);
        }
        if b.len() == 1 {
            return self.mul_term(a, &b.terms[0].0, &b.terms[0].1);
        }
        let mut prods = Vec::with_capacity(a.len() * b.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                prods.push((ma.mul(mb), self.field.mul(ca, cb)));
            }
        }
        self.from_terms(prods)
    }

    pub fn pow(&self, a: &Polynomial<F>, k: u32) -> Polynomial<F> {
        let mut result = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a Polynomial<F>>) -> Polynomial<F> {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, a: &Polynomial<F>) -> Polynomial<F> {
        match a.leading_coeff() {
            None => Polynomial::zero(),
            Some(c) if self.field.is_one(c) => a.clone(),
            Some(c) => {
                let inv = self.field.inv(c);
                self.scale(a, &inv)
            }
        }
    }

    /// `a / b` when `b` divides `a` exactly.
    pub fn divide_exact(&self, a: &Polynomial<F>, b: &Polynomial<F>) -> Option<Polynomial<F>> {
        let (lm, lc) = b.terms.first()?;
        let lc_inv = self.field.inv(lc);
        let mut rem = a.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q = lm.quotient_of(m)?;
            let qc = self.field.mul(c, &lc_inv);
            rem = self.sub(&rem, &self.mul_term(b, &q, &qc));
            quotient.push((q, qc));
        }
        Some(Polynomial { terms: quotient })
    }

    /// Re-sorts a polynomial whose terms are canonical for another order of the
    /// same variables.
    pub fn reorder(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.order.compare(&b.0, &a.0));
        Polynomial { terms }
    }

    /// Transports `p` from a ring with `map.len()` variables into this ring,
    /// sending variable `i` to variable `map[i]`.
    pub fn embed(&self, p: &Polynomial<F>, map: &[usize]) -> Polynomial<F> {
        let terms = p.terms.iter().map(|(m, c)| (m.remap(self.nvars(), map), c.clone())).collect();
        self.from_terms(terms)
    }

    pub fn is_homogeneous(&self, p: &Polynomial<F>) -> bool {
        p.is_homogeneous()
    }

    /// Canonical text form; reparses to the same polynomial.
    pub fn format(&self, p: &Polynomial<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in p.terms.iter().enumerate() {
            let (neg, mag) = self.field.signed_text(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.format_monomial(m);
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&mag);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                _ => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        parts.join("*")
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial<F>) -> DisplayPoly<'a, F> {
        DisplayPoly { ring: self, poly: p }
    }
}

pub struct DisplayPoly<'a, F: Field> {
    ring: &'a PolyRing<F>,
    poly: &'a Polynomial<F>,
}

impl<F: Field> fmt::Display for DisplayPoly<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(self.poly))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn qxy() -> PolyRing<Rationals> {
        PolyRing::with_vars(Rationals, &["x", "y"], MonomialOrder::Grevlex)
    }

    #[test]
    fn difference_of_squares() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let p = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(r.format(&p), "x^2 - y^2");
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = qxy();
        let p = r.add(&r.pow(&r.var(0), 3), &r.constant(r.field().from_i64(7)));
        let minus = r.scale(&p, &r.field().from_i64(-1));
        assert!(r.add(&p, &minus).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_three() {
        let r = PolyRing::with_vars(PrimeField::new(3).unwrap(), &["x", "y"], MonomialOrder::Grevlex);
        let s = r.add(&r.var(0), &r.var(1));
        assert_eq!(r.format(&r.pow(&s, 3)), "x^3 + y^3");
    }

    #[test]
    fn exact_division() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        let f = r.add(&x, &y);
        let g = r.mul(&f, &r.sub(&r.pow(&x, 2), &y));
        assert_eq!(r.divide_exact(&g, &f).unwrap(), r.sub(&r.pow(&x, 2), &y));
        assert!(r.divide_exact(&r.add(&g, &r.one()), &f).is_none());
    }

    #[test]
    fn mixed_ring_operands_rejected() {
        let r = qxy();
        let other = PolyRing::with_vars(Rationals, &["a", "b", "c"], MonomialOrder::Grevlex);
        assert!(matches!(r.try_add(&r.var(0), &other.var(2)), Err(Error::LengthMismatch(3, 2))));
        assert!(r.try_mul(&r.var(0), &r.var(1)).is_ok());
    }

    #[test]
    fn homogeneity() {
        let r = qxy();
        let (x, y) = (r.var(0), r.var(1));
        assert!(r.mul(&x, &y).is_homogeneous());
        assert!(!r.add(&x, &r.mul(&x, &y)).is_homogeneous());
        assert!(r.zero().is_homogeneous());
    }
}
