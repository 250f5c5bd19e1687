//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := ident | int ['/' int] | '(' expr ')'
//! ```

use num::{BigInt, Zero};

use crate::error::{Error, ParseErrorKind, Result};
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

/// Products and powers whose total degree would exceed this are rejected.
pub const MAX_PARSE_DEGREE: u32 = 512;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn describe(t: Option<&(Tok, usize)>) -> String {
    match t {
        None => "end of input".into(),
        Some((Tok::Ident(s), _)) => s.clone(),
        Some((Tok::Int(n), _)) => n.to_string(),
        Some((t, _)) => match t {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::Slash => "/",
            Tok::LParen => "(",
            Tok::RParen => ")",
            _ => unreachable!(),
        }
        .into(),
    }
}

fn err(pos: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { pos, kind }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Tok::Plus, start)),
            b'-' => out.push((Tok::Minus, start)),
            b'*' => out.push((Tok::Star, start)),
            b'^' => out.push((Tok::Caret, start)),
            b'/' => out.push((Tok::Slash, start)),
            b'(' => out.push((Tok::LParen, start)),
            b')' => out.push((Tok::RParen, start)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().expect("nonempty");
                return Err(err(start, ParseErrorKind::UnexpectedChar(ch)));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a PolyRing<F>,
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn expected(&self, what: &'static str) -> Error {
        if self.at >= self.toks.len() {
            return err(self.end, ParseErrorKind::UnexpectedEnd);
        }
        err(self.pos(), ParseErrorKind::Expected { expected: what, found: describe(self.toks.get(self.at)) })
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.at += 1,
            Some(Tok::Minus) => {
                self.at += 1;
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { self.ring.neg(&first) } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let start = self.pos();
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.at += 1;
            let f = self.factor()?;
            acc = checked_mul(self.ring, &acc, &f, start)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let start = self.pos();
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.at += 1;
            let pos = self.pos();
            let k = match self.toks.get(self.at) {
                Some((Tok::Int(n), _)) => n.clone(),
                _ => return Err(self.expected("unsigned integer exponent")),
            };
            self.at += 1;
            let k: u32 = u16::try_from(k).map_err(|_| err(pos, ParseErrorKind::ExponentOverflow))?.into();
            return checked_pow(self.ring, &base, k, start);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let pos = self.pos();
        match self.toks.get(self.at).cloned() {
            Some((Tok::Ident(name), _)) => {
                self.at += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(err(pos, ParseErrorKind::UnknownIdentifier(name))),
                }
            }
            Some((Tok::Int(n), _)) => {
                self.at += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.at += 1;
                    let dpos = self.pos();
                    let d = match self.toks.get(self.at) {
                        Some((Tok::Int(d), _)) => d.clone(),
                        _ => return Err(self.expected("integer denominator")),
                    };
                    self.at += 1;
                    if d.is_zero() {
                        return Err(err(dpos, ParseErrorKind::ZeroDenominator));
                    }
                    let c = self.ring.field().from_ratio(&n, &d).map_err(|e| match e {
                        Error::Parse { kind, .. } => err(dpos, kind),
                        other => other,
                    })?;
                    return Ok(self.ring.constant(c));
                }
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some((Tok::LParen, _)) => {
                self.at += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    _ => Err(self.expected("`)`")),
                }
            }
            _ => Err(self.expected("variable, integer or `(`")),
        }
    }
}

fn max_exponents<F: Field>(p: &Polynomial<F>, n: usize) -> Vec<u32> {
    let mut out = vec![0u32; n];
    for (m, _) in p.terms() {
        for (o, &e) in out.iter_mut().zip(m.exponents()) {
            *o = (*o).max(e as u32);
        }
    }
    out
}

fn checked_mul<F: Field>(ring: &PolyRing<F>, a: &Polynomial<F>, b: &Polynomial<F>, pos: usize) -> Result<Polynomial<F>> {
    let (ea, eb) = (max_exponents(a, ring.nvars()), max_exponents(b, ring.nvars()));
    if ea.iter().zip(&eb).any(|(x, y)| x + y > u16::MAX as u32) {
        return Err(err(pos, ParseErrorKind::ExponentOverflow));
    }
    let deg = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
    if deg > MAX_PARSE_DEGREE && !(a.len() == 1 && b.len() == 1) {
        return Err(err(pos, ParseErrorKind::DegreeLimit(MAX_PARSE_DEGREE)));
    }
    Ok(ring.mul(a, b))
}

fn checked_pow<F: Field>(ring: &PolyRing<F>, a: &Polynomial<F>, k: u32, pos: usize) -> Result<Polynomial<F>> {
    if max_exponents(a, ring.nvars()).iter().any(|&e| e as u64 * k as u64 > u16::MAX as u64) {
        return Err(err(pos, ParseErrorKind::ExponentOverflow));
    }
    if a.len() > 1 && a.degree().unwrap_or(0) as u64 * k as u64 > MAX_PARSE_DEGREE as u64 {
        return Err(err(pos, ParseErrorKind::DegreeLimit(MAX_PARSE_DEGREE)));
    }
    Ok(ring.pow(a, k))
}

/// Parses `text` into a canonical polynomial of `ring`. Error positions are
/// byte offsets into `text`.
pub fn parse_polynomial<F: Field>(text: &str, ring: &PolyRing<F>) -> Result<Polynomial<F>> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, at: 0, end: text.len() };
    if p.toks.is_empty() {
        return Err(err(text.len(), ParseErrorKind::UnexpectedEnd));
    }
    let poly = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.expected("operator or end of input"));
    }
    Ok(poly)
}

impl<F: Field> PolyRing<F> {
    pub fn parse(&self, text: &str) -> Result<Polynomial<F>> {
        parse_polynomial(text, self)
    }
}
