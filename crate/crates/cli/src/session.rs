//! Session files: semicolon-terminated `ring`, `ideal` and `seq` declarations.
//!
//! ```text
//! ring R = F32003[X,Y,Z,T] grevlex;
//! ideal I = X*Y, X*T, Z*Y, Z*T;
//! seq s = X+Y, Z+T;
//! ```
//!
//! `ideal` and `seq` declarations belong to the most recently declared ring.
//! `#` and `//` start comments running to the end of the line.

use std::fmt;
use std::sync::Arc;

use qgor_core::{Field, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals};

/// 1-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Loc {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{loc}: {message}")]
pub struct SessionError {
    pub loc: Loc,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub name: String,
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
    pub loc: Loc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListKind {
    Ideal,
    Seq,
}

/// An `ideal` or `seq` declaration; polynomials are kept as validated text
/// and re-parsed in the typed ring on use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListDecl {
    pub name: String,
    pub kind: ListKind,
    pub ring: String,
    pub items: Vec<String>,
    pub loc: Loc,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Session {
    pub rings: Vec<RingDecl>,
    pub lists: Vec<ListDecl>,
}

impl Session {
    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn ring(&self, name: &str) -> Option<&RingDecl> {
        self.rings.iter().find(|r| r.name == name)
    }

    pub fn list(&self, name: &str) -> Option<&ListDecl> {
        self.lists.iter().find(|l| l.name == name)
    }

    /// Ideals and sequences declared for `ring`, in order.
    pub fn lists_of<'a>(&'a self, ring: &'a str, kind: ListKind) -> impl Iterator<Item = &'a ListDecl> + 'a {
        self.lists.iter().filter(move |l| l.ring == ring && l.kind == kind)
    }
}

/// Polynomial ring of a declaration, typed by its coefficient field.
pub enum AnyRing {
    Q(Arc<PolyRing<Rationals>>),
    P(Arc<PolyRing<PrimeField>>),
}

impl RingDecl {
    pub fn build(&self) -> AnyRing {
        let vars = self.vars.clone();
        match self.field {
            FieldSpec::Rationals => AnyRing::Q(Arc::new(PolyRing::new(Rationals, vars, self.order).expect("validated"))),
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p as u64).expect("validated");
                AnyRing::P(Arc::new(PolyRing::new(f, vars, self.order).expect("validated")))
            }
        }
    }
}

impl ListDecl {
    pub fn polys<F: Field>(&self, ring: &PolyRing<F>) -> Vec<Polynomial<F>> {
        self.items.iter().map(|t| ring.parse(t).expect("validated")).collect()
    }
}

struct Source<'a> {
    text: &'a str,
    line_starts: Vec<usize>,
}

impl<'a> Source<'a> {
    fn new(text: &'a str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        Self { text, line_starts }
    }

    fn loc(&self, offset: usize) -> Loc {
        let line = self.line_starts.partition_point(|&s| s <= offset);
        let start = self.line_starts[line - 1];
        Loc { line, col: self.text[start..offset.min(self.text.len())].chars().count() + 1 }
    }

    fn err(&self, offset: usize, message: impl Into<String>) -> SessionError {
        SessionError { loc: self.loc(offset), message: message.into() }
    }
}

/// Blanks out comments, keeping byte offsets intact.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for line in text.split_inclusive('\n') {
        let cut = [line.find('#'), line.find("//")].into_iter().flatten().min();
        match cut {
            Some(c) => {
                out.push_str(&line[..c]);
                for ch in line[c..].chars() {
                    if ch == '\n' {
                        out.push('\n');
                    } else {
                        // same byte length keeps later offsets valid
                        out.extend(std::iter::repeat(' ').take(ch.len_utf8()));
                    }
                }
            }
            None => out.push_str(line),
        }
    }
    out
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `(text, offset)` of the trimmed slice `s[range]`.
fn trimmed(s: &str, start: usize, end: usize) -> (&str, usize) {
    let raw = &s[start..end];
    let lead = raw.len() - raw.trim_start().len();
    (raw.trim(), start + lead)
}

pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let src = Source::new(text);
    let clean = strip_comments(text);
    let mut session = Session::default();
    let mut seen: Vec<(String, Loc)> = Vec::new();
    let mut start = 0;
    while start < clean.len() {
        let Some(rel) = clean[start..].find(';') else {
            let (rest, off) = trimmed(&clean, start, clean.len());
            if !rest.is_empty() {
                return Err(src.err(off, "declaration is missing its terminating `;`"));
            }
            break;
        };
        let end = start + rel;
        let (stmt, off) = trimmed(&clean, start, end);
        start = end + 1;
        if stmt.is_empty() {
            continue;
        }
        let kw_len = stmt.find(|c: char| c.is_whitespace()).unwrap_or(stmt.len());
        let keyword = &stmt[..kw_len];
        let Some(eq) = stmt.find('=') else {
            return Err(src.err(off, format!("expected `{keyword} NAME = ...`")));
        };
        let (name, name_off) = trimmed(&clean, off + kw_len.min(eq), off + eq);
        if !matches!(keyword, "ring" | "ideal" | "seq") {
            return Err(src.err(off, format!("unknown declaration `{keyword}`; expected ring, ideal or seq")));
        }
        if !is_ident(name) {
            return Err(src.err(name_off, format!("invalid name `{name}`")));
        }
        let loc = src.loc(name_off);
        if let Some((_, first)) = seen.iter().find(|(n, _)| n == name) {
            return Err(src.err(name_off, format!("duplicate name `{name}` (first declared at {first})")));
        }
        seen.push((name.to_string(), loc));
        let body_off = off + eq + 1;
        match keyword {
            "ring" => session.rings.push(parse_ring(&src, &clean, name, loc, body_off, end)?),
            _ => {
                let Some(ring) = session.rings.last() else {
                    return Err(src.err(off, format!("`{name}` is declared before any ring")));
                };
                let kind = if keyword == "ideal" { ListKind::Ideal } else { ListKind::Seq };
                let items = parse_items(&src, &clean, ring, body_off, end)?;
                session.lists.push(ListDecl { name: name.to_string(), kind, ring: ring.name.clone(), items, loc });
            }
        }
    }
    Ok(session)
}

fn parse_ring(src: &Source, clean: &str, name: &str, loc: Loc, start: usize, end: usize) -> Result<RingDecl, SessionError> {
    let (body, off) = trimmed(clean, start, end);
    let (Some(open), Some(close)) = (body.find('['), body.rfind(']')) else {
        return Err(src.err(off, "expected FIELD[v1, ..., vk]"));
    };
    if close < open {
        return Err(src.err(off + close, "unbalanced brackets"));
    }
    let field_text = body[..open].trim();
    let field = match field_text {
        "Q" | "QQ" => FieldSpec::Rationals,
        f if f.starts_with('F') && f.len() > 1 => {
            let p: u64 = f[1..].parse().map_err(|_| src.err(off, format!("invalid field `{f}`")))?;
            let pf = PrimeField::new(p).map_err(|e| src.err(off, e.to_string()))?;
            FieldSpec::Prime(pf.modulus())
        }
        f => return Err(src.err(off, format!("invalid field `{f}`; expected Q or Fp"))),
    };
    let mut vars: Vec<String> = Vec::new();
    let mut pos = off + open + 1;
    for part in body[open + 1..close].split(',') {
        let (v, v_off) = trimmed(clean, pos, pos + part.len());
        pos += part.len() + 1;
        if v.is_empty() && vars.is_empty() && body[open + 1..close].trim().is_empty() {
            break;
        }
        if !is_ident(v) {
            return Err(src.err(v_off, format!("invalid variable name `{v}`")));
        }
        if vars.iter().any(|w| w == v) {
            return Err(src.err(v_off, format!("variable `{v}` repeated")));
        }
        vars.push(v.to_string());
    }
    if vars.len() > qgor_core::ring::MAX_VARS {
        return Err(src.err(off, format!("at most {} variables are supported", qgor_core::ring::MAX_VARS)));
    }
    let order = match body[close + 1..].trim() {
        "" | "grevlex" => MonomialOrder::Grevlex,
        "lex" => MonomialOrder::Lex,
        o => return Err(src.err(off + close + 1, format!("unknown monomial order `{o}`; expected grevlex or lex"))),
    };
    let decl = RingDecl { name: name.to_string(), field, vars, order, loc };
    Ok(decl)
}

fn parse_items(src: &Source, clean: &str, ring: &RingDecl, start: usize, end: usize) -> Result<Vec<String>, SessionError> {
    let built = ring.build();
    let mut items = Vec::new();
    let body = &clean[start..end];
    if body.trim().is_empty() {
        return Ok(items);
    }
    let mut pos = start;
    for part in body.split(',') {
        let (item, item_off) = trimmed(clean, pos, pos + part.len());
        pos += part.len() + 1;
        if item.is_empty() {
            return Err(src.err(item_off, "empty polynomial"));
        }
        let res = match &built {
            AnyRing::Q(r) => r.parse(item).map(|_| ()),
            AnyRing::P(r) => r.parse(item).map(|_| ()),
        };
        if let Err(e) = res {
            let at = match &e {
                qgor_core::Error::Parse { pos, .. } => item_off + pos,
                _ => item_off,
            };
            let msg = match e {
                qgor_core::Error::Parse { kind, .. } => kind.to_string(),
                other => other.to_string(),
            };
            return Err(src.err(at, msg));
        }
        items.push(item.to_string());
    }
    Ok(items)
}
