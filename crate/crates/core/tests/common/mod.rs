//! Independent oracles: dense linear algebra over F_p and monomial
//! combinatorics. None of this goes through the Gröbner engine.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use qgor_core::{monomials_of_degree, Field, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals};

pub const P: u64 = 101;

pub fn qring(vars: &[&str]) -> Arc<PolyRing<Rationals>> {
    Arc::new(PolyRing::with_vars(Rationals, vars, MonomialOrder::Grevlex))
}

pub fn pring(p: u64, vars: &[&str]) -> Arc<PolyRing<PrimeField>> {
    Arc::new(PolyRing::with_vars(PrimeField::new(p).unwrap(), vars, MonomialOrder::Grevlex))
}

pub fn polys<F: Field>(r: &PolyRing<F>, texts: &[&str]) -> Vec<Polynomial<F>> {
    texts.iter().map(|t| r.parse(t).unwrap()).collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank of a matrix over F_p by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] % p != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] % p != 0 {
                let k = rows[r][c];
                for j in 0..cols {
                    let sub = k * rows[rank][j] % p;
                    rows[r][j] = (rows[r][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn index_of(monos: &[Monomial]) -> HashMap<Monomial, usize> {
    monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Coefficient rows of all products `m * g` of total degree `degree`.
fn macaulay_rows(gens: &[Polynomial<PrimeField>], nvars: usize, degree: u32) -> (Vec<Vec<u64>>, HashMap<Monomial, usize>) {
    let basis = monomials_of_degree(nvars, degree);
    let idx = index_of(&basis);
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > degree {
            continue;
        }
        for m in monomials_of_degree(nvars, degree - dg) {
            let mut row = vec![0u64; basis.len()];
            for (t, c) in g.terms() {
                row[idx[&t.mul(&m)]] = *c as u64;
            }
            rows.push(row);
        }
    }
    (rows, idx)
}

/// Membership of a homogeneous `f` in the ideal of homogeneous `gens`,
/// decided in the single degree of `f` by linear algebra.
pub fn macaulay_member(gens: &[Polynomial<PrimeField>], f: &Polynomial<PrimeField>, nvars: usize, p: u64) -> bool {
    let Some(d) = f.degree() else { return true };
    let (mut rows, idx) = macaulay_rows(gens, nvars, d);
    let before = rank_mod_p(rows.clone(), p);
    let mut row = vec![0u64; idx.len()];
    for (t, c) in f.terms() {
        row[idx[t]] = *c as u64;
    }
    rows.push(row);
    rank_mod_p(rows, p) == before
}

/// `dim_k (S/I)_d` by linear algebra on the degree-`d` multiples.
pub fn quotient_dim(gens: &[Polynomial<PrimeField>], nvars: usize, d: u32, p: u64) -> usize {
    let (rows, idx) = macaulay_rows(gens, nvars, d);
    idx.len() - if rows.is_empty() { 0 } else { rank_mod_p(rows, p) }
}

/// Whether multiplication by the homogeneous `x` is injective on `(S/I)_d`
/// for every `d <= max_degree`.
pub fn nzd_up_to(gens: &[Polynomial<PrimeField>], x: &Polynomial<PrimeField>, nvars: usize, max_degree: u32, p: u64) -> bool {
    let dx = x.degree().unwrap();
    for d in 0..=max_degree {
        let (ideal_rows, _) = macaulay_rows(gens, nvars, d + dx);
        let (mut rows, idx) = macaulay_rows(gens, nvars, d + dx);
        for m in monomials_of_degree(nvars, d) {
            let mut row = vec![0u64; idx.len()];
            for (t, c) in x.terms() {
                row[idx[&t.mul(&m)]] = *c as u64;
            }
            rows.push(row);
        }
        let r_ideal = if ideal_rows.is_empty() { 0 } else { rank_mod_p(ideal_rows, p) };
        let image = rank_mod_p(rows, p) - r_ideal;
        if image != quotient_dim(gens, nvars, d, p) {
            return false;
        }
    }
    true
}

/// Minimal generators of a monomial ideal.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let dominated = gens.iter().enumerate().any(|(j, h)| h.divides(g) && (h != g || j < i));
        if !dominated {
            out.push(g.clone());
        }
    }
    out.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    out
}

/// `A ∩ B = (lcm(a, b))` for monomial ideals.
pub fn lcm_intersection(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let all: Vec<Monomial> = a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect();
    minimalize(&all)
}

/// Krull dimension of `S/(gens)` for a monomial ideal: the largest set of
/// variables containing the support of no generator, by exhaustive search.
pub fn monomial_dimension(gens: &[Monomial], nvars: usize) -> i32 {
    if gens.iter().any(|g| g.is_one()) {
        return -1;
    }
    let mut best = 0;
    for set in 0u32..(1 << nvars) {
        let free = |g: &Monomial| g.support().all(|i| set & (1 << i) != 0);
        if !gens.iter().any(free) {
            best = best.max(set.count_ones() as i32);
        }
    }
    best
}

/// `Soc(S/I)` for an m-primary monomial ideal: standard monomials `u`
/// with `x_i u ∈ I` for every `i`.
pub fn monomial_socle(gens: &[Monomial], nvars: usize) -> usize {
    let in_ideal = |m: &Monomial| gens.iter().any(|g| g.divides(m));
    let top: u32 = gens.iter().map(|g| g.degree()).sum::<u32>() + 1;
    let mut count = 0;
    for d in 0..=top {
        for u in monomials_of_degree(nvars, d) {
            if !in_ideal(&u) && (0..nvars).all(|i| in_ideal(&u.mul(&Monomial::variable(nvars, i)))) {
                count += 1;
            }
        }
    }
    count
}

/// Total Betti numbers of `S/I` for a monomial ideal from the Taylor
/// complex: `β_i = Σ_b dim H_i(T ⊗ k)_b`, where only faces with
/// `lcm = b` survive in multidegree `b`.
pub fn taylor_betti(gens: &[Monomial]) -> Vec<usize> {
    let r = gens.len();
    let nvars = gens.first().map_or(0, |g| g.nvars());
    let lcm_of = |mask: u32| -> Monomial {
        (0..r).filter(|i| mask & (1 << i) != 0).fold(Monomial::one(nvars), |acc, i| acc.lcm(&gens[i]))
    };
    let mut by_lcm: BTreeMap<Vec<u16>, Vec<u32>> = BTreeMap::new();
    for mask in 0u32..(1 << r) {
        by_lcm.entry(lcm_of(mask).exponents().to_vec()).or_default().push(mask);
    }
    let mut betti = vec![0usize; r + 1];
    for faces in by_lcm.values() {
        let of_size = |k: usize| -> Vec<u32> { faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect() };
        // rank of d_k: C_k -> C_{k-1}
        let rank_d = |k: usize| -> usize {
            if k == 0 {
                return 0;
            }
            let (src, dst) = (of_size(k), of_size(k - 1));
            if src.is_empty() || dst.is_empty() {
                return 0;
            }
            let rows: Vec<Vec<u64>> = src
                .iter()
                .map(|&f| {
                    let mut row = vec![0u64; dst.len()];
                    let mut sign = 0;
                    for i in 0..r {
                        if f & (1 << i) != 0 {
                            if let Some(pos) = dst.iter().position(|&g| g == f & !(1 << i)) {
                                row[pos] = if sign % 2 == 0 { 1 } else { P - 1 };
                            }
                            sign += 1;
                        }
                    }
                    row
                })
                .collect();
            rank_mod_p(rows, P)
        };
        for k in 0..=r {
            let c = of_size(k).len();
            betti[k] += c - rank_d(k) - rank_d(k + 1);
        }
    }
    while betti.len() > 1 && *betti.last().unwrap() == 0 {
        betti.pop();
    }
    betti
}

/// All monomials of `K[x, y]` of degree `1..=max_degree`.
pub fn bivariate_monomials(max_degree: u16) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        for a in 0..=d {
            out.push(Monomial::new([a, d - a]));
        }
    }
    out
}

/// Every m-primary monomial ideal of `K[x, y]` whose minimal generators have
/// degree at most `max_degree`, as sorted minimal generating sets.
pub fn bivariate_mprimary_ideals(max_degree: u16) -> Vec<Vec<Monomial>> {
    // minimal generating sets are staircases x^{a_0} > ... with a strictly
    // decreasing and b strictly increasing; enumerate all antichains
    let monos = bivariate_monomials(max_degree);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(monos: &[Monomial], start: usize, current: &mut Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
        let has_x = current.iter().any(|m| m.exponent(1) == 0);
        let has_y = current.iter().any(|m| m.exponent(0) == 0);
        if has_x && has_y {
            out.push(current.clone());
        }
        for i in start..monos.len() {
            let m = &monos[i];
            if current.iter().any(|c| c.divides(m) || m.divides(c)) {
                continue;
            }
            current.push(m.clone());
            rec(monos, i + 1, current, out);
            current.pop();
        }
    }
    rec(&monos, 0, &mut current, &mut out);
    out
}
