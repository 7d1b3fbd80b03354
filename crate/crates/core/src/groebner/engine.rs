//! Buchberger's algorithm on vectors of a free module `P^r`. Ideals are the
//! rank one case.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::monomial::{Monomial, MonomialOrder};

static PAIR_BUDGET: AtomicU64 = AtomicU64::new(2_000_000);

/// Maximum number of critical pairs a single Gröbner basis computation may
/// process before failing with [`Error::ResourceLimit`].
pub fn pair_budget() -> u64 {
    LOCAL_BUDGET.with(|b| b.get()).unwrap_or_else(|| PAIR_BUDGET.load(AtomicOrdering::Relaxed))
}

thread_local! {
    static LOCAL_BUDGET: std::cell::Cell<Option<u64>> = const { std::cell::Cell::new(None) };
}

/// Runs `f` with a pair budget that applies to the current thread only.
pub fn with_pair_budget<T>(n: u64, f: impl FnOnce() -> T) -> T {
    let prev = LOCAL_BUDGET.with(|b| b.replace(Some(n.max(1))));
    let out = f();
    LOCAL_BUDGET.with(|b| b.set(prev));
    out
}

pub fn set_pair_budget(n: u64) {
    PAIR_BUDGET.store(n.max(1), AtomicOrdering::Relaxed);
}

pub(crate) type Term = (Monomial, u32, FieldElement);

/// Module term order: block of the component first, then either position
/// over term or (shifted degree, monomial, position).
#[derive(Clone, Debug)]
pub(crate) struct ModOrder {
    pub mono: MonomialOrder,
    pub shifts: Vec<i32>,
    pub blocks: Vec<u32>,
    pub pot: bool,
}

impl ModOrder {
    pub fn ideal(mono: MonomialOrder) -> ModOrder {
        ModOrder { mono, shifts: vec![0], blocks: vec![0], pot: false }
    }

    pub fn top(mono: MonomialOrder, shifts: Vec<i32>) -> ModOrder {
        let blocks = vec![0; shifts.len()];
        ModOrder { mono, shifts, blocks, pot: false }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    #[inline]
    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        let (ma, ca) = a;
        let (mb, cb) = b;
        let (ba, bb) = (self.blocks[ca as usize], self.blocks[cb as usize]);
        if ba != bb {
            return bb.cmp(&ba);
        }
        if self.pot {
            if ca != cb {
                return cb.cmp(&ca);
            }
            return self.mono.cmp(ma, mb);
        }
        if self.mono.is_graded() {
            let da = ma.degree() as i64 + self.shifts[ca as usize] as i64;
            let db = mb.degree() as i64 + self.shifts[cb as usize] as i64;
            if da != db {
                return da.cmp(&db);
            }
        }
        match self.mono.cmp(ma, mb) {
            Ordering::Equal => cb.cmp(&ca),
            o => o,
        }
    }

    fn tcmp(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp((&a.0, a.1), (&b.0, b.1))
    }

    pub fn sort(&self, terms: &mut [Term]) {
        terms.sort_by(|a, b| self.tcmp(b, a));
    }
}

/// A vector in `P^r` as a descending list of terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn from_terms(field: &FieldSpec, ord: &ModOrder, mut terms: Vec<Term>) -> Vector {
        ord.sort(&mut terms);
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = field.add(&last.2, &t.2),
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.2));
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn monic(&self, field: &FieldSpec) -> Vector {
        if self.terms.is_empty() {
            return self.clone();
        }
        let inv = field.inv(&self.terms[0].2).unwrap();
        if field.is_one(&inv) {
            return self.clone();
        }
        Vector { terms: self.terms.iter().map(|(m, c, a)| (m.clone(), *c, field.mul(a, &inv))).collect() }
    }

    pub fn scale(&self, field: &FieldSpec, c: &FieldElement) -> Vector {
        if field.is_zero(c) {
            return Vector::zero();
        }
        Vector { terms: self.terms.iter().map(|(m, k, a)| (m.clone(), *k, field.mul(a, c))).collect() }
    }

    /// `self * m`; monomial multiplication preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<Vector> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c, a) in &self.terms {
            terms.push((t.mul(m)?, *c, a.clone()));
        }
        Ok(Vector { terms })
    }

    /// Highest shifted degree among the terms.
    pub fn sugar(&self, ord: &ModOrder) -> i64 {
        self.terms.iter().map(|(m, c, _)| m.degree() as i64 + ord.shifts[*c as usize] as i64).max().unwrap_or(0)
    }
}

/// `a + scale * b`.
pub(crate) fn add_scaled(field: &FieldSpec, ord: &ModOrder, a: &[Term], b: &[Term], scale: &FieldElement) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.tcmp(&a[i], &b[j]) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), b[j].1, field.mul(&b[j].2, scale)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].2, &field.mul(&b[j].2, scale));
                if !field.is_zero(&c) {
                    out.push((a[i].0.clone(), a[i].1, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, k, c)| (m.clone(), *k, field.mul(c, scale))));
    out
}

pub(crate) fn add(field: &FieldSpec, ord: &ModOrder, a: &Vector, b: &Vector) -> Vector {
    Vector { terms: add_scaled(field, ord, &a.terms, &b.terms, &field.one()) }
}

pub(crate) fn sub(field: &FieldSpec, ord: &ModOrder, a: &Vector, b: &Vector) -> Vector {
    Vector { terms: add_scaled(field, ord, &a.terms, &b.terms, &field.neg(&field.one())) }
}

/// Index of a basis element whose leading term divides `(m, comp)`.
fn find_divisor(basis: &[Vector], m: &Monomial, comp: u32) -> Option<usize> {
    basis.iter().position(|g| {
        let (lm, lc, _) = g.lead();
        *lc == comp && lm.divides(m)
    })
}

/// Reduces `f` against `basis` (assumed monic). With `full`, every term is
/// reduced; otherwise only the leading term.
pub(crate) fn reduce(field: &FieldSpec, ord: &ModOrder, f: &Vector, basis: &[Vector], full: bool) -> Result<Vector> {
    let mut rest: Vec<Term> = f.terms.clone();
    let mut done: Vec<Term> = Vec::new();
    let mut start = 0;
    loop {
        let mut hit = None;
        for idx in start..rest.len() {
            let (m, c, _) = &rest[idx];
            if let Some(g) = find_divisor(basis, m, *c) {
                hit = Some((idx, g));
                break;
            }
            if !full {
                break;
            }
        }
        match hit {
            None => break,
            Some((idx, g)) => {
                let (m, _, c) = rest[idx].clone();
                let q = m.div(&basis[g].lead().0);
                let shifted = basis[g].mul_monomial(&q)?;
                let neg = field.neg(&c);
                // terms before idx are irreducible and larger than everything in `shifted`
                done.extend(rest.drain(..idx));
                rest = add_scaled(field, ord, &rest, &shifted.terms, &neg);
                start = 0;
            }
        }
    }
    done.extend(rest);
    Ok(Vector { terms: done })
}

/// Division with quotient tracking: returns `(quotients, remainder)` with
/// `f = sum q_i * basis_i + remainder` where each `q_i` is a list of
/// scaled monomials.
pub(crate) fn divide(
    field: &FieldSpec,
    ord: &ModOrder,
    f: &Vector,
    basis: &[Vector],
) -> Result<(Vec<Vec<(Monomial, FieldElement)>>, Vector)> {
    let mut quotients = vec![Vec::new(); basis.len()];
    let mut rest: Vec<Term> = f.terms.clone();
    let mut done: Vec<Term> = Vec::new();
    while !rest.is_empty() {
        let (m, comp, c) = rest[0].clone();
        match find_divisor(basis, &m, comp) {
            Some(g) => {
                let (lm, _, lc) = basis[g].lead();
                let q = m.div(lm);
                let coef = field.div(&c, lc)?;
                let shifted = basis[g].mul_monomial(&q)?;
                rest = add_scaled(field, ord, &rest, &shifted.terms, &field.neg(&coef));
                quotients[g].push((q, coef));
            }
            None => done.push(rest.remove(0)),
        }
    }
    Ok((quotients, Vector { terms: done }))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i64,
}

fn s_vector(field: &FieldSpec, ord: &ModOrder, f: &Vector, g: &Vector, lcm: &Monomial) -> Result<Vector> {
    let (fm, _, fc) = f.lead();
    let (gm, _, gc) = g.lead();
    let a = f.mul_monomial(&lcm.div(fm))?.scale(field, &field.inv(fc)?);
    let b = g.mul_monomial(&lcm.div(gm))?.scale(field, &field.inv(gc)?);
    Ok(sub(field, ord, &a, &b))
}

fn pair_sugar(ord: &ModOrder, sugars: &[i64], basis: &[Vector], i: usize, j: usize, lcm: &Monomial) -> i64 {
    let di = lcm.degree() as i64 - basis[i].lead().0.degree() as i64;
    let dj = lcm.degree() as i64 - basis[j].lead().0.degree() as i64;
    let _ = ord;
    (sugars[i] + di).max(sugars[j] + dj)
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub(crate) fn groebner(field: &FieldSpec, ord: &ModOrder, gens: &[Vector]) -> Result<Vec<Vector>> {
    let budget = pair_budget();
    let ideal_case = ord.rank() == 1;
    let mut basis: Vec<Vector> = Vec::new();
    let mut sugars: Vec<i64> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(field)).collect();
    input.sort_by(|a, b| {
        a.sugar(ord).cmp(&b.sugar(ord)).then_with(|| ord.tcmp(a.lead(), b.lead()))
    });

    let mut processed: u64 = 0;
    let mut queue_inputs = input.into_iter();
    loop {
        // feed inputs whose sugar does not exceed the cheapest pair
        let next_pair_sugar = pairs.iter().map(|p| p.sugar).min();
        let mut candidate: Option<(Vector, i64)> = None;
        if let Some(g) = queue_inputs.as_slice().first() {
            if next_pair_sugar.map_or(true, |s| g.sugar(ord) <= s) {
                let g = queue_inputs.next().unwrap();
                let s = g.sugar(ord);
                candidate = Some((g, s));
            }
        }
        if candidate.is_none() {
            if pairs.is_empty() {
                if queue_inputs.as_slice().is_empty() {
                    break;
                }
                continue;
            }
            processed += 1;
            if processed > budget {
                return Err(Error::ResourceLimit(format!("Gröbner basis exceeded the budget of {budget} pairs")));
            }
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    pairs[a]
                        .sugar
                        .cmp(&pairs[b].sugar)
                        .then_with(|| ord.mono.cmp(&pairs[a].lcm, &pairs[b].lcm))
                        .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
                })
                .unwrap();
            let p = pairs.swap_remove(best);
            let s = s_vector(field, ord, &basis[p.i], &basis[p.j], &p.lcm)?;
            candidate = Some((s, p.sugar));
        }
        let (vec, sugar) = candidate.unwrap();
        let h = reduce(field, ord, &vec, &basis, false)?;
        if h.is_zero() {
            continue;
        }
        let h = reduce(field, ord, &h, &basis, true)?.monic(field);
        let sugar = sugar.max(h.sugar(ord));
        let hidx = basis.len();
        let (hm, hc, _) = h.lead().clone();
        basis.push(h);
        sugars.push(sugar);
        active.push(true);

        // Gebauer-Möller update
        let mut new_pairs: Vec<(Pair, bool)> = Vec::new();
        for g in 0..hidx {
            if !active[g] || basis[g].lead().1 != hc {
                continue;
            }
            let lcm = basis[g].lead().0.lcm(&hm);
            let coprime = ideal_case && basis[g].lead().0.is_coprime(&hm);
            let s = pair_sugar(ord, &sugars, &basis, g, hidx, &lcm);
            new_pairs.push((Pair { i: g, j: hidx, lcm, sugar: s }, coprime));
        }
        // criterion B on old pairs
        pairs.retain(|p| {
            if !hm.divides(&p.lcm) || basis[p.i].lead().1 != hc {
                return true;
            }
            let li = basis[p.i].lead().0.lcm(&hm);
            let lj = basis[p.j].lead().0.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        // criterion M: drop pairs whose lcm is a proper multiple of another new lcm
        let lcms: Vec<Monomial> = new_pairs.iter().map(|(p, _)| p.lcm.clone()).collect();
        let mut keep: Vec<bool> = vec![true; new_pairs.len()];
        for a in 0..new_pairs.len() {
            for b in 0..new_pairs.len() {
                if a != b && lcms[b].divides(&lcms[a]) && lcms[b] != lcms[a] {
                    keep[a] = false;
                    break;
                }
            }
        }
        // criterion F: one pair per lcm; drop the class if any member is coprime
        let mut chosen: Vec<Pair> = Vec::new();
        {
            let mut groups: Vec<(Monomial, Vec<usize>)> = Vec::new();
            for (idx, k) in keep.iter().enumerate() {
                if !*k {
                    continue;
                }
                match groups.iter_mut().find(|(l, _)| *l == lcms[idx]) {
                    Some((_, v)) => v.push(idx),
                    None => groups.push((lcms[idx].clone(), vec![idx])),
                }
            }
            for (_, members) in groups {
                let any_coprime = members.iter().any(|&m| new_pairs[m].1);
                if !any_coprime {
                    chosen.push(new_pairs[members[0]].0.clone());
                }
            }
        }
        pairs.extend(chosen);
        // elements whose leading term is now divisible by lm(h) take no further pairs
        for g in 0..hidx {
            if active[g] && basis[g].lead().1 == hc && hm.divides(&basis[g].lead().0) {
                active[g] = false;
            }
        }
    }

    // minimalize and interreduce
    let mut lead: Vec<Vector> = Vec::new();
    let mut cands: Vec<Vector> = basis;
    cands.sort_by(|a, b| ord.tcmp(a.lead(), b.lead()));
    for g in cands {
        let (m, c, _) = g.lead();
        if find_divisor(&lead, m, *c).is_none() {
            lead.retain(|h| !(h.lead().1 == *c && m.divides(&h.lead().0)));
            lead.push(g);
        }
    }
    let mut out = Vec::with_capacity(lead.len());
    for i in 0..lead.len() {
        let others: Vec<Vector> = lead.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let head = Vector { terms: vec![lead[i].terms[0].clone()] };
        let tail = Vector { terms: lead[i].terms[1..].to_vec() };
        let tail = reduce(field, ord, &tail, &others, true)?;
        out.push(add(field, ord, &head, &tail).monic(field));
    }
    out.sort_by(|a, b| ord.tcmp(a.lead(), b.lead()));
    Ok(out)
}

/// Buchberger criterion: every S-vector of two basis elements with leading
/// terms in the same component reduces to zero.
pub(crate) fn is_groebner(field: &FieldSpec, ord: &ModOrder, basis: &[Vector]) -> Result<bool> {
    let monic: Vec<Vector> = basis.iter().map(|g| g.monic(field)).collect();
    for i in 0..monic.len() {
        for j in (i + 1)..monic.len() {
            if monic[i].lead().1 != monic[j].lead().1 {
                continue;
            }
            let lcm = monic[i].lead().0.lcm(&monic[j].lead().0);
            let s = s_vector(field, ord, &monic[i], &monic[j], &lcm)?;
            if !reduce(field, ord, &s, &monic, false)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
