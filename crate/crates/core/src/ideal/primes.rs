//! Minimal primes by recursive splitting: factorable basis elements first,
//! then reduction to a zero-dimensional ideal over the fraction field of a
//! maximal independent set, whose eliminant along a generic linear form
//! is factored.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor::{factor_over_function_field, factor_univariate};
use crate::field::{FieldElement, FieldSpec};
use crate::groebner::buchberger;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{Ring, RingCtx};
use crate::unipoly::UniPoly;

use super::{fresh_name, intersect_ambient, max_independent_set, saturate_ambient, Ideal};

/// The minimal primes of an ideal, sorted by their reduced Gröbner bases.
#[derive(Clone, Debug)]
pub struct PrimeList {
    primes: Vec<Ideal>,
    field: FieldSpec,
}

impl PrimeList {
    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The primes of maximal dimension, with that dimension.
    pub fn top_dimensional(&self) -> Result<(usize, Vec<Ideal>)> {
        let dims: Vec<usize> = self.primes.iter().map(|p| p.dimension()).collect::<Result<_>>()?;
        let d = dims.iter().copied().max().unwrap_or(0);
        Ok((d, self.primes.iter().zip(&dims).filter(|(_, &e)| e == d).map(|(p, _)| p.clone()).collect()))
    }
}

const NODE_BUDGET: usize = 400;
const GENERIC_ATTEMPTS: usize = 6;
const SPECIALIZATIONS: usize = 8;

struct Ctx {
    ring: Ring,
    rng: ChaCha8Rng,
    nodes: usize,
}

pub(super) fn minimal_primes(ideal: &Ideal) -> Result<PrimeList> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let work = ideal.ring().ambient().with_order(MonomialOrder::GrevLex);
    let gens: Vec<Polynomial> = ideal.ambient_generators().iter().map(|g| g.change_ring(&work)).collect::<Result<_>>()?;
    let mut ctx = Ctx { ring: work.clone(), rng: ChaCha8Rng::seed_from_u64(0x9e3779b9), nodes: 0 };
    let found = decompose(&mut ctx, gens, 0)?;
    let pruned = prune(&work, found)?;
    let target = ideal.ring();
    let amb = target.ambient();
    let mut primes = Vec::with_capacity(pruned.len());
    for gens in pruned {
        let mapped: Vec<Polynomial> = gens
            .iter()
            .map(|g| g.change_ring(&amb).map(|p| Polynomial::from_terms(target, p.terms().to_vec())))
            .collect::<Result<_>>()?;
        primes.push(Ideal::new(target, mapped)?);
    }
    let mut keyed: Vec<(Vec<String>, Ideal)> = primes.into_iter().map(|p| Ok((p.canonical_strings()?, p))).collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(PrimeList { primes: keyed.into_iter().map(|(_, p)| p).collect(), field: target.field().clone() })
}

fn gb(ring: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    Ok(buchberger(ring, gens)?.ambient_basis().to_vec())
}

fn reduces_to_zero(ring: &Ring, basis: &[Polynomial], f: &Polynomial) -> Result<bool> {
    buchberger(ring, basis)?.contains(f)
}

/// Removes duplicates and primes containing another listed prime.
fn prune(ring: &Ring, found: Vec<Vec<Polynomial>>) -> Result<Vec<Vec<Polynomial>>> {
    let mut uniq: Vec<Vec<Polynomial>> = Vec::new();
    for p in found {
        let p = gb(ring, &p)?;
        if !uniq.contains(&p) {
            uniq.push(p);
        }
    }
    let mut keep = Vec::new();
    'outer: for (i, p) in uniq.iter().enumerate() {
        for (j, q) in uniq.iter().enumerate() {
            if i != j && contained(ring, q, p)? {
                continue 'outer;
            }
        }
        keep.push(p.clone());
    }
    Ok(keep)
}

/// `a ⊆ b` for Gröbner bases `a`, `b`.
fn contained(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let gb_b = buchberger(ring, b)?;
    for g in a {
        if !gb_b.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn decompose(ctx: &mut Ctx, gens: Vec<Polynomial>, depth: usize) -> Result<Vec<Vec<Polynomial>>> {
    ctx.nodes += 1;
    if ctx.nodes > NODE_BUDGET || depth > 60 {
        return Err(Error::DecompositionIncomplete("splitting budget exhausted".into()));
    }
    let ring = ctx.ring.clone();
    let basis = gb(&ring, &gens)?;
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(Vec::new());
    }
    if let Some(parts) = split_by_factor(&ring, &basis)? {
        let mut out = Vec::new();
        for extra in parts {
            let mut g = basis.clone();
            g.push(extra);
            out.extend(decompose(ctx, g, depth + 1)?);
        }
        return Ok(out);
    }
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
    let u = max_independent_set(ring.nvars(), &lms);
    let x: Vec<usize> = (0..ring.nvars()).filter(|i| !u.contains(i)).collect();
    let fibre = Fibre::new(&ring, &x, &u)?;
    let block = fibre.block_basis(&basis)?;
    let h = fibre.leading_coefficient_product(&block)?;
    let mut out = Vec::new();
    let sat = if h.is_constant() {
        basis
    } else {
        let sat = gb(&ring, &saturate_ambient(&ring, &basis, &h)?)?;
        let mut with_h = basis.clone();
        with_h.push(h.clone());
        out.extend(decompose(ctx, with_h, depth + 1)?);
        sat
    };
    out.extend(analyze_saturated(ctx, &fibre, sat, depth)?);
    Ok(out)
}

/// One of the ideals obtained by adjoining a factor of a basis element
/// whose factorization is cheap to find.
fn split_by_factor(ring: &Ring, basis: &[Polynomial]) -> Result<Option<Vec<Polynomial>>> {
    let k = ring.field();
    for g in basis {
        let content = g.monomial_content().unwrap();
        if !content.is_one() {
            let mut parts: Vec<Polynomial> = content.support().map(|i| ring.var(i)).collect();
            let rest = g.exact_div(&Polynomial::monomial(ring, content.clone(), k.one()))?.unwrap();
            if !rest.is_constant() {
                parts.push(rest);
            }
            if parts.len() > 1 || parts[0] != *g {
                return Ok(Some(parts));
            }
            continue;
        }
        let support = g.support();
        if support.len() == 1 && g.total_degree().unwrap() >= 2 {
            let v = support[0];
            let uni = to_univariate(g, v);
            let fs = factor_univariate(k, &uni)?;
            if fs.len() > 1 || fs[0].1 > 1 {
                return Ok(Some(fs.iter().map(|(h, _)| from_univariate(ring, h, v)).collect()));
            }
        }
        if support.len() == 2 && g.is_homogeneous() && g.total_degree().unwrap() >= 2 {
            let (a, b) = (support[0], support[1]);
            let uni = to_univariate(g, a);
            let fs = factor_univariate(k, &uni)?;
            if fs.len() > 1 || fs[0].1 > 1 {
                return Ok(Some(fs.iter().map(|(h, _)| homogenize(ring, h, a, b)).collect()));
            }
        }
    }
    Ok(None)
}

/// Coefficients in variable `v`, other variables set to 1.
fn to_univariate(g: &Polynomial, v: usize) -> UniPoly {
    let k = g.field();
    let deg = g.terms().iter().map(|(m, _)| m.exp(v) as usize).max().unwrap_or(0);
    let mut coeffs = vec![k.zero(); deg + 1];
    for (m, c) in g.terms() {
        let e = m.exp(v) as usize;
        coeffs[e] = k.add(&coeffs[e], c);
    }
    UniPoly::new(k, coeffs)
}

fn from_univariate(ring: &Ring, h: &UniPoly, v: usize) -> Polynomial {
    let n = ring.nvars();
    let terms = h
        .coeffs
        .iter()
        .enumerate()
        .map(|(e, c)| {
            let mut exps = vec![0u32; n];
            exps[v] = e as u32;
            (Monomial::new(&exps).unwrap(), c.clone())
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn homogenize(ring: &Ring, h: &UniPoly, a: usize, b: usize) -> Polynomial {
    let n = ring.nvars();
    let d = h.degree().unwrap();
    let terms = h
        .coeffs
        .iter()
        .enumerate()
        .map(|(e, c)| {
            let mut exps = vec![0u32; n];
            exps[a] = e as u32;
            exps[b] = (d - e) as u32;
            (Monomial::new(&exps).unwrap(), c.clone())
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Views `k[U, X]` as `k(U)[X]`: a ring with the `X` block first and a
/// second ring with an extra variable `T` between the blocks.
struct Fibre {
    ring: Ring,
    x: Vec<usize>,
    u: Vec<usize>,
    block: Ring,
    to_block: Vec<usize>,
    elim: Ring,
    to_elim: Vec<usize>,
    /// `k[T, U]` with `T` eliminated last.
    line: Ring,
}

impl Fibre {
    fn new(ring: &Ring, x: &[usize], u: &[usize]) -> Result<Fibre> {
        let names = ring.names();
        let order: Vec<usize> = x.iter().chain(u).copied().collect();
        let block_names: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        let block = RingCtx::new(&block_names, ring.field().clone(), MonomialOrder::Block(vec![x.len(), u.len()]))?;
        let mut to_block = vec![0; ring.nvars()];
        for (pos, &i) in order.iter().enumerate() {
            to_block[i] = pos;
        }
        let t = fresh_name(ring, "_z");
        let mut elim_names: Vec<String> = x.iter().map(|&i| names[i].clone()).collect();
        elim_names.push(t.clone());
        elim_names.extend(u.iter().map(|&i| names[i].clone()));
        let elim = RingCtx::new(&elim_names, ring.field().clone(), MonomialOrder::Block(vec![x.len(), 1, u.len()]))?;
        let mut to_elim = vec![0; ring.nvars()];
        for (pos, &i) in x.iter().enumerate() {
            to_elim[i] = pos;
        }
        for (pos, &i) in u.iter().enumerate() {
            to_elim[i] = x.len() + 1 + pos;
        }
        let mut line_names = vec![t];
        line_names.extend(u.iter().map(|&i| names[i].clone()));
        let line = RingCtx::new(&line_names, ring.field().clone(), MonomialOrder::Block(vec![1, u.len()]))?;
        Ok(Fibre { ring: ring.clone(), x: x.to_vec(), u: u.to_vec(), block, to_block, elim, to_elim, line })
    }

    fn block_basis(&self, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.rename_vars(&self.block, &self.to_block)).collect::<Result<_>>()?;
        gb(&self.block, &moved)
    }

    fn x_part(&self, m: &Monomial) -> Vec<u16> {
        m.exps()[..self.x.len()].to_vec()
    }

    fn u_part(&self, m: &Monomial) -> Monomial {
        let mut e = m.exps().to_vec();
        e[..self.x.len()].iter_mut().for_each(|v| *v = 0);
        Monomial::from_u16(e)
    }

    /// Product of the distinct nonconstant leading coefficients in `k[U]`
    /// of a block basis, as a polynomial of the working ring.
    fn leading_coefficient_product(&self, block: &[Polynomial]) -> Result<Polynomial> {
        let k = self.ring.field();
        let from_block: Vec<usize> = self.x.iter().chain(&self.u).copied().collect();
        let mut acc = Polynomial::one(&self.ring);
        let mut seen: Vec<Polynomial> = Vec::new();
        for g in block {
            let lead = self.x_part(g.leading_monomial().unwrap());
            let terms: Vec<(Monomial, FieldElement)> =
                g.terms().iter().filter(|(m, _)| self.x_part(m) == lead).map(|(m, c)| (self.u_part(m), c.clone())).collect();
            let lc = Polynomial::from_terms(&self.block, terms).rename_vars(&self.ring, &from_block)?;
            let content = lc.monomial_content().unwrap();
            let lc = lc.exact_div(&Polynomial::monomial(&self.ring, content.clone(), k.one()))?.unwrap().monic();
            let mut factors: Vec<Polynomial> = Vec::new();
            if !lc.is_constant() {
                factors.push(lc);
            }
            for i in content.support() {
                factors.push(self.ring.var(i));
            }
            for f in factors {
                if !seen.contains(&f) {
                    acc = acc.mul(&f)?;
                    seen.push(f);
                }
            }
        }
        Ok(acc)
    }

    /// `dim_{k(U)} k(U)[X]/I`, counting standard monomials in `X`.
    fn fibre_degree(&self, block: &[Polynomial]) -> Result<usize> {
        let leads: Vec<Vec<u16>> = block.iter().map(|g| self.x_part(g.leading_monomial().unwrap())).collect();
        let nx = self.x.len();
        let mut count = 0usize;
        let mut frontier: Vec<Vec<u16>> = vec![vec![0; nx]];
        let divides = |a: &Vec<u16>, b: &Vec<u16>| a.iter().zip(b).all(|(x, y)| x <= y);
        while !frontier.is_empty() {
            let mut next: Vec<Vec<u16>> = Vec::new();
            for m in frontier {
                if leads.iter().any(|l| divides(l, &m)) {
                    continue;
                }
                count += 1;
                if count > 5000 {
                    return Err(Error::DecompositionIncomplete("fibre degree too large".into()));
                }
                for i in 0..nx {
                    let mut e = m.clone();
                    e[i] += 1;
                    if !next.contains(&e) {
                        next.push(e);
                    }
                }
            }
            frontier = next;
        }
        Ok(count)
    }

    /// The generator of `(I + (T - z)) ∩ k[U][T]` of least positive degree
    /// in `T`, as an element of `k[T, U]`.
    fn eliminant(&self, gens: &[Polynomial], z: &Polynomial) -> Result<Polynomial> {
        let t = self.elim.var(self.x.len());
        let mut moved: Vec<Polynomial> = gens.iter().map(|g| g.rename_vars(&self.elim, &self.to_elim)).collect::<Result<_>>()?;
        moved.push(t.sub(&z.rename_vars(&self.elim, &self.to_elim)?)?);
        let basis = gb(&self.elim, &moved)?;
        let nx = self.x.len();
        let tpos = nx;
        let mut best: Option<Polynomial> = None;
        for g in basis {
            if g.terms().iter().any(|(m, _)| (0..nx).any(|i| m.exp(i) > 0)) {
                continue;
            }
            let deg = g.terms().iter().map(|(m, _)| m.exp(tpos)).max().unwrap_or(0);
            if deg == 0 {
                continue;
            }
            if best.as_ref().map_or(true, |b| deg < t_degree(b, tpos)) {
                best = Some(g);
            }
        }
        let best = best.ok_or_else(|| Error::CertificateFailure("no eliminant in a zero-dimensional fibre".into()))?;
        let map: Vec<usize> = (0..self.elim.nvars()).map(|i| if i < nx { 0 } else { i - nx }).collect();
        best.rename_vars(&self.line, &map)
    }

    /// `F(T = z)` in the working ring.
    fn substitute(&self, f: &Polynomial, z: &Polynomial) -> Result<Polynomial> {
        let mut images = vec![z.clone()];
        images.extend(self.u.iter().map(|&i| self.ring.var(i)));
        f.substitute(&images)
    }
}

fn t_degree(p: &Polynomial, pos: usize) -> u16 {
    p.terms().iter().map(|(m, _)| m.exp(pos)).max().unwrap_or(0)
}

fn analyze_saturated(ctx: &mut Ctx, fibre: &Fibre, sat: Vec<Polynomial>, depth: usize) -> Result<Vec<Vec<Polynomial>>> {
    let ring = ctx.ring.clone();
    let k = ring.field().clone();
    let block = fibre.block_basis(&sat)?;
    let mult = fibre.fibre_degree(&block)?;
    if mult == 1 {
        return Ok(vec![sat]);
    }
    for attempt in 0..GENERIC_ATTEMPTS {
        let z = random_linear_form(&mut ctx.rng, &ring, &fibre.x, attempt);
        let f = fibre.eliminant(&sat, &z)?;
        let ft = f.derivative(0);
        if ft.is_zero() {
            return Err(Error::DecompositionIncomplete("inseparable eliminant".into()));
        }
        let g = poly_gcd(&fibre.line, &f, &ft)?;
        if t_degree(&g, 0) > 0 {
            let reduced = f.exact_div(&g)?.ok_or_else(|| Error::CertificateFailure("gcd does not divide".into()))?;
            let r = fibre.substitute(&reduced, &z)?;
            if k.characteristic() > 0 && !radical_member(&ring, &sat, &r)? {
                return Err(Error::DecompositionIncomplete("squarefree part in positive characteristic".into()));
            }
            if !reduces_to_zero(&ring, &sat, &r)? {
                let mut next = sat.clone();
                next.push(r);
                return decompose(ctx, next, depth + 1);
            }
            continue;
        }
        if (t_degree(&f, 0) as usize) < mult {
            continue;
        }
        // z is primitive and the fibre is reduced
        if fibre.u.is_empty() {
            let uni = to_univariate(&f, 0);
            let fs = factor_univariate(&k, &uni)?;
            if fs.len() == 1 {
                return Ok(vec![sat]);
            }
            let mut out = Vec::new();
            for (h, _) in fs {
                let hz = fibre.substitute(&from_univariate(&fibre.line, &h, 0), &z)?;
                let mut p = sat.clone();
                p.push(hz);
                out.push(gb(&ring, &p)?);
            }
            return Ok(out);
        }
        if irreducible_by_specialization(&mut ctx.rng, &f)? {
            return Ok(vec![sat]);
        }
        let fs = factor_over_function_field(&mut ctx.rng, &f, 0)?;
        if fs.len() <= 1 {
            return Ok(vec![sat]);
        }
        let mut out = Vec::new();
        for h in fs {
            let mut next = sat.clone();
            next.push(fibre.substitute(&h, &z)?);
            out.extend(decompose(ctx, next, depth + 1)?);
        }
        return Ok(out);
    }
    Err(Error::DecompositionIncomplete("no separating linear form found".into()))
}

fn random_linear_form(rng: &mut ChaCha8Rng, ring: &Ring, x: &[usize], attempt: usize) -> Polynomial {
    let k = ring.field();
    let bound = 3 + 4 * attempt as i64;
    let mut z = Polynomial::zero(ring);
    for (j, &i) in x.iter().enumerate() {
        let c = if j == 0 { k.one() } else { k.random(rng, bound) };
        z = z.add(&ring.var(i).scale(&c)).unwrap();
    }
    z
}

/// Greatest common divisor of two polynomials via the principal
/// intersection `(a) ∩ (b) = (lcm)`.
fn poly_gcd(ring: &Ring, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let inter = intersect_ambient(ring, std::slice::from_ref(a), std::slice::from_ref(b))?;
    let inter = gb(ring, &inter)?;
    if inter.len() != 1 {
        return Err(Error::CertificateFailure("intersection of principal ideals is not principal".into()));
    }
    let prod = a.mul(b)?;
    prod.exact_div(&inter[0])?.ok_or_else(|| Error::CertificateFailure("lcm does not divide the product".into()))
}

fn radical_member(ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> Result<bool> {
    let sat = saturate_ambient(ring, gens, f)?;
    Ok(gb(ring, &sat)?.iter().any(|g| g.is_constant()))
}

/// `F ∈ k[T, U]` is irreducible over `k(U)` if the possible degrees of a
/// proper factor, read off from factorizations of specializations at
/// points where the degree is preserved, have empty intersection.
fn irreducible_by_specialization(rng: &mut ChaCha8Rng, f: &Polynomial) -> Result<bool> {
    let k = f.field().clone();
    let nu = f.ring().nvars() - 1;
    let n = t_degree(f, 0) as usize;
    let mut possible: Vec<bool> = (0..=n).map(|d| d > 0 && d < n).collect();
    let mut tries = 0;
    let mut used = 0;
    while used < SPECIALIZATIONS && tries < 10 * SPECIALIZATIONS {
        tries += 1;
        let point: Vec<FieldElement> = (0..nu).map(|_| k.random(rng, 20)).collect();
        let mut coeffs = vec![k.zero(); n + 1];
        for (m, c) in f.terms() {
            let mut v = c.clone();
            for j in 0..nu {
                v = k.mul(&v, &k.pow(&point[j], m.exp(j + 1) as u64));
            }
            let e = m.exp(0) as usize;
            coeffs[e] = k.add(&coeffs[e], &v);
        }
        let uni = UniPoly::new(&k, coeffs);
        if uni.degree() != Some(n) || uni.gcd(&uni.derivative()).degree() != Some(0) {
            continue;
        }
        used += 1;
        let degs: Vec<usize> = factor_univariate(&k, &uni)?.iter().map(|(h, _)| h.degree().unwrap()).collect();
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in degs {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for d in 0..=n {
            possible[d] = possible[d] && sums[d];
        }
        if !possible.iter().any(|&b| b) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(p: &PrimeList) -> Vec<Vec<String>> {
        p.primes().iter().map(|q| q.canonical_strings().unwrap()).collect()
    }

    #[test]
    fn monomial_and_binomial_examples() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let p = Ideal::parse(&r, "x*y").unwrap().minimal_primes().unwrap();
        assert_eq!(strings(&p), vec![vec!["x".to_string()], vec!["y".to_string()]]);
        let p = Ideal::parse(&r, "x^2 - y^2").unwrap().minimal_primes().unwrap();
        assert_eq!(p.len(), 2);
        let p = Ideal::parse(&r, "x^2 + y^2").unwrap().minimal_primes().unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn twisted_cubic_is_prime() {
        let r = RingCtx::rational(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, "x*z - y^2, x*w - y*z, y*w - z^2").unwrap();
        assert!(i.is_prime().unwrap());
    }

    #[test]
    fn zero_dimensional_split() {
        let r = RingCtx::rational(&["x", "y"]);
        let i = Ideal::parse(&r, "x^2 + y^2 - 5, x - y + 1").unwrap();
        let p = i.minimal_primes().unwrap();
        assert_eq!(p.len(), 2);
        let i = Ideal::parse(&r, "x^2 - 2, y^2 - 2").unwrap();
        assert_eq!(i.minimal_primes().unwrap().len(), 2);
    }

    /// The primes contain `I`, are pairwise incomparable, and their
    /// intersection lies in the radical of `I`.
    fn check_decomposition(i: &Ideal, expected: usize) {
        let p = i.minimal_primes().unwrap();
        assert_eq!(p.len(), expected, "{:?}", strings(&p));
        for (a, q) in p.primes().iter().enumerate() {
            assert!(i.is_subset_of(q).unwrap());
            for (b, o) in p.primes().iter().enumerate() {
                assert!(a == b || !o.is_subset_of(q).unwrap());
            }
        }
        let meet = p.primes()[1..].iter().fold(p.primes()[0].clone(), |acc, q| acc.intersect(q).unwrap());
        for g in meet.generators() {
            assert!(i.radical_contains(g).unwrap());
        }
    }

    #[test]
    fn splitting_over_a_function_field() {
        let r = RingCtx::rational(&["w", "x", "y", "z"]);
        check_decomposition(&Ideal::parse(&r, "w^2 + x^2, y^2 + z^2").unwrap(), 2);
        check_decomposition(&Ideal::parse(&r, "w^2 + x*y, y^3 - z^2*w").unwrap(), 2);
        check_decomposition(&Ideal::parse(&r, "w^4 - x^2*y*z, x^3 - y*z*w").unwrap(), 3);
        check_decomposition(&Ideal::parse(&r, "(w^2 - 2*x^2)*(y - z), (y^2 - 3*z^2)*w").unwrap(), 4);
    }
}
