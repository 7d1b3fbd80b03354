//! Factorization over a rational function field: a polynomial in one main
//! variable with coefficients in the remaining ones is made monic, moved to
//! a point where it stays squarefree, factored there, lifted one total
//! degree at a time, and recombined by trial division.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::unipoly::UniPoly;

use super::factor_univariate;

const POINT_ATTEMPTS: usize = 40;
const MAX_LOCAL_FACTORS: usize = 16;

/// Irreducible factors over `k(other variables)` of a polynomial that is
/// squarefree in `var`. Each factor is returned primitive in `var` with
/// coefficients in `k[other variables]`. Factors free of `var` are dropped.
pub fn factor_over_function_field<R: Rng>(rng: &mut R, f: &Polynomial, var: usize) -> Result<Vec<Polynomial>> {
    let ring = f.ring().clone();
    let k = f.field().clone();
    let n = var_degree(f, var);
    if n == 0 {
        return Ok(Vec::new());
    }
    let coeffs = coefficients(f, var);
    let lead = coeffs[n].clone();
    // F(x) = lead^(n-1) f(x / lead) is monic in x.
    let mut monic = Polynomial::zero(&ring);
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = if j == n { Polynomial::one(&ring) } else { c.mul(&lead.pow((n - 1 - j) as u32)?)? };
        monic = monic.add(&c.mul(&var_power(&ring, var, j))?)?;
    }
    if n == 1 {
        return Ok(vec![primitive_part(f, var)?]);
    }
    let nv = ring.nvars();
    let mut shift: Option<(Vec<FieldElement>, Polynomial, UniPoly)> = None;
    for attempt in 0..POINT_ATTEMPTS {
        let point: Vec<FieldElement> =
            (0..nv).map(|i| if i == var { k.zero() } else { k.random(rng, 2 + attempt as i64) }).collect();
        let images: Vec<Polynomial> = (0..nv)
            .map(|i| if i == var { ring.var(i) } else { ring.var(i).add(&Polynomial::constant(&ring, point[i].clone())).unwrap() })
            .collect();
        let g = monic.substitute(&images)?;
        let g0 = univariate_part(&g, var);
        if g0.degree() == Some(n) && g0.gcd(&g0.derivative()).degree() == Some(0) {
            shift = Some((point, g, g0));
            break;
        }
    }
    let (point, g, g0) =
        shift.ok_or_else(|| Error::DecompositionIncomplete("no point keeps the polynomial squarefree".into()))?;
    let local: Vec<UniPoly> = factor_univariate(&k, &g0)?.into_iter().map(|(h, _)| h).collect();
    if local.len() == 1 {
        return Ok(vec![primitive_part(f, var)?]);
    }
    if local.len() > MAX_LOCAL_FACTORS {
        return Err(Error::DecompositionIncomplete(format!("{} local factors to recombine", local.len())));
    }
    let precision = degree_bound(&g, var, n) + 1;
    let lifted = lift(&g, var, &g0, &local, precision)?;
    let mut factors = recombine(&g, var, lifted, precision)?;

    // Undo the shift and the rescaling of the main variable.
    let back: Vec<Polynomial> = (0..nv)
        .map(|i| {
            if i == var {
                ring.var(i).mul(&lead).unwrap()
            } else {
                ring.var(i).sub(&Polynomial::constant(&ring, point[i].clone())).unwrap()
            }
        })
        .collect();
    for h in factors.iter_mut() {
        *h = primitive_part(&h.substitute(&back)?, var)?;
    }
    factors.sort_by(|a, b| a.terms().cmp(b.terms()));
    Ok(factors)
}

fn var_degree(f: &Polynomial, var: usize) -> usize {
    f.terms().iter().map(|(m, _)| m.exp(var) as usize).max().unwrap_or(0)
}

fn var_power(ring: &crate::ring::Ring, var: usize, e: usize) -> Polynomial {
    let mut exps = vec![0u16; ring.nvars()];
    exps[var] = e as u16;
    Polynomial::monomial(ring, Monomial::from_u16(exps), ring.field().one())
}

/// Coefficients of `var^j`, free of `var`.
fn coefficients(f: &Polynomial, var: usize) -> Vec<Polynomial> {
    let n = var_degree(f, var);
    let mut out: Vec<Vec<(Monomial, FieldElement)>> = vec![Vec::new(); n + 1];
    for (m, c) in f.terms() {
        let mut e = m.exps().to_vec();
        let j = e[var] as usize;
        e[var] = 0;
        out[j].push((Monomial::from_u16(e), c.clone()));
    }
    out.into_iter().map(|t| Polynomial::from_terms(f.ring(), t)).collect()
}

/// Degree of a term in the variables other than `var`.
fn other_degree(m: &Monomial, var: usize) -> usize {
    (m.degree() - m.exp(var) as u32) as usize
}

/// Terms whose other variables all vanish, as a polynomial in `var`.
fn univariate_part(f: &Polynomial, var: usize) -> UniPoly {
    let k = f.field();
    let mut coeffs = vec![k.zero(); var_degree(f, var) + 1];
    for (m, c) in f.terms() {
        if other_degree(m, var) == 0 {
            coeffs[m.exp(var) as usize] = c.clone();
        }
    }
    UniPoly::new(k, coeffs)
}

fn truncate(f: &Polynomial, var: usize, below: usize) -> Polynomial {
    let terms = f.terms().iter().filter(|(m, _)| other_degree(m, var) < below).cloned().collect();
    Polynomial::from_terms(f.ring(), terms)
}

/// A bound on the degree in the other variables of any coefficient of a
/// monic factor of the monic `g`: with `g = x^n + c_1 x^(n-1) + ...`,
/// roots grow at most like `max deg(c_j) / j`.
fn degree_bound(g: &Polynomial, var: usize, n: usize) -> usize {
    let mut deg = vec![0usize; n + 1];
    for (m, _) in g.terms() {
        let j = n - m.exp(var) as usize;
        deg[j] = deg[j].max(other_degree(m, var));
    }
    (1..=n).map(|j| (n * deg[j]) / j).max().unwrap_or(0)
}

/// Lifts `g0 = prod local` to a factorization of `g` modulo the terms of
/// degree `precision` in the other variables.
fn lift(g: &Polynomial, var: usize, g0: &UniPoly, local: &[UniPoly], precision: usize) -> Result<Vec<Polynomial>> {
    let ring = g.ring();
    let k = g.field();
    // s_i with sum_i s_i * g0 / local_i = 1.
    let mut inverses = Vec::with_capacity(local.len());
    for h in local {
        let (cofactor, rem) = g0.divrem(h);
        debug_assert!(rem.is_zero());
        let (d, s, _) = cofactor.ext_gcd(h);
        if d.degree() != Some(0) {
            return Err(Error::CertificateFailure("local factors are not coprime".into()));
        }
        inverses.push(s.scale(&k.inv(&d.coeffs[0])?).rem(h));
    }
    let mut factors: Vec<Polynomial> = local.iter().map(|h| embed(ring, var, h, None)).collect();
    for step in 1..precision {
        let mut prod = factors[0].clone();
        for f in &factors[1..] {
            prod = truncate(&prod.mul(f)?, var, step + 1);
        }
        let err = truncate(g, var, step + 1).sub(&prod)?;
        let mut by_monomial: Vec<(Monomial, Vec<(usize, FieldElement)>)> = Vec::new();
        for (m, c) in err.terms() {
            if other_degree(m, var) != step {
                continue;
            }
            let mut e = m.exps().to_vec();
            let j = e[var] as usize;
            e[var] = 0;
            let key = Monomial::from_u16(e);
            match by_monomial.iter_mut().find(|(mm, _)| *mm == key) {
                Some((_, v)) => v.push((j, c.clone())),
                None => by_monomial.push((key, vec![(j, c.clone())])),
            }
        }
        for (mono, entries) in by_monomial {
            let deg = entries.iter().map(|(j, _)| *j).max().unwrap();
            let mut coeffs = vec![k.zero(); deg + 1];
            for (j, c) in entries {
                coeffs[j] = c;
            }
            let e = UniPoly::new(k, coeffs);
            for (i, h) in local.iter().enumerate() {
                let delta = e.mul(&inverses[i]).rem(h);
                if !delta.is_zero() {
                    factors[i] = factors[i].add(&embed(ring, var, &delta, Some(&mono)))?;
                }
            }
        }
    }
    Ok(factors)
}

fn embed(ring: &crate::ring::Ring, var: usize, h: &UniPoly, times: Option<&Monomial>) -> Polynomial {
    let k = ring.field();
    let base = times.cloned().unwrap_or_else(|| Monomial::one(ring.nvars()));
    let terms = h
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !k.is_zero(c))
        .map(|(j, c)| {
            let mut e = base.exps().to_vec();
            e[var] += j as u16;
            (Monomial::from_u16(e), c.clone())
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// True factors of `g` from products of subsets of the lifted factors.
fn recombine(g: &Polynomial, var: usize, mut lifted: Vec<Polynomial>, precision: usize) -> Result<Vec<Polynomial>> {
    let mut rest = g.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in subsets(lifted.len(), size) {
            let mut cand = lifted[subset[0]].clone();
            for &i in &subset[1..] {
                cand = truncate(&cand.mul(&lifted[i])?, var, precision);
            }
            if let Some(q) = rest.exact_div(&cand)? {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if var_degree(&rest, var) > 0 {
        found.push(rest);
    }
    Ok(found)
}

/// All increasing index lists of the given size.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    go(0, n, size, &mut cur, &mut out);
    out
}

/// `f` divided by the greatest common divisor of its coefficients in `var`.
fn primitive_part(f: &Polynomial, var: usize) -> Result<Polynomial> {
    let coeffs: Vec<Polynomial> = coefficients(f, var).into_iter().filter(|c| !c.is_zero()).collect();
    let mut content = coeffs[0].clone();
    for c in &coeffs[1..] {
        if content.is_constant() {
            break;
        }
        content = gcd(&content, c)?;
    }
    if content.is_constant() {
        return Ok(f.monic());
    }
    f.exact_div(&content)?
        .map(|p| p.monic())
        .ok_or_else(|| Error::CertificateFailure("content does not divide".into()))
}

/// Multivariate gcd through the principal intersection `(a) ∩ (b)`.
fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let ring = a.ring();
    let lcm = crate::ideal::Ideal::new(ring, vec![a.clone()])?
        .intersect(&crate::ideal::Ideal::new(ring, vec![b.clone()])?)?
        .canonical_basis()?;
    if lcm.len() != 1 {
        return Err(Error::CertificateFailure("intersection of principal ideals is not principal".into()));
    }
    a.mul(b)?
        .exact_div(&lcm[0])?
        .ok_or_else(|| Error::CertificateFailure("lcm does not divide the product".into()))
}
