use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{is_prime_u64, FieldElement, FieldSpec};
use crate::unipoly::UniPoly;

type IntPoly = Vec<BigInt>;

/// Irreducible monic factors over `Q` of a squarefree polynomial.
pub(super) fn factor_squarefree(g: &UniPoly) -> Result<Vec<UniPoly>> {
    let f = primitive_integer(g);
    let n = f.len() - 1;
    let lc = f[n].clone();
    let p = choose_prime(&f)?;
    let fp = to_fp(&f, p);
    let modular = super::finite::factor_squarefree(&FieldSpec::PrimeField(p), &fp);
    if modular.len() == 1 {
        return Ok(vec![g.monic()]);
    }
    // coefficient bound for factors scaled by the leading coefficient
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm_sq.sqrt() + 1u32) * (BigInt::one() << n) * lc.abs() * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(&f, &modular, p, k);
    let factors = recombine(f, lifted, &m);
    Ok(factors.iter().map(|h| from_integer(h).monic()).collect())
}

fn primitive_integer(g: &UniPoly) -> IntPoly {
    let q = FieldSpec::Rationals;
    let rats: Vec<BigRational> = g.coeffs.iter().map(|c| q.as_rational(c).unwrap()).collect();
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut ints: IntPoly = rats.iter().map(|r| (r * BigRational::from(den.clone())).to_integer()).collect();
    primitive(&mut ints);
    ints
}

fn primitive(f: &mut IntPoly) {
    let cont = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !cont.is_zero() {
        for c in f.iter_mut() {
            *c /= &cont;
        }
    }
    if f.last().map_or(false, |c| c.is_negative()) {
        for c in f.iter_mut() {
            *c = -&*c;
        }
    }
}

fn from_integer(f: &IntPoly) -> UniPoly {
    let q = FieldSpec::Rationals;
    UniPoly::new(&q, f.iter().map(|c| q.from_bigint(c)).collect())
}

fn to_fp(f: &IntPoly, p: u32) -> UniPoly {
    let k = FieldSpec::PrimeField(p);
    let pb = BigInt::from(p);
    UniPoly::new(&k, f.iter().map(|c| FieldElement::Modular(c.mod_floor(&pb).to_u32().unwrap())).collect())
}

fn from_fp(f: &UniPoly) -> IntPoly {
    f.coeffs
        .iter()
        .map(|c| match c {
            FieldElement::Modular(v) => BigInt::from(*v),
            _ => unreachable!(),
        })
        .collect()
}

/// Smallest odd prime not dividing the leading coefficient modulo which
/// `f` stays squarefree.
fn choose_prime(f: &IntPoly) -> Result<u32> {
    let lc = f.last().unwrap();
    let mut p = 3u32;
    while p < 1 << 20 {
        if is_prime_u64(p as u64) && !(lc % p).is_zero() {
            let fp = to_fp(f, p);
            if fp.gcd(&fp.derivative()).degree() == Some(0) {
                return Ok(p);
            }
        }
        p += 2;
    }
    Err(Error::ResourceLimit("no suitable prime for modular factorization".into()))
}

fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn reduce(a: &IntPoly, m: &BigInt) -> IntPoly {
    let mut out: IntPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn symmetric(a: &IntPoly, m: &BigInt) -> IntPoly {
    let half: BigInt = m / 2u32;
    let mut out: IntPoly = a.iter().map(|c| {
        let r = c.mod_floor(m);
        if r > half { r - m } else { r }
    }).collect();
    while out.last().map_or(false, |c| c.is_zero()) {
        out.pop();
    }
    out
}

fn add_scaled(a: &IntPoly, b: &IntPoly, s: &BigInt) -> IntPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c * s;
    }
    out
}

/// Lifts `f = lc * prod u_i (mod p)` to monic factors modulo `p^k`.
fn hensel_lift(f: &IntPoly, us: &[UniPoly], p: u32, k: u32) -> Vec<IntPoly> {
    let pb = BigInt::from(p);
    let m = pb.pow(k);
    let lc = f.last().unwrap().clone();
    if us.len() == 1 {
        let inv = lc.modinv(&m).expect("leading coefficient is a unit");
        return vec![reduce(&f.iter().map(|c| c * &inv).collect(), &m)];
    }
    let fp_field = FieldSpec::PrimeField(p);
    let (left, right) = us.split_at(us.len() / 2);
    let g0 = left.iter().fold(UniPoly::one(&fp_field), |acc, u| acc.mul(u));
    let lcp = to_fp(&vec![lc.clone()], p);
    let h0 = right.iter().fold(lcp, |acc, u| acc.mul(u));
    let (g, h) = lift_pair(f, &g0, &h0, p, k);
    let mut out = hensel_lift(&g, left, p, k);
    out.extend(hensel_lift(&h, right, p, k));
    out
}

/// Linear Hensel lifting of `f = g*h (mod p)` with `g` monic to a
/// factorization modulo `p^k`.
fn lift_pair(f: &IntPoly, g0: &UniPoly, h0: &UniPoly, p: u32, k: u32) -> (IntPoly, IntPoly) {
    let pb = BigInt::from(p);
    let m = pb.pow(k);
    let (d, s, t) = g0.ext_gcd(h0);
    let dinv = d.field.inv(d.leading()).unwrap();
    let (s, t) = (s.scale(&dinv), t.scale(&dinv));
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = reduce(&add_scaled(&reduce(f, &m), &mul(&g, &h), &BigInt::from(-1)), &m);
        if diff.is_empty() {
            break;
        }
        let e: IntPoly = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, p);
        let (qq, dg) = t.mul(&e).divrem(g0);
        let dh = s.mul(&e).add(&qq.mul(h0));
        g = reduce(&add_scaled(&g, &from_fp(&dg), &pj), &m);
        h = reduce(&add_scaled(&h, &from_fp(&dh), &pj), &m);
        pj *= &pb;
    }
    (g, h)
}

fn divides_exactly(f: &IntPoly, g: &IntPoly) -> Option<IntPoly> {
    let (q, r) = from_integer(f).divrem(&from_integer(g));
    if !r.is_zero() {
        return None;
    }
    let qq = FieldSpec::Rationals;
    let mut out = Vec::with_capacity(q.coeffs.len());
    for c in &q.coeffs {
        let r = qq.as_rational(c).unwrap();
        if !r.is_integer() {
            return None;
        }
        out.push(r.to_integer());
    }
    Some(out)
}

/// Subset recombination of the lifted modular factors.
fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        for subset in combinations(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &subset {
                cand = reduce(&mul(&cand, &lifted[i]), m);
            }
            let mut cand = symmetric(&cand, m);
            primitive(&mut cand);
            if let Some(q) = divides_exactly(&f, &cand) {
                out.push(cand);
                f = q;
                primitive(&mut f);
                let mut idx = 0;
                lifted.retain(|_| {
                    idx += 1;
                    !subset.contains(&(idx - 1))
                });
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if f.len() > 1 {
        out.push(f);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
