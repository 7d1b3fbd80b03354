use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::FieldSpec;
use crate::unipoly::UniPoly;

/// Irreducible monic factors of a squarefree polynomial over `F_q`.
pub(super) fn factor_squarefree(k: &FieldSpec, g: &UniPoly) -> Vec<UniPoly> {
    let q = k.size().expect("finite field");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (part, d) in distinct_degree(k, &g.monic(), &q) {
        equal_degree(k, &part, d, &q, &mut rng, &mut out);
    }
    out
}

/// Splits `g` into products of irreducibles of equal degree.
fn distinct_degree(k: &FieldSpec, g: &UniPoly, q: &BigUint) -> Vec<(UniPoly, usize)> {
    let x = UniPoly::x(k);
    let mut out = Vec::new();
    let mut rest = g.clone();
    let mut h = x.rem(&rest);
    let mut d = 1;
    while rest.degree().unwrap() >= 2 * d {
        h = h.pow_mod(q, &rest);
        let gd = h.sub(&x).gcd(&rest);
        if gd.degree().unwrap() > 0 {
            rest = rest.divrem(&gd).0;
            h = h.rem(&rest);
            out.push((gd, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree() {
        if n > 0 {
            out.push((rest.monic(), n));
        }
    }
    out
}

fn equal_degree(k: &FieldSpec, g: &UniPoly, d: usize, q: &BigUint, rng: &mut ChaCha8Rng, out: &mut Vec<UniPoly>) {
    let n = g.degree().unwrap();
    if n == d {
        out.push(g.monic());
        return;
    }
    let p = k.characteristic();
    let qd = q.pow(d as u32);
    loop {
        let a = UniPoly::new(k, (0..n).map(|_| k.random(rng, 0)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace from F_{q^d} down to F_2
            let bits = (qd.bits() - 1) as usize;
            let mut acc = a.rem(g);
            let mut term = acc.clone();
            for _ in 1..bits {
                term = term.mul(&term).rem(g);
                acc = acc.add(&term);
            }
            acc
        } else {
            let e = (&qd - BigUint::one()) / BigUint::from(2u32);
            a.pow_mod(&e, g).sub(&UniPoly::one(k))
        };
        let h = b.gcd(g);
        let dh = h.degree().unwrap_or(0);
        if dh > 0 && dh < n {
            let other = g.divrem(&h).0;
            equal_degree(k, &h, d, q, rng, out);
            equal_degree(k, &other.monic(), d, q, rng, out);
            return;
        }
    }
}
