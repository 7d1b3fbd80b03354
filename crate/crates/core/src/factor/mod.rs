//! Univariate factorization over the supported coefficient fields: finite
//! fields (Cantor–Zassenhaus), the rationals (Zassenhaus with Hensel
//! lifting), and algebraic extensions of the rationals (Trager's norm
//! method). Polynomials over rational function fields are factored by
//! multivariate Hensel lifting.

mod algebraic;
mod finite;
mod hensel;
mod rational;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::UniPoly;

pub use algebraic::norm;
pub use hensel::factor_over_function_field;

/// Monic irreducible factors of `f` with multiplicities, sorted by degree
/// and then coefficients. Constants have no factors.
pub fn factor_univariate(field: &FieldSpec, f: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if &f.field != field {
        return Err(Error::RingMismatch);
    }
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        let parts = factor_squarefree(field, &g)?;
        out.extend(parts.into_iter().map(|p| (p, mult)));
    }
    sort_factors(&mut out);
    Ok(out)
}

/// True for polynomials of positive degree with no proper factorization.
pub fn is_irreducible(field: &FieldSpec, f: &UniPoly) -> Result<bool> {
    if f.degree().map_or(true, |d| d == 0) {
        return Ok(false);
    }
    let fs = factor_univariate(field, f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Product of the distinct monic irreducible factors.
pub fn squarefree_part(f: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::one(&f.field);
    for (g, _) in squarefree_decomposition(f) {
        acc = acc.mul(&g);
    }
    acc
}

fn sort_factors(v: &mut [(UniPoly, usize)]) {
    v.sort_by(|a, b| (a.0.degree(), &a.0.coeffs, a.1).cmp(&(b.0.degree(), &b.0.coeffs, b.1)));
}

fn factor_squarefree(field: &FieldSpec, g: &UniPoly) -> Result<Vec<UniPoly>> {
    if g.degree() == Some(1) {
        return Ok(vec![g.monic()]);
    }
    match field {
        FieldSpec::Rationals => rational::factor_squarefree(g),
        _ if field.characteristic() > 0 => Ok(finite::factor_squarefree(field, g)),
        _ => algebraic::factor_squarefree(field, g),
    }
}

/// Monic squarefree factors `g_i` with `f = lc * prod g_i^i`, each listed
/// with its multiplicity.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let k = &f.field;
    let f = f.monic();
    if f.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z.monic(), i));
        }
        i += 1;
        c = c.divrem(&y).0;
        w = y;
    }
    if c.degree().unwrap_or(0) > 0 {
        let p = k.characteristic() as usize;
        debug_assert!(p > 0);
        let root = pth_root(&c);
        for (g, m) in squarefree_decomposition(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// For `f = g(x^p)` over a finite field of characteristic `p`, the
/// polynomial whose `p`-th power is `f`.
fn pth_root(f: &UniPoly) -> UniPoly {
    let k = &f.field;
    let p = k.characteristic() as usize;
    let q = k.size().expect("finite field");
    let e = q / BigUint::from(p);
    let coeffs: Vec<FieldElement> = f.coeffs.iter().step_by(p).map(|c| if e.is_one() { c.clone() } else { k.pow_big(c, &e) }).collect();
    UniPoly::new(k, coeffs)
}

/// Resultant of two univariate polynomials over a field.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> FieldElement {
    let k = &a.field;
    if a.is_zero() || b.is_zero() {
        return k.zero();
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return k.pow(b.leading(), da as u64);
    }
    if da == 0 {
        return k.pow(a.leading(), db as u64);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return k.zero();
    }
    let dr = r.degree().unwrap();
    let mut out = k.mul(&k.pow(b.leading(), (da - dr) as u64), &resultant(b, &r));
    if da * db % 2 == 1 {
        out = k.neg(&out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn q_i() -> FieldSpec {
        let q = FieldSpec::Rationals;
        FieldSpec::extension(crate::field::BaseField::Rationals, "i", vec![q.one(), q.zero(), q.one()]).unwrap()
    }

    fn product(fs: &[(UniPoly, usize)], k: &FieldSpec) -> UniPoly {
        let mut acc = UniPoly::one(k);
        for (g, m) in fs {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }

    #[test]
    fn sum_of_squares_splits_only_over_gaussian_rationals() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::from_i64s(&q, &[1, 0, 1]);
        assert_eq!(factor_univariate(&q, &f).unwrap().len(), 1);
        let k = q_i();
        let g = UniPoly::from_i64s(&k, &[1, 0, 1]);
        let fs = factor_univariate(&k, &g).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|(h, m)| h.degree() == Some(1) && *m == 1));
        assert_eq!(product(&fs, &k), g);
    }

    #[test]
    fn rational_examples() {
        let q = FieldSpec::Rationals;
        let f = UniPoly::from_i64s(&q, &[-1, 0, 1]);
        let fs = factor_univariate(&q, &f).unwrap();
        assert_eq!(fs, vec![(UniPoly::from_i64s(&q, &[-1, 1]), 1), (UniPoly::from_i64s(&q, &[1, 1]), 1)]);
        // x^4 + 1 is irreducible over Q but splits modulo every prime
        assert!(is_irreducible(&q, &UniPoly::from_i64s(&q, &[1, 0, 0, 0, 1])).unwrap());
        // (x^2 - 2)^2 (x^3 + x + 1) * 6
        let a = UniPoly::from_i64s(&q, &[-2, 0, 1]);
        let b = UniPoly::from_i64s(&q, &[1, 1, 0, 1]);
        let f = a.mul(&a).mul(&b).scale(&q.from_i64(6));
        let fs = factor_univariate(&q, &f).unwrap();
        assert_eq!(fs, vec![(a, 2), (b, 1)]);
    }

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        // minimal polynomial of sqrt2 + sqrt3
        let q = FieldSpec::Rationals;
        assert!(is_irreducible(&q, &UniPoly::from_i64s(&q, &[1, 0, -10, 0, 1])).unwrap());
    }

    #[test]
    fn random_products_mod_7() {
        let k = FieldSpec::prime(7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let mut f = UniPoly::one(&k);
            for _ in 0..rng.gen_range(1..4) {
                let deg = rng.gen_range(1..4);
                let mut c: Vec<FieldElement> = (0..deg).map(|_| k.random(&mut rng, 0)).collect();
                c.push(k.one());
                f = f.mul(&UniPoly::new(&k, c));
            }
            let fs = factor_univariate(&k, &f).unwrap();
            assert_eq!(product(&fs, &k), f);
            for (g, _) in &fs {
                assert!(irreducible_by_search(&k, g));
            }
        }
    }

    fn irreducible_by_search(k: &FieldSpec, g: &UniPoly) -> bool {
        // no monic factor of degree <= deg/2, by enumeration
        let d = g.degree().unwrap();
        let elems = k.elements().unwrap();
        for e in 1..=d / 2 {
            let mut idx = vec![0usize; e];
            loop {
                let mut c: Vec<FieldElement> = idx.iter().map(|&i| elems[i].clone()).collect();
                c.push(k.one());
                if g.rem(&UniPoly::new(k, c)).is_zero() {
                    return false;
                }
                let mut j = 0;
                while j < e && idx[j] + 1 == elems.len() {
                    idx[j] = 0;
                    j += 1;
                }
                if j == e {
                    break;
                }
                idx[j] += 1;
            }
        }
        true
    }

    #[test]
    fn inseparable_powers_in_characteristic_two() {
        let k = FieldSpec::prime(2).unwrap();
        // (x^2 + x + 1)^2 * x^2 = x^6 + x^4 + x^2
        let a = UniPoly::from_i64s(&k, &[1, 1, 1]);
        let f = a.mul(&a).mul(&UniPoly::from_i64s(&k, &[0, 0, 1]));
        let fs = factor_univariate(&k, &f).unwrap();
        assert_eq!(fs, vec![(UniPoly::x(&k), 2), (a, 2)]);
    }

    #[test]
    fn extension_of_a_prime_field() {
        let f3 = FieldSpec::prime(3).unwrap();
        let k = FieldSpec::extension(crate::field::BaseField::PrimeField(3), "a", vec![f3.one(), f3.zero(), f3.one()]).unwrap();
        // x^2 + 1 splits over F9
        let g = UniPoly::from_i64s(&k, &[1, 0, 1]);
        let fs = factor_univariate(&k, &g).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs, &k), g);
    }

    #[test]
    fn resultant_matches_product_of_root_differences() {
        let q = FieldSpec::Rationals;
        // (x-1)(x-2) and (x-3): (1-3)(2-3) = 2
        let a = UniPoly::from_i64s(&q, &[2, -3, 1]);
        let b = UniPoly::from_i64s(&q, &[-3, 1]);
        assert_eq!(resultant(&a, &b), q.from_i64(2));
    }
}
