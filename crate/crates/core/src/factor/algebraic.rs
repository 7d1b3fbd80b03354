use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::unipoly::UniPoly;

use super::resultant;

/// Norm from `Q(a)[x]` down to `Q[x]`: the resultant in the generator of
/// the minimal polynomial and the coefficient representative, computed by
/// evaluation at integer points and interpolation.
pub fn norm(k: &FieldSpec, g: &UniPoly) -> UniPoly {
    let base = k.base().to_spec();
    let FieldSpec::SimpleExtension(ext) = k else {
        return g.clone();
    };
    let m = UniPoly::new(&base, ext.minimal_poly.clone());
    let deg = g.degree().unwrap_or(0) * (ext.minimal_poly.len() - 1);
    let mut xs = Vec::with_capacity(deg + 1);
    let mut ys = Vec::with_capacity(deg + 1);
    for i in 0..=deg as i64 {
        let x0 = k.from_i64(i);
        let v = g.eval(&x0);
        let rep = UniPoly::new(&base, k.coordinates(&v));
        xs.push(base.from_i64(i));
        ys.push(if rep.is_zero() { base.zero() } else { resultant(&m, &rep) });
    }
    interpolate(&base, &xs, &ys)
}

fn interpolate(k: &FieldSpec, xs: &[FieldElement], ys: &[FieldElement]) -> UniPoly {
    // Newton divided differences
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = k.sub(&coef[i], &coef[i - 1]);
            let den = k.sub(&xs[i], &xs[i - j]);
            coef[i] = k.div(&num, &den).unwrap();
        }
    }
    let mut acc = UniPoly::constant(k, coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = UniPoly::new(k, vec![k.neg(&xs[i]), k.one()]);
        acc = acc.mul(&lin).add(&UniPoly::constant(k, coef[i].clone()));
    }
    acc
}

/// `g(x + c)`.
fn shift(g: &UniPoly, c: &FieldElement) -> UniPoly {
    let k = &g.field;
    let lin = UniPoly::new(k, vec![c.clone(), k.one()]);
    let mut acc = UniPoly::zero(k);
    for a in g.coeffs.iter().rev() {
        acc = acc.mul(&lin).add(&UniPoly::constant(k, a.clone()));
    }
    acc
}

/// Irreducible monic factors over `Q(a)` of a squarefree polynomial.
pub(super) fn factor_squarefree(k: &FieldSpec, g: &UniPoly) -> Result<Vec<UniPoly>> {
    let base = k.base().to_spec();
    let alpha = k.generator().unwrap();
    let g = g.monic();
    for s in (0..).flat_map(|i: i64| if i == 0 { vec![0] } else { vec![i, -i] }) {
        let c = k.mul(&k.from_i64(-s), &alpha);
        let gs = shift(&g, &c);
        let n = norm(k, &gs);
        if n.gcd(&n.derivative()).degree() != Some(0) {
            continue;
        }
        let mut out = Vec::new();
        for (ni, _) in super::factor_univariate(&base, &n)? {
            let lifted = UniPoly::new(k, ni.coeffs.iter().map(|a| k.embed(a.clone())).collect());
            let h = gs.gcd(&lifted);
            if h.degree().unwrap_or(0) > 0 {
                out.push(shift(&h, &k.neg(&c)).monic());
            }
        }
        return Ok(out);
    }
    unreachable!()
}
