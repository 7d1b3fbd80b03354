//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use num_bigint::BigUint;

use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    pub field: FieldSpec,
    /// Low degree first, no trailing zeros.
    pub coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> UniPoly {
        while coeffs.last().map_or(false, |c| field.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldSpec) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &FieldSpec, c: FieldElement) -> UniPoly {
        UniPoly::new(field, vec![c])
    }

    pub fn one(field: &FieldSpec) -> UniPoly {
        UniPoly::constant(field, field.one())
    }

    /// `c * x^k`
    pub fn monomial(field: &FieldSpec, c: FieldElement, k: usize) -> UniPoly {
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        UniPoly::new(field, coeffs)
    }

    pub fn x(field: &FieldSpec) -> UniPoly {
        UniPoly::monomial(field, field.one(), 1)
    }

    pub fn from_i64s(field: &FieldSpec, coeffs: &[i64]) -> UniPoly {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &FieldElement {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| k.add(&self.coeff(i), &other.coeff(i))).collect();
        UniPoly::new(k, coeffs)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| self.field.neg(c)).collect() }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let k = &self.field;
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        UniPoly::new(k, out)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|a| self.field.mul(a, c)).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).unwrap();
        self.scale(&inv)
    }

    pub fn divrem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let k = &self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = k.inv(divisor.leading()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(k), self.clone());
        }
        let mut quot = vec![k.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = k.mul(&rem[top], &inv);
            if k.is_zero(&c) {
                continue;
            }
            let off = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[off + i] = k.sub(&rem[off + i], &k.mul(&c, d));
            }
            quot[off] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(k, quot), UniPoly::new(k, rem))
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.divrem(divisor).1
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` not normalized.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let k = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(k), UniPoly::zero(k));
        let (mut t0, mut t1) = (UniPoly::zero(k), UniPoly::one(k));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self) -> UniPoly {
        let k = &self.field;
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| k.mul(c, &k.from_i64(i as i64))).collect();
        UniPoly::new(k, coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let k = &self.field;
        let mut acc = k.zero();
        for c in self.coeffs.iter().rev() {
            acc = k.add(&k.mul(&acc, x), c);
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::one(&self.field);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// `self(g(x)) mod modulus`, Horner style.
    pub fn compose_mod(&self, g: &UniPoly, modulus: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&UniPoly::constant(&self.field, c.clone())).rem(modulus);
        }
        acc
    }

    pub fn display<'a>(&'a self, var: &'a str) -> UniDisplay<'a> {
        UniDisplay { poly: self, var }
    }
}

pub struct UniDisplay<'a> {
    poly: &'a UniPoly,
    var: &'a str,
}

impl fmt::Display for UniDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.poly.field;
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let neg = k.is_negative_looking(c);
            let mag = if neg { k.neg(c) } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let unit = k.is_one(&mag);
            if i == 0 {
                write!(f, "{}", k.display(&mag))?;
                continue;
            }
            if !unit {
                if k.is_compound(&mag) {
                    write!(f, "({})*", k.display(&mag))?;
                } else {
                    write!(f, "{}*", k.display(&mag))?;
                }
            }
            if i == 1 {
                write!(f, "{}", self.var)?;
            } else {
                write!(f, "{}^{}", self.var, i)?;
            }
        }
        Ok(())
    }
}
