//! Coefficient fields: the rationals, prime fields, and simple algebraic
//! extensions of either by one generator.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

/// The prime field or the rationals underneath an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseField {
    Rationals,
    PrimeField(u32),
}

/// Data of a simple extension `base(g) = base[g]/(m(g))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Extension {
    pub base: BaseField,
    pub generator: String,
    /// Monic, irreducible, low degree first.
    pub minimal_poly: Vec<FieldElement>,
}

/// A coefficient field descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
    SimpleExtension(Arc<Extension>),
}

/// An element of some [`FieldSpec`], always in canonical form.
///
/// Algebraic elements are stored as their coefficient list in the generator
/// (low degree first, no trailing zeros), so zero is the empty list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Rational(BigRational),
    Modular(u32),
    Algebraic(Vec<FieldElement>),
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl BaseField {
    pub fn prime(p: u64) -> Result<BaseField> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("characteristic {p} exceeds 2^31")));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(BaseField::PrimeField(p as u32))
    }

    pub fn to_spec(&self) -> FieldSpec {
        match self {
            BaseField::Rationals => FieldSpec::Rationals,
            BaseField::PrimeField(p) => FieldSpec::PrimeField(*p),
        }
    }
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        Ok(BaseField::prime(p)?.to_spec())
    }

    /// Builds `base(generator)` with the given minimal polynomial (low
    /// degree first). The polynomial must be monic of degree at least two
    /// and irreducible over `base`.
    pub fn extension(base: BaseField, generator: &str, minimal_poly: Vec<FieldElement>) -> Result<FieldSpec> {
        let base_spec = base.to_spec();
        let m = UniPoly::new(&base_spec, minimal_poly);
        if m.degree().map_or(true, |d| d < 2) {
            return Err(Error::InvalidField("minimal polynomial must have degree >= 2".into()));
        }
        if !base_spec.is_one(m.leading()) {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let factors = crate::factor::factor_univariate(&base_spec, &m)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::InvalidField(format!(
                "minimal polynomial {} is reducible over the base field",
                m.display(generator)
            )));
        }
        Ok(FieldSpec::SimpleExtension(Arc::new(Extension {
            base,
            generator: generator.to_string(),
            minimal_poly: m.coeffs,
        })))
    }

    pub fn base(&self) -> BaseField {
        match self {
            FieldSpec::Rationals => BaseField::Rationals,
            FieldSpec::PrimeField(p) => BaseField::PrimeField(*p),
            FieldSpec::SimpleExtension(e) => e.base.clone(),
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self.base() {
            BaseField::Rationals => 0,
            BaseField::PrimeField(p) => p,
        }
    }

    /// Degree over the prime field (or over the rationals).
    pub fn extension_degree(&self) -> usize {
        match self {
            FieldSpec::SimpleExtension(e) => e.minimal_poly.len() - 1,
            _ => 1,
        }
    }

    /// Number of elements for finite fields.
    pub fn size(&self) -> Option<BigUint> {
        match self.characteristic() {
            0 => None,
            p => Some(BigUint::from(p).pow(self.extension_degree() as u32)),
        }
    }

    pub fn generator_name(&self) -> Option<&str> {
        match self {
            FieldSpec::SimpleExtension(e) => Some(&e.generator),
            _ => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::zero()),
            FieldSpec::PrimeField(_) => FieldElement::Modular(0),
            FieldSpec::SimpleExtension(_) => FieldElement::Algebraic(Vec::new()),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
            FieldSpec::PrimeField(p) => FieldElement::Modular(n.rem_euclid(*p as i64) as u32),
            FieldSpec::SimpleExtension(e) => {
                let c = e.base.to_spec().from_i64(n);
                self.embed(c)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                FieldElement::Modular(r.to_u32().unwrap())
            }
            FieldSpec::SimpleExtension(e) => {
                let c = e.base.to_spec().from_bigint(n);
                self.embed(c)
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes in
    /// positive characteristic.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        Ok(self.mul(&num, &self.inv(&den)?))
    }

    /// Embeds an element of the base field.
    pub fn embed(&self, base_elem: FieldElement) -> FieldElement {
        match self {
            FieldSpec::SimpleExtension(e) => {
                if e.base.to_spec().is_zero(&base_elem) {
                    FieldElement::Algebraic(Vec::new())
                } else {
                    FieldElement::Algebraic(vec![base_elem])
                }
            }
            _ => base_elem,
        }
    }

    /// The extension generator as an element.
    pub fn generator(&self) -> Option<FieldElement> {
        match self {
            FieldSpec::SimpleExtension(e) => {
                let b = e.base.to_spec();
                Some(FieldElement::Algebraic(vec![b.zero(), b.one()]))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Modular(r) => *r == 0,
            FieldElement::Algebraic(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Modular(r) => *r == 1,
            FieldElement::Algebraic(v) => v.len() == 1 && self.base().to_spec().is_one(&v[0]),
        }
    }

    /// True when the element lies in the prime field (or the rationals).
    pub fn is_base(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Algebraic(v) => v.len() <= 1,
            _ => true,
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (_, FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x + y),
            (FieldSpec::PrimeField(p), FieldElement::Modular(x), FieldElement::Modular(y)) => {
                FieldElement::Modular(((*x as u64 + *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::SimpleExtension(e), FieldElement::Algebraic(x), FieldElement::Algebraic(y)) => {
                let b = e.base.to_spec();
                let n = x.len().max(y.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let s = match (x.get(i), y.get(i)) {
                        (Some(u), Some(v)) => b.add(u, v),
                        (Some(u), None) => u.clone(),
                        (None, Some(v)) => v.clone(),
                        (None, None) => unreachable!(),
                    };
                    out.push(s);
                }
                trim(&b, &mut out);
                FieldElement::Algebraic(out)
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (_, FieldElement::Rational(x)) => FieldElement::Rational(-x),
            (FieldSpec::PrimeField(p), FieldElement::Modular(x)) => FieldElement::Modular(if *x == 0 { 0 } else { p - x }),
            (FieldSpec::SimpleExtension(e), FieldElement::Algebraic(x)) => {
                let b = e.base.to_spec();
                FieldElement::Algebraic(x.iter().map(|c| b.neg(c)).collect())
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (_, FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x * y),
            (FieldSpec::PrimeField(p), FieldElement::Modular(x), FieldElement::Modular(y)) => {
                FieldElement::Modular(((*x as u64 * *y as u64) % *p as u64) as u32)
            }
            (FieldSpec::SimpleExtension(e), FieldElement::Algebraic(x), FieldElement::Algebraic(y)) => {
                if x.is_empty() || y.is_empty() {
                    return FieldElement::Algebraic(Vec::new());
                }
                let b = e.base.to_spec();
                let mut prod = vec![b.zero(); x.len() + y.len() - 1];
                for (i, u) in x.iter().enumerate() {
                    for (j, v) in y.iter().enumerate() {
                        prod[i + j] = b.add(&prod[i + j], &b.mul(u, v));
                    }
                }
                reduce_mod(&b, &mut prod, &e.minimal_poly);
                FieldElement::Algebraic(prod)
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::ZeroInversion);
        }
        match (self, a) {
            (_, FieldElement::Rational(x)) => Ok(FieldElement::Rational(x.recip())),
            (FieldSpec::PrimeField(p), FieldElement::Modular(x)) => Ok(FieldElement::Modular(mod_inverse(*x, *p))),
            (FieldSpec::SimpleExtension(e), FieldElement::Algebraic(x)) => {
                let b = e.base.to_spec();
                let am = UniPoly::new(&b, x.clone());
                let m = UniPoly::new(&b, e.minimal_poly.clone());
                let (g, s, _) = am.ext_gcd(&m);
                if g.degree() != Some(0) {
                    return Err(Error::NonInvertible(format!(
                        "{} shares a factor with the minimal polynomial",
                        self.display(a)
                    )));
                }
                let ginv = b.inv(g.leading())?;
                let s = s.scale(&ginv);
                let mut coeffs = s.coeffs;
                trim(&b, &mut coeffs);
                Ok(FieldElement::Algebraic(coeffs))
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: &FieldElement, e: &BigUint) -> FieldElement {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Uniform element with base coordinates in `[-bound, bound]` (or all of
    /// `F_p`).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> FieldElement {
        match self {
            FieldSpec::Rationals => self.from_i64(rng.gen_range(-bound..=bound)),
            FieldSpec::PrimeField(p) => FieldElement::Modular(rng.gen_range(0..*p)),
            FieldSpec::SimpleExtension(e) => {
                let b = e.base.to_spec();
                let mut coeffs: Vec<_> = (0..e.minimal_poly.len() - 1).map(|_| b.random(rng, bound)).collect();
                trim(&b, &mut coeffs);
                FieldElement::Algebraic(coeffs)
            }
        }
    }

    /// All elements, for small finite fields.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        let size = self.size()?.to_u64()?;
        if size > 1 << 16 {
            return None;
        }
        let p = self.characteristic() as u64;
        let k = self.extension_degree();
        let b = self.base().to_spec();
        let mut out = Vec::with_capacity(size as usize);
        for mut idx in 0..size {
            let mut coeffs = Vec::with_capacity(k);
            for _ in 0..k {
                coeffs.push(b.from_i64((idx % p) as i64));
                idx /= p;
            }
            out.push(match self {
                FieldSpec::SimpleExtension(_) => {
                    trim(&b, &mut coeffs);
                    FieldElement::Algebraic(coeffs)
                }
                _ => coeffs.pop().unwrap(),
            });
        }
        Some(out)
    }

    /// Coordinates over the base field, padded to the extension degree.
    pub fn coordinates(&self, a: &FieldElement) -> Vec<FieldElement> {
        match (self, a) {
            (FieldSpec::SimpleExtension(e), FieldElement::Algebraic(v)) => {
                let b = e.base.to_spec();
                let mut out = v.clone();
                out.resize(e.minimal_poly.len() - 1, b.zero());
                out
            }
            _ => vec![a.clone()],
        }
    }

    pub fn from_coordinates(&self, mut coords: Vec<FieldElement>) -> FieldElement {
        match self {
            FieldSpec::SimpleExtension(e) => {
                let b = e.base.to_spec();
                reduce_mod(&b, &mut coords, &e.minimal_poly);
                FieldElement::Algebraic(coords)
            }
            _ => coords.pop().unwrap_or_else(|| self.zero()),
        }
    }

    /// Rational value of a base element of characteristic zero.
    pub fn as_rational(&self, a: &FieldElement) -> Option<BigRational> {
        match a {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Algebraic(v) if v.is_empty() && self.characteristic() == 0 => Some(BigRational::zero()),
            FieldElement::Algebraic(v) if v.len() == 1 => self.base().to_spec().as_rational(&v[0]),
            _ => None,
        }
    }

    pub fn display<'a>(&'a self, a: &'a FieldElement) -> ElementDisplay<'a> {
        ElementDisplay { field: self, elem: a }
    }

    /// True when the printed element would need parentheses as a factor.
    pub(crate) fn is_compound(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Algebraic(v) => v.iter().filter(|c| !self.base().to_spec().is_zero(c)).count() > 1,
            _ => false,
        }
    }

    /// True when the element prints with a leading minus sign.
    pub(crate) fn is_negative_looking(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Rational(q) => q.is_negative(),
            FieldElement::Algebraic(v) if !self.is_compound(a) => {
                let b = self.base().to_spec();
                v.iter().find(|c| !b.is_zero(c)).map_or(false, |c| b.is_negative_looking(c))
            }
            _ => false,
        }
    }
}

fn trim(b: &FieldSpec, v: &mut Vec<FieldElement>) {
    while v.last().map_or(false, |c| b.is_zero(c)) {
        v.pop();
    }
}

/// Reduces a coefficient list modulo a monic polynomial, in place.
fn reduce_mod(b: &FieldSpec, v: &mut Vec<FieldElement>, modulus: &[FieldElement]) {
    let dm = modulus.len() - 1;
    trim(b, v);
    while v.len() > dm {
        let top = v.len() - 1;
        let c = v[top].clone();
        if !b.is_zero(&c) {
            let off = top - dm;
            for (i, m) in modulus.iter().enumerate() {
                v[off + i] = b.sub(&v[off + i], &b.mul(&c, m));
            }
        }
        v.pop();
        trim(b, v);
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
            FieldSpec::SimpleExtension(e) => {
                let b = e.base.to_spec();
                let m = UniPoly::new(&b, e.minimal_poly.clone());
                write!(f, "{}({})/{}", b, e.generator, m.display(&e.generator))
            }
        }
    }
}

pub struct ElementDisplay<'a> {
    field: &'a FieldSpec,
    elem: &'a FieldElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.field, self.elem) {
            (_, FieldElement::Rational(q)) => write!(f, "{q}"),
            (_, FieldElement::Modular(r)) => write!(f, "{r}"),
            (FieldSpec::SimpleExtension(e), FieldElement::Algebraic(v)) => {
                let b = e.base.to_spec();
                let p = UniPoly::new(&b, v.clone());
                write!(f, "{}", p.display(&e.generator))
            }
            _ => write!(f, "?"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn q_i() -> FieldSpec {
        let q = FieldSpec::Rationals;
        FieldSpec::extension(BaseField::Rationals, "i", vec![q.one(), q.zero(), q.one()]).unwrap()
    }

    #[test]
    fn rational_inverse() {
        let q = FieldSpec::Rationals;
        let a = FieldElement::Rational(BigRational::new(2.into(), 3.into()));
        let inv = q.inv(&a).unwrap();
        assert_eq!(inv, FieldElement::Rational(BigRational::new(3.into(), 2.into())));
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.inv(&f7.from_i64(3)).unwrap(), f7.from_i64(5));
    }

    #[test]
    fn gaussian_inverse() {
        let k = q_i();
        let i = k.generator().unwrap();
        let inv = k.inv(&i).unwrap();
        assert_eq!(inv, k.neg(&i));
        assert_eq!(k.mul(&i, &i), k.from_i64(-1));
    }

    #[test]
    fn zero_inversion_and_bad_fields() {
        assert_eq!(FieldSpec::Rationals.inv(&FieldSpec::Rationals.zero()), Err(Error::ZeroInversion));
        assert!(FieldSpec::prime(9).is_err());
        assert!(FieldSpec::prime(1 << 31).is_err());
        let q = FieldSpec::Rationals;
        // x^2 - 1 is reducible
        let r = FieldSpec::extension(BaseField::Rationals, "a", vec![q.from_i64(-1), q.zero(), q.one()]);
        assert!(matches!(r, Err(Error::InvalidField(_))));
        let r = FieldSpec::extension(BaseField::Rationals, "a", vec![q.from_i64(-1), q.one()]);
        assert!(matches!(r, Err(Error::InvalidField(_))));
    }

    #[test]
    fn field_axioms_on_samples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let f7 = FieldSpec::prime(7).unwrap();
        let f49 = FieldSpec::extension(BaseField::PrimeField(7), "a", vec![f7.one(), f7.zero(), f7.one()]).unwrap();
        for k in [FieldSpec::Rationals, f7, q_i(), f49] {
            for _ in 0..200 {
                let a = k.random(&mut rng, 20);
                let b = k.random(&mut rng, 20);
                let c = k.random(&mut rng, 20);
                assert_eq!(k.add(&a, &b), k.add(&b, &a));
                assert_eq!(k.mul(&a, &b), k.mul(&b, &a));
                assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
                assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
                assert!(k.is_zero(&k.sub(&a, &a)));
                if !k.is_zero(&a) {
                    assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
                }
            }
        }
    }

    #[test]
    fn finite_field_enumeration() {
        let f3 = FieldSpec::prime(3).unwrap();
        let f9 = FieldSpec::extension(BaseField::PrimeField(3), "a", vec![f3.one(), f3.zero(), f3.one()]).unwrap();
        let all = f9.elements().unwrap();
        assert_eq!(all.len(), 9);
        let nonzero = all.iter().filter(|e| !f9.is_zero(e)).count();
        assert_eq!(nonzero, 8);
        for e in &all {
            assert_eq!(f9.pow(e, 9), *e);
        }
    }

    #[test]
    fn display_forms() {
        let k = q_i();
        assert_eq!(k.to_string(), "Q(i)/i^2+1");
        let e = k.add(&k.generator().unwrap(), &k.from_i64(2));
        assert_eq!(k.display(&e).to_string(), "i+2");
    }
}
