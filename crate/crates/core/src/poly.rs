//! Sparse multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::{same_ring, Ring};

/// A polynomial whose terms are strictly descending in the ring's order.
/// Over a quotient ring the stored terms are the normal form modulo the
/// modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, FieldElement)>,
}

/// Sorts descending and merges equal monomials, dropping zeros.
pub(crate) fn canonicalize(
    field: &FieldSpec,
    order: &MonomialOrder,
    mut terms: Vec<(Monomial, FieldElement)>,
) -> Vec<(Monomial, FieldElement)> {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
            _ => out.push((m, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

/// Merges two descending term lists computing `a + scale * b`.
pub(crate) fn add_scaled(
    field: &FieldSpec,
    order: &MonomialOrder,
    a: &[(Monomial, FieldElement)],
    b: &[(Monomial, FieldElement)],
    scale: &FieldElement,
) -> Vec<(Monomial, FieldElement)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), field.mul(&b[j].1, scale)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &field.mul(&b[j].1, scale));
                if !field.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (m.clone(), field.mul(c, scale))));
    out
}

/// Full reduction of `terms` by a single monic polynomial.
pub(crate) fn reduce_by_monic(
    field: &FieldSpec,
    order: &MonomialOrder,
    terms: Vec<(Monomial, FieldElement)>,
    modulus: &[(Monomial, FieldElement)],
) -> Vec<(Monomial, FieldElement)> {
    let lm = &modulus[0].0;
    let mut rest = terms;
    let mut done: Vec<(Monomial, FieldElement)> = Vec::new();
    while let Some(pos) = rest.iter().position(|(m, _)| lm.divides(m)) {
        done.extend(rest.drain(..pos));
        let (m, c) = rest[0].clone();
        let q = m.div(lm);
        let shifted: Vec<_> = modulus.iter().map(|(mm, cc)| (mm.mul(&q).expect("exponent overflow"), cc.clone())).collect();
        rest = add_scaled(field, order, &rest, &shifted, &field.neg(&c));
    }
    done.extend(rest);
    done
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Polynomial {
        Polynomial::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn from_i64(ring: &Ring, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(n))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges, and reduces
    /// modulo the ring's modulus.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        let terms = canonicalize(ring.field(), ring.order(), terms);
        let terms = ring.reduce_terms(terms);
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts the caller that the terms are canonical.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: FieldElement) -> Polynomial {
        Polynomial::from_terms(ring, vec![(m, c)])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElement)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.field().is_one(&self.terms[0].1)
    }

    /// The order-maximal term.
    pub fn leading_term(&self) -> Result<(&Monomial, &FieldElement)> {
        self.terms.first().map(|(m, c)| (m, c)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let k = self.field();
        Ok(Polynomial { ring: self.ring.clone(), terms: add_scaled(k, self.ring.order(), &self.terms, &other.terms, &k.one()) })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let k = self.field();
        let m1 = k.neg(&k.one());
        Ok(Polynomial { ring: self.ring.clone(), terms: add_scaled(k, self.ring.order(), &self.terms, &other.terms, &m1) })
    }

    pub fn neg(&self) -> Polynomial {
        let k = self.field();
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), k.neg(c))).collect() }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let k = self.field();
        if k.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), k.mul(a, c))).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let k = self.field();
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                terms.push((m1.mul(m2)?, k.mul(c1, c2)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Result<Polynomial> {
        let k = self.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m1, c1) in &self.terms {
            terms.push((m1.mul(m)?, k.mul(c1, c)));
        }
        if self.ring.has_modulus() {
            Ok(Polynomial::from_terms(&self.ring, terms))
        } else {
            terms.retain(|(_, c)| !k.is_zero(c));
            Ok(Polynomial { ring: self.ring.clone(), terms })
        }
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&self.field().inv(c).unwrap()),
        }
    }

    /// Same terms, reinterpreted in a ring with the same variables (re-sorted
    /// and re-reduced).
    pub fn change_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() || ring.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Same terms over a ring whose field is this field or an extension of
    /// it; coefficients are embedded.
    pub fn extend_field(&self, ring: &Ring) -> Result<Polynomial> {
        if ring.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let (from, to) = (self.field(), ring.field());
        if from == to {
            return Ok(Polynomial::from_terms(ring, self.terms.clone()));
        }
        if from.extension_degree() != 1 || to.base().to_spec() != *from {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.clone(), to.embed(c.clone()))).collect()))
    }

    /// Maps variable `i` of this ring to variable `map[i]` of `ring`.
    pub fn rename_vars(&self, ring: &Ring, map: &[usize]) -> Result<Polynomial> {
        if ring.field() != self.field() {
            return Err(Error::RingMismatch);
        }
        let n = ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_u16(e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Substitutes polynomials (of a common target ring) for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let target = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e as u32)?)?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// Exact quotient by another polynomial in the ambient ring; `None` if
    /// the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check(divisor)?;
        let (lm, lc) = divisor.leading_term()?;
        let k = self.field();
        let inv = k.inv(lc)?;
        let mut rem = self.terms.clone();
        let mut quot = Vec::new();
        let order = self.ring.order();
        while let Some((m, c)) = rem.first().cloned() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = m.div(lm);
            let qc = k.mul(&c, &inv);
            let shifted: Vec<_> = divisor.terms.iter().map(|(mm, cc)| (mm.mul(&qm).unwrap(), cc.clone())).collect();
            rem = add_scaled(k, order, &rem, &shifted, &k.neg(&qc));
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot)))
    }

    /// Partial derivative with respect to variable `i` (ambient rings).
    pub fn derivative(&self, i: usize) -> Polynomial {
        let k = self.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                let d = e[i];
                e[i] -= 1;
                (Monomial::from_u16(e), k.mul(c, &k.from_i64(d as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// The largest monomial dividing every term.
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |g, (m, _)| g.gcd(m)))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.field();
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = k.is_negative_looking(c);
            let mag = if neg { k.neg(c) } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let compound = k.is_compound(&mag);
            if m.is_one() {
                if compound {
                    write!(f, "({})", k.display(&mag))?;
                } else {
                    write!(f, "{}", k.display(&mag))?;
                }
                continue;
            }
            if !k.is_one(&mag) {
                if compound {
                    write!(f, "({})*", k.display(&mag))?;
                } else {
                    write!(f, "{}*", k.display(&mag))?;
                }
            }
            write!(f, "{}", m.display(self.ring.names()))?;
        }
        Ok(())
    }
}
