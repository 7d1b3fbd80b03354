//! Gröbner bases of ideals and submodules, normal forms, syzygies, and
//! free resolutions.

pub(crate) mod engine;
mod matrix;
mod resolution;

use std::sync::{Arc, RwLock};

pub use engine::{pair_budget, set_pair_budget, with_pair_budget};
pub use matrix::Matrix;
pub use resolution::{free_resolution, minimal_generators, minimize_presentation, syzygies, FreeChain, SubmoduleBasis};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};
use engine::{ModOrder, Term, Vector};

/// Persistent store for ideal Gröbner bases. Entries returned by `lookup`
/// are re-certified before use.
pub trait GbCache: Send + Sync {
    fn lookup(&self, ring: &Ring, gens: &[Polynomial]) -> Option<Vec<Polynomial>>;
    fn store(&self, ring: &Ring, gens: &[Polynomial], basis: &[Polynomial]);
}

static DISK_CACHE: RwLock<Option<Arc<dyn GbCache>>> = RwLock::new(None);

/// Installs (or removes) the process-wide basis cache.
pub fn set_cache(cache: Option<Arc<dyn GbCache>>) {
    *DISK_CACHE.write().unwrap() = cache;
}

fn cache() -> Option<Arc<dyn GbCache>> {
    DISK_CACHE.read().unwrap().clone()
}

pub(crate) fn poly_terms(p: &Polynomial, comp: u32) -> Vec<Term> {
    p.terms().iter().map(|(m, c)| (m.clone(), comp, c.clone())).collect()
}

pub(crate) fn poly_to_vector(p: &Polynomial) -> Vector {
    Vector { terms: poly_terms(p, 0) }
}

pub(crate) fn vector_to_poly(ring: &Ring, v: &Vector) -> Polynomial {
    let terms: Vec<(Monomial, FieldElement)> = v.terms.iter().map(|(m, _, c)| (m.clone(), c.clone())).collect();
    Polynomial::from_terms(ring, terms)
}

/// Reduced Gröbner basis of an ideal. Over a quotient ring `P/(f)` the
/// basis is computed for the preimage ideal in `P` (with `f` adjoined);
/// [`GroebnerBasis::generators`] lists the elements that are nonzero in the
/// quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    ambient: Ring,
    ambient_basis: Vec<Polynomial>,
    generators: Vec<Polynomial>,
    reduced: bool,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
    }
    let ambient = ring.ambient();
    let mut lifted: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| lift(&ambient, g)).collect();
    if let Some(f) = ring.modulus() {
        lifted.push(f);
    }
    let store = cache();
    if let Some(c) = &store {
        if let Some(basis) = c.lookup(ring, gens) {
            if let Some(gb) = GroebnerBasis::from_trusted_candidate(ring, &lifted, basis) {
                return Ok(gb);
            }
        }
    }
    let basis = ideal_groebner(&ambient, &lifted)?;
    let gb = GroebnerBasis::from_ambient(ring, basis);
    if let Some(c) = &store {
        c.store(ring, gens, &gb.ambient_basis);
    }
    Ok(gb)
}

pub(crate) fn lift(ambient: &Ring, p: &Polynomial) -> Polynomial {
    if Arc::ptr_eq(p.ring(), ambient) {
        return p.clone();
    }
    Polynomial::from_sorted_terms(ambient, p.terms().to_vec())
}

/// Reduced Gröbner basis of polynomials of a ring without modulus.
pub(crate) fn ideal_groebner(ambient: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    debug_assert!(!ambient.has_modulus());
    let ord = ModOrder::ideal(ambient.order().clone());
    let vecs: Vec<Vector> = gens.iter().map(poly_to_vector).collect();
    let basis = engine::groebner(ambient.field(), &ord, &vecs)?;
    Ok(basis.iter().map(|v| Polynomial::from_sorted_terms(ambient, v.terms.iter().map(|(m, _, c)| (m.clone(), c.clone())).collect())).collect())
}

impl GroebnerBasis {
    fn from_ambient(ring: &Ring, ambient_basis: Vec<Polynomial>) -> GroebnerBasis {
        let ambient = ring.ambient();
        let generators = if ring.has_modulus() {
            let mut out: Vec<Polynomial> = Vec::new();
            for g in &ambient_basis {
                let p = Polynomial::from_terms(ring, g.terms().to_vec());
                if !p.is_zero() {
                    out.push(p.monic());
                }
            }
            out
        } else {
            ambient_basis.clone()
        };
        GroebnerBasis { ring: ring.clone(), ambient, ambient_basis, generators, reduced: true }
    }

    /// Accepts a cached basis only after checking the Buchberger criterion,
    /// reducedness, and membership of every input generator.
    fn from_trusted_candidate(ring: &Ring, lifted: &[Polynomial], basis: Vec<Polynomial>) -> Option<GroebnerBasis> {
        let ambient = ring.ambient();
        if basis.iter().any(|b| b.ring().names() != ambient.names() || b.is_zero()) {
            return None;
        }
        let basis: Vec<Polynomial> = basis.iter().map(|b| Polynomial::from_terms(&ambient, b.terms().to_vec())).collect();
        let ord = ModOrder::ideal(ambient.order().clone());
        let vecs: Vec<Vector> = basis.iter().map(poly_to_vector).collect();
        if vecs.iter().any(|v| !ambient.field().is_one(&v.lead().2)) {
            return None;
        }
        if !engine::is_groebner(ambient.field(), &ord, &vecs).ok()? {
            return None;
        }
        for g in lifted {
            if !engine::reduce(ambient.field(), &ord, &poly_to_vector(g), &vecs, false).ok()?.is_zero() {
                return None;
            }
        }
        Some(GroebnerBasis::from_ambient(ring, basis))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Basis elements, expressed in the ring (nonzero modulo any modulus).
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Basis of the preimage ideal in the ambient polynomial ring.
    pub fn ambient_basis(&self) -> &[Polynomial] {
        &self.ambient_basis
    }

    pub fn is_unit(&self) -> bool {
        self.ambient_basis.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.ambient_basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    fn vectors(&self) -> Vec<Vector> {
        self.ambient_basis.iter().map(poly_to_vector).collect()
    }

    /// Remainder of `f` with no term divisible by a leading monomial.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let ord = ModOrder::ideal(self.ambient.order().clone());
        let r = engine::reduce(self.ring.field(), &ord, &poly_to_vector(f), &self.vectors(), true)?;
        Ok(vector_to_poly(&self.ring, &r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Division algorithm with quotients against the ambient basis:
    /// `f = sum q_i * g_i + r`.
    pub fn divide(&self, f: &Polynomial) -> Result<(Vec<Polynomial>, Polynomial)> {
        let ord = ModOrder::ideal(self.ambient.order().clone());
        let lifted = lift(&self.ambient, f);
        let (qs, r) = engine::divide(self.ring.field(), &ord, &poly_to_vector(&lifted), &self.vectors())?;
        let qs = qs.into_iter().map(|terms| Polynomial::from_terms(&self.ambient, terms)).collect();
        Ok((qs, vector_to_poly(&self.ambient, &r)))
    }

    /// Re-checks the Buchberger criterion and reducedness exactly.
    pub fn certify(&self) -> Result<bool> {
        let ord = ModOrder::ideal(self.ambient.order().clone());
        let vecs = self.vectors();
        if !engine::is_groebner(self.ring.field(), &ord, &vecs)? {
            return Ok(false);
        }
        for (i, g) in vecs.iter().enumerate() {
            if !self.ring.field().is_one(&g.lead().2) {
                return Ok(false);
            }
            for (j, h) in vecs.iter().enumerate() {
                if i != j && g.terms.iter().any(|(m, _, _)| h.lead().0.divides(m)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Normal form of `f` against `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::RingCtx;

    #[test]
    fn small_bases() {
        let r = RingCtx::new(&["x", "y"], FieldSpec::Rationals, MonomialOrder::Lex).unwrap();
        let gb = buchberger(&r, &r.parse_list("x, x+y").unwrap()).unwrap();
        assert_eq!(gb.generators(), r.parse_list("y, x").unwrap().as_slice());
        let a = RingCtx::rational(&["u", "v", "x", "y"]);
        let f = a.parse("x*v - y*u").unwrap();
        let gb = buchberger(&a, &[f.clone()]).unwrap();
        assert_eq!(gb.generators(), &[f.monic()]);
    }

    #[test]
    fn normal_forms() {
        let r = RingCtx::rational(&["x", "y"]);
        let gb = buchberger(&r, &r.parse_list("x").unwrap()).unwrap();
        assert!(gb.normal_form(&r.parse("x^2").unwrap()).unwrap().is_zero());
        assert_eq!(gb.normal_form(&r.parse("x*y + y^2").unwrap()).unwrap(), r.parse("y^2").unwrap());
        let other = RingCtx::rational(&["a", "b"]);
        assert_eq!(gb.normal_form(&other.parse("a").unwrap()), Err(Error::RingMismatch));
    }

    #[test]
    fn division_replay() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let gb = buchberger(&r, &r.parse_list("x^2 - y*z, x*y - z^2, y^3 - x*z^2").unwrap()).unwrap();
        let f = r.parse("x^3*y + 7*x*y*z - z^4 + y^2").unwrap();
        let (qs, rem) = gb.divide(&f).unwrap();
        let mut acc = rem.clone();
        for (q, g) in qs.iter().zip(gb.ambient_basis()) {
            acc = acc.add(&q.mul(g).unwrap()).unwrap();
        }
        assert_eq!(acc, f);
        assert_eq!(rem, gb.normal_form(&f).unwrap());
    }

    #[test]
    fn budget_exhaustion() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let gens = r.parse_list("x^3 - y*z^2 + 1, y^3 - x^2*z, z^3 - x*y^2").unwrap();
        let res = with_pair_budget(2, || buchberger(&r, &gens));
        assert!(matches!(res, Err(Error::ResourceLimit(_))));
    }
}
