//! Ideals: dimension, height, quotients, saturation, elimination,
//! intersection, powers, and minimal primes.
//!
//! Over a quotient ring `P/(f)` every operation is carried out on preimage
//! ideals in `P` (with `f` adjoined) and the results are mapped back.

mod primes;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring, RingCtx};

pub use primes::PrimeList;

/// A finitely generated ideal with a lazily computed Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

/// Height together with the codimension `dim R - dim R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightReport {
    pub height: usize,
    pub codim: usize,
    /// All minimal primes have the same dimension; `None` when the minimal
    /// primes could not be computed.
    pub equidimensional: Option<bool>,
    pub warnings: Vec<String>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    /// Parses a comma separated generator list.
    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ideal::new(ring, ring.parse_list(text)?)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), generators: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    /// The ideal generated by the given variables.
    pub fn of_vars(ring: &Ring, vars: &[usize]) -> Ideal {
        Ideal::new(ring, vars.iter().map(|&i| ring.var(i)).collect()).unwrap()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = buchberger(&self.ring, &self.generators)?;
        let _ = self.gb.set(g);
        Ok(self.gb.get().unwrap())
    }

    /// Reduced Gröbner basis elements, usable as a canonical key.
    pub fn canonical_basis(&self) -> Result<Vec<Polynomial>> {
        Ok(self.groebner()?.generators().to_vec())
    }

    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        Ok(self.canonical_basis()?.iter().map(|g| g.to_string()).collect())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals by mutual membership.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_generators(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^alpha`, generated by all `alpha`-fold products of generators.
    pub fn power(&self, alpha: u32) -> Result<Ideal> {
        if alpha == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut cur = self.clone();
        for _ in 1..alpha {
            cur = cur.product_dedup(self)?;
        }
        Ok(cur)
    }

    fn product_dedup(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                let p = a.mul(b)?;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Same generators over an extension of the coefficient field.
    pub fn extend_field(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| g.extend_field(ring)).collect::<Result<_>>()?;
        Ideal::new(ring, gens)
    }

    /// Generators plus the modulus, in the ambient ring.
    pub(crate) fn ambient_generators(&self) -> Vec<Polynomial> {
        let amb = self.ring.ambient();
        let mut out: Vec<Polynomial> = self.generators.iter().map(|g| Polynomial::from_sorted_terms(&amb, g.terms().to_vec())).collect();
        if let Some(f) = self.ring.modulus() {
            out.push(f);
        }
        out
    }

    /// Maps ambient polynomials back into this ideal's ring.
    fn from_ambient(&self, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().map(|g| Polynomial::from_terms(&self.ring, g.terms().to_vec())).collect();
        Ideal::new(&self.ring, gens).unwrap()
    }

    /// Leading monomials of the preimage ideal under a graded order.
    fn initial_monomials(&self) -> Result<Vec<Monomial>> {
        if self.ring.order() == &MonomialOrder::GrevLex {
            return Ok(self.groebner()?.leading_monomials());
        }
        let amb = self.ring.ambient().with_order(MonomialOrder::GrevLex);
        let gens: Vec<Polynomial> = self.ambient_generators().iter().map(|g| g.change_ring(&amb)).collect::<Result<_>>()?;
        Ok(buchberger(&amb, &gens)?.leading_monomials())
    }

    /// Krull dimension of `R/I`.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.max_independent_set()?.len())
    }

    /// A largest set of variables independent modulo the initial ideal
    /// (lexicographically first among those of maximal size).
    pub fn max_independent_set(&self) -> Result<Vec<usize>> {
        let lms = self.initial_monomials()?;
        if lms.iter().any(|m| m.is_one()) {
            return Err(Error::UnitIdeal);
        }
        Ok(max_independent_set(self.ring.nvars(), &lms))
    }

    /// Height from the minimal primes, with `dim R - dim R/I` alongside.
    pub fn height(&self) -> Result<HeightReport> {
        let d = self.dimension()?;
        let n = self.ring.dim();
        let codim = n - d;
        let mut warnings = Vec::new();
        let (height, equidimensional) = match self.minimal_primes() {
            Ok(primes) => {
                let dims: Vec<usize> = primes.primes().iter().map(|p| p.dimension()).collect::<Result<_>>()?;
                let top = *dims.iter().max().unwrap();
                (n - top, Some(dims.iter().all(|&x| x == top)))
            }
            Err(Error::DecompositionIncomplete(msg)) | Err(Error::ResourceLimit(msg)) => {
                warnings.push(format!("height not certified by minimal primes ({msg}); reporting dim R - dim R/I"));
                (codim, None)
            }
            Err(e) => return Err(e),
        };
        if equidimensional == Some(false) {
            warnings.push(format!("NonEquidimensional: minimal primes have different dimensions (height {height}, dim R - dim R/I = {codim})"));
        }
        Ok(HeightReport { height, codim, equidimensional, warnings })
    }

    /// `I ∩ J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let amb = self.ring.ambient();
        let gens = intersect_ambient(&amb, &self.ambient_generators(), &other.ambient_generators())?;
        Ok(self.from_ambient(gens))
    }

    /// `I : (g)`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let amb = self.ring.ambient();
        let g = Polynomial::from_sorted_terms(&amb, g.terms().to_vec());
        Ok(self.from_ambient(quotient_ambient(&amb, &self.ambient_generators(), &g)?))
    }

    /// `I : J`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : g^∞`.
    pub fn saturate_by(&self, g: &Polynomial) -> Result<Ideal> {
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let amb = self.ring.ambient();
        let g = Polynomial::from_sorted_terms(&amb, g.terms().to_vec());
        Ok(self.from_ambient(saturate_ambient(&amb, &self.ambient_generators(), &g)?))
    }

    /// `I : J^∞`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let q = self.saturate_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// Elements of `I` not involving the listed variables, as an ideal of
    /// the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        let amb = self.ring.ambient();
        Ok(self.from_ambient(eliminate_ambient(&amb, &self.ambient_generators(), drop)?))
    }

    /// Eliminates variables by name.
    pub fn eliminate_named(&self, names: &[&str]) -> Result<Ideal> {
        let idx = names
            .iter()
            .map(|n| self.ring.var_index(n).ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{n}`"))))
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    /// The same generators in a ring on a subset of the variables (matched
    /// by name). Fails if a generator uses a variable missing from `target`.
    pub fn restrict_to(&self, target: &Ring) -> Result<Ideal> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.names() {
            map.push(target.var_index(name));
        }
        let mut gens = Vec::new();
        for g in &self.generators {
            for (m, _) in g.terms() {
                for i in m.support() {
                    if map[i].is_none() {
                        return Err(Error::InvalidArgument(format!("generator {g} uses `{}`", self.ring.names()[i])));
                    }
                }
            }
            let full: Vec<usize> = map.iter().map(|x| x.unwrap_or(0)).collect();
            gens.push(g.rename_vars(target, &full)?);
        }
        Ideal::new(target, gens)
    }

    /// `f` lies in the radical of `I`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let amb = self.ring.ambient();
        let f = Polynomial::from_sorted_terms(&amb, f.terms().to_vec());
        let sat = saturate_ambient(&amb, &self.ambient_generators(), &f)?;
        Ok(buchberger(&amb, &sat)?.is_unit())
    }

    /// Minimal primes over the ring's coefficient field.
    pub fn minimal_primes(&self) -> Result<PrimeList> {
        primes::minimal_primes(self)
    }

    pub fn is_prime(&self) -> Result<bool> {
        if self.is_unit()? {
            return Ok(false);
        }
        let primes = self.minimal_primes()?;
        Ok(primes.len() == 1 && primes.primes()[0].is_subset_of(self)?)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

pub(crate) fn max_independent_set(n: usize, lms: &[Monomial]) -> Vec<usize> {
    let supports: Vec<u64> = lms.iter().map(|m| m.support().fold(0u64, |acc, i| acc | 1 << i)).collect();
    let mut best: Option<u64> = None;
    for size in (0..=n).rev() {
        let mut found = None;
        for_each_subset(n, size, &mut |mask| {
            if found.is_none() && supports.iter().all(|&s| s & !mask != 0) {
                found = Some(mask);
            }
        });
        if found.is_some() {
            best = found;
            break;
        }
    }
    let mask = best.unwrap_or(0);
    (0..n).filter(|i| mask & (1 << i) != 0).collect()
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(u64)) {
    fn go(start: usize, n: usize, k: usize, mask: u64, f: &mut dyn FnMut(u64)) {
        if k == 0 {
            f(mask);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            go(i + 1, n, k - 1, mask | 1 << i, f);
        }
    }
    go(0, n, k, 0, f)
}

/// A variable name not used by `ring` (nor its field generator).
pub(crate) fn fresh_name(ring: &Ring, stem: &str) -> String {
    let mut k = 0;
    loop {
        let name = format!("{stem}{k}");
        if ring.var_index(&name).is_none() && ring.field().generator_name() != Some(name.as_str()) {
            return name;
        }
        k += 1;
    }
}

/// Ring with one extra variable in front and an elimination order for it.
fn with_front_variable(ring: &Ring) -> Result<Ring> {
    let t = fresh_name(ring, "_t");
    let mut names = vec![t];
    names.extend(ring.names().iter().cloned());
    RingCtx::new(&names, ring.field().clone(), MonomialOrder::Block(vec![1, ring.nvars()]))
}

fn shift_in(big: &Ring, p: &Polynomial) -> Result<Polynomial> {
    let map: Vec<usize> = (1..=p.ring().nvars()).collect();
    p.rename_vars(big, &map)
}

fn shift_out(ring: &Ring, p: &Polynomial) -> Result<Polynomial> {
    let map: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    p.rename_vars(ring, &map)
}

/// Basis elements free of the first variable of `big`, moved to `ring`.
fn drop_front(ring: &Ring, big: &Ring, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let gb = buchberger(big, gens)?;
    gb.ambient_basis().iter().filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0)).map(|g| shift_out(ring, g)).collect()
}

pub(crate) fn intersect_ambient(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let big = with_front_variable(ring)?;
    let t = big.var(0);
    let one_minus_t = Polynomial::one(&big).sub(&t)?;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a {
        gens.push(t.mul(&shift_in(&big, g)?)?);
    }
    for g in b {
        gens.push(one_minus_t.mul(&shift_in(&big, g)?)?);
    }
    drop_front(ring, &big, &gens)
}

pub(crate) fn quotient_ambient(ring: &Ring, a: &[Polynomial], g: &Polynomial) -> Result<Vec<Polynomial>> {
    let inter = intersect_ambient(ring, a, std::slice::from_ref(g))?;
    inter
        .iter()
        .map(|h| h.exact_div(g)?.ok_or_else(|| Error::CertificateFailure("intersection element not divisible".into())))
        .collect()
}

pub(crate) fn saturate_ambient(ring: &Ring, a: &[Polynomial], g: &Polynomial) -> Result<Vec<Polynomial>> {
    let big = with_front_variable(ring)?;
    let t = big.var(0);
    let mut gens: Vec<Polynomial> = a.iter().map(|p| shift_in(&big, p)).collect::<Result<_>>()?;
    gens.push(Polynomial::one(&big).sub(&t.mul(&shift_in(&big, g)?)?)?);
    drop_front(ring, &big, &gens)
}

pub(crate) fn eliminate_ambient(ring: &Ring, gens: &[Polynomial], drop: &[usize]) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let order: Vec<usize> = drop.iter().copied().chain(keep.iter().copied()).collect();
    let names: Vec<String> = order.iter().map(|&i| ring.names()[i].clone()).collect();
    let big = RingCtx::new(&names, ring.field().clone(), MonomialOrder::Block(vec![drop.len(), keep.len()]))?;
    let mut to_new = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        to_new[i] = pos;
    }
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.rename_vars(&big, &to_new)).collect::<Result<_>>()?;
    let gb = buchberger(&big, &moved)?;
    gb.ambient_basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..drop.len()).all(|i| m.exp(i) == 0)))
        .map(|g| g.rename_vars(ring, &order))
        .collect()
}
