use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{reduce_by_monic, Polynomial};

/// A polynomial ring `k[x_1..x_n]`, optionally modulo one polynomial.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    names: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
    /// Monic, in the ambient ring's term order.
    modulus: Option<Vec<(Monomial, FieldElement)>>,
}

pub type Ring = Arc<RingCtx>;

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingCtx {
    pub fn new<S: AsRef<str>>(names: &[S], field: FieldSpec, order: MonomialOrder) -> Result<Ring> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_identifier(n) {
                return Err(Error::InvalidArgument(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidArgument(format!("variable `{n}` declared twice")));
            }
            if field.generator_name() == Some(n.as_str()) {
                return Err(Error::InvalidArgument(format!("variable `{n}` shadows the field generator")));
            }
        }
        if let MonomialOrder::Block(sizes) = &order {
            if sizes.iter().sum::<usize>() != names.len() {
                return Err(Error::InvalidArgument("block sizes must add up to the variable count".into()));
            }
        }
        Ok(Arc::new(RingCtx { names, field, order, modulus: None }))
    }

    /// Convenience constructor for the rationals with graded reverse
    /// lexicographic order.
    pub fn rational<S: AsRef<str>>(names: &[S]) -> Ring {
        RingCtx::new(names, FieldSpec::Rationals, MonomialOrder::GrevLex).expect("valid variable names")
    }

    /// The quotient `self / (f)`. `f` must be a nonconstant polynomial of
    /// the ambient ring.
    pub fn quotient(self: &Ring, f: &Polynomial) -> Result<Ring> {
        if self.modulus.is_some() {
            return Err(Error::InvalidArgument("only one modulus is supported".into()));
        }
        if !Arc::ptr_eq(f.ring(), self) && **f.ring() != **self {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::InvalidArgument("modulus must be nonzero".into()));
        }
        if f.is_constant() {
            return Err(Error::InvalidArgument("modulus must not be a unit".into()));
        }
        let f = f.monic();
        Ok(Arc::new(RingCtx {
            names: self.names.clone(),
            field: self.field.clone(),
            order: self.order.clone(),
            modulus: Some(f.terms().to_vec()),
        }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Krull dimension of the ring itself.
    pub fn dim(&self) -> usize {
        self.names.len() - usize::from(self.modulus.is_some())
    }

    pub fn modulus_terms(&self) -> Option<&[(Monomial, FieldElement)]> {
        self.modulus.as_deref()
    }

    /// The modulus as an element of the ambient ring.
    pub fn modulus(&self) -> Option<Polynomial> {
        let terms = self.modulus.clone()?;
        Some(Polynomial::from_sorted_terms(&self.ambient(), terms))
    }

    pub fn has_modulus(&self) -> bool {
        self.modulus.is_some()
    }

    /// Same variables and order, no modulus.
    pub fn ambient(&self) -> Ring {
        Arc::new(RingCtx { names: self.names.clone(), field: self.field.clone(), order: self.order.clone(), modulus: None })
    }

    /// Same variables with another order. The modulus, if any, is
    /// renormalized for the new order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        let modulus = self.modulus.as_ref().map(|m| {
            let mut t = m.clone();
            t.sort_by(|a, b| order.cmp(&b.0, &a.0));
            let inv = self.field.inv(&t[0].1).unwrap();
            t.iter().map(|(m, c)| (m.clone(), self.field.mul(c, &inv))).collect()
        });
        Arc::new(RingCtx { names: self.names.clone(), field: self.field.clone(), order, modulus })
    }

    /// Same variables and order over another field, which must equal or
    /// extend the current one.
    pub fn with_field(&self, field: FieldSpec) -> Result<Ring> {
        let ring = RingCtx::new(&self.names, field, self.order.clone())?;
        match self.modulus() {
            Some(f) => {
                let f = f.extend_field(&ring)?;
                ring.quotient(&f)
            }
            None => Ok(ring),
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(self: &Ring, i: usize) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::var(self.nvars(), i), self.field.one())])
    }

    pub fn var_named(self: &Ring, name: &str) -> Option<Polynomial> {
        self.var_index(name).map(|i| self.var(i))
    }

    pub fn vars(self: &Ring) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn parse(self: &Ring, text: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(self, text)
    }

    /// Parses a comma separated list of polynomials.
    pub fn parse_list(self: &Ring, text: &str) -> Result<Vec<Polynomial>> {
        crate::parse::parse_polynomial_list(self, text)
    }

    pub(crate) fn reduce_terms(&self, terms: Vec<(Monomial, FieldElement)>) -> Vec<(Monomial, FieldElement)> {
        match &self.modulus {
            Some(m) => reduce_by_monic(&self.field, &self.order, terms, m),
            None => terms,
        }
    }

    /// Canonical textual description used for cache keys and reports.
    pub fn describe(&self) -> String {
        let mut s = format!("{}[{}] order={}", self.field, self.names.join(","), self.order.name());
        if let Some(f) = self.modulus() {
            s.push_str(&format!(" modulus {f}"));
        }
        s
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
