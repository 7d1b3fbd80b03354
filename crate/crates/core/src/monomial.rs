use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector with its cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial { exps: vec![0; n], degree: 0 }
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn new(exps: &[u32]) -> Result<Monomial> {
        let mut out = Vec::with_capacity(exps.len());
        for &e in exps {
            out.push(u16::try_from(e).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Monomial::from_u16(out))
    }

    pub fn from_u16(exps: Vec<u16>) -> Monomial {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        Monomial::new(&self.exps.iter().map(|&e| e as u32 * k).collect::<Vec<_>>())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Monomial { exps, degree: self.degree - other.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_u16(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_u16(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.names[i])?;
            } else {
                write!(f, "{}^{}", self.names[i], e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders. Variables are ranked in declaration order
/// (`x_1 > x_2 > ...`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Consecutive variable blocks of the given sizes, compared block by
    /// block with graded reverse lexicographic order inside each block.
    Block(Vec<usize>),
}

fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Two-block elimination order with `k` variables in the first block.
    pub fn elimination(k: usize, n: usize) -> MonomialOrder {
        MonomialOrder::Block(vec![k, n - k])
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonomialOrder::Block(sizes) => {
                let mut start = 0;
                for &s in sizes {
                    let end = (start + s).min(a.exps.len());
                    match grevlex_range(&a.exps[start..end], &b.exps[start..end]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    start = end;
                }
                grevlex_range(&a.exps[start..], &b.exps[start..])
            }
        }
    }

    /// Degree-compatible orders compare total degree first.
    pub fn is_graded(&self) -> bool {
        match self {
            MonomialOrder::GrevLex => true,
            MonomialOrder::Block(sizes) => sizes.iter().filter(|&&s| s > 0).count() <= 1,
            MonomialOrder::Lex => false,
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block(s) => format!("block{s:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn grevlex_and_lex_examples() {
        let a = mono(&[2, 1]);
        let b = mono(&[1, 3]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&b, &a), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // grevlex tie-break: x*z < y^2 in three variables
        assert_eq!(MonomialOrder::GrevLex.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn exponent_overflow() {
        assert_eq!(Monomial::new(&[70000]), Err(Error::ExponentOverflow));
        let big = mono(&[60000]);
        assert_eq!(big.mul(&big), Err(Error::ExponentOverflow));
    }

    fn order_strategy() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            Just(MonomialOrder::Block(vec![2, 2])),
            Just(MonomialOrder::Block(vec![1, 3])),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_well_orders(
            order in order_strategy(),
            u in prop::collection::vec(0u32..5, 4),
            v in prop::collection::vec(0u32..5, 4),
            w in prop::collection::vec(0u32..5, 4),
        ) {
            let (u, v, w) = (mono(&u), mono(&v), mono(&w));
            let one = Monomial::one(4);
            prop_assert_ne!(order.cmp(&one, &u), Ordering::Greater);
            let c = order.cmp(&u, &v);
            prop_assert_eq!(order.cmp(&u.mul(&w).unwrap(), &v.mul(&w).unwrap()), c);
            prop_assert_eq!(order.cmp(&v, &u), c.reverse());
            prop_assert_eq!(c == Ordering::Equal, u == v);
        }
    }
}
