use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A rational function `t^shift * N(t) / (1-t)^dim` with integer `N`,
/// kept in lowest terms: `N(1) != 0` whenever `dim > 0`, and `N` has no
/// leading or trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    shift: i32,
    numerator: Vec<i64>,
    dim: usize,
}

impl HilbertSeries {
    pub fn new(shift: i32, numerator: Vec<i64>, dim: usize) -> HilbertSeries {
        let mut h = HilbertSeries { shift, numerator, dim };
        h.canonicalize();
        h
    }

    pub fn zero() -> HilbertSeries {
        HilbertSeries { shift: 0, numerator: Vec::new(), dim: 0 }
    }

    /// Series of a free module with generators in the given degrees over a
    /// polynomial ring in `nvars` variables.
    pub fn free(degrees: &[i32], nvars: usize) -> HilbertSeries {
        let Some(&lo) = degrees.iter().min() else {
            return HilbertSeries::zero();
        };
        let hi = *degrees.iter().max().unwrap();
        let mut num = vec![0i64; (hi - lo + 1) as usize];
        for &d in degrees {
            num[(d - lo) as usize] += 1;
        }
        HilbertSeries::new(lo, num, nvars)
    }

    fn canonicalize(&mut self) {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        let lead = self.numerator.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.numerator.drain(..lead);
            self.shift += lead as i32;
        }
        if self.numerator.is_empty() {
            self.shift = 0;
            self.dim = 0;
            return;
        }
        while self.dim > 0 && self.numerator.iter().sum::<i64>() == 0 {
            // synthetic division by 1 - t
            let mut acc = 0;
            let mut q = Vec::with_capacity(self.numerator.len() - 1);
            for &c in &self.numerator[..self.numerator.len() - 1] {
                acc += c;
                q.push(acc);
            }
            self.numerator = q;
            self.dim -= 1;
            while self.numerator.last() == Some(&0) {
                self.numerator.pop();
            }
        }
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// Numerator coefficients, lowest degree first, starting at `t^shift`.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Exponent of `1 - t` in the reduced denominator: the Krull dimension
    /// of the module (0 for the zero module as well as for modules of
    /// finite length).
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Multiplicity: the numerator evaluated at 1.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.dim == 0
    }

    /// Total length for a series that is a Laurent polynomial.
    pub fn total(&self) -> Option<i64> {
        self.is_polynomial().then(|| self.multiplicity())
    }

    /// Coefficient of `t^k` in the power series expansion.
    pub fn coefficient(&self, k: i32) -> i64 {
        let mut sum = 0i64;
        for (j, &c) in self.numerator.iter().enumerate() {
            let e = k - self.shift - j as i32;
            if e < 0 {
                break;
            }
            sum += c * binomial(e as i64 + self.dim as i64 - 1, self.dim as i64 - 1);
        }
        sum
    }

    /// Coefficients of `t^from, ..., t^to`.
    pub fn expand(&self, from: i32, to: i32) -> Vec<i64> {
        (from..=to).map(|k| self.coefficient(k)).collect()
    }

    fn over(&self, dim: usize) -> (i32, Vec<i64>) {
        let mut num = self.numerator.clone();
        for _ in self.dim..dim {
            let mut next = vec![0i64; num.len() + 1];
            for (i, &c) in num.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            num = next;
        }
        (self.shift, num)
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        if self.is_zero() {
            return if sign > 0 { other.clone() } else { -other.clone() };
        }
        if other.is_zero() {
            return self.clone();
        }
        let dim = self.dim.max(other.dim);
        let (sa, a) = self.over(dim);
        let (sb, b) = other.over(dim);
        let lo = sa.min(sb);
        let hi = (sa + a.len() as i32).max(sb + b.len() as i32);
        let mut num = vec![0i64; (hi - lo) as usize];
        for (i, &c) in a.iter().enumerate() {
            num[(sa - lo) as usize + i] += c;
        }
        for (i, &c) in b.iter().enumerate() {
            num[(sb - lo) as usize + i] += sign * c;
        }
        HilbertSeries::new(lo, num, dim)
    }
}

impl Add for HilbertSeries {
    type Output = HilbertSeries;
    fn add(self, other: HilbertSeries) -> HilbertSeries {
        self.combine(&other, 1)
    }
}

impl Sub for HilbertSeries {
    type Output = HilbertSeries;
    fn sub(self, other: HilbertSeries) -> HilbertSeries {
        self.combine(&other, -1)
    }
}

impl Neg for HilbertSeries {
    type Output = HilbertSeries;
    fn neg(self) -> HilbertSeries {
        HilbertSeries { shift: self.shift, numerator: self.numerator.iter().map(|c| -c).collect(), dim: self.dim }
    }
}

impl std::iter::Sum for HilbertSeries {
    fn sum<I: Iterator<Item = HilbertSeries>>(iter: I) -> HilbertSeries {
        iter.fold(HilbertSeries::zero(), |a, b| a + b)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 {
        return if n == -1 && k == -1 { 1 } else { 0 };
    }
    if n < k {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let e = self.shift + i as i32;
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            let body = match (c.abs(), mono.is_empty()) {
                (a, true) => a.to_string(),
                (1, false) => mono,
                (a, false) => format!("{a}{mono}"),
            };
            if parts.is_empty() {
                parts.push(if c < 0 { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c < 0 { "-" } else { "+" }));
            }
        }
        let num = parts.join(" ");
        match self.dim {
            0 => write!(f, "{num}"),
            d => {
                let num = if parts.len() > 1 { format!("({num})") } else { num };
                if d == 1 {
                    write!(f, "{num}/(1-t)")
                } else {
                    write!(f, "{num}/(1-t)^{d}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_expansion() {
        let h = HilbertSeries::new(0, vec![1, 0, -1], 1);
        assert_eq!(h, HilbertSeries::new(0, vec![1, 1], 0));
        assert_eq!(h.to_string(), "1 + t");
        let p = HilbertSeries::free(&[0], 2);
        assert_eq!(p.expand(0, 4), vec![1, 2, 3, 4, 5]);
        let q = HilbertSeries::new(0, vec![1, 2], 4);
        assert_eq!(q.to_string(), "(1 + 2t)/(1-t)^4");
        assert_eq!(q.coefficient(1), 6);
    }

    #[test]
    fn arithmetic() {
        let a = HilbertSeries::free(&[0], 2);
        let b = HilbertSeries::free(&[0, 1], 2);
        let d = b.clone() - a.clone();
        assert_eq!(d, HilbertSeries::free(&[1], 2));
        assert_eq!((a.clone() - a).to_string(), "0");
        let s: HilbertSeries = vec![HilbertSeries::free(&[-1], 1), HilbertSeries::free(&[-1], 1)].into_iter().sum();
        assert_eq!(s.to_string(), "2t^-1/(1-t)");
    }
}
