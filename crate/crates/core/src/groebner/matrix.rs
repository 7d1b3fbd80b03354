use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

use super::engine::{ModOrder, Term, Vector};
use super::{lift, poly_terms};

/// A matrix over a ring, stored by columns, together with the degrees of
/// the generators of its source (columns) and target (rows) free modules.
/// A homogeneous matrix satisfies `deg(a_ij) = col_degree_j - row_degree_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    row_degrees: Vec<i32>,
    col_degrees: Vec<i32>,
    cols: Vec<Vec<Polynomial>>,
}

impl Matrix {
    /// Column degrees are inferred from the first nonzero entry of each
    /// column (zero columns get degree 0).
    pub fn new(ring: &Ring, row_degrees: Vec<i32>, cols: Vec<Vec<Polynomial>>) -> Result<Matrix> {
        let col_degrees = cols
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .find(|(_, p)| !p.is_zero())
                    .map(|(i, p)| p.total_degree().unwrap() as i32 + row_degrees[i])
                    .unwrap_or(0)
            })
            .collect();
        Matrix::with_degrees(ring, row_degrees, cols, col_degrees)
    }

    pub fn with_degrees(ring: &Ring, row_degrees: Vec<i32>, cols: Vec<Vec<Polynomial>>, col_degrees: Vec<i32>) -> Result<Matrix> {
        if cols.len() != col_degrees.len() {
            return Err(Error::InvalidArgument("column degree count mismatch".into()));
        }
        for c in &cols {
            if c.len() != row_degrees.len() {
                return Err(Error::InvalidArgument("column length does not match the row count".into()));
            }
            for p in c {
                if !same_ring(p.ring(), ring) {
                    return Err(Error::RingMismatch);
                }
            }
        }
        Ok(Matrix { ring: ring.clone(), row_degrees, col_degrees, cols })
    }

    /// A `1 x k` matrix with the given entries and a degree-0 target.
    pub fn row(ring: &Ring, entries: &[Polynomial]) -> Result<Matrix> {
        Matrix::new(ring, vec![0], entries.iter().map(|p| vec![p.clone()]).collect())
    }

    /// The `r x 0` matrix: presentation of a free module.
    pub fn empty(ring: &Ring, row_degrees: Vec<i32>) -> Matrix {
        Matrix { ring: ring.clone(), row_degrees, col_degrees: Vec::new(), cols: Vec::new() }
    }

    pub fn identity(ring: &Ring, degrees: Vec<i32>) -> Matrix {
        let n = degrees.len();
        let cols = (0..n)
            .map(|j| (0..n).map(|i| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) }).collect())
            .collect();
        Matrix { ring: ring.clone(), row_degrees: degrees.clone(), col_degrees: degrees, cols }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_degrees(&self) -> &[i32] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i32] {
        &self.col_degrees
    }

    pub fn cols(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn col(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.cols.iter().zip(&self.col_degrees).all(|(c, &d)| {
            c.iter().zip(&self.row_degrees).all(|(p, &r)| {
                p.is_zero() || (p.is_homogeneous() && p.total_degree().unwrap() as i32 + r == d)
            })
        })
    }

    pub fn transpose(&self) -> Matrix {
        let cols = (0..self.nrows()).map(|i| self.cols.iter().map(|c| c[i].clone()).collect()).collect();
        Matrix {
            ring: self.ring.clone(),
            row_degrees: self.col_degrees.iter().map(|d| -d).collect(),
            col_degrees: self.row_degrees.iter().map(|d| -d).collect(),
            cols,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::InvalidArgument("matrix dimensions do not agree".into()));
        }
        let mut cols = Vec::with_capacity(other.ncols());
        for oc in &other.cols {
            let mut col = vec![Polynomial::zero(&self.ring); self.nrows()];
            for (k, b) in oc.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (i, a) in self.cols[k].iter().enumerate() {
                    if !a.is_zero() {
                        col[i] = col[i].add(&a.mul(b)?)?;
                    }
                }
            }
            cols.push(col);
        }
        Ok(Matrix { ring: self.ring.clone(), row_degrees: self.row_degrees.clone(), col_degrees: other.col_degrees.clone(), cols })
    }

    /// Columns of `self` followed by those of `other`.
    pub fn concat(&self, other: &Matrix) -> Result<Matrix> {
        if self.row_degrees != other.row_degrees {
            return Err(Error::InvalidArgument("row degrees differ".into()));
        }
        let mut out = self.clone();
        out.cols.extend(other.cols.iter().cloned());
        out.col_degrees.extend(other.col_degrees.iter().copied());
        Ok(out)
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix {
            ring: self.ring.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: idx.iter().map(|&j| self.col_degrees[j]).collect(),
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    /// Ambient-ring copy of the matrix.
    pub fn lift(&self) -> Matrix {
        let amb = self.ring.ambient();
        Matrix {
            ring: amb.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: self.col_degrees.clone(),
            cols: self.cols.iter().map(|c| c.iter().map(|p| lift(&amb, p)).collect()).collect(),
        }
    }

    /// Over `R = P/(f)`: the `P`-matrix `[A | f*Id]` presenting the same
    /// module. Without a modulus this is [`Matrix::lift`].
    pub fn ambient_presentation(&self) -> Matrix {
        let mut out = self.lift();
        if let Some(f) = self.ring.modulus() {
            let amb = out.ring.clone();
            let fd = f.total_degree().unwrap() as i32;
            for i in 0..self.nrows() {
                let col = (0..self.nrows()).map(|k| if k == i { f.clone() } else { Polynomial::zero(&amb) }).collect();
                out.cols.push(col);
                out.col_degrees.push(self.row_degrees[i] + fd);
            }
        }
        out
    }

    pub(crate) fn col_vector(&self, j: usize, ord: &ModOrder, offset: u32) -> Vector {
        column_vector(&self.cols[j], ord, offset, self.ring.field())
    }

    pub(crate) fn from_vectors(ring: &Ring, row_degrees: Vec<i32>, vecs: &[Vector], col_degrees: Vec<i32>, offset: u32) -> Matrix {
        let r = row_degrees.len();
        let cols = vecs
            .iter()
            .map(|v| {
                let mut buckets: Vec<Vec<(crate::monomial::Monomial, crate::field::FieldElement)>> = vec![Vec::new(); r];
                for (m, c, a) in &v.terms {
                    if *c >= offset && ((*c - offset) as usize) < r {
                        buckets[(*c - offset) as usize].push((m.clone(), a.clone()));
                    }
                }
                buckets.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
            })
            .collect();
        Matrix { ring: ring.clone(), row_degrees, col_degrees, cols }
    }

    pub fn display(&self) -> String {
        format!("{self}")
    }
}

pub(crate) fn column_vector(col: &[Polynomial], ord: &ModOrder, offset: u32, field: &crate::field::FieldSpec) -> Vector {
    let mut terms: Vec<Term> = Vec::new();
    for (i, p) in col.iter().enumerate() {
        terms.extend(poly_terms(p, offset + i as u32));
    }
    Vector::from_terms(field, ord, terms)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows() {
            let row: Vec<String> = self.cols.iter().map(|c| c[i].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
