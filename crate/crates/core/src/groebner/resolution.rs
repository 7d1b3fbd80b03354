use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring};

use super::engine::{self, ModOrder, Vector};
use super::matrix::{column_vector, Matrix};
use super::lift;

/// Gröbner basis of the column span of a matrix, viewed as a submodule of
/// the free module `R^r`. Over `P/(f)` the relations `f*e_i` are included so
/// that the basis describes the preimage submodule of `P^r`.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    ring: Ring,
    ambient: Ring,
    row_degrees: Vec<i32>,
    ord: ModOrder,
    basis: Vec<Vector>,
}

impl SubmoduleBasis {
    pub fn new(a: &Matrix) -> Result<SubmoduleBasis> {
        let amb = a.ambient_presentation();
        let ord = ModOrder::top(a.ring().order().clone(), a.row_degrees().to_vec());
        let vecs: Vec<Vector> = (0..amb.ncols()).map(|j| amb.col_vector(j, &ord, 0)).collect();
        let basis = engine::groebner(a.ring().field(), &ord, &vecs)?;
        Ok(SubmoduleBasis {
            ring: a.ring().clone(),
            ambient: a.ring().ambient(),
            row_degrees: a.row_degrees().to_vec(),
            ord,
            basis,
        })
    }

    pub fn rank(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    fn field(&self) -> &FieldSpec {
        self.ring.field()
    }

    fn lift_col(&self, col: &[Polynomial]) -> Result<Vector> {
        if col.len() != self.rank() {
            return Err(Error::InvalidArgument("vector length does not match the module rank".into()));
        }
        if col.iter().any(|p| !same_ring(p.ring(), &self.ring)) {
            return Err(Error::RingMismatch);
        }
        let lifted: Vec<Polynomial> = col.iter().map(|p| lift(&self.ambient, p)).collect();
        Ok(column_vector(&lifted, &self.ord, 0, self.field()))
    }

    /// Normal form of a vector modulo the submodule.
    pub fn reduce(&self, col: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let v = self.lift_col(col)?;
        let r = engine::reduce(self.field(), &self.ord, &v, &self.basis, true)?;
        Ok(split(&self.ring, self.rank(), &r, 0))
    }

    pub fn contains(&self, col: &[Polynomial]) -> Result<bool> {
        let v = self.lift_col(col)?;
        Ok(engine::reduce(self.field(), &self.ord, &v, &self.basis, false)?.is_zero())
    }

    /// Leading terms `(monomial, component)` of the basis of the preimage
    /// submodule of `P^r`.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.basis.iter().map(|v| (v.lead().0.clone(), v.lead().1 as usize)).collect()
    }

    /// The basis vectors as columns of a matrix over the ambient ring.
    pub fn ambient_matrix(&self) -> Matrix {
        let degs = self.basis.iter().map(|v| v.sugar(&self.ord) as i32).collect();
        Matrix::from_vectors(&self.ambient, self.row_degrees.clone(), &self.basis, degs, 0)
    }

    /// Re-checks the Buchberger criterion on the stored basis.
    pub fn certify(&self) -> Result<bool> {
        engine::is_groebner(self.field(), &self.ord, &self.basis)
    }
}

fn split(ring: &Ring, r: usize, v: &Vector, offset: u32) -> Vec<Polynomial> {
    let mut buckets = vec![Vec::new(); r];
    for (m, c, a) in &v.terms {
        if *c >= offset && ((*c - offset) as usize) < r {
            buckets[(*c - offset) as usize].push((m.clone(), a.clone()));
        }
    }
    buckets.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect()
}

/// Generators of the kernel of `a: R^k -> R^r`. For homogeneous input the
/// result is a minimal generating set.
pub fn syzygies(a: &Matrix) -> Result<Matrix> {
    let ring = a.ring();
    let field = ring.field();
    let (r, k) = (a.nrows(), a.ncols());
    let amb = a.lift();
    let mut shifts = a.row_degrees().to_vec();
    shifts.extend(a.col_degrees().iter().copied());
    let mut blocks = vec![0u32; r];
    blocks.extend(std::iter::repeat(1).take(k));
    let ord = ModOrder { mono: ring.order().clone(), shifts, blocks, pot: false };

    let mut gens = Vec::with_capacity(k + r);
    for j in 0..k {
        let mut v = amb.col_vector(j, &ord, 0);
        let one = Monomial::one(ring.nvars());
        v.terms.push((one, (r + j) as u32, field.one()));
        gens.push(Vector::from_terms(field, &ord, v.terms));
    }
    if let Some(f) = ring.modulus() {
        for i in 0..r {
            gens.push(Vector { terms: super::poly_terms(&f, i as u32) }.monic(field));
        }
    }
    let basis = engine::groebner(field, &ord, &gens)?;
    let syz: Vec<Vector> = basis.into_iter().filter(|v| v.lead().1 as usize >= r).collect();
    let degs: Vec<i32> = syz.iter().map(|v| v.sugar(&ord) as i32).collect();
    let m = Matrix::from_vectors(ring, a.col_degrees().to_vec(), &syz, degs, r as u32);
    let nonzero: Vec<usize> = (0..m.ncols()).filter(|&j| m.col(j).iter().any(|p| !p.is_zero())).collect();
    let m = m.select_cols(&nonzero);
    if m.is_homogeneous() {
        minimal_generators(&m)
    } else {
        Ok(m)
    }
}

/// A generating subset of the columns of `a` spanning the same submodule.
/// For homogeneous matrices the subset is minimal; otherwise redundant
/// columns are removed greedily.
pub fn minimal_generators(a: &Matrix) -> Result<Matrix> {
    let nonzero: Vec<usize> = (0..a.ncols()).filter(|&j| a.col(j).iter().any(|p| !p.is_zero())).collect();
    let a = a.select_cols(&nonzero);
    if !a.is_homogeneous() {
        return greedy_generators(&a);
    }
    let mut order: Vec<usize> = (0..a.ncols()).collect();
    order.sort_by_key(|&j| a.col_degrees()[j]);
    let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for j in order {
        by_degree.entry(a.col_degrees()[j]).or_default().push(j);
    }
    let field = a.ring().field().clone();
    let mut kept: Vec<usize> = Vec::new();
    for (_, group) in by_degree {
        let low = SubmoduleBasis::new(&a.select_cols(&kept))?;
        let mut pivots: Vec<Vector> = Vec::new();
        for j in group {
            let nf = low.lift_col(a.col(j))?;
            let nf = engine::reduce(&field, &low.ord, &nf, &low.basis, true)?;
            let rest = eliminate(&field, &low.ord, nf, &pivots);
            if !rest.is_zero() {
                pivots.push(rest.monic(&field));
                kept.push(j);
            }
        }
    }
    kept.sort_unstable();
    Ok(a.select_cols(&kept))
}

/// Linear reduction of `v` by vectors with pairwise distinct leading terms.
fn eliminate(field: &FieldSpec, ord: &ModOrder, mut v: Vector, pivots: &[Vector]) -> Vector {
    let mut i = 0;
    while i < v.terms.len() {
        let (m, c, a) = v.terms[i].clone();
        if let Some(p) = pivots.iter().find(|p| p.lead().0 == m && p.lead().1 == c) {
            let neg = field.neg(&a);
            v = Vector { terms: engine::add_scaled(field, ord, &v.terms, &p.terms, &neg) };
        } else {
            i += 1;
        }
    }
    v
}

fn greedy_generators(a: &Matrix) -> Result<Matrix> {
    let mut kept: Vec<usize> = (0..a.ncols()).collect();
    let mut j = 0;
    while j < kept.len() {
        let others: Vec<usize> = kept.iter().copied().filter(|&k| k != kept[j]).collect();
        let sb = SubmoduleBasis::new(&a.select_cols(&others))?;
        if sb.contains(a.col(kept[j]))? {
            kept.remove(j);
        } else {
            j += 1;
        }
    }
    Ok(a.select_cols(&kept))
}

/// A presentation of the same module with no unit entries and a minimal
/// set of relations: each unit entry eliminates one generator and one
/// relation.
pub fn minimize_presentation(a: &Matrix) -> Result<Matrix> {
    let mut cur = a.clone();
    loop {
        cur = minimal_generators(&cur)?;
        let Some((i, j)) = find_unit(&cur) else {
            return Ok(cur);
        };
        cur = strip_unit(&cur, i, j)?;
    }
}

fn find_unit(a: &Matrix) -> Option<(usize, usize)> {
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            let p = a.entry(i, j);
            if p.is_constant() && !p.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

fn strip_unit(a: &Matrix, i: usize, j: usize) -> Result<Matrix> {
    let ring = a.ring();
    let field = ring.field();
    let c = a.entry(i, j).leading_coeff().unwrap().clone();
    let cinv = field.inv(&c)?;
    let pivot = a.col(j);
    let mut cols = Vec::with_capacity(a.ncols() - 1);
    let mut degs = Vec::with_capacity(a.ncols() - 1);
    for l in 0..a.ncols() {
        if l == j {
            continue;
        }
        let col = a.col(l);
        let factor = col[i].scale(&cinv);
        let mut out = Vec::with_capacity(a.nrows() - 1);
        for k in 0..a.nrows() {
            if k == i {
                continue;
            }
            out.push(if factor.is_zero() { col[k].clone() } else { col[k].sub(&factor.mul(&pivot[k])?)? });
        }
        cols.push(out);
        degs.push(a.col_degrees()[l]);
    }
    let rows: Vec<i32> = a.row_degrees().iter().enumerate().filter(|(k, _)| *k != i).map(|(_, d)| *d).collect();
    Matrix::with_degrees(ring, rows, cols, degs)
}

/// A chain `F_n -> ... -> F_1 -> F_0` of free modules; `maps[i]` is
/// `F_{i+1} -> F_i`.
#[derive(Clone, Debug)]
pub struct FreeChain {
    maps: Vec<Matrix>,
    rank0: Vec<i32>,
}

impl FreeChain {
    pub fn new(f0: Vec<i32>, maps: Vec<Matrix>) -> FreeChain {
        FreeChain { maps, rank0: f0 }
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Generator degrees of `F_i`.
    pub fn degrees(&self, i: usize) -> Vec<i32> {
        if i == 0 {
            return self.rank0.clone();
        }
        self.maps.get(i - 1).map(|m| m.col_degrees().to_vec()).unwrap_or_default()
    }

    /// Ranks of `F_0, F_1, ..., F_n`.
    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.maps.len()).map(|i| self.degrees(i).len()).collect()
    }

    /// Graded Betti numbers: for each `i`, the multiset of degrees of `F_i`
    /// as `(degree, count)` pairs.
    pub fn graded_betti(&self) -> Vec<Vec<(i32, usize)>> {
        (0..=self.maps.len())
            .map(|i| {
                let mut m: BTreeMap<i32, usize> = BTreeMap::new();
                for d in self.degrees(i) {
                    *m.entry(d).or_default() += 1;
                }
                m.into_iter().collect()
            })
            .collect()
    }

    /// Checks that consecutive maps compose to zero and that each map's
    /// columns generate the kernel of the previous one.
    pub fn certify(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        for (i, d) in self.maps.iter().enumerate() {
            let ker = syzygies(d)?;
            let image = match self.maps.get(i + 1) {
                Some(next) => next.clone(),
                None => continue,
            };
            let sb = SubmoduleBasis::new(&image)?;
            for j in 0..ker.ncols() {
                if !sb.contains(ker.col(j))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Free resolution of `coker(pres)` with at most `length` maps. The first
/// map is a minimized presentation; each later map is given by minimal
/// syzygies of the previous one. The resolution stops early once a kernel
/// vanishes.
pub fn free_resolution(pres: &Matrix, length: usize) -> Result<FreeChain> {
    let d0 = minimize_presentation(pres)?;
    let f0 = d0.row_degrees().to_vec();
    let mut maps = Vec::new();
    if length == 0 {
        return Ok(FreeChain::new(f0, maps));
    }
    let mut last = d0;
    loop {
        if last.ncols() == 0 {
            if maps.is_empty() {
                maps.push(last);
            }
            break;
        }
        maps.push(last.clone());
        if maps.len() == length {
            break;
        }
        last = syzygies(&last)?;
    }
    Ok(FreeChain::new(f0, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    #[test]
    fn koszul_ranks() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let a = Matrix::row(&r, &r.vars()).unwrap();
        let res = free_resolution(&a, 5).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 3, 1]);
        assert_eq!(res.graded_betti()[2], vec![(2, 3)]);
        assert!(res.certify().unwrap());
    }

    #[test]
    fn twisted_cubic() {
        let r = RingCtx::rational(&["x", "y", "z", "w"]);
        let gens = r.parse_list("x*z - y^2, x*w - y*z, y*w - z^2").unwrap();
        let res = free_resolution(&Matrix::row(&r, &gens).unwrap(), 4).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 2]);
        assert_eq!(res.graded_betti()[2], vec![(3, 2)]);
    }

    #[test]
    fn syzygies_over_a_quotient() {
        let p = RingCtx::rational(&["u", "v", "x", "y"]);
        let q = p.quotient(&p.parse("x*v - y*u").unwrap()).unwrap();
        let a = Matrix::row(&q, &q.parse_list("x, y").unwrap()).unwrap();
        let s = syzygies(&a).unwrap();
        assert_eq!(s.ncols(), 2);
        assert!(a.mul(&s).unwrap().is_zero());
        let sb = SubmoduleBasis::new(&s).unwrap();
        assert!(sb.contains(&q.parse_list("v, -u").unwrap()).unwrap());
        assert!(sb.contains(&q.parse_list("y, -x").unwrap()).unwrap());
    }

    #[test]
    fn periodic_truncation() {
        let p = RingCtx::rational(&["x"]);
        let q = p.quotient(&p.parse("x^2").unwrap()).unwrap();
        let a = Matrix::row(&q, &[q.var(0)]).unwrap();
        let res = free_resolution(&a, 4).unwrap();
        assert_eq!(res.ranks(), vec![1, 1, 1, 1, 1]);
        assert!(res.certify().unwrap());
    }

    #[test]
    fn unit_entries_are_stripped() {
        let r = RingCtx::rational(&["x", "y"]);
        let cols = vec![r.parse_list("1, x").unwrap(), r.parse_list("y, x*y").unwrap()];
        let a = Matrix::with_degrees(&r, vec![0, -1], cols, vec![0, 1]).unwrap();
        let m = minimize_presentation(&a).unwrap();
        assert_eq!(m.nrows(), 1);
        assert!(m.is_zero() || m.ncols() == 0);
    }
}
