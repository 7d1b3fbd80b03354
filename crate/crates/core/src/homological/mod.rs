//! Graded modules given by presentations: Ext, canonical modules, the
//! S2-fication, annihilators, Hilbert series, and the stages of the
//! double-Ext inverse system.

mod hilbert;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use hilbert::HilbertSeries;

use crate::error::{Error, Result};
use crate::groebner::{free_resolution, minimize_presentation, syzygies, FreeChain, Matrix, SubmoduleBasis};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// The cokernel of a homogeneous matrix `F_1 -> F_0`. Rows are the
/// generators, with degrees `generator_shifts`. The stored presentation
/// is minimized.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    relations: Matrix,
    hilbert: OnceLock<HilbertSeries>,
}

impl PresentedModule {
    pub fn new(relations: &Matrix) -> Result<PresentedModule> {
        check_homogeneous(relations)?;
        Ok(PresentedModule { relations: minimize_presentation(relations)?, hilbert: OnceLock::new() })
    }

    /// `R/I` with its generator in degree 0.
    pub fn quotient_ring(ideal: &Ideal) -> Result<PresentedModule> {
        let ring = ideal.ring();
        let rel = if ideal.is_zero() { Matrix::empty(ring, vec![0]) } else { Matrix::row(ring, ideal.generators())? };
        PresentedModule::new(&rel)
    }

    pub fn free(ring: &Ring, shifts: Vec<i32>) -> PresentedModule {
        PresentedModule { relations: Matrix::empty(ring, shifts), hilbert: OnceLock::new() }
    }

    pub fn zero(ring: &Ring) -> PresentedModule {
        PresentedModule::free(ring, Vec::new())
    }

    pub fn ring(&self) -> &Ring {
        self.relations.ring()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn generator_shifts(&self) -> &[i32] {
        self.relations.row_degrees()
    }

    pub fn num_generators(&self) -> usize {
        self.relations.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.relations.nrows() == 0
    }

    /// A free resolution over the module's own ring with at most `length`
    /// maps. Over a quotient ring the resolution is usually infinite and is
    /// truncated.
    pub fn resolution(&self, length: usize) -> Result<FreeChain> {
        free_resolution(&self.relations, length)
    }

    /// Hilbert series from the alternating sum of a finite free resolution
    /// over the ambient polynomial ring.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        if let Some(h) = self.hilbert.get() {
            return Ok(h.clone());
        }
        let h = if self.is_zero() {
            HilbertSeries::zero()
        } else {
            let amb = self.relations.ambient_presentation();
            let n = amb.ring().nvars();
            let chain = free_resolution(&amb, n + 1)?;
            (0..=chain.len())
                .map(|i| {
                    let s = HilbertSeries::free(&chain.degrees(i), n);
                    if i % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                })
                .sum()
        };
        Ok(self.hilbert.get_or_init(|| h).clone())
    }

    /// Hilbert function values in degrees `from..=to`, counted as standard
    /// monomials of a Gröbner basis of the relation module.
    pub fn hilbert_by_counting(&self, from: i32, to: i32) -> Result<Vec<i64>> {
        if self.is_zero() {
            return Ok(vec![0; (to - from + 1).max(0) as usize]);
        }
        let sb = SubmoduleBasis::new(&self.relations)?;
        let leads = sb.leading_terms();
        let n = self.ring().nvars();
        let shifts = self.generator_shifts();
        let mut out = Vec::new();
        for k in from..=to {
            let mut count = 0i64;
            for (i, &s) in shifts.iter().enumerate() {
                let e = k - s;
                if e < 0 {
                    continue;
                }
                let own: Vec<&Monomial> = leads.iter().filter(|(_, c)| *c == i).map(|(m, _)| m).collect();
                for_each_monomial(n, e as u32, &mut |m| {
                    if !own.iter().any(|l| l.divides(m)) {
                        count += 1;
                    }
                });
            }
            out.push(count);
        }
        Ok(out)
    }

    /// Compares the series expansion with direct counting over the first
    /// `span + 1` degrees starting at the lowest generator degree.
    pub fn check_hilbert(&self, span: i32) -> Result<bool> {
        let from = self.generator_shifts().iter().copied().min().unwrap_or(0);
        let series = self.hilbert_series()?.expand(from, from + span);
        Ok(series == self.hilbert_by_counting(from, from + span)?)
    }

    /// Krull dimension of the module (0 for the zero module).
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.hilbert_series()?.dimension())
    }

    /// `{r : r M = 0}`: the intersection over generators `e_i` of the
    /// quotients `(im A : e_i)`.
    pub fn annihilator(&self) -> Result<Ideal> {
        let ring = self.ring().clone();
        let mut acc = Ideal::unit(&ring);
        let r = self.num_generators();
        for i in 0..r {
            let ei: Vec<Polynomial> =
                (0..r).map(|k| if k == i { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }).collect();
            let e = Matrix::with_degrees(&ring, self.generator_shifts().to_vec(), vec![ei], vec![self.generator_shifts()[i]])?;
            let syz = syzygies(&e.concat(&self.relations)?)?;
            let gens: Vec<Polynomial> = syz.cols().iter().map(|c| c[0].clone()).collect();
            let q = Ideal::new(&ring, gens)?;
            acc = if i == 0 { q } else { acc.intersect(&q)? };
        }
        Ok(acc)
    }
}

fn check_homogeneous(m: &Matrix) -> Result<()> {
    if !m.is_homogeneous() {
        return Err(Error::NonHomogeneousInput("presentation matrix".into()));
    }
    if let Some(f) = m.ring().modulus() {
        if !f.is_homogeneous() {
            return Err(Error::NonHomogeneousInput("ring modulus".into()));
        }
    }
    Ok(())
}

/// Calls `f` on every monomial of degree `d` in `n` variables.
fn for_each_monomial(n: usize, d: u32, f: &mut dyn FnMut(&Monomial)) {
    fn go(i: usize, left: u32, exps: &mut Vec<u32>, f: &mut dyn FnMut(&Monomial)) {
        if i + 1 == exps.len() {
            exps[i] = left;
            f(&Monomial::new(exps).unwrap());
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            go(i + 1, left - e, exps, f);
        }
    }
    if n == 0 {
        if d == 0 {
            f(&Monomial::one(0));
        }
        return;
    }
    go(0, d, &mut vec![0; n], f);
}

/// The submodule of `coker(rel)` generated by the columns of `gens`, both
/// matrices having the same target, presented on those columns.
fn subquotient(gens: &Matrix, rel: &Matrix) -> Result<PresentedModule> {
    let ring = gens.ring();
    if gens.ncols() == 0 {
        return Ok(PresentedModule::zero(ring));
    }
    let k = gens.ncols();
    let syz = syzygies(&gens.concat(rel)?)?;
    let cols: Vec<Vec<Polynomial>> = syz.cols().iter().map(|c| c[..k].to_vec()).collect();
    let pres = Matrix::with_degrees(ring, gens.col_degrees().to_vec(), cols, syz.col_degrees().to_vec())?;
    PresentedModule::new(&pres)
}

/// Generators of `ker(coker(src) -> coker(tgt))` induced by `phi`, as
/// columns in the source free module.
fn induced_kernel(phi: &Matrix, tgt: &Matrix) -> Result<Matrix> {
    let ring = phi.ring();
    let k = phi.ncols();
    if phi.nrows() == 0 {
        return Ok(Matrix::identity(ring, phi.col_degrees().to_vec()));
    }
    let syz = syzygies(&phi.concat(tgt)?)?;
    let cols: Vec<Vec<Polynomial>> = syz.cols().iter().map(|c| c[..k].to_vec()).collect();
    let nonzero: Vec<usize> = (0..cols.len()).filter(|&j| cols[j].iter().any(|p| !p.is_zero())).collect();
    Matrix::with_degrees(ring, phi.col_degrees().to_vec(), cols, syz.col_degrees().to_vec()).map(|m| m.select_cols(&nonzero))
}

/// `Ext^i_R(M, R)`: cohomology of the dual of a free resolution of `M`.
pub fn ext_module(m: &PresentedModule, i: usize) -> Result<PresentedModule> {
    let ring = m.ring();
    if m.is_zero() {
        return Ok(PresentedModule::zero(ring));
    }
    let chain = m.resolution(i + 1)?;
    let fi = chain.degrees(i);
    if fi.is_empty() {
        return Ok(PresentedModule::zero(ring));
    }
    let dual: Vec<i32> = fi.iter().map(|d| -d).collect();
    let kernel = match chain.maps().get(i) {
        Some(next) if next.ncols() > 0 => syzygies(&next.transpose())?,
        _ => Matrix::identity(ring, dual.clone()),
    };
    let image = if i == 0 { Matrix::empty(ring, dual) } else { chain.maps()[i - 1].transpose() };
    subquotient(&kernel, &image)
}

/// `Hom_R(M, N)` as the kernel of `N^{r_0} -> N^{r_1}` given by the
/// transpose of the presentation of `M`.
pub fn hom_module(m: &PresentedModule, n: &PresentedModule) -> Result<PresentedModule> {
    let ring = m.ring().clone();
    let (a, b) = (m.relations(), n.relations());
    let (r0, r1, s0) = (a.nrows(), a.ncols(), b.nrows());
    if r0 == 0 || s0 == 0 {
        return Ok(PresentedModule::zero(&ring));
    }
    let zero = Polynomial::zero(&ring);
    let block_diag = |shifts: &[i32]| -> Result<Matrix> {
        let rows: Vec<i32> = shifts.iter().flat_map(|&d| b.row_degrees().iter().map(move |&g| g - d)).collect();
        let mut cols = Vec::new();
        let mut degs = Vec::new();
        for (i, &ai) in shifts.iter().enumerate() {
            for l in 0..b.ncols() {
                let mut col = vec![zero.clone(); shifts.len() * s0];
                for j in 0..s0 {
                    col[i * s0 + j] = b.entry(j, l).clone();
                }
                cols.push(col);
                degs.push(b.col_degrees()[l] - ai);
            }
        }
        Matrix::with_degrees(&ring, rows, cols, degs)
    };
    let src = block_diag(a.row_degrees())?;
    let tgt = block_diag(a.col_degrees())?;
    let mut phi_cols = Vec::with_capacity(r0 * s0);
    let mut phi_degs = Vec::with_capacity(r0 * s0);
    for i in 0..r0 {
        for j in 0..s0 {
            let mut col = vec![zero.clone(); r1 * s0];
            for k in 0..r1 {
                col[k * s0 + j] = a.entry(i, k).clone();
            }
            phi_cols.push(col);
            phi_degs.push(b.row_degrees()[j] - a.row_degrees()[i]);
        }
    }
    let phi = Matrix::with_degrees(&ring, tgt.row_degrees().to_vec(), phi_cols, phi_degs)?;
    let kernel = induced_kernel(&phi, &tgt)?;
    subquotient(&kernel, &src)
}

/// `n - d`: the ring dimension minus the dimension of `R/I`.
pub fn codimension(ideal: &Ideal) -> Result<usize> {
    Ok(ideal.ring().dim() - ideal.dimension()?)
}

/// `K(R/I) = Ext^c(R/I, R)` with `c = n - dim R/I`.
pub fn canonical_module(ideal: &Ideal) -> Result<PresentedModule> {
    let c = codimension(ideal)?;
    ext_module(&PresentedModule::quotient_ring(ideal)?, c)
}

/// Intersection of the primary components of maximal dimension, as the
/// annihilator of the canonical module.
pub fn top_dimensional_part(ideal: &Ideal) -> Result<Ideal> {
    canonical_module(ideal)?.annihilator()
}

/// The S2-fication `K(K(R/I))` of `R/I_d` together with the kernel `I_d`
/// of the natural map from `R/I`.
#[derive(Clone, Debug)]
pub struct S2Fication {
    pub module: PresentedModule,
    pub kernel: Ideal,
    pub codim: usize,
}

pub fn s2_fication(ideal: &Ideal) -> Result<S2Fication> {
    let c = codimension(ideal)?;
    let k = ext_module(&PresentedModule::quotient_ring(ideal)?, c)?;
    let kernel = k.annihilator()?;
    let module = ext_module(&k, c)?;
    Ok(S2Fication { module, kernel, codim: c })
}

/// One stage of the system `B_a = Ext^c(Ext^c(R/I^a, R), R)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationStage {
    pub alpha: u32,
    pub quotient_hilbert: HilbertSeries,
    pub b_hilbert: HilbertSeries,
    /// `dim_k` of the cokernel of `R/(I^a)_d -> B_a`; `None` if infinite.
    pub coker_dim: Option<u64>,
    /// `I^a` has no lower dimensional components, so `R/I^a` itself embeds.
    pub unmixed: bool,
}

pub const MAX_STABILIZATION_ALPHA: u32 = 4;

pub fn endo_stabilization(ideal: &Ideal, alpha_max: u32) -> Result<Vec<StabilizationStage>> {
    if alpha_max == 0 || alpha_max > MAX_STABILIZATION_ALPHA {
        return Err(Error::InvalidArgument(format!("alpha_max must lie in 1..={MAX_STABILIZATION_ALPHA}")));
    }
    let mut out = Vec::new();
    for alpha in 1..=alpha_max {
        let power = ideal.power(alpha)?;
        let s2 = s2_fication(&power)?;
        let a = PresentedModule::quotient_ring(&s2.kernel)?.hilbert_series()?;
        let unmixed = s2.kernel.same_as(&power)?;
        let b = s2.module.hilbert_series()?;
        let diff = b.clone() - a.clone();
        if (0..8).any(|k| diff.coefficient(diff.shift() + k) < 0) {
            return Err(Error::NegativeHilbertDifference(alpha));
        }
        let coker_dim = match diff.total() {
            Some(t) if t < 0 => return Err(Error::NegativeHilbertDifference(alpha)),
            Some(t) => Some(t as u64),
            None => None,
        };
        out.push(StabilizationStage { alpha, quotient_hilbert: a, b_hilbert: b, coker_dim, unmixed });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    #[test]
    fn koszul_duality() {
        let r = RingCtx::rational(&["x", "y"]);
        let m = PresentedModule::quotient_ring(&Ideal::parse(&r, "x, y").unwrap()).unwrap();
        let e = ext_module(&m, 2).unwrap();
        assert_eq!(e.hilbert_series().unwrap(), HilbertSeries::new(-2, vec![1], 0));
        assert!(ext_module(&m, 1).unwrap().is_zero());
        assert!(ext_module(&m, 0).unwrap().is_zero());
    }

    #[test]
    fn quotient_hilbert_series() {
        let r = RingCtx::rational(&["x"]);
        let m = PresentedModule::quotient_ring(&Ideal::parse(&r, "x^2").unwrap()).unwrap();
        assert_eq!(m.hilbert_series().unwrap(), HilbertSeries::new(0, vec![1, 1], 0));
        let r = RingCtx::rational(&["x", "y", "z"]);
        let m = PresentedModule::free(&r, vec![0, 0]);
        assert_eq!(m.hilbert_series().unwrap(), HilbertSeries::new(0, vec![2], 3));
        let m = PresentedModule::quotient_ring(&Ideal::parse(&r, "x*y, x*z").unwrap()).unwrap();
        assert!(m.check_hilbert(6).unwrap());
    }

    #[test]
    fn annihilators() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let i = Ideal::parse(&r, "x*y").unwrap();
        let k = canonical_module(&i).unwrap();
        assert!(k.annihilator().unwrap().same_as(&i).unwrap());
        let res = PresentedModule::quotient_ring(&Ideal::parse(&r, "x, y, z").unwrap()).unwrap();
        assert!(res.annihilator().unwrap().same_as(&Ideal::parse(&r, "x, y, z").unwrap()).unwrap());
    }

    #[test]
    fn top_dimensional_parts() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let i = Ideal::parse(&r, "x").unwrap().intersect(&Ideal::parse(&r, "y, z").unwrap().power(2).unwrap()).unwrap();
        assert!(top_dimensional_part(&i).unwrap().same_as(&Ideal::parse(&r, "x").unwrap()).unwrap());
        let j = Ideal::parse(&r, "x^2").unwrap();
        assert!(top_dimensional_part(&j).unwrap().same_as(&j).unwrap());
    }

    #[test]
    fn hom_of_canonical_modules() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let i = Ideal::parse(&r, "x*y").unwrap();
        let k = canonical_module(&i).unwrap();
        let h = hom_module(&k, &k).unwrap();
        let s = s2_fication(&i).unwrap();
        assert_eq!(h.hilbert_series().unwrap(), s.module.hilbert_series().unwrap());
        assert_eq!(h.hilbert_series().unwrap(), PresentedModule::quotient_ring(&i).unwrap().hilbert_series().unwrap());
    }

    #[test]
    fn nonhomogeneous_rejected() {
        let r = RingCtx::rational(&["x"]);
        let e = PresentedModule::quotient_ring(&Ideal::parse(&r, "x^2 - x").unwrap()).unwrap_err();
        assert!(matches!(e, Error::NonHomogeneousInput(_)));
    }

    #[test]
    fn determinantal_ring_is_cohen_macaulay() {
        let r = RingCtx::rational(&["x1", "x2", "x3", "x4", "x5", "x6"]);
        let i = Ideal::parse(&r, "x1*x5 - x2*x4, x1*x6 - x3*x4, x2*x6 - x3*x5").unwrap();
        let a = PresentedModule::quotient_ring(&i).unwrap();
        assert_eq!(a.hilbert_series().unwrap(), HilbertSeries::new(0, vec![1, 2], 4));
        assert!(a.check_hilbert(6).unwrap());
        assert!(ext_module(&a, 1).unwrap().is_zero());
        let k = ext_module(&a, 2).unwrap();
        assert_eq!(k.dimension().unwrap(), 4);
        let s = s2_fication(&i).unwrap();
        assert_eq!(s.module.hilbert_series().unwrap(), a.hilbert_series().unwrap());
        assert!(s.kernel.same_as(&i).unwrap());
    }

    #[test]
    fn stabilization_over_a_singular_quadric() {
        let p = RingCtx::rational(&["u", "v", "x", "y"]);
        let r = p.quotient(&p.parse("x*v - y*u").unwrap()).unwrap();
        let i = Ideal::parse(&r, "x, y").unwrap();
        let k = canonical_module(&i).unwrap();
        assert_eq!(k.hilbert_series().unwrap().numerator(), &[1]);
        assert_eq!(k.hilbert_series().unwrap().dimension(), 2);
        let stages = endo_stabilization(&i, 3).unwrap();
        let dims: Vec<Option<u64>> = stages.iter().map(|s| s.coker_dim).collect();
        assert_eq!(dims, vec![Some(0), Some(1), Some(4)]);
        for s in &stages {
            assert_eq!(s.b_hilbert, HilbertSeries::new(0, vec![s.alpha as i64], 2));
        }
    }
}
