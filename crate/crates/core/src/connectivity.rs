//! The graph of top-dimensional minimal primes joined along codimension
//! one, its component count, and the structure of the endomorphism ring
//! of the top local cohomology module that this count determines.

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homological::{canonical_module, top_dimensional_part, HilbertSeries};
use crate::ideal::Ideal;

/// Whether the declared coefficient field was asserted to split every
/// top-dimensional component geometrically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeometricFlag {
    FieldCertifiedByUser,
    BaseFieldOnly,
}

impl GeometricFlag {
    pub fn from_certified(certified: bool) -> GeometricFlag {
        if certified {
            GeometricFlag::FieldCertifiedByUser
        } else {
            GeometricFlag::BaseFieldOnly
        }
    }

    pub fn is_certified(self) -> bool {
        self == GeometricFlag::FieldCertifiedByUser
    }
}

/// Vertices are the top-dimensional minimal primes, sorted by reduced
/// Gröbner basis; `(i, j)` with `i < j` is an edge when `P_i + P_j` has
/// dimension `d - 1`.
#[derive(Clone, Debug)]
pub struct HhGraph {
    d: usize,
    vertices: Vec<Ideal>,
    edges: Vec<(usize, usize)>,
    field: FieldSpec,
    flag: GeometricFlag,
}

impl HhGraph {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> &[Ideal] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn geometric_flag(&self) -> GeometricFlag {
        self.flag
    }

    pub fn with_flag(mut self, flag: GeometricFlag) -> HhGraph {
        self.flag = flag;
        self
    }

    /// Canonical generator strings of each vertex.
    pub fn vertex_strings(&self) -> Result<Vec<Vec<String>>> {
        self.vertices.iter().map(|p| p.canonical_strings()).collect()
    }

    pub fn components(&self) -> Result<Components> {
        connected_components(self)
    }
}

/// A partition of the vertex set into connected components, each sorted,
/// listed by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Components {
    pub t: usize,
    pub partition: Vec<Vec<usize>>,
}

pub fn hh_graph(ideal: &Ideal) -> Result<HhGraph> {
    let d = ideal.dimension()?;
    let primes = ideal.minimal_primes()?;
    let mut vertices = Vec::new();
    for p in primes.primes() {
        if p.dimension()? == d {
            vertices.push(p.clone());
        }
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if meet_in_codimension_one(&vertices[i], &vertices[j], d)? {
                edges.push((i, j));
            }
        }
    }
    Ok(HhGraph { d, vertices, edges, field: ideal.ring().field().clone(), flag: GeometricFlag::BaseFieldOnly })
}

fn meet_in_codimension_one(p: &Ideal, q: &Ideal, d: usize) -> Result<bool> {
    let s = p.sum(q)?;
    if s.is_unit()? {
        return Ok(false);
    }
    Ok(d >= 1 && s.dimension()? == d - 1)
}

pub fn connected_components(g: &HhGraph) -> Result<Components> {
    if g.vertices.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(components_of(g.vertices.len(), &g.edges))
}

/// Union-find partition of `0..n` by the given edges.
pub fn components_of(n: usize, edges: &[(usize, usize)]) -> Components {
    let mut uf = UnionFind::<usize>::new(n);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    let labels = uf.into_labeling();
    let mut partition: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        let r = labels[v];
        match root_of[r] {
            Some(k) => partition[k].push(v),
            None => {
                root_of[r] = Some(partition.len());
                partition.push(vec![v]);
            }
        }
    }
    Components { t: partition.len(), partition }
}

/// `lambda_{d,d}` as the number of connected components of the graph of
/// the top-dimensional part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyubeznikTop {
    pub lambda: usize,
    pub flag: GeometricFlag,
}

/// The graph used for top-dimensional invariants. For homogeneous input
/// this is the graph of `I_d`; it has the same vertices as that of `I`.
pub fn top_graph(ideal: &Ideal, certified: bool) -> Result<HhGraph> {
    let base = if is_homogeneous(ideal) { top_dimensional_part(ideal)? } else { ideal.clone() };
    Ok(hh_graph(&base)?.with_flag(GeometricFlag::from_certified(certified)))
}

fn is_homogeneous(ideal: &Ideal) -> bool {
    ideal.generators().iter().all(|g| g.is_homogeneous()) && ideal.ring().modulus().map_or(true, |f| f.is_homogeneous())
}

pub fn lyubeznik_top(ideal: &Ideal, certified: bool) -> Result<LyubeznikTop> {
    if ideal.dimension()? == 0 {
        return Err(Error::InvalidArgument("the top Lyubeznik number needs dim R/I >= 1".into()));
    }
    let g = top_graph(ideal, certified)?;
    Ok(LyubeznikTop { lambda: g.components()?.t, flag: g.geometric_flag() })
}

/// Structure of `B = End(H^c_I(R))` read off from the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoReport {
    pub t: usize,
    pub components: Vec<Vec<usize>>,
    pub lambda_top: usize,
    pub b_is_local: bool,
    pub b_num_max_ideals: usize,
    /// Rank of `B` as a free module; `None` (not applicable) over a
    /// quotient ring.
    pub b_free_rank: Option<usize>,
    /// `None` (not applicable) over a quotient ring.
    #[serde(rename = "b_iso_to_R")]
    pub b_iso_to_r: Option<bool>,
    pub geometric_flag: GeometricFlag,
    pub warnings: Vec<String>,
}

pub fn endo_structure_report(ideal: &Ideal, certified: bool) -> Result<EndoReport> {
    let g = top_graph(ideal, certified)?;
    let comps = g.components()?;
    let t = comps.t;
    let regular = !ideal.ring().has_modulus();
    let flag = g.geometric_flag();
    let mut warnings = vec!["computed in the graded model of the completion".to_string()];
    if !flag.is_certified() {
        warnings.push(format!(
            "component count over {} only; it can only grow over a field extension",
            ideal.ring().field()
        ));
    }
    if !regular {
        warnings.push("ambient ring is not regular: free rank and isomorphism with R are not applicable".to_string());
    }
    Ok(EndoReport {
        t,
        components: comps.partition,
        lambda_top: t,
        b_is_local: t == 1,
        b_num_max_ideals: t,
        b_free_rank: regular.then_some(t),
        b_iso_to_r: regular.then_some(t == 1 && flag.is_certified()),
        geometric_flag: flag,
        warnings,
    })
}

/// Ideals `I_j` cutting out the connected components, with the additivity
/// check `hilb K(R/I_d) = sum_j hilb K(R/I_j)`.
#[derive(Clone, Debug)]
pub struct ComponentIdeals {
    pub ideals: Vec<Ideal>,
    pub whole: HilbertSeries,
    pub parts: Vec<HilbertSeries>,
}

pub fn component_ideals(ideal: &Ideal, certified: bool) -> Result<ComponentIdeals> {
    let top = top_dimensional_part(ideal)?;
    let g = hh_graph(&top)?.with_flag(GeometricFlag::from_certified(certified));
    let comps = g.components()?;
    let mut ideals = Vec::new();
    for part in &comps.partition {
        let mut acc = g.vertices()[part[0]].clone();
        for &v in &part[1..] {
            acc = acc.intersect(&g.vertices()[v])?;
        }
        ideals.push(acc);
    }
    let whole = canonical_module(&top)?.hilbert_series()?;
    let parts: Vec<HilbertSeries> =
        ideals.iter().map(|i| canonical_module(i)?.hilbert_series()).collect::<Result<_>>()?;
    let sum: HilbertSeries = parts.iter().cloned().sum();
    if sum != whole {
        return Err(Error::CertificateFailure(format!(
            "canonical module series {whole} differs from the sum over components {sum}"
        )));
    }
    Ok(ComponentIdeals { ideals, whole, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    #[test]
    fn small_graphs() {
        assert_eq!(components_of(2, &[]).t, 2);
        assert_eq!(components_of(3, &[(0, 1), (1, 2)]).t, 1);
        assert_eq!(components_of(4, &[(0, 2)]).partition, vec![vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn crossing_planes() {
        let r = RingCtx::rational(&["x", "y", "z"]);
        let g = hh_graph(&Ideal::parse(&r, "x*y").unwrap()).unwrap();
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(lyubeznik_top(&Ideal::parse(&r, "x*y").unwrap(), false).unwrap().lambda, 1);
    }

    #[test]
    fn two_planes_meeting_in_a_point() {
        let r = RingCtx::rational(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, "x, y").unwrap().intersect(&Ideal::parse(&r, "z, w").unwrap()).unwrap();
        let rep = endo_structure_report(&i, true).unwrap();
        assert_eq!(rep.t, 2);
        assert_eq!(rep.b_num_max_ideals, 2);
        assert_eq!(rep.b_free_rank, Some(2));
        assert_eq!(rep.b_iso_to_r, Some(false));
        let c = component_ideals(&i, true).unwrap();
        assert_eq!(c.ideals.len(), 2);
        assert_eq!(c.whole, HilbertSeries::new(-2, vec![2], 2));
    }

    #[test]
    fn quotient_ring_report() {
        let p = RingCtx::rational(&["u", "v", "x", "y"]);
        let r = p.quotient(&p.parse("x*v - y*u").unwrap()).unwrap();
        let rep = endo_structure_report(&Ideal::parse(&r, "x, y").unwrap(), true).unwrap();
        assert!(rep.b_is_local);
        assert_eq!(rep.b_free_rank, None);
        assert_eq!(rep.b_iso_to_r, None);
    }
}
