//! Finite orthogonality graphs over exact points.

mod export;
mod search;
mod solver;

pub use export::{export, from_json, parse_dimacs, to_dimacs, to_json, DimacsGraph, ExportFormat};
pub use search::{search_4chromatic, Candidate, PointSource, SearchConfig, SearchReport, Strategy};
pub use solver::{
    chromatic_number, chromatic_number_adj, dsatur_greedy, k_colouring, max_clique, ChromaticResult,
    SolverOptions, DEFAULT_CAP,
};

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::QSqrt2;
use crate::sphere::{alg_unit, AlgSpherePoint, SpherePoint};

/// A vertex: a rational unit vector or a unit vector over Q(√2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExactPoint {
    Rational(SpherePoint),
    Qsqrt2(AlgSpherePoint),
}

impl ExactPoint {
    /// The unit vector along a nonzero integer vector, when it has exact
    /// coordinates in Q(√2).
    pub fn from_vector(v: [BigInt; 3]) -> Result<Self> {
        if v.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let g = v[0].gcd(&v[1]).gcd(&v[2]);
        let v = v.map(|c| c / &g);
        let n = &v[0] * &v[0] + &v[1] * &v[1] + &v[2] * &v[2];
        let shown = format!("({},{},{})", v[0], v[1], v[2]);
        if let Some(d) = crate::numtheory::int_sqrt_exact(&n)? {
            let [a, b, c] = v;
            return SpherePoint::new(a, b, c, d).map(ExactPoint::Rational);
        }
        alg_unit(v).map(ExactPoint::Qsqrt2).ok_or_else(|| {
            Error::InvalidArgument(format!("the unit vector along {shown} is not defined over Q(√2)"))
        })
    }

    pub fn from_i64(v: [i64; 3]) -> Result<Self> {
        ExactPoint::from_vector(v.map(BigInt::from))
    }

    pub fn coords(&self) -> [QSqrt2; 3] {
        match self {
            ExactPoint::Rational(p) => p.to_qsqrt2(),
            ExactPoint::Qsqrt2(p) => p.coords().map(|c| c.clone()),
        }
    }

    /// Exact inner product in Q(√2).
    pub fn inner(&self, other: &ExactPoint) -> QSqrt2 {
        let (a, b) = (self.coords(), other.coords());
        &(&a[0] * &b[0]) + &(&(&a[1] * &b[1]) + &(&a[2] * &b[2]))
    }

    pub fn is_orthogonal(&self, other: &ExactPoint) -> bool {
        match (self, other) {
            // same sign as the rational inner product, scaled by d·d'
            (ExactPoint::Rational(p), ExactPoint::Rational(q)) => p.inner_form(q).is_zero(),
            _ => self.inner(other).is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&SpherePoint> {
        match self {
            ExactPoint::Rational(p) => Some(p),
            ExactPoint::Qsqrt2(_) => None,
        }
    }

    pub fn to_f64(&self) -> [f64; 3] {
        match self {
            ExactPoint::Rational(p) => p.to_f64(),
            ExactPoint::Qsqrt2(p) => p.to_f64(),
        }
    }

    /// Coordinates as a dedup key shared by both representations.
    fn key(&self) -> [QSqrt2; 3] {
        self.coords()
    }
}

impl From<SpherePoint> for ExactPoint {
    fn from(p: SpherePoint) -> Self {
        ExactPoint::Rational(p)
    }
}

impl From<AlgSpherePoint> for ExactPoint {
    fn from(p: AlgSpherePoint) -> Self {
        match p.to_sphere_point() {
            Some(q) => ExactPoint::Rational(q),
            None => ExactPoint::Qsqrt2(p),
        }
    }
}

impl fmt::Display for ExactPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactPoint::Rational(p) => p.fmt(f),
            ExactPoint::Qsqrt2(p) => p.fmt(f),
        }
    }
}

/// Vertices joined exactly when orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoGraph {
    vertices: Vec<ExactPoint>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl OrthoGraph {
    pub fn vertices(&self) -> &[ExactPoint] {
        &self.vertices
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_rational(&self) -> bool {
        self.vertices.iter().all(|v| v.as_rational().is_some())
    }

    /// The subgraph induced by `indices`, in that order.
    pub fn induced(&self, indices: &[usize]) -> Result<OrthoGraph> {
        let mut pos = vec![usize::MAX; self.len()];
        for (k, &i) in indices.iter().enumerate() {
            if i >= self.len() {
                return Err(Error::VertexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
            pos[i] = k;
        }
        let vertices: Vec<_> = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut edges = Vec::new();
        for (k, &i) in indices.iter().enumerate() {
            for &j in &self.adj[i] {
                if pos[j] != usize::MAX && k < pos[j] {
                    edges.push((k, pos[j]));
                }
            }
        }
        Ok(OrthoGraph::from_parts(vertices, edges))
    }

    /// The parity 3-colouring as a witness, when every vertex is rational.
    pub fn parity_colouring(&self) -> Option<Colouring> {
        let assignment = self
            .vertices
            .iter()
            .map(|v| v.as_rational().map(|p| p.colour3().index()))
            .collect::<Option<Vec<_>>>()?;
        Some(Colouring {
            assignment,
            palette: 3,
        })
    }

    fn from_parts(vertices: Vec<ExactPoint>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        OrthoGraph {
            vertices,
            edges,
            adj,
        }
    }
}

/// Builds the orthogonality graph, dropping exact duplicates but keeping
/// antipodal pairs as distinct vertices.
pub fn build_graph(points: impl IntoIterator<Item = ExactPoint>) -> OrthoGraph {
    let mut seen = HashSet::new();
    let vertices: Vec<ExactPoint> = points
        .into_iter()
        .filter(|p| seen.insert(p.key()))
        .collect();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i].is_orthogonal(&vertices[j]) {
                edges.push((i, j));
            }
        }
    }
    OrthoGraph::from_parts(vertices, edges)
}

/// A vertex colouring with colours `0..palette`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub assignment: Vec<usize>,
    pub palette: usize,
}

impl Colouring {
    pub fn colours_used(&self) -> usize {
        self.assignment.iter().collect::<HashSet<_>>().len()
    }
}

/// Outcome of checking a colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub valid: bool,
    pub violation: Option<(usize, usize)>,
}

/// Checks that no edge is monochromatic, reporting the first edge that is.
pub fn validate_colouring(g: &OrthoGraph, c: &Colouring) -> Result<Validation> {
    validate_adj(&g.adj, c)
}

pub(crate) fn validate_adj(adj: &[Vec<usize>], c: &Colouring) -> Result<Validation> {
    if c.assignment.len() != adj.len() {
        return Err(Error::ColouringLength {
            expected: adj.len(),
            got: c.assignment.len(),
        });
    }
    if let Some((vertex, &colour)) = c
        .assignment
        .iter()
        .enumerate()
        .find(|(_, &col)| col >= c.palette)
    {
        return Err(Error::ColourOutOfRange {
            vertex,
            colour,
            palette: c.palette,
        });
    }
    for (i, nbrs) in adj.iter().enumerate() {
        for &j in nbrs {
            if i < j && c.assignment[i] == c.assignment[j] {
                return Ok(Validation {
                    valid: false,
                    violation: Some((i, j)),
                });
            }
        }
    }
    Ok(Validation {
        valid: true,
        violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn axes() -> Vec<ExactPoint> {
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .map(|v| ExactPoint::from_i64(v).unwrap())
            .to_vec()
    }

    #[test]
    fn axes_form_a_triangle() {
        let g = build_graph(axes());
        assert_eq!(g.len(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn five_vertex_example() {
        let mut pts = axes();
        pts.push(ExactPoint::from_i64([1, 1, 0]).unwrap());
        pts.push(ExactPoint::from_i64([-1, 1, 0]).unwrap());
        let g = build_graph(pts);
        assert_eq!(g.len(), 5);
        assert_eq!(
            g.edges(),
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
        );
        assert!(!g.is_rational());
    }

    #[test]
    fn single_vertex_and_dedup() {
        let g = build_graph([ExactPoint::from_i64([0, 0, 1]).unwrap()]);
        assert_eq!((g.len(), g.edges().len()), (1, 0));

        let p = ExactPoint::from_i64([2, 4, 4]).unwrap();
        let g = build_graph([p.clone(), ExactPoint::from_i64([1, 2, 2]).unwrap(), p.clone()]);
        assert_eq!(g.len(), 1);

        // antipodes stay distinct and are not adjacent
        let g = build_graph([p.clone(), ExactPoint::from_i64([-1, -2, -2]).unwrap()]);
        assert_eq!((g.len(), g.edges().len()), (2, 0));
    }

    #[test]
    fn from_vector_cases() {
        assert_eq!(ExactPoint::from_i64([0, 0, 0]), Err(Error::ZeroVector));
        assert!(ExactPoint::from_i64([1, 1, 1]).is_err());
        assert!(matches!(ExactPoint::from_i64([0, 0, -3]).unwrap(), ExactPoint::Rational(_)));
        assert!(matches!(ExactPoint::from_i64([1, -1, 4]).unwrap(), ExactPoint::Qsqrt2(_)));
        let alg = crate::sphere::alg_point(&crate::projective::normalize_i64(1, 2, 2).unwrap()).unwrap();
        assert!(matches!(ExactPoint::from(alg), ExactPoint::Rational(_)));
    }

    #[test]
    fn mixed_orthogonality_matches_qsqrt2_inner_product() {
        let pts: Vec<_> = [[1, 1, 0], [1, -1, 4], [2, 2, 1], [0, 0, 1], [1, -1, 0], [-4, 4, 2], [1, 2, 2]]
            .iter()
            .map(|v| ExactPoint::from_i64(*v).unwrap())
            .collect();
        for p in &pts {
            for q in &pts {
                assert_eq!(p.is_orthogonal(q), p.inner(q).is_zero());
            }
        }
    }

    #[test]
    fn validation() {
        let g = build_graph(axes());
        let ok = Colouring { assignment: vec![0, 1, 2], palette: 3 };
        assert!(validate_colouring(&g, &ok).unwrap().valid);
        let bad = Colouring { assignment: vec![0, 0, 1], palette: 3 };
        assert_eq!(
            validate_colouring(&g, &bad).unwrap(),
            Validation { valid: false, violation: Some((0, 1)) }
        );
        let out = Colouring { assignment: vec![0, 1, 3], palette: 3 };
        assert!(matches!(validate_colouring(&g, &out), Err(Error::ColourOutOfRange { vertex: 2, .. })));
        let short = Colouring { assignment: vec![0, 1], palette: 3 };
        assert!(matches!(validate_colouring(&g, &short), Err(Error::ColouringLength { .. })));
    }

    #[test]
    fn induced_subgraph() {
        let mut pts = axes();
        pts.push(ExactPoint::from_i64([1, 1, 0]).unwrap());
        let g = build_graph(pts);
        let h = g.induced(&[3, 2]).unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
        assert!(g.induced(&[7]).is_err());
    }

    #[test]
    fn rational_graph_parity_colouring_validates() {
        let pts = crate::generators::enum_points(crate::generators::EnumMode::Quadruple, 9)
            .map(ExactPoint::Rational);
        let g = build_graph(pts);
        assert!(!g.edges().is_empty());
        let c = g.parity_colouring().unwrap();
        assert!(validate_colouring(&g, &c).unwrap().valid);
    }
}
