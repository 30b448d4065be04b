use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{build_graph, ExactPoint, OrthoGraph};
use crate::error::{Error, Result};
use crate::sphere::{AlgSpherePoint, SpherePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dimacs,
    Json,
}

pub fn export(g: &OrthoGraph, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Dimacs => to_dimacs(g).into_bytes(),
        ExportFormat::Json => to_json(g).into_bytes(),
    }
}

/// DIMACS `.col`, with each vertex's exact coordinates in a comment line.
pub fn to_dimacs(g: &OrthoGraph) -> String {
    let mut out = String::from("c orthogonality graph over exact unit vectors\n");
    for (i, v) in g.vertices().iter().enumerate() {
        match v {
            ExactPoint::Rational(p) => {
                let _ = writeln!(out, "c vertex {} rational {} {} {} {}", i + 1, p.a(), p.b(), p.c(), p.d());
            }
            ExactPoint::Qsqrt2(p) => {
                let [x, y, z] = p.coords();
                let _ = writeln!(out, "c vertex {} qsqrt2 {x} {y} {z}", i + 1);
            }
        }
    }
    let _ = writeln!(out, "p edge {} {}", g.len(), g.edges().len());
    for &(i, j) in g.edges() {
        let _ = writeln!(out, "e {} {}", i + 1, j + 1);
    }
    out
}

/// A parsed DIMACS file: structure plus the vertex coordinates when every
/// vertex carries a `c vertex` annotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimacsGraph {
    pub n: usize,
    /// Zero-based, as written.
    pub edges: Vec<(usize, usize)>,
    pub vertices: Option<Vec<ExactPoint>>,
}

impl DimacsGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Rebuilds the orthogonality graph from the annotated coordinates and
    /// checks that it has exactly the listed edges.
    pub fn into_graph(self) -> Result<OrthoGraph> {
        let vertices = self
            .vertices
            .ok_or_else(|| Error::Parse("DIMACS file has no vertex coordinates".into()))?;
        let g = build_graph(vertices);
        check_structure(&g, self.n, self.edges)?;
        Ok(g)
    }
}

fn check_structure(g: &OrthoGraph, n: usize, mut edges: Vec<(usize, usize)>) -> Result<()> {
    for e in &mut edges {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    if g.len() != n || g.edges() != edges.as_slice() {
        return Err(Error::Parse(
            "listed edges do not match the exact orthogonality relation".into(),
        ));
    }
    Ok(())
}

pub fn parse_dimacs(text: &str) -> Result<DimacsGraph> {
    let bad = |line: &str| Error::Parse(format!("bad DIMACS line: {line:?}"));
    let mut header = None;
    let mut edges = Vec::new();
    let mut annotated: Vec<(usize, ExactPoint)> = Vec::new();
    for line in text.lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            ["c", "vertex", i, "rational", a, b, c, d] => {
                let i: usize = i.parse().map_err(|_| bad(line))?;
                let parse = |s: &str| s.parse().map_err(|_| bad(line));
                let p = SpherePoint::new(parse(a)?, parse(b)?, parse(c)?, parse(d)?)?;
                annotated.push((i, ExactPoint::Rational(p)));
            }
            ["c", "vertex", i, "qsqrt2", x, y, z] => {
                let i: usize = i.parse().map_err(|_| bad(line))?;
                let p = AlgSpherePoint::new([x.parse()?, y.parse()?, z.parse()?])?;
                annotated.push((i, ExactPoint::Qsqrt2(p)));
            }
            ["c", ..] => {}
            ["p", "edge" | "col", n, m] => {
                let n: usize = n.parse().map_err(|_| bad(line))?;
                let m: usize = m.parse().map_err(|_| bad(line))?;
                header = Some((n, m));
            }
            ["e", i, j] => {
                let (n, _) = header.ok_or_else(|| bad(line))?;
                let i: usize = i.parse().map_err(|_| bad(line))?;
                let j: usize = j.parse().map_err(|_| bad(line))?;
                if i == 0 || j == 0 || i > n || j > n || i == j {
                    return Err(bad(line));
                }
                edges.push((i - 1, j - 1));
            }
            _ => return Err(bad(line)),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::Parse("missing 'p edge' line".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!("header promises {m} edges, found {}", edges.len())));
    }
    annotated.sort_by_key(|(i, _)| *i);
    let vertices = (annotated.len() == n && annotated.iter().enumerate().all(|(k, (i, _))| *i == k + 1))
        .then(|| annotated.into_iter().map(|(_, p)| p).collect());
    Ok(DimacsGraph { n, edges, vertices })
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<ExactPoint>,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(g: &OrthoGraph) -> String {
    let doc = GraphJson {
        vertices: g.vertices().to_vec(),
        edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

/// Reads the JSON schema back, recomputing edges exactly and checking them
/// against the stored list.
pub fn from_json(text: &str) -> Result<OrthoGraph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = doc.vertices.len();
    let g = build_graph(doc.vertices);
    check_structure(&g, n, doc.edges.into_iter().map(|[i, j]| (i, j)).collect())?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[[i64; 3]]) -> Vec<ExactPoint> {
        v.iter().map(|&x| ExactPoint::from_i64(x).unwrap()).collect()
    }

    #[test]
    fn triangle_dimacs() {
        let g = build_graph(pts(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
        let s = to_dimacs(&g);
        assert!(s.contains("\np edge 3 3\n"));
        assert!(s.ends_with("e 1 2\ne 1 3\ne 2 3\n"));
        assert!(s.contains("c vertex 1 rational 1 0 0 1\n"));
    }

    #[test]
    fn edgeless_dimacs() {
        let g = build_graph(pts(&[[1, 0, 0], [1, 2, 2]]));
        assert!(to_dimacs(&g).contains("p edge 2 0\n"));
    }

    #[test]
    fn round_trips() {
        let g = build_graph(pts(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [-1, 1, 0], [1, -1, 4], [2, -2, 1]]));
        assert_eq!(from_json(&to_json(&g)).unwrap(), g);
        let parsed = parse_dimacs(&to_dimacs(&g)).unwrap();
        assert_eq!(parsed.n, g.len());
        assert_eq!(parsed.clone().into_graph().unwrap(), g);
        assert_eq!(parsed.adjacency(), g.adjacency());
    }

    #[test]
    fn json_schema() {
        let g = build_graph(pts(&[[0, 0, 1], [1, 1, 0]]));
        let s = to_json(&g);
        assert_eq!(
            s,
            r#"{"vertices":[{"kind":"rational","a":"0","b":"0","c":"1","d":"1"},{"kind":"qsqrt2","x":{"rat":"0","sqrt2":"1/2"},"y":{"rat":"0","sqrt2":"1/2"},"z":{"rat":"0","sqrt2":"0"}}],"edges":[[0,1]]}"#
        );
    }

    #[test]
    fn tampered_inputs_rejected() {
        let g = build_graph(pts(&[[1, 0, 0], [0, 1, 0]]));
        let s = to_json(&g).replace("\"edges\":[[0,1]]", "\"edges\":[]");
        assert!(from_json(&s).is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err());
        let bare = parse_dimacs("c plain\np edge 3 1\ne 1 2\n").unwrap();
        assert_eq!(bare.vertices, None);
        assert!(bare.into_graph().is_err());
    }
}
