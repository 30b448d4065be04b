//! Exploratory search for finite subgraphs of chromatic number four.
//!
//! Candidates are induced subgraphs of a pool of exact points. Candidate `i`
//! draws from its own RNG stream derived from the seed and `i`, so reports do
//! not depend on how candidates are spread over worker threads.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{build_graph, chromatic_number, ExactPoint, OrthoGraph, SolverOptions};
use crate::error::Result;
use crate::generators::{enum_points, orbit, rotation_z, EnumMode};
use crate::projective::normalize_i64;
use crate::sphere::{alg_point, SpherePoint};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "lowercase")]
pub enum PointSource {
    /// All rational points with denominator at most `bound`.
    Rational { bound: u64 },
    /// One unit vector per projective direction of height at most `height`
    /// whose normalisation lies in Q(√2).
    Qsqrt2 { height: i64 },
    /// The first `length` points of the z-rotation orbits of the three axes.
    Orbit { length: usize },
    Explicit { points: Vec<ExactPoint> },
}

impl PointSource {
    fn points(&self) -> Vec<ExactPoint> {
        match self {
            PointSource::Rational { bound } => enum_points(EnumMode::Quadruple, *bound)
                .map(ExactPoint::Rational)
                .collect(),
            PointSource::Qsqrt2 { height } => {
                let h = *height;
                let mut out = Vec::new();
                for x in -h..=h {
                    for y in -h..=h {
                        for z in -h..=h {
                            let Ok(t) = normalize_i64(x, y, z) else { continue };
                            // each projective point once, at its canonical representative
                            if t.to_array() != [x, y, z].map(Into::into) {
                                continue;
                            }
                            if let Some(p) = alg_point(&t) {
                                out.push(ExactPoint::from(p));
                            }
                        }
                    }
                }
                out
            }
            PointSource::Orbit { length } => {
                let r = rotation_z();
                [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
                    .iter()
                    .flat_map(|&[a, b, c]| {
                        let start = SpherePoint::from_i64(a, b, c, 1).expect("axis point");
                        orbit(&r, &start, *length)
                    })
                    .map(|(p, _)| ExactPoint::Rational(p))
                    .collect()
            }
            PointSource::Explicit { points } => points.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "strategy", rename_all = "lowercase")]
pub enum Strategy {
    /// Uniformly random induced subgraphs of `size` vertices.
    Random { size: usize },
    /// Start at a random vertex and repeatedly add the pool vertex with the
    /// most neighbours in the current set.
    Grow { size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub sources: Vec<PointSource>,
    pub strategy: Strategy,
    /// Number of candidate subgraphs.
    pub budget: usize,
    pub seed: u64,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub index: usize,
    /// Pool indices of the candidate's vertices.
    pub vertices: Vec<usize>,
    pub edges: usize,
    /// `None` when the candidate exceeded the solver cap.
    pub chi: Option<usize>,
    pub clique: usize,
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub seed: u64,
    pub budget: usize,
    pub pool_size: usize,
    pub pool_edges: usize,
    pub candidates: usize,
    /// Largest exact chromatic number seen.
    pub max_chi: usize,
    /// Largest lower bound seen, including candidates too large to solve.
    pub best_lower_bound: usize,
    pub chi_histogram: BTreeMap<usize, usize>,
    /// Candidates with chromatic number at least four.
    pub hits: Vec<Candidate>,
}

impl SearchReport {
    /// One JSON line per hit, then a summary line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for h in &self.hits {
            out.push_str(&serde_json::to_string(&serde_json::json!({ "candidate": h })).unwrap());
            out.push('\n');
        }
        let summary = serde_json::json!({
            "summary": {
                "seed": self.seed,
                "budget": self.budget,
                "pool_size": self.pool_size,
                "pool_edges": self.pool_edges,
                "candidates": self.candidates,
                "max_chi": self.max_chi,
                "best_lower_bound": self.best_lower_bound,
                "chi_histogram": self.chi_histogram,
                "hits": self.hits.len(),
            }
        });
        out.push_str(&serde_json::to_string(&summary).unwrap());
        out.push('\n');
        out
    }
}

pub fn search_4chromatic(config: &SearchConfig) -> Result<SearchReport> {
    let mut report = SearchReport {
        seed: config.seed,
        budget: config.budget,
        pool_size: 0,
        pool_edges: 0,
        candidates: 0,
        max_chi: 0,
        best_lower_bound: 0,
        chi_histogram: BTreeMap::new(),
        hits: Vec::new(),
    };
    if config.budget == 0 {
        return Ok(report);
    }
    let pool = build_graph(config.sources.iter().flat_map(|s| s.points()));
    report.pool_size = pool.len();
    report.pool_edges = pool.edges().len();
    if pool.is_empty() {
        return Ok(report);
    }
    let opts = SolverOptions { cap: config.cap };
    let results: Vec<Candidate> = (0..config.budget)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            let vertices = match config.strategy {
                Strategy::Random { size } => random_subset(&pool, size, &mut rng),
                Strategy::Grow { size } => grow_subset(&pool, size, &mut rng),
            };
            evaluate(&pool, i, vertices, opts)
        })
        .collect::<Result<_>>()?;
    for c in results {
        report.candidates += 1;
        report.best_lower_bound = report.best_lower_bound.max(c.clique);
        if let Some(chi) = c.chi {
            report.max_chi = report.max_chi.max(chi);
            report.best_lower_bound = report.best_lower_bound.max(chi);
            *report.chi_histogram.entry(chi).or_default() += 1;
            if chi >= 4 {
                report.hits.push(c);
            }
        }
    }
    Ok(report)
}

fn evaluate(pool: &OrthoGraph, index: usize, vertices: Vec<usize>, opts: SolverOptions) -> Result<Candidate> {
    let sub = pool.induced(&vertices)?;
    let edges = sub.edges().len();
    Ok(match chromatic_number(&sub, opts) {
        Ok(r) => Candidate {
            index,
            vertices,
            edges,
            chi: Some(r.chi),
            clique: r.clique_lower,
            upper: r.dsatur_upper,
        },
        Err(crate::Error::TooLarge { lower, upper, .. }) => Candidate {
            index,
            vertices,
            edges,
            chi: None,
            clique: lower,
            upper,
        },
        Err(e) => return Err(e),
    })
}

fn random_subset(pool: &OrthoGraph, size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = pool.len();
    let mut v = index::sample(rng, n, size.min(n)).into_vec();
    v.sort_unstable();
    v
}

fn grow_subset(pool: &OrthoGraph, size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = pool.len();
    let size = size.min(n);
    let mut inside = vec![false; n];
    let mut links = vec![0usize; n];
    let mut chosen = Vec::with_capacity(size);
    let mut add = |v: usize, inside: &mut Vec<bool>, links: &mut Vec<usize>| {
        inside[v] = true;
        chosen.push(v);
        for &w in &pool.adjacency()[v] {
            links[w] += 1;
        }
    };
    add(rng.gen_range(0..n), &mut inside, &mut links);
    for _ in 1..size {
        let best = (0..n).filter(|&v| !inside[v]).map(|v| links[v]).max().unwrap();
        let ties: Vec<usize> = (0..n).filter(|&v| !inside[v] && links[v] == best).collect();
        let v = ties[rng.gen_range(0..ties.len())];
        add(v, &mut inside, &mut links);
    }
    chosen.sort_unstable();
    chosen
}
