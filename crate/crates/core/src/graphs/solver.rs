//! Exact chromatic number: clique lower bound, DSATUR upper bound, then
//! DSATUR-ordered branch and bound for each k between them.

use serde::Serialize;

use super::{Colouring, OrthoGraph};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Largest vertex count attempted exactly.
    pub cap: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { cap: DEFAULT_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub witness: Colouring,
    pub clique_lower: usize,
    pub dsatur_upper: usize,
    /// A maximum clique.
    pub clique: Vec<usize>,
}

pub fn chromatic_number(g: &OrthoGraph, opts: SolverOptions) -> Result<ChromaticResult> {
    chromatic_number_adj(g.adjacency(), opts)
}

pub fn chromatic_number_adj(adj: &[Vec<usize>], opts: SolverOptions) -> Result<ChromaticResult> {
    let n = adj.len();
    let greedy = dsatur_greedy(adj);
    let upper = greedy.iter().map(|c| c + 1).max().unwrap_or(0);
    let clique = max_clique(adj);
    let lower = clique.len();
    debug_assert!(lower <= upper);
    if n > opts.cap {
        return Err(Error::TooLarge {
            vertices: n,
            cap: opts.cap,
            lower,
            upper,
        });
    }
    for k in lower..upper {
        if let Some(assignment) = k_colouring(adj, k) {
            return Ok(ChromaticResult {
                chi: k,
                witness: Colouring { assignment, palette: k },
                clique_lower: lower,
                dsatur_upper: upper,
                clique,
            });
        }
    }
    Ok(ChromaticResult {
        chi: upper,
        witness: Colouring {
            assignment: greedy,
            palette: upper,
        },
        clique_lower: lower,
        dsatur_upper: upper,
        clique,
    })
}

/// Saturation bookkeeping shared by the greedy pass and the exact search.
struct Saturation<'a> {
    adj: &'a [Vec<usize>],
    colour: Vec<Option<usize>>,
    /// `counts[v][c]`: neighbours of `v` coloured `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    uncoloured_deg: Vec<usize>,
}

impl<'a> Saturation<'a> {
    fn new(adj: &'a [Vec<usize>], palette: usize) -> Self {
        Saturation {
            adj,
            colour: vec![None; adj.len()],
            counts: vec![vec![0; palette]; adj.len()],
            sat: vec![0; adj.len()],
            uncoloured_deg: adj.iter().map(Vec::len).collect(),
        }
    }

    /// Max saturation, then max uncoloured degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        (0..self.adj.len())
            .filter(|&v| self.colour[v].is_none())
            .max_by(|&a, &b| {
                (self.sat[a], self.uncoloured_deg[a])
                    .cmp(&(self.sat[b], self.uncoloured_deg[b]))
                    .then(b.cmp(&a))
            })
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = Some(c);
        for &w in &self.adj[v] {
            self.uncoloured_deg[w] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v].take().expect("vertex was coloured");
        for &w in &self.adj[v] {
            self.uncoloured_deg[w] += 1;
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }
}

/// Greedy DSATUR colouring.
pub fn dsatur_greedy(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut s = Saturation::new(adj, n.max(1));
    while let Some(v) = s.pick() {
        let c = (0..n).find(|&c| s.counts[v][c] == 0).expect("n colours suffice");
        s.assign(v, c);
    }
    s.colour.into_iter().map(|c| c.unwrap()).collect()
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_colouring(adj: &[Vec<usize>], k: usize) -> Option<Vec<usize>> {
    if adj.is_empty() {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut s = Saturation::new(adj, k);
    if extend(&mut s, k, 0) {
        Some(s.colour.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

fn extend(s: &mut Saturation<'_>, k: usize, used: usize) -> bool {
    let Some(v) = s.pick() else {
        return true;
    };
    if s.sat[v] >= k {
        return false;
    }
    // colours beyond the first unused one are symmetric
    for c in 0..k.min(used + 1) {
        if s.counts[v][c] != 0 {
            continue;
        }
        s.assign(v, c);
        if extend(s, k, used.max(c + 1)) {
            return true;
        }
        s.unassign(v);
    }
    false
}

/// A maximum clique (Bron–Kerbosch with pivoting); the first one found in
/// index order.
pub fn max_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut matrix = vec![vec![false; n]; n];
    for (i, nbrs) in adj.iter().enumerate() {
        for &j in nbrs {
            matrix[i][j] = true;
        }
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(&matrix, &mut current, (0..n).collect(), Vec::new(), &mut best);
    best
}

fn expand(
    m: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    best: &mut Vec<usize>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() && current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| (candidates.iter().filter(|&&v| m[u][v]).count(), std::cmp::Reverse(u)))
        .unwrap();
    let mut remaining = candidates.clone();
    for v in candidates.into_iter().filter(|&v| !m[pivot][v]) {
        current.push(v);
        let next_c = remaining.iter().copied().filter(|&w| m[v][w]).collect();
        let next_x = excluded.iter().copied().filter(|&w| m[v][w]).collect();
        expand(m, current, next_c, next_x, best);
        current.pop();
        remaining.retain(|&w| w != v);
        excluded.push(v);
    }
}
