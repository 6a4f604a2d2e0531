//! Pairwise views of a hypergraph: the weighted projection, pair coverage
//! counts, and the clique expansion.

use std::io::{self, Write};

use crate::hypergraph::{Hypergraph, NodeId};

/// Symmetric weighted graph over co-member pairs.
///
/// A covered pair `{u, v}` has weight `1 / (s - 1)` where `s` is the size of the
/// smallest hyperedge containing both, and a coverage count equal to the number
/// of hyperedges containing both. Uncovered pairs are absent (weight 0).
///
/// Stored as a symmetric CSR: every pair appears in both endpoint rows, rows
/// sorted by neighbor id.
#[derive(Debug, Clone)]
pub struct WeightedProjection {
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
    weights: Vec<f64>,
    cover: Vec<u32>,
}

/// Coverage counts live alongside the weights; both come from one pass.
pub type PairCoverage = WeightedProjection;

/// One row entry of the projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairEntry {
    pub neighbor: NodeId,
    pub weight: f64,
    pub cover: u32,
}

impl WeightedProjection {
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of stored unordered pairs.
    pub fn pair_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    fn range(&self, v: NodeId) -> std::ops::Range<usize> {
        self.offsets[v.index()]..self.offsets[v.index() + 1]
    }

    /// Sorted neighbors of `v`.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.neighbors[self.range(v)]
    }

    /// Weights aligned with [`neighbors`](Self::neighbors).
    #[inline]
    pub fn weights(&self, v: NodeId) -> &[f64] {
        &self.weights[self.range(v)]
    }

    /// Coverage counts aligned with [`neighbors`](Self::neighbors).
    #[inline]
    pub fn covers(&self, v: NodeId) -> &[u32] {
        &self.cover[self.range(v)]
    }

    pub fn row(&self, v: NodeId) -> impl Iterator<Item = PairEntry> + '_ {
        let r = self.range(v);
        self.neighbors[r.clone()]
            .iter()
            .zip(&self.weights[r.clone()])
            .zip(&self.cover[r])
            .map(|((&neighbor, &weight), &cover)| PairEntry {
                neighbor,
                weight,
                cover,
            })
    }

    #[inline]
    fn find(&self, u: NodeId, v: NodeId) -> Option<usize> {
        let r = self.range(u);
        self.neighbors[r.clone()]
            .binary_search(&v)
            .ok()
            .map(|k| r.start + k)
    }

    /// `W_uv`, or 0 for uncovered pairs and `u == v`.
    #[inline]
    pub fn weight(&self, u: NodeId, v: NodeId) -> f64 {
        self.find(u, v).map_or(0.0, |k| self.weights[k])
    }

    /// Number of hyperedges containing both `u` and `v` (0 when `u == v`).
    #[inline]
    pub fn cover_count(&self, u: NodeId, v: NodeId) -> u32 {
        self.find(u, v).map_or(0, |k| self.cover[k])
    }

    #[inline]
    pub fn is_adjacent(&self, u: NodeId, v: NodeId) -> bool {
        self.find(u, v).is_some()
    }

    /// Writes `u,v,weight` rows (original labels) for every pair with `u < v`.
    pub fn write_csv<W: Write>(&self, h: &Hypergraph, mut out: W) -> io::Result<()> {
        writeln!(out, "u,v,weight")?;
        for u in h.nodes() {
            for e in self.row(u).filter(|e| e.neighbor > u) {
                writeln!(out, "{},{},{}", h.label(u), h.label(e.neighbor), e.weight)?;
            }
        }
        Ok(())
    }
}

/// Builds the weighted projection and pair coverage in one pass over the
/// hyperedges, enumerating every member pair of every hyperedge.
pub fn weighted_projection(h: &Hypergraph) -> WeightedProjection {
    let n = h.node_count();
    // (min, max, size) per covering hyperedge
    let mut pairs: Vec<(u32, u32, u32)> = Vec::new();
    for e in h.edges() {
        let m = e.members();
        let s = m.len() as u32;
        for (i, a) in m.iter().enumerate() {
            for b in &m[i + 1..] {
                pairs.push((a.0, b.0, s));
            }
        }
    }
    pairs.sort_unstable();

    // Collapse to one record per pair: smallest covering size and count.
    let mut merged: Vec<(u32, u32, u32, u32)> = Vec::new();
    for (a, b, s) in pairs {
        match merged.last_mut() {
            Some(last) if last.0 == a && last.1 == b => last.3 += 1,
            _ => merged.push((a, b, s, 1)),
        }
    }

    let mut degree = vec![0usize; n];
    for &(a, b, _, _) in &merged {
        degree[a as usize] += 1;
        degree[b as usize] += 1;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for d in &degree {
        offsets.push(offsets.last().unwrap() + d);
    }
    let total = offsets[n];
    let mut cursor = offsets[..n].to_vec();
    let mut neighbors = vec![NodeId(0); total];
    let mut weights = vec![0.0; total];
    let mut cover = vec![0u32; total];
    let mut place = |row: u32, col: u32, w: f64, c: u32| {
        let k = cursor[row as usize];
        neighbors[k] = NodeId(col);
        weights[k] = w;
        cover[k] = c;
        cursor[row as usize] += 1;
    };
    // `merged` is sorted by (a, b) with a < b. Row a receives its larger
    // neighbors in order; row b receives its smaller neighbors in order of a.
    // Fill smaller neighbors first so that each row stays sorted.
    for &(a, b, s, c) in &merged {
        place(b, a, 1.0 / (s - 1) as f64, c);
    }
    for &(a, b, s, c) in &merged {
        place(a, b, 1.0 / (s - 1) as f64, c);
    }
    debug_assert!((0..n).all(|v| neighbors[offsets[v]..offsets[v + 1]]
        .windows(2)
        .all(|w| w[0] < w[1])));

    WeightedProjection {
        offsets,
        neighbors,
        weights,
        cover,
    }
}

/// Same structure as [`weighted_projection`]; coverage counts are read through
/// [`WeightedProjection::cover_count`].
pub fn pair_coverage(h: &Hypergraph) -> PairCoverage {
    weighted_projection(h)
}

/// Unweighted clique expansion: `u ~ v` iff some hyperedge contains both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleAdjacency {
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
}

impl SimpleAdjacency {
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.neighbors[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v.index() + 1] - self.offsets[v.index()]
    }

    #[inline]
    pub fn is_adjacent(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }
}

/// Builds the clique expansion from the incidence index (per node, the union
/// of its hyperedges minus itself).
pub fn clique_expansion(h: &Hypergraph) -> SimpleAdjacency {
    let mut offsets = Vec::with_capacity(h.node_count() + 1);
    offsets.push(0);
    let mut neighbors = Vec::new();
    let mut row = Vec::new();
    for v in h.nodes() {
        row.clear();
        for &e in h.incident(v) {
            row.extend(h.edge(e).members().iter().filter(|&&u| u != v));
        }
        row.sort_unstable();
        row.dedup();
        neighbors.extend_from_slice(&row);
        offsets.push(neighbors.len());
    }
    SimpleAdjacency { offsets, neighbors }
}
