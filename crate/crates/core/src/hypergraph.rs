//! Immutable simple hypergraphs with a node/hyperedge incidence index.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense node index in `0..N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NodeId(pub u32);

/// Dense hyperedge index in `0..M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A hyperedge: a strictly increasing, non-empty list of node ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    members: Box<[NodeId]>,
}

impl Hyperedge {
    fn new(members: Vec<NodeId>) -> Self {
        debug_assert!(!members.is_empty());
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Hyperedge {
            members: members.into_boxed_slice(),
        }
    }

    #[inline]
    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, v: NodeId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Whether both endpoints of the pair belong to this hyperedge.
    #[inline]
    pub fn covers(&self, u: NodeId, v: NodeId) -> bool {
        self.contains(u) && self.contains(v)
    }
}

/// Dataset statistics as reported per dataset: counts plus the two averages.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub nodes: usize,
    pub edges: usize,
    /// Incidence count Σ|e|, the number of edges of the bipartite representation.
    pub bipartite_edges: usize,
    pub avg_degree: f64,
    pub avg_edge_size: f64,
}

/// A simple hypergraph: no repeated hyperedges, every node in at least one
/// hyperedge. Immutable once built.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
    edges: Vec<Hyperedge>,
    incidence_offsets: Vec<usize>,
    incidence: Vec<EdgeId>,
}

impl Hypergraph {
    /// Builds a hypergraph from hyperedges given as label lists.
    ///
    /// Labels are assigned dense ids in order of first appearance. Repeated
    /// labels inside one hyperedge are collapsed; hyperedges with identical
    /// member sets are collapsed to their first occurrence. Returns the
    /// hypergraph and the number of duplicate hyperedges removed.
    pub fn build<I, E, S>(raw: I) -> Result<(Hypergraph, usize)>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut labels = Vec::new();
        let mut ids: HashMap<String, NodeId> = HashMap::new();
        let mut seen: HashSet<Vec<NodeId>> = HashSet::new();
        let mut edges = Vec::new();
        let mut duplicates = 0usize;
        let mut raw_count = 0usize;

        for (index, raw_edge) in raw.into_iter().enumerate() {
            raw_count += 1;
            let mut members: Vec<NodeId> = raw_edge
                .into_iter()
                .map(|label| {
                    let label = label.as_ref();
                    match ids.get(label) {
                        Some(&id) => id,
                        None => {
                            let id = NodeId(labels.len() as u32);
                            labels.push(label.to_owned());
                            ids.insert(label.to_owned(), id);
                            id
                        }
                    }
                })
                .collect();
            members.sort_unstable();
            members.dedup();
            if members.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            if seen.insert(members.clone()) {
                edges.push(members);
            } else {
                duplicates += 1;
            }
        }
        if raw_count == 0 {
            return Err(Error::EmptyHypergraph);
        }
        Ok((Self::from_parts(labels, ids, edges), duplicates))
    }

    /// Assembles a hypergraph from canonical, pairwise-distinct member lists.
    fn from_parts(
        labels: Vec<String>,
        ids: HashMap<String, NodeId>,
        edges: Vec<Vec<NodeId>>,
    ) -> Hypergraph {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        for e in &edges {
            for v in e {
                degree[v.index()] += 1;
            }
        }
        let mut incidence_offsets = Vec::with_capacity(n + 1);
        incidence_offsets.push(0);
        for d in &degree {
            incidence_offsets.push(incidence_offsets.last().unwrap() + d);
        }
        let mut cursor = incidence_offsets[..n].to_vec();
        let mut incidence = vec![EdgeId(0); incidence_offsets[n]];
        // Edges are visited in increasing id order, so every list ends up sorted.
        for (j, e) in edges.iter().enumerate() {
            for v in e {
                incidence[cursor[v.index()]] = EdgeId(j as u32);
                cursor[v.index()] += 1;
            }
        }
        Hypergraph {
            labels,
            ids,
            edges: edges.into_iter().map(Hyperedge::new).collect(),
            incidence_offsets,
            incidence,
        }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.labels.len() as u32).map(NodeId)
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> &Hyperedge {
        &self.edges[e.index()]
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id_of(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    /// Errors unless `v` addresses a node of this hypergraph.
    pub fn check(&self, v: NodeId) -> Result<()> {
        if v.index() < self.node_count() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                id: v.0,
                nodes: self.node_count(),
            })
        }
    }

    /// Sorted ids of the hyperedges containing `v`.
    #[inline]
    pub fn incident(&self, v: NodeId) -> &[EdgeId] {
        let i = v.index();
        &self.incidence[self.incidence_offsets[i]..self.incidence_offsets[i + 1]]
    }

    /// Number of hyperedges containing `v`.
    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.incident(v).len()
    }

    /// All nodes other than `v` that share at least one hyperedge with it, sorted.
    pub fn neighbors(&self, v: NodeId) -> Result<Vec<NodeId>> {
        self.check(v)?;
        let mut out: Vec<NodeId> = self
            .incident(v)
            .iter()
            .flat_map(|&e| self.edge(e).members().iter().copied())
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Hyperedges as label lists, in edge order.
    pub fn label_edges(&self) -> Vec<Vec<String>> {
        self.edges
            .iter()
            .map(|e| e.members().iter().map(|&v| self.labels[v.index()].clone()).collect())
            .collect()
    }

    pub fn summary_stats(&self) -> SummaryStats {
        let bipartite_edges = self.incidence.len();
        SummaryStats {
            nodes: self.node_count(),
            edges: self.edge_count(),
            bipartite_edges,
            avg_degree: bipartite_edges as f64 / self.node_count() as f64,
            avg_edge_size: bipartite_edges as f64 / self.edge_count() as f64,
        }
    }

    /// Connected components under shared-hyperedge adjacency, each as a sorted
    /// node list. Component order is by smallest node id.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut dsu = DisjointSet::new(self.node_count());
        for e in &self.edges {
            let first = e.members()[0].index();
            for v in &e.members()[1..] {
                dsu.union(first, v.index());
            }
        }
        let mut slot: HashMap<usize, usize> = HashMap::new();
        let mut comps: Vec<Vec<NodeId>> = Vec::new();
        for v in self.nodes() {
            let root = dsu.find(v.index());
            let k = *slot.entry(root).or_insert_with(|| {
                comps.push(Vec::new());
                comps.len() - 1
            });
            comps[k].push(v);
        }
        comps
    }

    /// Induced sub-hypergraph on the largest connected component.
    ///
    /// Equal-sized components are ordered by their smallest label (string
    /// order); the first wins. Surviving nodes keep their relative order.
    pub fn largest_connected_component(&self) -> Hypergraph {
        self.lcc_with_counts().0
    }

    /// LCC plus the number of nodes and hyperedges it discarded.
    pub(crate) fn lcc_with_counts(&self) -> (Hypergraph, usize, usize) {
        let comps = self.components();
        if comps.len() <= 1 {
            return (self.clone(), 0, 0);
        }
        let min_label = |c: &Vec<NodeId>| c.iter().map(|&v| self.label(v)).min().unwrap();
        let best = comps
            .iter()
            .max_by(|a, b| {
                a.len()
                    .cmp(&b.len())
                    .then_with(|| min_label(b).cmp(min_label(a)))
            })
            .unwrap();

        let mut remap = vec![u32::MAX; self.node_count()];
        let mut labels = Vec::with_capacity(best.len());
        let mut ids = HashMap::with_capacity(best.len());
        for (k, &v) in best.iter().enumerate() {
            remap[v.index()] = k as u32;
            labels.push(self.label(v).to_owned());
            ids.insert(self.label(v).to_owned(), NodeId(k as u32));
        }
        // A component is closed under hyperedges: an edge is kept whole or not at all.
        let edges: Vec<Vec<NodeId>> = self
            .edges
            .iter()
            .filter(|e| remap[e.members()[0].index()] != u32::MAX)
            .map(|e| e.members().iter().map(|v| NodeId(remap[v.index()])).collect())
            .collect();
        let dropped_nodes = self.node_count() - labels.len();
        let dropped_edges = self.edge_count() - edges.len();
        (Self::from_parts(labels, ids, edges), dropped_nodes, dropped_edges)
    }
}

/// Union-find with path halving and union by size.
struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}
