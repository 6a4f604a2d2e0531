//! Order-3 motif census and the rooted three-node fixtures.
//!
//! A hyperedge shapes the pattern of a node triple `T` according to the
//! [`Induction`] rule. Under the default [`Induction::Subset`] only hyperedges
//! with `e ⊆ T` count, so only size-2 and size-3 hyperedges matter. Under
//! [`Induction::Intersect`] every hyperedge contributes `e ∩ T`.

use std::collections::HashSet;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::coefficients::{
    baseline_kernel, opsahl_kernel, proposed_kernel, zhou_kernel, Definition,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};
use crate::par::{self, Execution};
use crate::projection::{clique_expansion, weighted_projection};

/// The six connected three-node patterns over pair and triple hyperedges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotifClass {
    /// Two pair edges (wedge).
    I,
    /// Three pair edges (triangle).
    II,
    /// The triple edge alone.
    III,
    /// Triple edge and one pair edge.
    IV,
    /// Triple edge and two pair edges.
    V,
    /// Triple edge and all three pair edges.
    VI,
}

impl MotifClass {
    pub const ALL: [MotifClass; 6] = [
        MotifClass::I,
        MotifClass::II,
        MotifClass::III,
        MotifClass::IV,
        MotifClass::V,
        MotifClass::VI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MotifClass::I => "I",
            MotifClass::II => "II",
            MotifClass::III => "III",
            MotifClass::IV => "IV",
            MotifClass::V => "V",
            MotifClass::VI => "VI",
        }
    }

    /// Class of a pattern with the given triple-edge flag and pair-edge count,
    /// or `None` if the pattern does not connect the three nodes.
    pub fn from_pattern(has_triple: bool, pairs: usize) -> Option<MotifClass> {
        match (has_triple, pairs) {
            (false, 2) => Some(MotifClass::I),
            (false, 3) => Some(MotifClass::II),
            (true, 0) => Some(MotifClass::III),
            (true, 1) => Some(MotifClass::IV),
            (true, 2) => Some(MotifClass::V),
            (true, 3) => Some(MotifClass::VI),
            _ => None,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for MotifClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for MotifClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// How a hyperedge contributes to the pattern of a node triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Induction {
    /// Only hyperedges fully inside the triple.
    #[default]
    Subset,
    /// Every hyperedge contributes its intersection with the triple.
    Intersect,
}

impl FromStr for Induction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "subset" => Ok(Induction::Subset),
            "intersect" => Ok(Induction::Intersect),
            other => Err(format!("unknown induction rule `{other}` (expected subset or intersect)")),
        }
    }
}

/// Counts of the six classes over all connected node triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MotifCensus {
    pub counts: [u64; 6],
    pub triples_examined: u64,
}

impl MotifCensus {
    pub fn get(&self, class: MotifClass) -> u64 {
        self.counts[class.slot()]
    }

    pub(crate) fn add(&mut self, class: MotifClass) {
        self.counts[class.slot()] += 1;
        self.triples_examined += 1;
    }

    /// Share of each class among all counted triples (zeros when empty).
    pub fn proportions(&self) -> [f64; 6] {
        let total = self.triples_examined;
        self.counts
            .map(|c| if total == 0 { 0.0 } else { c as f64 / total as f64 })
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "motif_class,count")?;
        for class in MotifClass::ALL {
            writeln!(out, "{},{}", class, self.get(class))?;
        }
        Ok(())
    }
}

impl Serialize for MotifCensus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Entry {
            motif_class: MotifClass,
            count: u64,
        }
        let counts: Vec<Entry> = MotifClass::ALL
            .iter()
            .map(|&motif_class| Entry {
                motif_class,
                count: self.get(motif_class),
            })
            .collect();
        let mut st = s.serialize_struct("MotifCensus", 2)?;
        st.serialize_field("counts", &counts)?;
        st.serialize_field("triples_examined", &self.triples_examined)?;
        st.end()
    }
}

fn sorted3(t: [NodeId; 3]) -> [NodeId; 3] {
    let mut t = t;
    t.sort_unstable();
    t
}

/// Classifies the pattern induced on three distinct nodes; `None` when the
/// pattern is disconnected.
pub fn classify_triple(
    h: &Hypergraph,
    triple: &[NodeId],
    induction: Induction,
) -> Result<Option<MotifClass>> {
    let mut t: Vec<NodeId> = triple.to_vec();
    t.sort_unstable();
    t.dedup();
    if triple.len() != 3 || t.len() != 3 {
        return Err(Error::BadTriple(t.len().min(triple.len())));
    }
    for &v in &t {
        h.check(v)?;
    }
    let mut has_triple = false;
    let mut pair = [false; 3]; // {0,1}, {0,2}, {1,2}
    let mut seen = HashSet::new();
    for &v in &t {
        for &e in h.incident(v) {
            if !seen.insert(e) {
                continue;
            }
            let e = h.edge(e);
            let inside: Vec<bool> = t.iter().map(|&x| e.contains(x)).collect();
            let hits = inside.iter().filter(|&&b| b).count();
            let counts = match induction {
                Induction::Subset => e.size() == hits,
                Induction::Intersect => true,
            };
            if !counts {
                continue;
            }
            match hits {
                3 => has_triple = true,
                2 => {
                    let missing = inside.iter().position(|&b| !b).unwrap();
                    pair[2 - missing] = true;
                }
                _ => {}
            }
        }
    }
    let pairs = pair.iter().filter(|&&b| b).count();
    Ok(MotifClass::from_pattern(has_triple, pairs))
}

/// Counts every connected node triple by class without enumerating all
/// `C(N, 3)` triples.
pub fn census_order3(h: &Hypergraph, induction: Induction, exec: Execution) -> MotifCensus {
    let counts = match induction {
        Induction::Subset => census_subset(h, exec),
        Induction::Intersect => census_intersect(h, exec),
    };
    MotifCensus {
        counts,
        triples_examined: counts.iter().sum(),
    }
}

fn census_subset(h: &Hypergraph, exec: Execution) -> [u64; 6] {
    let n = h.node_count();
    let mut pair_adj: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    let mut triples: HashSet<[NodeId; 3]> = HashSet::new();
    let mut triple_list = Vec::new();
    for e in h.edges() {
        match *e.members() {
            [a, b] => {
                pair_adj[a.index()].push(b);
                pair_adj[b.index()].push(a);
            }
            [a, b, c] => {
                triples.insert([a, b, c]);
                triple_list.push([a, b, c]);
            }
            _ => {}
        }
    }
    for row in &mut pair_adj {
        row.sort_unstable();
    }
    let paired = |u: NodeId, w: NodeId| pair_adj[u.index()].binary_search(&w).is_ok();

    let mut counts = [0u64; 6];
    // Triples carrying a triple edge, classified by their pair edges.
    for [a, b, c] in triple_list {
        let pairs = [paired(a, b), paired(a, c), paired(b, c)]
            .iter()
            .filter(|&&x| x)
            .count();
        counts[MotifClass::from_pattern(true, pairs).unwrap().slot()] += 1;
    }
    // Pair-only triples: wedges are seen once at their center, triangles
    // once per node and kept only at the smallest one.
    let pair_only = par::sum_indices::<2, _>(n, exec, |i| {
        let v = NodeId(i as u32);
        let nb = &pair_adj[i];
        let mut local = [0u64; 2];
        for (x, &u) in nb.iter().enumerate() {
            for &w in &nb[x + 1..] {
                if triples.contains(&sorted3([u, v, w])) {
                    continue;
                }
                if paired(u, w) {
                    if v < u {
                        local[1] += 1;
                    }
                } else {
                    local[0] += 1;
                }
            }
        }
        local
    });
    counts[MotifClass::I.slot()] += pair_only[0];
    counts[MotifClass::II.slot()] += pair_only[1];
    counts
}

fn census_intersect(h: &Hypergraph, exec: Execution) -> [u64; 6] {
    let n = h.node_count();
    let adj = clique_expansion(h);
    let cov = weighted_projection(h);
    par::sum_indices::<6, _>(n, exec, |i| {
        let v = NodeId(i as u32);
        let nb = adj.neighbors(v);
        let mut local = [0u64; 6];
        for (x, &u) in nb.iter().enumerate() {
            for &w in &nb[x + 1..] {
                if !adj.is_adjacent(u, w) {
                    local[MotifClass::I.slot()] += 1;
                    continue;
                }
                if v > u {
                    continue;
                }
                let c = common_count(h.incident(v), h.incident(u), h.incident(w));
                let pairs = [(v, u), (v, w), (u, w)]
                    .iter()
                    .filter(|&&(p, q)| cov.cover_count(p, q) as u64 > c)
                    .count();
                local[MotifClass::from_pattern(c > 0, pairs).unwrap().slot()] += 1;
            }
        }
        local
    })
}

/// Size of the intersection of three sorted lists.
fn common_count<T: Ord>(a: &[T], b: &[T], c: &[T]) -> u64 {
    let (mut i, mut j, mut k) = (0, 0, 0);
    let mut count = 0;
    while i < a.len() && j < b.len() && k < c.len() {
        let m = (&a[i]).max(&b[j]).max(&c[k]);
        if &a[i] < m {
            i += 1;
        } else if &b[j] < m {
            j += 1;
        } else if &c[k] < m {
            k += 1;
        } else {
            count += 1;
            i += 1;
            j += 1;
            k += 1;
        }
    }
    count
}

/// Where the evaluated node sits inside a motif.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RootPosition {
    /// All positions are equivalent.
    Any,
    /// Member of the single pair edge (IV-a).
    InsidePair,
    /// Outside the single pair edge (IV-b).
    OutsidePair,
    /// Incident to both pair edges (V).
    PairHub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootedPattern {
    pub motif: MotifClass,
    pub root_position: RootPosition,
}

impl RootedPattern {
    /// Column label: the class name, with `-a`/`-b` for the two IV roots.
    pub fn name(&self) -> &'static str {
        match (self.motif, self.root_position) {
            (MotifClass::IV, RootPosition::InsidePair) => "IV-a",
            (MotifClass::IV, _) => "IV-b",
            (m, _) => m.name(),
        }
    }
}

/// A three-node hypergraph on labels `a, b, c` with its evaluated node.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub pattern: RootedPattern,
    pub hypergraph: Hypergraph,
    pub root: NodeId,
}

/// The seven rooted fixtures I, II, III, IV-a, IV-b, V, VI.
pub fn canonical_fixtures() -> Vec<Fixture> {
    use MotifClass::*;
    use RootPosition::*;
    let spec: [(MotifClass, RootPosition, &[&[&str]], &str); 7] = [
        (I, Any, &[&["a", "b"], &["a", "c"]], "a"),
        (II, Any, &[&["a", "b"], &["a", "c"], &["b", "c"]], "a"),
        (III, Any, &[&["a", "b", "c"]], "a"),
        (IV, InsidePair, &[&["a", "b", "c"], &["a", "b"]], "a"),
        (IV, OutsidePair, &[&["a", "b", "c"], &["a", "b"]], "c"),
        (V, PairHub, &[&["a", "b", "c"], &["a", "b"], &["a", "c"]], "a"),
        (
            VI,
            Any,
            &[&["a", "b", "c"], &["a", "b"], &["a", "c"], &["b", "c"]],
            "a",
        ),
    ];
    spec.into_iter()
        .map(|(motif, root_position, edges, root)| {
            let (hypergraph, _) =
                Hypergraph::build(edges.iter().map(|e| e.iter().copied())).unwrap();
            let root = hypergraph.id_of(root).unwrap();
            Fixture {
                pattern: RootedPattern {
                    motif,
                    root_position,
                },
                hypergraph,
                root,
            }
        })
        .collect()
}

/// Row order of the fixture table.
pub const TABLE1_ROWS: [Definition; 4] = [
    Definition::Opsahl,
    Definition::Zhou,
    Definition::Baseline,
    Definition::Proposed,
];

/// Coefficients at the root of every fixture.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1 {
    pub columns: Vec<&'static str>,
    pub rows: Vec<(Definition, Vec<f64>)>,
}

impl Table1 {
    pub fn row(&self, d: Definition) -> &[f64] {
        &self.rows.iter().find(|(r, _)| *r == d).unwrap().1
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        write!(out, "definition")?;
        for c in &self.columns {
            write!(out, ",{c}")?;
        }
        writeln!(out)?;
        for (d, vals) in &self.rows {
            write!(out, "{}", d.column())?;
            for v in vals {
                write!(out, ",{v}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

/// Builds the 4×7 table with `eval(definition, hypergraph, root)`.
pub fn table1_with<F>(mut eval: F) -> Table1
where
    F: FnMut(Definition, &Hypergraph, NodeId) -> f64,
{
    let fixtures = canonical_fixtures();
    let columns = fixtures.iter().map(|f| f.pattern.name()).collect();
    let rows = TABLE1_ROWS
        .iter()
        .map(|&d| {
            let vals = fixtures
                .iter()
                .map(|f| eval(d, &f.hypergraph, f.root))
                .collect();
            (d, vals)
        })
        .collect();
    Table1 { columns, rows }
}

/// The fixture table computed with the optimized kernels.
pub fn table1_matrix() -> Table1 {
    table1_with(|d, h, v| {
        let p = weighted_projection(h);
        match d {
            Definition::Proposed => proposed_kernel(&p, v),
            Definition::Opsahl => opsahl_kernel(h, &p, v).ratio(),
            Definition::Zhou => zhou_kernel(h, &p, v),
            Definition::Baseline => baseline_kernel(&clique_expansion(h), v),
        }
    })
}
