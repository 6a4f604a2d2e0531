//! The four local clustering coefficients and the per-node report.
//!
//! Every definition returns 0 when its denominator vanishes: fewer than two
//! neighbors (proposed, baseline), no 4-path through the node (opsahl), or
//! fewer than two incident hyperedges (zhou).

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::hypergraph::{Hypergraph, NodeId};
use crate::par::{self, pairwise_sum, Execution};
use crate::projection::{
    clique_expansion, weighted_projection, PairCoverage, SimpleAdjacency, WeightedProjection,
};

/// A clustering coefficient definition. The declaration order is the column
/// order of every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Definition {
    Proposed,
    Opsahl,
    Zhou,
    Baseline,
}

impl Definition {
    pub const ALL: [Definition; 4] = [
        Definition::Proposed,
        Definition::Opsahl,
        Definition::Zhou,
        Definition::Baseline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Definition::Proposed => "proposed",
            Definition::Opsahl => "opsahl",
            Definition::Zhou => "zhou",
            Definition::Baseline => "baseline",
        }
    }

    /// CSV column header, e.g. `c_proposed`.
    pub fn column(self) -> &'static str {
        match self {
            Definition::Proposed => "c_proposed",
            Definition::Opsahl => "c_opsahl",
            Definition::Zhou => "c_zhou",
            Definition::Baseline => "c_baseline",
        }
    }

    #[inline]
    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Definition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Definition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Definition::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                format!("unknown definition `{s}` (expected proposed, opsahl, zhou or baseline)")
            })
    }
}

impl Serialize for Definition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A subset of the four definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection([bool; 4]);

impl Selection {
    pub fn all() -> Self {
        Selection([true; 4])
    }

    pub fn none() -> Self {
        Selection([false; 4])
    }

    pub fn with(mut self, d: Definition) -> Self {
        self.0[d.slot()] = true;
        self
    }

    pub fn contains(&self, d: Definition) -> bool {
        self.0[d.slot()]
    }

    pub fn iter(&self) -> impl Iterator<Item = Definition> + '_ {
        Definition::ALL.into_iter().filter(|d| self.contains(*d))
    }

    pub fn is_empty(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }
}

impl Default for Selection {
    fn default() -> Self {
        Selection::all()
    }
}

impl FromIterator<Definition> for Selection {
    fn from_iter<I: IntoIterator<Item = Definition>>(iter: I) -> Self {
        iter.into_iter().fold(Selection::none(), Selection::with)
    }
}

/// Sum of `f(j)` over `j` in the sorted intersection of `row` and `tail`
/// (positions in `tail`).
#[inline]
fn merge_sum<T, F>(row: &[NodeId], tail: &[NodeId], zero: T, mut f: F) -> T
where
    T: std::ops::AddAssign,
    F: FnMut(usize, usize) -> T,
{
    let (mut x, mut y) = (0, 0);
    let mut acc = zero;
    while x < row.len() && y < tail.len() {
        match row[x].cmp(&tail[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                acc += f(x, y);
                x += 1;
                y += 1;
            }
        }
    }
    acc
}

pub(crate) fn proposed_kernel(p: &WeightedProjection, v: NodeId) -> f64 {
    let nb = p.neighbors(v);
    let w = p.weights(v);
    let k = nb.len();
    if k < 2 {
        return 0.0;
    }
    let mut num = Vec::with_capacity(k - 1);
    let mut den = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let tail = &nb[i + 1..];
        let tail_w = &w[i + 1..];
        let i_row = p.neighbors(nb[i]);
        let i_w = p.weights(nb[i]);
        // Numerator and denominator accumulate in the same order with the
        // numerator's terms bounded by the denominator's, so num <= den.
        let inner = merge_sum(i_row, tail, 0.0, |x, y| tail_w[y] * i_w[x]);
        let potential: f64 = tail_w.iter().sum();
        num.push(w[i] * inner);
        den.push(w[i] * potential);
    }
    pairwise_sum(&num) / pairwise_sum(&den)
}

/// Counts of 4-paths `u - e1 - v - e2 - w` centered on a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct OpsahlPathCount {
    /// Number of unordered 4-paths centered on the node.
    pub total: u64,
    /// Paths whose endpoints share a third hyperedge outside the path.
    pub closed: u64,
}

impl OpsahlPathCount {
    pub fn ratio(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.closed as f64 / self.total as f64
        }
    }
}

/// Path counts grouped by endpoint pair.
///
/// For neighbors `u, w` of `v` let `a = cover(u,v)`, `b = cover(w,v)`,
/// `c = |{e : u,v,w ∈ e}|` and `t = cover(u,w)`. The `(e1, e2)` choices are the
/// `a*b - c` ordered pairs with `e1 ∋ u`, `e2 ∋ w`, `e1 ≠ e2`. A choice is
/// closed iff `t` minus the number of `e1, e2` that contain `w` resp. `u` is
/// still positive, and `e1` contains `w` exactly when it lies in the
/// `c`-set. Pairs with `c = 0` therefore close iff `u ~ w`.
pub(crate) fn opsahl_kernel(h: &Hypergraph, cov: &PairCoverage, v: NodeId) -> OpsahlPathCount {
    let nb = cov.neighbors(v);
    let a = cov.covers(v);
    if nb.len() < 2 {
        return OpsahlPathCount::default();
    }

    let (sum_a, sum_a2) = a.iter().fold((0u128, 0u128), |(s, s2), &x| {
        (s + x as u128, s2 + (x as u128) * (x as u128))
    });
    let all_pairs = (sum_a * sum_a - sum_a2) / 2;

    // Neighbor pairs that share a hyperedge with v, as local index pairs.
    let mut shared: Vec<(u32, u32)> = Vec::new();
    let mut local = Vec::new();
    for &e in h.incident(v) {
        local.clear();
        local.extend(
            h.edge(e)
                .members()
                .iter()
                .filter(|&&u| u != v)
                .map(|u| nb.binary_search(u).expect("co-member is a neighbor") as u32),
        );
        for (x, &i) in local.iter().enumerate() {
            for &j in &local[x + 1..] {
                shared.push((i, j));
            }
        }
    }
    shared.sort_unstable();

    // Closed count assuming every adjacent endpoint pair has c = 0.
    let mut closed: i128 = 0;
    for i in 0..nb.len() - 1 {
        let tail_a = &a[i + 1..];
        let inner = merge_sum(cov.neighbors(nb[i]), &nb[i + 1..], 0u64, |_, y| {
            tail_a[y] as u64
        });
        closed += a[i] as i128 * inner as i128;
    }

    let mut triple_total: u128 = 0;
    let mut k = 0;
    while k < shared.len() {
        let (i, j) = shared[k];
        let mut c = 0u64;
        while k < shared.len() && shared[k] == (i, j) {
            c += 1;
            k += 1;
        }
        triple_total += c as u128;
        let (ai, aj) = (a[i as usize] as u64, a[j as usize] as u64);
        let t = cov.cover_count(nb[i as usize], nb[j as usize]) as u64;
        let exact = c * (c - 1) * u64::from(t > 2)
            + c * (ai + aj - 2 * c) * u64::from(t > 1)
            + (ai - c) * (aj - c) * u64::from(t > 0);
        closed += exact as i128 - (ai * aj) as i128;
    }

    OpsahlPathCount {
        total: (all_pairs - triple_total) as u64,
        closed: closed as u64,
    }
}

pub(crate) fn zhou_kernel(h: &Hypergraph, cov: &PairCoverage, v: NodeId) -> f64 {
    let inc = h.incident(v);
    let m = inc.len();
    if m < 2 {
        return 0.0;
    }
    let mut d_ij = Vec::new();
    let mut d_ji = Vec::new();
    let mut parts = Vec::with_capacity(m - 1);
    for i in 0..m - 1 {
        let ei = h.edge(inc[i]).members();
        let mut partial = 0.0;
        for &ej in &inc[i + 1..] {
            let ej = h.edge(ej).members();
            set_differences(ei, ej, &mut d_ij, &mut d_ji);
            partial += extra_overlap(cov, &d_ij, &d_ji);
        }
        parts.push(partial);
    }
    let pairs = (m * (m - 1) / 2) as f64;
    pairwise_sum(&parts) / pairs
}

/// `EO(e_i, e_j)` from the two set differences. An empty difference has an
/// empty common neighborhood, so nested hyperedges contribute 0.
fn extra_overlap(cov: &PairCoverage, d_ij: &[NodeId], d_ji: &[NodeId]) -> f64 {
    if d_ij.is_empty() || d_ji.is_empty() {
        return 0.0;
    }
    let adjacent_to_all =
        |x: NodeId, set: &[NodeId]| set.iter().all(|&u| cov.is_adjacent(x, u));
    let forward = d_ji.iter().filter(|&&x| adjacent_to_all(x, d_ij)).count();
    let backward = d_ij.iter().filter(|&&x| adjacent_to_all(x, d_ji)).count();
    (forward + backward) as f64 / (d_ij.len() + d_ji.len()) as f64
}

fn set_differences(a: &[NodeId], b: &[NodeId], a_b: &mut Vec<NodeId>, b_a: &mut Vec<NodeId>) {
    a_b.clear();
    b_a.clear();
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => {
                a_b.push(a[x]);
                x += 1;
            }
            std::cmp::Ordering::Greater => {
                b_a.push(b[y]);
                y += 1;
            }
            std::cmp::Ordering::Equal => {
                x += 1;
                y += 1;
            }
        }
    }
    a_b.extend_from_slice(&a[x..]);
    b_a.extend_from_slice(&b[y..]);
}

pub(crate) fn baseline_kernel(adj: &SimpleAdjacency, v: NodeId) -> f64 {
    let nb = adj.neighbors(v);
    let d = nb.len();
    if d < 2 {
        return 0.0;
    }
    let triangles: u64 = (0..d - 1)
        .map(|i| merge_sum(adj.neighbors(nb[i]), &nb[i + 1..], 0u64, |_, _| 1))
        .sum();
    triangles as f64 / (d as u64 * (d as u64 - 1) / 2) as f64
}

fn check(n: usize, v: NodeId) -> Result<()> {
    if v.index() < n {
        Ok(())
    } else {
        Err(crate::Error::InvalidNode { id: v.0, nodes: n })
    }
}

/// Weighted-projection coefficient: realised over potential triangle weight.
pub fn cc_proposed(proj: &WeightedProjection, v: NodeId) -> Result<f64> {
    check(proj.node_count(), v)?;
    Ok(proposed_kernel(proj, v))
}

pub fn opsahl_paths(h: &Hypergraph, cov: &PairCoverage, v: NodeId) -> Result<OpsahlPathCount> {
    h.check(v)?;
    Ok(opsahl_kernel(h, cov, v))
}

/// Fraction of 4-paths centered on `v` that are closed by a third hyperedge.
pub fn cc_opsahl(h: &Hypergraph, cov: &PairCoverage, v: NodeId) -> Result<f64> {
    opsahl_paths(h, cov, v).map(|p| p.ratio())
}

/// Mean extra overlap over all pairs of hyperedges containing `v`.
pub fn cc_zhou(h: &Hypergraph, cov: &PairCoverage, v: NodeId) -> Result<f64> {
    h.check(v)?;
    Ok(zhou_kernel(h, cov, v))
}

/// Watts–Strogatz coefficient of `v` in the clique expansion.
pub fn cc_baseline(adj: &SimpleAdjacency, v: NodeId) -> Result<f64> {
    check(adj.node_count(), v)?;
    Ok(baseline_kernel(adj, v))
}

/// Coefficients of one node; `None` for definitions that were not selected.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CCRecord {
    pub node: NodeId,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_proposed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_opsahl: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_zhou: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_baseline: Option<f64>,
}

impl CCRecord {
    pub fn get(&self, d: Definition) -> Option<f64> {
        match d {
            Definition::Proposed => self.c_proposed,
            Definition::Opsahl => self.c_opsahl,
            Definition::Zhou => self.c_zhou,
            Definition::Baseline => self.c_baseline,
        }
    }
}

/// Per-definition means over all nodes.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct Averages {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_proposed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_opsahl: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_zhou: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_baseline: Option<f64>,
}

impl Averages {
    pub fn get(&self, d: Definition) -> Option<f64> {
        match d {
            Definition::Proposed => self.c_proposed,
            Definition::Opsahl => self.c_opsahl,
            Definition::Zhou => self.c_zhou,
            Definition::Baseline => self.c_baseline,
        }
    }
}

/// Per-node coefficients in node-id order.
#[derive(Debug, Clone, PartialEq)]
pub struct CCReport {
    pub selection: Selection,
    pub records: Vec<CCRecord>,
}

impl CCReport {
    /// Assembles a report from per-node value arrays indexed by definition slot.
    pub(crate) fn from_values(h: &Hypergraph, selection: Selection, values: Vec<[f64; 4]>) -> Self {
        let pick = |vals: &[f64; 4], d: Definition| selection.contains(d).then(|| vals[d.slot()]);
        let records = values
            .iter()
            .enumerate()
            .map(|(i, vals)| CCRecord {
                node: NodeId(i as u32),
                label: h.labels()[i].clone(),
                c_proposed: pick(vals, Definition::Proposed),
                c_opsahl: pick(vals, Definition::Opsahl),
                c_zhou: pick(vals, Definition::Zhou),
                c_baseline: pick(vals, Definition::Baseline),
            })
            .collect();
        CCReport { selection, records }
    }

    pub fn column(&self, d: Definition) -> Option<Vec<f64>> {
        self.selection
            .contains(d)
            .then(|| self.records.iter().map(|r| r.get(d).unwrap()).collect())
    }

    /// Arithmetic mean of a column, counting zero-denominator nodes as 0.
    pub fn average(&self, d: Definition) -> Option<f64> {
        let col = self.column(d)?;
        Some(pairwise_sum(&col) / col.len() as f64)
    }

    pub fn averages(&self) -> Averages {
        Averages {
            c_proposed: self.average(Definition::Proposed),
            c_opsahl: self.average(Definition::Opsahl),
            c_zhou: self.average(Definition::Zhou),
            c_baseline: self.average(Definition::Baseline),
        }
    }

    /// `node_label,c_...` rows followed by a `# mean` footer.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        let defs: Vec<Definition> = self.selection.iter().collect();
        write!(out, "node_label")?;
        for d in &defs {
            write!(out, ",{}", d.column())?;
        }
        writeln!(out)?;
        for r in &self.records {
            write!(out, "{}", r.label)?;
            for &d in &defs {
                write!(out, ",{}", r.get(d).unwrap())?;
            }
            writeln!(out)?;
        }
        write!(out, "# mean")?;
        for &d in &defs {
            write!(out, ",{}", self.average(d).unwrap())?;
        }
        writeln!(out)
    }
}

impl Serialize for CCReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let defs: Vec<Definition> = self.selection.iter().collect();
        let mut st = s.serialize_struct("CCReport", 3)?;
        st.serialize_field("definitions", &defs)?;
        st.serialize_field("records", &self.records)?;
        st.serialize_field("averages", &self.averages())?;
        st.end()
    }
}

/// All four coefficients for every node.
pub fn cc_all(h: &Hypergraph) -> CCReport {
    cc_all_with(h, Selection::all(), Execution::default())
}

/// Selected coefficients for every node, sharing one projection and one
/// clique expansion across definitions.
pub fn cc_all_with(h: &Hypergraph, selection: Selection, exec: Execution) -> CCReport {
    let needs_pairs = [Definition::Proposed, Definition::Opsahl, Definition::Zhou]
        .iter()
        .any(|d| selection.contains(*d));
    let proj = needs_pairs.then(|| weighted_projection(h));
    let adj = selection
        .contains(Definition::Baseline)
        .then(|| clique_expansion(h));

    let values = par::map_indices(h.node_count(), exec, |i| {
        let v = NodeId(i as u32);
        let mut out = [0.0; 4];
        if let Some(p) = &proj {
            if selection.contains(Definition::Proposed) {
                out[Definition::Proposed.slot()] = proposed_kernel(p, v);
            }
            if selection.contains(Definition::Opsahl) {
                out[Definition::Opsahl.slot()] = opsahl_kernel(h, p, v).ratio();
            }
            if selection.contains(Definition::Zhou) {
                out[Definition::Zhou.slot()] = zhou_kernel(h, p, v);
            }
        }
        if let Some(a) = &adj {
            out[Definition::Baseline.slot()] = baseline_kernel(a, v);
        }
        out
    });
    CCReport::from_values(h, selection, values)
}
