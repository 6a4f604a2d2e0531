//! Brute-force reference implementations and a seeded hypergraph generator.
//!
//! Everything here evaluates the defining formulas directly over the raw
//! hyperedge family: no projection, coverage index or adjacency structure is
//! shared with the optimized kernels. Intended for small inputs only.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coefficients::{CCReport, Definition, Selection};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};
use crate::motif::{table1_with, Induction, MotifCensus, MotifClass, Table1};

/// Parameters of [`random_hypergraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomHypergraphSpec {
    pub n: usize,
    pub m: usize,
    pub min_size: usize,
    pub max_size: usize,
    pub seed: u64,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Draws `m` distinct hyperedges over nodes labelled `0..n`.
///
/// Each draw picks a size uniformly in `min_size..=max_size`, then a uniform
/// node subset of that size, using `ChaCha8Rng::seed_from_u64(seed)`. A draw
/// that repeats an earlier hyperedge is retried, up to `64 * m + 1024` draws in
/// total. Nodes that end up in no hyperedge are absent from the result.
pub fn random_hypergraph(spec: RandomHypergraphSpec) -> Result<Hypergraph> {
    let RandomHypergraphSpec {
        n,
        m,
        min_size,
        max_size,
        seed,
    } = spec;
    if m == 0 {
        return Err(Error::BadSpec("m must be positive".into()));
    }
    if min_size < 1 || min_size > max_size || max_size > n {
        return Err(Error::BadSpec(format!(
            "need 1 <= min_size <= max_size <= n, got {min_size}..={max_size} with n = {n}"
        )));
    }
    let available: u128 = (min_size..=max_size).map(|s| binomial(n, s)).sum();
    if m as u128 > available {
        return Err(Error::Infeasible {
            requested: m,
            available,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut edges = Vec::with_capacity(m);
    let budget = 64 * m + 1024;
    let mut draws = 0;
    while edges.len() < m {
        if draws == budget {
            return Err(Error::BadSpec(format!(
                "retry budget exhausted after {draws} draws ({} of {m} edges)",
                edges.len()
            )));
        }
        draws += 1;
        let size = rng.gen_range(min_size..=max_size);
        let mut members = sample(&mut rng, n, size).into_vec();
        members.sort_unstable();
        if seen.insert(members.clone()) {
            edges.push(members);
        }
    }
    let labelled = edges
        .iter()
        .map(|e| e.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    Ok(Hypergraph::build(labelled)?.0)
}

fn members(h: &Hypergraph, j: usize) -> BTreeSet<NodeId> {
    h.edges()[j].members().iter().copied().collect()
}

fn all_edges(h: &Hypergraph) -> Vec<BTreeSet<NodeId>> {
    (0..h.edge_count()).map(|j| members(h, j)).collect()
}

/// `N(u)`: every other node sharing a hyperedge with `u`.
fn neighborhood(edges: &[BTreeSet<NodeId>], u: NodeId) -> BTreeSet<NodeId> {
    edges
        .iter()
        .filter(|e| e.contains(&u))
        .flat_map(|e| e.iter().copied())
        .filter(|&x| x != u)
        .collect()
}

/// `W_uv = max over hyperedges containing both of 1 / (|e| - 1)`, else 0.
fn weight(edges: &[BTreeSet<NodeId>], u: NodeId, v: NodeId) -> f64 {
    if u == v {
        return 0.0;
    }
    edges
        .iter()
        .filter(|e| e.contains(&u) && e.contains(&v))
        .map(|e| 1.0 / (e.len() - 1) as f64)
        .fold(0.0, f64::max)
}

fn naive_proposed(edges: &[BTreeSet<NodeId>], v: NodeId) -> f64 {
    let nb: Vec<NodeId> = neighborhood(edges, v).into_iter().collect();
    let (mut num, mut den) = (0.0, 0.0);
    for &i in &nb {
        for &j in &nb {
            if i == j {
                continue;
            }
            let base = weight(edges, i, v) * weight(edges, v, j);
            num += base * weight(edges, i, j);
            den += base;
        }
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Ordered `(u, e1, v, e2, w)` tuples with five distinct elements; closed when
/// a third hyperedge outside `{e1, e2}` contains `u` and `w`.
pub fn naive_opsahl_counts(h: &Hypergraph, v: NodeId) -> (u64, u64) {
    let edges = all_edges(h);
    let (mut total, mut closed) = (0u64, 0u64);
    for (i1, e1) in edges.iter().enumerate() {
        for (i2, e2) in edges.iter().enumerate() {
            if i1 == i2 || !e1.contains(&v) || !e2.contains(&v) {
                continue;
            }
            for &u in e1 {
                for &w in e2 {
                    if u == v || w == v || u == w {
                        continue;
                    }
                    total += 1;
                    let third = edges.iter().enumerate().any(|(i3, e3)| {
                        i3 != i1 && i3 != i2 && e3.contains(&u) && e3.contains(&w)
                    });
                    if third {
                        closed += 1;
                    }
                }
            }
        }
    }
    (total, closed)
}

/// `N(U) = ⋂_{u ∈ U} N(u)`, empty for empty `U`.
fn common_neighborhood(edges: &[BTreeSet<NodeId>], set: &BTreeSet<NodeId>) -> BTreeSet<NodeId> {
    let mut it = set.iter();
    let Some(&first) = it.next() else {
        return BTreeSet::new();
    };
    it.fold(neighborhood(edges, first), |acc, &u| {
        acc.intersection(&neighborhood(edges, u)).copied().collect()
    })
}

fn naive_zhou(edges: &[BTreeSet<NodeId>], v: NodeId) -> f64 {
    let incident: Vec<&BTreeSet<NodeId>> = edges.iter().filter(|e| e.contains(&v)).collect();
    let m = incident.len();
    if m <= 1 {
        return 0.0;
    }
    let mut sum = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            let d_ij: BTreeSet<NodeId> = incident[i].difference(incident[j]).copied().collect();
            let d_ji: BTreeSet<NodeId> = incident[j].difference(incident[i]).copied().collect();
            let fwd = common_neighborhood(edges, &d_ij).intersection(&d_ji).count();
            let bwd = common_neighborhood(edges, &d_ji).intersection(&d_ij).count();
            sum += (fwd + bwd) as f64 / (d_ij.len() + d_ji.len()) as f64;
        }
    }
    sum / (m * (m - 1) / 2) as f64
}

/// Clique-expansion coefficient from a dense adjacency matrix, counting each
/// neighbor pair once.
fn naive_baseline(h: &Hypergraph, edges: &[BTreeSet<NodeId>], v: NodeId) -> f64 {
    let n = h.node_count();
    let mut a = vec![vec![0u64; n]; n];
    for e in edges {
        for &x in e {
            for &y in e {
                if x != y {
                    a[x.index()][y.index()] = 1;
                }
            }
        }
    }
    let vi = v.index();
    let k: u64 = a[vi].iter().sum();
    if k < 2 {
        return 0.0;
    }
    let mut closed = 0;
    for u in 0..n {
        for w in u + 1..n {
            closed += a[u][vi] * a[vi][w] * a[u][w];
        }
    }
    2.0 * closed as f64 / (k * (k - 1)) as f64
}

/// Direct evaluation of one definition at one node.
pub fn naive_cc(definition: Definition, h: &Hypergraph, v: NodeId) -> Result<f64> {
    h.check(v)?;
    let edges = all_edges(h);
    Ok(match definition {
        Definition::Proposed => naive_proposed(&edges, v),
        Definition::Opsahl => {
            let (total, closed) = naive_opsahl_counts(h, v);
            if total == 0 {
                0.0
            } else {
                closed as f64 / total as f64
            }
        }
        Definition::Zhou => naive_zhou(&edges, v),
        Definition::Baseline => naive_baseline(h, &edges, v),
    })
}

/// Report over all nodes using the naive definitions.
pub fn naive_cc_all(h: &Hypergraph, selection: Selection) -> CCReport {
    let values = h
        .nodes()
        .map(|v| {
            let mut out = [0.0; 4];
            for (slot, d) in Definition::ALL.into_iter().enumerate() {
                if selection.contains(d) {
                    out[slot] = naive_cc(d, h, v).unwrap();
                }
            }
            out
        })
        .collect();
    CCReport::from_values(h, selection, values)
}

/// Classifies every one of the `C(N, 3)` node triples.
pub fn naive_census(h: &Hypergraph, induction: Induction) -> MotifCensus {
    let edges = all_edges(h);
    let n = h.node_count() as u32;
    let mut census = MotifCensus::default();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t: BTreeSet<NodeId> = [NodeId(a), NodeId(b), NodeId(c)].into();
                let mut has_triple = false;
                let mut pairs: BTreeSet<Vec<NodeId>> = BTreeSet::new();
                for e in &edges {
                    if induction == Induction::Subset && !e.is_subset(&t) {
                        continue;
                    }
                    let inter: Vec<NodeId> = e.intersection(&t).copied().collect();
                    match inter.len() {
                        3 => has_triple = true,
                        2 => {
                            pairs.insert(inter);
                        }
                        _ => {}
                    }
                }
                if let Some(class) = MotifClass::from_pattern(has_triple, pairs.len()) {
                    census.add(class);
                }
            }
        }
    }
    census
}

/// The fixture table computed with the naive definitions.
pub fn naive_table1() -> Table1 {
    table1_with(|d, h, v| naive_cc(d, h, v).unwrap())
}
