use hypercc::coefficients::{cc_baseline, cc_opsahl, cc_proposed, cc_zhou, opsahl_paths};
use hypercc::oracle::{
    naive_cc, naive_census, naive_opsahl_counts, random_hypergraph, RandomHypergraphSpec,
};
use hypercc::projection::{clique_expansion, pair_coverage, weighted_projection};
use hypercc::{census_order3, Definition, Execution, Hypergraph, Induction};

const TOL: f64 = 1e-12;

fn corpus() -> impl Iterator<Item = Hypergraph> {
    (0u64..300).filter_map(|seed| {
        let n = 3 + (seed % 6) as usize; // 3..=8
        let max_size = n.min(4);
        let m = 1 + (seed as usize * 7) % 12;
        random_hypergraph(RandomHypergraphSpec {
            n,
            m,
            min_size: 2,
            max_size,
            seed,
        })
        .ok()
    })
}

#[test]
fn coefficients_match_naive_formulas() {
    for h in corpus() {
        let p = weighted_projection(&h);
        let adj = clique_expansion(&h);
        for v in h.nodes() {
            let fast = [
                (Definition::Proposed, cc_proposed(&p, v).unwrap()),
                (Definition::Opsahl, cc_opsahl(&h, &p, v).unwrap()),
                (Definition::Zhou, cc_zhou(&h, &p, v).unwrap()),
                (Definition::Baseline, cc_baseline(&adj, v).unwrap()),
            ];
            for (d, got) in fast {
                let want = naive_cc(d, &h, v).unwrap();
                assert!(
                    (got - want).abs() <= TOL,
                    "{d} at {v}: fast {got} vs naive {want}; edges {:?}",
                    h.label_edges()
                );
            }
        }
    }
}

#[test]
fn opsahl_counts_are_half_the_ordered_tuples() {
    for h in corpus() {
        let cov = pair_coverage(&h);
        for v in h.nodes() {
            let fast = opsahl_paths(&h, &cov, v).unwrap();
            let (total, closed) = naive_opsahl_counts(&h, v);
            assert_eq!((2 * fast.total, 2 * fast.closed), (total, closed));
            assert!(fast.closed <= fast.total);
        }
    }
}

#[test]
fn census_matches_exhaustive_classification() {
    for seed in 0u64..300 {
        let n = 3 + (seed % 8) as usize; // 3..=10
        let Ok(h) = random_hypergraph(RandomHypergraphSpec {
            n,
            m: 1 + (seed as usize * 5) % 14,
            min_size: 2,
            max_size: n.min(4),
            seed,
        }) else {
            continue;
        };
        for ind in [Induction::Subset, Induction::Intersect] {
            let fast = census_order3(&h, ind, Execution::Sequential);
            assert_eq!(fast, naive_census(&h, ind), "{ind:?} {:?}", h.label_edges());
            assert_eq!(fast, census_order3(&h, ind, Execution::Parallel));
        }
    }
}

#[test]
fn weights_match_per_pair_maximum() {
    for h in corpus() {
        let p = weighted_projection(&h);
        let adj = clique_expansion(&h);
        for u in h.nodes() {
            for v in h.nodes() {
                let covering: Vec<usize> = h
                    .edges()
                    .iter()
                    .filter(|e| u != v && e.covers(u, v))
                    .map(|e| e.size())
                    .collect();
                let want = covering
                    .iter()
                    .map(|&s| 1.0 / (s - 1) as f64)
                    .fold(0.0, f64::max);
                assert_eq!(p.weight(u, v), want);
                assert_eq!(p.cover_count(u, v) as usize, covering.len());
                assert_eq!(adj.is_adjacent(u, v), !covering.is_empty());
            }
        }
    }
}
