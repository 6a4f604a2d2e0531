//! Local clustering coefficients for hypergraphs.
//!
//! The crate builds an immutable [`Hypergraph`] from labelled hyperedges and
//! evaluates four local clustering coefficients on it:
//!
//! * **proposed**: the weighted-projection coefficient, where each node pair is
//!   weighted by `1 / (|e| - 1)` of the smallest hyperedge covering it and the
//!   coefficient is the ratio of realised to potential triangle weight;
//! * **opsahl**: closed over total 4-paths in the bipartite representation;
//! * **zhou**: the mean extra overlap between the hyperedges incident to a node;
//! * **baseline**: the Watts–Strogatz coefficient on the clique expansion.
//!
//! Alongside the coefficients it provides an order-3 motif census, dataset
//! ingestion with preprocessing provenance, summary statistics, and brute-force
//! reference implementations ([`oracle`]) used to cross-check the fast kernels.
//!
//! Per-node work runs on rayon when the `parallel` feature is enabled (the
//! default). Results are identical for every [`Execution`] mode.

pub mod analysis;
pub mod coefficients;
mod error;
pub mod hypergraph;
pub mod ingest;
pub mod motif;
pub mod oracle;
mod par;
pub mod projection;

pub use coefficients::{cc_all, cc_all_with, CCRecord, CCReport, Definition, Selection};
pub use error::{Error, Result};
pub use hypergraph::{EdgeId, Hyperedge, Hypergraph, NodeId, SummaryStats};
pub use motif::{census_order3, Induction, MotifCensus, MotifClass};
pub use par::Execution;
pub use projection::{clique_expansion, weighted_projection, SimpleAdjacency, WeightedProjection};
