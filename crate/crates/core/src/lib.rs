//! Enumeration of connected subgraphs whose girth is bounded from below.
//!
//! Given an undirected graph `G` and a threshold `k`, the crate lists every
//! connected induced subgraph (vertex mode) or connected edge subgraph (edge
//! mode) of `G` whose shortest cycle has length at least `k`, each exactly
//! once. Three engines are provided:
//!
//! * [`enumerate_baseline`]: binary partition with candidate sets recomputed
//!   from scratch by a girth oracle. Supports every mode, weights and
//!   disconnected solutions.
//! * [`enumerate_induced_fast`]: the induced-subgraph engine that maintains
//!   pairwise distances and second distances between candidates, so each
//!   candidate test is a constant-time comparison.
//! * [`enumerate_edges_fast`]: the edge-subgraph engine that keeps inner and
//!   outer candidate edges apart and maintains distances over the solution.
//!
//! [`brute_force_enumerate`] is the exhaustive subset filter used as the
//! reference everywhere else, and [`densest_girth_graphs`] searches for the
//! densest `n`-vertex graphs of girth at least `k`.

pub mod bench;
pub mod edges;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod girth;
pub mod graph;
pub mod induced;
mod length;
mod sets;
mod table;
pub mod verify;

pub use enumerate::baseline::{candidate_set_naive, enumerate_baseline, BaselineState};
pub use enumerate::brute::{brute_force_enumerate, brute_force_into, DEFAULT_BRUTE_FORCE_BUDGET};
pub use enumerate::{
    enumerate_variant, Collector, Connectivity, Counter, EnumConfig, EnumSummary, Flow, Mode,
    SolutionSink,
};
pub use bench::{bench_compare, BenchOptions, BenchReport};
pub use edges::{enumerate_edges_fast, EdgeEnumerator};
pub use error::{Error, GraphError};
pub use extremal::{densest_girth_graphs, ExtremalBudget, ExtremalResult, ExtremalSearch};
pub use girth::{girth_unweighted, girth_weighted, pair_distance, second_distance};
pub use graph::{EdgeId, Graph, VertexId};
pub use induced::{enumerate_induced_fast, InducedEnumerator};
pub use length::Length;
pub use sets::{EdgeSet, IdSet, VertexSet};
pub use verify::{verify_matrix, VerifyOptions, VerifyReport};
