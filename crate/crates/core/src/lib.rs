//! Weighted all-pairs shortest paths.
//!
//! The main algorithm, [`run_pstw`], grows one shortest-path tree per source
//! in lock-step round-robin passes. When the search from `v` goes beyond a
//! neighbour `w`, it only follows the edges of `w`'s own (partially built)
//! shortest-path tree instead of scanning every adjacency list, waiting when
//! the part of `w`'s tree it needs is not finished yet. This cuts the number
//! of adjacent-vertex accesses per vertex pair (α) from roughly the average
//! degree for all-pairs Dijkstra down to close to 1 on graphs with deep
//! shortest-path trees.
//!
//! Baselines live in [`baselines`]: all-pairs Dijkstra, Peng's row-reusing
//! variant and Floyd-Warshall (the correctness oracle). All of them count
//! accesses the same way so α values are comparable.
//!
//! Everything is generic over the [`Weight`] scalar; the `*64` aliases fix it
//! to `f64`.
//!
//! Memory: every algorithm stores the `n x n` distance and parent matrices.
//! PSTw additionally keeps every tree (up to `n^2` tree vertices) alive until
//! the run ends, because other sources read them through cross-tree links.

pub mod baselines;
pub mod graph;
pub mod matrix;
pub mod metrics;
pub mod pstw;
pub mod queue;
pub mod weight;

use thiserror::Error;

pub use baselines::{
    apsp_dijkstra, apsp_floyd_warshall, apsp_floyd_warshall_capped, apsp_peng, sssp_dijkstra,
    DEFAULT_ORACLE_CAP,
};
pub use graph::{
    gen_hypercube, gen_scale_free, graph_stats, load_graph, save_graph, Graph, GraphError,
    ParseError, Seed, WeightRange,
};
pub use matrix::{DistanceMatrix, Parent, ParentMatrix};
pub use metrics::{
    alpha, timed, verify_distances, verify_tree, Algorithm, RunMetrics, VerifyReport,
    DEFAULT_TOLERANCE,
};
pub use pstw::{init_sources, run_pstw, PstwRun};
pub use queue::IndexedMinQueue;
pub use weight::Weight;

pub type Graph64 = Graph<f64>;
pub type Graph32 = Graph<f32>;
pub type DistanceMatrix64 = DistanceMatrix<f64>;
pub type DistanceMatrix32 = DistanceMatrix<f32>;
pub type WeightRange64 = WeightRange<f64>;
pub type ApspResult64 = ApspResult<f64>;

/// Distances, parents and counters of one all-pairs run.
#[derive(Debug, Clone)]
pub struct ApspResult<W> {
    pub distances: DistanceMatrix<W>,
    pub parents: ParentMatrix,
    pub metrics: RunMetrics,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApspError {
    #[error("graph is disconnected; all-pairs distances would be undefined")]
    Disconnected,
    #[error("no progress during sweep {sweep}: every active source is waiting")]
    Stalled { sweep: u64 },
    #[error("sweep limit {limit} exceeded")]
    SweepLimit { limit: u64 },
    #[error("Floyd-Warshall oracle limited to {cap} vertices, graph has {n}")]
    OracleCapExceeded { n: usize, cap: usize },
}
