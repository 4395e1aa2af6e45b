//! Undirected weighted graphs with strictly positive edge lengths.

mod generate;
mod io;

pub use generate::{
    gen_hypercube, gen_scale_free, AttachmentPool, Seed, WeightRange, MAX_HYPERCUBE_DIM,
};
pub use io::{load_graph, read_graph, save_graph, write_graph, ParseError, ParseErrorKind};

use std::collections::VecDeque;

use thiserror::Error;

use crate::weight::Weight;

/// Index of a vertex, `0..n`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} has non-positive or non-finite length {2}")]
    NonPositiveWeight(VertexId, VertexId, String),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
}

/// An undirected graph stored as symmetric adjacency lists.
///
/// Every adjacency list is sorted by neighbour id, so two graphs with the same
/// edge set compare equal regardless of the order edges were supplied in.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph<W> {
    adjacency: Vec<Vec<(VertexId, W)>>,
    edge_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub average_degree: f64,
    pub connected: bool,
}

impl<W: Weight> Graph<W> {
    /// Builds a graph from undirected edges `(u, v, length)`.
    ///
    /// Each edge must appear once, in either orientation.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, W)>,
    {
        let mut adjacency: Vec<Vec<(VertexId, W)>> = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !w.is_valid_length() {
                return Err(GraphError::NonPositiveWeight(u, v, w.to_string()));
            }
            adjacency[u].push((v, w));
            adjacency[v].push((u, w));
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_by_key(|&(v, _)| v);
            if let Some(pair) = list.windows(2).find(|p| p[0].0 == p[1].0) {
                let v = pair[0].0;
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbours of `v` with the connecting edge length, sorted by id.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, W)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// Length of edge `u`-`v`, if present.
    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<W> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| list[i].1)
    }

    /// Each undirected edge once as `(u, v, length)` with `u < v`, ordered by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, W)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| u < v)
                .map(move |&(v, w)| (u, v, w))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn stats(&self) -> GraphStats {
        let n = self.vertex_count();
        let m = self.edge_count;
        GraphStats {
            n,
            m,
            average_degree: if n == 0 {
                0.0
            } else {
                2.0 * m as f64 / n as f64
            },
            connected: self.is_connected(),
        }
    }
}

/// Vertex count, edge count, average degree and connectivity of `g`.
pub fn graph_stats<W: Weight>(g: &Graph<W>) -> GraphStats {
    g.stats()
}
