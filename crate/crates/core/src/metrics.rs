//! Run instrumentation and result verification.
//!
//! Every algorithm counts its own adjacency accesses; this module only turns
//! counts into α (accesses per ordered vertex pair) and checks outputs.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::matrix::{DistanceMatrix, Parent, ParentMatrix};
use crate::weight::Weight;

/// Default absolute tolerance for distance comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Pstw,
    Dijkstra,
    Peng,
    FloydWarshall,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Pstw,
        Algorithm::Dijkstra,
        Algorithm::Peng,
        Algorithm::FloydWarshall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Pstw => "pstw",
            Algorithm::Dijkstra => "dijkstra",
            Algorithm::Peng => "peng",
            Algorithm::FloydWarshall => "floyd",
        }
    }

    /// Display label used in report tables.
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Pstw => "PSTw",
            Algorithm::Dijkstra => "Dijkstra",
            Algorithm::Peng => "Peng",
            Algorithm::FloydWarshall => "Floyd-Warshall",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown algorithm {0:?} (expected pstw, dijkstra, peng or floyd)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pstw" => Ok(Algorithm::Pstw),
            "dijkstra" => Ok(Algorithm::Dijkstra),
            "peng" => Ok(Algorithm::Peng),
            "floyd" | "floyd-warshall" | "floyd_warshall" => Ok(Algorithm::FloydWarshall),
            _ => Err(UnknownAlgorithm(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunMetrics {
    pub algorithm: Algorithm,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Adjacent-vertex accesses (edge scans, or tree-child visits for PSTw).
    pub access_count: u64,
    /// PSTw re-enqueues while waiting on a neighbour's tree; 0 otherwise.
    pub wait_count: u64,
    /// PSTw round-robin passes; 0 otherwise.
    pub sweeps: u64,
    pub wall_seconds: f64,
}

impl RunMetrics {
    pub fn new<W: Weight>(algorithm: Algorithm, g: &Graph<W>) -> Self {
        RunMetrics {
            algorithm,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            access_count: 0,
            wait_count: 0,
            sweeps: 0,
            wall_seconds: 0.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        alpha(self, self.vertex_count)
    }
}

/// Average accesses per ordered vertex pair: `access_count / n^2`.
pub fn alpha(m: &RunMetrics, n: usize) -> f64 {
    assert!(n > 0, "alpha is undefined for an empty graph");
    m.access_count as f64 / (n as f64 * n as f64)
}

/// Runs `f` and returns its result with the elapsed wall-clock seconds.
pub fn timed<R>(f: impl FnOnce() -> R) -> (R, f64) {
    let start = Instant::now();
    let r = f();
    (r, start.elapsed().as_secs_f64())
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub max_abs_error: f64,
    pub mismatch_count: usize,
    pub tree_violations: usize,
    pub pass: bool,
}

impl VerifyReport {
    fn new(max_abs_error: f64, mismatch_count: usize, tree_violations: usize) -> Self {
        VerifyReport {
            max_abs_error,
            mismatch_count,
            tree_violations,
            pass: mismatch_count == 0 && tree_violations == 0,
        }
    }

    /// Combines two reports; passes only if both do.
    pub fn merge(&self, other: &VerifyReport) -> VerifyReport {
        VerifyReport::new(
            self.max_abs_error.max(other.max_abs_error),
            self.mismatch_count + other.mismatch_count,
            self.tree_violations + other.tree_violations,
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (max |err| {:.3e}, {} mismatches, {} tree violations)",
            if self.pass { "PASS" } else { "FAIL" },
            self.max_abs_error,
            self.mismatch_count,
            self.tree_violations
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix shapes differ: {0}x{0} vs {1}x{1}")]
pub struct ShapeMismatch(pub usize, pub usize);

/// Elementwise comparison; a cell matches when `|a - b| <= tol`.
pub fn verify_distances<W: Weight>(
    d: &DistanceMatrix<W>,
    oracle: &DistanceMatrix<W>,
    tol: f64,
) -> Result<VerifyReport, ShapeMismatch> {
    if d.n() != oracle.n() {
        return Err(ShapeMismatch(d.n(), oracle.n()));
    }
    let n = d.n();
    let mut max_err: f64 = 0.0;
    let mut mismatches = 0;
    for j in 0..n {
        for (a, b) in d.column(j).iter().zip(oracle.column(j)) {
            let err = (a.as_f64() - b.as_f64()).abs();
            if err.is_nan() || err > tol {
                mismatches += 1;
            }
            if err.is_nan() {
                max_err = f64::NAN;
            } else if !max_err.is_nan() {
                max_err = max_err.max(err);
            }
        }
    }
    Ok(VerifyReport::new(max_err, mismatches, 0))
}

/// Checks that every column of `s` is a shortest-path tree for `d`.
///
/// A cell `(i, j)` is a violation when the diagonal is not `NoParent`, an
/// off-diagonal entry is missing or not a neighbour of `i`, the predecessor
/// chain from `i` does not reach `j` without repeating, or
/// `D[i][j] != D[p][j] + w(p, i)` beyond `tol`.
pub fn verify_tree<W: Weight>(
    s: &ParentMatrix,
    d: &DistanceMatrix<W>,
    g: &Graph<W>,
    tol: f64,
) -> VerifyReport {
    let n = g.vertex_count();
    if s.n() != n || d.n() != n {
        return VerifyReport::new(0.0, 0, n * n.max(1));
    }
    let mut violations = 0;
    let mut max_err: f64 = 0.0;
    // per column: 0 unknown, 1 on current chain, 2 reaches root, 3 broken
    let mut state = vec![0u8; n];
    let mut chain: Vec<VertexId> = Vec::new();
    for j in 0..n {
        state.fill(0);
        state[j] = 2;
        if s.get(j, j) != Parent::NoParent {
            violations += 1;
        }
        for i in 0..n {
            if i == j {
                continue;
            }
            let ok = match s.get(i, j) {
                Parent::Vertex(p) => match g.edge_weight(p, i) {
                    Some(w) => {
                        let err = (d.get(i, j).as_f64() - (d.get(p, j) + w).as_f64()).abs();
                        max_err = max_err.max(err);
                        err <= tol
                    }
                    None => false,
                },
                _ => false,
            };
            if !ok {
                violations += 1;
                continue;
            }
            // chain walk: does i reach j?
            chain.clear();
            let mut cur = i;
            let reached = loop {
                match state[cur] {
                    2 => break true,
                    1 | 3 => break false,
                    _ => {}
                }
                state[cur] = 1;
                chain.push(cur);
                match s.get(cur, j).vertex() {
                    Some(p) if p < n => cur = p,
                    _ => break false,
                }
            };
            let mark = if reached { 2 } else { 3 };
            for &c in &chain {
                state[c] = mark;
            }
            if !reached {
                violations += 1;
            }
        }
    }
    VerifyReport::new(max_err, 0, violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn metrics(access_count: u64, n: usize) -> RunMetrics {
        RunMetrics {
            algorithm: Algorithm::Dijkstra,
            vertex_count: n,
            edge_count: 0,
            access_count,
            wait_count: 0,
            sweeps: 0,
            wall_seconds: 0.0,
        }
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(&metrics(6 * 64 * 64, 64), 64), 6.0);
        assert_eq!(alpha(&metrics(0, 64), 64), 0.0);
        assert_eq!(metrics(100, 10).alpha(), 1.0);
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("bfs".parse::<Algorithm>().is_err());
    }

    #[test]
    fn verify_distance_cases() {
        let a = DistanceMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let r = verify_distances(&a, &a, 1e-9).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_abs_error, 0.0);

        let b = DistanceMatrix::from_rows(&[vec![0.0, 2.0], vec![1.0, 0.0]]);
        let r = verify_distances(&a, &b, 1e-9).unwrap();
        assert_eq!(r.mismatch_count, 1);
        assert!(!r.pass);
        assert_eq!(r.pass, verify_distances(&b, &a, 1e-9).unwrap().pass);

        // exactly at tolerance passes
        let c = DistanceMatrix::from_rows(&[vec![0.0, 1.5], vec![1.0, 0.0]]);
        assert!(verify_distances(&a, &c, 0.5).unwrap().pass);

        let nan = DistanceMatrix::from_rows(&[vec![0.0, f64::NAN], vec![1.0, 0.0]]);
        assert!(!verify_distances(&a, &nan, 1.0).unwrap().pass);

        let big = DistanceMatrix::<f64>::zeros(3);
        assert_eq!(verify_distances(&a, &big, 1e-9), Err(ShapeMismatch(2, 3)));
    }

    fn k2() -> (Graph<f64>, DistanceMatrix<f64>, ParentMatrix) {
        let g = Graph::from_edges(2, [(0, 1, 0.7)]).unwrap();
        let d = DistanceMatrix::from_rows(&[vec![0.0, 0.7], vec![0.7, 0.0]]);
        let mut s = ParentMatrix::new(2);
        s.set(1, 0, Parent::Vertex(0));
        s.set(0, 1, Parent::Vertex(1));
        (g, d, s)
    }

    #[test]
    fn tree_of_k2_is_valid() {
        let (g, d, s) = k2();
        let r = verify_tree(&s, &d, &g, 1e-9);
        assert!(r.pass, "{r}");
    }

    #[test]
    fn tree_detects_faults() {
        let (g, d, mut s) = k2();
        s.set(1, 0, Parent::NotSearched);
        assert_eq!(verify_tree(&s, &d, &g, 1e-9).tree_violations, 1);

        let (g, d, mut s) = k2();
        s.set(0, 0, Parent::Vertex(1));
        assert!(!verify_tree(&s, &d, &g, 1e-9).pass);

        let (g, mut d, s) = k2();
        d.set(1, 0, 0.9);
        assert!(!verify_tree(&s, &d, &g, 1e-9).pass);
    }

    #[test]
    fn tree_detects_two_cycle() {
        // path 0-1-2 (unit), source 0; make 1 and 2 point at each other
        let g = Graph::from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let d = DistanceMatrix::from_rows(&[
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 1.0],
            vec![1.0, 1.0, 0.0],
        ]);
        let mut s = ParentMatrix::new(3);
        s.set(1, 0, Parent::Vertex(2));
        s.set(2, 0, Parent::Vertex(1));
        let r = verify_tree(&s, &d, &g, 10.0);
        assert!(r.tree_violations >= 1);
    }

    #[test]
    fn timing_is_nonnegative() {
        let (x, secs) = timed(|| 40 + 2);
        assert_eq!(x, 42);
        assert!(secs >= 0.0);
    }
}
