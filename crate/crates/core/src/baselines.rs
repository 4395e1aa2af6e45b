//! Reference all-pairs algorithms: Dijkstra from every source, Peng's
//! row-reusing Dijkstra, and Floyd-Warshall.
//!
//! Dijkstra and Peng count one access per neighbour examined during an
//! adjacency scan, the same unit PSTw counts, so their α values compare
//! directly. Floyd-Warshall has no α; it is the ground truth for tests.

use crate::graph::{Graph, VertexId};
use crate::matrix::{DistanceMatrix, Parent, ParentMatrix};
use crate::metrics::{timed, Algorithm, RunMetrics};
use crate::queue::IndexedMinQueue;
use crate::weight::Weight;
use crate::{ApspError, ApspResult};

/// Largest graph [`apsp_floyd_warshall`] accepts.
pub const DEFAULT_ORACLE_CAP: usize = 2048;

/// Single-source Dijkstra with decrease-key. Every settled vertex scans its
/// whole adjacency list, adding its degree to `accesses`.
///
/// Returns the distance and parent rows of `source`; unreachable vertices keep
/// distance `W::max_value()` and parent `NotSearched`.
pub fn sssp_dijkstra<W: Weight>(
    g: &Graph<W>,
    source: VertexId,
    accesses: &mut u64,
) -> (Vec<W>, Vec<Parent>) {
    let n = g.vertex_count();
    let mut dist = vec![W::max_value(); n];
    let mut parent = vec![Parent::NotSearched; n];
    let mut settled = vec![false; n];
    let mut queue = IndexedMinQueue::with_capacity(n);
    dijkstra_column(
        g,
        source,
        &mut queue,
        &mut settled,
        &mut dist,
        &mut parent,
        accesses,
    );
    (dist, parent)
}

fn dijkstra_column<W: Weight>(
    g: &Graph<W>,
    source: VertexId,
    queue: &mut IndexedMinQueue<W>,
    settled: &mut [bool],
    dist: &mut [W],
    parent: &mut [Parent],
    accesses: &mut u64,
) {
    settled.fill(false);
    dist.fill(W::max_value());
    dist[source] = W::zero();
    parent[source] = Parent::NoParent;
    queue.enqueue(source, W::zero());
    while let Some((v, d)) = queue.dequeue_min() {
        settled[v] = true;
        *accesses += g.degree(v) as u64;
        for &(u, e) in g.neighbors(v) {
            if settled[u] {
                continue;
            }
            let nd = d + e;
            if nd < dist[u] {
                if queue.contains(u) {
                    queue.update(u, nd);
                } else {
                    queue.enqueue(u, nd);
                }
                dist[u] = nd;
                parent[u] = Parent::Vertex(v);
            }
        }
    }
}

/// Dijkstra from every vertex. α equals the average degree `2m/n`.
pub fn apsp_dijkstra<W: Weight>(g: &Graph<W>) -> Result<ApspResult<W>, ApspError> {
    if !g.is_connected() {
        return Err(ApspError::Disconnected);
    }
    let n = g.vertex_count();
    let mut distances = DistanceMatrix::zeros(n);
    let mut parents = ParentMatrix::new(n);
    let mut metrics = RunMetrics::new(Algorithm::Dijkstra, g);
    let ((), secs) = timed(|| {
        let mut queue = IndexedMinQueue::with_capacity(n);
        let mut settled = vec![false; n];
        let mut parent_col = vec![Parent::NotSearched; n];
        for s in 0..n {
            dijkstra_column(
                g,
                s,
                &mut queue,
                &mut settled,
                distances.column_mut(s),
                &mut parent_col,
                &mut metrics.access_count,
            );
            for (i, &p) in parent_col.iter().enumerate() {
                parents.set(i, s, p);
            }
        }
    });
    metrics.wall_seconds = secs;
    Ok(ApspResult {
        distances,
        parents,
        metrics,
    })
}

/// Peng's variant of all-pairs Dijkstra.
///
/// Sources are processed in decreasing degree order (ties by id) so hubs get
/// their rows first. While searching from `s`, a settled vertex `v` whose own
/// row is already complete is not scanned. Instead every unsettled `u` gets
/// the candidate `D[s][v] + D[v][u]`, with `u`'s parent taken from `v`'s tree.
/// Such a row update lowers the key of a `u` that is already queued but never
/// inserts one: any shortest path continuing through a vertex reached this way
/// also runs through `v`, so the row has already offered it. Row updates cost
/// no adjacency accesses, which lets α fall far below 1 on sparse scale-free
/// graphs where almost every later source reaches everything through hubs.
pub fn apsp_peng<W: Weight>(g: &Graph<W>) -> Result<ApspResult<W>, ApspError> {
    if !g.is_connected() {
        return Err(ApspError::Disconnected);
    }
    let n = g.vertex_count();
    let mut distances = DistanceMatrix::zeros(n);
    let mut parents = ParentMatrix::new(n);
    let mut metrics = RunMetrics::new(Algorithm::Peng, g);

    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let ((), secs) = timed(|| {
        let mut done = vec![false; n];
        let mut settled = vec![false; n];
        let mut dist = vec![W::zero(); n];
        let mut queue = IndexedMinQueue::with_capacity(n);
        for &s in &order {
            settled.fill(false);
            dist.fill(W::max_value());
            dist[s] = W::zero();
            queue.enqueue(s, W::zero());
            while let Some((v, d)) = queue.dequeue_min() {
                settled[v] = true;
                if done[v] {
                    let row = distances.column(v);
                    for u in 0..n {
                        if settled[u] {
                            continue;
                        }
                        let nd = d + row[u];
                        if nd < dist[u] {
                            if queue.contains(u) {
                                queue.update(u, nd);
                            }
                            dist[u] = nd;
                            // predecessor of u on the path from v
                            parents.set(u, s, parents.get(u, v));
                        }
                    }
                } else {
                    metrics.access_count += g.degree(v) as u64;
                    for &(u, e) in g.neighbors(v) {
                        if settled[u] {
                            continue;
                        }
                        let nd = d + e;
                        if nd < dist[u] {
                            if queue.contains(u) {
                                queue.update(u, nd);
                            } else {
                                queue.enqueue(u, nd);
                            }
                            dist[u] = nd;
                            parents.set(u, s, Parent::Vertex(v));
                        }
                    }
                }
            }
            distances.column_mut(s).copy_from_slice(&dist);
            done[s] = true;
        }
    });
    metrics.wall_seconds = secs;
    Ok(ApspResult {
        distances,
        parents,
        metrics,
    })
}

/// Floyd-Warshall with the default size cap.
pub fn apsp_floyd_warshall<W: Weight>(g: &Graph<W>) -> Result<DistanceMatrix<W>, ApspError> {
    apsp_floyd_warshall_capped(g, DEFAULT_ORACLE_CAP)
}

/// Textbook triple loop over intermediate vertices. Unreachable pairs keep
/// `W::max_value()`.
pub fn apsp_floyd_warshall_capped<W: Weight>(
    g: &Graph<W>,
    cap: usize,
) -> Result<DistanceMatrix<W>, ApspError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(ApspError::OracleCapExceeded { n, cap });
    }
    let inf = W::max_value();
    let mut d = vec![inf; n * n];
    for i in 0..n {
        d[i * n + i] = W::zero();
    }
    for (u, v, w) in g.edges() {
        d[u * n + v] = w;
        d[v * n + u] = w;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == inf {
                continue;
            }
            for j in 0..n {
                let dkj = d[k * n + j];
                if dkj == inf {
                    continue;
                }
                let via = dik + dkj;
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    let mut out = DistanceMatrix::new(n, inf);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, d[i * n + j]);
        }
    }
    Ok(out)
}
