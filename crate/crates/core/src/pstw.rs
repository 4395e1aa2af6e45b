//! Shortest-path-tree pruning for all-pairs shortest paths.
//!
//! Every source `v` grows its own shortest-path tree `T(v)` with a Dijkstra
//! queue, but instead of scanning adjacency lists it reaches vertices beyond a
//! neighbour `w` by walking `T(w)`: a tree vertex `x'` in `T(v)` keeps a
//! cross-tree link (`cor`) to the tree vertex `x''` for the same graph vertex
//! in the neighbour's tree it was discovered through, and once `x'` is settled
//! the children of `x''` are the only candidates for extending the path.
//!
//! Sources advance one step at a time in a fixed round-robin order. A source
//! whose next vertex has a `cor` that is not determined yet in the other tree
//! puts it back into its queue unchanged and yields (a *wait*). With strictly
//! positive weights this cannot deadlock; [`PstwRun::sweep`] still reports a
//! pass in which nothing moved as [`ApspError::Stalled`].
//!
//! Queues break priority ties by vertex id and a waiting vertex goes back in
//! with its old priority, so every tree settles vertices in `(distance, id)`
//! order and a run is fully deterministic. Among equally short paths the
//! first one found is kept.

use crate::graph::{Graph, VertexId};
use crate::matrix::{DistanceMatrix, Parent, ParentMatrix};
use crate::metrics::{timed, Algorithm, RunMetrics};
use crate::queue::IndexedMinQueue;
use crate::weight::Weight;
use crate::{ApspError, ApspResult};

const NIL: u32 = u32::MAX;

/// Handle of a tree vertex in a run's arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TvId(u32);

impl TvId {
    fn idx(self) -> usize {
        self.0 as usize
    }
}

fn opt(raw: u32) -> Option<TvId> {
    (raw != NIL).then_some(TvId(raw))
}

/// A vertex of one source's shortest-path tree.
///
/// Children form an intrusive doubly linked list so re-parenting is O(1).
#[derive(Debug, Clone)]
pub struct TreeVertex<W> {
    vertex: u32,
    cor: u32,
    parent: u32,
    first_child: u32,
    prev_sibling: u32,
    next_sibling: u32,
    is_determined: bool,
    parent_edge_len: W,
}

impl<W: Weight> TreeVertex<W> {
    pub fn vertex(&self) -> VertexId {
        self.vertex as usize
    }

    /// Tree vertex for the same graph vertex in the neighbour tree this one
    /// was reached through; `None` for roots.
    pub fn cor(&self) -> Option<TvId> {
        opt(self.cor)
    }

    pub fn parent(&self) -> Option<TvId> {
        opt(self.parent)
    }

    pub fn is_determined(&self) -> bool {
        self.is_determined
    }

    /// Length of the edge to the parent; zero for roots.
    pub fn parent_edge_len(&self) -> W {
        self.parent_edge_len
    }
}

/// Per-source search state.
#[derive(Debug, Clone)]
pub struct SourceState<W> {
    id: VertexId,
    root: Option<TvId>,
    queue: IndexedMinQueue<W>,
    /// vertex id -> tree vertex in `T(id)`; allocated when the tree is seeded
    /// and dropped once the source is finished.
    tv_map: Vec<u32>,
    tv_count: usize,
}

impl<W: Weight> SourceState<W> {
    pub fn id(&self) -> VertexId {
        self.id
    }

    pub fn root(&self) -> Option<TvId> {
        self.root
    }

    pub fn queue_len(&self) -> usize {
        self.queue.len()
    }

    /// Number of tree vertices created for this source.
    pub fn tree_size(&self) -> usize {
        self.tv_count
    }

    pub fn tree_vertex_of(&self, v: VertexId) -> Option<TvId> {
        self.tv_map.get(v).and_then(|&raw| opt(raw))
    }
}

/// Outcome of one [`PstwRun::extend`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// The tree got its root.
    Rooted,
    /// All neighbours were attached under the root.
    Seeded,
    /// The next vertex was re-enqueued because its `cor` is not determined.
    Waited,
    /// A vertex was determined and its `cor`'s children relaxed.
    Determined,
}

/// A PSTw computation in progress: all trees, queues and output matrices.
#[derive(Debug, Clone)]
pub struct PstwRun<'g, W> {
    graph: &'g Graph<W>,
    sources: Vec<SourceState<W>>,
    arena: Vec<TreeVertex<W>>,
    distances: DistanceMatrix<W>,
    parents: ParentMatrix,
    access_count: u64,
    wait_count: u64,
    sweeps: u64,
    active: Vec<VertexId>,
}

/// Sets up one empty search state per vertex, a zero distance matrix and a
/// parent matrix with `NoParent` on the diagonal and `NotSearched` elsewhere.
///
/// Disconnected graphs are rejected: the zero-initialised distance matrix
/// could not tell "unreachable" from "distance 0".
pub fn init_sources<W: Weight>(g: &Graph<W>) -> Result<PstwRun<'_, W>, ApspError> {
    PstwRun::new(g)
}

/// Runs PSTw to completion. Wall time covers the sweeps only, not
/// [`init_sources`].
pub fn run_pstw<W: Weight>(g: &Graph<W>) -> Result<ApspResult<W>, ApspError> {
    let run = init_sources(g)?;
    let (result, secs) = timed(|| run.run());
    let mut result = result?;
    result.metrics.wall_seconds = secs;
    Ok(result)
}

impl<'g, W: Weight> PstwRun<'g, W> {
    pub fn new(graph: &'g Graph<W>) -> Result<Self, ApspError> {
        if !graph.is_connected() {
            return Err(ApspError::Disconnected);
        }
        let n = graph.vertex_count();
        let sources = (0..n)
            .map(|id| SourceState {
                id,
                root: None,
                queue: IndexedMinQueue::with_capacity(0),
                tv_map: Vec::new(),
                tv_count: 0,
            })
            .collect();
        Ok(PstwRun {
            graph,
            sources,
            arena: Vec::new(),
            distances: DistanceMatrix::zeros(n),
            parents: ParentMatrix::new(n),
            access_count: 0,
            wait_count: 0,
            sweeps: 0,
            active: (0..n).collect(),
        })
    }

    /// Sweeps allowed before [`run`](Self::run) gives up: `10 n^2`.
    pub fn sweep_limit(&self) -> u64 {
        let n = self.graph.vertex_count() as u64;
        (10 * n * n).max(10)
    }

    pub fn source(&self, v: VertexId) -> &SourceState<W> {
        &self.sources[v]
    }

    pub fn tree_vertex(&self, id: TvId) -> &TreeVertex<W> {
        &self.arena[id.idx()]
    }

    pub fn children(&self, id: TvId) -> Children<'_, W> {
        Children {
            arena: &self.arena,
            next: self.arena[id.idx()].first_child,
        }
    }

    pub fn distances(&self) -> &DistanceMatrix<W> {
        &self.distances
    }

    pub fn parents(&self) -> &ParentMatrix {
        &self.parents
    }

    pub fn access_count(&self) -> u64 {
        self.access_count
    }

    pub fn wait_count(&self) -> u64 {
        self.wait_count
    }

    pub fn sweeps(&self) -> u64 {
        self.sweeps
    }

    /// Sources that still have work, in round-robin order.
    pub fn active(&self) -> &[VertexId] {
        &self.active
    }

    pub fn is_finished(&self) -> bool {
        self.active.is_empty()
    }

    fn alloc(&mut self, vertex: VertexId, cor: u32, parent: u32, parent_edge_len: W) -> u32 {
        let id = self.arena.len();
        assert!(id < NIL as usize, "tree vertex arena overflow");
        self.arena.push(TreeVertex {
            vertex: vertex as u32,
            cor,
            parent: NIL,
            first_child: NIL,
            prev_sibling: NIL,
            next_sibling: NIL,
            is_determined: false,
            parent_edge_len,
        });
        let id = id as u32;
        if parent != NIL {
            self.attach(id, parent);
        }
        id
    }

    fn attach(&mut self, child: u32, parent: u32) {
        let head = self.arena[parent as usize].first_child;
        {
            let c = &mut self.arena[child as usize];
            c.parent = parent;
            c.prev_sibling = NIL;
            c.next_sibling = head;
        }
        if head != NIL {
            self.arena[head as usize].prev_sibling = child;
        }
        self.arena[parent as usize].first_child = child;
    }

    fn detach(&mut self, child: u32) {
        let TreeVertex {
            parent,
            prev_sibling,
            next_sibling,
            ..
        } = self.arena[child as usize];
        if prev_sibling != NIL {
            self.arena[prev_sibling as usize].next_sibling = next_sibling;
        } else if parent != NIL {
            self.arena[parent as usize].first_child = next_sibling;
        }
        if next_sibling != NIL {
            self.arena[next_sibling as usize].prev_sibling = prev_sibling;
        }
        let c = &mut self.arena[child as usize];
        c.parent = NIL;
        c.prev_sibling = NIL;
        c.next_sibling = NIL;
    }

    /// Advances `T(v)` by one step. Returns `true` if `v` needs another call.
    pub fn extend(&mut self, v: VertexId) -> bool {
        self.extend_step(v).1
    }

    /// [`extend`](Self::extend), also reporting which branch was taken.
    pub fn extend_step(&mut self, v: VertexId) -> (Step, bool) {
        let n = self.graph.vertex_count();
        match self.sources[v].tv_count {
            0 => {
                let root = self.alloc(v, NIL, NIL, W::zero());
                self.arena[root as usize].is_determined = true;
                let src = &mut self.sources[v];
                src.root = Some(TvId(root));
                src.tv_map = vec![NIL; n];
                src.tv_map[v] = root;
                src.tv_count = 1;
                (Step::Rooted, true)
            }
            1 => {
                let graph = self.graph;
                let v_root = self.sources[v].root.expect("rooted").0;
                self.sources[v].queue = IndexedMinQueue::with_capacity(n);
                for &(w, e) in graph.neighbors(v) {
                    self.access_count += 1;
                    self.distances.set(w, v, e);
                    self.parents.set_vertex(w, v, v);
                    let w_root = self.sources[w]
                        .root
                        .expect("every tree is rooted in the first sweep")
                        .0;
                    let w_tv = self.alloc(w, w_root, v_root, e);
                    let src = &mut self.sources[v];
                    src.queue.enqueue(w, e);
                    src.tv_map[w] = w_tv;
                    src.tv_count += 1;
                }
                // only a single-vertex graph seeds nothing
                let more = !self.sources[v].queue.is_empty();
                if !more {
                    self.finish(v);
                }
                (Step::Seeded, more)
            }
            _ => {
                let (w, d) = self.sources[v]
                    .queue
                    .dequeue_min()
                    .expect("finished sources are never extended");
                let w_tv = self.sources[v].tv_map[w];
                let w_cor = self.arena[w_tv as usize].cor;
                if !self.arena[w_cor as usize].is_determined {
                    self.sources[v].queue.enqueue(w, d);
                    self.wait_count += 1;
                    return (Step::Waited, true);
                }
                self.arena[w_tv as usize].is_determined = true;
                let d_w = self.distances.get(w, v);
                debug_assert!(d_w == d);
                let mut child = self.arena[w_cor as usize].first_child;
                // w_cor lives in another tree, so its child list is untouched below
                while child != NIL {
                    let next = self.arena[child as usize].next_sibling;
                    self.access_count += 1;
                    self.relax(v, w, w_tv, d_w, child);
                    child = next;
                }
                let more = !self.sources[v].queue.is_empty();
                if !more {
                    self.finish(v);
                }
                (Step::Determined, more)
            }
        }
    }

    /// Offers `x''` (a child of `w'.cor`) to `T(v)` through `w'`.
    #[inline]
    fn relax(&mut self, v: VertexId, w: VertexId, w_tv: u32, d_w: W, x_cor: u32) {
        let TreeVertex {
            vertex,
            parent_edge_len: e,
            ..
        } = self.arena[x_cor as usize];
        let x = vertex as usize;
        if x == v {
            return;
        }
        let d = d_w + e;
        if !self.parents.is_searched(x, v) {
            let x_tv = self.alloc(x, x_cor, w_tv, e);
            let src = &mut self.sources[v];
            src.queue.enqueue(x, d);
            src.tv_map[x] = x_tv;
            src.tv_count += 1;
            self.distances.set(x, v, d);
            self.parents.set_vertex(x, v, w);
        } else if d < self.distances.get(x, v) {
            let x_tv = self.sources[v].tv_map[x];
            debug_assert!(
                !self.arena[x_tv as usize].is_determined,
                "determined distance changed"
            );
            self.sources[v].queue.update(x, d);
            self.detach(x_tv);
            self.attach(x_tv, w_tv);
            let node = &mut self.arena[x_tv as usize];
            node.cor = x_cor;
            node.parent_edge_len = e;
            self.distances.set(x, v, d);
            self.parents.set_vertex(x, v, w);
        }
    }

    fn finish(&mut self, v: VertexId) {
        let src = &mut self.sources[v];
        src.queue = IndexedMinQueue::with_capacity(0);
        src.tv_map = Vec::new();
    }

    /// One round-robin pass over the active sources, dropping those that
    /// finish. Returns the number of steps that created or determined a tree
    /// vertex; a pass with none is reported as [`ApspError::Stalled`].
    pub fn sweep(&mut self) -> Result<usize, ApspError> {
        self.sweeps += 1;
        let mut progress = 0;
        let mut active = std::mem::take(&mut self.active);
        active.retain(|&v| {
            let (step, more) = self.extend_step(v);
            if step != Step::Waited {
                progress += 1;
            }
            more
        });
        self.active = active;
        if progress == 0 && !self.active.is_empty() {
            return Err(ApspError::Stalled { sweep: self.sweeps });
        }
        Ok(progress)
    }

    /// Sweeps until every source is finished.
    pub fn run(mut self) -> Result<ApspResult<W>, ApspError> {
        let limit = self.sweep_limit();
        while !self.is_finished() {
            if self.sweeps >= limit {
                return Err(ApspError::SweepLimit { limit });
            }
            self.sweep()?;
        }
        Ok(self.into_result())
    }

    fn into_result(self) -> ApspResult<W> {
        let mut metrics = RunMetrics::new(Algorithm::Pstw, self.graph);
        metrics.access_count = self.access_count;
        metrics.wait_count = self.wait_count;
        metrics.sweeps = self.sweeps;
        ApspResult {
            distances: self.distances,
            parents: self.parents,
            metrics,
        }
    }

    /// Structural check of every tree built so far.
    ///
    /// Verifies parent/child mutual consistency, that `cor` links point at a
    /// tree vertex for the same graph vertex in a different tree, that each
    /// tree is acyclic, and that the distance and parent matrices agree with
    /// the tree links.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.graph.vertex_count();
        // which source each tree vertex belongs to
        let mut owner = vec![NIL; self.arena.len()];
        let mut stack = Vec::new();
        for src in &self.sources {
            let Some(root) = src.root else {
                if src.tv_count != 0 {
                    return Err(format!("source {} has vertices but no root", src.id));
                }
                continue;
            };
            let mut count = 0;
            stack.clear();
            stack.push(root.0);
            while let Some(t) = stack.pop() {
                if owner[t as usize] != NIL {
                    return Err(format!(
                        "tree vertex {t} reached twice (cycle or shared node)"
                    ));
                }
                owner[t as usize] = src.id as u32;
                count += 1;
                let node = &self.arena[t as usize];
                let x = node.vertex();
                if t != root.0 {
                    let p = node.parent;
                    if p == NIL {
                        return Err(format!("non-root {t} of T({}) has no parent", src.id));
                    }
                    let pv = self.arena[p as usize].vertex();
                    if self.parents.get(x, src.id) != Parent::Vertex(pv) {
                        return Err(format!(
                            "S[{x}][{}] disagrees with tree parent {pv}",
                            src.id
                        ));
                    }
                    let expect = self.distances.get(pv, src.id) + node.parent_edge_len;
                    if self.distances.get(x, src.id) != expect {
                        return Err(format!("D[{x}][{}] is not D[parent] + edge", src.id));
                    }
                    if self.graph.edge_weight(pv, x) != Some(node.parent_edge_len) {
                        return Err(format!(
                            "parent edge of {x} in T({}) is not a graph edge",
                            src.id
                        ));
                    }
                } else if node.parent != NIL || node.cor != NIL || x != src.id {
                    return Err(format!("malformed root of T({})", src.id));
                }
                if !src.tv_map.is_empty() && src.tv_map[x] != t {
                    return Err(format!("tv_map of {} does not point at {t}", src.id));
                }
                let mut prev = NIL;
                let mut c = node.first_child;
                while c != NIL {
                    let child = &self.arena[c as usize];
                    if child.parent != t || child.prev_sibling != prev {
                        return Err(format!("child list of {t} is inconsistent"));
                    }
                    stack.push(c);
                    prev = c;
                    c = child.next_sibling;
                }
            }
            if count != src.tv_count {
                return Err(format!(
                    "T({}) has {count} reachable vertices, expected {}",
                    src.id, src.tv_count
                ));
            }
            if count > n {
                return Err(format!("T({}) is larger than the graph", src.id));
            }
        }
        for (t, node) in self.arena.iter().enumerate() {
            if owner[t] == NIL {
                return Err(format!("tree vertex {t} is detached from every tree"));
            }
            if node.cor != NIL {
                let cor = &self.arena[node.cor as usize];
                if cor.vertex != node.vertex {
                    return Err(format!("cor of {t} refers to a different vertex"));
                }
                if owner[node.cor as usize] == owner[t] {
                    return Err(format!("cor of {t} points into its own tree"));
                }
            }
        }
        Ok(())
    }
}

/// Iterator over the children of a tree vertex.
pub struct Children<'a, W> {
    arena: &'a [TreeVertex<W>],
    next: u32,
}

impl<W> Iterator for Children<'_, W> {
    type Item = TvId;

    fn next(&mut self) -> Option<TvId> {
        let cur = opt(self.next)?;
        self.next = self.arena[cur.idx()].next_sibling;
        Some(cur)
    }
}
