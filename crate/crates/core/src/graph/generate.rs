//! Seeded generators for hypercube-shaped and scale-free graphs.
//!
//! Both generators draw from a ChaCha8 stream seeded with [`Seed`], so a given
//! `(parameters, seed)` pair always yields the same graph, bit for bit, on
//! every platform.

use rand::distributions::uniform::SampleUniform;
use rand::distributions::{Distribution, Uniform};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, VertexId};
use crate::weight::Weight;

/// Largest supported hypercube dimension (2^20 vertices).
pub const MAX_HYPERCUBE_DIM: u32 = 20;

/// Seed of the generators' PRNG (ChaCha8, `seed_from_u64`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Seed {
    fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for Seed {
    fn from(s: u64) -> Self {
        Seed(s)
    }
}

/// Half-open interval `[lo, hi)` edge lengths are drawn from uniformly.
/// `lo == hi` gives constant lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightRange<W> {
    lo: W,
    hi: W,
}

impl<W: Weight> WeightRange<W> {
    pub fn new(lo: W, hi: W) -> Result<Self, GraphError> {
        if !lo.is_valid_length() || !hi.is_valid_length() || hi < lo {
            return Err(GraphError::InvalidParameter(format!(
                "weight range [{lo}, {hi}) needs 0 < lo <= hi"
            )));
        }
        Ok(WeightRange { lo, hi })
    }

    pub fn lo(&self) -> W {
        self.lo
    }

    pub fn hi(&self) -> W {
        self.hi
    }
}

impl Default for WeightRange<f64> {
    fn default() -> Self {
        WeightRange { lo: 0.1, hi: 1.0 }
    }
}

impl Default for WeightRange<f32> {
    fn default() -> Self {
        WeightRange { lo: 0.1, hi: 1.0 }
    }
}

enum WeightSampler<W: SampleUniform> {
    Constant(W),
    Uniform(Uniform<W>),
}

impl<W: Weight + SampleUniform> WeightSampler<W> {
    fn new(range: &WeightRange<W>) -> Self {
        if range.lo < range.hi {
            WeightSampler::Uniform(Uniform::new(range.lo, range.hi))
        } else {
            WeightSampler::Constant(range.lo)
        }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> W {
        match self {
            WeightSampler::Constant(w) => *w,
            WeightSampler::Uniform(u) => u.sample(rng),
        }
    }
}

/// The `d`-dimensional hypercube: `2^d` vertices, `u`-`v` adjacent iff their
/// ids differ in exactly one bit.
pub fn gen_hypercube<W>(d: u32, range: &WeightRange<W>, seed: Seed) -> Result<Graph<W>, GraphError>
where
    W: Weight + SampleUniform,
{
    if !(1..=MAX_HYPERCUBE_DIM).contains(&d) {
        return Err(GraphError::InvalidParameter(format!(
            "hypercube dimension {d} outside 1..={MAX_HYPERCUBE_DIM}"
        )));
    }
    let n = 1usize << d;
    let mut rng = seed.rng();
    let sampler = WeightSampler::new(range);
    let mut edges = Vec::with_capacity(n * d as usize / 2);
    for u in 0..n {
        for bit in 0..d {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v, sampler.sample(&mut rng)));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Degree-proportional sampling over the vertices added so far.
///
/// Every vertex appears in the pool once per incident edge, so a uniform draw
/// from the pool picks a vertex with probability proportional to its degree.
#[derive(Debug, Clone, Default)]
pub struct AttachmentPool {
    endpoints: Vec<VertexId>,
}

impl AttachmentPool {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        self.endpoints.push(u);
        self.endpoints.push(v);
    }

    /// One vertex drawn with probability proportional to its degree.
    pub fn pick<R: Rng>(&self, rng: &mut R) -> VertexId {
        self.endpoints[rng.gen_range(0..self.endpoints.len())]
    }

    /// `k` distinct vertices, drawn successively with probability proportional
    /// to degree among those not yet chosen. Rejection of repeats samples
    /// exactly that conditional distribution.
    ///
    /// Panics if fewer than `k` vertices have nonzero degree.
    pub fn pick_distinct<R: Rng>(&self, k: usize, rng: &mut R) -> Vec<VertexId> {
        let mut distinct = self.endpoints.clone();
        distinct.sort_unstable();
        distinct.dedup();
        assert!(
            distinct.len() >= k,
            "pool has {} vertices, asked for {k}",
            distinct.len()
        );
        pick_distinct_unchecked(self, k, rng)
    }
}

/// Preferential-attachment graph: a complete graph on `n_prime` vertices, then
/// each remaining vertex joins `n_prime` distinct existing vertices chosen with
/// probability proportional to their current degree.
///
/// The result has `n_prime(n_prime-1)/2 + (n - n_prime) n_prime` edges and is
/// always connected.
pub fn gen_scale_free<W>(
    n: usize,
    n_prime: usize,
    range: &WeightRange<W>,
    seed: Seed,
) -> Result<Graph<W>, GraphError>
where
    W: Weight + SampleUniform,
{
    if n_prime < 2 || n_prime >= n {
        return Err(GraphError::InvalidParameter(format!(
            "scale-free graph needs 2 <= n' < n, got n={n}, n'={n_prime}"
        )));
    }
    let mut rng = seed.rng();
    let sampler = WeightSampler::new(range);
    let m = n_prime * (n_prime - 1) / 2 + (n - n_prime) * n_prime;
    let mut edges = Vec::with_capacity(m);
    let mut pool = AttachmentPool::new();
    for u in 0..n_prime {
        for v in u + 1..n_prime {
            edges.push((u, v, sampler.sample(&mut rng)));
            pool.add_edge(u, v);
        }
    }
    for v in n_prime..n {
        // targets are drawn against the degrees before `v` joins
        let targets = pick_distinct_unchecked(&pool, n_prime, &mut rng);
        for t in targets {
            edges.push((t, v, sampler.sample(&mut rng)));
            pool.add_edge(t, v);
        }
    }
    Graph::from_edges(n, edges)
}

// The scale-free construction always has at least n' vertices in the pool.
fn pick_distinct_unchecked<R: Rng>(pool: &AttachmentPool, k: usize, rng: &mut R) -> Vec<VertexId> {
    let mut chosen: Vec<VertexId> = Vec::with_capacity(k);
    while chosen.len() < k {
        let v = pool.pick(rng);
        if !chosen.contains(&v) {
            chosen.push(v);
        }
    }
    chosen
}
