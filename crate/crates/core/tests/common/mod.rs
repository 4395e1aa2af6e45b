#![allow(dead_code)]

use pstw_core::{
    apsp_floyd_warshall, gen_hypercube, gen_scale_free, verify_distances, verify_tree, ApspResult,
    Graph, Graph64, Seed, VerifyReport, Weight, WeightRange64, DEFAULT_TOLERANCE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn hypercube(d: u32, seed: u64) -> Graph64 {
    gen_hypercube(d, &WeightRange64::default(), Seed(seed)).unwrap()
}

pub fn scale_free(n: usize, n_prime: usize, seed: u64) -> Graph64 {
    gen_scale_free(n, n_prime, &WeightRange64::default(), Seed(seed)).unwrap()
}

pub fn sqrt_n_prime(n: usize) -> usize {
    (n as f64).sqrt().round() as usize
}

/// Random spanning tree plus `extra` random chords, weights from `weight`.
pub fn random_connected<W: Weight>(
    n: usize,
    extra: usize,
    seed: u64,
    mut weight: impl FnMut(&mut ChaCha8Rng) -> W,
) -> Graph<W> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        seen.insert((u, v));
        edges.push((u, v, weight(&mut rng)));
    }
    for _ in 0..extra {
        if n < 2 {
            break;
        }
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        let (u, v) = (a.min(b), a.max(b));
        if u != v && seen.insert((u, v)) {
            edges.push((u, v, weight(&mut rng)));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Distance check against Floyd-Warshall plus the tree check.
pub fn check_against_oracle<W: Weight>(g: &Graph<W>, r: &ApspResult<W>) -> VerifyReport {
    let oracle = apsp_floyd_warshall(g).unwrap();
    let d = verify_distances(&r.distances, &oracle, DEFAULT_TOLERANCE).unwrap();
    d.merge(&verify_tree(&r.parents, &r.distances, g, DEFAULT_TOLERANCE))
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}
