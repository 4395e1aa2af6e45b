use std::env;

use pstw_core::{
    apsp_dijkstra, apsp_floyd_warshall_capped, apsp_peng, gen_hypercube, gen_scale_free, run_pstw,
    timed, verify_distances, verify_tree, Algorithm, ApspError, DistanceMatrix64, Graph64, Seed,
    DEFAULT_ORACLE_CAP, DEFAULT_TOLERANCE,
};
use rayon::prelude::*;

use crate::config::{hypercube_dim, ConfigError, ExperimentConfig, Family};

/// Overrides [`DEFAULT_ORACLE_CAP`].
pub const ORACLE_CAP_ENV: &str = "PST_ORACLE_CAP";

/// One algorithm run on one graph instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub family: Family,
    pub n: usize,
    pub n_prime: Option<usize>,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub wall_seconds: f64,
    pub access_count: u64,
    /// `None` for Floyd-Warshall, which does not scan adjacency lists.
    pub alpha: Option<f64>,
    pub waits: u64,
    /// Distances matched the oracle and parents formed shortest-path trees.
    pub verified: bool,
}

/// Largest `n` the Floyd-Warshall oracle is run on.
pub fn oracle_cap() -> usize {
    env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

struct Instance {
    n: usize,
    seed: u64,
    graph: Graph64,
    oracle: Option<DistanceMatrix64>,
}

fn generate(cfg: &ExperimentConfig, n: usize, seed: u64) -> Graph64 {
    let range = cfg.weight_range().expect("validated");
    let g = match cfg.family {
        Family::Hypercube => {
            gen_hypercube(hypercube_dim(n).expect("validated"), &range, Seed(seed))
        }
        Family::ScaleFree => gen_scale_free(n, cfg.n_prime.resolve(n), &range, Seed(seed)),
    };
    g.expect("validated parameters always generate")
}

fn run_one(
    inst: &Instance,
    alg: Algorithm,
    cap: usize,
) -> Result<(f64, u64, Option<f64>, u64, bool), ApspError> {
    let g = &inst.graph;
    if alg == Algorithm::FloydWarshall {
        let (d, secs) = timed(|| apsp_floyd_warshall_capped(g, cap));
        let d = d?;
        let verified = match &inst.oracle {
            Some(o) => {
                verify_distances(&d, o, DEFAULT_TOLERANCE)
                    .expect("same graph")
                    .pass
            }
            None => false,
        };
        return Ok((secs, 0, None, 0, verified));
    }
    let r = match alg {
        Algorithm::Pstw => run_pstw(g),
        Algorithm::Dijkstra => apsp_dijkstra(g),
        Algorithm::Peng => apsp_peng(g),
        Algorithm::FloydWarshall => unreachable!(),
    }?;
    let verified = match &inst.oracle {
        Some(o) => {
            verify_distances(&r.distances, o, DEFAULT_TOLERANCE)
                .expect("same graph")
                .pass
                && verify_tree(&r.parents, &r.distances, g, DEFAULT_TOLERANCE).pass
        }
        None => false,
    };
    let m = r.metrics;
    Ok((
        m.wall_seconds,
        m.access_count,
        Some(m.alpha()),
        m.wait_count,
        verified,
    ))
}

/// Runs every selected algorithm on every `(n, seed)` instance.
///
/// Each graph is generated once and shared by all algorithms. Records come
/// back in config order (size, then seed, then algorithm) regardless of how
/// many worker threads ran them. Verification and Floyd-Warshall runs above
/// the oracle cap are skipped with a warning on stderr.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ResultRecord>, ConfigError> {
    cfg.validate()?;
    let cap = oracle_cap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| ConfigError::Parse(format!("cannot start worker pool: {e}")))?;

    let keys: Vec<(usize, u64)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| cfg.seeds.iter().map(move |&s| (n, s)))
        .collect();
    for &n in &cfg.sizes {
        if n > cap && (cfg.verify || cfg.algorithms.contains(&Algorithm::FloydWarshall)) {
            eprintln!("warning: n={n} exceeds the oracle cap {cap} (set {ORACLE_CAP_ENV}); skipping Floyd-Warshall there");
        }
    }

    let instances: Vec<Instance> = pool.install(|| {
        keys.par_iter()
            .map(|&(n, seed)| {
                let graph = generate(cfg, n, seed);
                let oracle = if cfg.verify && n <= cap {
                    apsp_floyd_warshall_capped(&graph, cap).ok()
                } else {
                    None
                };
                Instance {
                    n,
                    seed,
                    graph,
                    oracle,
                }
            })
            .collect()
    });

    let jobs: Vec<(&Instance, Algorithm)> = instances
        .iter()
        .flat_map(|i| cfg.algorithms.iter().map(move |&a| (i, a)))
        .collect();
    let results: Vec<Option<ResultRecord>> = pool.install(|| {
        jobs.par_iter()
            .map(|&(inst, alg)| {
                if alg == Algorithm::FloydWarshall && inst.n > cap {
                    return None;
                }
                let (wall_seconds, access_count, alpha, waits, verified) = run_one(inst, alg, cap)
                    .unwrap_or_else(|e| {
                        panic!(
                            "{alg} failed on {} n={} seed={}: {e}",
                            cfg.family, inst.n, inst.seed
                        )
                    });
                Some(ResultRecord {
                    family: cfg.family,
                    n: inst.n,
                    n_prime: cfg.n_prime_for(inst.n),
                    seed: inst.seed,
                    algorithm: alg,
                    wall_seconds: if cfg.no_timing { 0.0 } else { wall_seconds },
                    access_count,
                    alpha,
                    waits,
                    verified,
                })
            })
            .collect()
    });
    Ok(results.into_iter().flatten().collect())
}
