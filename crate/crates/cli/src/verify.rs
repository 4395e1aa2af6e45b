use std::io::{self, Write};
use std::path::PathBuf;

use pstw_core::{
    apsp_dijkstra, apsp_floyd_warshall_capped, apsp_peng, gen_hypercube, gen_scale_free,
    load_graph, run_pstw, verify_distances, verify_tree, Algorithm, ApspError, Graph64, ParseError,
    Seed, VerifyReport, DEFAULT_TOLERANCE,
};
use thiserror::Error;

use crate::config::{hypercube_dim, ConfigError, ExperimentConfig, Family};
use crate::experiment::{oracle_cap, ORACLE_CAP_ENV};

/// What `verify` checks: one edge-list file, or every `(n, seed)` instance of
/// a generator config.
#[derive(Debug, Clone)]
pub enum GraphSource {
    File(PathBuf),
    Generated(ExperimentConfig),
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot load {path}: {source}")]
    Load { path: PathBuf, source: ParseError },
    #[error("{0}: graph is disconnected, all-pairs distances are undefined")]
    Disconnected(String),
    #[error("{name}: n={n} exceeds the oracle cap {cap} (raise it with {ORACLE_CAP_ENV})")]
    OracleCap { name: String, n: usize, cap: usize },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    /// `(graph name, algorithm, report)` for every run.
    pub reports: Vec<(String, Algorithm, VerifyReport)>,
}

impl VerifyOutcome {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(|(_, _, r)| r.pass)
    }
}

fn graphs(source: &GraphSource) -> Result<Vec<(String, Graph64)>, VerifyError> {
    match source {
        GraphSource::File(path) => {
            let g = load_graph(path).map_err(|e| VerifyError::Load {
                path: path.clone(),
                source: e,
            })?;
            Ok(vec![(path.display().to_string(), g)])
        }
        GraphSource::Generated(cfg) => {
            let mut cfg = cfg.clone();
            // algorithm choice is irrelevant here; verify always runs all of them
            cfg.algorithms = Algorithm::ALL.to_vec();
            cfg.validate()?;
            let range = cfg.weight_range()?;
            let mut out = Vec::new();
            for &n in &cfg.sizes {
                for &seed in &cfg.seeds {
                    let (name, g) = match cfg.family {
                        Family::Hypercube => (
                            format!("hypercube n={n} seed={seed}"),
                            gen_hypercube(hypercube_dim(n)?, &range, Seed(seed)),
                        ),
                        Family::ScaleFree => {
                            let k = cfg.n_prime.resolve(n);
                            (
                                format!("scalefree n={n} n'={k} seed={seed}"),
                                gen_scale_free(n, k, &range, Seed(seed)),
                            )
                        }
                    };
                    out.push((name, g.expect("validated parameters always generate")));
                }
            }
            Ok(out)
        }
    }
}

/// Runs PSTw, Dijkstra and Peng on each graph and checks their distances
/// against Floyd-Warshall and their parent matrices as shortest-path trees.
/// One line per run is written to `out`.
pub fn cmd_verify<O: Write>(
    source: &GraphSource,
    mut out: O,
) -> Result<VerifyOutcome, VerifyError> {
    let cap = oracle_cap();
    let mut reports = Vec::new();
    for (name, g) in graphs(source)? {
        if !g.is_connected() {
            return Err(VerifyError::Disconnected(name));
        }
        let oracle = match apsp_floyd_warshall_capped(&g, cap) {
            Ok(d) => d,
            Err(ApspError::OracleCapExceeded { n, cap }) => {
                return Err(VerifyError::OracleCap { name, n, cap })
            }
            Err(e) => unreachable!("Floyd-Warshall only fails on the cap: {e}"),
        };
        for alg in [Algorithm::Pstw, Algorithm::Dijkstra, Algorithm::Peng] {
            let r = match alg {
                Algorithm::Pstw => run_pstw(&g),
                Algorithm::Dijkstra => apsp_dijkstra(&g),
                _ => apsp_peng(&g),
            };
            let report = match r {
                Ok(r) => verify_distances(&r.distances, &oracle, DEFAULT_TOLERANCE)
                    .expect("same graph")
                    .merge(&verify_tree(
                        &r.parents,
                        &r.distances,
                        &g,
                        DEFAULT_TOLERANCE,
                    )),
                Err(e) => {
                    writeln!(out, "{name}: {}: error: {e}", alg.label())?;
                    VerifyReport {
                        max_abs_error: f64::NAN,
                        mismatch_count: 1,
                        tree_violations: 0,
                        pass: false,
                    }
                }
            };
            writeln!(out, "{name}: {}: {report}", alg.label())?;
            reports.push((name.clone(), alg, report));
        }
    }
    Ok(VerifyOutcome { reports })
}
