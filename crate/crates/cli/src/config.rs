use std::fmt;
use std::str::FromStr;

use pstw_core::graph::MAX_HYPERCUBE_DIM;
use pstw_core::{Algorithm, WeightRange64};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Hypercube,
    ScaleFree,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::ScaleFree => "scalefree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hypercube" => Ok(Family::Hypercube),
            "scalefree" | "scale-free" => Ok(Family::ScaleFree),
            _ => Err(ConfigError::Parse(format!("unknown graph family '{s}'"))),
        }
    }
}

/// How many vertices each new scale-free vertex attaches to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NPrimeRule {
    Fixed(usize),
    /// `round(sqrt(n))`
    Sqrt,
}

impl NPrimeRule {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            NPrimeRule::Fixed(k) => k,
            NPrimeRule::Sqrt => (n as f64).sqrt().round() as usize,
        }
    }
}

impl FromStr for NPrimeRule {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("sqrt") {
            return Ok(NPrimeRule::Sqrt);
        }
        s.parse()
            .map(NPrimeRule::Fixed)
            .map_err(|_| ConfigError::Parse(format!("n' must be an integer or 'sqrt', got '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            _ => Err(ConfigError::Parse(format!("unknown output format '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("no algorithms selected")]
    NoAlgorithms,
    #[error("no graph sizes given")]
    NoSizes,
    #[error("no seeds given")]
    NoSeeds,
    #[error("hypercube size {0} is not a power of two between 2 and 2^{MAX_HYPERCUBE_DIM}")]
    NotPowerOfTwo(usize),
    #[error("scale-free graph needs 2 <= n' < n, got n={n}, n'={n_prime}")]
    BadNPrime { n: usize, n_prime: usize },
    #[error("invalid weight range: {0}")]
    Weights(String),
    #[error("{0}")]
    Parse(String),
}

/// One measurement campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub n_prime: NPrimeRule,
    /// Edge weights are drawn uniformly from `[lo, hi)`.
    pub weights: (f64, f64),
    pub seeds: Vec<u64>,
    pub algorithms: Vec<Algorithm>,
    pub verify: bool,
    /// Report every wall time as zero so output is byte-for-byte reproducible.
    pub no_timing: bool,
    /// Worker threads; 1 runs jobs one after another.
    pub jobs: usize,
}

pub const DEFAULT_SIZES: [usize; 3] = [64, 256, 1024];
pub const EXTENDED_SIZE: usize = 4096;
pub const DEFAULT_SEED_COUNT: u64 = 5;

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            family: Family::Hypercube,
            sizes: DEFAULT_SIZES.to_vec(),
            n_prime: NPrimeRule::Fixed(2),
            weights: (0.1, 1.0),
            seeds: (0..DEFAULT_SEED_COUNT).collect(),
            algorithms: Algorithm::ALL.to_vec(),
            verify: false,
            no_timing: false,
            jobs: 1,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.algorithms.is_empty() {
            return Err(ConfigError::NoAlgorithms);
        }
        if self.sizes.is_empty() {
            return Err(ConfigError::NoSizes);
        }
        if self.seeds.is_empty() {
            return Err(ConfigError::NoSeeds);
        }
        self.weight_range()?;
        for &n in &self.sizes {
            match self.family {
                Family::Hypercube => {
                    hypercube_dim(n)?;
                }
                Family::ScaleFree => {
                    let n_prime = self.n_prime.resolve(n);
                    if n_prime < 2 || n_prime >= n {
                        return Err(ConfigError::BadNPrime { n, n_prime });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn weight_range(&self) -> Result<WeightRange64, ConfigError> {
        WeightRange64::new(self.weights.0, self.weights.1)
            .map_err(|e| ConfigError::Weights(e.to_string()))
    }

    /// `n'` for a scale-free instance of size `n`; `None` for hypercubes.
    pub fn n_prime_for(&self, n: usize) -> Option<usize> {
        match self.family {
            Family::Hypercube => None,
            Family::ScaleFree => Some(self.n_prime.resolve(n)),
        }
    }
}

pub fn hypercube_dim(n: usize) -> Result<u32, ConfigError> {
    if n >= 2 && n.is_power_of_two() && n.trailing_zeros() <= MAX_HYPERCUBE_DIM {
        Ok(n.trailing_zeros())
    } else {
        Err(ConfigError::NotPowerOfTwo(n))
    }
}

/// `"64,256"` style lists.
pub fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>, ConfigError> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse()
                .map_err(|_| ConfigError::Parse(format!("invalid {what} '{p}'")))
        })
        .collect()
}

/// A bare count `k` means seeds `0..k`; anything with a comma is an explicit
/// list (`"7,"` selects only seed 7); `a..b` is a half-open range.
pub fn parse_seeds(s: &str) -> Result<Vec<u64>, ConfigError> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let a: u64 = a
            .trim()
            .parse()
            .map_err(|_| ConfigError::Parse(format!("invalid seed range '{s}'")))?;
        let b: u64 = b
            .trim()
            .parse()
            .map_err(|_| ConfigError::Parse(format!("invalid seed range '{s}'")))?;
        return Ok((a..b).collect());
    }
    if s.contains(',') {
        return parse_list(s, "seed");
    }
    let k: u64 = s
        .parse()
        .map_err(|_| ConfigError::Parse(format!("invalid seed count '{s}'")))?;
    Ok((0..k).collect())
}

pub fn parse_weights(s: &str) -> Result<(f64, f64), ConfigError> {
    match parse_list::<f64>(s, "weight")?.as_slice() {
        &[lo, hi] => Ok((lo, hi)),
        _ => Err(ConfigError::Parse(format!(
            "weights must be 'lo,hi', got '{s}'"
        ))),
    }
}

pub fn parse_algorithms(s: &str) -> Result<Vec<Algorithm>, ConfigError> {
    let mut out: Vec<Algorithm> = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let a: Algorithm = part
            .parse()
            .map_err(|e: pstw_core::metrics::UnknownAlgorithm| ConfigError::Parse(e.to_string()))?;
        if !out.contains(&a) {
            out.push(a);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(parse_seeds("3").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_seeds("7,").unwrap(), vec![7]);
        assert_eq!(parse_seeds("4,9").unwrap(), vec![4, 9]);
        assert_eq!(parse_seeds("2..4").unwrap(), vec![2, 3]);
        assert!(parse_seeds("x").is_err());
    }

    #[test]
    fn n_prime() {
        assert_eq!("sqrt".parse::<NPrimeRule>().unwrap().resolve(256), 16);
        assert_eq!("3".parse::<NPrimeRule>().unwrap().resolve(256), 3);
        assert!("many".parse::<NPrimeRule>().is_err());
    }

    #[test]
    fn algorithms_dedup() {
        let a = parse_algorithms("peng, pstw,peng").unwrap();
        assert_eq!(a, vec![Algorithm::Peng, Algorithm::Pstw]);
        assert!(parse_algorithms("bellman").is_err());
        assert!(parse_algorithms("").unwrap().is_empty());
    }

    #[test]
    fn validation() {
        let mut cfg = ExperimentConfig::default();
        assert!(cfg.validate().is_ok());
        cfg.sizes = vec![100];
        assert_eq!(cfg.validate(), Err(ConfigError::NotPowerOfTwo(100)));
        cfg.family = Family::ScaleFree;
        assert!(cfg.validate().is_ok());
        cfg.sizes = vec![2];
        assert!(matches!(cfg.validate(), Err(ConfigError::BadNPrime { .. })));
        cfg.sizes = vec![64];
        cfg.algorithms.clear();
        assert_eq!(cfg.validate(), Err(ConfigError::NoAlgorithms));
        cfg.algorithms = vec![Algorithm::Pstw];
        cfg.weights = (0.0, 1.0);
        assert!(matches!(cfg.validate(), Err(ConfigError::Weights(_))));
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weights("0.01,1").unwrap(), (0.01, 1.0));
        assert!(parse_weights("1").is_err());
    }
}
