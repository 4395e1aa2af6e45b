use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use pstw_bench::config::{self, EXTENDED_SIZE};
use pstw_bench::{
    cmd_verify, run_experiment, write_csv, write_markdown, ExperimentConfig, GraphSource,
    OutputFormat,
};

/// Benchmarks weighted all-pairs shortest path algorithms.
///
/// Without a subcommand, runs an experiment: generates one graph per
/// (size, seed), runs each selected algorithm on it and prints one record per
/// run.
#[derive(Parser)]
#[command(name = "pstw", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment (the default).
    Run(RunArgs),
    /// Check every algorithm against the Floyd-Warshall oracle. Exits 0 only
    /// if all distances and parent trees are correct.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// hypercube or scalefree
    #[arg(long, default_value = "hypercube")]
    family: String,
    /// Comma-separated vertex counts [default: 64,256,1024]
    #[arg(long)]
    n: Option<String>,
    /// Scale-free attachment count: an integer or `sqrt` for round(sqrt(n))
    #[arg(long, default_value = "2")]
    nprime: String,
    /// Edge weights drawn uniformly from [lo, hi)
    #[arg(long, default_value = "0.1,1")]
    weights: String,
    /// A count k (seeds 0..k), a list `3,8` (`7,` for just seed 7) or a range `a..b`
    #[arg(long, default_value = "5")]
    seeds: String,
    /// Add n=4096 to the default sizes
    #[arg(long)]
    extended: bool,
}

#[derive(Args, Clone)]
struct RunArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Comma-separated subset of pstw,dijkstra,peng,floyd
    #[arg(long, default_value = "pstw,dijkstra,peng,floyd")]
    algos: String,
    /// Check each run against the Floyd-Warshall oracle (up to the oracle cap)
    #[arg(long)]
    verify: bool,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or markdown
    #[arg(long, default_value = "csv")]
    format: String,
    /// Report all wall times as zero, for reproducible output
    #[arg(long)]
    no_timing: bool,
    /// Worker threads. Concurrent runs share memory bandwidth, so timings are
    /// most comparable with 1.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Edge-list file to check; without it, graphs are generated
    file: Option<PathBuf>,
    #[command(flatten)]
    graph: GraphArgs,
}

impl GraphArgs {
    fn to_config(&self) -> Result<ExperimentConfig> {
        let mut sizes = match &self.n {
            Some(s) => config::parse_list(s, "vertex count")?,
            None => config::DEFAULT_SIZES.to_vec(),
        };
        if self.extended && !sizes.contains(&EXTENDED_SIZE) {
            sizes.push(EXTENDED_SIZE);
        }
        Ok(ExperimentConfig {
            family: self.family.parse()?,
            sizes,
            n_prime: self.nprime.parse()?,
            weights: config::parse_weights(&self.weights)?,
            seeds: config::parse_seeds(&self.seeds)?,
            ..ExperimentConfig::default()
        })
    }
}

fn run(args: RunArgs) -> Result<ExitCode> {
    let cfg = ExperimentConfig {
        algorithms: config::parse_algorithms(&args.algos)?,
        verify: args.verify,
        no_timing: args.no_timing,
        jobs: args.jobs,
        ..args.graph.to_config()?
    };
    let format: OutputFormat = args.format.parse()?;
    let records = run_experiment(&cfg)?;
    let mut sink: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(io::BufWriter::new(
            std::fs::File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        OutputFormat::Csv => write_csv(&records, &mut sink)?,
        OutputFormat::Markdown => write_markdown(&records, &mut sink)?,
    }
    sink.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let source = match args.file {
        Some(p) => GraphSource::File(p),
        None => GraphSource::Generated(args.graph.to_config()?),
    };
    let outcome = cmd_verify(&source, io::stdout().lock())?;
    if outcome.pass() {
        println!("all {} runs PASS", outcome.reports.len());
        Ok(ExitCode::SUCCESS)
    } else {
        let failed = outcome.reports.iter().filter(|(_, _, r)| !r.pass).count();
        println!("{failed} of {} runs FAIL", outcome.reports.len());
        Ok(ExitCode::FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Some(Command::Run(args)) => run(args),
        Some(Command::Verify(args)) => verify(args),
        None => run(cli.run),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
