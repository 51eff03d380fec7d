//! `wedge`: wedge probabilities, Kolmogorov-Smirnov values, boundary
//! crossing estimates and the accompanying benchmarks from the command line.

mod input;
mod output;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use wedge::batch::{batch_wedge, timing_harness, write_timing_csv, ParamTable};
use wedge::bcp::{bcp_montecarlo, PiecewiseBoundaryPair};
use wedge::bench::convergence_study;
use wedge::{kolmogorov_cdf, thresholds, Workers, DEFAULT_TERMS, MAX_TERMS, MIN_TERMS};

use input::{fmt_exact, fmt_prob, read_columns};
use output::Output;

#[derive(Parser, Debug)]
#[command(name = "wedge", version, about = "Wedge probabilities of Brownian motion and related computations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Series terms per evaluation (2 to 8)
    #[arg(long, global = true, default_value_t = DEFAULT_TERMS, value_parser = parse_terms)]
    terms: usize,
    /// Worker threads; overrides the WEDGE_WORKERS environment variable
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Random seed
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Monte Carlo sample count
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Output path, `-` for standard output
    #[arg(long, short, global = true, default_value = "-")]
    output: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a CSV of parameters with header a1,b1,a2,b2
    Wedge {
        /// Input CSV, `-` for standard input
        #[arg(default_value = "-")]
        input: String,
    },
    /// Kolmogorov-Smirnov distribution function; reads a CSV with header `a` when no values are given
    Ks {
        values: Vec<f64>,
        /// Input CSV, `-` for standard input
        #[arg(long, short, default_value = "-")]
        input: String,
    },
    /// Monte Carlo crossing probability for a piecewise-linear band described in a TOML file
    Bcp { config: String },
    /// Threshold and precision for each number of terms
    Table,
    /// Number of terms to convergence over sampled parameters; per-tuple CSV to --output, summary to stdout
    Bench {
        /// Number of sampled tuples
        #[arg(long, default_value_t = 100_000)]
        count: usize,
        /// Target precision
        #[arg(long, default_value_t = 1e-16)]
        eps: f64,
    },
    /// Wall-clock time of batch evaluation per size and worker count
    Time {
        /// Row counts
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000,1000000")]
        sizes: Vec<usize>,
        /// Worker counts
        #[arg(long, value_delimiter = ',', default_value = "1")]
        workers_list: Vec<usize>,
    },
}

fn parse_terms(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if (MIN_TERMS..=MAX_TERMS).contains(&n) {
        Ok(n)
    } else {
        Err(format!("must be between {MIN_TERMS} and {MAX_TERMS}"))
    }
}

impl Global {
    fn workers(&self) -> Result<Workers> {
        match self.workers {
            Some(k) => Ok(Workers::fixed(k)?),
            None => Ok(Workers::Auto),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Wedge { input } => cmd_wedge(g, input),
        Command::Ks { values, input } => cmd_ks(g, values, input),
        Command::Bcp { config } => cmd_bcp(g, config),
        Command::Table => cmd_table(g),
        Command::Bench { count, eps } => cmd_bench(g, *count, *eps),
        Command::Time { sizes, workers_list } => cmd_time(g, sizes, workers_list),
    }
}

fn cmd_wedge(g: &Global, path: &str) -> Result<()> {
    let rows = read_columns(input::open(path)?, &["a1", "b1", "a2", "b2"])?;
    let mut cols: [Vec<f64>; 4] = Default::default();
    for row in &rows {
        for (col, &v) in cols.iter_mut().zip(row) {
            col.push(v);
        }
    }
    let [a1, b1, a2, b2] = cols;
    let table = ParamTable::new(a1, b1, a2, b2)?;
    let results = batch_wedge(&table, g.terms, g.workers()?)?;
    let mut out = Output::open(&g.output)?;
    writeln!(out, "a1,b1,a2,b2,prob,formula,terms,remainder_bound")?;
    for (i, row) in rows.iter().enumerate() {
        let r = results.row(i);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{:e}",
            fmt_exact(row[0]),
            fmt_exact(row[1]),
            fmt_exact(row[2]),
            fmt_exact(row[3]),
            fmt_prob(r.value),
            r.formula,
            r.terms,
            r.remainder_bound
        )?;
    }
    out.finish()
}

fn cmd_ks(g: &Global, values: &[f64], path: &str) -> Result<()> {
    let values = if values.is_empty() {
        read_columns(input::open(path)?, &["a"])?.into_iter().map(|r| r[0]).collect()
    } else {
        values.to_vec()
    };
    let mut out = Output::open(&g.output)?;
    writeln!(out, "a,cdf")?;
    for a in values {
        writeln!(out, "{},{}", fmt_exact(a), fmt_prob(kolmogorov_cdf(a)))?;
    }
    out.finish()
}

/// Boundary file for `wedge bcp`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct BcpConfig {
    /// `[t, value]` knots of the lower boundary, starting at t = 0
    lower: Vec<[f64; 2]>,
    /// `[t, value]` knots of the upper boundary, same horizon as `lower`
    upper: Vec<[f64; 2]>,
    samples: Option<usize>,
    seed: Option<u64>,
}

const DEFAULT_BCP_SAMPLES: usize = 100_000;
const DEFAULT_SEED: u64 = 1;

fn cmd_bcp(g: &Global, path: &str) -> Result<()> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
    let config: BcpConfig = toml::from_str(&text).with_context(|| format!("invalid boundary file {path}"))?;
    let knots = |v: &[[f64; 2]]| v.iter().map(|&[t, x]| (t, x)).collect::<Vec<_>>();
    let bounds = PiecewiseBoundaryPair::new(&knots(&config.lower), &knots(&config.upper))?;
    let samples = g.samples.or(config.samples).unwrap_or(DEFAULT_BCP_SAMPLES);
    let seed = g.seed.or(config.seed).unwrap_or(DEFAULT_SEED);
    if samples == 0 {
        bail!("samples must be positive");
    }
    let est = bcp_montecarlo(&bounds, samples, seed, g.workers()?)?;
    let mut out = Output::open(&g.output)?;
    writeln!(out, "estimate = {}", fmt_exact(est.estimate))?;
    writeln!(out, "std_error = {}", fmt_exact(est.std_error))?;
    writeln!(out, "samples = {}", est.samples)?;
    writeln!(out, "seed = {}", est.seed)?;
    writeln!(out, "intervals = {}", bounds.intervals())?;
    out.finish()
}

fn cmd_table(g: &Global) -> Result<()> {
    let mut out = Output::open(&g.output)?;
    writeln!(out, "n_terms,tau,epsilon,ln_epsilon")?;
    for e in thresholds() {
        writeln!(out, "{},{:.6},{:.4e},{:.6}", e.n_terms, e.tau, e.epsilon, e.ln_epsilon)?;
    }
    out.finish()
}

fn cmd_bench(g: &Global, count: usize, eps: f64) -> Result<()> {
    if count == 0 {
        bail!("count must be positive");
    }
    let mut out = Output::open_file(&g.output, "the per-tuple study")?;
    let study = convergence_study(count, eps, g.seed.unwrap_or(2016), g.workers()?)?;
    study.write_csv(&mut out)?;
    out.finish()?;
    study.summary.write(eps, std::io::stdout().lock())?;
    Ok(())
}

fn cmd_time(g: &Global, sizes: &[usize], workers_list: &[usize]) -> Result<()> {
    let rows = timing_harness(sizes, workers_list, g.terms, g.seed.unwrap_or(DEFAULT_SEED))?;
    let mut out = Output::open(&g.output)?;
    write_timing_csv(&rows, &mut out)?;
    out.finish()
}
