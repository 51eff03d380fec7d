//! Monte Carlo study of how many terms each series needs.
//!
//! Parameters are drawn independently on `[0, 10]` with distribution
//! function `(x/10)^{1/2}`, which spreads the probabilities over the whole
//! of `[0, 1]` with extra mass near both ends.

use std::io::{self, Write};

use rand::distr::{Distribution, Open01};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::convergence::{first_within, kernel_partial_sums, Series, REFERENCE_TERMS};
use crate::error::{Result, WedgeError};
use crate::exec::{map_indexed, Workers};
use crate::params::WedgeParams;
use crate::series::Kernel;
use crate::wedge::trivial_outcome;

/// Upper end of the sampling interval.
pub const PARAM_RANGE: f64 = 10.0;

/// Inverse of `F(x) = (x/10)^{1/2}`.
pub fn inverse_cdf(u: f64) -> f64 {
    PARAM_RANGE * u * u
}

/// Deterministic stream of study parameters (ChaCha8 seeded from a `u64`).
#[derive(Debug, Clone)]
pub struct ParamSampler {
    rng: ChaCha8Rng,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_value(&mut self) -> f64 {
        let u: f64 = Open01.sample(&mut self.rng);
        inverse_cdf(u)
    }

    pub fn next_params(&mut self) -> WedgeParams {
        let [a1, b1, a2, b2] = std::array::from_fn(|_| self.next_value());
        WedgeParams::new(a1, b1, a2, b2).expect("sampled values are finite")
    }
}

pub fn sample_params(count: usize, seed: u64) -> Vec<WedgeParams> {
    let mut sampler = ParamSampler::new(seed);
    (0..count).map(|_| sampler.next_params()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRecord {
    pub params: WedgeParams,
    pub log_ab_plus: f64,
    pub n_doob: usize,
    pub n_theta: usize,
    /// The evaluator returns 0 or 1 without summing.
    pub trivial: bool,
}

impl ConvergenceRecord {
    pub fn min_terms(&self) -> usize {
        self.n_doob.min(self.n_theta)
    }

    pub fn evaluate(params: WedgeParams, eps: f64) -> Result<Self> {
        params.require_positive()?;
        let kernel = Kernel::new(&params);
        let count = |series| {
            let sums = kernel_partial_sums(&kernel, series, REFERENCE_TERMS);
            first_within(&sums, eps).ok_or(WedgeError::NoConvergence { eps, max_terms: REFERENCE_TERMS })
        };
        Ok(Self {
            params,
            log_ab_plus: kernel.ab_plus.ln(),
            n_doob: count(Series::Doob)?,
            n_theta: count(Series::ThetaDual)?,
            trivial: trivial_outcome(&kernel).is_some(),
        })
    }
}

/// Counts per category.
///
/// A tuple is trivial when no summation is needed: the evaluator
/// short-circuits, or the empty partial sum of one series is already within
/// `eps` (`min(n_doob, n_theta) = 0`). Otherwise it is counted under
/// `min(n_doob, n_theta)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StudySummary {
    pub total: usize,
    pub trivial: usize,
    /// `by_terms[n]`: non-trivial tuples whose faster series needed `n` terms.
    pub by_terms: Vec<usize>,
    pub doob_over_50: usize,
    pub doob_over_100: usize,
}

impl StudySummary {
    pub fn from_records(records: &[ConvergenceRecord]) -> Self {
        let mut s = StudySummary { total: records.len(), ..Default::default() };
        for r in records {
            if r.trivial || r.min_terms() == 0 {
                s.trivial += 1;
            } else {
                let n = r.min_terms();
                if s.by_terms.len() <= n {
                    s.by_terms.resize(n + 1, 0);
                }
                s.by_terms[n] += 1;
            }
            s.doob_over_50 += usize::from(r.n_doob > 50);
            s.doob_over_100 += usize::from(r.n_doob > 100);
        }
        s
    }

    pub fn share(&self, count: usize) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            count as f64 / self.total as f64
        }
    }

    pub fn trivial_share(&self) -> f64 {
        self.share(self.trivial)
    }

    /// Share of non-trivial tuples needing exactly `n` terms.
    pub fn terms_share(&self, n: usize) -> f64 {
        self.share(self.by_terms.get(n).copied().unwrap_or(0))
    }

    pub fn max_terms(&self) -> usize {
        self.by_terms.len().saturating_sub(1)
    }

    /// Plain `key = value` lines, one per category.
    pub fn write<W: Write>(&self, eps: f64, mut out: W) -> io::Result<()> {
        writeln!(out, "tuples = {}", self.total)?;
        writeln!(out, "eps = {eps:e}")?;
        writeln!(out, "trivial = {} # {:.3}%", self.trivial, 100.0 * self.trivial_share())?;
        for (n, &count) in self.by_terms.iter().enumerate() {
            writeln!(out, "terms_{n} = {count} # {:.3}%", 100.0 * self.share(count))?;
        }
        writeln!(out, "doob_over_50 = {}", self.doob_over_50)?;
        writeln!(out, "doob_over_100 = {}", self.doob_over_100)?;
        out.flush()
    }
}

#[derive(Debug, Clone)]
pub struct ConvergenceStudy {
    pub eps: f64,
    pub seed: u64,
    pub records: Vec<ConvergenceRecord>,
    pub summary: StudySummary,
}

impl ConvergenceStudy {
    /// CSV with header `a1,b1,a2,b2,log_ab_plus,n_doob,n_theta,trivial`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "a1,b1,a2,b2,log_ab_plus,n_doob,n_theta,trivial")?;
        for r in &self.records {
            let [a1, b1, a2, b2] = r.params.to_array();
            writeln!(out, "{a1},{b1},{a2},{b2},{},{},{},{}", r.log_ab_plus, r.n_doob, r.n_theta, r.trivial)?;
        }
        out.flush()
    }
}

const STUDY_CHUNK: usize = 4096;

/// Terms to convergence of both series on `count` sampled tuples.
pub fn convergence_study(count: usize, eps: f64, seed: u64, workers: Workers) -> Result<ConvergenceStudy> {
    if count == 0 {
        return Err(WedgeError::InvalidArgument("study needs at least one tuple".into()));
    }
    if !(eps > 0.0) {
        return Err(WedgeError::NotPositive { what: "eps", value: eps });
    }
    let params = sample_params(count, seed);
    let evaluated = map_indexed(count, STUDY_CHUNK, workers, |i| Some(ConvergenceRecord::evaluate(params[i], eps)))?;
    let records = evaluated
        .into_iter()
        .zip(&params)
        .map(|(r, p)| {
            r.expect("every slot filled")
                .map_err(|e| WedgeError::InvalidArgument(format!("tuple {:?}: {e}", p.to_array())))
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = StudySummary::from_records(&records);
    Ok(ConvergenceStudy { eps, seed, records, summary })
}
