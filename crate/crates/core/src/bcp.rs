//! Probability that standard Brownian motion started at 0 stays between two
//! piecewise linear boundaries up to a finite horizon.
//!
//! Conditionally on its values at the knots, the path on each interval is a
//! Brownian bridge, and the chance that a bridge stays between two straight
//! segments is a wedge probability. The crossing probability is therefore
//! the expectation, over the Gaussian knot values, of a product of wedge
//! probabilities; it is estimated here by plain Monte Carlo.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Result, WedgeError};
use crate::exec::{map_indexed, Workers};
use crate::params::WedgeParams;
use crate::wedge::{wedge_prob, DEFAULT_TERMS};

/// Paths per random stream. Chunk `i` draws from ChaCha8 stream `i` of the
/// seed, so estimates do not depend on the number of workers.
pub const PATH_CHUNK: usize = 8192;

/// Lower and upper boundaries sharing one knot grid `0 = t_0 < ... < t_m`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseBoundaryPair {
    knots: Vec<f64>,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

fn check_polyline(name: &str, points: &[(f64, f64)]) -> Result<()> {
    let err = |msg: String| Err(WedgeError::Boundary(format!("{name} boundary: {msg}")));
    if points.len() < 2 {
        return err(format!("needs at least two knots, got {}", points.len()));
    }
    for (i, &(t, v)) in points.iter().enumerate() {
        if !t.is_finite() || !v.is_finite() {
            return err(format!("knot {i} ({t}, {v}) is not finite"));
        }
        if i == 0 && t != 0.0 {
            return err(format!("first knot must be at t = 0, got t = {t}"));
        }
        if i > 0 && t <= points[i - 1].0 {
            return err(format!("knot {i} (t = {t}) does not come after t = {}", points[i - 1].0));
        }
    }
    Ok(())
}

fn interpolate(points: &[(f64, f64)], t: f64) -> f64 {
    let k = points.partition_point(|&(s, _)| s < t);
    if k < points.len() && points[k].0 == t {
        return points[k].1;
    }
    let (t0, v0) = points[k - 1];
    let (t1, v1) = points[k];
    v0 + (v1 - v0) * (t - t0) / (t1 - t0)
}

impl PiecewiseBoundaryPair {
    /// Boundaries from `(t, value)` knots. Both lists start at `t = 0` and end
    /// at the same horizon; the knot sets are merged and each boundary is
    /// linearly interpolated onto the union.
    pub fn new(lower: &[(f64, f64)], upper: &[(f64, f64)]) -> Result<Self> {
        check_polyline("lower", lower)?;
        check_polyline("upper", upper)?;
        let horizon = lower[lower.len() - 1].0;
        let upper_horizon = upper[upper.len() - 1].0;
        if horizon != upper_horizon {
            return Err(WedgeError::Boundary(format!(
                "lower boundary ends at t = {horizon}, upper at t = {upper_horizon}"
            )));
        }
        let mut knots: Vec<f64> = lower.iter().chain(upper).map(|&(t, _)| t).collect();
        knots.sort_by(f64::total_cmp);
        knots.dedup();
        let lo: Vec<f64> = knots.iter().map(|&t| interpolate(lower, t)).collect();
        let up: Vec<f64> = knots.iter().map(|&t| interpolate(upper, t)).collect();
        Self::from_grid(knots, lo, up)
    }

    fn from_grid(knots: Vec<f64>, lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        for (i, ((&t, &l), &u)) in knots.iter().zip(&lower).zip(&upper).enumerate() {
            if l >= u {
                return Err(WedgeError::Boundary(format!("knot {i} (t = {t}): lower {l} is not below upper {u}")));
            }
        }
        if !(lower[0] < 0.0 && upper[0] > 0.0) {
            return Err(WedgeError::Boundary(format!(
                "start point 0 must lie strictly inside ({}, {})",
                lower[0], upper[0]
            )));
        }
        Ok(Self { knots, lower, upper })
    }

    /// Constant band `[lower, upper]` on `[0, horizon]` split into `intervals`
    /// equal pieces.
    pub fn constant_band(lower: f64, upper: f64, horizon: f64, intervals: usize) -> Result<Self> {
        Self::linear_band((lower, lower), (upper, upper), horizon, intervals)
    }

    /// Straight boundaries from `(start, end)` values on `[0, horizon]`,
    /// split into `intervals` equal pieces.
    pub fn linear_band(lower: (f64, f64), upper: (f64, f64), horizon: f64, intervals: usize) -> Result<Self> {
        if intervals == 0 || !(horizon > 0.0) || !horizon.is_finite() {
            return Err(WedgeError::Boundary(format!(
                "need a positive horizon and at least one interval, got {horizon} and {intervals}"
            )));
        }
        let m = intervals as f64;
        let knots: Vec<f64> =
            (0..=intervals).map(|i| if i == intervals { horizon } else { horizon * i as f64 / m }).collect();
        let line = |(a, b): (f64, f64)| -> Vec<f64> { (0..=intervals).map(|i| a + (b - a) * i as f64 / m).collect() };
        Self::from_grid(knots, line(lower), line(upper))
    }

    /// Same boundaries with a knot inserted at every interval midpoint.
    pub fn refined(&self) -> Self {
        let mut knots = vec![self.knots[0]];
        let mut lower = vec![self.lower[0]];
        let mut upper = vec![self.upper[0]];
        for i in 1..self.knots.len() {
            knots.extend([0.5 * (self.knots[i - 1] + self.knots[i]), self.knots[i]]);
            lower.extend([0.5 * (self.lower[i - 1] + self.lower[i]), self.lower[i]]);
            upper.extend([0.5 * (self.upper[i - 1] + self.upper[i]), self.upper[i]]);
        }
        Self { knots, lower, upper }
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn intervals(&self) -> usize {
        self.knots.len() - 1
    }

    pub fn horizon(&self) -> f64 {
        self.knots[self.knots.len() - 1]
    }
}

/// Distances from a bridge's endpoints to the two boundary segments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgeGaps {
    pub lower_start: f64,
    pub lower_end: f64,
    pub upper_start: f64,
    pub upper_end: f64,
}

impl BridgeGaps {
    /// Gaps for a bridge from `x_start` to `x_end` between the segments
    /// `lower = (L(t_i), L(t_i+1))` and `upper = (U(t_i), U(t_i+1))`.
    pub fn new(x_start: f64, x_end: f64, lower: (f64, f64), upper: (f64, f64)) -> Self {
        Self {
            lower_start: x_start - lower.0,
            lower_end: x_end - lower.1,
            upper_start: upper.0 - x_start,
            upper_end: upper.1 - x_end,
        }
    }

    fn all_positive(&self) -> bool {
        self.lower_start > 0.0 && self.lower_end > 0.0 && self.upper_start > 0.0 && self.upper_end > 0.0
    }
}

/// Probability that a Brownian bridge of duration `dt` stays between two
/// straight segments, given the gaps at both ends.
///
/// Centering the bridge, scaling it to unit length and applying the time
/// change `B_r = (1 - r) W_{r/(1-r)}` turns the band into the wedge with
/// slopes equal to the end gaps and intercepts equal to the start gaps,
/// both divided by `sqrt(dt)`. Any non-positive gap gives 0.
pub fn bridge_band_prob(dt: f64, gaps: &BridgeGaps) -> Result<f64> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(WedgeError::NotPositive { what: "bridge duration", value: dt });
    }
    let scale = dt.sqrt().recip();
    let params = WedgeParams::new(
        gaps.lower_end * scale,
        gaps.lower_start * scale,
        gaps.upper_end * scale,
        gaps.upper_start * scale,
    )?;
    if !gaps.all_positive() {
        return Ok(0.0);
    }
    Ok(wedge_prob(&params, DEFAULT_TERMS)?.value)
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcpEstimate {
    pub estimate: f64,
    /// Sample standard deviation of the per-path products over `sqrt(samples)`.
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
struct Moments {
    count: f64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1.0;
        let delta = x - self.mean;
        self.mean += delta / self.count;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(a: Moments, b: Moments) -> Moments {
        if a.count == 0.0 {
            return b;
        }
        if b.count == 0.0 {
            return a;
        }
        let count = a.count + b.count;
        let delta = b.mean - a.mean;
        Moments {
            count,
            mean: a.mean + delta * (b.count / count),
            m2: a.m2 + b.m2 + delta * delta * (a.count * b.count / count),
        }
    }

    /// Fixed pairwise reduction order by index.
    fn reduce(parts: &[Moments]) -> Moments {
        match parts.len() {
            0 => Moments::default(),
            1 => parts[0],
            n => Moments::merge(Self::reduce(&parts[..n / 2]), Self::reduce(&parts[n / 2..])),
        }
    }
}

struct PathSimulator<'a> {
    bounds: &'a PiecewiseBoundaryPair,
    sqrt_dt: Vec<f64>,
    inv_sqrt_dt: Vec<f64>,
}

impl<'a> PathSimulator<'a> {
    fn new(bounds: &'a PiecewiseBoundaryPair) -> Self {
        let sqrt_dt: Vec<f64> = bounds.knots.windows(2).map(|w| (w[1] - w[0]).sqrt()).collect();
        let inv_sqrt_dt = sqrt_dt.iter().map(|s| s.recip()).collect();
        Self { bounds, sqrt_dt, inv_sqrt_dt }
    }

    /// Calls `sink` with the product for each path of chunk `chunk`. Every
    /// path consumes exactly one normal draw per interval.
    fn run_chunk(&self, seed: u64, chunk: usize, paths: usize, mut sink: impl FnMut(f64)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(chunk as u64);
        let (lower, upper) = (&self.bounds.lower, &self.bounds.upper);
        for _ in 0..paths {
            let mut x = 0.0;
            let mut product = 1.0;
            for i in 0..self.sqrt_dt.len() {
                let z: f64 = StandardNormal.sample(&mut rng);
                let next = x + self.sqrt_dt[i] * z;
                if product > 0.0 {
                    if next <= lower[i + 1] || next >= upper[i + 1] {
                        product = 0.0;
                    } else {
                        let s = self.inv_sqrt_dt[i];
                        let params = WedgeParams::new(
                            (next - lower[i + 1]) * s,
                            (x - lower[i]) * s,
                            (upper[i + 1] - next) * s,
                            (upper[i] - x) * s,
                        )
                        .expect("finite gaps");
                        product *= wedge_prob(&params, DEFAULT_TERMS).expect("default term count").value;
                    }
                }
                x = next;
            }
            sink(product);
        }
    }
}

fn chunk_sizes(samples: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..samples.div_ceil(PATH_CHUNK)).map(move |c| (c, PATH_CHUNK.min(samples - c * PATH_CHUNK)))
}

fn check_samples(samples: usize) -> Result<()> {
    if samples == 0 {
        Err(WedgeError::InvalidArgument("need at least one sample path".into()))
    } else {
        Ok(())
    }
}

/// Estimates `P[L(t) < W_t < U(t) for all t in [0, t_m]]`.
///
/// Knot values are drawn as Gaussian increments; a path whose knot value
/// touches or leaves the band contributes 0, otherwise the product of the
/// bridge probabilities over all intervals. Bit-reproducible for a given
/// `(seed, samples)` whatever the worker count.
pub fn bcp_montecarlo(
    bounds: &PiecewiseBoundaryPair,
    samples: usize,
    seed: u64,
    workers: Workers,
) -> Result<BcpEstimate> {
    check_samples(samples)?;
    let sim = PathSimulator::new(bounds);
    let chunks: Vec<(usize, usize)> = chunk_sizes(samples).collect();
    let parts = map_indexed(chunks.len(), 1, workers, |i| {
        let (chunk, paths) = chunks[i];
        let mut m = Moments::default();
        sim.run_chunk(seed, chunk, paths, |x| m.push(x));
        m
    })?;
    let total = Moments::reduce(&parts);
    let n = samples as f64;
    let variance = if samples > 1 { (total.m2 / (n - 1.0)).max(0.0) } else { 0.0 };
    Ok(BcpEstimate { estimate: total.mean.clamp(0.0, 1.0), std_error: (variance / n).sqrt(), samples, seed })
}

/// Per-path products in path order, from the same random streams as
/// [`bcp_montecarlo`].
pub fn path_products(bounds: &PiecewiseBoundaryPair, samples: usize, seed: u64) -> Result<Vec<f64>> {
    check_samples(samples)?;
    let sim = PathSimulator::new(bounds);
    let mut out = Vec::with_capacity(samples);
    for (chunk, paths) in chunk_sizes(samples) {
        sim.run_chunk(seed, chunk, paths, |x| out.push(x));
    }
    Ok(out)
}
