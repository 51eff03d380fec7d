//! Brute-force reference values for the Monte Carlo boundary crossing tests.
//!
//! Paths are simulated on a fine grid of step 1e-4. Between grid points the
//! path is a Brownian bridge, whose chance of touching a straight boundary is
//! `exp(-2 g0 g1 / h)` for end gaps `g0, g1`; every path is weighted by the
//! product of these survival factors for both boundaries. Nothing here uses
//! the wedge series.
//!
//! Run with `cargo run --release --example bcp_oracle`; the printed values
//! are frozen into the acceptance tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

const STEPS: usize = 10_000;
const PATHS: usize = 1_000_000;

fn survive(g0: f64, g1: f64, h: f64) -> f64 {
    if g0 <= 0.0 || g1 <= 0.0 {
        return 0.0;
    }
    let e = 2.0 * g0 * g1 / h;
    if e > 45.0 {
        1.0
    } else {
        1.0 - (-e).exp()
    }
}

/// Band `[lower, upper]` on `[0, 1]`. With `bridge_end = Some(x)` the path is
/// pinned to `x` at `t = 1`, otherwise it is free Brownian motion from 0.
fn simulate(lower: f64, upper: f64, bridge_end: Option<f64>, seed: u64) -> (f64, f64) {
    let h = 1.0 / STEPS as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut sum, mut sum_sq) = (0.0f64, 0.0f64);
    for _ in 0..PATHS {
        let mut x = 0.0f64;
        let mut w = 1.0f64;
        for k in 0..STEPS {
            let z: f64 = StandardNormal.sample(&mut rng);
            let next = match bridge_end {
                None => x + h.sqrt() * z,
                Some(end) => {
                    let left = (STEPS - k) as f64;
                    x + (end - x) / left + (h * (left - 1.0) / left).sqrt() * z
                }
            };
            w *= survive(x - lower, next - lower, h) * survive(upper - x, upper - next, h);
            if w == 0.0 {
                break;
            }
            x = next;
        }
        sum += w;
        sum_sq += w * w;
    }
    let n = PATHS as f64;
    let mean = sum / n;
    let var = (sum_sq - n * mean * mean) / (n - 1.0);
    (mean, (var / n).sqrt())
}

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    if which == "all" || which == "band" {
        let (m, se) = simulate(-1.0, 1.0, None, 20_160_001);
        println!("free motion, band [-1, 1] on [0, 1]: mean = {m:.17e}, se = {se:.6e}");
    }
    if which == "all" || which == "bridge" {
        let (m, se) = simulate(-1.0, 1.0, Some(0.5), 20_160_002);
        println!("bridge 0 -> 0.5, band [-1, 1] on [0, 1]: mean = {m:.17e}, se = {se:.6e}");
    }
}
