//! Wedge probabilities: the probability that a standard Brownian motion
//! stays between the lines `-a1 t - b1` and `a2 t + b2` for all `t >= 0`.
//!
//! Two series converge to the same value. Doob's exponential series is fast
//! when `a+ b+ = (a1 + a2)(b1 + b2) / 4` is large; a theta-dual series,
//! obtained by Poisson summation, is fast when it is small. Choosing between
//! them with the thresholds in [`thresholds`] bounds the truncation error by
//! `eps_N` uniformly; with the default three terms `eps_3 ~ 1.8e-17`.
//!
//! ```
//! use wedge::{wedge_prob, WedgeParams, Formula};
//!
//! let params = WedgeParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
//! let r = wedge_prob(&params, 3).unwrap();
//! assert!((r.value - 0.7300003283226455).abs() < 1e-15);
//! assert_eq!(r.formula, Formula::ThetaDual);
//! ```
//!
//! On top of the scalar kernel the crate provides batch evaluation over
//! parameter columns ([`batch`]), a Monte Carlo solver for two piecewise
//! linear boundaries on a finite horizon ([`bcp`]) and the convergence study
//! that motivates the threshold rule ([`bench`]).

pub mod batch;
pub mod bcp;
pub mod bench;
mod bounds;
mod convergence;
mod dd;
mod error;
mod exec;
mod params;
mod series;
mod special;
mod threshold;
mod wedge;

pub use bounds::{bound_r1, bound_r2, ln_bound_r1, ln_bound_r2};
pub use convergence::{partial_sums, terms_to_convergence, Series, REFERENCE_TERMS};
pub use error::{Result, WedgeError};
pub use exec::{Workers, WORKERS_ENV};
pub use params::{derive, DerivedParams, WedgeParams};
pub use series::{k1_partial, k2_partial};
pub use special::{kolmogorov_cdf, wedge_equal_all, wedge_equal_slopes};
pub use threshold::{solve_threshold, threshold, thresholds, ThresholdEntry, MAX_TERMS, MIN_TERMS, PUBLISHED};
pub use wedge::{wedge, wedge_prob, Formula, WedgeResult, DEFAULT_TERMS, TRIVIAL_EPS};
