//! Threshold-selected evaluation of the wedge probability.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{bound_r1, bound_r2};
use crate::error::{Result, WedgeError};
use crate::params::WedgeParams;
use crate::series::{sum_terms, Kernel};
use crate::threshold::threshold;

/// Term count used when the caller does not choose one; `eps_3` is already
/// below double precision.
pub const DEFAULT_TERMS: usize = 3;

/// A result this close to 0 or 1 is returned without summing.
pub const TRIVIAL_EPS: f64 = 1e-16;

/// How a [`WedgeResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    Doob,
    ThetaDual,
    TrivialZero,
    TrivialOne,
}

impl Formula {
    pub fn as_str(self) -> &'static str {
        match self {
            Formula::Doob => "doob",
            Formula::ThetaDual => "theta_dual",
            Formula::TrivialZero => "trivial_zero",
            Formula::TrivialOne => "trivial_one",
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Formula::Doob => 1,
            Formula::ThetaDual => 2,
            Formula::TrivialZero => 0,
            Formula::TrivialOne => 3,
        }
    }

    pub fn is_trivial(self) -> bool {
        matches!(self, Formula::TrivialZero | Formula::TrivialOne)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Formula {
    type Err = WedgeError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "doob" => Ok(Formula::Doob),
            "theta_dual" => Ok(Formula::ThetaDual),
            "trivial_zero" => Ok(Formula::TrivialZero),
            "trivial_one" => Ok(Formula::TrivialOne),
            other => Err(WedgeError::InvalidArgument(format!("unknown formula `{other}`"))),
        }
    }
}

/// A wedge probability and how it was computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WedgeResult {
    pub value: f64,
    pub formula: Formula,
    /// Number of series terms summed, 0 for the trivial cases.
    pub terms: u32,
    /// Remainder bound of the summed series at `terms`, 0 for trivial cases.
    pub remainder_bound: f64,
}

impl WedgeResult {
    pub(crate) const ZERO: WedgeResult =
        WedgeResult { value: 0.0, formula: Formula::TrivialZero, terms: 0, remainder_bound: 0.0 };
    pub(crate) const ONE: WedgeResult =
        WedgeResult { value: 1.0, formula: Formula::TrivialOne, terms: 0, remainder_bound: 0.0 };
}

impl Default for WedgeResult {
    fn default() -> Self {
        Self::ZERO
    }
}

/// Which of the trivial short-circuits applies, if any.
pub(crate) fn trivial_outcome(kernel: &Kernel) -> Option<WedgeResult> {
    let ln_eps = TRIVIAL_EPS.ln();
    if kernel.ln_upper_bound_complement() < ln_eps {
        Some(WedgeResult::ONE)
    } else if kernel.ln_upper_bound_value() < ln_eps {
        Some(WedgeResult::ZERO)
    } else {
        None
    }
}

/// Shared evaluation path. Specialized callers pass a Doob term function
/// that drops terms known to be zero or duplicated, which keeps their
/// results bit-identical to the general case.
#[inline]
pub(crate) fn evaluate_kernel(
    kernel: &Kernel,
    n_terms: usize,
    doob_term: impl FnMut(u32) -> (f64, bool),
) -> Result<WedgeResult> {
    if let Some(trivial) = trivial_outcome(kernel) {
        return Ok(trivial);
    }
    let tau = threshold(n_terms)?.tau;
    let x = kernel.ab_plus;
    let (raw, formula, remainder_bound) = if x >= tau {
        (1.0 - sum_terms(n_terms, doob_term), Formula::Doob, bound_r1(x, n_terms))
    } else {
        (kernel.theta_sum(n_terms), Formula::ThetaDual, bound_r2(x, n_terms))
    };
    if raw.is_nan() {
        return Err(WedgeError::InvalidArgument(format!("series evaluation produced NaN at a+b+ = {x:e}")));
    }
    let value = raw.clamp(0.0, 1.0);
    debug_assert!((value - raw).abs() <= 1e-15, "clamped {raw:e} beyond rounding level");
    Ok(WedgeResult { value, formula, terms: n_terms as u32, remainder_bound })
}

/// Probability that standard Brownian motion stays in
/// `[-a1 t - b1, a2 t + b2]` for all `t >= 0`.
///
/// Non-positive parameters give probability 0. Otherwise Doob's series is
/// used when `a+b+ >= tau_N` and the theta-dual series below, which
/// guarantees an error of at most `eps_N`.
pub fn wedge_prob(params: &WedgeParams, n_terms: usize) -> Result<WedgeResult> {
    crate::threshold::check_terms(n_terms)?;
    if !params.all_positive() {
        return Ok(WedgeResult::ZERO);
    }
    let kernel = Kernel::new(params);
    evaluate_kernel(&kernel, n_terms, |n| kernel.doob_term(n))
}

/// [`wedge_prob`] with [`DEFAULT_TERMS`], returning only the probability.
pub fn wedge(a1: f64, b1: f64, a2: f64, b2: f64) -> Result<f64> {
    Ok(wedge_prob(&WedgeParams::new(a1, b1, a2, b2)?, DEFAULT_TERMS)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prob(a1: f64, b1: f64, a2: f64, b2: f64) -> WedgeResult {
        wedge_prob(&WedgeParams::new(a1, b1, a2, b2).unwrap(), DEFAULT_TERMS).unwrap()
    }

    #[test]
    fn wide_band_is_one() {
        let r = prob(100.0, 100.0, 100.0, 100.0);
        assert_eq!(r.value, 1.0);
        assert_eq!(r.formula, Formula::TrivialOne);
        assert_eq!(r.terms, 0);
    }

    #[test]
    fn kolmogorov_at_one() {
        let r = prob(1.0, 1.0, 1.0, 1.0);
        assert!((r.value - 0.730_000_328_322_645_5).abs() < 2e-16);
        assert_eq!(r.formula, Formula::ThetaDual);
        assert_eq!(r.terms, 3);
        assert!(r.remainder_bound <= threshold(3).unwrap().epsilon);
    }

    #[test]
    fn symmetries_are_exact() {
        let base = prob(1.0, 2.0, 3.0, 4.0);
        assert_eq!(base, prob(3.0, 4.0, 1.0, 2.0));
        assert_eq!(base, prob(2.0, 1.0, 4.0, 3.0));
        assert!((base.value - 0.981_684_361_073_514_5).abs() < 2e-16);
    }

    #[test]
    fn non_positive_is_zero() {
        for params in [(1.0, -1.0, 1.0, 1.0), (0.0, 1.0, 1.0, 1.0), (1.0, 1.0, -3.0, 2.0)] {
            let r = prob(params.0, params.1, params.2, params.3);
            assert_eq!(r, WedgeResult::ZERO);
        }
    }

    #[test]
    fn single_boundary_limit() {
        // an upper boundary far away leaves 1 - e^{-2 a1 b1}
        let r = prob(1.0, 1.0, 20.0, 20.0);
        assert!((r.value - (1.0 - (-2.0f64).exp())).abs() < 1e-15);
        let r = prob(1.0, 1.0, 1.0, 50.0);
        assert!((r.value - (1.0 - (-2.0f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn narrow_band_is_trivial_zero() {
        let r = prob(0.01, 0.01, 0.01, 0.01);
        assert_eq!(r, WedgeResult::ZERO);
    }

    #[test]
    fn rejects_bad_term_count() {
        let params = WedgeParams::new(1.0, 1.0, 1.0, 1.0).unwrap();
        assert!(wedge_prob(&params, 1).is_err());
        assert!(wedge_prob(&params, 9).is_err());
        for n in 2..=8 {
            assert!(wedge_prob(&params, n).is_ok());
        }
    }

    #[test]
    fn formula_names_round_trip() {
        for f in [Formula::Doob, Formula::ThetaDual, Formula::TrivialZero, Formula::TrivialOne] {
            assert_eq!(f.as_str().parse::<Formula>().unwrap(), f);
        }
        assert!("theta".parse::<Formula>().is_err());
    }

    #[test]
    fn nan_rejected_at_construction() {
        assert!(wedge(f64::NAN, 1.0, 1.0, 1.0).is_err());
    }
}
