//! Closed-form special cases of the wedge probability.
//!
//! Each evaluates the same exponents as [`wedge_prob`](crate::wedge_prob)
//! but skips the terms that vanish or repeat, so results agree with the
//! general routine to the last bit.

use crate::params::WedgeParams;
use crate::series::Kernel;
use crate::wedge::{evaluate_kernel, DEFAULT_TERMS};

fn special(params: Result<WedgeParams, crate::WedgeError>, eval: impl FnOnce(&Kernel) -> f64) -> f64 {
    match params {
        Ok(p) if p.all_positive() => eval(&Kernel::new(&p)),
        Ok(_) => 0.0,
        Err(_) => f64::NAN,
    }
}

/// Distribution function of the limiting Kolmogorov-Smirnov statistic,
/// `P[sup |B_t| <= a]` for a standard Brownian bridge.
///
/// Returns 0 for `a <= 0` and 1 for `a = +inf`.
pub fn kolmogorov_cdf(a: f64) -> f64 {
    if a == f64::INFINITY {
        return 1.0;
    }
    special(WedgeParams::symmetric(a), |k| {
        evaluate_kernel(k, DEFAULT_TERMS, |n| k.doob_term_paired(n)).map_or(f64::NAN, |r| r.value)
    })
}

/// Wedge probability with equal slopes `a1 = a2 = a`.
pub fn wedge_equal_slopes(a: f64, b1: f64, b2: f64) -> f64 {
    special(WedgeParams::new(a, b1, a, b2), |k| {
        evaluate_kernel(k, DEFAULT_TERMS, |n| k.doob_term(n)).map_or(f64::NAN, |r| r.value)
    })
}

/// Wedge probability with slopes equal to intercepts, `k(a1, a1; a2, a2)`:
/// a standard Brownian bridge staying in the band `[-a1, a2]`.
pub fn wedge_equal_all(a1: f64, a2: f64) -> f64 {
    special(WedgeParams::new(a1, a1, a2, a2), |k| {
        evaluate_kernel(k, DEFAULT_TERMS, |n| k.doob_term_cross_equal(n)).map_or(f64::NAN, |r| r.value)
    })
}
