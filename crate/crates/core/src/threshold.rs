//! Crossing points of the two remainder bounds.
//!
//! For `a+b+ >= tau_N` Doob's series with N terms is within `eps_N` of the
//! limit, below it the theta-dual series is. `eps_N` is the common value of
//! both bounds at the crossing.

use std::sync::OnceLock;

use crate::bounds::{ln_bound_r1, ln_bound_r2};
use crate::error::{Result, WedgeError};

pub const MIN_TERMS: usize = 2;
pub const MAX_TERMS: usize = 8;

const BRACKET: (f64, f64) = (1e-6, 16.0);

/// Published `(N, tau_N, eps_N)` rows, used to validate the solver at startup.
pub const PUBLISHED: [(usize, f64, f64); 7] = [
    (2, 1.380, 2.9e-6),
    (3, 1.136, 1.8e-17),
    (4, 1.030, 5.1e-34),
    (5, 0.973, 5.6e-56),
    (6, 0.937, 2.3e-83),
    (7, 0.912, 3.5e-116),
    (8, 0.895, 1.9e-154),
];
pub const PUBLISHED_TAU_TOL: f64 = 1e-3;
pub const PUBLISHED_EPS_REL_TOL: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdEntry {
    pub n_terms: usize,
    pub tau: f64,
    pub epsilon: f64,
    /// `ln(epsilon)`, exact even where `epsilon` would underflow.
    pub ln_epsilon: f64,
}

pub(crate) fn check_terms(n_terms: usize) -> Result<()> {
    if (MIN_TERMS..=MAX_TERMS).contains(&n_terms) {
        Ok(())
    } else {
        Err(WedgeError::TermsOutOfRange { got: n_terms, min: MIN_TERMS, max: MAX_TERMS })
    }
}

/// Bisection on `ln R1 - ln R2`, which is strictly decreasing in `a+b+`.
pub fn solve_threshold(n_terms: usize) -> Result<ThresholdEntry> {
    check_terms(n_terms)?;
    let gap = |x: f64| ln_bound_r1(x, n_terms) - ln_bound_r2(x, n_terms);
    let (mut lo, mut hi) = BRACKET;
    debug_assert!(gap(lo) > 0.0 && gap(hi) < 0.0);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let g = gap(mid);
        if g == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if g > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let tau = if gap(lo).abs() <= gap(hi).abs() { lo } else { hi };
    let ln_epsilon = ln_bound_r1(tau, n_terms);
    Ok(ThresholdEntry { n_terms, tau, epsilon: ln_epsilon.exp(), ln_epsilon })
}

/// Thresholds for `N = 2..=8`, solved once and checked against the
/// published table.
///
/// # Panics
///
/// If a solved row disagrees with the published one, which would mean a
/// bound formula is wrong.
pub fn thresholds() -> &'static [ThresholdEntry] {
    static TABLE: OnceLock<Vec<ThresholdEntry>> = OnceLock::new();
    TABLE.get_or_init(|| {
        PUBLISHED
            .iter()
            .map(|&(n, tau, eps)| {
                let entry = solve_threshold(n).expect("supported term count");
                let eps_rel = (entry.ln_epsilon - eps.ln()).exp_m1().abs();
                assert!(
                    (entry.tau - tau).abs() <= PUBLISHED_TAU_TOL && eps_rel <= PUBLISHED_EPS_REL_TOL,
                    "threshold for N={n} solved to ({}, {:e}), published ({tau}, {eps:e})",
                    entry.tau,
                    entry.epsilon
                );
                entry
            })
            .collect()
    })
}

/// Threshold row for a supported term count.
pub fn threshold(n_terms: usize) -> Result<&'static ThresholdEntry> {
    check_terms(n_terms)?;
    Ok(&thresholds()[n_terms - MIN_TERMS])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solved_bounds_coincide() {
        for n in MIN_TERMS..=MAX_TERMS {
            let e = solve_threshold(n).unwrap();
            let diff = ln_bound_r1(e.tau, n) - ln_bound_r2(e.tau, n);
            assert!(diff.abs() < 1e-12, "N={n}: {diff:e}");
        }
    }

    #[test]
    fn three_terms() {
        let e = solve_threshold(3).unwrap();
        assert!((e.tau - 1.136).abs() <= 1e-3);
        assert!((e.epsilon / 1.8e-17 - 1.0).abs() <= 0.05);
    }

    #[test]
    fn two_and_eight_terms() {
        let e = solve_threshold(2).unwrap();
        assert!((e.tau - 1.380).abs() <= 1e-3);
        assert!((e.epsilon / 2.9e-6 - 1.0).abs() <= 0.05);
        let e = solve_threshold(8).unwrap();
        assert!((e.tau - 0.895).abs() <= 1e-3);
        assert!((e.epsilon / 1.9e-154 - 1.0).abs() <= 0.05);
    }

    #[test]
    fn strictly_decreasing() {
        let t = thresholds();
        assert_eq!(t.len(), 7);
        for w in t.windows(2) {
            assert!(w[1].tau < w[0].tau);
            assert!(w[1].epsilon < w[0].epsilon);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(solve_threshold(1), Err(WedgeError::TermsOutOfRange { got: 1, .. })));
        assert!(solve_threshold(9).is_err());
        assert!(threshold(0).is_err());
    }
}
