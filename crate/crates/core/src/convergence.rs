//! Number of terms each series needs to reach a target precision.

use crate::dd::Dd;
use crate::error::{Result, WedgeError};
use crate::params::WedgeParams;
use crate::series::Kernel;

/// Partial sum standing in for the infinite series.
pub const REFERENCE_TERMS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    Doob,
    ThetaDual,
}

/// `K_0, K_1, ..., K_max` for the chosen series. Requires positive params.
pub fn partial_sums(params: &WedgeParams, series: Series, max_terms: usize) -> Result<Vec<f64>> {
    params.require_positive()?;
    Ok(kernel_partial_sums(&Kernel::new(params), series, max_terms))
}

pub(crate) fn kernel_partial_sums(kernel: &Kernel, series: Series, max_terms: usize) -> Vec<f64> {
    let mut sums = Vec::with_capacity(max_terms + 1);
    match series {
        Series::Doob => {
            let mut acc = 0.0;
            sums.push(1.0);
            for n in 1..=max_terms as u32 {
                let (t, more) = kernel.doob_term(n);
                acc += t;
                sums.push(1.0 - acc);
                if !more {
                    break;
                }
            }
        }
        Series::ThetaDual => {
            let mut terms = kernel.theta_terms();
            let mut acc = Dd::ZERO;
            sums.push(0.0);
            for _ in 0..max_terms {
                let (t, more) = terms.next_pair();
                acc = acc + t;
                sums.push(acc.to_f64());
                if !more {
                    break;
                }
            }
        }
    }
    // every later term is exactly zero
    let last = *sums.last().expect("non-empty");
    sums.resize(max_terms + 1, last);
    sums
}

pub(crate) fn first_within(sums: &[f64], eps: f64) -> Option<usize> {
    let reference = *sums.last()?;
    sums.iter().position(|&s| (reference - s).abs() < eps)
}

/// Smallest `N >= 0` with `|K_ref - K_N| < eps`, where `K_ref` is the
/// partial sum at [`REFERENCE_TERMS`].
pub fn terms_to_convergence(params: &WedgeParams, eps: f64, series: Series) -> Result<usize> {
    if !(eps > 0.0) {
        return Err(WedgeError::NotPositive { what: "eps", value: eps });
    }
    let sums = partial_sums(params, series, REFERENCE_TERMS)?;
    first_within(&sums, eps).ok_or(WedgeError::NoConvergence { eps, max_terms: REFERENCE_TERMS })
}
