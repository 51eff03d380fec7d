//! Browser bindings for the wedge probability library.
//!
//! Build with `wasm-pack build --target web crates/demo` (or `cargo build
//! --target wasm32-unknown-unknown` followed by `wasm-bindgen --target web`)
//! and serve `www/` next to the generated `pkg/` directory.

use wasm_bindgen::prelude::*;

use wedge::bcp::{bcp_montecarlo, PiecewiseBoundaryPair};
use wedge::{partial_sums, threshold, thresholds, wedge_prob, Series, WedgeParams, Workers, REFERENCE_TERMS};

/// Largest Monte Carlo run accepted from the page.
pub const MAX_SAMPLES: usize = 2_000_000;

/// `log10` error reported when a partial sum equals the reference exactly.
pub const EXACT_LOG10: f64 = -20.0;

/// One wedge evaluation with its provenance.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    value: f64,
    formula: String,
    terms: u32,
    remainder_bound: f64,
    ab_plus: f64,
    tau: f64,
}

#[wasm_bindgen]
impl Evaluation {
    #[wasm_bindgen(getter)]
    pub fn value(&self) -> f64 {
        self.value
    }
    #[wasm_bindgen(getter)]
    pub fn formula(&self) -> String {
        self.formula.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn terms(&self) -> u32 {
        self.terms
    }
    #[wasm_bindgen(getter)]
    pub fn remainder_bound(&self) -> f64 {
        self.remainder_bound
    }
    #[wasm_bindgen(getter)]
    pub fn ab_plus(&self) -> f64 {
        self.ab_plus
    }
    /// Threshold on `a+ b+` separating the two series at this term count.
    #[wasm_bindgen(getter)]
    pub fn tau(&self) -> f64 {
        self.tau
    }
}

pub fn evaluate_params(a1: f64, b1: f64, a2: f64, b2: f64, terms: usize) -> Result<Evaluation, String> {
    let params = WedgeParams::new(a1, b1, a2, b2).map_err(|e| e.to_string())?;
    let r = wedge_prob(&params, terms).map_err(|e| e.to_string())?;
    Ok(Evaluation {
        value: r.value,
        formula: r.formula.to_string(),
        terms: r.terms,
        remainder_bound: r.remainder_bound,
        ab_plus: params.derive().ab_plus,
        tau: threshold(terms).map_err(|e| e.to_string())?.tau,
    })
}

/// `log10 |K_N - K_ref|` for `N = 0..=max_terms`, one vector per series.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Convergence {
    doob: Vec<f64>,
    theta: Vec<f64>,
}

#[wasm_bindgen]
impl Convergence {
    #[wasm_bindgen(getter)]
    pub fn doob(&self) -> Vec<f64> {
        self.doob.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn theta(&self) -> Vec<f64> {
        self.theta.clone()
    }
}

pub fn convergence_profile(a1: f64, b1: f64, a2: f64, b2: f64, max_terms: usize) -> Result<Convergence, String> {
    let params = WedgeParams::new(a1, b1, a2, b2).map_err(|e| e.to_string())?;
    let profile = |series| -> Result<Vec<f64>, String> {
        let sums = partial_sums(&params, series, REFERENCE_TERMS).map_err(|e| e.to_string())?;
        let reference = sums[REFERENCE_TERMS];
        Ok(sums[..=max_terms.min(REFERENCE_TERMS)]
            .iter()
            .map(|s| {
                let err = (s - reference).abs();
                if err > 0.0 {
                    err.log10().max(EXACT_LOG10)
                } else {
                    EXACT_LOG10
                }
            })
            .collect())
    };
    Ok(Convergence { doob: profile(Series::Doob)?, theta: profile(Series::ThetaDual)? })
}

#[wasm_bindgen]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub estimate: f64,
    pub std_error: f64,
}

/// Monte Carlo probability of staying between two piecewise-linear
/// boundaries given by their values at evenly spaced knots on `[0, horizon]`.
pub fn crossing_estimate(
    lower: &[f64],
    upper: &[f64],
    horizon: f64,
    samples: usize,
    seed: u64,
) -> Result<Crossing, String> {
    if lower.len() != upper.len() {
        return Err(format!("{} lower values but {} upper values", lower.len(), upper.len()));
    }
    if lower.len() < 2 {
        return Err("at least two knots are needed".into());
    }
    if samples == 0 || samples > MAX_SAMPLES {
        return Err(format!("samples must be between 1 and {MAX_SAMPLES}"));
    }
    let step = horizon / (lower.len() - 1) as f64;
    let knots = |v: &[f64]| v.iter().enumerate().map(|(i, &x)| (i as f64 * step, x)).collect::<Vec<_>>();
    let bounds = PiecewiseBoundaryPair::new(&knots(lower), &knots(upper)).map_err(|e| e.to_string())?;
    let est =
        bcp_montecarlo(&bounds, samples, seed, Workers::Fixed(1.try_into().unwrap())).map_err(|e| e.to_string())?;
    Ok(Crossing { estimate: est.estimate, std_error: est.std_error })
}

/// `[N, tau_N, log10 eps_N]` for each supported term count, flattened.
pub fn threshold_rows() -> Vec<f64> {
    thresholds().iter().flat_map(|e| [e.n_terms as f64, e.tau, e.ln_epsilon / std::f64::consts::LN_10]).collect()
}

#[wasm_bindgen]
pub fn evaluate(a1: f64, b1: f64, a2: f64, b2: f64, terms: usize) -> Result<Evaluation, JsError> {
    evaluate_params(a1, b1, a2, b2, terms).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn convergence(a1: f64, b1: f64, a2: f64, b2: f64, max_terms: usize) -> Result<Convergence, JsError> {
    convergence_profile(a1, b1, a2, b2, max_terms).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn crossing(lower: &[f64], upper: &[f64], horizon: f64, samples: usize, seed: u64) -> Result<Crossing, JsError> {
    crossing_estimate(lower, upper, horizon, samples, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = thresholdTable)]
pub fn threshold_table() -> Vec<f64> {
    threshold_rows()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_carries_provenance() {
        let e = evaluate_params(1.0, 1.0, 1.0, 1.0, 3).unwrap();
        assert!((e.value - 0.730_000_328_322_645_5).abs() < 1e-16);
        assert_eq!(e.formula, "theta_dual");
        assert_eq!(e.terms, 3);
        assert_eq!(e.ab_plus, 1.0);
        assert!(e.ab_plus < e.tau);
        assert_eq!(evaluate_params(1.0, 2.0, 3.0, 4.0, 3).unwrap().formula, "doob");
        assert_eq!(evaluate_params(1.0, -1.0, 1.0, 1.0, 3).unwrap().formula, "trivial_zero");
        assert!(evaluate_params(1.0, 1.0, 1.0, 1.0, 9).is_err());
        assert!(evaluate_params(f64::NAN, 1.0, 1.0, 1.0, 3).is_err());
    }

    #[test]
    fn convergence_profiles() {
        let c = convergence_profile(0.2, 0.3, 0.1, 0.4, 10).unwrap();
        assert_eq!(c.doob.len(), 11);
        assert_eq!(c.theta.len(), 11);
        // small a+b+: the theta-dual series is exact after one term
        assert_eq!(c.theta[2], EXACT_LOG10);
        assert!(c.doob[2] > -10.0);
        let c = convergence_profile(3.0, 3.0, 3.0, 3.0, 4).unwrap();
        assert_eq!(c.doob[1], EXACT_LOG10);
        assert!(c.theta[1] > -3.0);
    }

    #[test]
    fn crossing_of_constant_band() {
        // (4/pi) sum (-1)^k/(2k+1) exp(-(2k+1)^2 pi^2 / 8)
        let exact = 0.370_777_429_799_523_9;
        let c = crossing_estimate(&[-1.0; 5], &[1.0; 5], 1.0, 50_000, 3).unwrap();
        assert!((c.estimate - exact).abs() < 4.0 * c.std_error, "{c:?}");
        assert!(crossing_estimate(&[-1.0; 3], &[1.0; 2], 1.0, 10, 1).is_err());
        assert!(crossing_estimate(&[1.0; 2], &[2.0; 2], 1.0, 10, 1).is_err());
        assert!(crossing_estimate(&[-1.0; 2], &[1.0; 2], 1.0, 0, 1).is_err());
    }

    #[test]
    fn threshold_rows_flattened() {
        let rows = threshold_rows();
        assert_eq!(rows.len(), 21);
        assert_eq!(rows[3], 3.0);
        assert!((rows[4] - 1.136).abs() < 1e-3);
        assert!((rows[5] - 1.8e-17f64.log10()).abs() < 0.02);
    }
}
