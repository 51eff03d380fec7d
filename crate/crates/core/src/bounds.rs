//! Remainder bounds for the two partial sums.
//!
//! Both bounds come from `sum_{n>N} e^{-u n^2} <= e^{-u N^2} / (2uN)`.
//! They are assembled in log space: the `e^{2 a+ b+}` factor of the
//! theta-dual bound overflows long before the product does.

use std::f64::consts::PI;

/// Log of the bound on `|K_{1,inf} - K_{1,N}|`:
/// `e^{-8 a+b+ (N-1)^2} / (4 a+b+ (N-1))`.
///
/// # Panics
///
/// If `n_terms < 2` or `ab_plus` is not positive.
pub fn ln_bound_r1(ab_plus: f64, n_terms: usize) -> f64 {
    assert!(n_terms >= 2, "Doob remainder bound needs N >= 2, got {n_terms}");
    assert!(ab_plus > 0.0, "a+b+ must be positive, got {ab_plus}");
    let m = (n_terms - 1) as f64;
    -8.0 * ab_plus * m * m - (4.0 * ab_plus * m).ln()
}

/// Log of the bound on `|K_{2,inf} - K_{2,N}|`:
/// `(2/pi)^{3/2} sqrt(a+b+) / N * e^{2 a+b+} e^{-pi^2 N^2 / (2 a+b+)}`.
///
/// # Panics
///
/// If `n_terms < 1` or `ab_plus` is not positive.
pub fn ln_bound_r2(ab_plus: f64, n_terms: usize) -> f64 {
    assert!(n_terms >= 1, "theta-dual remainder bound needs N >= 1");
    assert!(ab_plus > 0.0, "a+b+ must be positive, got {ab_plus}");
    let n = n_terms as f64;
    1.5 * (2.0 / PI).ln() + 0.5 * ab_plus.ln() - n.ln() + 2.0 * ab_plus - PI * PI * n * n / (2.0 * ab_plus)
}

pub fn bound_r1(ab_plus: f64, n_terms: usize) -> f64 {
    ln_bound_r1(ab_plus, n_terms).exp()
}

pub fn bound_r2(ab_plus: f64, n_terms: usize) -> f64 {
    ln_bound_r2(ab_plus, n_terms).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r1_direct_substitution() {
        let want = 0.25 * (-8.0f64).exp();
        assert!((bound_r1(1.0, 2) - want).abs() < 1e-19);
        assert!((bound_r1(1.0, 2) - 8.386_565_697_562_796e-5).abs() < 1e-18);
    }

    #[test]
    fn r2_direct_substitution() {
        // arbitrary-precision value of (2/pi)^{3/2} e^2 e^{-pi^2/2}
        let want = 0.026_993_039_068_932_498;
        assert!((bound_r2(1.0, 1) - want).abs() < 1e-17);
    }

    #[test]
    fn bounds_cross_near_table_value() {
        let (r1, r2) = (bound_r1(1.136, 3), bound_r2(1.136, 3));
        assert!((r1 / 1.8e-17 - 1.0).abs() < 0.1, "{r1:e}");
        assert!((r2 / 1.8e-17 - 1.0).abs() < 0.1, "{r2:e}");
    }

    #[test]
    fn limits() {
        assert_eq!(bound_r1(1e4, 3), 0.0);
        assert!(bound_r1(50.0, 3) < bound_r1(5.0, 3));
        assert_eq!(bound_r2(1e-3, 1), 0.0);
        assert!(bound_r2(0.5, 3) < bound_r2(1.0, 3));
    }

    #[test]
    fn huge_ab_plus_stays_finite_in_log_space() {
        // e^{2 a+b+} alone overflows at 400, the log bound does not
        assert!(ln_bound_r2(400.0, 3).is_finite());
        assert!(ln_bound_r1(1e-300, 8).is_finite());
    }

    #[test]
    #[should_panic]
    fn r1_rejects_single_term() {
        bound_r1(1.0, 1);
    }
}
