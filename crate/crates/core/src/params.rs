//! Boundary parameters and the quantities both series are written in.

use crate::error::{Result, WedgeError};

/// The two linear boundaries `-a1 t - b1` and `a2 t + b2`.
///
/// All four values are finite; they may be zero or negative, in which case
/// the wedge probability is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WedgeParams {
    a1: f64,
    b1: f64,
    a2: f64,
    b2: f64,
}

impl WedgeParams {
    pub fn new(a1: f64, b1: f64, a2: f64, b2: f64) -> Result<Self> {
        for (name, value) in [("a1", a1), ("b1", b1), ("a2", a2), ("b2", b2)] {
            if !value.is_finite() {
                return Err(WedgeError::NonFinite { name, value });
            }
        }
        Ok(Self { a1, b1, a2, b2 })
    }

    /// Same slope and intercept on both sides: the Kolmogorov-Smirnov case.
    pub fn symmetric(a: f64) -> Result<Self> {
        Self::new(a, a, a, a)
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    /// `[a1, b1, a2, b2]`
    pub fn to_array(&self) -> [f64; 4] {
        [self.a1, self.b1, self.a2, self.b2]
    }

    pub fn all_positive(&self) -> bool {
        self.a1 > 0.0 && self.b1 > 0.0 && self.a2 > 0.0 && self.b2 > 0.0
    }

    pub(crate) fn require_positive(&self) -> Result<()> {
        if self.all_positive() {
            Ok(())
        } else {
            Err(WedgeError::NonPositive { a1: self.a1, b1: self.b1, a2: self.a2, b2: self.b2 })
        }
    }

    pub fn derive(&self) -> DerivedParams {
        derive(self)
    }
}

/// Half-sums and half-differences of the boundary parameters.
///
/// `c` and `d` keep their sign here; the series only depend on `|c|` and
/// `|d|`, which is what makes them exactly invariant under exchanging the
/// two boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub a_plus: f64,
    pub a_minus: f64,
    pub b_plus: f64,
    pub b_minus: f64,
    pub c: f64,
    pub d: f64,
    /// `a_plus * b_plus`, the quantity that governs convergence of both series.
    pub ab_plus: f64,
}

impl DerivedParams {
    /// `a_minus * b_minus`
    pub fn ab_minus(&self) -> f64 {
        self.a_minus * self.b_minus
    }

    /// `c^2 - 4 a_- b_- a_+ b_+ - d^2`, zero in exact arithmetic.
    pub fn identity_residual(&self) -> f64 {
        self.c * self.c - 4.0 * self.ab_minus() * self.ab_plus - self.d * self.d
    }
}

pub fn derive(params: &WedgeParams) -> DerivedParams {
    let WedgeParams { a1, b1, a2, b2 } = *params;
    let a_plus = (a1 + a2) / 2.0;
    let b_plus = (b1 + b2) / 2.0;
    DerivedParams {
        a_plus,
        a_minus: (a1 - a2) / 2.0,
        b_plus,
        b_minus: (b1 - b2) / 2.0,
        c: (a1 * b1 - a2 * b2) / 2.0,
        d: (a1 * b2 - a2 * b1) / 2.0,
        ab_plus: a_plus * b_plus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn derived(a1: f64, b1: f64, a2: f64, b2: f64) -> DerivedParams {
        WedgeParams::new(a1, b1, a2, b2).unwrap().derive()
    }

    #[test]
    fn derive_example() {
        let dp = derived(1.0, 2.0, 3.0, 4.0);
        assert_eq!((dp.a_plus, dp.a_minus, dp.b_plus, dp.b_minus, dp.c, dp.d), (2.0, -1.0, 3.0, -1.0, -5.0, -1.0));
        assert_eq!(dp.ab_plus, 6.0);
    }

    #[test]
    fn derive_symmetric() {
        let dp = derived(0.7, 1.3, 0.7, 1.3);
        assert_eq!((dp.a_plus, dp.b_plus), (0.7, 1.3));
        assert_eq!((dp.a_minus, dp.b_minus, dp.c, dp.d), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn derive_identity_example() {
        let dp = derived(2.0, 1.0, 2.0, 3.0);
        assert_eq!((dp.a_plus, dp.a_minus, dp.b_plus, dp.b_minus, dp.c, dp.d), (2.0, 0.0, 2.0, -1.0, -2.0, 2.0));
        assert_eq!(dp.c * dp.c - 4.0 * dp.ab_minus() * dp.ab_plus, dp.d * dp.d);
    }

    #[test]
    fn rejects_nan_and_infinity() {
        assert!(matches!(WedgeParams::new(1.0, f64::NAN, 1.0, 1.0), Err(WedgeError::NonFinite { name: "b1", .. })));
        assert!(WedgeParams::new(1.0, 1.0, f64::INFINITY, 1.0).is_err());
        assert!(WedgeParams::new(-1.0, 0.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn positivity() {
        assert!(WedgeParams::new(1.0, 1.0, 1.0, 1.0).unwrap().all_positive());
        assert!(!WedgeParams::new(1.0, 0.0, 1.0, 1.0).unwrap().all_positive());
        assert!(WedgeParams::new(1.0, -1.0, 1.0, 1.0).unwrap().require_positive().is_err());
    }
}
