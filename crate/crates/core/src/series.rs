//! Partial sums of the two series for the wedge probability.
//!
//! `K1` is Doob's exponential series, fast when `a+ b+` is large. `K2` is the
//! theta-dual series obtained by Poisson summation, fast when `a+ b+` is small.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::dd::{self, Dd};
use crate::error::Result;
use crate::params::WedgeParams;

/// `exp(x)` underflows to zero below this.
pub(crate) const EXP_UNDERFLOW: f64 = -745.2;

/// Everything both series need, computed once per parameter set.
///
/// Only symmetric combinations of the inputs are stored (`|c|`, `|d|`, the
/// sorted products), so exchanging the boundaries or swapping slopes with
/// intercepts yields bit-identical kernels.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel {
    pub ab_plus: f64,
    params: [f64; 4],
    // Doob exponents are kept in their all-positive form
    lower_prod: f64,
    upper_prod: f64,
    diag_sum: f64,
    cross_sum: f64,
    cross_lo: f64,
    cross_hi: f64,
    d_abs: f64,
}

/// Theta-dual coefficients in double-double precision.
///
/// The terms grow like `e^{d^2/(2 a+b+)}` while their sum stays below 1, so
/// plain doubles lose up to four digits for wide wedges. Starting from
/// exact products of the parameters keeps the identity
/// `c^2 - 4 a- b- a+ b+ = d^2`, on which the cancellation relies, intact.
#[derive(Debug, Clone, Copy)]
struct ThetaKernel {
    /// `ln sqrt(pi / (2 a+b+)) + d^2 / (2 a+b+)`
    ln_prefactor: Dd,
    /// `pi^2 / (8 a+b+)`
    decay: Dd,
    /// `|c| / (2 a+b+)` and `|d| / (2 a+b+)`: the cosine frequencies over pi
    freq_c: Dd,
    freq_d: Dd,
    c_equals_d: bool,
    d_zero: bool,
}

impl ThetaKernel {
    fn new([a1, b1, a2, b2]: [f64; 4]) -> Self {
        let by_value = |x: Dd, y: Dd| if x.cmp_total(&y).is_le() { (x, y) } else { (y, x) };
        let (diag_lo, diag_hi) = by_value(Dd::prod(a1, b1), Dd::prod(a2, b2));
        let (cross_lo, cross_hi) = by_value(Dd::prod(a2, b1), Dd::prod(a1, b2));
        // 4 a+ b+, 2|c|, 2|d|
        let four_x = (diag_lo + diag_hi) + (cross_lo + cross_hi);
        let two_c = diag_hi - diag_lo;
        let two_d = cross_hi - cross_lo;
        // The logarithm multiplies every term alike, so double precision
        // there costs no more than one rounding of the result.
        let ln_sqrt = 0.5 * (2.0 * PI / four_x.hi).ln();
        Self {
            ln_prefactor: Dd::from_f64(ln_sqrt) + two_d.sqr() / four_x.mul_f64(2.0),
            decay: dd::PI_SQ / four_x.mul_f64(2.0),
            freq_c: two_c / four_x,
            freq_d: two_d / four_x,
            c_equals_d: two_c == two_d,
            d_zero: two_d.is_zero(),
        }
    }
}

impl Kernel {
    /// Assumes all four parameters are positive.
    pub fn new(params: &WedgeParams) -> Self {
        let dp = params.derive();
        let [a1, b1, a2, b2] = params.to_array();
        let lower_prod = a1 * b1;
        let upper_prod = a2 * b2;
        let p = a2 * b1;
        let q = a1 * b2;
        Self {
            ab_plus: dp.ab_plus,
            params: params.to_array(),
            lower_prod,
            upper_prod,
            diag_sum: lower_prod + upper_prod,
            cross_sum: p + q,
            cross_lo: p.min(q),
            cross_hi: p.max(q),
            d_abs: dp.d.abs(),
        }
    }

    /// Exponents `2A_n, 2B_n, 2C_n, 2D_n` of the n-th Doob term.
    #[inline]
    fn doob_exponents(&self, n: u32) -> [f64; 4] {
        let n = f64::from(n);
        let sq = n * n;
        let prev_sq = (n - 1.0) * (n - 1.0);
        let below = n * (n - 1.0);
        let above = n * (n + 1.0);
        let a = sq * self.upper_prod + prev_sq * self.lower_prod + below * self.cross_sum;
        let b = sq * self.lower_prod + prev_sq * self.upper_prod + below * self.cross_sum;
        let c = sq * self.diag_sum + below * self.cross_hi + above * self.cross_lo;
        let d = sq * self.diag_sum + above * self.cross_hi + below * self.cross_lo;
        [2.0 * a, 2.0 * b, 2.0 * c, 2.0 * d]
    }

    /// `e^{-2A_n} + e^{-2B_n} - e^{-2C_n} - e^{-2D_n}`.
    ///
    /// The second value is false once every later term is exactly zero.
    #[inline]
    pub fn doob_term(&self, n: u32) -> (f64, bool) {
        let [a, b, c, d] = self.doob_exponents(n);
        let term = ((-a).exp() + (-b).exp()) - ((-c).exp() + (-d).exp());
        (term, -a.min(b) > EXP_UNDERFLOW)
    }

    /// Same as [`Kernel::doob_term`] when `A_n = B_n` and `C_n = D_n`.
    #[inline]
    pub fn doob_term_paired(&self, n: u32) -> (f64, bool) {
        let [a, _, c, _] = self.doob_exponents(n);
        let ea = (-a).exp();
        let ec = (-c).exp();
        ((ea + ea) - (ec + ec), -a > EXP_UNDERFLOW)
    }

    /// Same as [`Kernel::doob_term`] when `C_n = D_n`.
    #[inline]
    pub fn doob_term_cross_equal(&self, n: u32) -> (f64, bool) {
        let [a, b, c, _] = self.doob_exponents(n);
        let ec = (-c).exp();
        (((-a).exp() + (-b).exp()) - (ec + ec), -a.min(b) > EXP_UNDERFLOW)
    }

    /// `K_{1,N}`.
    pub fn doob_sum(&self, n_terms: usize) -> f64 {
        1.0 - sum_terms(n_terms, |n| self.doob_term(n))
    }

    /// `K_{2,N}`.
    pub fn theta_sum(&self, n_terms: usize) -> f64 {
        let mut terms = self.theta_terms();
        let mut sum = Dd::ZERO;
        for _ in 0..n_terms {
            let (term, more) = terms.next_pair();
            sum = sum + term;
            if !more {
                break;
            }
        }
        sum.to_f64()
    }

    /// Pairs of theta-dual terms, in order.
    pub fn theta_terms(&self) -> ThetaTerms {
        ThetaTerms::new(&ThetaKernel::new(self.params))
    }

    /// Smallest exponent among the first Doob terms and the geometric tail
    /// factor: `1 - k <= (e^{-2A_1} + e^{-2B_1}) / (1 - e^{-8 a+ b+})`.
    ///
    /// Holds because `A_n - A_1 >= 4 a+ b+ (n-1)^2` (same for `B_n`) and the
    /// `C_n, D_n` terms enter with a minus sign.
    pub fn ln_upper_bound_complement(&self) -> f64 {
        let lo = self.lower_prod.min(self.upper_prod);
        let hi = self.lower_prod.max(self.upper_prod);
        let pair = if hi > lo { (-2.0 * (hi - lo)).exp().ln_1p() } else { std::f64::consts::LN_2 };
        -2.0 * lo + pair - (-(-8.0 * self.ab_plus).exp_m1()).ln()
    }

    /// `k <= sqrt(2 pi / a+b+) e^{d^2/(2 a+b+)} sum_{m>=1} e^{-pi^2 m^2 / (8 a+b+)}`,
    /// with the sum bounded by its geometric majorant.
    pub fn ln_upper_bound_value(&self) -> f64 {
        let x = self.ab_plus;
        let decay = PI * PI / (8.0 * x);
        let ln_prefactor = 0.5 * (FRAC_PI_2 / x).ln() + self.d_abs * self.d_abs / (2.0 * x);
        let ln_sum = -decay - (-(-decay).exp_m1()).ln();
        ln_prefactor + std::f64::consts::LN_2 + ln_sum
    }
}

/// `cos(pi m f)` for `m = 1, 2, ...` by the Chebyshev recurrence.
#[derive(Debug, Clone, Copy)]
struct CosineSeq {
    prev: Dd,
    cur: Dd,
    twice_first: Dd,
}

impl CosineSeq {
    fn new(freq: Dd) -> Self {
        let first = freq.cos_pi();
        Self { prev: Dd::ONE, cur: first, twice_first: first.mul_f64(2.0) }
    }

    /// Current value, then advance.
    #[inline]
    fn step(&mut self) -> Dd {
        let value = self.cur;
        self.cur = self.twice_first * self.cur - self.prev;
        self.prev = value;
        value
    }
}

/// Generator of the theta-dual terms
/// `e^{L - decay m^2} (cos(pi m f_d) + (-1)^{m+1} cos(pi m f_c))`, two at a time.
///
/// The exponentials advance by the ratio `e^{-decay (2m+1)}`, itself a
/// geometric sequence, so each kernel needs only two exponentials.
pub(crate) struct ThetaTerms {
    /// `e^{L - decay m^2}`
    scale: Dd,
    /// `e^{-decay (2m+1)}`
    ratio: Dd,
    /// `e^{-2 decay}`
    ratio_step: Dd,
    cos_c: CosineSeq,
    cos_d: Option<CosineSeq>,
    c_equals_d: bool,
}

impl ThetaTerms {
    fn new(k: &ThetaKernel) -> Self {
        let cos_c = CosineSeq::new(k.freq_c);
        let q = (-k.decay).exp();
        let q2 = q.sqr();
        Self {
            scale: (k.ln_prefactor - k.decay).exp(),
            ratio: q2 * q,
            ratio_step: q2,
            cos_c,
            cos_d: (!k.d_zero && !k.c_equals_d).then(|| CosineSeq::new(k.freq_d)),
            c_equals_d: k.c_equals_d,
        }
    }

    /// Next term and its cosine factor `(cos_d, cos_c)`.
    #[inline]
    fn advance(&mut self) -> (Dd, Dd, Dd) {
        let scale = self.scale;
        self.scale = self.scale * self.ratio;
        self.ratio = self.ratio * self.ratio_step;
        let cos_c = self.cos_c.step();
        let cos_d = match &mut self.cos_d {
            Some(seq) => seq.step(),
            None if self.c_equals_d => cos_c,
            None => Dd::ONE,
        };
        (scale, cos_d, cos_c)
    }

    /// Terms `2n-1` and `2n` combined. The flag is false once every later
    /// term is exactly zero.
    #[inline]
    pub fn next_pair(&mut self) -> (Dd, bool) {
        let (odd_scale, odd_d, odd_c) = self.advance();
        let (even_scale, even_d, even_c) = self.advance();
        let odd = odd_scale * (odd_d + odd_c);
        let even = if self.c_equals_d { Dd::ZERO } else { even_scale * (even_d - even_c) };
        (odd + even, !self.scale.is_zero())
    }
}

/// Sums `term(1) + ... + term(n_terms)` in order, stopping early once the
/// remaining terms are known to be exactly zero.
#[inline]
pub(crate) fn sum_terms(n_terms: usize, mut term: impl FnMut(u32) -> (f64, bool)) -> f64 {
    let mut sum = 0.0;
    for n in 1..=n_terms {
        let (t, more) = term(n as u32);
        sum += t;
        if !more {
            break;
        }
    }
    sum
}

/// Doob's partial sum `K_{1,N}`.
///
/// Requires all four parameters positive; `n_terms = 0` gives 1.
pub fn k1_partial(params: &WedgeParams, n_terms: usize) -> Result<f64> {
    params.require_positive()?;
    Ok(Kernel::new(params).doob_sum(n_terms))
}

/// Theta-dual partial sum `K_{2,N}`.
///
/// Requires all four parameters positive; `n_terms = 0` gives 0.
pub fn k2_partial(params: &WedgeParams, n_terms: usize) -> Result<f64> {
    params.require_positive()?;
    Ok(Kernel::new(params).theta_sum(n_terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::WedgeError;

    fn p(a1: f64, b1: f64, a2: f64, b2: f64) -> WedgeParams {
        WedgeParams::new(a1, b1, a2, b2).unwrap()
    }

    /// Doob's exponents written exactly as in the original series.
    fn doob_textbook(a1: f64, b1: f64, a2: f64, b2: f64, n_terms: usize) -> f64 {
        let mut sum = 0.0;
        for n in 1..=n_terms {
            let n = n as f64;
            let a = n * n * a2 * b2 + (n - 1.0).powi(2) * a1 * b1 + n * (n - 1.0) * (a2 * b1 + a1 * b2);
            let b = (n - 1.0).powi(2) * a2 * b2 + n * n * a1 * b1 + n * (n - 1.0) * (a2 * b1 + a1 * b2);
            let c = n * n * (a1 * b1 + a2 * b2) + n * (n - 1.0) * a2 * b1 + n * (n + 1.0) * a1 * b2;
            let d = n * n * (a1 * b1 + a2 * b2) + n * (n + 1.0) * a2 * b1 + n * (n - 1.0) * a1 * b2;
            sum += (-2.0 * a).exp() + (-2.0 * b).exp() - (-2.0 * c).exp() - (-2.0 * d).exp();
        }
        1.0 - sum
    }

    #[test]
    fn empty_sums() {
        assert_eq!(k1_partial(&p(1.0, 2.0, 3.0, 4.0), 0).unwrap(), 1.0);
        assert_eq!(k2_partial(&p(1.0, 2.0, 3.0, 4.0), 0).unwrap(), 0.0);
    }

    #[test]
    fn doob_at_two() {
        // 1 - 2e^-8 + 2e^-32 - 2e^-72
        let expected = 0.999_329_074_744_220_3;
        let got = k1_partial(&p(2.0, 2.0, 2.0, 2.0), 3).unwrap();
        assert!((got - expected).abs() < 2e-16, "{got}");
    }

    #[test]
    fn theta_at_half() {
        let got = k2_partial(&p(0.5, 0.5, 0.5, 0.5), 3).unwrap();
        assert!((got - 0.036_054_756_335_124_906).abs() < 1e-17, "{got}");
    }

    #[test]
    fn both_series_give_kolmogorov_at_one() {
        let params = p(1.0, 1.0, 1.0, 1.0);
        let oracle = 0.730_000_328_322_645_5;
        assert!((k2_partial(&params, 3).unwrap() - oracle).abs() < 2e-16);
        assert!((k1_partial(&params, 20).unwrap() - oracle).abs() < 2e-16);
    }

    #[test]
    fn agree_at_three() {
        let params = p(3.0, 3.0, 3.0, 3.0);
        let k1 = k1_partial(&params, 3).unwrap();
        let k2 = k2_partial(&params, 3).unwrap();
        // theta side at a+b+ = 9 keeps a visible remainder at N = 3
        let r2 = crate::bounds::bound_r2(9.0, 3);
        assert!((k1 - k2).abs() <= 1.8e-17 + r2 + crate::bounds::bound_r1(9.0, 3) + 2e-16);
    }

    #[test]
    fn matches_textbook_doob() {
        for &(a1, b1, a2, b2) in &[(1.0, 2.0, 3.0, 4.0), (0.3, 2.5, 1.7, 0.9), (5.0, 0.1, 0.2, 8.0)] {
            let got = k1_partial(&p(a1, b1, a2, b2), 30).unwrap();
            let want = doob_textbook(a1, b1, a2, b2, 30);
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }
    }

    #[test]
    fn oracle_general_value() {
        // 60-digit evaluation of both series at 100 terms
        let oracle = 0.981_684_361_073_514_5;
        let params = p(1.0, 2.0, 3.0, 4.0);
        assert!((k1_partial(&params, 5).unwrap() - oracle).abs() < 2e-16);
        assert!((k2_partial(&params, 8).unwrap() - oracle).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(matches!(k1_partial(&p(1.0, -1.0, 1.0, 1.0), 3), Err(WedgeError::NonPositive { .. })));
        assert!(k2_partial(&p(0.0, 1.0, 1.0, 1.0), 3).is_err());
    }

    #[test]
    fn specialized_terms_agree() {
        let k = Kernel::new(&p(0.8, 0.8, 0.8, 0.8));
        for n in 1..6 {
            assert_eq!(k.doob_term(n), k.doob_term_paired(n));
        }
        let k = Kernel::new(&p(0.8, 0.8, 1.9, 1.9));
        for n in 1..6 {
            assert_eq!(k.doob_term(n), k.doob_term_cross_equal(n));
        }
    }

    #[test]
    fn theta_shortcuts_match_full_recurrence() {
        // d = 0, |c| = |d| and both: compare against running every sequence
        for params in [p(0.8, 0.8, 0.8, 0.8), p(0.8, 0.3, 0.8, 2.1), p(0.8, 0.8, 1.9, 1.9)] {
            let kernel = Kernel::new(&params);
            let mut fast = kernel.theta_terms();
            let mut full = kernel.theta_terms();
            full.cos_d = Some(CosineSeq::new(ThetaKernel::new(params.to_array()).freq_d));
            full.c_equals_d = false;
            for _ in 0..6 {
                assert_eq!(fast.next_pair(), full.next_pair());
            }
        }
    }

    #[test]
    fn theta_accurate_for_wide_wedges() {
        // terms near 1e4 cancel down to 0.0174; 50-digit reference
        let params =
            p(3.529_712_178_024_047_5, 0.008_218_182_105_324_538, 0.035_965_571_107_592_11, 5.410_241_797_514_313);
        let want = 0.017_415_202_212_552_536;
        assert!((k2_partial(&params, 50).unwrap() - want).abs() < 1e-17);
        // Doob's form subtracts from 1, so its error is absolute
        let k1 = k1_partial(&params, 50).unwrap();
        assert!((k1 - want).abs() < 1.2e-16, "{k1:e}");
    }

    #[test]
    fn trivial_bounds_are_upper_bounds() {
        for &(a1, b1, a2, b2) in &[(1.0, 2.0, 3.0, 4.0), (0.3, 0.2, 0.1, 0.4), (4.0, 4.0, 4.0, 4.0)] {
            let params = p(a1, b1, a2, b2);
            let k = Kernel::new(&params);
            // the complement bound is tight to its leading term
            let slack = 1.0 + 1e-12;
            assert!(1.0 - k.doob_sum(200) <= slack * k.ln_upper_bound_complement().exp());
            assert!(k.theta_sum(200) <= slack * k.ln_upper_bound_value().exp());
        }
    }
}
