//! Double-double arithmetic: an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`,
//! giving roughly 106 bits of precision.
//!
//! Only the handful of operations needed by the theta-dual series are
//! provided. Products of two doubles are exact in this representation.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const PI: Dd = Dd { hi: 3.141_592_653_589_793, lo: 1.224_646_799_147_353_2e-16 };
pub(crate) const PI_SQ: Dd = Dd { hi: 9.869_604_401_089_358, lo: 6.265_295_508_739_711e-16 };
/// `1/i!` for `i = 2, 3, ..., 27`.
const INV_FACT: [Dd; 26] = [
    Dd { hi: 0.5, lo: 0.0 },
    Dd { hi: 0.16666666666666666, lo: 9.25185853854297e-18 },
    Dd { hi: 0.041666666666666664, lo: 2.3129646346357427e-18 },
    Dd { hi: 0.008333333333333333, lo: 1.1564823173178714e-19 },
    Dd { hi: 0.001388888888888889, lo: -5.300543954373577e-20 },
    Dd { hi: 0.0001984126984126984, lo: 1.7209558293420705e-22 },
    Dd { hi: 2.48015873015873e-05, lo: 2.1511947866775882e-23 },
    Dd { hi: 2.7557319223985893e-06, lo: -1.858393274046472e-22 },
    Dd { hi: 2.755731922398589e-07, lo: 2.3767714622250297e-23 },
    Dd { hi: 2.505210838544172e-08, lo: -1.448814070935912e-24 },
    Dd { hi: 2.08767569878681e-09, lo: -1.20734505911326e-25 },
    Dd { hi: 1.6059043836821613e-10, lo: 1.2585294588752098e-26 },
    Dd { hi: 1.1470745597729725e-11, lo: 2.0655512752830745e-28 },
    Dd { hi: 7.647163731819816e-13, lo: 7.03872877733453e-30 },
    Dd { hi: 4.779477332387385e-14, lo: 4.399205485834081e-31 },
    Dd { hi: 2.8114572543455206e-15, lo: 1.6508842730861433e-31 },
    Dd { hi: 1.5619206968586225e-16, lo: 1.1910679660273754e-32 },
    Dd { hi: 8.22063524662433e-18, lo: 2.2141894119604265e-34 },
    Dd { hi: 4.110317623312165e-19, lo: 1.4412973378659527e-36 },
    Dd { hi: 1.9572941063391263e-20, lo: -1.3643503830087908e-36 },
    Dd { hi: 8.896791392450574e-22, lo: -7.911402614872376e-38 },
    Dd { hi: 3.868170170630684e-23, lo: -8.843177655482344e-40 },
    Dd { hi: 1.6117375710961184e-24, lo: -3.6846573564509766e-41 },
    Dd { hi: 6.446950284384474e-26, lo: -1.9330404233703465e-42 },
    Dd { hi: 2.4795962632247976e-27, lo: -1.2953730964765229e-43 },
    Dd { hi: 9.183689863795546e-29, lo: 1.4303150396787322e-45 },
];

const LN2: Dd = Dd { hi: 0.693_147_180_559_945_3, lo: 2.319_046_813_846_299_6e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[cfg(target_feature = "fma")]
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Dekker's product; a software `fma` would be several times slower.
#[cfg(not(target_feature = "fma"))]
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    #[inline]
    fn split(a: f64) -> (f64, f64) {
        const SPLITTER: f64 = 134_217_729.0; // 2^27 + 1
        let t = SPLITTER * a;
        let hi = t - (t - a);
        (hi, a - hi)
    }
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    #[inline]
    pub fn prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0
    }

    /// Multiplication by a power of two, exact unless the result leaves
    /// the normal range.
    #[inline]
    fn scale(self, s: f64) -> Self {
        Dd { hi: self.hi * s, lo: self.lo * s }
    }

    #[inline]
    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::renorm(p, e + self.lo * b)
    }

    #[inline]
    pub fn sqr(self) -> Self {
        self * self
    }

    #[inline]
    pub fn cmp_total(&self, other: &Self) -> Ordering {
        self.hi.total_cmp(&other.hi).then(self.lo.total_cmp(&other.lo))
    }

    /// `2^k` for any `k` where the result is representable, possibly subnormal.
    fn pow2(k: i32) -> (f64, f64) {
        let one = |k: i32| f64::from_bits(((k + 1023) as u64) << 52);
        match k {
            -1022..=1023 => (one(k), 1.0),
            k if k > 1023 => (one(1023), one(k - 1023)),
            k => (one(-1022), one((k + 1022).max(-1022))),
        }
    }

    /// `e^self`; 0 below the double underflow limit, infinity above overflow.
    pub fn exp(self) -> Self {
        if self.hi > 709.8 {
            return Dd { hi: f64::INFINITY, lo: 0.0 };
        }
        if self.hi < -745.2 {
            return Self::ZERO;
        }
        if self.hi.is_nan() {
            return Dd { hi: f64::NAN, lo: f64::NAN };
        }
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2.mul_f64(k)).scale(1.0 / 512.0);
        // e^r - 1 by Taylor, |r| < 7e-4
        // Horner through r^10 / 10!
        let mut sum = INV_FACT[8];
        for inv in INV_FACT[..8].iter().rev() {
            sum = sum * r + *inv;
        }
        sum = (sum * r + Dd::ONE) * r;
        // (e^r - 1)(e^r + 1) = e^{2r} - 1, nine times
        for _ in 0..9 {
            sum = sum * (sum + Dd::from_f64(2.0));
        }
        let v = sum + Self::ONE;
        let (s1, s2) = Self::pow2(k as i32);
        v.scale(s1).scale(s2)
    }

    /// `cos(pi * self)`.
    pub fn cos_pi(self) -> Self {
        // periodic with period 2 and even; both reductions are exact
        let t = (self - Dd::from_f64(2.0 * (self.hi / 2.0).round())).abs();
        let j = (2.0 * t.hi).round();
        let y = (t - Dd::from_f64(j / 2.0)) * PI;
        match j as i32 {
            0 => cos_taylor(y),
            1 => -sin_taylor(y),
            _ => -cos_taylor(y),
        }
    }
}

/// Taylor series of `cos y` for `|y| <= pi/4`, through `y^26`.
fn cos_taylor(y: Dd) -> Dd {
    alternating_horner(y.sqr(), INV_FACT.iter().step_by(2))
}

/// Taylor series of `sin y` for `|y| <= pi/4`, through `y^27`.
fn sin_taylor(y: Dd) -> Dd {
    alternating_horner(y.sqr(), INV_FACT.iter().skip(1).step_by(2)) * y
}

/// `1 - c_1 z + c_2 z^2 - ...` by Horner's rule.
fn alternating_horner<'a>(z: Dd, coefficients: impl DoubleEndedIterator<Item = &'a Dd> + ExactSizeIterator) -> Dd {
    let count = coefficients.len();
    let mut sum = Dd::ZERO;
    for (i, c) in coefficients.rev().enumerate() {
        // index from the top: the term of degree count - i
        let c = if (count - i) % 2 == 1 { -*c } else { *c };
        sum = sum * z + c;
    }
    sum * z + Dd::ONE
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Dd::renorm(s, e + f)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        Dd::renorm(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        Dd::renorm(q1, q2) + Dd::from_f64(q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(got: Dd, hi: f64, lo: f64, rel: f64) {
        let err = ((got.hi - hi) + (got.lo - lo)).abs();
        assert!(err <= rel * hi.abs(), "{got:?} vs {hi:e} + {lo:e}: {err:e}");
    }

    // reference digits from a 50-digit evaluation
    #[test]
    fn exp_values() {
        close(Dd::from_f64(9.4).exp(), 12_088.380_730_216_988, 6.790_879_371_443_788e-13, 1e-30);
        close(Dd::from_f64(-5.0).exp(), 0.006_737_946_999_085_467, 9.579_094_181_215_286e-20, 1e-30);
        close(Dd::from_f64(0.3).exp(), 1.349_858_807_576_003_2, -9.447_314_673_432_387e-17, 1e-30);
        assert_eq!(Dd::ZERO.exp(), Dd::ONE);
        assert_eq!(Dd::from_f64(-800.0).exp(), Dd::ZERO);
        assert!(Dd::from_f64(800.0).exp().hi.is_infinite());
        let tiny = Dd::from_f64(-740.0).exp().hi;
        assert!((tiny / (-740.0f64).exp() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn cos_pi_values() {
        assert_eq!(Dd::ZERO.cos_pi(), Dd::ONE);
        close(Dd::ONE.cos_pi(), -1.0, 0.0, 1e-31);
        close(Dd::from_f64(0.5).cos_pi(), 0.0, 0.0, 0.0);
        // at the doubles nearest 0.3, 3.1 and -7.3
        close(Dd::from_f64(0.3).cos_pi(), 0.587_785_252_292_473_1, 2.028_269_805_215_003_7e-17, 1e-30);
        close(Dd::from_f64(3.1).cos_pi(), -0.951_056_516_295_153_5, 4.529_035_030_228_792e-17, 1e-29);
        close(Dd::from_f64(-7.3).cos_pi(), -0.587_785_252_292_473_6, 5.447_784_428_118_197e-19, 1e-29);
    }

    #[test]
    fn division() {
        let q = Dd::ONE / Dd::from_f64(3.0);
        close(q * Dd::from_f64(3.0), 1.0, 0.0, 1e-31);
        close(PI_SQ / PI, PI.hi, PI.lo, 1e-31);
    }

    #[test]
    fn exact_products() {
        for (a, b) in [(0.1, 0.3), (1e300, 3.7e-5), (-7.25, 1.0 / 3.0)] {
            let p = Dd::prod(a, b);
            assert_eq!(p.hi, a * b);
            assert_eq!(p.lo, a.mul_add(b, -(a * b)));
        }
    }
}
