//! Coefficient fields: exact ℚ(i, √2) and a double-precision fallback.

mod exact;
mod float;
mod rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;

pub use exact::ExactScalar;
pub use float::{FloatScalar, FLOAT_ZERO_TOL};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("value {0} has no square root in the coefficient field")]
    NoSquareRoot(String),
}

/// Field operations shared by the exact and float backends.
///
/// Methods take references so that big-number backed values are never moved
/// or cloned implicitly.
pub trait Scalar: Clone + Debug + Display + PartialEq + Send + Sync + 'static {
    /// Canonical hashable image used to deduplicate group elements.
    type Key: Clone + Eq + Hash + Ord + Debug + Send + Sync;
    const EXACT: bool;
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn sqrt2() -> Self;
    fn imag_unit() -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;
    fn conj(&self) -> Self;
    /// Square root of a nonnegative real value, if representable.
    fn sqrt_real(&self) -> Option<Self>;
    /// Sign of a real value; `None` if the value is not real.
    fn real_sign(&self) -> Option<i32>;
    fn to_float(&self) -> FloatScalar;
    fn key(&self) -> Self::Key;
    /// Embeds a double; the exact backend refuses (values like cos(π/5) are
    /// not in the field).
    fn from_f64(x: f64) -> Option<Self>;
    /// Parses a real entry: "p/q", "p/q*sqrt2", "sqrt2", and for the float
    /// backend also plain decimals.
    fn parse_real(s: &str) -> Result<Self, ScalarError>;

    fn from_i64(k: i64) -> Self {
        Self::from_rational(&Rational::integer(k))
    }

    fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    fn is_one(&self) -> bool {
        self.sub(&Self::one()).is_zero()
    }

    fn scale_rational(&self, r: &Rational) -> Self {
        self.mul(&Self::from_rational(r))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for ExactScalar {
    type Key = ExactScalar;
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn from_rational(r: &Rational) -> Self {
        ExactScalar::rational(r.clone())
    }
    fn sqrt2() -> Self {
        ExactScalar::sqrt2()
    }
    fn imag_unit() -> Self {
        ExactScalar::i()
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        self.inverse()
    }
    fn conj(&self) -> Self {
        ExactScalar::conj(self)
    }
    fn sqrt_real(&self) -> Option<Self> {
        ExactScalar::sqrt_real(self)
    }
    fn real_sign(&self) -> Option<i32> {
        ExactScalar::real_sign(self)
    }
    fn to_float(&self) -> FloatScalar {
        ExactScalar::to_float(self)
    }
    fn key(&self) -> Self::Key {
        self.clone()
    }
    fn from_f64(_: f64) -> Option<Self> {
        None
    }
    fn parse_real(s: &str) -> Result<Self, ScalarError> {
        ExactScalar::parse_real(s)
    }
    fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(r)
    }
}

impl Scalar for FloatScalar {
    type Key = (i64, i64);
    const EXACT: bool = false;
    const NAME: &'static str = "float64";

    fn zero() -> Self {
        FloatScalar::default()
    }
    fn one() -> Self {
        FloatScalar::real(1.0)
    }
    fn from_rational(r: &Rational) -> Self {
        FloatScalar::real(r.to_f64())
    }
    fn sqrt2() -> Self {
        FloatScalar::real(std::f64::consts::SQRT_2)
    }
    fn imag_unit() -> Self {
        FloatScalar::new(0.0, 1.0)
    }
    fn is_zero(&self) -> bool {
        self.re.abs() < FLOAT_ZERO_TOL && self.im.abs() < FLOAT_ZERO_TOL
    }
    fn add(&self, o: &Self) -> Self {
        FloatScalar::new(self.re + o.re, self.im + o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        FloatScalar::new(self.re - o.re, self.im - o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        FloatScalar::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
    fn neg(&self) -> Self {
        FloatScalar::new(-self.re, -self.im)
    }
    fn inv(&self) -> Result<Self, ScalarError> {
        self.inverse()
    }
    fn conj(&self) -> Self {
        FloatScalar::new(self.re, -self.im)
    }
    fn sqrt_real(&self) -> Option<Self> {
        match self.real_sign()? {
            s if s < 0 => None,
            0 => Some(Self::zero()),
            _ => Some(FloatScalar::real(self.re.sqrt())),
        }
    }
    fn real_sign(&self) -> Option<i32> {
        if self.im.abs() >= FLOAT_ZERO_TOL {
            return None;
        }
        Some(if self.re.abs() < FLOAT_ZERO_TOL {
            0
        } else if self.re > 0.0 {
            1
        } else {
            -1
        })
    }
    fn to_float(&self) -> FloatScalar {
        *self
    }
    fn key(&self) -> Self::Key {
        ((self.re * 1e8).round() as i64, (self.im * 1e8).round() as i64)
    }
    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then(|| FloatScalar::real(x))
    }
    fn parse_real(s: &str) -> Result<Self, ScalarError> {
        match ExactScalar::parse_real(s) {
            Ok(x) => Ok(x.to_float()),
            Err(_) => s
                .trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(FloatScalar::real)
                .ok_or_else(|| ScalarError::Parse(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn exact() -> impl Strategy<Value = ExactScalar> {
        (small_rational(), small_rational(), small_rational(), small_rational())
            .prop_map(|(a, b, c, d)| ExactScalar::new(a, b, c, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn field_axioms(x in exact(), y in exact(), z in exact()) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).sub(&y), x.clone());
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv().unwrap()), ExactScalar::one());
            }
        }

        #[test]
        fn conjugations_are_involutive_automorphisms(x in exact(), y in exact()) {
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!(x.surd_conj().surd_conj(), x.clone());
            prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        }

        #[test]
        fn float_image_close(x in exact()) {
            let f = x.to_float();
            let s2 = std::f64::consts::SQRT_2;
            let re = x.a.to_f64() + x.b.to_f64() * s2;
            let im = x.c.to_f64() + x.d.to_f64() * s2;
            prop_assert!((f.re - re).abs() <= 4.0 * f64::EPSILON * (1.0 + re.abs()));
            prop_assert!((f.im - im).abs() <= 4.0 * f64::EPSILON * (1.0 + im.abs()));
        }
    }

    #[test]
    fn ten_thousand_random_inverses() {
        // Deterministic LCG so the run is reproducible without a RNG dependency.
        let mut state: u64 = 0x2545_f491_4f6c_dd1d;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 61) as i64 - 30
        };
        let mut checked = 0;
        while checked < 10_000 {
            let mut comp = || Rational::new(next(), next().abs() + 1).unwrap();
            let x = ExactScalar::new(comp(), comp(), comp(), comp());
            if x.is_zero() {
                continue;
            }
            assert_eq!(x.mul(&x.inv().unwrap()), ExactScalar::one());
            checked += 1;
        }
    }
}
