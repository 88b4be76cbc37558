use std::fmt;

use num_complex::Complex64;

use super::ScalarError;

/// Absolute tolerance used for zero tests in the float backend.
pub const FLOAT_ZERO_TOL: f64 = 1e-9;

/// Double-precision complex number used by the float backend.
#[derive(Clone, Copy, PartialEq, Default, serde::Serialize, serde::Deserialize)]
pub struct FloatScalar {
    pub re: f64,
    pub im: f64,
}

impl FloatScalar {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        let n = self.re * self.re + self.im * self.im;
        if n == 0.0 || self.abs() < FLOAT_ZERO_TOL {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self { re: self.re / n, im: -self.im / n })
    }
}

impl fmt::Display for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}{:+}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
