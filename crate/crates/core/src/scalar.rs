//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the library is generic over (`f32` or `f64`).
///
/// Accuracy contracts quoted in the docs refer to `f64`; for `f32` the
/// default tolerances scale with machine epsilon.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Sum + Send + Sync + 'static
{
    /// Converts an `f64` literal into the scalar type.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// `f64` view used for diagnostics and error payloads.
    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Default absolute accuracy target: `v` for `f64`, never finer than a
    /// few hundred ulps of the scalar type.
    #[inline]
    fn tol_floor(v: f64) -> Self {
        Self::lit(v).max(Self::epsilon() * Self::lit(256.0))
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `sin(pi x)` with exact zeros at the integers and exact `±1` at half-integers.
pub fn sin_pi<T: Real>(x: T) -> T {
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    let quarter = T::lit(0.25);
    // r in [-1, 1]; x - 2 round(x/2) is exact in binary floating point
    let r = x - two * (x / two).round();
    let a = r.abs();
    let v = if a <= quarter {
        (T::PI() * a).sin()
    } else if a <= T::lit(0.75) {
        (T::PI() * (a - half)).cos()
    } else {
        (T::PI() * (T::one() - a)).sin()
    };
    if r < T::zero() {
        -v
    } else {
        v
    }
}

/// `cos(pi x)` with exact zeros at half-integers.
pub fn cos_pi<T: Real>(x: T) -> T {
    let two = T::lit(2.0);
    let r = (x - two * (x / two).round()).abs();
    let half = T::lit(0.5);
    if r <= T::lit(0.25) {
        (T::PI() * r).cos()
    } else if r <= T::lit(0.75) {
        (T::PI() * (half - r)).sin()
    } else {
        -(T::PI() * (T::one() - r)).cos()
    }
}
