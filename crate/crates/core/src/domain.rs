//! Validated inputs: equation order, spatial dimension, evaluation point.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Equation order `alpha` in `[1, 2)`.
///
/// `alpha = 2` (the classical wave equation) is excluded: its fundamental
/// solution is a pair of travelling delta functions, not a pointwise function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order<T>(T);

impl<T: Real> Order<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if alpha.is_finite() && alpha >= T::one() && alpha < T::lit(2.0) {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidOrder {
                alpha: alpha.to_f64_lossy(),
                range: "[1, 2)",
            })
        }
    }

    #[inline]
    pub fn value(self) -> T {
        self.0
    }

    /// `alpha == 1`: the Cauchy (Poisson) kernel case.
    #[inline]
    pub fn is_cauchy(self) -> bool {
        self.0 == T::one()
    }

    /// Rejects `alpha = 1` for routes that need `1 < alpha < 2`.
    pub(crate) fn require_open(self) -> Result<Self> {
        if self.is_cauchy() {
            Err(Error::InvalidOrder {
                alpha: 1.0,
                range: "(1, 2)",
            })
        } else {
            Ok(self)
        }
    }
}

/// Spatial dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    One,
    Two,
    Three,
}

impl Dimension {
    pub fn new(n: u32) -> Result<Self> {
        match n {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            3 => Ok(Self::Three),
            other => Err(Error::UnsupportedDimension(other)),
        }
    }

    #[inline]
    pub fn n(self) -> u32 {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Three => 3,
        }
    }

    #[inline]
    pub fn as_real<T: Real>(self) -> T {
        T::lit(self.n() as f64)
    }
}

impl TryFrom<u32> for Dimension {
    type Error = Error;
    fn try_from(n: u32) -> Result<Self> {
        Self::new(n)
    }
}

/// Radial coordinate `r = |x| >= 0` at time `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint<T> {
    r: T,
    t: T,
}

impl<T: Real> EvalPoint<T> {
    pub fn new(r: T, t: T) -> Result<Self> {
        if !(r.is_finite() && r >= T::zero()) {
            return Err(Error::InvalidPoint(format!(
                "r = {} must be finite and >= 0",
                r.to_f64_lossy()
            )));
        }
        if !(t.is_finite() && t > T::zero()) {
            return Err(Error::InvalidPoint(format!(
                "t = {} must be finite and > 0",
                t.to_f64_lossy()
            )));
        }
        Ok(Self { r, t })
    }

    #[inline]
    pub fn r(&self) -> T {
        self.r
    }

    #[inline]
    pub fn t(&self) -> T {
        self.t
    }

    /// Similarity variable `r / t`.
    #[inline]
    pub fn rho(&self) -> T {
        self.r / self.t
    }

    /// The same point with both coordinates multiplied by `lambda`.
    pub fn scaled(&self, lambda: T) -> Result<Self> {
        Self::new(self.r * lambda, self.t * lambda)
    }
}
