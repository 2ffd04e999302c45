//! Fundamental solutions of the fractional diffusion-wave equation
//! `∂_t^α u = Δu`, `1 ≤ α < 2`, in one, two and three dimensions.
//!
//! Three independent routes to `G_{α,n}(r, t)`:
//!
//! * [`closed_form`]: elementary expressions for `n = 1, 3`.
//! * [`quadrature`]: the Fourier-Bessel inversion of `E_α(−κ^α t^α)`,
//!   integrated lobe by lobe and accelerated.
//! * [`mellin_barnes`]: a vertical-line contour integral of a Gamma ratio.
//!
//! [`analysis`] builds maxima, velocities, moments and sign profiles on top.
//! Everything is generic over [`Real`] (`f32`, `f64`); the `*64` aliases fix
//! the common case.

// Negated comparisons are how NaN inputs get rejected throughout.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod closed_form;
pub mod domain;
pub mod error;
pub mod integrate;
pub mod mellin_barnes;
pub mod optimize;
pub mod quadrature;
pub mod scalar;
pub mod special_fn;

pub use domain::{Dimension, EvalPoint, Order};
pub use error::{Error, Result};
pub use mellin_barnes::ContourConfig;
pub use quadrature::{QuadResult, QuadratureConfig};
pub use scalar::Real;

pub type Order64 = Order<f64>;
pub type EvalPoint64 = EvalPoint<f64>;
pub type QuadratureConfig64 = QuadratureConfig<f64>;
pub type QuadResult64 = QuadResult<f64>;
pub type ContourConfig64 = ContourConfig<f64>;
pub type MittagLeffler64 = special_fn::MittagLeffler<f64>;

pub type Order32 = Order<f32>;
pub type EvalPoint32 = EvalPoint<f32>;
pub type QuadratureConfig32 = QuadratureConfig<f32>;
