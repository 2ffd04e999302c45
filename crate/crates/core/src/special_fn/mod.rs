//! Special functions: Mittag-Leffler, log-Gamma, Bessel kernels.

pub mod bessel;
pub mod gamma;
pub mod mittag_leffler;

pub use bessel::{bessel_kernel, j0, j0_zero, j1};
pub use gamma::{gamma, ln_gamma, log_gamma_complex, rgamma};
pub use mittag_leffler::{ml_neg, MLResult, MittagLeffler, MlConfig, Regime};
