//! One-dimensional initial-value problem by convolution with `G_{α,1}`.

use crate::closed_form::g1;
use crate::domain::{EvalPoint, Order};
use crate::error::{Error, Result};
use crate::scalar::Real;

// Relative spacing deviation tolerated before a grid counts as non-uniform.
const UNIFORM_RTOL: f64 = 1e-6;

/// `u(x, t) = ∫ G_{α,1}(x − ξ, t) φ(ξ) dξ` by the trapezoidal rule on the
/// sample grid of `phi`, for initial displacement `φ` and zero initial
/// velocity. `phi` must be sorted and uniformly spaced.
pub fn solve_ivp_1d<T: Real>(
    alpha: Order<T>,
    phi: &[(T, T)],
    t: T,
    out_grid: &[T],
) -> Result<Vec<(T, T)>> {
    if phi.len() < 2 {
        return Err(Error::InvalidGrid("need at least two samples".into()));
    }
    let h = phi[1].0 - phi[0].0;
    if !(h > T::zero()) {
        return Err(Error::InvalidGrid(
            "samples must be strictly increasing".into(),
        ));
    }
    for (i, w) in phi.windows(2).enumerate() {
        let d = w[1].0 - w[0].0;
        if !(d > T::zero()) {
            return Err(Error::InvalidGrid(format!(
                "unsorted samples at index {}",
                i + 1
            )));
        }
        if (d - h).abs() > T::lit(UNIFORM_RTOL) * h {
            return Err(Error::InvalidGrid(format!(
                "non-uniform spacing at index {}",
                i + 1
            )));
        }
        if !w[1].1.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "non-finite sample at index {}",
                i + 1
            )));
        }
    }
    EvalPoint::new(T::zero(), t)?;
    let last = phi.len() - 1;
    out_grid
        .iter()
        .map(|&x| {
            let mut acc = T::zero();
            for (i, &(xi, fi)) in phi.iter().enumerate() {
                if fi == T::zero() {
                    continue;
                }
                let w = if i == 0 || i == last {
                    T::lit(0.5)
                } else {
                    T::one()
                };
                acc = acc + w * fi * g1(alpha, EvalPoint::new((x - xi).abs(), t)?);
            }
            Ok((x, acc * h))
        })
        .collect()
}
