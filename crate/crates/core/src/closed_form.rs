//! Elementary closed forms for the one- and three-dimensional fundamental
//! solutions, their analytic derivatives, and the Fourier-space solution.
//!
//! Everything is evaluated in the similarity variables `ρ = r/t`, `q = ρ^α`,
//! with `c = cos(πα/2)`, `s = sin(πα/2)` and the denominator written as
//! `D(q) = (q + c)² + s²`, which is bounded below by `s² > 0` without
//! cancellation.

use crate::domain::{EvalPoint, Order};
use crate::error::{Error, Result};
use crate::scalar::{cos_pi, sin_pi, Real};
use crate::special_fn::mittag_leffler::{MittagLeffler, MlConfig};

#[derive(Debug, Clone, Copy)]
struct Scaled<T> {
    alpha: T,
    t: T,
    rho: T,
    q: T,
    c: T,
    s: T,
    d: T,
}

impl<T: Real> Scaled<T> {
    fn new(alpha: Order<T>, p: &EvalPoint<T>) -> Self {
        let a = alpha.value();
        let rho = p.rho();
        let q = rho.powf(a);
        let half = a * T::lit(0.5);
        let c = cos_pi(half);
        let s = sin_pi(half);
        let d = (q + c) * (q + c) + s * s;
        Self {
            alpha: a,
            t: p.t(),
            rho,
            q,
            c,
            s,
            d,
        }
    }

    // N(q) = −(α − 1) + 2cq + (1 + α)q²
    fn numer3(&self) -> T {
        let two = T::lit(2.0);
        -(self.alpha - T::one()) + self.q * (two * self.c + (T::one() + self.alpha) * self.q)
    }
}

/// `G_{α,1}(r, t) = sin(πα/2) / (π t) · ρ^{α−1} / D(q)`; reduces to the Cauchy
/// kernel `t / (π (r² + t²))` at `α = 1`.
pub fn g1<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> T {
    let v = Scaled::new(alpha, &p);
    v.s / (T::PI() * v.t) * v.rho.powf(v.alpha - T::one()) / v.d
}

/// `∂G_{α,1}/∂r = −sin(πα/2)/(π t²) · ρ^{α−2} N(q) / D(q)²`.
///
/// At `r = 0` the derivative exists only for `α = 1`, where it vanishes.
pub fn g1_dr<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> Result<T> {
    if p.r() == T::zero() {
        return if alpha.is_cauchy() {
            Ok(T::zero())
        } else {
            Err(Error::OriginSingularity(alpha.value().to_f64_lossy()))
        };
    }
    let v = Scaled::new(alpha, &p);
    Ok(-v.s / (T::PI() * v.t * v.t) * v.rho.powf(v.alpha - T::lit(2.0)) * v.numer3() / (v.d * v.d))
}

/// `∂G_{α,1}/∂t = −α sin(πα/2)/(π t²) · ρ^{α−1} (1 − q²) / D(q)²`.
pub fn g1_dt<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> T {
    let v = Scaled::new(alpha, &p);
    -v.alpha * v.s / (T::PI() * v.t * v.t) * v.rho.powf(v.alpha - T::one()) * (T::one() - v.q * v.q)
        / (v.d * v.d)
}

/// `G_{α,3}(r, t) = sin(πα/2)/(2π²) · N(q)/D(q)² · ρ^{α−3} / t³`.
///
/// Unbounded at the origin for `1 < α < 2`. At `α = 1` the expression is the
/// three-dimensional Poisson kernel `t / (π² (r² + t²)²)`, finite everywhere.
pub fn g3<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> Result<T> {
    let t3 = p.t() * p.t() * p.t();
    if alpha.is_cauchy() {
        // N ρ^{−2} = 2 exactly when α = 1.
        let rho = p.rho();
        let d = T::one() + rho * rho;
        return Ok(T::one() / (T::PI() * T::PI() * t3 * d * d));
    }
    if p.r() == T::zero() {
        return Err(Error::OriginDivergence {
            n: 3,
            alpha: alpha.value().to_f64_lossy(),
        });
    }
    let v = Scaled::new(alpha, &p);
    let two_pi2 = T::lit(2.0) * T::PI() * T::PI();
    Ok(v.s / two_pi2 * v.numer3() / (v.d * v.d) * v.rho.powf(v.alpha - T::lit(3.0)) / t3)
}

/// Numerator `N(q)` of `G_{α,3}`, which carries its sign, together with the
/// sum of the magnitudes of its three terms (the cancellation scale).
pub(crate) fn g3_numerator<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> (T, T) {
    let v = Scaled::new(alpha, &p);
    let two = T::lit(2.0);
    let scale =
        (v.alpha - T::one()).abs() + two * v.c.abs() * v.q + (T::one() + v.alpha) * v.q * v.q;
    (v.numer3(), scale)
}

/// `G_{α,3} = −(1/(2πr)) ∂G_{α,1}/∂r`.
pub fn g3_via_g1_spatial<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> Result<T> {
    if p.r() == T::zero() {
        return Err(Error::OriginSingularity(alpha.value().to_f64_lossy()));
    }
    Ok(-g1_dr(alpha, p)? / (T::lit(2.0) * T::PI() * p.r()))
}

/// `G_{α,3} = (1/(2πr²)) (G_{α,1} + t ∂G_{α,1}/∂t)`.
pub fn g3_via_g1_temporal<T: Real>(alpha: Order<T>, p: EvalPoint<T>) -> Result<T> {
    if p.r() == T::zero() {
        return Err(Error::OriginSingularity(alpha.value().to_f64_lossy()));
    }
    let r = p.r();
    Ok((g1(alpha, p) + p.t() * g1_dt(alpha, p)) / (T::lit(2.0) * T::PI() * r * r))
}

/// Fourier-space solution `Ĝ(κ, t) = E_α(−|κ|^α t^α)`; exactly 1 at `t = 0`.
pub fn g_hat<T: Real>(alpha: Order<T>, kappa_abs: T, t: T) -> Result<T> {
    if !(kappa_abs >= T::zero() && t >= T::zero()) {
        return Err(Error::InvalidArgument(
            "|kappa| and t must be finite and >= 0".into(),
        ));
    }
    if t == T::zero() {
        return Ok(T::one());
    }
    let ml = MittagLeffler::new(alpha.value(), MlConfig::default())?;
    Ok(ml.eval((kappa_abs * t).powf(alpha.value()))?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pt(r: f64, t: f64) -> EvalPoint<f64> {
        EvalPoint::new(r, t).unwrap()
    }
    fn ord(a: f64) -> Order<f64> {
        Order::new(a).unwrap()
    }

    #[test]
    fn g1_examples() {
        assert!((g1(ord(1.0), pt(0.0, 1.0)) - 1.0 / PI).abs() < 1e-16);
        assert_eq!(g1(ord(1.5), pt(0.0, 1.0)), 0.0);
        let h = 0.5f64.sqrt();
        let expect = h / (2.0 - 2f64.sqrt()) / PI;
        assert!((g1(ord(1.5), pt(1.0, 1.0)) - expect).abs() < 1e-15);
        assert!((expect - 0.38423402213117).abs() < 1e-13);
    }

    #[test]
    fn g3_examples() {
        let h = 0.5f64.sqrt();
        let expect = h / (2.0 * PI * PI) / (2.0 - 2f64.sqrt());
        let v = g3(ord(1.5), pt(1.0, 1.0)).unwrap();
        assert!((v - expect).abs() < 1e-15);
        assert!((v - 0.0611528).abs() < 1e-7);
        assert!(g3(ord(1.5), pt(0.5, 1.0)).unwrap() < 0.0);
        assert!(matches!(
            g3(ord(1.5), pt(0.0, 1.0)),
            Err(Error::OriginDivergence { n: 3, .. })
        ));
        assert!((g3(ord(1.0), pt(0.0, 1.0)).unwrap() - 1.0 / (PI * PI)).abs() < 1e-16);
    }

    #[test]
    fn cauchy_slope_at_center() {
        assert_eq!(g1_dr(ord(1.0), pt(0.0, 1.0)).unwrap(), 0.0);
        assert!(g1_dr(ord(1.0), pt(1e-9, 1.0)).unwrap().abs() < 1e-8);
        assert!(matches!(
            g1_dr(ord(1.5), pt(0.0, 1.0)),
            Err(Error::OriginSingularity(_))
        ));
    }

    #[test]
    fn g_hat_initial_data() {
        assert_eq!(g_hat(ord(1.5), 3.7, 0.0).unwrap(), 1.0);
        let v = g_hat(ord(1.0), 2.0, 0.7).unwrap();
        assert!((v - (-1.4f64).exp()).abs() < 1e-15);
        // The one-sided slope behaves like h^{α−1} κ^α / Γ(1 + α).
        let h = 1e-4;
        for (a, k) in [(1.5, 0.2), (1.9, 1.0)] {
            let slope = (g_hat(ord(a), k, h).unwrap() - 1.0) / h;
            assert!(slope.abs() <= 1e-3, "{slope}");
        }
        let s1 = (g_hat(ord(1.5), 3.7, 1e-4).unwrap() - 1.0) / 1e-4;
        let s2 = (g_hat(ord(1.5), 3.7, 1e-6).unwrap() - 1.0) / 1e-6;
        assert!((s1 / s2 - 10.0).abs() < 0.01);
    }

    #[test]
    fn generic_f32() {
        let a = Order::new(1.5f32).unwrap();
        let p = EvalPoint::new(1.0f32, 1.0).unwrap();
        assert!((g1(a, p) - 0.384_234).abs() < 1e-6);
    }
}
