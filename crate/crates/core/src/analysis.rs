//! Derived quantities: zero crossings and maxima, phase and gravity-center
//! velocities, moments, and the sign structure of the 3D solution.

use crate::closed_form::{g1, g3, g3_numerator};
use crate::domain::{Dimension, EvalPoint, Order};
use crate::error::{Error, Result};
use crate::integrate::{adaptive, Rule};
use crate::optimize::golden_section_max;
use crate::scalar::{cos_pi, sin_pi, Real};

/// Scaled zero crossing `z_α` of `G_{α,3}`, which is also the maximum
/// location of `G_{α,1}` at `t = 1`. Defined on `[1, 2]`; `z_1 = 0`, `z_2 = 1`.
pub fn zero_crossing_z<T: Real>(alpha: T) -> Result<T> {
    if !(alpha >= T::one() && alpha <= T::lit(2.0)) {
        return Err(Error::InvalidOrder {
            alpha: alpha.to_f64_lossy(),
            range: "[1, 2]",
        });
    }
    let half = alpha * T::lit(0.5);
    let c = cos_pi(half);
    let s = sin_pi(half);
    // α² − s² >= 0 on [1, 2]; clamp the rounding at α = 1.
    let disc = (alpha * alpha - s * s).max(T::zero()).sqrt();
    Ok(((disc - c) / (T::one() + alpha)).powf(alpha.recip()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Maximum,
    Minimum,
    ZeroCrossing,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremumReport<T> {
    /// Radius of the extremum; `0` only in the Cauchy case `α = 1`.
    pub location: T,
    pub value: T,
    pub kind: ExtremumKind,
}

// Bracket tolerance for the 3D maximum, in units of t.
const MAX_LOCATION_TOL: f64 = 1e-10;

/// `c(α, 3)`: maximum location of `G_{α,3}(·, 1)`, right of the zero crossing.
fn max_location_3d<T: Real>(alpha: Order<T>) -> Result<T> {
    let z = zero_crossing_z(alpha.value())?;
    let mut failure = None;
    let (x, _) = golden_section_max(
        |r: T| match EvalPoint::new(r, T::one()).and_then(|p| g3(alpha, p)) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                T::neg_infinity()
            }
        },
        z,
        T::lit(10.0) * z,
        T::lit(MAX_LOCATION_TOL),
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(x),
    }
}

/// Global maximum of `G_{α,n}(·, t)` for `n ∈ {1, 3}`.
///
/// Both locations scale linearly in `t`; `n = 2` has several extrema and is
/// refused.
pub fn max_location<T: Real>(alpha: Order<T>, n: Dimension, t: T) -> Result<ExtremumReport<T>> {
    let at = |r: T| EvalPoint::new(r, t);
    match n {
        Dimension::Two => Err(Error::UnsupportedDimension(2)),
        Dimension::One => {
            let location = zero_crossing_z(alpha.value())? * t;
            Ok(ExtremumReport {
                location,
                value: g1(alpha, at(location)?),
                kind: ExtremumKind::Maximum,
            })
        }
        Dimension::Three => {
            let location = if alpha.is_cauchy() {
                T::zero()
            } else {
                max_location_3d(alpha)? * t
            };
            Ok(ExtremumReport {
                location,
                value: g3(alpha, at(location)?)?,
                kind: ExtremumKind::Maximum,
            })
        }
    }
}

/// Phase velocity `v_p = d r*/dt`, constant in time.
pub fn phase_velocity<T: Real>(alpha: Order<T>, n: Dimension) -> Result<T> {
    match n {
        Dimension::One => zero_crossing_z(alpha.value()),
        Dimension::Two => Err(Error::UnsupportedDimension(2)),
        Dimension::Three => Ok(max_location(alpha, n, T::one())?.location),
    }
}

/// Gravity-center velocity `v_g = 2 / (α sin(π/α))` of the half-line mass of
/// `G_{α,1}`; diverges as `α → 1`.
pub fn gravity_center_velocity<T: Real>(alpha: Order<T>) -> Result<T> {
    let a = alpha.require_open()?.value();
    Ok(T::lit(2.0) / (a * sin_pi(a.recip())))
}

/// Sampled velocity curve with strictly increasing orders in `[1, 2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VelocityCurve<T> {
    samples: Vec<(T, T)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VelocityKind {
    Phase,
    Gravity,
}

impl<T: Real> VelocityCurve<T> {
    pub fn new(samples: Vec<(T, T)>) -> Result<Self> {
        for (i, &(a, _)) in samples.iter().enumerate() {
            Order::new(a)?;
            if i > 0 && !(a > samples[i - 1].0) {
                return Err(Error::InvalidArgument(format!(
                    "orders must be strictly increasing (index {i})"
                )));
            }
        }
        Ok(Self { samples })
    }

    /// Samples the requested velocity at each order.
    pub fn compute(kind: VelocityKind, n: Dimension, alphas: &[T]) -> Result<Self> {
        let samples = alphas
            .iter()
            .map(|&a| {
                let order = Order::new(a)?;
                let v = match kind {
                    VelocityKind::Phase => phase_velocity(order, n)?,
                    VelocityKind::Gravity => {
                        if n != Dimension::One {
                            return Err(Error::UnsupportedDimension(n.n()));
                        }
                        gravity_center_velocity(order)?
                    }
                };
                Ok((a, v))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(samples)
    }

    pub fn samples(&self) -> &[(T, T)] {
        &self.samples
    }

    /// Sample with the largest velocity.
    pub fn argmax(&self) -> Option<(T, T)> {
        self.samples
            .iter()
            .copied()
            .fold(None, |best: Option<(T, T)>, s| match best {
                Some(b) if b.1 >= s.1 => Some(b),
                _ => Some(s),
            })
    }

    /// Non-decreasing up to the maximum and non-increasing after it.
    pub fn is_unimodal(&self) -> bool {
        let v: Vec<T> = self.samples.iter().map(|s| s.1).collect();
        let Some(peak) = (0..v.len()).max_by(|&i, &j| v[i].partial_cmp(&v[j]).unwrap()) else {
            return true;
        };
        v[..=peak].windows(2).all(|w| w[1] >= w[0]) && v[peak..].windows(2).all(|w| w[1] <= w[0])
    }
}

/// Orders `k/steps` of a uniform grid on `[lo, hi]`.
pub fn alpha_grid<T: Real>(lo: T, hi: T, points: usize) -> Vec<T> {
    if points <= 1 {
        return vec![lo];
    }
    let m = T::from_usize_lossy(points - 1);
    (0..points)
        .map(|i| lo + (hi - lo) * T::from_usize_lossy(i) / m)
        .collect()
}

/// Half-line moment `∫_0^∞ r^β G_{α,1}(r, t) dr = t^β/α · sin(πβ/2) / sin(πβ/α)`
/// for `−1 < β < α`; `β = 0` gives the half mass `1/2`.
pub fn moment_1d<T: Real>(alpha: Order<T>, beta: T, t: T) -> Result<T> {
    let a = alpha.value();
    if !(beta > -T::one() && beta < a) {
        return Err(Error::MomentOutOfRange {
            beta: beta.to_f64_lossy(),
            lo: -1.0,
            hi: a.to_f64_lossy(),
        });
    }
    check_time(t)?;
    if beta == T::zero() {
        return Ok(T::lit(0.5));
    }
    Ok(t.powf(beta) / a * sin_pi(beta * T::lit(0.5)) / sin_pi(beta / a))
}

/// Radial moment `I_{α,β}(t) = ∫_0^∞ r^β G_{α,3}(r, t) dr` for
/// `2 − α < β < 2 + α`. `I_{α,1} ≡ 0`, `I_{α,2} ≡ 1/(4π)`.
pub fn moment_3d<T: Real>(alpha: Order<T>, beta: T, t: T) -> Result<T> {
    let a = alpha.value();
    let two = T::lit(2.0);
    if !(beta > two - a && beta < two + a) {
        return Err(Error::MomentOutOfRange {
            beta: beta.to_f64_lossy(),
            lo: (two - a).to_f64_lossy(),
            hi: (two + a).to_f64_lossy(),
        });
    }
    check_time(t)?;
    if beta == T::one() {
        return Ok(T::zero());
    }
    if beta == two {
        return Ok((T::lit(4.0) * T::PI()).recip());
    }
    Ok(
        t.powf(beta - two) * (beta - T::one()) / (two * a * T::PI()) * sin_pi(beta * T::lit(0.5))
            / sin_pi((two - beta) / a),
    )
}

fn check_time<T: Real>(t: T) -> Result<()> {
    if t.is_finite() && t > T::zero() {
        Ok(())
    } else {
        Err(Error::InvalidPoint(format!(
            "t = {} must be finite and > 0",
            t.to_f64_lossy()
        )))
    }
}

// Numerical moments split [0, ∞) in scaled radius at these points; the end
// pieces use the convergent power series of the closed forms.
const RHO_LOW: f64 = 1e-6;
const RHO_HIGH: f64 = 1e6;
const SERIES_TERMS: usize = 16;

// U_j(x): 1/(1 − 2xz + z²) = Σ U_j(x) z^j.
fn chebyshev_u<T: Real>(x: T, count: usize) -> Vec<T> {
    let mut u = Vec::with_capacity(count);
    for j in 0..count {
        let v = match j {
            0 => T::one(),
            1 => T::lit(2.0) * x,
            _ => T::lit(2.0) * x * u[j - 1] - u[j - 2],
        };
        u.push(v);
    }
    u
}

fn convolve<T: Real>(a: &[T], b: &[T]) -> Vec<T> {
    (0..a.len())
        .map(|j| (0..=j).fold(T::zero(), |acc, i| acc + a[i] * b[j - i]))
        .collect()
}

fn middle<T: Real>(f: impl FnMut(T) -> T, tol: T) -> Result<T> {
    let out = adaptive(
        Rule::GaussKronrod15,
        f,
        T::lit(RHO_LOW).ln(),
        T::lit(RHO_HIGH).ln(),
        tol,
        tol,
        4000,
    );
    if !out.converged {
        return Err(Error::NonConvergence {
            what: "moment quadrature",
            detail: format!("error estimate {:e}", out.error.to_f64_lossy()),
        });
    }
    Ok(out.value)
}

/// `∫_0^∞ r^β G_{α,1}(r, t) dr` by quadrature of the closed form, with series
/// for `r/t < 10⁻⁶` and the algebraic tail beyond `r/t = 10⁶`.
pub fn moment_1d_numeric<T: Real>(alpha: Order<T>, beta: T, t: T) -> Result<T> {
    moment_1d(alpha, beta, t)?;
    let a = alpha.value();
    let half = a * T::lit(0.5);
    let (c, s) = (cos_pi(half), sin_pi(half));
    let u = chebyshev_u(-c, SERIES_TERMS);
    let (lo, hi) = (T::lit(RHO_LOW), T::lit(RHO_HIGH));
    let pref = s / T::PI();
    // G1(ρ, 1) = (s/π) Σ U_j ρ^{α−1+αj} near 0 and (s/π) Σ U_j ρ^{−α−1−αj} at ∞.
    let mut head = T::zero();
    let mut tail = T::zero();
    for (j, &uj) in u.iter().enumerate() {
        let aj = a * T::from_usize_lossy(j);
        let e0 = beta + a + aj;
        head = head + uj * lo.powf(e0) / e0;
        let e1 = a + aj - beta;
        tail = tail + uj * hi.powf(-e1) / e1;
    }
    let body = middle(
        |x: T| {
            let rho = x.exp();
            rho.powf(beta + T::one()) * g1(alpha, EvalPoint::new(rho, T::one()).unwrap())
        },
        T::lit(1e-13),
    )?;
    Ok(t.powf(beta) * (pref * (head + tail) + body))
}

/// `∫_0^∞ r^β G_{α,3}(r, t) dr` by quadrature of the closed form, with series
/// for the end pieces as in [`moment_1d_numeric`]. Requires `1 < α < 2`.
pub fn moment_3d_numeric<T: Real>(alpha: Order<T>, beta: T, t: T) -> Result<T> {
    alpha.require_open()?;
    moment_3d(alpha, beta, t)?;
    let a = alpha.value();
    let two = T::lit(2.0);
    let half = a * T::lit(0.5);
    let (c, s) = (cos_pi(half), sin_pi(half));
    let u = chebyshev_u(-c, SERIES_TERMS);
    let v = convolve(&u, &u);
    // N(q) = n0 + n1 q + n2 q²
    let (n0, n1, n2) = (-(a - T::one()), two * c, T::one() + a);
    let at = |j: isize| if j < 0 { T::zero() } else { v[j as usize] };
    let (lo, hi) = (T::lit(RHO_LOW), T::lit(RHO_HIGH));
    let pref = s / (two * T::PI() * T::PI());
    let mut head = T::zero();
    let mut tail = T::zero();
    for j in 0..SERIES_TERMS {
        let ji = j as isize;
        let aj = a * T::from_usize_lossy(j);
        // near 0: N/D² = Σ (n0 V_j + n1 V_{j−1} + n2 V_{j−2}) q^j
        let w0 = n0 * at(ji) + n1 * at(ji - 1) + n2 * at(ji - 2);
        let e0 = beta + a - two + aj;
        head = head + w0 * lo.powf(e0) / e0;
        // at ∞: N/D² = q^{−2} Σ (n2 V_j + n1 V_{j−1} + n0 V_{j−2}) q^{−j}
        let w1 = n2 * at(ji) + n1 * at(ji - 1) + n0 * at(ji - 2);
        let e1 = a + two + aj - beta;
        tail = tail + w1 * hi.powf(-e1) / e1;
    }
    let body = middle(
        |x: T| {
            let rho = x.exp();
            rho.powf(beta + T::one()) * g3(alpha, EvalPoint::new(rho, T::one()).unwrap()).unwrap()
        },
        T::lit(1e-13),
    )?;
    Ok(t.powf(beta - two) * (pref * (head + tail) + body))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

// Relative cancellation level below which G_{α,3} counts as zero.
const SIGN_ZERO_TOL: f64 = 1e-9;

/// Sign of `G_{α,3}(r, t)` on a radial grid. A point is `Zero` when the
/// numerator cancels to within `10⁻⁹` of the size of its terms; `r = 0`
/// is `Negative` (the solution tends to `−∞` there for `1 < α < 2`).
pub fn sign_profile_3d<T: Real>(alpha: Order<T>, t: T, r_grid: &[T]) -> Result<Vec<Sign>> {
    r_grid
        .iter()
        .map(|&r| {
            let (num, scale) = g3_numerator(alpha, EvalPoint::new(r, t)?);
            Ok(if num.abs() <= T::lit(SIGN_ZERO_TOL) * scale {
                Sign::Zero
            } else if num < T::zero() {
                Sign::Negative
            } else {
                Sign::Positive
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ord(a: f64) -> Order<f64> {
        Order::new(a).unwrap()
    }

    #[test]
    fn zero_crossing_values() {
        assert_eq!(zero_crossing_z(1.0f64).unwrap(), 0.0);
        assert!((zero_crossing_z(2.0f64).unwrap() - 1.0).abs() < 1e-15);
        assert!((zero_crossing_z(1.5f64).unwrap() - 0.8703651925877162).abs() < 1e-15);
        assert!(zero_crossing_z(2.5f64).is_err());
    }

    #[test]
    fn maxima() {
        let m = max_location(ord(1.5), Dimension::One, 2.0).unwrap();
        assert!((m.location - 2.0 * 0.8703651925877162).abs() < 1e-14);
        assert_eq!(m.kind, ExtremumKind::Maximum);
        assert!(max_location(ord(1.5), Dimension::Two, 1.0).is_err());
        let c = max_location(ord(1.5), Dimension::Three, 1.0).unwrap();
        assert!(c.location > zero_crossing_z(1.5).unwrap() && c.value > 0.0);
        assert_eq!(
            max_location(ord(1.0), Dimension::Three, 1.0)
                .unwrap()
                .location,
            0.0
        );
    }

    #[test]
    fn velocities() {
        assert_eq!(phase_velocity(ord(1.0), Dimension::One).unwrap(), 0.0);
        let vg = gravity_center_velocity(ord(1.5)).unwrap();
        assert!((vg - 1.539600717839002).abs() < 1e-14);
        assert!((vg - 2.0 * moment_1d(ord(1.5), 1.0, 1.0).unwrap()).abs() < 1e-15);
        assert!(gravity_center_velocity(ord(1.05)).unwrap() > 10.0);
        assert!(gravity_center_velocity(ord(1.0)).is_err());
    }

    #[test]
    fn moment_constants() {
        assert_eq!(moment_1d(ord(1.3), 0.0, 4.0).unwrap(), 0.5);
        let m = moment_1d(ord(1.5), 1.0, 1.0).unwrap();
        assert!((m - 1.0 / (1.5 * (PI / 1.5).sin())).abs() < 1e-15);
        assert!(matches!(
            moment_1d(ord(1.2), 1.5, 1.0),
            Err(Error::MomentOutOfRange { .. })
        ));
        assert_eq!(moment_3d(ord(1.7), 1.0, 3.0).unwrap(), 0.0);
        assert_eq!(moment_3d(ord(1.7), 2.0, 3.0).unwrap(), 1.0 / (4.0 * PI));
        let i3 = moment_3d(ord(1.5), 3.0, 1.0).unwrap();
        assert!((i3 - 1.0 / (1.5 * PI * (PI / 1.5).sin())).abs() < 1e-15);
        assert!(moment_3d(ord(1.5), 0.4, 1.0).is_err());
    }

    #[test]
    fn numeric_moments() {
        let a = ord(1.5);
        let n = moment_1d_numeric(a, 1.0, 2.0).unwrap();
        let f = moment_1d(a, 1.0, 2.0).unwrap();
        assert!((n / f - 1.0).abs() < 1e-8, "{n} {f}");
        let n = moment_3d_numeric(a, 3.0, 1.0).unwrap();
        let f = moment_3d(a, 3.0, 1.0).unwrap();
        assert!((n / f - 1.0).abs() < 1e-8, "{n} {f}");
    }

    #[test]
    fn signs() {
        let a = ord(1.5);
        let z = zero_crossing_z(1.5).unwrap();
        let s = sign_profile_3d(a, 2.0, &[0.0, 0.5, 2.0 * z, 3.0]).unwrap();
        assert_eq!(
            s,
            vec![Sign::Negative, Sign::Negative, Sign::Zero, Sign::Positive]
        );
    }

    #[test]
    fn curve_helpers() {
        let c = VelocityCurve::new(vec![(1.1, 1.0), (1.2, 2.0), (1.3, 1.5)]).unwrap();
        assert_eq!(c.argmax(), Some((1.2, 2.0)));
        assert!(c.is_unimodal());
        assert!(VelocityCurve::new(vec![(1.2, 1.0), (1.1, 1.0)]).is_err());
        assert!(VelocityCurve::new(vec![(2.0f64, 1.0)]).is_err());
        assert_eq!(alpha_grid(1.0, 2.0, 3), vec![1.0, 1.5, 2.0]);
    }
}
