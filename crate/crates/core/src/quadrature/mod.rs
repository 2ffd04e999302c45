//! Radial Fourier-integral route to the fundamental solution, valid for
//! `n = 1, 2, 3`, and the only route for `n = 2`.
//!
//! With `u = τr` and `ρ = r/t`,
//!
//! ```text
//! n = 1:  G = 1/(π r)    ∫ E_α(−(u/ρ)^α) cos u      du
//! n = 2:  G = 1/(2π r²)  ∫ E_α(−(u/ρ)^α) u J_0(u)   du
//! n = 3:  G = 1/(2π² r³) ∫ E_α(−(u/ρ)^α) u sin u    du
//! ```
//!
//! The exponentially damped oscillating part of `E_α` has elementary
//! transforms and is added in closed form. The remaining smooth amplitude
//! decays like `u^{−α}`, so the integrals converge only through cancellation:
//! `[0, ∞)` is cut at the zeros of the kernel, each lobe is integrated
//! adaptively, and the alternating lobe series is summed with a Levin
//! t-transform.

pub mod ivp;
pub mod levin;

use std::cell::Cell;

use num_complex::Complex;

use crate::domain::{Dimension, EvalPoint, Order};
use crate::error::{Error, Result};
use crate::integrate::adaptive;
use crate::scalar::{cos_pi, sin_pi, Real};
use crate::special_fn::bessel::{j0, j0_zero};
use crate::special_fn::gamma::gamma;
use crate::special_fn::mittag_leffler::{MittagLeffler, MlConfig};

pub use crate::integrate::Rule as PanelRule;
pub use ivp::solve_ivp_1d;
pub use levin::levin_t;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    /// Lobes allowed before the accelerated sum must have settled.
    pub max_lobes: usize,
    /// Order of the Levin t-transform.
    pub accel_order: usize,
    pub panel_rule: PanelRule,
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        Self {
            abs_tol: T::tol_floor(1e-8),
            rel_tol: T::tol_floor(1e-8),
            max_lobes: 10_000,
            accel_order: 8,
            panel_rule: PanelRule::GaussKronrod15,
        }
    }
}

impl<T: Real> QuadratureConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > T::zero() && self.rel_tol > T::zero()) {
            return Err(Error::InvalidArgument("tolerances must be > 0".into()));
        }
        if self.max_lobes < 8 {
            return Err(Error::InvalidArgument("max_lobes must be >= 8".into()));
        }
        if self.accel_order < 4 {
            return Err(Error::InvalidArgument("accel_order must be >= 4".into()));
        }
        Ok(())
    }

    fn target(&self, value: T) -> T {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub est_error: T,
    pub lobes_used: usize,
    pub converged: bool,
}

// Kernel h(u) multiplying the amplitude, per dimension.
fn kernel<T: Real>(n: Dimension, u: T) -> T {
    match n {
        Dimension::One => u.cos(),
        Dimension::Two => u * j0(u),
        Dimension::Three => u * u.sin(),
    }
}

// k-th positive zero of the kernel (k >= 1).
fn kernel_zero<T: Real>(n: Dimension, k: usize) -> T {
    let kt = T::from_usize_lossy(k);
    match n {
        Dimension::One => (kt - T::lit(0.5)) * T::PI(),
        Dimension::Two => j0_zero(k),
        Dimension::Three => kt * T::PI(),
    }
}

// Upper bound on ∫|h| over [lo, hi].
fn kernel_mass<T: Real>(n: Dimension, lo: T, hi: T) -> T {
    let len = hi - lo;
    match n {
        Dimension::One => len,
        Dimension::Two => {
            // |J_0(u)| <= min(1, sqrt(2/(πu))) up to a small envelope margin
            let env = (T::lit(2.0) / (T::PI() * lo.max(T::lit(0.1)))).sqrt();
            len * hi * env.min(T::one()) * T::lit(1.1)
        }
        Dimension::Three => len * hi,
    }
}

fn prefactor<T: Real>(n: Dimension, r: T) -> T {
    let pi = T::PI();
    match n {
        Dimension::One => (pi * r).recip(),
        Dimension::Two => (T::lit(2.0) * pi * r * r).recip(),
        Dimension::Three => (T::lit(2.0) * pi * pi * r * r * r).recip(),
    }
}

/// Closed-form transform of the oscillating part `R` of `E_α`.
pub fn residue_transform<T: Real>(alpha: Order<T>, n: Dimension, p: EvalPoint<T>) -> T {
    let al = alpha.value();
    if !(al > T::one()) {
        return T::zero();
    }
    let (r, t) = (p.r(), p.t());
    let inv = al.recip();
    // R(τt) = (2/α) e^{−aτ} cos(bτ)
    let a = -t * cos_pi(inv);
    let b = t * sin_pi(inv);
    let two = T::lit(2.0);
    let pi = T::PI();
    let c = two / al;
    let half = T::lit(0.5);
    match n {
        Dimension::One => {
            let a2 = a * a;
            c / pi * half * (a / (a2 + (b + r) * (b + r)) + a / (a2 + (b - r) * (b - r)))
        }
        Dimension::Three => {
            let f = |w: T| {
                let d = a * a + w * w;
                two * a * w / (d * d)
            };
            c / (two * pi * pi * r) * half * (f(r + b) + f(r - b))
        }
        Dimension::Two => {
            let pc = Complex::new(a, -b);
            let z = pc * pc + Complex::new(r * r, T::zero());
            let v = pc / z.powf(T::lit(1.5));
            c / (two * pi) * v.re
        }
    }
}

fn ml_tolerance<T: Real>(cfg: &QuadratureConfig<T>, pref: T) -> T {
    let floor = T::lit(1e-13).max(T::epsilon() * T::lit(16.0));
    (cfg.abs_tol * T::lit(1e-3) / pref)
        .min(T::lit(1e-10))
        .max(floor)
}

struct Lobe<T> {
    value: T,
    error: T,
}

struct LobeIntegrator<'a, T: Real> {
    ml: &'a MittagLeffler<T>,
    n: Dimension,
    rho: T,
    alpha: T,
    rule: PanelRule,
}

impl<T: Real> LobeIntegrator<'_, T> {
    fn amplitude(&self, u: T, worst: &Cell<T>, fail: &Cell<Option<Error>>) -> T {
        let x = (u / self.rho).powf(self.alpha);
        match self.ml.eval_smooth(x) {
            Ok(m) => {
                if m.est_error > worst.get() {
                    worst.set(m.est_error);
                }
                m.value
            }
            Err(e) => {
                fail.set(Some(e));
                T::nan()
            }
        }
    }

    fn integrate(&self, lo: T, hi: T, tol: T) -> Result<Lobe<T>> {
        let worst = Cell::new(T::zero());
        let fail = Cell::new(None);
        let out = adaptive(
            self.rule,
            |u| self.amplitude(u, &worst, &fail) * kernel(self.n, u),
            lo,
            hi,
            tol,
            T::epsilon() * T::lit(16.0),
            400,
        );
        if let Some(e) = fail.take() {
            return Err(e);
        }
        let ml_err = worst.get() * kernel_mass(self.n, lo, hi);
        Ok(Lobe {
            value: out.value,
            error: out.error + ml_err,
        })
    }
}

/// Lobe integrals `∫_{z_{k−1}}^{z_k} A(u) h(u) du` of the smooth amplitude,
/// `z_0 = 0`, for the first `count` lobes. Diagnostic view of the series the
/// accelerator sums.
pub fn lobe_series<T: Real>(
    alpha: Order<T>,
    n: Dimension,
    p: EvalPoint<T>,
    count: usize,
) -> Result<Vec<T>> {
    if p.r() == T::zero() {
        return Err(Error::InvalidPoint("lobe series needs r > 0".into()));
    }
    let cfg = QuadratureConfig::<T>::default();
    let ml = MittagLeffler::new(
        alpha.value(),
        MlConfig {
            tol: ml_tolerance(&cfg, prefactor(n, p.r())),
            ..MlConfig::default()
        },
    )?;
    let li = LobeIntegrator {
        ml: &ml,
        n,
        rho: p.rho(),
        alpha: alpha.value(),
        rule: cfg.panel_rule,
    };
    let mut lo = T::zero();
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let hi = kernel_zero(n, k);
        out.push(li.integrate(lo, hi, T::tol_floor(1e-14))?.value);
        lo = hi;
    }
    Ok(out)
}

/// Evaluates `G_{α,n}(r, t)` from the radial Fourier integral and reports the
/// outcome even when the accelerated sum has not settled.
pub fn g_integral_report<T: Real>(
    alpha: Order<T>,
    n: Dimension,
    p: EvalPoint<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<QuadResult<T>> {
    cfg.validate()?;
    if n != Dimension::One {
        alpha.require_open()?;
    }
    if p.r() == T::zero() {
        return match n {
            Dimension::One => origin_integral(alpha, p.t(), cfg),
            _ => Err(Error::OriginDivergence {
                n: n.n(),
                alpha: alpha.value().to_f64_lossy(),
            }),
        };
    }
    let pref = prefactor(n, p.r());
    let ml = MittagLeffler::new(
        alpha.value(),
        MlConfig {
            tol: ml_tolerance(cfg, pref),
            ..MlConfig::default()
        },
    )?;
    let li = LobeIntegrator {
        ml: &ml,
        n,
        rho: p.rho(),
        alpha: alpha.value(),
        rule: cfg.panel_rule,
    };
    let residue = residue_transform(alpha, n, p);
    let residue_err = T::lit(16.0) * T::epsilon() * residue.abs();

    let order = cfg.accel_order;
    let mut terms: Vec<T> = Vec::new();
    let mut sums: Vec<T> = Vec::new();
    let mut cum_err: Vec<T> = Vec::new();
    let mut history: Vec<T> = Vec::new();
    let mut best = QuadResult {
        value: T::nan(),
        est_error: T::infinity(),
        lobes_used: 0,
        converged: false,
    };
    let mut lo = T::zero();
    let mut lobe_tol = cfg.abs_tol * T::lit(1e-2) / pref;
    for k in 1..=cfg.max_lobes {
        let hi = kernel_zero(n, k);
        let lobe = li.integrate(lo, hi, lobe_tol)?;
        lo = hi;
        let prev_sum = sums.last().copied().unwrap_or(T::zero());
        let prev_err = cum_err.last().copied().unwrap_or(T::zero());
        terms.push(lobe.value);
        sums.push(prev_sum + lobe.value);
        cum_err.push(prev_err + lobe.error);
        if k == 1 {
            // Lobes need not be resolved below the working precision of the sum.
            lobe_tol = lobe_tol.max(T::lit(8.0) * T::epsilon() * lobe.value.abs());
        }
        let s = *sums.last().unwrap();
        let e = *cum_err.last().unwrap();

        // Exponentially decaying lobes: plain summation has converged.
        if k > 2 && lobe.value.abs() <= T::epsilon() * s.abs() {
            let value = pref * s + residue;
            let est = pref * (e + lobe.value.abs()) + residue_err;
            return Ok(QuadResult {
                value,
                est_error: est,
                lobes_used: k,
                converged: est <= cfg.target(value),
            });
        }
        let Some((limit, gamma)) = levin_t(&sums, &terms, order) else {
            continue;
        };
        history.push(limit);
        if history.len() < 3 {
            continue;
        }
        let h = history.len();
        let d = (history[h - 1] - history[h - 2])
            .abs()
            .max((history[h - 2] - history[h - 3]).abs());
        // Σγ_j = 1, so the error shared by every sum in the window passes
        // through unamplified; only the in-window increments are weighted.
        let k0 = sums.len() - order - 1;
        let common = cum_err[k0];
        let prop: T = gamma.iter().enumerate().fold(common, |acc, (j, g)| {
            acc + g.abs() * (cum_err[k0 + j] - common)
        });
        let value = pref * limit + residue;
        let est = pref * (d + prop) + residue_err;
        if est < best.est_error {
            best = QuadResult {
                value,
                est_error: est,
                lobes_used: k,
                converged: false,
            };
        }
        if est <= cfg.target(value) {
            return Ok(QuadResult {
                value,
                est_error: est,
                lobes_used: k,
                converged: true,
            });
        }
    }
    best.lobes_used = cfg.max_lobes;
    Ok(best)
}

/// Evaluates `G_{α,n}(r, t)` from the radial Fourier integral.
///
/// `r = 0` is accepted for `n = 1` only. Fails with `NonConvergence` when the
/// accelerated lobe sum does not meet the tolerance within `max_lobes`.
pub fn g_integral<T: Real>(
    alpha: Order<T>,
    n: Dimension,
    p: EvalPoint<T>,
    cfg: &QuadratureConfig<T>,
) -> Result<QuadResult<T>> {
    let res = g_integral_report(alpha, n, p, cfg)?;
    if res.converged {
        Ok(res)
    } else {
        Err(Error::NonConvergence {
            what: "oscillatory lobe series",
            detail: format!(
                "n = {}, alpha = {}, r = {}, t = {}: best error estimate {:e} after {} lobes",
                n.n(),
                alpha.value().to_f64_lossy(),
                p.r().to_f64_lossy(),
                p.t().to_f64_lossy(),
                res.est_error.to_f64_lossy(),
                res.lobes_used
            ),
        })
    }
}

// n = 1, r = 0: (1/π) ∫_0^∞ E_α(−(τt)^α) dτ, non-oscillatory apart from the
// damped part. The smooth part is integrated up to U and its algebraic tail
// is integrated term by term.
fn origin_integral<T: Real>(
    alpha: Order<T>,
    t: T,
    cfg: &QuadratureConfig<T>,
) -> Result<QuadResult<T>> {
    let al = alpha.value();
    let pi = T::PI();
    let tol = cfg.abs_tol * pi * T::lit(0.1);
    if alpha.is_cauchy() {
        // e^{−τt}; beyond U = 40/t the remaining mass is e^{−40}/t
        let upper = T::lit(40.0) / t;
        let out = adaptive(
            cfg.panel_rule,
            |tau: T| (-tau * t).exp(),
            T::zero(),
            upper,
            tol,
            T::epsilon(),
            200,
        );
        let value = out.value / pi;
        return Ok(QuadResult {
            value,
            est_error: (out.error + T::lit(-40.0).exp() / t) / pi,
            lobes_used: 0,
            converged: out.converged,
        });
    }
    let ml = MittagLeffler::new(
        al,
        MlConfig {
            tol: T::tol_floor(1e-13),
            ..MlConfig::default()
        },
    )?;
    let mut x_u = ml.config().asymptotic_min;
    let (tail_terms, bound) = loop {
        match ml.asymptotic_terms(x_u) {
            Some((terms, b)) if b <= T::tol_floor(1e-15) => break (terms, b),
            _ if x_u > T::lit(1e12) => {
                return Err(Error::NonConvergence {
                    what: "origin tail",
                    detail: "algebraic expansion never reached the target".into(),
                })
            }
            _ => x_u = x_u * T::lit(2.0),
        }
    };
    let upper = x_u.powf(al.recip()) / t;
    let fail = Cell::new(None);
    let worst = Cell::new(T::zero());
    let body = adaptive(
        cfg.panel_rule,
        |tau: T| match ml.eval_smooth((tau * t).powf(al)) {
            Ok(m) => {
                if m.est_error > worst.get() {
                    worst.set(m.est_error);
                }
                m.value
            }
            Err(e) => {
                fail.set(Some(e));
                T::nan()
            }
        },
        T::zero(),
        upper,
        tol,
        T::epsilon() * T::lit(16.0),
        2000,
    );
    if let Some(e) = fail.take() {
        return Err(e);
    }
    // ∫_U^∞ x(τ)^{−k} dτ = U x_U^{−k} / (αk − 1)
    let tail = tail_terms
        .iter()
        .enumerate()
        .fold(T::zero(), |acc, (i, &c)| {
            acc + c / (al * T::from_usize_lossy(i + 1) - T::one())
        })
        * upper;
    let tail_err = bound * upper / (al * T::from_usize_lossy(tail_terms.len() + 1) - T::one());
    let residue = T::lit(2.0) / al * (-cos_pi(al.recip())) / t;
    let value = (body.value + tail + residue) / pi;
    let est = (body.error + worst.get() * upper + tail_err) / pi
        + T::lit(16.0) * T::epsilon() * (body.abs_value + residue.abs()) / pi;
    Ok(QuadResult {
        value,
        est_error: est,
        lobes_used: 0,
        converged: est <= cfg.target(value),
    })
}

/// Value of the fundamental solution at the origin.
///
/// For `1 < α < 2` it vanishes when `n = 1` and is infinite when `n >= 2`
/// (the Mellin integral of `E_α` converges only for `0 < n < α`). At `α = 1`
/// it is the centre of the Poisson kernel, `Γ((n+1)/2) / (π^{(n+1)/2} tⁿ)`.
pub fn g_origin<T: Real>(alpha: Order<T>, n: Dimension, t: T) -> Result<T> {
    if !(t.is_finite() && t > T::zero()) {
        return Err(Error::InvalidPoint(format!(
            "t = {} must be finite and > 0",
            t.to_f64_lossy()
        )));
    }
    let nn = n.as_real::<T>();
    if alpha.is_cauchy() {
        let h = (nn + T::one()) * T::lit(0.5);
        return Ok(gamma(h) / (T::PI().powf(h) * t.powi(n.n() as i32)));
    }
    match n {
        Dimension::One => Ok(T::zero()),
        _ => Err(Error::OriginDivergence {
            n: n.n(),
            alpha: alpha.value().to_f64_lossy(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{g1, g3};
    use std::f64::consts::PI;

    fn ord(a: f64) -> Order<f64> {
        Order::new(a).unwrap()
    }
    fn pt(r: f64, t: f64) -> EvalPoint<f64> {
        EvalPoint::new(r, t).unwrap()
    }

    #[test]
    fn matches_closed_forms() {
        let cfg = QuadratureConfig::default();
        let q1 = g_integral(ord(1.5), Dimension::One, pt(1.0, 1.0), &cfg).unwrap();
        assert!(
            (q1.value - g1(ord(1.5), pt(1.0, 1.0))).abs() < 1e-9,
            "{q1:?}"
        );
        let q3 = g_integral(ord(1.5), Dimension::Three, pt(1.0, 1.0), &cfg).unwrap();
        assert!(
            (q3.value - g3(ord(1.5), pt(1.0, 1.0)).unwrap()).abs() < 1e-9,
            "{q3:?}"
        );
    }

    #[test]
    fn cauchy_case() {
        let cfg = QuadratureConfig::default();
        let q = g_integral(ord(1.0), Dimension::One, pt(0.7, 1.3), &cfg).unwrap();
        assert!(
            (q.value - g1(ord(1.0), pt(0.7, 1.3))).abs() < 1e-10,
            "{q:?}"
        );
        let o = g_integral(ord(1.0), Dimension::One, pt(0.0, 2.0), &cfg).unwrap();
        assert!((o.value - 1.0 / (2.0 * PI)).abs() < 1e-10);
    }

    #[test]
    fn origin() {
        let cfg = QuadratureConfig::default();
        let o = g_integral(ord(1.5), Dimension::One, pt(0.0, 1.0), &cfg).unwrap();
        assert!(o.value.abs() < 1e-9, "{o:?}");
        assert!(matches!(
            g_integral(ord(1.5), Dimension::Two, pt(0.0, 1.0), &cfg),
            Err(Error::OriginDivergence { n: 2, .. })
        ));
        assert_eq!(g_origin(ord(1.5), Dimension::One, 7.3).unwrap(), 0.0);
        assert!((g_origin(ord(1.0), Dimension::One, 2.0).unwrap() - 0.5 / PI).abs() < 1e-16);
        assert!(
            (g_origin(ord(1.0), Dimension::Three, 1.0).unwrap() - 1.0 / (PI * PI)).abs() < 1e-15
        );
        assert!(g_origin(ord(1.5), Dimension::Three, 1.0).is_err());
    }

    #[test]
    fn two_dimensional_is_signed() {
        let cfg = QuadratureConfig::default();
        let v = g_integral(ord(1.5), Dimension::Two, pt(0.3, 1.0), &cfg).unwrap();
        assert!(v.value < 0.0);
        assert!((v.value + 0.1598823397).abs() < 1e-8, "{v:?}");
    }

    #[test]
    fn config_validation() {
        let cfg = QuadratureConfig::<f64> {
            max_lobes: 4,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
        let cfg = QuadratureConfig::<f64> {
            accel_order: 3,
            ..Default::default()
        };
        assert!(g_integral(ord(1.5), Dimension::One, pt(1.0, 1.0), &cfg).is_err());
    }

    #[test]
    fn legendre_panels() {
        let cfg = QuadratureConfig {
            panel_rule: PanelRule::GaussLegendre16,
            ..Default::default()
        };
        let q = g_integral(ord(1.9), Dimension::Three, pt(3.0, 1.0), &cfg).unwrap();
        assert!((q.value - g3(ord(1.9), pt(3.0, 1.0)).unwrap()).abs() < 1e-9);
    }
}
