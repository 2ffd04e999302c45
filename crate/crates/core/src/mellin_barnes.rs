//! Mellin–Barnes route: the fundamental solution as a contour integral of a
//! Gamma-function quotient along the vertical line `Re s = σ`,
//!
//! ```text
//! G(r, t) = r^{−n} L(r/t),
//! L(ρ) = 1/(α π^{n/2}) · 1/(2πi) ∫ Φ(s) ρ^s ds,
//! Φ(s) = Γ(s/α) Γ(1 − s/α) Γ(n/2 − s/2) / (Γ(1 − s) 2^s Γ(s/2)).
//! ```
//!
//! `|Φ(σ + iy)|` decays like `|y|^{(n−1)/2} exp(−π|y|(1/α − 1/2))`, so the
//! line integral converges for every `α < 2`, increasingly slowly as `α → 2`.

use num_complex::Complex;

use crate::domain::{Dimension, EvalPoint, Order};
use crate::error::{Error, Result};
use crate::integrate::{adaptive_from, Rule};
use crate::quadrature::QuadResult;
use crate::scalar::Real;
use crate::special_fn::gamma::log_gamma_complex;

/// Vertical integration line and truncation policy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourConfig<T> {
    /// Abscissa of the line; must lie in `(0, min(α, n))`.
    pub sigma: T,
    /// Truncation height; chosen from the Stirling envelope when `None`.
    pub y_max: Option<T>,
    /// Bound on the truncated tail; also the absolute and relative target
    /// of the panel quadrature.
    pub step_tol: T,
}

impl<T: Real> Default for ContourConfig<T> {
    fn default() -> Self {
        Self {
            sigma: T::lit(0.5),
            y_max: None,
            step_tol: T::tol_floor(1e-13),
        }
    }
}

impl<T: Real> ContourConfig<T> {
    /// Default line `σ = min(α, n)/2`, midway between the pole families.
    pub fn for_problem(alpha: Order<T>, n: Dimension) -> Self {
        Self {
            sigma: alpha.value().min(n.as_real()) * T::lit(0.5),
            ..Self::default()
        }
    }

    fn validate(&self, alpha: Order<T>, n: Dimension) -> Result<()> {
        let bound = alpha.value().min(n.as_real());
        if !(self.sigma > T::zero() && self.sigma < bound) {
            return Err(Error::InvalidContour {
                sigma: self.sigma.to_f64_lossy(),
                bound: bound.to_f64_lossy(),
            });
        }
        if !(self.step_tol > T::zero()) {
            return Err(Error::InvalidArgument("step_tol must be > 0".into()));
        }
        if let Some(y) = self.y_max {
            if !(y > T::zero() && y.is_finite()) {
                return Err(Error::InvalidArgument(
                    "y_max must be finite and > 0".into(),
                ));
            }
        }
        Ok(())
    }
}

fn is_pole<T: Real>(z: Complex<T>) -> bool {
    z.im == T::zero() && z.re <= T::zero() && z.re == z.re.floor()
}

/// `ln Φ(s)`, or `None` where a denominator pole makes `Φ` vanish.
fn ln_kernel<T: Real>(alpha: T, n: T, s: Complex<T>) -> Result<Option<Complex<T>>> {
    let one = Complex::new(T::one(), T::zero());
    let half = T::lit(0.5);
    let num = [
        s / alpha,
        one - s / alpha,
        Complex::new(n * half, T::zero()) - s * half,
    ];
    if let Some(z) = num.iter().find(|z| is_pole(**z)) {
        return Err(Error::Pole {
            re: z.re.to_f64_lossy(),
            im: z.im.to_f64_lossy(),
        });
    }
    let den = [one - s, s * half];
    if den.iter().any(|z| is_pole(*z)) {
        return Ok(None);
    }
    let mut acc = -s * T::LN_2();
    for z in num {
        acc = acc + log_gamma_complex(z)?;
    }
    for z in den {
        acc = acc - log_gamma_complex(z)?;
    }
    Ok(Some(acc))
}

/// `Φ(s)`, assembled as the exponential of a sum of log-Gammas so that it
/// stays finite far up the line.
///
/// Poles of the numerator Gammas (including `s = 0`, where the limit
/// `α Γ(n/2) / 2` exists but `Γ(s/α)` itself is singular) are reported as
/// `Pole`.
pub fn mb_kernel<T: Real>(alpha: Order<T>, n: Dimension, s: Complex<T>) -> Result<Complex<T>> {
    Ok(ln_kernel(alpha.value(), n.as_real(), s)?
        .map(|l| l.exp())
        .unwrap_or_else(|| Complex::new(T::zero(), T::zero())))
}

// Exponential decay rate of |Φ(σ + iy)| along the line.
fn decay_rate<T: Real>(alpha: T) -> T {
    T::PI() * (alpha.recip() - T::lit(0.5))
}

struct Line<T> {
    alpha: T,
    n: T,
    sigma: T,
    ln_rho: T,
}

impl<T: Real> Line<T> {
    fn value(&self, y: T) -> Result<Complex<T>> {
        let s = Complex::new(self.sigma, y);
        let l = ln_kernel(self.alpha, self.n, s)?.ok_or(Error::Pole {
            re: self.sigma.to_f64_lossy(),
            im: y.to_f64_lossy(),
        })?;
        Ok((l + s * self.ln_rho).exp())
    }

    // Bound on ∫_Y^∞ |Φ ρ^s| dy from the local magnitude and the envelope
    // y^m e^{−κy}, m = (n − 1)/2, with a safety factor 10.
    fn tail_bound(&self, y: T) -> Result<T> {
        let kappa = decay_rate(self.alpha);
        let m = (self.n - T::one()) * T::lit(0.5);
        let rate = kappa - m / y;
        if !(rate > T::zero()) {
            return Ok(T::infinity());
        }
        Ok(T::lit(10.0) * self.value(y)?.norm() / rate)
    }
}

// Upper limit for the auto search; beyond it the envelope is too flat.
const Y_CAP: f64 = 1e6;

fn truncation<T: Real>(line: &Line<T>, cfg: &ContourConfig<T>) -> Result<(T, T)> {
    if let Some(y) = cfg.y_max {
        let tail = line.tail_bound(y)?;
        if tail > cfg.step_tol {
            return Err(Error::ContourFailure {
                tail: tail.to_f64_lossy(),
                y_max: y.to_f64_lossy(),
                tol: cfg.step_tol.to_f64_lossy(),
            });
        }
        return Ok((y, tail));
    }
    let kappa = decay_rate(line.alpha);
    let mut y = (T::lit(10.0) / kappa).max(T::lit(8.0));
    loop {
        let tail = line.tail_bound(y)?;
        if tail <= cfg.step_tol {
            return Ok((y, tail));
        }
        if y > T::lit(Y_CAP) {
            return Err(Error::ContourFailure {
                tail: tail.to_f64_lossy(),
                y_max: y.to_f64_lossy(),
                tol: cfg.step_tol.to_f64_lossy(),
            });
        }
        // One e-fold of the envelope per 1/κ.
        let steps = (tail / cfg.step_tol).ln().max(T::one());
        y = y + steps / kappa;
    }
}

// Breakpoints resolving the ρ^{iy} oscillation: about four panels per period.
fn partition<T: Real>(y_lo: T, y_hi: T, ln_rho: T) -> Vec<T> {
    let period = T::TAU() / ln_rho.abs().max(T::lit(1e-3));
    let h = (period * T::lit(0.25)).min(T::lit(4.0));
    let count = ((y_hi - y_lo) / h)
        .ceil()
        .to_usize()
        .unwrap_or(1)
        .clamp(1, 200_000);
    (0..=count)
        .map(|i| y_lo + (y_hi - y_lo) * T::from_usize_lossy(i) / T::from_usize_lossy(count))
        .collect()
}

fn validate_rho<T: Real>(rho: T) -> Result<()> {
    if !(rho > T::zero() && rho.is_finite()) {
        return Err(Error::InvalidPoint(format!(
            "rho = {} must be finite and > 0",
            rho.to_f64_lossy()
        )));
    }
    Ok(())
}

fn normalization<T: Real>(alpha: T, n: Dimension) -> T {
    (alpha * T::PI().powf(n.as_real::<T>() * T::lit(0.5))).recip()
}

/// `L_{α,n}(ρ)` with its quadrature report, using Schwarz symmetry to
/// integrate only `y >= 0`.
pub fn l_aux_report<T: Real>(
    alpha: Order<T>,
    n: Dimension,
    rho: T,
    cfg: &ContourConfig<T>,
) -> Result<QuadResult<T>> {
    alpha.require_open()?;
    cfg.validate(alpha, n)?;
    validate_rho(rho)?;
    let line = Line {
        alpha: alpha.value(),
        n: n.as_real(),
        sigma: cfg.sigma,
        ln_rho: rho.ln(),
    };
    let (y_max, tail) = truncation(&line, cfg)?;
    let points = partition(T::zero(), y_max, line.ln_rho);
    let mut fail = None;
    let out = adaptive_from(
        Rule::GaussKronrod15,
        |y| match line.value(y) {
            Ok(v) => v.re,
            Err(e) => {
                fail = Some(e);
                T::nan()
            }
        },
        &points,
        cfg.step_tol,
        cfg.step_tol,
        points.len() * 8 + 1000,
    );
    if let Some(e) = fail {
        return Err(e);
    }
    let scale = normalization(alpha.value(), n) / T::PI();
    let value = scale * out.value;
    let est = scale * (out.error + tail);
    Ok(QuadResult {
        value,
        est_error: est,
        lobes_used: out.intervals,
        converged: out.converged,
    })
}

/// Self-similar profile `L_{α,n}(ρ)` with `G_{α,n}(r, t) = r^{−n} L_{α,n}(r/t)`.
pub fn l_aux<T: Real>(alpha: Order<T>, n: Dimension, rho: T, cfg: &ContourConfig<T>) -> Result<T> {
    let res = l_aux_report(alpha, n, rho, cfg)?;
    ensure_converged(&res, "Mellin-Barnes line integral")?;
    Ok(res.value)
}

fn ensure_converged<T: Real>(res: &QuadResult<T>, what: &'static str) -> Result<()> {
    if res.converged {
        Ok(())
    } else {
        Err(Error::NonConvergence {
            what,
            detail: format!("error estimate {:e}", res.est_error.to_f64_lossy()),
        })
    }
}

/// `G_{α,n}(r, t)` from the Mellin–Barnes line integral; `1 < α < 2`, `r > 0`.
pub fn g_mellin_barnes<T: Real>(
    alpha: Order<T>,
    n: Dimension,
    p: EvalPoint<T>,
    cfg: &ContourConfig<T>,
) -> Result<QuadResult<T>> {
    if p.r() == T::zero() {
        return Err(Error::InvalidPoint(
            "Mellin-Barnes route needs r > 0".into(),
        ));
    }
    let mut res = l_aux_report(alpha, n, p.rho(), cfg)?;
    ensure_converged(&res, "Mellin-Barnes line integral")?;
    let scale = p.r().powi(n.n() as i32).recip();
    res.value = res.value * scale;
    res.est_error = res.est_error * scale;
    Ok(res)
}

/// The same reconstruction without the symmetry reduction: real and
/// imaginary parts integrated separately over `[−y_max, y_max]`. The
/// imaginary part should vanish; it measures the integrator's asymmetry.
pub fn mb_integral_full<T: Real>(
    alpha: Order<T>,
    n: Dimension,
    p: EvalPoint<T>,
    cfg: &ContourConfig<T>,
) -> Result<Complex<T>> {
    alpha.require_open()?;
    cfg.validate(alpha, n)?;
    validate_rho(p.rho())?;
    let line = Line {
        alpha: alpha.value(),
        n: n.as_real(),
        sigma: cfg.sigma,
        ln_rho: p.rho().ln(),
    };
    let (y_max, _) = truncation(&line, cfg)?;
    let points = partition(-y_max, y_max, line.ln_rho);
    let mut parts = [T::zero(); 2];
    for (k, part) in parts.iter_mut().enumerate() {
        let mut fail = None;
        let out = adaptive_from(
            Rule::GaussKronrod15,
            |y| match line.value(y) {
                Ok(v) => {
                    if k == 0 {
                        v.re
                    } else {
                        v.im
                    }
                }
                Err(e) => {
                    fail = Some(e);
                    T::nan()
                }
            },
            &points,
            cfg.step_tol,
            cfg.step_tol,
            points.len() * 8 + 1000,
        );
        if let Some(e) = fail {
            return Err(e);
        }
        *part = out.value;
    }
    // ds = i dy, so (1/2πi) ∫ ... ds = (1/2π) ∫ ... dy
    let scale = normalization(alpha.value(), n) / (T::TAU() * p.r().powi(n.n() as i32));
    Ok(Complex::new(parts[0] * scale, parts[1] * scale))
}
