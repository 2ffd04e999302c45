//! One-parameter Mittag-Leffler function on the negative real axis, `E_α(−x)`.
//!
//! Three regimes: the power series for small `x`, the optimally truncated
//! algebraic expansion for large `x`, and in between an exact real-line
//! integral representation. For `1 < α < 2` the function splits into a smooth
//! part with algebraic decay and an exponentially damped oscillation
//!
//! ```text
//! R(s) = (2/α) exp(s cos(π/α)) cos(s sin(π/α)),   s = x^{1/α},
//! ```
//!
//! which the algebraic expansion does not see. The smooth part alone is
//! exposed through [`MittagLeffler::eval_smooth`] because the radial Fourier
//! integrals transform `R` in closed form.

use crate::error::{Error, Result};
use crate::integrate::{adaptive, Rule};
use crate::scalar::{cos_pi, sin_pi, Real};
use crate::special_fn::gamma::ln_gamma;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Series,
    Intermediate,
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLResult<T> {
    pub value: T,
    pub regime: Regime,
    pub est_error: T,
}

/// Tolerance and regime boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlConfig<T> {
    /// Absolute accuracy target.
    pub tol: T,
    /// Series used for `x <= series_max`.
    pub series_max: T,
    /// Smallest `x` at which the algebraic expansion is attempted; it is used
    /// only when its truncation bound also meets `tol`.
    pub asymptotic_min: T,
}

impl<T: Real> Default for MlConfig<T> {
    fn default() -> Self {
        Self {
            tol: T::tol_floor(1e-12),
            series_max: T::one(),
            asymptotic_min: T::lit(15.0),
        }
    }
}

// Terms tabulated for the algebraic expansion.
const ASYM_TERMS: usize = 160;
const SERIES_TERMS: usize = 4000;

#[derive(Debug, Clone)]
enum Kind<T> {
    Exp,
    Cos,
    General {
        // spectral density: sin(πα)/(απ) / ((u - u0)^2 + w^2) on u in [0, 1]
        u0: T,
        w: T,
        pref: T,
        lorentz: bool,
        // ln Γ(αk) and sin(παk), k = 1..=ASYM_TERMS
        ln_g: Vec<T>,
        sin_k: Vec<T>,
        // cos(π/α), sin(π/α) when the oscillating part is present
        residue: Option<(T, T)>,
    },
}

/// Evaluator for a fixed order, reusable across many arguments.
#[derive(Debug, Clone)]
pub struct MittagLeffler<T> {
    alpha: T,
    cfg: MlConfig<T>,
    kind: Kind<T>,
}

impl<T: Real> MittagLeffler<T> {
    /// `0 < alpha <= 2`.
    pub fn new(alpha: T, cfg: MlConfig<T>) -> Result<Self> {
        if !(alpha.is_finite() && alpha > T::zero() && alpha <= T::lit(2.0)) {
            return Err(Error::InvalidOrder {
                alpha: alpha.to_f64_lossy(),
                range: "(0, 2]",
            });
        }
        if !(cfg.tol > T::zero()) {
            return Err(Error::InvalidArgument("tol must be > 0".into()));
        }
        let kind = if alpha == T::one() {
            Kind::Exp
        } else if alpha == T::lit(2.0) {
            Kind::Cos
        } else {
            let u0 = -cos_pi(alpha);
            let sa = sin_pi(alpha);
            let w = sa.abs();
            let pref = sa / (alpha * T::PI());
            let lorentz = u0 >= -w && u0 <= T::one() + w;
            let mut ln_g = Vec::with_capacity(ASYM_TERMS);
            let mut sin_k = Vec::with_capacity(ASYM_TERMS);
            for k in 1..=ASYM_TERMS {
                let ak = alpha * T::from_usize_lossy(k);
                ln_g.push(ln_gamma(ak));
                sin_k.push(sin_pi(ak));
            }
            let residue = (alpha > T::one()).then(|| {
                let inv = alpha.recip();
                (cos_pi(inv), sin_pi(inv))
            });
            Kind::General {
                u0,
                w,
                pref,
                lorentz,
                ln_g,
                sin_k,
                residue,
            }
        };
        Ok(Self { alpha, cfg, kind })
    }

    pub fn with_tol(alpha: T, tol: T) -> Result<Self> {
        Self::new(
            alpha,
            MlConfig {
                tol,
                ..MlConfig::default()
            },
        )
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn config(&self) -> &MlConfig<T> {
        &self.cfg
    }

    /// Power series `Σ (−x)^k / Γ(1 + αk)` with its error estimate.
    pub fn series(&self, x: T) -> (T, T) {
        if x == T::zero() {
            return (T::one(), T::zero());
        }
        let lx = x.ln();
        let mut sum = T::one();
        let mut abs_sum = T::one();
        let mut last = T::one();
        for k in 1..SERIES_TERMS {
            let kt = T::from_usize_lossy(k);
            let mag = (kt * lx - ln_gamma(T::one() + self.alpha * kt)).exp();
            let term = if k % 2 == 1 { -mag } else { mag };
            sum = sum + term;
            abs_sum = abs_sum + mag;
            last = mag;
            if mag <= T::epsilon() * T::lit(0.01) * abs_sum {
                break;
            }
        }
        (sum, last + T::lit(4.0) * T::epsilon() * abs_sum)
    }

    /// Oscillating part `R(x^{1/α})`; zero unless `1 < α <= 2`.
    pub fn residue(&self, x: T) -> T {
        match &self.kind {
            Kind::Cos => x.sqrt().cos(),
            Kind::General {
                residue: Some((c, s)),
                ..
            } => {
                let sv = x.powf(self.alpha.recip());
                T::lit(2.0) / self.alpha * (sv * *c).exp() * (sv * *s).cos()
            }
            _ => T::zero(),
        }
    }

    /// Optimally truncated algebraic expansion of the smooth part, with the
    /// first omitted term's magnitude bound. `None` when not applicable.
    pub fn asymptotic_smooth(&self, x: T) -> Option<(T, T)> {
        self.asymptotic_terms(x)
            .map(|(terms, bound)| (terms.iter().fold(T::zero(), |a, &b| a + b), bound))
    }

    /// Individual terms `(−1)^{k+1} x^{−k} / Γ(1 − αk)`, k = 1, 2, ..., of the
    /// optimally truncated expansion, and the bound on the first omitted one.
    pub fn asymptotic_terms(&self, x: T) -> Option<(Vec<T>, T)> {
        let Kind::General { ln_g, sin_k, .. } = &self.kind else {
            return None;
        };
        if !(x > T::one()) {
            return None;
        }
        let lx = x.ln();
        let bound = |k: usize| (ln_g[k - 1] - T::from_usize_lossy(k) * lx).exp() / T::PI();
        let mut terms = Vec::new();
        let mut sum = T::zero();
        let mut b = bound(1);
        for k in 1..ASYM_TERMS {
            let next = bound(k + 1);
            if b <= T::epsilon() * T::lit(0.01) * sum.abs() || next >= b {
                return Some((terms, b));
            }
            // 1 / Γ(1 − αk) = Γ(αk) sin(παk) / π
            let mut term = b * sin_k[k - 1];
            if k % 2 == 0 {
                term = -term;
            }
            sum = sum + term;
            terms.push(term);
            b = next;
        }
        Some((terms, b))
    }

    /// Smooth part from the spectral integral; requires `0 < α < 2`, `α != 1`.
    pub fn integral_smooth(&self, x: T) -> Result<(T, T)> {
        let Kind::General {
            u0,
            w,
            pref,
            lorentz,
            ..
        } = &self.kind
        else {
            return Err(Error::InvalidOrder {
                alpha: self.alpha.to_f64_lossy(),
                range: "(0, 1) ∪ (1, 2)",
            });
        };
        let (u0, w, pref) = (*u0, *w, *pref);
        let s = x.powf(self.alpha.recip());
        let inv_a = self.alpha.recip();
        // The kernel is invariant under r -> 1/r, folding [1, ∞) onto [0, 1].
        let body = move |u: T| {
            if u <= T::zero() {
                return T::one();
            }
            let p = u.powf(inv_a);
            (-s * p).exp() + (-s / p).exp()
        };
        let tol = self.cfg.tol * T::lit(0.5) / pref.abs();
        let eps = T::epsilon() * T::lit(4.0);
        let res = if *lorentz {
            // u = u0 + w tan θ flattens the near-resonant denominator.
            let th0 = ((T::zero() - u0) / w).atan();
            let th1 = ((T::one() - u0) / w).atan();
            let out = adaptive(
                Rule::GaussKronrod15,
                |th: T| body(u0 + w * th.tan()),
                th0,
                th1,
                tol * w,
                eps,
                2000,
            );
            (out.value / w, out.error / w, out.converged)
        } else {
            let out = adaptive(
                Rule::GaussKronrod15,
                |u: T| {
                    let d = u - u0;
                    body(u) / (d * d + w * w)
                },
                T::zero(),
                T::one(),
                tol,
                eps,
                2000,
            );
            (out.value, out.error, out.converged)
        };
        let value = pref * res.0;
        let err = pref.abs() * res.1;
        if !res.2 && err > self.cfg.tol {
            return Err(Error::NonConvergence {
                what: "Mittag-Leffler integral",
                detail: format!(
                    "alpha = {}, x = {}, error estimate {:e}",
                    self.alpha.to_f64_lossy(),
                    x.to_f64_lossy(),
                    err.to_f64_lossy()
                ),
            });
        }
        Ok((value, err))
    }

    fn check_arg(&self, x: T) -> Result<()> {
        if x.is_nan() || x < T::zero() {
            return Err(Error::InvalidArgument(format!(
                "Mittag-Leffler argument must be >= 0, got {}",
                x.to_f64_lossy()
            )));
        }
        Ok(())
    }

    /// `E_α(−x) − R(x^{1/α})`.
    pub fn eval_smooth(&self, x: T) -> Result<MLResult<T>> {
        self.check_arg(x)?;
        match &self.kind {
            Kind::Exp => {
                return Ok(MLResult {
                    value: (-x).exp(),
                    regime: Regime::Series,
                    est_error: T::epsilon() * (-x).exp(),
                })
            }
            Kind::Cos => {
                return Ok(MLResult {
                    value: T::zero(),
                    regime: Regime::Series,
                    est_error: T::zero(),
                })
            }
            Kind::General { .. } => {}
        }
        if x.is_infinite() {
            return Ok(MLResult {
                value: T::zero(),
                regime: Regime::Asymptotic,
                est_error: T::zero(),
            });
        }
        if x <= self.cfg.series_max {
            let (v, e) = self.series(x);
            return Ok(MLResult {
                value: v - self.residue(x),
                regime: Regime::Series,
                est_error: e,
            });
        }
        if x >= self.cfg.asymptotic_min {
            if let Some((v, e)) = self.asymptotic_smooth(x) {
                if e <= self.cfg.tol {
                    return Ok(MLResult {
                        value: v,
                        regime: Regime::Asymptotic,
                        est_error: e,
                    });
                }
            }
        }
        let (v, e) = self.integral_smooth(x)?;
        Ok(MLResult {
            value: v,
            regime: Regime::Intermediate,
            est_error: e,
        })
    }

    /// `E_α(−x)` with absolute error at most the configured tolerance.
    pub fn eval(&self, x: T) -> Result<MLResult<T>> {
        self.check_arg(x)?;
        match &self.kind {
            Kind::Exp => self.eval_smooth(x),
            Kind::Cos => Ok(MLResult {
                value: x.sqrt().cos(),
                regime: Regime::Series,
                est_error: T::epsilon() * (T::one() + x.sqrt()),
            }),
            Kind::General { .. } => {
                if x <= self.cfg.series_max {
                    let (v, e) = self.series(x);
                    return Ok(MLResult {
                        value: v,
                        regime: Regime::Series,
                        est_error: e,
                    });
                }
                let mut r = self.eval_smooth(x)?;
                r.value = r.value + self.residue(x);
                Ok(r)
            }
        }
    }
}

/// `E_α(−x)` for `0 < α <= 2`, `x >= 0`, to absolute accuracy `tol`.
pub fn ml_neg<T: Real>(alpha: T, x: T, tol: T) -> Result<MLResult<T>> {
    MittagLeffler::with_tol(alpha, tol)?.eval(x)
}
