//! Real and complex log-Gamma via Stirling's series with an upward shift.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{sin_pi, Real};

/// `B_{2k} / (2k (2k-1))` for k = 1..=10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

// |z| beyond which the truncated Stirling tail is below f64 rounding.
const SHIFT: f64 = 15.0;

fn stirling_real<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    let inv = x.recip();
    let inv2 = inv * inv;
    let mut corr = T::zero();
    let mut p = inv;
    for c in STIRLING {
        corr = corr + T::lit(c) * p;
        p = p * inv2;
    }
    (x - half) * x.ln() - x + half * (T::TAU()).ln() + corr
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma<T: Real>(x: T) -> T {
    debug_assert!(x > T::zero());
    if x == T::one() || x == T::lit(2.0) {
        return T::zero();
    }
    if x >= T::lit(SHIFT) {
        return stirling_real(x);
    }
    let n = (T::lit(SHIFT) - x).ceil().to_usize().unwrap_or(0);
    let mut prod = T::one();
    let mut y = x;
    for _ in 0..n {
        prod = prod * y;
        y = y + T::one();
    }
    stirling_real(y) - prod.ln()
}

/// `Γ(x)` for real `x`, via reflection for `x < 1/2`. Infinite at poles.
pub fn gamma<T: Real>(x: T) -> T {
    if x <= T::zero() && x == x.floor() {
        return T::infinity();
    }
    if x < T::lit(0.5) {
        T::PI() / (sin_pi(x) * gamma(T::one() - x))
    } else {
        ln_gamma(x).exp()
    }
}

/// `1/Γ(x)`, zero at the non-positive integers.
pub fn rgamma<T: Real>(x: T) -> T {
    if x <= T::zero() && x == x.floor() {
        return T::zero();
    }
    if x < T::lit(0.5) {
        sin_pi(x) * gamma(T::one() - x) / T::PI()
    } else {
        (-ln_gamma(x)).exp()
    }
}

/// Principal branch of `ln Γ(z)`: analytic on the plane cut along the
/// negative real axis and real on the positive axis.
pub fn log_gamma_complex<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if z.im == T::zero() && z.re <= T::zero() && z.re == z.re.floor() {
        return Err(Error::Pole {
            re: z.re.to_f64_lossy(),
            im: 0.0,
        });
    }
    if z.im == T::zero() && z.re > T::zero() {
        return Ok(Complex::new(ln_gamma(z.re), T::zero()));
    }
    let shift = T::lit(SHIFT);
    // Off the real axis a shift into the right half-plane suffices once |Im z|
    // is large; otherwise push Re z past the Stirling threshold.
    let target = if z.im.abs() >= shift { T::one() } else { shift };
    let n = if z.re < target {
        (target - z.re).ceil().to_usize().unwrap_or(0)
    } else {
        0
    };
    let mut logs = Complex::new(T::zero(), T::zero());
    let mut y = z;
    for _ in 0..n {
        logs = logs + y.ln();
        y = y + T::one();
    }
    let half = T::lit(0.5);
    let inv = y.inv();
    let inv2 = inv * inv;
    let mut corr = Complex::new(T::zero(), T::zero());
    let mut p = inv;
    for c in STIRLING {
        corr = corr + p * T::lit(c);
        p = p * inv2;
    }
    let base = (y - half) * y.ln() - y + half * T::TAU().ln() + corr;
    Ok(base - logs)
}
