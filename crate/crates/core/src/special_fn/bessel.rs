//! Bessel functions of the first kind for the orders the radial integrals need.

use crate::error::{Error, Result};
use crate::scalar::Real;

const SERIES_MAX: f64 = 8.0;
const ASYMPTOTIC_MIN: f64 = 25.0;
// Trapezoid nodes on [0, π]; aliasing error ~ J_{2N}(z), negligible for z <= 25.
const TRAPEZOID_N: usize = 48;

fn series<T: Real>(n: u32, z: T) -> T {
    let h = z * T::lit(0.5);
    let h2 = h * h;
    let mut term = if n == 0 { T::one() } else { h };
    let mut sum = term;
    for k in 1..200usize {
        let kt = T::from_usize_lossy(k);
        term = -term * h2 / (kt * (kt + T::lit(n as f64)));
        sum = sum + term;
        if term.abs() <= T::epsilon() * T::lit(0.1) * sum.abs() {
            break;
        }
    }
    sum
}

// J_n(z) = (1/π) ∫_0^π cos(nθ − z sin θ) dθ; periodic integrand, so the
// trapezoidal rule converges geometrically.
fn trapezoid<T: Real>(n: u32, z: T) -> T {
    let nn = T::lit(n as f64);
    let h = T::PI() / T::from_usize_lossy(TRAPEZOID_N);
    let mut sum = T::lit(0.5) * (T::one() + (nn * T::PI() - z * T::PI().sin()).cos());
    for k in 1..TRAPEZOID_N {
        let th = h * T::from_usize_lossy(k);
        sum = sum + (nn * th - z * th.sin()).cos();
    }
    sum / T::from_usize_lossy(TRAPEZOID_N)
}

fn hankel<T: Real>(n: u32, z: T) -> T {
    let mu = T::lit(4.0 * (n * n) as f64);
    let eight_z = T::lit(8.0) * z;
    let mut p = T::one();
    let mut q = T::zero();
    let mut a = T::one();
    let mut prev = T::infinity();
    for k in 1..60usize {
        let odd = T::from_usize_lossy(2 * k - 1);
        a = a * (mu - odd * odd) / (T::from_usize_lossy(k) * eight_z);
        if a.abs() >= prev || a.abs() <= T::epsilon() * T::lit(0.01) {
            break;
        }
        prev = a.abs();
        // Terms enter P and Q alternately with signs +, -, -, +, ...
        match k % 4 {
            1 => q = q + a,
            2 => p = p - a,
            3 => q = q - a,
            _ => p = p + a,
        }
    }
    let chi = z - (T::lit(n as f64) * T::lit(0.5) + T::lit(0.25)) * T::PI();
    (T::lit(2.0) / (T::PI() * z)).sqrt() * (p * chi.cos() - q * chi.sin())
}

fn bessel_int<T: Real>(n: u32, z: T) -> T {
    if z <= T::lit(SERIES_MAX) {
        series(n, z)
    } else if z <= T::lit(ASYMPTOTIC_MIN) {
        trapezoid(n, z)
    } else {
        hankel(n, z)
    }
}

/// `J_0(z)` for `z >= 0`.
pub fn j0<T: Real>(z: T) -> T {
    bessel_int(0, z)
}

/// `J_1(z)` for `z >= 0`.
pub fn j1<T: Real>(z: T) -> T {
    bessel_int(1, z)
}

/// `J_ν(z)` for `ν ∈ {−1/2, 0, 1/2}`; `J_{−1/2}(0) = +∞`.
pub fn bessel_kernel<T: Real>(nu: T, z: T) -> Result<T> {
    if z.is_nan() || z < T::zero() {
        return Err(Error::InvalidArgument(format!(
            "Bessel argument must be >= 0, got {}",
            z.to_f64_lossy()
        )));
    }
    let half = T::lit(0.5);
    if nu == T::zero() {
        Ok(j0(z))
    } else if nu == half {
        if z == T::zero() {
            return Ok(T::zero());
        }
        Ok((T::lit(2.0) / (T::PI() * z)).sqrt() * z.sin())
    } else if nu == -half {
        if z == T::zero() {
            return Ok(T::infinity());
        }
        Ok((T::lit(2.0) / (T::PI() * z)).sqrt() * z.cos())
    } else {
        Err(Error::UnsupportedOrder(nu.to_f64_lossy()))
    }
}

/// The `k`-th positive zero of `J_0` (`k >= 1`): McMahon's expansion
/// polished by Newton steps with `J_0' = −J_1`.
pub fn j0_zero<T: Real>(k: usize) -> T {
    assert!(k >= 1, "zeros are numbered from 1");
    let beta = (T::from_usize_lossy(k) - T::lit(0.25)) * T::PI();
    let b8 = T::lit(8.0) * beta;
    let b8i = b8.recip();
    let b8i2 = b8i * b8i;
    let mut j =
        beta + b8i * (T::one() + b8i2 * (T::lit(-124.0 / 3.0) + b8i2 * T::lit(120928.0 / 15.0)));
    for _ in 0..4 {
        let d = j0(j) / j1(j);
        j = j + d;
        if d.abs() <= T::epsilon() * j {
            break;
        }
    }
    j
}
