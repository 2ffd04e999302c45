//! Derivative-free scalar maximization.

use crate::scalar::Real;

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`,
/// stopping when the bracket is shorter than `tol`. Returns `(x, f(x))`.
pub fn golden_section_max<T: Real, F: FnMut(T) -> T>(mut f: F, a: T, b: T, tol: T) -> (T, T) {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) * T::lit(0.5);
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    // The bracket shrinks by 1/φ per step; 200 steps exhaust f64.
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_parabola_peak() {
        let (x, v) = golden_section_max(|x: f64| 3.0 - (x - 0.7).powi(2), 0.0, 2.0, 1e-12);
        assert!((x - 0.7).abs() < 1e-7);
        assert!((v - 3.0).abs() < 1e-14);
    }

    #[test]
    fn reversed_bracket() {
        let (x, _) = golden_section_max(|x: f64| x.sin(), 3.0, 0.0, 1e-10);
        assert!((x - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
    }
}
