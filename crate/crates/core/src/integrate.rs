//! Gauss–Kronrod and Gauss–Legendre panel rules with a global adaptive driver.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::scalar::Real;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// Gauss weights for the odd-indexed Kronrod nodes (7-point rule).
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Panel rule used for each subinterval of the adaptive driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rule {
    /// 16-point Gauss–Legendre; error from comparison with the two half panels.
    GaussLegendre16,
    /// 15-point Kronrod extension of the 7-point Gauss rule.
    #[default]
    GaussKronrod15,
}

/// Panel value and its error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Panel<T> {
    pub value: T,
    pub error: T,
    /// Integral of `|f|`, used for roundoff floors and conditioning estimates.
    pub abs_value: T,
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct Integral<T> {
    pub value: T,
    pub error: T,
    pub abs_value: T,
    pub intervals: usize,
    pub converged: bool,
}

pub fn gauss_kronrod15<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> Panel<T> {
    let half = T::lit(0.5);
    let c = half * (a + b);
    let h = half * (b - a);
    let fc = f(c);
    let mut resk = fc * T::lit(WGK[7]);
    let mut resg = fc * T::lit(WG[3]);
    let mut resabs = resk.abs();
    let mut fv1 = [T::zero(); 7];
    let mut fv2 = [T::zero(); 7];
    for j in 0..7 {
        let dx = h * T::lit(XGK[j]);
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let w = T::lit(WGK[j]);
        resk = resk + w * (f1 + f2);
        resabs = resabs + w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg = resg + T::lit(WG[j / 2]) * (f1 + f2);
        }
    }
    let mean = resk * half;
    let mut resasc = T::lit(WGK[7]) * (fc - mean).abs();
    for j in 0..7 {
        resasc = resasc + T::lit(WGK[j]) * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let h_abs = h.abs();
    let value = resk * h;
    let resabs = resabs * h_abs;
    let resasc = resasc * h_abs;
    let mut err = ((resk - resg) * h).abs();
    if resasc != T::zero() && err != T::zero() {
        let scale = (T::lit(200.0) * err / resasc).powf(T::lit(1.5));
        err = resasc * scale.min(T::one());
    }
    let floor = T::lit(50.0) * T::epsilon() * resabs;
    if floor > err {
        err = floor;
    }
    Panel {
        value,
        error: err,
        abs_value: resabs,
    }
}

fn gl16_table() -> &'static ([f64; 8], [f64; 8]) {
    static TABLE: OnceLock<([f64; 8], [f64; 8])> = OnceLock::new();
    TABLE.get_or_init(|| {
        const N: usize = 16;
        let mut x = [0.0; 8];
        let mut w = [0.0; 8];
        for i in 0..8 {
            // Newton on P_16 from the Chebyshev-like initial guess; positive roots only.
            let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, z);
                for k in 2..=N {
                    let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N as f64 * (z * p1 - p0) / (z * z - 1.0);
                let dz = p1 / dp;
                z -= dz;
                if dz.abs() < 1e-16 {
                    break;
                }
            }
            x[i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        (x, w)
    })
}

/// Plain 16-point Gauss–Legendre sum and the matching `|f|` sum.
pub fn gauss_legendre16<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> (T, T) {
    let (x, w) = gl16_table();
    let half = T::lit(0.5);
    let c = half * (a + b);
    let h = half * (b - a);
    let mut s = T::zero();
    let mut sa = T::zero();
    for i in 0..8 {
        let dx = h * T::lit(x[i]);
        let wi = T::lit(w[i]);
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        s = s + wi * (f1 + f2);
        sa = sa + wi * (f1.abs() + f2.abs());
    }
    (s * h, sa * h.abs())
}

fn gl16_panel<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> Panel<T> {
    let m = T::lit(0.5) * (a + b);
    let (whole, _) = gauss_legendre16(f, a, b);
    let (l, la) = gauss_legendre16(f, a, m);
    let (r, ra) = gauss_legendre16(f, m, b);
    let value = l + r;
    let abs_value = la + ra;
    let err = (value - whole)
        .abs()
        .max(T::lit(50.0) * T::epsilon() * abs_value);
    Panel {
        value,
        error: err,
        abs_value,
    }
}

pub fn panel<T: Real, F: FnMut(T) -> T>(rule: Rule, f: &mut F, a: T, b: T) -> Panel<T> {
    match rule {
        Rule::GaussKronrod15 => gauss_kronrod15(f, a, b),
        Rule::GaussLegendre16 => gl16_panel(f, a, b),
    }
}

/// Globally adaptive integration over `[a, b]`: the interval with the largest
/// error estimate is bisected until the summed estimate meets
/// `max(abs_tol, rel_tol * |value|)` or `max_intervals` is reached.
pub fn adaptive<T: Real, F: FnMut(T) -> T>(
    rule: Rule,
    f: F,
    a: T,
    b: T,
    abs_tol: T,
    rel_tol: T,
    max_intervals: usize,
) -> Integral<T> {
    adaptive_from(rule, f, &[a, b], abs_tol, rel_tol, max_intervals)
}

/// [`adaptive`] started from the partition given by the sorted `points`.
///
/// Refinement also stops once the estimate reaches the rounding level of
/// `∫|f|`, below which no target is attainable.
pub fn adaptive_from<T: Real, F: FnMut(T) -> T>(
    rule: Rule,
    mut f: F,
    points: &[T],
    abs_tol: T,
    rel_tol: T,
    max_intervals: usize,
) -> Integral<T> {
    assert!(points.len() >= 2, "need at least one interval");
    let mut heap: BinaryHeap<Part<T>> = points
        .windows(2)
        .map(|w| Part {
            lo: w[0],
            hi: w[1],
            panel: panel(rule, &mut f, w[0], w[1]),
        })
        .collect();
    let mut value: T = heap.iter().map(|p| p.panel.value).sum();
    let mut error: T = heap.iter().map(|p| p.panel.error).sum();
    let mut abs_value: T = heap.iter().map(|p| p.panel.abs_value).sum();
    let roundoff = T::lit(64.0) * T::epsilon();
    let target = |v: T, av: T| abs_tol.max(rel_tol * v.abs()).max(roundoff * av);
    while error > target(value, abs_value) && heap.len() < max_intervals {
        let worst = heap.pop().expect("non-empty partition");
        let (lo, hi, old) = (worst.lo, worst.hi, worst.panel);
        let mid = T::lit(0.5) * (lo + hi);
        // Interval exhausted at working precision.
        if !(mid > lo && mid < hi) || (hi - lo).abs() <= T::epsilon() * T::lit(8.0) * mid.abs() {
            heap.push(worst);
            break;
        }
        let left = panel(rule, &mut f, lo, mid);
        let right = panel(rule, &mut f, mid, hi);
        value = value - old.value + left.value + right.value;
        abs_value = abs_value - old.abs_value + left.abs_value + right.abs_value;
        error = (error - old.error + left.error + right.error).max(T::zero());
        heap.push(Part {
            lo,
            hi: mid,
            panel: left,
        });
        heap.push(Part {
            lo: mid,
            hi,
            panel: right,
        });
    }
    // Resum to drop the rounding accumulated by the running updates.
    let value: T = heap.iter().map(|p| p.panel.value).sum();
    let error: T = heap.iter().map(|p| p.panel.error).sum();
    let abs_value: T = heap.iter().map(|p| p.panel.abs_value).sum();
    Integral {
        value,
        error,
        abs_value,
        intervals: heap.len(),
        converged: error <= target(value, abs_value),
    }
}

struct Part<T> {
    lo: T,
    hi: T,
    panel: Panel<T>,
}

// Max-heap order on the error estimate.
impl<T: Real> PartialEq for Part<T> {
    fn eq(&self, other: &Self) -> bool {
        self.panel.error == other.panel.error
    }
}
impl<T: Real> Eq for Part<T> {}
impl<T: Real> PartialOrd for Part<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Real> Ord for Part<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.panel
            .error
            .partial_cmp(&other.panel.error)
            .unwrap_or(Ordering::Equal)
    }
}
