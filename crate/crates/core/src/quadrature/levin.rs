//! Levin t-transform for alternating partial-sum sequences.

use crate::scalar::Real;

/// Levin t-transform of order `p` over the last `p + 1` partial sums.
///
/// `sums[i] = Σ_{j<=i} terms[j]`; the remainder estimate is the last included
/// term, `ω_i = terms[i]`. Returns the extrapolated limit and the linear
/// weights `γ_j` such that `limit = Σ γ_j sums[k0 + j]`, which propagate
/// per-sum errors into the limit.
pub fn levin_t<T: Real>(sums: &[T], terms: &[T], p: usize) -> Option<(T, Vec<T>)> {
    let n = sums.len();
    if n < p + 1 || terms.len() != n {
        return None;
    }
    let k0 = n - p - 1;
    let beta = T::one();
    let base = beta + T::from_usize_lossy(k0 + p);
    let mut binom = T::one();
    let mut coef = Vec::with_capacity(p + 1);
    let mut den = T::zero();
    for j in 0..=p {
        if j > 0 {
            binom = binom * T::from_usize_lossy(p + 1 - j) / T::from_usize_lossy(j);
        }
        let ratio = (beta + T::from_usize_lossy(k0 + j)) / base;
        let mut c = binom * ratio.powi(p as i32 - 1);
        if j % 2 == 1 {
            c = -c;
        }
        let w = terms[k0 + j];
        if w == T::zero() || !w.is_finite() {
            return None;
        }
        let c = c / w;
        den = den + c;
        coef.push(c);
    }
    if den == T::zero() || !den.is_finite() {
        return None;
    }
    let gamma: Vec<T> = coef.iter().map(|&c| c / den).collect();
    let limit = gamma
        .iter()
        .zip(&sums[k0..])
        .fold(T::zero(), |acc, (&g, &s)| acc + g * s);
    Some((limit, gamma))
}
