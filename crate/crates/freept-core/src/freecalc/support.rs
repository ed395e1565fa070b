//! A-priori support bounds for free convolution powers and the shifted
//! Marchenko–Pastur family.

use crate::error::{Error, Result};

/// Support window [x1, x2] for μ^{⊞k} given a-priori bounds A ≤ x ≤ B
/// and the mean/variance of x:
/// x1 = A − 2σ√(k−1) + (k−1)m, x2 = B + 2σ√(k−1) + (k−1)m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupportBound {
    pub lower: f64,
    pub upper: f64,
    pub mean: f64,
    pub variance: f64,
    pub power: f64,
    pub x1: f64,
    pub x2: f64,
}

pub fn support_bound_free_power(
    lower: f64,
    upper: f64,
    mean: f64,
    variance: f64,
    power: f64,
) -> Result<SupportBound> {
    if power < 1.0 {
        return Err(Error::domain("free convolution power requires k >= 1"));
    }
    if variance < 0.0 {
        return Err(Error::domain("variance must be nonnegative"));
    }
    if lower > upper {
        return Err(Error::domain("need A <= B"));
    }
    let sigma = variance.sqrt();
    let spread = 2.0 * sigma * (power - 1.0).sqrt();
    let drift = (power - 1.0) * mean;
    Ok(SupportBound {
        lower,
        upper,
        mean,
        variance,
        power,
        x1: lower - spread + drift,
        x2: upper + spread + drift,
    })
}

/// Support of the shifted free Poisson law c + α·MP(λ): endpoints
/// c + α(1±√λ)², returned in ascending order (α < 0 flips them).
pub fn shifted_mp_support(rate: f64, jump: f64, shift: f64) -> Result<(f64, f64)> {
    if rate < 0.0 {
        return Err(Error::domain("rate must be nonnegative"));
    }
    let s = rate.sqrt();
    let a = shift + jump * (1.0 + s) * (1.0 + s);
    let b = shift + jump * (1.0 - s) * (1.0 - s);
    Ok(if a <= b { (a, b) } else { (b, a) })
}
