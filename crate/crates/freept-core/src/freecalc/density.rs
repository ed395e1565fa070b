//! Spectral density recovery from a truncated cumulant sequence.
//!
//! The Cauchy transform G of the sequence's law satisfies z = R(G) + 1/G
//! with R the truncated R-transform polynomial. Each grid point t is
//! solved at z = t + iε by complex Newton iteration, continued downward
//! in the imaginary part from an altitude where G ≈ 1/z; the density is
//! −Im(G)/π.
//!
//! A truncated polynomial R only represents the law's Cauchy transform
//! where the underlying R-series converges (roughly |G| < radius).
//! Densities above ~1/π — e.g. the hard-edge side of Marchenko–Pastur
//! laws — are not reachable by any truncation order, and the recovered
//! values there are those of the truncated law, not the named family.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::seq::{CumulantSequence, RTransform};

/// Newton/continuation controls; defaults match the library contract.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NewtonParams {
    /// Convergence threshold on |ΔG|.
    pub step_tol: f64,
    /// Iteration cap per continuation level.
    pub max_iter: usize,
    /// Multiplicative descent factor for the imaginary part.
    pub descent: f64,
}

impl Default for NewtonParams {
    fn default() -> Self {
        NewtonParams {
            step_tol: 1e-12,
            max_iter: 60,
            descent: 0.5,
        }
    }
}

/// One grid point of a recovered density table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityPoint {
    pub t: f64,
    pub density: f64,
    /// Newton converged at every continuation level for this point.
    pub converged: bool,
    /// A negative raw density was clamped to zero.
    pub clamped: bool,
}

/// Evaluates the density of the law with cumulants `k` on `grid` using
/// smoothing parameter `eps` ∈ [1e-6, 1e-1]. Non-convergence is a
/// per-point marker, never a global failure. Output order follows the
/// grid.
pub fn density_from_cumulants(
    k: &CumulantSequence<f64>,
    grid: &[f64],
    eps: f64,
) -> Result<Vec<DensityPoint>> {
    density_with_params(k, grid, eps, NewtonParams::default())
}

pub fn density_with_params(
    k: &CumulantSequence<f64>,
    grid: &[f64],
    eps: f64,
    params: NewtonParams,
) -> Result<Vec<DensityPoint>> {
    if !(1e-6..=1e-1).contains(&eps) {
        return Err(Error::domain("eps must lie in [1e-6, 1e-1]"));
    }
    let r = RTransform::from(k);
    let altitude = 10.0 * (1.0 + k.values().iter().map(|v| Scalar::abs(v)).sum::<f64>());
    Ok(grid
        .iter()
        .map(|&t| solve_point(&r, t, eps, altitude, params))
        .collect())
}

fn solve_point(
    r: &RTransform<f64>,
    t: f64,
    eps: f64,
    altitude: f64,
    params: NewtonParams,
) -> DensityPoint {
    let mut converged = true;
    let mut g = Complex64::new(t, altitude).inv();
    let mut y = altitude;
    loop {
        let z = Complex64::new(t, y);
        match newton(r, z, g, params) {
            Some(root) => g = root,
            None => {
                converged = false;
                // restart from the free initial guess at this level
                if let Some(root) = newton(r, z, z.inv(), params) {
                    g = root;
                    converged = true;
                } else {
                    g = z.inv();
                }
            }
        }
        if y <= eps {
            break;
        }
        y = (y * params.descent).max(eps);
    }
    let raw = -g.im / core::f64::consts::PI;
    let clamped = raw < 0.0;
    DensityPoint {
        t,
        density: if clamped { 0.0 } else { raw },
        converged,
        clamped,
    }
}

/// Newton iteration for R(G) + 1/G − z = 0 from the warm start `g0`.
fn newton(r: &RTransform<f64>, z: Complex64, g0: Complex64, params: NewtonParams) -> Option<Complex64> {
    let mut g = g0;
    for _ in 0..params.max_iter {
        if g.norm_sqr() == 0.0 || !g.re.is_finite() || !g.im.is_finite() {
            return None;
        }
        let (val, deriv) = eval_r(r, g);
        let f = val + g.inv() - z;
        let df = deriv - (g * g).inv();
        if df.norm_sqr() == 0.0 {
            return None;
        }
        let step = f / df;
        g -= step;
        if step.norm_sqr() <= params.step_tol * params.step_tol {
            return if g.re.is_finite() && g.im.is_finite() {
                Some(g)
            } else {
                None
            };
        }
    }
    None
}

/// Horner evaluation of R and R' at g.
fn eval_r(r: &RTransform<f64>, g: Complex64) -> (Complex64, Complex64) {
    let mut val = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for &c in r.coeffs().iter().rev() {
        deriv = deriv * g + val;
        val = val * g + Complex64::new(c, 0.0);
    }
    (val, deriv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kseq(vals: &[f64]) -> CumulantSequence<f64> {
        CumulantSequence::new(vals.to_vec()).unwrap()
    }

    #[test]
    fn semicircle_center_value() {
        // R(z) = z is exact for the semicircle; density at 0 is 1/π
        let k = kseq(&[0.0, 1.0, 0.0, 0.0]);
        let out = density_from_cumulants(&k, &[0.0], 1e-4).unwrap();
        assert!(out[0].converged);
        assert!((out[0].density - core::f64::consts::FRAC_1_PI).abs() < 1e-3);
    }

    #[test]
    fn semicircle_shape() {
        let k = kseq(&[0.0, 1.0]);
        let grid: Vec<f64> = (-25..=25).map(|i| i as f64 * 0.08).collect();
        let out = density_from_cumulants(&k, &grid, 1e-3).unwrap();
        for p in &out {
            // the ε-smoothed edge is a √ε-sized bump; compare away from it
            if (p.t.abs() - 2.0).abs() < 0.1 {
                continue;
            }
            let reference = if p.t.abs() < 2.0 {
                (4.0 - p.t * p.t).sqrt() / (2.0 * core::f64::consts::PI)
            } else {
                0.0
            };
            assert!(
                (p.density - reference).abs() < 2e-3,
                "t = {}: {} vs {}",
                p.t,
                p.density,
                reference
            );
        }
    }

    #[test]
    fn far_tail_is_negligible() {
        let k = kseq(&[0.0, 1.0, 0.0, 0.0]);
        let out = density_from_cumulants(&k, &[8.0, -8.0], 1e-3).unwrap();
        for p in out {
            assert!(p.density < 1e-3);
        }
    }

    #[test]
    fn eps_range_is_enforced() {
        let k = kseq(&[0.0, 1.0]);
        assert!(density_from_cumulants(&k, &[0.0], 1e-7).is_err());
        assert!(density_from_cumulants(&k, &[0.0], 0.5).is_err());
    }

    #[test]
    fn output_follows_grid_order() {
        let k = kseq(&[0.0, 1.0]);
        let grid = [1.5, -0.5, 0.25];
        let out = density_from_cumulants(&k, &grid, 1e-3).unwrap();
        let ts: Vec<f64> = out.iter().map(|p| p.t).collect();
        assert_eq!(ts, grid);
    }
}
