//! Positivity certification for the shifted Wishart family
//! X = I + αW, α < 0, W Wishart(λ).
//!
//! Analytic side: the parameter window on −1/α inside which X is
//! asymptotically non-positive while X^Γ is positive, the lower bound
//! 1 + α/n + λα − 2√(λα²) on the support of μ^Γ, and the k-block
//! positivity certificate f(n) obtained from the support bound of
//! μ^{⊞ n/k}. Monte Carlo side: per-trial extreme eigenvalues of X, X^Γ
//! and of one random rank-k compression. Random projections can only
//! falsify block positivity; the analytic f(n) > 0 certificate is what
//! certifies it.

use crate::error::{Error, Result};
use crate::freecalc::{shifted_mp_support, support_bound_free_power};
use crate::randmat::{
    derive_seed, eigvalsh, partial_transpose, project_compress, sample, EnsembleSpec,
    PROJECTION_STREAM,
};

/// Parameters of one certification experiment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertParams {
    /// Block count n.
    pub blocks: usize,
    /// Positivity order k (1 ≤ k ≤ n).
    pub k: usize,
    /// Wishart rate λ > 1.
    pub rate: f64,
    /// Jump α < 0.
    pub jump: f64,
    /// Block dimension N for Monte Carlo.
    pub block_dim: usize,
    pub trials: usize,
    pub seed: u64,
}

impl CertParams {
    pub fn validate(&self) -> Result<()> {
        if self.rate <= 1.0 {
            return Err(Error::domain("certification requires rate > 1"));
        }
        if self.jump >= 0.0 {
            return Err(Error::domain("certification requires jump < 0"));
        }
        if self.k == 0 || self.k > self.blocks {
            return Err(Error::domain("need 1 <= k <= n"));
        }
        if self.blocks == 0 || self.block_dim == 0 || self.trials == 0 {
            return Err(Error::domain("blocks, block_dim and trials must be positive"));
        }
        Ok(())
    }
}

/// Window (1/n + 2√λ + λ, (1+√λ)²) for −1/α. Width is 1 − 1/n, so the
/// window is empty exactly at n = 1; emptiness is reported, not an error.
pub fn ppt_window(blocks: usize, rate: f64) -> Result<(f64, f64)> {
    if rate <= 1.0 {
        return Err(Error::domain("window requires rate > 1"));
    }
    if blocks == 0 {
        return Err(Error::domain("need n >= 1"));
    }
    let s = rate.sqrt();
    Ok((
        1.0 / blocks as f64 + 2.0 * s + rate,
        (1.0 + s) * (1.0 + s),
    ))
}

/// Analytic part of a certification report.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticCert {
    /// Window for −1/α.
    pub window: (f64, f64),
    pub window_satisfied: bool,
    /// Support of the limit law of X.
    pub supp_mu: (f64, f64),
    /// Lower bound on supp(μ^Γ): 1 + α/n + λα − 2√(λα²).
    pub pt_lower_bound: f64,
    /// supp_mu.0 < 0, the non-positivity side of the window.
    pub npt_predicted: bool,
    /// pt_lower_bound > 0, the positivity side.
    pub ppt_predicted: bool,
}

/// Evaluates the window and the two support statements for `p`. When the
/// window is satisfied both predictions must come out affirmative; the
/// report carries the booleans rather than failing.
pub fn check_params(p: &CertParams) -> Result<AnalyticCert> {
    p.validate()?;
    let window = ppt_window(p.blocks, p.rate)?;
    let neg_inv_jump = -1.0 / p.jump;
    let window_satisfied = window.0 < neg_inv_jump && neg_inv_jump < window.1;
    let supp_mu = shifted_mp_support(p.rate, p.jump, 1.0)?;
    let sigma = (p.rate * p.jump * p.jump).sqrt();
    let pt_lower_bound = 1.0 + p.jump / p.blocks as f64 + p.rate * p.jump - 2.0 * sigma;
    Ok(AnalyticCert {
        window,
        window_satisfied,
        supp_mu,
        pt_lower_bound,
        npt_predicted: supp_mu.0 < 0.0,
        ppt_predicted: pt_lower_bound > 0.0,
    })
}

/// f(n) = (α(1+√λ)² + 1) + (n/k − 1)m − 2σ√(n/k − 1) with m = λα + 1 and
/// σ² = λα²: a positive value certifies asymptotic k-block positivity.
pub fn k_bound_f(blocks: usize, k: usize, rate: f64, jump: f64) -> Result<f64> {
    if k == 0 || blocks < k {
        return Err(Error::domain("need n >= k >= 1"));
    }
    let (lower_edge, _) = shifted_mp_support(rate, jump, 1.0)?;
    let mean = rate * jump + 1.0;
    let variance = rate * jump * jump;
    let power = blocks as f64 / k as f64;
    let bound = support_bound_free_power(lower_edge, f64::INFINITY, mean, variance, power)?;
    Ok(bound.x1)
}

/// Result of the minimal-n scan, with the window recheck at the found n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinBlocks {
    pub n: Option<usize>,
    /// Whether −1/α still lies in the PPT window at the found n (the 1/n
    /// term loosens as n grows, but it is rechecked, not assumed).
    pub window_satisfied: Option<bool>,
}

/// Smallest n in [k, n_max] with f(n) > 0. Requires m = λα + 1 > 0 for
/// any certificate to exist; otherwise f(n) → −∞ and the scan is skipped.
pub fn min_n_for_k(k: usize, rate: f64, jump: f64, n_max: usize) -> Result<MinBlocks> {
    if n_max < k {
        return Err(Error::domain("n_max must be at least k"));
    }
    let mean = rate * jump + 1.0;
    if mean <= 0.0 {
        return Ok(MinBlocks {
            n: None,
            window_satisfied: None,
        });
    }
    for n in k..=n_max {
        if k_bound_f(n, k, rate, jump)? > 0.0 {
            let window = ppt_window(n, rate)?;
            let neg_inv_jump = -1.0 / jump;
            return Ok(MinBlocks {
                n: Some(n),
                window_satisfied: Some(window.0 < neg_inv_jump && neg_inv_jump < window.1),
            });
        }
    }
    Ok(MinBlocks {
        n: None,
        window_satisfied: None,
    })
}

/// Extreme-eigenvalue record of one Monte Carlo trial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialRecord {
    pub lambda_min_x: f64,
    pub lambda_min_x_gamma: f64,
    pub compressed_lambda_min: f64,
}

/// Runs one trial of the certification experiment: sample
/// X = I + αW at (n, N), record λ_min(X), λ_min(X^Γ), and the λ_min of
/// one rank-k compression. Matrix entries use stream `trial`, the
/// projection uses stream `trial + PROJECTION_STREAM`.
pub fn certify_trial(p: &CertParams, trial: u64) -> Result<TrialRecord> {
    p.validate()?;
    let spec = EnsembleSpec::shifted_wishart(
        p.blocks,
        p.block_dim,
        p.rate,
        p.jump,
        1.0,
        derive_seed(p.seed, trial),
    );
    let x = sample(&spec)?.matrix;
    let spectrum_x = eigvalsh(&x)?;
    let gamma = partial_transpose(&x);
    let spectrum_gamma = eigvalsh(&gamma)?;
    let compressed = project_compress(&x, p.k, derive_seed(p.seed, trial + PROJECTION_STREAM))?;
    Ok(TrialRecord {
        lambda_min_x: spectrum_x.min(),
        lambda_min_x_gamma: spectrum_gamma.min(),
        compressed_lambda_min: compressed.min(),
    })
}
