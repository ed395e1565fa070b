//! GUE, Wishart and shifted Wishart block ensembles.
//!
//! Normalization: matrix entries have variance 1/(nN), so the Wishart
//! spectrum converges to Marchenko–Pastur with support
//! [(√λ−1)², (√λ+1)²] and the GUE spectrum to the unit semicircle
//! (κ₂ = 1). The rectangle dimension is d = round(λ·nN); the realized
//! rate d/(nN) is reported alongside the sample.

use alloc::format;
use alloc::vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

use super::matrix::BlockHermitian;
use super::rng::GaussianSource;

/// Largest accepted full dimension n·N.
pub const DIM_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    Gue,
    Wishart,
    ShiftedWishart,
}

/// Everything that determines a sampled matrix, seed included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    /// Block count n.
    pub blocks: usize,
    /// Block dimension N.
    pub block_dim: usize,
    /// Wishart rate λ (ignored for GUE).
    pub rate: f64,
    /// Jump size α multiplying the Wishart part (shifted Wishart only).
    pub jump: f64,
    /// Shift c on the identity (shifted Wishart only).
    pub shift: f64,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn gue(blocks: usize, block_dim: usize, seed: u64) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::Gue,
            blocks,
            block_dim,
            rate: 0.0,
            jump: 0.0,
            shift: 0.0,
            seed,
        }
    }

    pub fn wishart(blocks: usize, block_dim: usize, rate: f64, seed: u64) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::Wishart,
            blocks,
            block_dim,
            rate,
            jump: 1.0,
            shift: 0.0,
            seed,
        }
    }

    /// X = c·I + α·W with W Wishart(λ).
    pub fn shifted_wishart(
        blocks: usize,
        block_dim: usize,
        rate: f64,
        jump: f64,
        shift: f64,
        seed: u64,
    ) -> Self {
        EnsembleSpec {
            kind: EnsembleKind::ShiftedWishart,
            blocks,
            block_dim,
            rate,
            jump,
            shift,
            seed,
        }
    }

    pub fn dim(&self) -> usize {
        self.blocks * self.block_dim
    }

    fn validate(&self) -> Result<()> {
        if self.blocks == 0 || self.block_dim == 0 {
            return Err(Error::domain("block structure must be nonempty"));
        }
        if self.dim() > DIM_CAP {
            return Err(Error::resource(format!(
                "dimension {} exceeds cap {DIM_CAP}",
                self.dim()
            )));
        }
        if matches!(self.kind, EnsembleKind::Wishart | EnsembleKind::ShiftedWishart)
            && self.rate <= 0.0
        {
            return Err(Error::domain("Wishart rate must be positive"));
        }
        Ok(())
    }
}

/// A sampled matrix plus the realized Wishart rate d/(nN) (None for GUE).
#[derive(Debug, Clone)]
pub struct Sample {
    pub matrix: BlockHermitian,
    pub lambda_realized: Option<f64>,
}

/// Draws the matrix determined by `spec`. Identical specs give
/// bit-identical matrices.
pub fn sample(spec: &EnsembleSpec) -> Result<Sample> {
    spec.validate()?;
    let mut gauss = GaussianSource::from_seed(spec.seed);
    match spec.kind {
        EnsembleKind::Gue => Ok(Sample {
            matrix: sample_gue(spec, &mut gauss)?,
            lambda_realized: None,
        }),
        EnsembleKind::Wishart => {
            let (w, realized) = sample_wishart(spec, &mut gauss)?;
            Ok(Sample {
                matrix: w,
                lambda_realized: Some(realized),
            })
        }
        EnsembleKind::ShiftedWishart => {
            let (mut w, realized) = sample_wishart(spec, &mut gauss)?;
            let dim = w.dim();
            for z in w.data_mut().iter_mut() {
                *z *= spec.jump;
            }
            for i in 0..dim {
                let v = w.entry(i, i) + spec.shift;
                w.set(i, i, v);
            }
            Ok(Sample {
                matrix: w,
                lambda_realized: Some(realized),
            })
        }
    }
}

/// Hermitian with independent complex Gaussian off-diagonals of variance
/// 1/(nN) and real N(0, 1/(nN)) diagonals. Fill order: row by row,
/// diagonal first.
fn sample_gue(spec: &EnsembleSpec, gauss: &mut GaussianSource) -> Result<BlockHermitian> {
    let dim = spec.dim();
    let scale = 1.0 / (dim as f64).sqrt();
    let mut m = BlockHermitian::zeros(spec.blocks, spec.block_dim)?;
    for i in 0..dim {
        m.set(i, i, Complex64::new(gauss.standard_normal() * scale, 0.0));
        for j in i + 1..dim {
            let z = gauss.complex_normal() * scale;
            m.set(i, j, z);
            m.set(j, i, z.conj());
        }
    }
    Ok(m)
}

/// W = BᴴB with B of shape d×(nN) and i.i.d. complex Gaussian entries of
/// variance 1/(nN), d = round(λ·nN).
///
/// B is generated and held column-major (each column of B contiguous),
/// split into real and imaginary planes so the inner products reduce to
/// four real dot products that vectorize well.
fn sample_wishart(spec: &EnsembleSpec, gauss: &mut GaussianSource) -> Result<(BlockHermitian, f64)> {
    let dim = spec.dim();
    let d = Float::round(spec.rate * dim as f64) as usize;
    if d == 0 {
        return Err(Error::domain("Wishart rectangle dimension rounds to zero"));
    }
    let scale = core::f64::consts::FRAC_1_SQRT_2 / (dim as f64).sqrt();
    let mut re = vec![0.0f64; dim * d];
    let mut im = vec![0.0f64; dim * d];
    // column i of B at offset i·d; generation order is (column, row)
    for i in 0..dim {
        for k in 0..d {
            re[i * d + k] = gauss.standard_normal() * scale;
            im[i * d + k] = gauss.standard_normal() * scale;
        }
    }
    let mut m = BlockHermitian::zeros(spec.blocks, spec.block_dim)?;
    let data = m.data_mut();
    for i in 0..dim {
        let (ar, ai) = (&re[i * d..(i + 1) * d], &im[i * d..(i + 1) * d]);
        // diagonal: Σ|B_ki|², exactly real
        data[i * dim + i] = Complex64::new(dot2(ar, ar) + dot2(ai, ai), 0.0);
        for j in i + 1..dim {
            let (br, bi) = (&re[j * d..(j + 1) * d], &im[j * d..(j + 1) * d]);
            let z = conj_dot(ar, ai, br, bi);
            data[i * dim + j] = z;
            data[j * dim + i] = z.conj();
        }
    }
    Ok((m, d as f64 / dim as f64))
}

/// Σ conj(a_k)·b_k over planar re/im slices.
#[inline]
fn conj_dot(ar: &[f64], ai: &[f64], br: &[f64], bi: &[f64]) -> Complex64 {
    let n = ar.len();
    let (mut rr0, mut rr1, mut rr2, mut rr3) = (0.0f64, 0.0, 0.0, 0.0);
    let (mut ii0, mut ii1, mut ii2, mut ii3) = (0.0f64, 0.0, 0.0, 0.0);
    let chunks = n / 4 * 4;
    let mut k = 0;
    while k < chunks {
        rr0 += ar[k] * br[k] + ai[k] * bi[k];
        ii0 += ar[k] * bi[k] - ai[k] * br[k];
        rr1 += ar[k + 1] * br[k + 1] + ai[k + 1] * bi[k + 1];
        ii1 += ar[k + 1] * bi[k + 1] - ai[k + 1] * br[k + 1];
        rr2 += ar[k + 2] * br[k + 2] + ai[k + 2] * bi[k + 2];
        ii2 += ar[k + 2] * bi[k + 2] - ai[k + 2] * br[k + 2];
        rr3 += ar[k + 3] * br[k + 3] + ai[k + 3] * bi[k + 3];
        ii3 += ar[k + 3] * bi[k + 3] - ai[k + 3] * br[k + 3];
        k += 4;
    }
    let (mut rr, mut ii) = ((rr0 + rr1) + (rr2 + rr3), (ii0 + ii1) + (ii2 + ii3));
    while k < n {
        rr += ar[k] * br[k] + ai[k] * bi[k];
        ii += ar[k] * bi[k] - ai[k] * br[k];
        k += 1;
    }
    Complex64::new(rr, ii)
}

#[inline]
fn dot2(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len();
    let (mut s0, mut s1, mut s2, mut s3) = (0.0f64, 0.0, 0.0, 0.0);
    let chunks = n / 4 * 4;
    let mut k = 0;
    while k < chunks {
        s0 += a[k] * b[k];
        s1 += a[k + 1] * b[k + 1];
        s2 += a[k + 2] * b[k + 2];
        s3 += a[k + 3] * b[k + 3];
        k += 4;
    }
    let mut s = (s0 + s1) + (s2 + s3);
    while k < n {
        s += a[k] * b[k];
        k += 1;
    }
    s
}
