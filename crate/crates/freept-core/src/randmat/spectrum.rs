//! Spectra and empirical spectral statistics.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freecalc::MomentSequence;

use super::ensemble::EnsembleKind;

/// Ascending eigenvalues of an (nN)×(nN) matrix, with the block split
/// and optional sampling provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    blocks: usize,
    block_dim: usize,
    seed: Option<u64>,
    tag: Option<EnsembleKind>,
}

impl Spectrum {
    pub(crate) fn new(eigenvalues: Vec<f64>, blocks: usize, block_dim: usize) -> Self {
        debug_assert!(eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        Spectrum {
            eigenvalues,
            blocks,
            block_dim,
            seed: None,
            tag: None,
        }
    }

    pub fn with_meta(mut self, seed: u64, tag: EnsembleKind) -> Self {
        self.seed = Some(seed);
        self.tag = Some(tag);
        self
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn tag(&self) -> Option<EnsembleKind> {
        self.tag
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }
}

/// m_p = (1/dim)·Σ λ_iᵖ for p = 1..P, summed in ascending eigenvalue
/// order so results are reproducible bit for bit.
pub fn empirical_moments(s: &Spectrum, order: usize) -> Result<MomentSequence<f64>> {
    if order == 0 {
        return Err(Error::domain("order must be at least 1"));
    }
    let dim = s.dim() as f64;
    let mut values = Vec::with_capacity(order);
    let mut powers: Vec<f64> = s.eigenvalues.clone();
    for _ in 1..=order {
        values.push(powers.iter().sum::<f64>() / dim);
        for (pw, base) in powers.iter_mut().zip(&s.eigenvalues) {
            *pw *= base;
        }
    }
    MomentSequence::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_spectrum() {
        let s = Spectrum::new(alloc::vec![1.0, 1.0, 1.0], 1, 3);
        let m = empirical_moments(&s, 4).unwrap();
        assert_eq!(m.values(), &[1.0, 1.0, 1.0, 1.0]);
    }

    #[test]
    fn symmetric_pair() {
        let s = Spectrum::new(alloc::vec![-1.0, 1.0], 1, 2);
        let m = empirical_moments(&s, 5).unwrap();
        assert_eq!(m.values(), &[0.0, 1.0, 0.0, 1.0, 0.0]);
    }
}
