//! Dense Hermitian matrices with an n×N block structure.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance for Hermiticity audits (sampled matrices are
/// Hermitian by construction and pass exactly).
pub const HERMITICITY_TOL: f64 = 1e-13;

/// An (nN)×(nN) complex Hermitian matrix carrying its tensor split into
/// n blocks of size N. Row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockHermitian {
    blocks: usize,
    block_dim: usize,
    data: Vec<Complex64>,
}

impl BlockHermitian {
    /// Wraps raw row-major data of dimension (n·N)². The Hermiticity
    /// contract is the caller's; use [`BlockHermitian::is_hermitian_within`]
    /// to audit.
    pub fn from_data(blocks: usize, block_dim: usize, data: Vec<Complex64>) -> Result<Self> {
        let dim = blocks * block_dim;
        if blocks == 0 || block_dim == 0 {
            return Err(Error::domain("block structure must be nonempty"));
        }
        if data.len() != dim * dim {
            return Err(Error::domain(format!(
                "data length {} does not match ({blocks}·{block_dim})²",
                data.len()
            )));
        }
        Ok(BlockHermitian {
            blocks,
            block_dim,
            data,
        })
    }

    pub fn zeros(blocks: usize, block_dim: usize) -> Result<Self> {
        let dim = blocks * block_dim;
        if blocks == 0 || block_dim == 0 {
            return Err(Error::domain("block structure must be nonempty"));
        }
        Ok(BlockHermitian {
            blocks,
            block_dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(blocks: usize, block_dim: usize) -> Result<Self> {
        let mut m = Self::zeros(blocks, block_dim)?;
        let dim = m.dim();
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    /// Number of blocks n along one tensor factor.
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    /// Block dimension N.
    pub fn block_dim(&self) -> usize {
        self.block_dim
    }

    /// Full dimension n·N.
    pub fn dim(&self) -> usize {
        self.blocks * self.block_dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        let dim = self.dim();
        self.data[row * dim + col] = value;
    }

    /// Trace, accumulated in index order.
    pub fn trace(&self) -> Complex64 {
        let dim = self.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..dim {
            acc += self.data[i * dim + i];
        }
        acc
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ‖A − Aᴴ‖_F ≤ tol·‖A‖_F.
    pub fn is_hermitian_within(&self, tol: f64) -> bool {
        let dim = self.dim();
        let mut asym = 0.0;
        for i in 0..dim {
            for j in i..dim {
                let d = self.data[i * dim + j] - self.data[j * dim + i].conj();
                asym += d.norm_sqr();
            }
        }
        asym.sqrt() <= tol * self.frobenius_norm().max(f64::MIN_POSITIVE)
    }
}

/// Block transpose: output block (i,j) is input block (j,i). Entries are
/// moved, never recomputed, so Hermiticity, the trace and the entry
/// multiset are preserved exactly and the map is an exact involution.
pub fn partial_transpose(x: &BlockHermitian) -> BlockHermitian {
    let n = x.blocks;
    let nn = x.block_dim;
    let dim = x.dim();
    let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..n {
        for j in 0..n {
            for a in 0..nn {
                let src_row = j * nn + a;
                let dst_row = i * nn + a;
                let src = &x.data[src_row * dim + i * nn..src_row * dim + i * nn + nn];
                let dst = &mut out[dst_row * dim + j * nn..dst_row * dim + j * nn + nn];
                dst.copy_from_slice(src);
            }
        }
    }
    BlockHermitian {
        blocks: n,
        block_dim: nn,
        data: out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randmat::rng::GaussianSource;

    fn random_hermitian(n: usize, nn: usize, seed: u64) -> BlockHermitian {
        let dim = n * nn;
        let mut g = GaussianSource::from_seed(seed);
        let mut m = BlockHermitian::zeros(n, nn).unwrap();
        for i in 0..dim {
            m.set(i, i, Complex64::new(g.standard_normal(), 0.0));
            for j in i + 1..dim {
                let z = g.complex_normal();
                m.set(i, j, z);
                m.set(j, i, z.conj());
            }
        }
        m
    }

    #[test]
    fn involution_and_trace() {
        let x = random_hermitian(3, 4, 5);
        let y = partial_transpose(&x);
        assert!(y.is_hermitian_within(HERMITICITY_TOL));
        assert_eq!(partial_transpose(&y), x);
        assert_eq!(y.trace(), x.trace());
    }

    #[test]
    fn n_equals_one_is_identity() {
        let x = random_hermitian(1, 5, 9);
        assert_eq!(partial_transpose(&x), x);
    }

    #[test]
    fn diagonal_blocks_only_fixed_up_to_block_transpose() {
        // zero off-diagonal blocks, each diagonal block Hermitian: the
        // matrix is unchanged
        let n = 3;
        let nn = 3;
        let mut x = BlockHermitian::zeros(n, nn).unwrap();
        let mut g = GaussianSource::from_seed(3);
        for b in 0..n {
            for a in 0..nn {
                let row = b * nn + a;
                x.set(row, row, Complex64::new(g.standard_normal(), 0.0));
                for c in a + 1..nn {
                    let col = b * nn + c;
                    let z = g.complex_normal();
                    x.set(row, col, z);
                    x.set(col, row, z.conj());
                }
            }
        }
        assert_eq!(partial_transpose(&x), x);
    }

    #[test]
    fn hermiticity_audit_catches_breakage() {
        let mut x = random_hermitian(2, 3, 1);
        assert!(x.is_hermitian_within(HERMITICITY_TOL));
        x.set(0, 1, x.entry(0, 1) + Complex64::new(0.1, 0.0));
        assert!(!x.is_hermitian_within(HERMITICITY_TOL));
    }

    #[test]
    fn shape_validation() {
        assert!(BlockHermitian::from_data(2, 2, vec![Complex64::new(0.0, 0.0); 15]).is_err());
        assert!(BlockHermitian::zeros(0, 4).is_err());
    }
}
