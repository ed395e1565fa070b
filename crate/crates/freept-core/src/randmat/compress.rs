//! Compressions by Haar-random rank-k projections on the block factor.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::eig::hermitian_eigen;
use super::matrix::BlockHermitian;
use super::rng::GaussianSource;
use super::spectrum::Spectrum;

/// Spectrum of (Q ⊗ I_N)ᴴ · X · (Q ⊗ I_N) for a Haar-random n×k isometry
/// Q drawn from the projection stream of `seed` (QR of a complex
/// Gaussian). The (kN)×(kN) compression excludes the trivial kernel
/// directions by construction; k = n reproduces the spectrum of X up to
/// a random basis rotation.
pub fn project_compress(x: &BlockHermitian, k: usize, seed: u64) -> Result<Spectrum> {
    let n = x.blocks();
    let nn = x.block_dim();
    if k == 0 || k > n {
        return Err(Error::domain("projection rank must satisfy 1 <= k <= n"));
    }
    let mut gauss = GaussianSource::from_seed(seed);
    let q = haar_isometry(n, k, &mut gauss);

    // T = X·(Q ⊗ I): contract block columns of X against Q
    let dim = n * nn;
    let cdim = k * nn;
    let mut t = vec![Complex64::new(0.0, 0.0); dim * cdim];
    for row in 0..dim {
        for bp in 0..n {
            for b in 0..k {
                let qv = q[bp * k + b];
                if qv.norm_sqr() == 0.0 {
                    continue;
                }
                let src = &x.data()[row * dim + bp * nn..row * dim + (bp + 1) * nn];
                let dst = &mut t[row * cdim + b * nn..row * cdim + (b + 1) * nn];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += qv * s;
                }
            }
        }
    }
    // C = (Q ⊗ I)ᴴ·T
    let mut c = vec![Complex64::new(0.0, 0.0); cdim * cdim];
    for ap in 0..n {
        for a in 0..k {
            let qv = q[ap * k + a].conj();
            if qv.norm_sqr() == 0.0 {
                continue;
            }
            for i in 0..nn {
                let crow = a * nn + i;
                let trow = ap * nn + i;
                let src = &t[trow * cdim..(trow + 1) * cdim];
                let dst = &mut c[crow * cdim..(crow + 1) * cdim];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += qv * s;
                }
            }
        }
    }
    // symmetrize away round-off so the eigensolver's audit passes
    for i in 0..cdim {
        for j in i + 1..cdim {
            let avg = (c[i * cdim + j] + c[j * cdim + i].conj()) * 0.5;
            c[i * cdim + j] = avg;
            c[j * cdim + i] = avg.conj();
        }
        let di = c[i * cdim + i].re;
        c[i * cdim + i] = Complex64::new(di, 0.0);
    }
    let decomp = hermitian_eigen(cdim, &c, false)?;
    Ok(Spectrum::new(decomp.eigenvalues, k, nn))
}

/// First k columns of the Q factor of an n×k complex Gaussian, via
/// modified Gram-Schmidt with one reorthogonalization pass. Row-major
/// n×k output.
fn haar_isometry(n: usize, k: usize, gauss: &mut GaussianSource) -> Vec<Complex64> {
    let mut cols: Vec<Vec<Complex64>> = (0..k)
        .map(|_| (0..n).map(|_| gauss.complex_normal()).collect())
        .collect();
    for j in 0..k {
        for _ in 0..2 {
            for prev in 0..j {
                let mut proj = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    proj += cols[prev][i].conj() * cols[j][i];
                }
                for i in 0..n {
                    let adj = proj * cols[prev][i];
                    cols[j][i] -= adj;
                }
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in cols[j].iter_mut() {
            *z /= norm;
        }
    }
    let mut q = vec![Complex64::new(0.0, 0.0); n * k];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            q[i * k + j] = col[i];
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randmat::ensemble::{sample, EnsembleSpec};
    use crate::randmat::eig::eigvalsh;

    #[test]
    fn full_rank_compression_preserves_spectrum() {
        let spec = EnsembleSpec::shifted_wishart(3, 12, 2.0, -0.2, 1.0, 21);
        let x = sample(&spec).unwrap().matrix;
        let direct = eigvalsh(&x).unwrap();
        let compressed = project_compress(&x, 3, 99).unwrap();
        for (a, b) in direct.eigenvalues().iter().zip(compressed.eigenvalues()) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn identity_compresses_to_identity() {
        let x = BlockHermitian::identity(4, 6).unwrap();
        let s = project_compress(&x, 2, 5).unwrap();
        assert_eq!(s.dim(), 12);
        for v in s.eigenvalues() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn rank_bounds() {
        let x = BlockHermitian::identity(3, 2).unwrap();
        assert!(project_compress(&x, 0, 1).is_err());
        assert!(project_compress(&x, 4, 1).is_err());
    }

    #[test]
    fn isometry_columns_orthonormal() {
        let mut g = GaussianSource::from_seed(17);
        let n = 6;
        let k = 4;
        let q = haar_isometry(n, k, &mut g);
        for a in 0..k {
            for b in 0..k {
                let mut dot = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    dot += q[i * k + a].conj() * q[i * k + b];
                }
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((dot.re - expect).abs() < 1e-12 && dot.im.abs() < 1e-12);
            }
        }
    }
}
