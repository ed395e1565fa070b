//! Hermitian eigensolver: Householder reduction to real symmetric
//! tridiagonal form followed by implicit-shift QL iteration.
//!
//! The reduction follows the EISPACK htridi/tql2 lineage. Complex
//! reflectors bring the matrix to Hermitian tridiagonal form with complex
//! subdiagonals; a unitary diagonal phase rescaling makes the subdiagonal
//! real without touching eigenvalues. Eigenvectors are accumulated only
//! on request; the reconstruction residual ‖X − QΛQᴴ‖ ≤ 1e-10·‖X‖ is part
//! of the contract and enforced in tests.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

use super::matrix::{BlockHermitian, HERMITICITY_TOL};
use super::spectrum::Spectrum;

const MAX_QL_SWEEPS: usize = 50;

/// Eigenvalues (ascending) and, optionally, matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    /// Row-major dim×dim unitary; column j pairs with eigenvalue j.
    pub vectors: Option<Vec<Complex64>>,
}

/// Spectrum of a block Hermitian matrix. Rejects inputs whose
/// anti-Hermitian part exceeds 1e-13·‖X‖_F.
pub fn eigvalsh(x: &BlockHermitian) -> Result<Spectrum> {
    if !x.is_hermitian_within(HERMITICITY_TOL) {
        return Err(Error::domain("matrix is not Hermitian within tolerance"));
    }
    let decomp = hermitian_eigen(x.dim(), x.data(), false)?;
    Ok(Spectrum::new(
        decomp.eigenvalues,
        x.blocks(),
        x.block_dim(),
    ))
}

/// Dense Hermitian eigensolver on raw row-major data. The strict lower
/// triangle and real diagonal parts drive the computation; the upper
/// triangle is assumed conjugate.
pub fn hermitian_eigen(
    dim: usize,
    data: &[Complex64],
    want_vectors: bool,
) -> Result<EigenDecomposition> {
    if data.len() != dim * dim {
        return Err(Error::domain("data length does not match dimension"));
    }
    if dim == 0 {
        return Err(Error::domain("matrix must be nonempty"));
    }
    let mut a = data.to_vec();
    let (mut d, e, reflectors) = tridiagonalize(dim, &mut a);

    // phase rescaling: make the subdiagonal real nonnegative
    let mut phases = vec![Complex64::new(1.0, 0.0); dim];
    let mut e_abs = vec![0.0f64; dim];
    for i in 1..dim {
        let mag = e[i].norm();
        e_abs[i] = mag;
        phases[i] = if mag > 0.0 {
            phases[i - 1] * (e[i] / mag)
        } else {
            phases[i - 1]
        };
    }

    let mut z = if want_vectors {
        // columns of Q = (Π reflectors)·diag(phases)
        let mut q = vec![Complex64::new(0.0, 0.0); dim * dim];
        for j in 0..dim {
            q[j * dim + j] = phases[j];
        }
        apply_reflectors(dim, &reflectors, &mut q);
        Some(q)
    } else {
        None
    };

    ql_implicit(&mut d, &mut e_abs, dim, z.as_deref_mut())?;

    // ascending sort, permuting eigenvector columns alongside
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_unstable_by(|&i, &j| d[i].partial_cmp(&d[j]).expect("eigenvalues are finite"));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = z.map(|zm| {
        let mut sorted = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..dim {
                sorted[row * dim + new_col] = zm[row * dim + old_col];
            }
        }
        sorted
    });
    Ok(EigenDecomposition {
        eigenvalues,
        vectors,
    })
}

struct Reflector {
    /// Pivot column index k; the reflector acts on rows k+1..dim.
    start: usize,
    v: Vec<Complex64>,
    beta: f64,
}

/// In-place Householder reduction. Returns the real diagonal, the complex
/// subdiagonal (e[i] couples i−1 and i; e[0] unused) and the reflectors.
/// Only the lower triangle of `a` is read or written.
fn tridiagonalize(
    dim: usize,
    a: &mut [Complex64],
) -> (Vec<f64>, Vec<Complex64>, Vec<Reflector>) {
    let mut d = vec![0.0f64; dim];
    let mut e = vec![Complex64::new(0.0, 0.0); dim];
    let mut reflectors = Vec::with_capacity(dim.saturating_sub(2));

    for k in 0..dim.saturating_sub(2) {
        let m = dim - k - 1; // active column height below the diagonal
        // column k below diagonal
        let mut norm_sq = 0.0;
        for i in 0..m {
            norm_sq += a[(k + 1 + i) * dim + k].norm_sqr();
        }
        let x0 = a[(k + 1) * dim + k];
        let norm = norm_sq.sqrt();
        if norm == 0.0 {
            e[k + 1] = Complex64::new(0.0, 0.0);
            d[k] = a[k * dim + k].re;
            continue;
        }
        // alpha = -phase(x0)·‖x‖ avoids cancellation in v = x − α·e₁
        let alpha = if x0.norm() > 0.0 {
            -(x0 / x0.norm()) * norm
        } else {
            Complex64::new(-norm, 0.0)
        };
        let mut v = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..m {
            v[i] = a[(k + 1 + i) * dim + k];
        }
        v[0] -= alpha;
        let v_norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if v_norm_sq == 0.0 {
            e[k + 1] = alpha;
            d[k] = a[k * dim + k].re;
            continue;
        }
        let beta = 2.0 / v_norm_sq;

        // p = β·A_sub·v in one streaming pass over the lower triangle,
        // folding in the conjugate upper part as each row goes by
        let mut p = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..m {
            let row = (k + 1 + i) * dim + k + 1;
            let vi = v[i];
            let mut acc = a[row + i] * vi;
            for j in 0..i {
                let aij = a[row + j];
                acc += aij * v[j];
                p[j] += aij.conj() * vi;
            }
            p[i] += acc;
        }
        for z in p.iter_mut() {
            *z *= beta;
        }
        // w = p − (β/2)·(vᴴp)·v keeps the update rank two
        let mut vhp = Complex64::new(0.0, 0.0);
        for i in 0..m {
            vhp += v[i].conj() * p[i];
        }
        let correction = vhp * (beta / 2.0);
        let w: Vec<Complex64> = p
            .iter()
            .zip(v.iter())
            .map(|(pi, vi)| pi - correction * vi)
            .collect();
        // A_sub ← A_sub − v·wᴴ − w·vᴴ (lower triangle)
        for i in 0..m {
            let row = (k + 1 + i) * dim + k + 1;
            let vi = v[i];
            let wi = w[i];
            for j in 0..=i {
                a[row + j] -= vi * w[j].conj() + wi * v[j].conj();
            }
        }

        d[k] = a[k * dim + k].re;
        e[k + 1] = alpha;
        a[(k + 1) * dim + k] = alpha;
        reflectors.push(Reflector {
            start: k + 1,
            v,
            beta,
        });
    }
    if dim >= 2 {
        d[dim - 2] = a[(dim - 2) * dim + dim - 2].re;
        e[dim - 1] = a[(dim - 1) * dim + dim - 2];
    }
    d[dim - 1] = a[(dim - 1) * dim + dim - 1].re;
    (d, e, reflectors)
}

/// Applies the stored reflectors to the columns of `q` (left
/// multiplication by H_1·H_2·…, i.e. in reverse build order).
fn apply_reflectors(dim: usize, reflectors: &[Reflector], q: &mut [Complex64]) {
    for refl in reflectors.iter().rev() {
        let s = refl.start;
        let m = refl.v.len();
        for col in 0..dim {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in 0..m {
                dot += refl.v[i].conj() * q[(s + i) * dim + col];
            }
            dot *= refl.beta;
            for i in 0..m {
                let idx = (s + i) * dim + col;
                q[idx] -= refl.v[i] * dot;
            }
        }
    }
}

/// Implicit-shift QL on a real symmetric tridiagonal (d, e), e[i]
/// coupling rows i−1 and i (e[0] unused). Rotations accumulate into the
/// complex columns of `z` when present.
fn ql_implicit(d: &mut [f64], e: &mut [f64], dim: usize, mut z: Option<&mut [Complex64]>) -> Result<()> {
    if dim == 1 {
        return Ok(());
    }
    // shift couplings down: e[i] couples i and i+1 from here on
    for i in 1..dim {
        e[i - 1] = e[i];
    }
    e[dim - 1] = 0.0;

    for l in 0..dim {
        let mut iter = 0;
        loop {
            // find the isolated block [l..=m]
            let mut m = l;
            while m + 1 < dim {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m].abs() < 1e-300 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_QL_SWEEPS {
                return Err(Error::domain("QL iteration did not converge"));
            }
            // Wilkinson-style shift
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + copysign(r, g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            let mut i = m;
            while i > l {
                let idx = i - 1;
                let f = s * e[idx];
                let b = c * e[idx];
                r = hypot(f, g);
                e[i] = r;
                if r == 0.0 {
                    d[i] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i] - p;
                r = (d[idx] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i] = g + p;
                g = c * r - b;
                if let Some(zm) = z.as_deref_mut() {
                    for row in 0..dim {
                        let hi = zm[row * dim + i];
                        let lo = zm[row * dim + idx];
                        zm[row * dim + i] = s * lo + c * hi;
                        zm[row * dim + idx] = c * lo - s * hi;
                    }
                }
                i -= 1;
            }
            if r == 0.0 && i > l {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[inline]
fn hypot(a: f64, b: f64) -> f64 {
    Float::hypot(a, b)
}

#[inline]
fn copysign(a: f64, b: f64) -> f64 {
    Float::copysign(a, b)
}
