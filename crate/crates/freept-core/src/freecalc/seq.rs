//! Moment and cumulant sequences and the maps between them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ncpart::{enumerate_nc, kreweras_complement, DEFAULT_ENUM_MAX};
use crate::scalar::Scalar;

use super::measure::Measure;

/// Truncated moment sequence (m_1..m_P); m_0 ≡ 1 is never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSequence<T: Scalar> {
    values: Vec<T>,
}

/// Truncated free-cumulant sequence (κ_1..κ_P).
#[derive(Debug, Clone, PartialEq)]
pub struct CumulantSequence<T: Scalar> {
    values: Vec<T>,
}

macro_rules! sequence_impl {
    ($name:ident) => {
        impl<T: Scalar> $name<T> {
            pub fn new(values: Vec<T>) -> Result<Self> {
                if values.is_empty() {
                    return Err(Error::domain("sequence order must be at least 1"));
                }
                Ok(Self { values })
            }

            /// Truncation order P.
            pub fn order(&self) -> usize {
                self.values.len()
            }

            pub fn values(&self) -> &[T] {
                &self.values
            }

            /// 1-based access: `get(p)` is the p-th entry, 1 ≤ p ≤ P.
            pub fn get(&self, p: usize) -> &T {
                &self.values[p - 1]
            }

            pub fn into_values(self) -> Vec<T> {
                self.values
            }

            /// Zero sequence of order `p` (the point mass δ_0).
            pub fn zero(p: usize) -> Result<Self> {
                Self::new(vec![T::zero(); p.max(1)])
            }
        }
    };
}

sequence_impl!(MomentSequence);
sequence_impl!(CumulantSequence);

/// R-transform of a cumulant sequence: the truncated power series with
/// coefficient κ_{p+1} on zᵖ, p = 0..P−1.
#[derive(Debug, Clone, PartialEq)]
pub struct RTransform<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> RTransform<T> {
    /// Coefficient of zᵖ, i.e. κ_{p+1}.
    pub fn coeff(&self, p: usize) -> &T {
        &self.coeffs[p]
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }
}

impl<T: Scalar> From<&CumulantSequence<T>> for RTransform<T> {
    fn from(k: &CumulantSequence<T>) -> Self {
        RTransform {
            coeffs: k.values().to_vec(),
        }
    }
}

/// Products of moments over all compositions of `r` into `s` nonnegative
/// gaps: h(s, r) = Σ_{g_1+…+g_s = r} m_{g_1}⋯m_{g_s}, with m_0 = 1.
///
/// `moments[j]` must hold m_j for j ≤ r. The table is the engine of the
/// first-block recursion m_p = Σ_s κ_s · h(s, p−s), which is the
/// moment-cumulant sum over NC(p) grouped by the block containing 1.
fn gap_products<T: Scalar>(moments: &[T], s: usize, r: usize) -> T {
    // h(s, ·) built iteratively as the s-fold convolution of (m_j)_j
    let mut row: Vec<T> = moments[..=r].to_vec();
    for _ in 1..s {
        let mut next = vec![T::zero(); r + 1];
        for (j, nj) in next.iter_mut().enumerate() {
            let mut acc = T::zero();
            for g in 0..=j {
                acc = acc + row[j - g].clone() * moments[g].clone();
            }
            *nj = acc;
        }
        row = next;
    }
    row[r].clone()
}

/// Free cumulants of a moment sequence, inverting the moment-cumulant
/// formula by recursive subtraction: κ_p = m_p − Σ_{s<p} κ_s·h(s, p−s).
/// Exact for exact scalars.
pub fn moments_to_cumulants<T: Scalar>(m: &MomentSequence<T>) -> CumulantSequence<T> {
    let order = m.order();
    let mut full = Vec::with_capacity(order + 1);
    full.push(T::one());
    full.extend(m.values().iter().cloned());
    let mut kappa: Vec<T> = Vec::with_capacity(order);
    for p in 1..=order {
        let mut value = full[p].clone();
        for (s, ks) in kappa.iter().enumerate().take(p - 1) {
            let s = s + 1;
            value = value - ks.clone() * gap_products(&full, s, p - s);
        }
        kappa.push(value);
    }
    CumulantSequence { values: kappa }
}

/// Moments of a cumulant sequence by direct evaluation of the
/// non-crossing sum, organized by the block containing 1.
pub fn cumulants_to_moments<T: Scalar>(k: &CumulantSequence<T>) -> MomentSequence<T> {
    let order = k.order();
    let mut full = Vec::with_capacity(order + 1);
    full.push(T::one());
    for p in 1..=order {
        let mut value = T::zero();
        for s in 1..=p {
            value = value + k.get(s).clone() * gap_products(&full, s, p - s);
        }
        full.push(value);
    }
    MomentSequence {
        values: full[1..].to_vec(),
    }
}

/// Free additive convolution ⊞: cumulants add.
pub fn free_add_convolve<T: Scalar>(
    a: &CumulantSequence<T>,
    b: &CumulantSequence<T>,
) -> Result<CumulantSequence<T>> {
    if a.order() != b.order() {
        return Err(Error::domain(format!(
            "order mismatch: {} vs {}",
            a.order(),
            b.order()
        )));
    }
    let values = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| x.clone() + y.clone())
        .collect();
    Ok(CumulantSequence { values })
}

/// Free convolution power μ^{⊞t}: κ_p ↦ t·κ_p. The semigroup is only
/// guaranteed for t ≥ 1, so smaller exponents are rejected.
pub fn free_power<T: Scalar>(a: &CumulantSequence<T>, t: &T) -> Result<CumulantSequence<T>> {
    if *t < T::one() {
        return Err(Error::domain("free convolution power requires t >= 1"));
    }
    let values = a.values().iter().map(|x| t.clone() * x.clone()).collect();
    Ok(CumulantSequence { values })
}

/// Moments of the free multiplicative convolution a ⊠ b via the Kreweras
/// sum m_p = Σ_{π∈NC(p)} κ_π(a) · m_{K(π)}(b).
///
/// At least one factor must have nonnegative support for ⊠ to be a
/// distribution of a self-adjoint element; the caller asserts this.
pub fn free_mult_moments<T: Scalar>(
    a: &Measure<T>,
    b: &Measure<T>,
    order: usize,
) -> Result<MomentSequence<T>> {
    if order == 0 || order > DEFAULT_ENUM_MAX {
        return Err(Error::domain(format!(
            "order {order} outside 1..={DEFAULT_ENUM_MAX}"
        )));
    }
    let ka = a.cumulants(order)?;
    let mb = b.moments(order)?;
    let mut values = Vec::with_capacity(order);
    for p in 1..=order {
        let mut acc = T::zero();
        for part in enumerate_nc(p)? {
            let mut term = T::one();
            for block in part.blocks() {
                term = term * ka.get(block.len()).clone();
            }
            let complement = kreweras_complement(&part)?;
            for block in complement.blocks() {
                term = term * mb.get(block.len()).clone();
            }
            acc = acc + term;
        }
        values.push(acc);
    }
    Ok(MomentSequence { values })
}
