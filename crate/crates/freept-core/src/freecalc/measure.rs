//! Named measure families and their truncated sequences.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::seq::{moments_to_cumulants, CumulantSequence, MomentSequence};

/// Weight-sum tolerance for atomic measures over floats; exact scalars
/// must sum to one exactly.
const WEIGHT_TOL: f64 = 1e-12;

/// A compactly supported measure from one of the families the calculus
/// needs. Everything reduces to truncated cumulants on demand;
/// closed-form support is kept only where a family has one.
#[derive(Debug, Clone, PartialEq)]
pub enum Measure<T: Scalar> {
    /// Finitely many atoms (location, weight); weights are nonnegative
    /// and sum to one.
    Atomic(Vec<(T, T)>),
    /// Centered semicircle with κ_2 = scale²; support [−2·scale, 2·scale].
    Semicircle { scale: T },
    /// Free Poisson (Marchenko–Pastur) with rate λ ≥ 0 and jump size α:
    /// κ_p = λ·αᵖ.
    FreePoisson { rate: T, jump: T },
    /// Compound free Poisson with rate λ and atomic jump distribution η:
    /// κ_p = λ·m_p(η).
    CompoundFreePoisson { rate: T, jumps: Vec<(T, T)> },
    /// Affine shift of an inner measure by c (free convolution with δ_c).
    Shifted { inner: Box<Measure<T>>, shift: T },
}

fn validate_atoms<T: Scalar>(atoms: &[(T, T)]) -> Result<()> {
    if atoms.is_empty() {
        return Err(Error::domain("atomic measure needs at least one atom"));
    }
    let mut sum = T::zero();
    for (_, w) in atoms {
        if *w < T::zero() {
            return Err(Error::domain("atomic weights must be nonnegative"));
        }
        sum = sum + w.clone();
    }
    let ok = if T::is_exact() {
        sum == T::one()
    } else {
        (sum - T::one()).abs().to_f64_lossy() <= WEIGHT_TOL
    };
    if !ok {
        return Err(Error::domain("atomic weights must sum to one"));
    }
    Ok(())
}

impl<T: Scalar> Measure<T> {
    pub fn atomic(atoms: Vec<(T, T)>) -> Result<Self> {
        validate_atoms(&atoms)?;
        Ok(Measure::Atomic(atoms))
    }

    pub fn point_mass(location: T) -> Self {
        Measure::Atomic(alloc::vec![(location, T::one())])
    }

    /// Bernoulli projection law β_t = (1−t)δ_0 + tδ_1.
    pub fn bernoulli(t: T) -> Result<Self> {
        Self::atomic(alloc::vec![
            (T::zero(), T::one() - t.clone()),
            (T::one(), t)
        ])
    }

    pub fn semicircle(scale: T) -> Self {
        Measure::Semicircle { scale }
    }

    pub fn free_poisson(rate: T, jump: T) -> Result<Self> {
        if rate < T::zero() {
            return Err(Error::domain("free Poisson rate must be nonnegative"));
        }
        Ok(Measure::FreePoisson { rate, jump })
    }

    pub fn compound_free_poisson(rate: T, jumps: Vec<(T, T)>) -> Result<Self> {
        if rate < T::zero() {
            return Err(Error::domain("compound free Poisson rate must be nonnegative"));
        }
        validate_atoms(&jumps)?;
        Ok(Measure::CompoundFreePoisson { rate, jumps })
    }

    pub fn shifted(inner: Measure<T>, shift: T) -> Self {
        Measure::Shifted {
            inner: Box::new(inner),
            shift,
        }
    }

    /// Truncated cumulants κ_1..κ_P.
    pub fn cumulants(&self, order: usize) -> Result<CumulantSequence<T>> {
        if order == 0 {
            return Err(Error::domain("order must be at least 1"));
        }
        match self {
            Measure::Atomic(_) => Ok(moments_to_cumulants(&self.moments(order)?)),
            Measure::Semicircle { scale } => {
                let mut values = alloc::vec![T::zero(); order];
                if order >= 2 {
                    values[1] = scale.clone() * scale.clone();
                }
                CumulantSequence::new(values)
            }
            Measure::FreePoisson { rate, jump } => {
                let values = (1..=order)
                    .map(|p| rate.clone() * jump.pow_u32(p as u32))
                    .collect();
                CumulantSequence::new(values)
            }
            Measure::CompoundFreePoisson { rate, jumps } => {
                let values = (1..=order)
                    .map(|p| rate.clone() * atomic_moment(jumps, p))
                    .collect();
                CumulantSequence::new(values)
            }
            Measure::Shifted { inner, shift } => {
                let mut k = inner.cumulants(order)?.into_values();
                k[0] = k[0].clone() + shift.clone();
                CumulantSequence::new(k)
            }
        }
    }

    /// Truncated moments m_1..m_P.
    pub fn moments(&self, order: usize) -> Result<MomentSequence<T>> {
        if order == 0 {
            return Err(Error::domain("order must be at least 1"));
        }
        match self {
            Measure::Atomic(atoms) => {
                let values = (1..=order).map(|p| atomic_moment(atoms, p)).collect();
                MomentSequence::new(values)
            }
            _ => Ok(super::seq::cumulants_to_moments(&self.cumulants(order)?)),
        }
    }

    pub fn as_atoms(&self) -> Option<&[(T, T)]> {
        match self {
            Measure::Atomic(atoms) => Some(atoms),
            _ => None,
        }
    }
}

/// Σ_i w_i·t_iᵖ over an atom list.
fn atomic_moment<T: Scalar>(atoms: &[(T, T)], p: usize) -> T {
    let mut acc = T::zero();
    for (loc, w) in atoms {
        acc = acc + w.clone() * loc.pow_u32(p as u32);
    }
    acc
}

/// κ_p = λ·αᵖ, the free Poisson cumulant sequence.
pub fn free_poisson_cumulants<T: Scalar>(rate: T, jump: T, order: usize) -> Result<CumulantSequence<T>> {
    Measure::free_poisson(rate, jump)?.cumulants(order)
}

/// κ_p = λ·m_p(η) for an atomic jump distribution η. Rejects η that is
/// not an atomic measure.
pub fn compound_free_poisson_cumulants<T: Scalar>(
    rate: T,
    eta: &Measure<T>,
    order: usize,
) -> Result<CumulantSequence<T>> {
    let atoms = eta.as_atoms().ok_or_else(|| {
        Error::domain(format!(
            "compound free Poisson needs an atomic jump distribution, got {eta:?}"
        ))
    })?;
    Measure::compound_free_poisson(rate, atoms.to_vec())?.cumulants(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use num_traits::{One, Zero};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    #[test]
    fn atomic_validation() {
        assert!(Measure::atomic(alloc::vec![(rat(1, 1), rat(1, 2))]).is_err());
        assert!(Measure::atomic(alloc::vec![(rat(1, 1), rat(-1, 2)), (rat(0, 1), rat(3, 2))]).is_err());
        assert!(Measure::<Rat>::atomic(alloc::vec![]).is_err());
        assert!(Measure::atomic(alloc::vec![(rat(2, 1), rat(1, 3)), (rat(-1, 1), rat(2, 3))]).is_ok());
        // float tolerance applies
        assert!(Measure::atomic(alloc::vec![(0.0f64, 0.5 + 1e-14), (1.0, 0.5)]).is_ok());
        assert!(Measure::atomic(alloc::vec![(0.0f64, 0.6), (1.0, 0.5)]).is_err());
    }

    #[test]
    fn free_poisson_cumulant_formula() {
        let k = free_poisson_cumulants(rat(1, 1), rat(1, 1), 5).unwrap();
        assert!(k.values().iter().all(|v| *v == Rat::one()));
        let k = free_poisson_cumulants(rat(4, 1), rat(-1, 8), 4).unwrap();
        for p in 1..=4u32 {
            assert_eq!(k.get(p as usize), &(rat(4, 1) * rat(-1, 8).pow_u32(p)));
        }
        let zero = free_poisson_cumulants(Rat::zero(), rat(3, 1), 4).unwrap();
        assert!(zero.values().iter().all(|v| v.is_zero()));
        assert!(free_poisson_cumulants(rat(-1, 1), rat(1, 1), 4).is_err());
    }

    #[test]
    fn compound_reduces_to_free_poisson_on_point_jump() {
        let eta = Measure::point_mass(rat(-1, 8));
        let a = compound_free_poisson_cumulants(rat(4, 1), &eta, 6).unwrap();
        let b = free_poisson_cumulants(rat(4, 1), rat(-1, 8), 6).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn compound_rejects_non_atomic() {
        let eta = Measure::semicircle(Rat::one());
        assert!(compound_free_poisson_cumulants(rat(1, 1), &eta, 4).is_err());
    }

    #[test]
    fn shifted_moves_first_cumulant() {
        let inner = Measure::free_poisson(rat(4, 1), rat(-1, 8)).unwrap();
        let shifted = Measure::shifted(inner.clone(), Rat::one());
        let k0 = inner.cumulants(4).unwrap();
        let k1 = shifted.cumulants(4).unwrap();
        assert_eq!(k1.get(1), &(k0.get(1).clone() + Rat::one()));
        assert_eq!(&k1.values()[1..], &k0.values()[1..]);
    }

    #[test]
    fn semicircle_moments() {
        let m = Measure::semicircle(Rat::one()).moments(6).unwrap();
        // Catalan numbers at even orders: 1, 2, 5
        let expect: alloc::vec::Vec<Rat> = [0, 1, 0, 2, 0, 5].iter().map(|&v| Rat::from_int(v)).collect();
        assert_eq!(m.values(), &expect[..]);
    }
}
