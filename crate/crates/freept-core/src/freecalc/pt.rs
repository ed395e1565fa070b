//! The partial-transpose cumulant map and its two derivations.
//!
//! For x with cumulants κ_p living in an n-block structure, the partial
//! transpose has κ_p(μ^Γ) = c(n,p)·κ_p/nᵖ with c(n,p) = n for odd p and
//! n² for even p. The same map falls out of the R-transform combination
//! R_{μ^Γ}(z) = (1+n)/2·R(z/n) + (1−n)/2·R(−z/n); both routes are
//! implemented independently and must agree (exactly, for exact scalars).
//!
//! The map is not an involution on cumulant sequences: it encodes the
//! transpose of a Haar-invariant ensemble, and μ^Γ is no longer Haar
//! invariant, so applying it twice does not return the input for p ≥ 4.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::measure::Measure;
use super::seq::{CumulantSequence, RTransform};

/// Block structure parameter for the partial transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PTContext {
    n: u32,
}

impl PTContext {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("block count n must be at least 1"));
        }
        Ok(PTContext { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// c(n,p): n for odd p, n² for even p.
    fn c<T: Scalar>(&self, p: usize) -> T {
        let n = self.n as i64;
        if p % 2 == 0 {
            T::from_int(n * n)
        } else {
            T::from_int(n)
        }
    }
}

/// κ_p ↦ c(n,p)·κ_p/nᵖ.
pub fn pt_cumulants<T: Scalar>(a: &CumulantSequence<T>, ctx: PTContext) -> CumulantSequence<T> {
    let n = T::from_int(ctx.n as i64);
    let values: Vec<T> = a
        .values()
        .iter()
        .enumerate()
        .map(|(i, k)| {
            let p = i + 1;
            ctx.c::<T>(p) * k.clone() / n.pow_u32(p as u32)
        })
        .collect();
    CumulantSequence::new(values).expect("input sequence is nonempty")
}

/// The same map evaluated coefficient-wise on the R-series:
/// κ'_p = (1+n)/2·κ_p·(1/n)^{p−1} + (1−n)/2·κ_p·(−1/n)^{p−1}.
pub fn pt_r_series<T: Scalar>(a: &CumulantSequence<T>, ctx: PTContext) -> CumulantSequence<T> {
    let n = ctx.n as i64;
    let r = RTransform::from(a);
    let inv_n = T::one() / T::from_int(n);
    let half_sum = T::from_ratio(1 + n, 2);
    let half_diff = T::from_ratio(1 - n, 2);
    let values: Vec<T> = (0..r.degree_bound())
        .map(|p| {
            let coeff = r.coeff(p);
            let plus = inv_n.pow_u32(p as u32);
            let minus = (T::zero() - inv_n.clone()).pow_u32(p as u32);
            half_sum.clone() * coeff.clone() * plus + half_diff.clone() * coeff.clone() * minus
        })
        .collect();
    CumulantSequence::new(values).expect("input sequence is nonempty")
}

/// Jump distribution of the partial-transposed free Poisson law:
/// η = (n+1)/2n·δ_{α/n} + (n−1)/2n·δ_{−α/n}. For n = 1 the second atom
/// has weight zero and is dropped.
pub fn pt_jump_measure<T: Scalar>(ctx: PTContext, jump: T) -> Measure<T> {
    let n = ctx.n as i64;
    let loc = jump / T::from_int(n);
    if n == 1 {
        return Measure::point_mass(loc);
    }
    let atoms = alloc::vec![
        (loc.clone(), T::from_ratio(n + 1, 2 * n)),
        (T::zero() - loc, T::from_ratio(n - 1, 2 * n)),
    ];
    Measure::atomic(atoms).expect("weights are nonnegative and sum to one")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freecalc::measure::free_poisson_cumulants;
    use crate::scalar::Rat;
    use num_traits::{One, Zero};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::from_ratio(n, d)
    }

    fn kseq(vals: &[Rat]) -> CumulantSequence<Rat> {
        CumulantSequence::new(vals.to_vec()).unwrap()
    }

    #[test]
    fn n_equals_one_is_identity() {
        let ctx = PTContext::new(1).unwrap();
        let k = kseq(&[rat(3, 2), rat(-1, 7), rat(5, 3), rat(2, 9)]);
        assert_eq!(pt_cumulants(&k, ctx), k);
        assert_eq!(pt_r_series(&k, ctx), k);
    }

    #[test]
    fn semicircle_is_fixed() {
        for n in 1..=5 {
            let ctx = PTContext::new(n).unwrap();
            let k = kseq(&[Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()]);
            assert_eq!(pt_cumulants(&k, ctx), k);
            assert_eq!(pt_r_series(&k, ctx), k);
        }
    }

    #[test]
    fn point_mass_is_fixed() {
        let ctx = PTContext::new(3).unwrap();
        let k = kseq(&[rat(7, 5), Rat::zero(), Rat::zero()]);
        assert_eq!(pt_r_series(&k, ctx), k);
        assert_eq!(pt_cumulants(&k, ctx), k);
    }

    #[test]
    fn free_poisson_n2_worked_example() {
        // κ^Γ = (λα, λα², λα³/4, …) at n=2
        let ctx = PTContext::new(2).unwrap();
        let (lam, al) = (rat(4, 1), rat(-1, 8));
        let k = free_poisson_cumulants(lam.clone(), al.clone(), 3).unwrap();
        let pt = pt_cumulants(&k, ctx);
        assert_eq!(pt.get(1), &(lam.clone() * al.clone()));
        assert_eq!(pt.get(2), &(lam.clone() * al.pow_u32(2)));
        assert_eq!(pt.get(3), &(lam * al.pow_u32(3) / rat(4, 1)));
    }

    #[test]
    fn not_an_involution_beyond_order_three() {
        let ctx = PTContext::new(2).unwrap();
        let k = free_poisson_cumulants(rat(1, 1), rat(1, 1), 4).unwrap();
        let twice = pt_cumulants(&pt_cumulants(&k, ctx), ctx);
        assert_ne!(twice.get(4), k.get(4));
    }

    #[test]
    fn jump_measure_atoms() {
        let ctx = PTContext::new(2).unwrap();
        let eta = pt_jump_measure(ctx, Rat::one());
        assert_eq!(
            eta.as_atoms().unwrap(),
            &[(rat(1, 2), rat(3, 4)), (rat(-1, 2), rat(1, 4))]
        );
        let eta = pt_jump_measure(PTContext::new(3).unwrap(), rat(-3, 1));
        assert_eq!(
            eta.as_atoms().unwrap(),
            &[(rat(-1, 1), rat(2, 3)), (rat(1, 1), rat(1, 3))]
        );
        let eta = pt_jump_measure(PTContext::new(1).unwrap(), rat(9, 7));
        assert_eq!(eta.as_atoms().unwrap(), &[(rat(9, 7), rat(1, 1))]);
    }
}
