//! Truncated-sequence free-probability calculus.
//!
//! Distributions enter as truncated moment or cumulant sequences
//! (m_1..m_P) / (κ_1..κ_P); m_0 ≡ 1 is implicit. The moment-cumulant
//! formula over non-crossing partitions connects the two, free additive
//! convolution is cumulant addition, and the partial-transpose map acts
//! on cumulants by κ_p ↦ c(n,p)·κ_p/nᵖ with c(n,p) = n for odd p and n²
//! for even p.
//!
//! All identities are exact when computed over [`crate::scalar::Rat`];
//! `f64` is available for the same algorithms plus the support-bound and
//! density operations that have no exact form.

mod density;
mod measure;
mod pt;
mod seq;
mod support;

pub use density::{density_from_cumulants, DensityPoint, NewtonParams};
pub use measure::{
    compound_free_poisson_cumulants, free_poisson_cumulants, Measure,
};
pub use pt::{pt_cumulants, pt_jump_measure, pt_r_series, PTContext};
pub use seq::{
    cumulants_to_moments, free_add_convolve, free_mult_moments, free_power, moments_to_cumulants,
    CumulantSequence, MomentSequence, RTransform,
};
pub use support::{shifted_mp_support, support_bound_free_power, SupportBound};
