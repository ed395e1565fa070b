//! Free-probability laboratory core.
//!
//! Everything in this crate is pure computation on owned values:
//!
//! - [`ncpart`] — non-crossing partition combinatorics: enumeration,
//!   Kreweras complements, and the cyclic-coupling index counts that
//!   drive the partial-transpose cumulant map.
//! - [`freecalc`] — truncated-sequence free-probability calculus:
//!   moment/cumulant inversion, free convolutions, the partial-transpose
//!   cumulant map, (compound) free Poisson laws, support bounds and
//!   Stieltjes-inversion density recovery.
//! - [`randmat`] — seeded sampling of GUE / Wishart / shifted Wishart
//!   block ensembles, block partial transposition, a Hermitian
//!   eigensolver and empirical spectral statistics.
//! - [`certify`] — parameter windows for co-complete positivity, the
//!   k-block-positivity bound f(n), and per-trial certification records.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, parallel
//! drivers and the command line live in the companion `freept` crate.
//!
//! Exact combinatorial identities are computed over arbitrary-precision
//! rationals ([`scalar::Rat`]); floating point enters only where spectra
//! and densities force it.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod certify;
pub mod error;
pub mod freecalc;
pub mod ncpart;
pub mod randmat;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Rat, Scalar};
