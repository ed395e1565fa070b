//! Scalar abstraction: exact rational and floating-point arithmetic
//! behind one trait.
//!
//! The combinatorial identities in this crate hold exactly, so their
//! natural scalar is [`Rat`] (arbitrary-precision rationals). Spectra and
//! densities force `f64`. Algorithms are written once, generically.

use alloc::string::String;
use core::fmt::{Debug, Display};
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Arithmetic needed by the sequence calculus.
///
/// Implemented by `f64` (approximate) and [`Rat`] (exact). `is_exact`
/// lets validation code demand exactness from rationals while granting
/// floats a tolerance.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_int(v: i64) -> Self;

    /// Exact quotient `num/den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// True for scalar types with exact arithmetic.
    fn is_exact() -> bool;

    fn abs(&self) -> Self;

    /// Lossy view, used for reporting and density work.
    fn to_f64_lossy(&self) -> f64;

    /// `self^k` by repeated squaring.
    fn pow_u32(&self, k: u32) -> Self {
        let mut base = self.clone();
        let mut exp = k;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn is_exact() -> bool {
        false
    }

    fn abs(&self) -> Self {
        num_traits::Float::abs(*self)
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }
}

impl Scalar for Rat {
    fn from_int(v: i64) -> Self {
        Rat::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_exact() -> bool {
        true
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64_lossy(&self) -> f64 {
        // Falls back on num/den division for values outside f64 range.
        self.to_f64().unwrap_or_else(|| {
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
}

/// Parse a rational from `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().ok()?;
            let den: BigInt = d.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rat::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(num))
        }
    }
}

/// Canonical `"num/den"` rendering (reduced, denominator positive).
pub fn format_rat(r: &Rat) -> String {
    use alloc::format;
    format!("{}/{}", r.numer(), r.denom())
}

/// Best-effort rational from an `f64` (exact binary expansion).
pub fn rat_from_f64(v: f64) -> Option<Rat> {
    Rat::from_f64(v)
}
