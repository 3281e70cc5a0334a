use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision integer coefficients.
pub type Int = BigInt;
/// Arbitrary-precision rational coefficients.
pub type Rat = BigRational;

/// Coefficient ring of a [`TruncatedSeries`](super::TruncatedSeries).
///
/// Implemented by [`Int`], [`Rat`] and [`MarkerPoly`](super::MarkerPoly)
/// over either base. All series arithmetic is generic over this trait, so
/// mixing rings is a compile-time error rather than a runtime one.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Multiplicative inverse, if this element is a unit.
    fn checked_inv(&self) -> Option<Self>;

    /// Embedding of small integers.
    fn from_int(n: i64) -> Self;

    /// The element `sign * a^a_exp`, when the ring supports the marker `a`.
    ///
    /// Scalar rings return `None` for `a_exp != 0`.
    fn signed_a_power(negative: bool, a_exp: i64) -> Option<Self>;
}

impl Coeff for Int {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn signed_a_power(negative: bool, a_exp: i64) -> Option<Self> {
        if a_exp != 0 {
            return None;
        }
        Some(if negative { -BigInt::one() } else { BigInt::one() })
    }
}

impl Coeff for Rat {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn signed_a_power(negative: bool, a_exp: i64) -> Option<Self> {
        if a_exp != 0 {
            return None;
        }
        Some(if negative {
            -BigRational::one()
        } else {
            BigRational::one()
        })
    }
}
