use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

/// An exact coefficient field.
///
/// Everything above the polynomial layer is exact, so this is only
/// implemented for rational types; floating point has no place here.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Signed
    + Send
    + Sync
    + 'static
{
    fn from_i64(v: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// True when the value is an integer, used by the printer.
    fn is_integral(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}
