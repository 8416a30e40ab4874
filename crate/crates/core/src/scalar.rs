use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient field for [`Polynomial`](crate::Polynomial) and
/// [`RationalFunction`](crate::RationalFunction).
///
/// Implemented for `f32`, `f64` and [`ExactRational`](crate::ExactRational).
/// Zero tests are exact equality, so polynomial gcd and reduction are only
/// meaningful for exact fields.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable in every scalar field")
    }

    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("i64 is representable in every scalar field")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}
