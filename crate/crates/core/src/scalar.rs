//! Scalar abstraction for the univariate algebra in [`crate::exactnum`].

use std::fmt::Debug;

use num_traits::{FromPrimitive, Signed};

/// Field elements the univariate machinery can run over.
///
/// Exact types (`BigRational`, `Ratio<i64>`) give exact answers. `f64`
/// satisfies the bound and is useful for quick numerical previews, but gcd
/// reduction and zero tests are then only approximate.
pub trait Scalar: Clone + Debug + PartialOrd + Signed + FromPrimitive + Send + Sync + 'static {
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every i64 is representable")
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialOrd + Signed + FromPrimitive + Send + Sync + 'static {}
