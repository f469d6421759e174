//! Floating-point scalar abstraction: all geometry and thermal math is
//! generic over [`Real`], implemented for `f32` and `f64`.

use std::fmt::{Debug, Display};

/// Scalar type for image coordinates, distances, and temperatures.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + num_traits::NumCast + Debug + Display + 'static
{
    /// Lossless-enough conversion from `f64` for constants and timestamps.
    fn from_f64_lossy(value: f64) -> Self {
        Self::from(value).expect("finite f64 converts to any Real")
    }

    /// Conversion of counts (pixel counts, sample counts) into the scalar.
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count fits in any Real")
    }

    /// Strictly positive and not NaN; the usual domain guard.
    fn is_strictly_positive(self) -> bool {
        self > Self::zero()
    }
}

impl Real for f32 {}
impl Real for f64 {}
