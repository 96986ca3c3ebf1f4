//! Scalar abstraction for the numeric core.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the kernels and distributions are generic over.
///
/// Implemented for `f32` and `f64`. The estimation layer ([`crate::fit`],
/// [`crate::mixture`], [`crate::gof`]) works on `f64` only.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` constant into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
