//! Scalar abstraction for the dense kernels.
//!
//! All core routines are generic over [`Scalar`], which is implemented for
//! `f32` and `f64`. Tolerance defaults are tuned for double precision; when
//! working in `f32`, construct [`crate::Tolerances`] explicitly.

use nalgebra::RealField;
use num_traits::{FromPrimitive, ToPrimitive};

/// Real scalar type usable by every dense kernel in this crate.
pub trait Scalar: RealField + Copy + FromPrimitive + ToPrimitive {
    /// Lossy conversion from `f64`, used for literal constants.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable")
    }

    /// Lossy conversion to `f64`, used for diagnostics and reports.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Machine epsilon of the concrete type.
    fn eps() -> Self {
        Self::default_epsilon()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Shorthand for converting an `f64` literal into a generic scalar.
pub fn sc<T: Scalar>(v: f64) -> T {
    T::of(v)
}
