//! Scalar abstraction shared by every numeric routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating point types the special functions and quadrature rules are
/// generic over. Implemented for `f32` and `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Default + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal (a tabulated coefficient, a threshold) into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in scalar type")
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }

    #[inline]
    fn two() -> Self {
        Self::lit(2.0)
    }

    /// Smallest magnitude the quadrature rules place a node at, measured from
    /// an endpoint. Leaves headroom above the underflow threshold so that
    /// powers like `t^{-0.9}` stay finite.
    #[inline]
    fn node_floor() -> Self {
        Self::min_positive_value().powf(Self::lit(0.97))
    }

    /// `ln` of the largest finite value.
    #[inline]
    fn ln_max() -> Self {
        Self::max_value().ln()
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Relative deviation `|x - y| / max(|x|, |y|, tiny)`.
pub fn rel_dev<T: Real>(x: T, y: T) -> T {
    let scale = x.abs().max(y.abs()).max(T::lit(1e-300).max(T::min_positive_value()));
    (x - y).abs() / scale
}
