//! Scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point scalar: `f32` or `f64`.
///
/// Every routine in the crate is written against this trait. Tolerances that
/// are stated for `f64` are only meaningful for `f64`; `f32` runs the same
/// algorithms at its own precision.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal. Exact for `f64`, rounded for `f32`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex value over a [`Real`] scalar.
pub type Cplx<T> = Complex<T>;

#[inline]
pub(crate) fn is_finite_c<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `u^p` on the principal branch, with `0^p = 0` for `p > 0`.
#[inline]
pub(crate) fn cpow<T: Real>(u: Complex<T>, p: T) -> Complex<T> {
    if u.re == T::zero() && u.im == T::zero() {
        if p > T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        if p == T::zero() {
            return Complex::new(T::one(), T::zero());
        }
    }
    (u.ln() * p).exp()
}
