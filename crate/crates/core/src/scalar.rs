//! Scalar abstraction.
//!
//! Every routine in the crate is written against [`Real`], so the same code
//! runs in `f32` and `f64`. Accuracy contracts quoted in the docs refer to
//! `f64`; `f32` instantiations inherit the algorithms but not the tolerances.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Real floating-point scalar usable by the special-function kernel.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal. Panics only if the target type cannot
    /// represent finite f64 values, which never happens for f32/f64.
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

/// Shorthand for building a complex value from two reals.
#[inline]
pub fn cplx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// Real number promoted to the complex plane.
#[inline]
pub fn real<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// `f64` literal promoted to the complex plane.
#[inline]
pub fn clit<T: Real>(x: f64) -> Complex<T> {
    Complex::new(T::lit(x), T::zero())
}

/// Nearest integer to `Re z` together with the distance `|z - n|`.
#[inline]
pub fn nearest_integer<T: Real>(z: Complex<T>) -> (i64, T) {
    let n = z.re.round();
    let dist = (z - real(n)).norm();
    (n.to_i64().unwrap_or(i64::MAX), dist)
}

pub fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
