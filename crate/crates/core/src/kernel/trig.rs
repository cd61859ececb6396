//! Trigonometric functions of `πz` with exact reduction of the real part.
//!
//! Reducing `Re z` modulo 2 before multiplying by π keeps full relative
//! accuracy next to the zeros of `sin πz`, which the reflection formulas and
//! the harmonic-number poles depend on.

use num_complex::Complex;

use crate::scalar::{cplx, Real};

/// `(sin πx, cos πx)` for real `x`.
pub fn sin_cos_pi_real<T: Real>(x: T) -> (T, T) {
    let two = T::lit(2.0);
    let half = T::lit(0.5);
    // r in [-1, 1], exact for |x| < 2^52
    let r = x - two * (x / two).round();
    let (s, c) = if r > half {
        let u = (T::one() - r) * T::PI();
        (u.sin(), -u.cos())
    } else if r < -half {
        let u = (T::one() + r) * T::PI();
        (-u.sin(), -u.cos())
    } else {
        let u = r * T::PI();
        (u.sin(), u.cos())
    };
    (s, c)
}

pub fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = z.im * T::PI();
    cplx(s * y.cosh(), c * y.sinh())
}

pub fn cos_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = z.im * T::PI();
    cplx(c * y.cosh(), -s * y.sinh())
}

/// `cot πz`; infinite at the integers.
pub fn cot_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let b = z.im * T::PI();
    if b.abs() > T::lit(20.0) {
        // |cot - (∓i)| ~ 2 e^{-2|b|}
        return cplx(T::zero(), -b.signum());
    }
    let (sa, _) = sin_cos_pi_real(z.re);
    let (s2a, _) = sin_cos_pi_real(z.re * T::lit(2.0));
    let sh = b.sinh();
    let denom = T::lit(2.0) * (sa * sa + sh * sh);
    cplx(s2a / denom, -(T::lit(2.0) * b).sinh() / denom)
}
