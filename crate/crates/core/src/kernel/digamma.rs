use num_complex::Complex;

use super::constants::EULER_GAMMA;
use super::gamma::{near_nonpositive_integer, POLE_WINDOW};
use super::trig::cot_pi;
use crate::error::{Error, Result};
use crate::scalar::{nearest_integer, real, Real};

/// |z| beyond which the asymptotic series is used directly.
const ASYMPTOTIC_RADIUS: f64 = 12.0;

/// B_{2k}/(2k) for k = 1..8.
const DIGAMMA_ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// Digamma ψ(z) = Γ'(z)/Γ(z).
pub fn digamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if near_nonpositive_integer(z, POLE_WINDOW) {
        return Err(Error::Pole {
            function: "digamma",
            re: z.re.to_f64_lossy(),
            im: z.im.to_f64_lossy(),
        });
    }
    Ok(digamma_unchecked(z))
}

fn digamma_unchecked<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.re < T::lit(0.5) {
        // ψ(1-z) = ψ(z) + π cot πz
        return digamma_unchecked(real(T::one()) - z) - cot_pi(z) * T::PI();
    }
    let mut w = z;
    let mut acc = Complex::new(T::zero(), T::zero());
    let radius = T::lit(ASYMPTOTIC_RADIUS);
    while w.norm() < radius {
        acc -= w.inv();
        w += T::one();
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut tail = Complex::new(T::zero(), T::zero());
    let mut p = inv2;
    for &c in DIGAMMA_ASYMP.iter() {
        tail += p * T::lit(c);
        p *= inv2;
    }
    acc + w.ln() - inv * T::lit(0.5) - tail
}

/// Generalized harmonic number H(z) = Σ_k (1/k − 1/(k+z)) = γ + ψ(z+1).
///
/// Simple poles with residue −1 at the negative integers.
pub fn harmonic<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    let (n, dist) = nearest_integer(z);
    if n < 0 && dist < T::lit(POLE_WINDOW) {
        return Err(Error::Pole {
            function: "harmonic",
            re: z.re.to_f64_lossy(),
            im: z.im.to_f64_lossy(),
        });
    }
    Ok(harmonic_unchecked(z))
}

/// H(z) without the pole check; the caller guarantees z is away from the
/// negative integers.
pub(crate) fn harmonic_unchecked<T: Real>(z: Complex<T>) -> Complex<T> {
    let (n, _) = nearest_integer(z);
    if z.im == T::zero() && z.re == z.re.round() && (0..=64).contains(&n) {
        return real(harmonic_number::<T>(n as usize));
    }
    digamma_unchecked(z + T::one()) + T::lit(EULER_GAMMA)
}

/// H_k = 1 + 1/2 + … + 1/k, with H_0 = 0.
pub fn harmonic_number<T: Real>(k: usize) -> T {
    // summed from the small end
    (1..=k)
        .rev()
        .fold(T::zero(), |acc, j| acc + T::from_usize_lossy(j).recip())
}
