//! Gamma, reciprocal gamma and log-gamma for complex arguments.

use num_complex::Complex;

use super::trig::sin_pi;
use crate::error::{Error, Result};
use crate::scalar::{nearest_integer, real, Real};

/// Lanczos parameters, g = 7, nine terms (Godfrey).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Half-width of the window around a non-positive integer treated as a pole.
pub const POLE_WINDOW: f64 = 1e-12;
/// Half-width of the window in which `1/Γ` snaps to its exact zero.
pub const ZERO_WINDOW: f64 = 1e-13;

/// Distance test against the non-positive integers.
pub(crate) fn near_nonpositive_integer<T: Real>(z: Complex<T>, window: f64) -> bool {
    let (n, dist) = nearest_integer(z);
    n <= 0 && dist < T::lit(window)
}

/// Lanczos sum and shifted base `t = z - 1 + g + 1/2` for `Re z ≥ 1/2`.
fn lanczos_parts<T: Real>(z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let zm1 = z - T::one();
    let mut sum = real(T::lit(LANCZOS_COEFFS[0]));
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += real(T::lit(c)) / (zm1 + T::from_usize_lossy(i));
    }
    let t = zm1 + T::lit(LANCZOS_G + 0.5);
    (sum, t)
}

/// `ln Γ(z)` on `Re z ≥ 1/2` via the Lanczos form (analytic branch).
fn lanczos_ln_gamma<T: Real>(z: Complex<T>) -> Complex<T> {
    let (sum, t) = lanczos_parts(z);
    let half = T::lit(0.5);
    (z - half) * t.ln() - t + T::lit(super::constants::LN_SQRT_TWO_PI) + sum.ln()
}

/// Γ(z) for complex `z` away from the non-positive integers.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if near_nonpositive_integer(z, POLE_WINDOW) {
        return Err(Error::Pole {
            function: "gamma",
            re: z.re.to_f64_lossy(),
            im: z.im.to_f64_lossy(),
        });
    }
    Ok(gamma_unchecked(z))
}

pub(crate) fn gamma_unchecked<T: Real>(z: Complex<T>) -> Complex<T> {
    if z.re < T::lit(0.5) {
        // Γ(z)Γ(1-z) = π / sin πz
        let one_minus = real(T::one()) - z;
        return real(T::PI()) / (sin_pi(z) * gamma_unchecked(one_minus));
    }
    // Exact factorials for small positive integers.
    if z.im == T::zero() && z.re == z.re.round() && z.re <= T::lit(30.0) {
        let n = z.re.to_usize().unwrap_or(1);
        let mut f = T::one();
        for k in 2..n {
            f *= T::from_usize_lossy(k);
        }
        return real(f);
    }
    lanczos_ln_gamma(z).exp()
}

/// 1/Γ(z), entire. Exactly zero within [`ZERO_WINDOW`] of a non-positive integer.
pub fn recip_gamma<T: Real>(z: Complex<T>) -> Complex<T> {
    if near_nonpositive_integer(z, ZERO_WINDOW) {
        return Complex::new(T::zero(), T::zero());
    }
    if z.re < T::lit(0.5) {
        // 1/Γ(z) = sin(πz) Γ(1-z) / π
        return sin_pi(z) * gamma_unchecked(real(T::one()) - z) / T::PI();
    }
    gamma_unchecked(z).inv()
}

/// ln Γ(q) on the right half-plane, continuous branch (real on the positive axis).
pub fn log_gamma<T: Real>(q: Complex<T>) -> Result<Complex<T>> {
    if q.re <= T::zero() {
        return Err(Error::Domain {
            function: "log_gamma",
            reason: format!("Re q = {} must be positive", q.re),
        });
    }
    if q.re < T::lit(0.5) {
        // ln Γ(q) = ln Γ(q+1) - ln q, both logs principal on Re > 0
        return Ok(lanczos_ln_gamma(q + T::one()) - q.ln());
    }
    Ok(lanczos_ln_gamma(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    fn close(a: Complex<f64>, b: Complex<f64>, rel: f64) -> bool {
        (a - b).norm() <= rel * b.norm().max(1e-300)
    }

    #[test]
    fn simple_values() {
        assert_eq!(gamma(cplx(1.0, 0.0)).unwrap(), cplx(1.0, 0.0));
        assert_eq!(gamma(cplx(5.0, 0.0)).unwrap(), cplx(24.0, 0.0));
        let sqrt_pi = 1.772_453_850_905_516;
        assert!(close(gamma(cplx(0.5, 0.0)).unwrap(), cplx(sqrt_pi, 0.0), 1e-14));
    }

    #[test]
    fn poles_rejected() {
        for n in 0..6 {
            let err = gamma(cplx(-(n as f64), 0.0)).unwrap_err();
            assert!(matches!(err, Error::Pole { .. }));
        }
        assert!(gamma(cplx(-3.0 + 5e-13, 0.0)).is_err());
        assert!(gamma(cplx(-3.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn recip_gamma_zeros_and_values() {
        assert_eq!(recip_gamma(cplx(-3.0, 0.0)), cplx(0.0, 0.0));
        assert_eq!(recip_gamma(cplx(-3.0 + 5e-14, 0.0)), cplx(0.0, 0.0));
        assert!(close(recip_gamma(cplx(1.0, 0.0)), cplx(1.0, 0.0), 1e-15));
        let v = recip_gamma(cplx(-0.5, 0.0));
        assert!(close(v, cplx(-0.282_094_791_773_878_1, 0.0), 1e-14));
    }

    #[test]
    fn complex_reference_values() {
        // reference values from an independent 40-digit evaluation
        let g = gamma(cplx(3.3, -4.1)).unwrap();
        assert!(close(g, cplx(0.116_934_052_399_151_1, 0.221_964_519_661_738_4), 1e-13));
        let g = gamma(cplx(-7.3, 0.2)).unwrap();
        assert!(close(g, cplx(2.260_613_151_514_755e-4, 2.306_543_451_665_196e-4), 1e-13));
        let l = log_gamma(cplx(0.3, 5.0)).unwrap();
        assert!(close(l, cplx(-7.256_648_818_321_825, 2.737_370_890_453_828), 1e-13));
    }

    #[test]
    fn log_gamma_values() {
        assert!(log_gamma(cplx(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(cplx(0.5f64, 0.0)).unwrap();
        assert!((half.re - 0.572_364_942_924_700_1).abs() < 1e-14 && half.im == 0.0);
        let ten = log_gamma(cplx(10.0f64, 0.0)).unwrap();
        assert!((ten.re - 12.801_827_480_081_469).abs() < 1e-13);
        assert!(log_gamma(cplx(0.0, 1.0)).is_err());
        assert!(log_gamma(cplx(-1.5, 0.0)).is_err());
    }

    #[test]
    fn log_gamma_exponentiates_to_gamma() {
        for &(x, y) in &[(0.1, 0.0), (0.3, 2.0), (2.5, -7.0), (11.0, 3.0), (40.0, 40.0), (0.6, 45.0)] {
            let z = cplx(x, y);
            let lhs = log_gamma(z).unwrap().exp();
            let rhs = gamma(z).unwrap();
            assert!(close(lhs, rhs, 1e-12), "{z}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn f32_instantiation() {
        let g = gamma(Complex::<f32>::new(5.0, 0.0)).unwrap();
        assert!((g.re - 24.0).abs() < 1e-4);
        let h = gamma(Complex::<f32>::new(0.5, 0.0)).unwrap();
        assert!((h.re - 1.772_453_9).abs() < 1e-5);
    }
}
