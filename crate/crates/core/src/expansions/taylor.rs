use num_complex::Complex;

use super::SeriesResult;
use crate::error::{Error, Result};
use crate::genpoly::{check_q, psi_at_one_over_factorial, shift_rhs};
use crate::hurwitz::EvalConfig;
use crate::scalar::{real, Real};

/// Term cap for [`taylor_psi`].
pub const TAYLOR_MAX_TERMS: usize = 500;

/// ψ(z, q+1) = Σ_k ψ(z+k, 1) q^k / k!, for |q| < 1.
///
/// Summation stops once two consecutive terms give a geometric tail bound
/// below `tol`. The ratio used for the bound is |q|·((k+2)/(k+1))^{max(Re z, 0)},
/// which dominates the ratio of coefficient magnitudes for large k.
pub fn taylor_psi<T: Real>(z: Complex<T>, q: Complex<T>, tol: T) -> Result<SeriesResult<T>> {
    let r = q.norm();
    if !(r < T::one()) {
        return Err(Error::Domain {
            function: "taylor_psi",
            reason: format!("|q| = {r} outside the unit disc"),
        });
    }
    let cfg = EvalConfig::default();
    let growth = z.re.max(T::zero());
    let mut sum = real(T::zero());
    let mut qk = real(T::one());
    let mut small_in_a_row = 0;
    for k in 0..TAYLOR_MAX_TERMS {
        let (c, _) = psi_at_one_over_factorial(z + T::from_usize_lossy(k), k, cfg)?;
        let t = c * qk;
        sum += t;
        qk *= q;
        let kf = T::from_usize_lossy(k);
        let rho = r * ((kf + T::lit(2.0)) / (kf + T::one())).powf(growth);
        if rho < T::one() {
            let tail = t.norm() * rho / (T::one() - rho);
            if tail <= tol {
                small_in_a_row += 1;
                if small_in_a_row == 2 {
                    return Ok(SeriesResult {
                        value: sum,
                        terms_used: k + 1,
                        est_truncation: tail,
                    });
                }
                continue;
            }
        }
        small_in_a_row = 0;
    }
    Err(Error::NoConvergence {
        what: "taylor_psi",
        budget: TAYLOR_MAX_TERMS,
    })
}

/// Small-q form: the two singular terms −[ln q − H(−z−1)]/(q^{z+1}Γ(−z))
/// plus the Taylor polynomial Σ_{k≤order} ψ(z+k, 1) q^k/k!.
pub fn small_q_psi<T: Real>(z: Complex<T>, q: Complex<T>, order: usize) -> Result<Complex<T>> {
    check_q(q)?;
    let cfg = EvalConfig::default();
    let mut sum = -shift_rhs(z, q);
    let mut qk = real(T::one());
    for k in 0..=order {
        let (c, _) = psi_at_one_over_factorial(z + T::from_usize_lossy(k), k, cfg)?;
        sum += c * qk;
        qk *= q;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genpoly::gen_polygamma;
    use crate::kernel::constants::LN_TWO_PI;
    use crate::kernel::{digamma, log_gamma};
    use crate::scalar::cplx;

    fn c(re: f64, im: f64) -> Complex<f64> {
        cplx(re, im)
    }

    fn psi(z: Complex<f64>, q: Complex<f64>) -> Complex<f64> {
        gen_polygamma(z, q, EvalConfig::default()).unwrap().value
    }

    #[test]
    fn digamma_expansion() {
        // −γ + Σ (−1)^{k+1} ζ(k+1) q^k
        let v = taylor_psi(c(0.0, 0.0), c(0.5, 0.0), 1e-14).unwrap();
        assert!((v.value - digamma(c(1.5, 0.0)).unwrap()).norm() < 1e-13);
        assert!(v.est_truncation <= 1e-14);
    }

    #[test]
    fn log_gamma_expansion() {
        let v = taylor_psi(c(-1.0, 0.0), c(0.5, 0.0), 1e-14).unwrap().value;
        let want = log_gamma(c(1.5, 0.0)).unwrap() - 0.5 * LN_TWO_PI;
        assert!((v - want).norm() < 1e-13, "{v} vs {want}");
    }

    #[test]
    fn matches_direct_evaluation() {
        for &(z, q) in &[(c(-2.3, 0.0), c(0.4, 0.0)), (c(1.7, 0.5), c(-0.3, 0.6)), (c(3.2, 0.0), c(0.8, 0.0)), (c(-0.5, -1.0), c(0.1, -0.05))] {
            let t = taylor_psi(z, q, 1e-13).unwrap();
            let d = psi(z, q + 1.0);
            assert!((t.value - d).norm() < 1e-10 * d.norm().max(1.0), "{z} {q}: {} vs {d}", t.value);
        }
    }

    #[test]
    fn large_k_coefficients_do_not_overflow() {
        // k > 150 switches to the log-gamma ratio
        let t = taylor_psi(c(-1.5, 0.0), c(0.93, 0.0), 1e-12).unwrap();
        assert!(t.terms_used > 151, "{}", t.terms_used);
        let d = psi(c(-1.5, 0.0), c(1.93, 0.0));
        assert!((t.value - d).norm() < 1e-9, "{} vs {d}", t.value);
    }

    #[test]
    fn rejects_outside_disc_and_caps_terms() {
        assert!(taylor_psi(c(0.5, 0.0), c(1.0, 0.0), 1e-10).is_err());
        assert!(matches!(
            taylor_psi(c(0.5, 0.0), c(0.995, 0.0), 1e-14),
            Err(Error::NoConvergence { .. })
        ));
    }

    #[test]
    fn small_q_examples() {
        // z = −0.5 at q = 0.01, order 2
        let v = small_q_psi(c(-0.5, 0.0), c(0.01, 0.0), 2).unwrap();
        let d = psi(c(-0.5, 0.0), c(0.01, 0.0));
        assert!((v - d).norm() < 1e-4 * d.norm());
        // integer order: the log term drops and the pole is (−1)^{m+1} m!/q^{m+1}
        let q = 0.05;
        let v = small_q_psi(c(1.0, 0.0), c(q, 0.0), 0).unwrap();
        let want = 1.0 / (q * q) + std::f64::consts::PI.powi(2) / 6.0;
        assert!((v.re - want).abs() < 1e-10 * want);
        // Re z < −1: the singular part vanishes as q → 0
        let v = small_q_psi(c(-2.5, 0.0), c(1e-8, 0.0), 3).unwrap();
        assert!((v - psi(c(-2.5, 0.0), c(1.0, 0.0))).norm() < 1e-7);
        let g = small_q_psi(c(0.0, 0.0), c(0.02, 0.0), 6).unwrap();
        assert!((g - digamma(c(0.02, 0.0)).unwrap()).norm() < 1e-10);
    }
}
