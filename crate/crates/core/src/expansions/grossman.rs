use num_complex::Complex;

use super::SeriesResult;
use crate::error::{Error, Result};
use crate::genpoly::{check_q, factorial, gen_polygamma, gosper_negapolygamma, shift_rhs};
use crate::hurwitz::{riemann_zeta, EvalConfig};
use crate::kernel::constants::EULER_GAMMA;
use crate::kernel::{digamma, gamma, log_gamma, recip_gamma};
use crate::scalar::{nearest_integer, real, Real};

/// Term cap for [`grossman_psi`] and [`grossman_psi_beta_form`].
pub const GROSSMAN_MAX_TERMS: usize = 5000;

const INTEGER_ORDER_WINDOW: f64 = 1e-13;

fn check_disc<T: Real>(function: &'static str, q: Complex<T>) -> Result<()> {
    check_q(q)?;
    let r = q.norm();
    if !(r < T::one()) {
        return Err(Error::Domain {
            function,
            reason: format!("|q| = {r} outside the unit disc"),
        });
    }
    Ok(())
}

/// ζ(k+1)·(−1)^{k+1} for k ≥ 1 and −γ for k = 0, i.e. ψ(k, 1)/k!.
fn taylor_coefficient<T: Real>(k: usize) -> Result<T> {
    if k == 0 {
        return Ok(-T::lit(EULER_GAMMA));
    }
    let z = riemann_zeta(real(T::from_usize_lossy(k + 1)), EvalConfig::default())?.value.re;
    Ok(if k % 2 == 1 { z } else { -z })
}

/// Grossman's polygamma ψ^{(ν)}(q) of complex order, from its convergent
/// small-q series
///
/// ```text
/// [−ln q + H(−ν−1)]/(q^{ν+1} Γ(−ν)) + Σ_k ψ(k, 1)/Γ(k+1−ν) · q^{k−ν}
/// ```
///
/// for 0 < |q| < 1, Re q > 0. The ratio k!/Γ(k+1−ν) is built by recurrence;
/// at ν = m ∈ ℕ₀ its first m values vanish and the series reduces to the
/// ordinary polygamma.
pub fn grossman_psi<T: Real>(nu: Complex<T>, q: Complex<T>, tol: T) -> Result<SeriesResult<T>> {
    check_disc("grossman_psi", q)?;
    let r = q.norm();
    let lq = q.ln();
    let (n, dist) = nearest_integer(nu);
    let snap = if n >= 0 && dist < T::lit(INTEGER_ORDER_WINDOW) {
        Some(n as usize)
    } else {
        None
    };
    let nu = match snap {
        Some(m) => real(T::from_usize_lossy(m)),
        None => nu,
    };

    // ratio = k!/Γ(k+1−ν)
    let mut ratio = match snap {
        Some(0) => real(T::one()),
        Some(_) => real(T::zero()),
        None => recip_gamma(real(T::one()) - nu),
    };
    let mut sum = real(T::zero());
    let mut small_in_a_row = 0;
    let settle = 2.0 * nu.norm().to_f64_lossy() + 1.0;
    for k in 0..GROSSMAN_MAX_TERMS {
        let kf = T::from_usize_lossy(k);
        if k > 0 {
            ratio = match snap {
                Some(m) if k < m => real(T::zero()),
                Some(m) if k == m => real(factorial::<T>(m)),
                Some(m) => ratio * kf / (kf - T::from_usize_lossy(m)),
                None => ratio * kf / (real(kf) - nu),
            };
        }
        if ratio == real(T::zero()) {
            continue;
        }
        let t = ratio * taylor_coefficient::<T>(k)? * ((real(kf) - nu) * lq).exp();
        sum += t;

        let k1 = kf + T::one();
        let rho = r * (k1 / (real(k1) - nu).norm()).max(T::one());
        if (k as f64) + 1.0 > settle && rho < T::one() {
            let tail = t.norm() * rho / (T::one() - rho);
            if tail <= tol {
                small_in_a_row += 1;
                if small_in_a_row == 2 {
                    return Ok(SeriesResult {
                        value: sum - shift_rhs(nu, q),
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
        what: "grossman_psi",
        budget: GROSSMAN_MAX_TERMS,
    })
}

/// The same series written with Beta functions,
///
/// ```text
/// q^{−ν−1}/Γ(−ν) · {−ln q + γ + ψ(−ν) + γq/ν + Σ_{k≥2} (−1)^k ζ(k) B(−ν, k) q^k}
/// ```
///
/// evaluated literally. Undefined at ν ∈ ℕ₀ (Γ(−ν) and ψ(−ν) have poles);
/// kept as an independent reference for [`grossman_psi`].
pub fn grossman_psi_beta_form<T: Real>(nu: Complex<T>, q: Complex<T>, tol: T) -> Result<Complex<T>> {
    check_disc("grossman_psi_beta_form", q)?;
    let mnu = -nu;
    let g = gamma(mnu)?;
    let lq = q.ln();
    let mut brace = -lq + T::lit(EULER_GAMMA) + digamma(mnu)? + q * T::lit(EULER_GAMMA) / nu;
    let mut qk = q;
    let mut small_in_a_row = 0;
    for k in 2..GROSSMAN_MAX_TERMS {
        let kf = T::from_usize_lossy(k);
        qk *= q;
        // B(−ν, k) = Γ(−ν)Γ(k)/Γ(k−ν)
        let ratio = if (real(kf) + mnu).re > T::zero() {
            (log_gamma(real(kf))? - log_gamma(real(kf) + mnu)?).exp()
        } else {
            gamma(real(kf))? / gamma(real(kf) + mnu)?
        };
        let zeta = riemann_zeta(real(kf), EvalConfig::default())?.value;
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        let t = zeta * g * ratio * qk * sign;
        brace += t;
        if t.norm() <= tol * T::lit(1e-3) * brace.norm().max(T::one()) && kf > T::lit(2.0) * nu.norm() {
            small_in_a_row += 1;
            if small_in_a_row == 3 {
                return Ok((-(nu + T::one()) * lq).exp() / g * brace);
            }
        } else {
            small_in_a_row = 0;
        }
    }
    Err(Error::NoConvergence {
        what: "grossman_psi_beta_form",
        budget: GROSSMAN_MAX_TERMS,
    })
}

/// Ψ(ν, q) = ψ(ν, q) − ψ^{(ν)}(q).
///
/// Inside the unit disc this subtracts [`grossman_psi`] from the direct
/// evaluator. For |q| ≥ 1 only ν = −m (m ≥ 1) with real q > 0 is supported,
/// where Grossman's function is the Gosper–Adamchik negapolygamma.
pub fn psi_difference<T: Real>(nu: Complex<T>, q: Complex<T>, tol: T) -> Result<Complex<T>> {
    let cfg = EvalConfig::default();
    check_q(q)?;
    if q.norm() < T::one() {
        let g = grossman_psi(nu, q, tol)?.value;
        return Ok(gen_polygamma(nu, q, cfg)?.value - g);
    }
    let (n, dist) = nearest_integer(nu);
    if n <= -1 && dist < T::lit(INTEGER_ORDER_WINDOW) && q.im == T::zero() {
        let m = n.unsigned_abs() as usize;
        let at = real(-T::from_usize_lossy(m));
        return Ok(gen_polygamma(at, q, cfg)?.value - gosper_negapolygamma(m, q.re, cfg)?);
    }
    Err(Error::Domain {
        function: "psi_difference",
        reason: "|q| >= 1 is only supported for nu = -m (m >= 1) and real q".into(),
    })
}
