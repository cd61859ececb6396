//! The generalized polygamma function ψ(z, q), entire in z for fixed q.
//!
//! Away from the non-negative integers it is evaluated as
//!
//! ```text
//! ψ(z,q) = [ζ'(z+1,q) + H(−z−1) ζ(z+1,q)] / Γ(−z)            (Re z < −1/2)
//! ψ(z,q) = −Γ(z+1)/π · [sin πz (ζ'(z+1,q) + H(z) ζ(z+1,q))
//!                       + π cos πz ζ(z+1,q)]                  (otherwise)
//! ```
//!
//! The second line is the first after the reflection formulas for Γ and H;
//! it is regular through z = 1, 2, …, so the zero of 1/Γ(−z) never has to be
//! multiplied against the pole of H(−z−1). Only the neighbourhood of z = 0,
//! where ζ(z+1, q) itself has a pole, loses digits, and the reported error
//! grows accordingly.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_ds, hurwitz_zeta_jet, riemann_zeta_jet, EvalConfig};
use crate::kernel::bernoulli_poly;
use crate::kernel::constants::{EULER_GAMMA, LN_TWO_PI};
use crate::kernel::digamma::{digamma, harmonic_number, harmonic_unchecked};
use crate::kernel::gamma::{gamma_unchecked, log_gamma, recip_gamma};
use crate::kernel::trig::{cos_pi, sin_pi};
use crate::scalar::{clit, is_finite, nearest_integer, real, Real};

/// Distance from a non-negative integer inside which the exact
/// integer-order formula replaces the general one.
pub const GENPOLY_SNAP: f64 = 1e-6;

/// Half-width of the window around z = 0 in which ζ(z+1,q)/Γ(−z) is taken
/// from its Taylor expansion instead of the product.
const ZOG_WINDOW: f64 = 1e-8;

/// Which formula produced a [`GenPolyValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    DirectFormula,
    /// (−1)^{m+1} m! ζ(m+1, q) at z = m ∈ ℕ.
    IntegerLimit,
    /// ψ(q) at z = 0.
    DigammaLimit,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::DirectFormula => "direct-formula",
            Branch::IntegerLimit => "integer-limit",
            Branch::DigammaLimit => "digamma-limit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenPolyValue<T> {
    pub value: Complex<T>,
    pub est_error: T,
    pub branch_used: Branch,
}

pub(crate) fn check_q<T: Real>(q: Complex<T>) -> Result<()> {
    if !is_finite(q) || !(q.re > T::zero()) {
        return Err(Error::InvalidQ {
            re: q.re.to_f64_lossy(),
            im: q.im.to_f64_lossy(),
            reason: "generalized polygamma requires Re q > 0",
        });
    }
    Ok(())
}

pub(crate) fn factorial<T: Real>(n: usize) -> T {
    (2..=n).fold(T::one(), |acc, k| acc * T::from_usize_lossy(k))
}

fn sign<T: Real>(odd: bool) -> T {
    if odd {
        -T::one()
    } else {
        T::one()
    }
}

/// ψ(z, q) for complex z and `Re q > 0`.
pub fn gen_polygamma<T: Real>(z: Complex<T>, q: Complex<T>, cfg: EvalConfig) -> Result<GenPolyValue<T>> {
    check_q(q)?;
    if !is_finite(z) {
        return Err(Error::Domain {
            function: "gen_polygamma",
            reason: "non-finite z".into(),
        });
    }
    let eps = T::epsilon();
    let (n, dist) = nearest_integer(z);
    if n >= 0 && dist < T::lit(GENPOLY_SNAP) {
        if n == 0 {
            let value = digamma(q)?;
            return Ok(GenPolyValue {
                value,
                est_error: eps * T::lit(8.0) * value.norm().max(T::one()),
                branch_used: Branch::DigammaLimit,
            });
        }
        let m = n as usize;
        let zeta = hurwitz_zeta(real(T::from_usize_lossy(m + 1)), q, cfg)?;
        let f = factorial::<T>(m) * sign::<T>(m % 2 == 0);
        let value = zeta.value * f;
        return Ok(GenPolyValue {
            value,
            est_error: zeta.est_error * f.abs() + eps * T::lit(4.0) * value.norm(),
            branch_used: Branch::IntegerLimit,
        });
    }

    // every factor sees the same argument as ζ(z+1, ·), which matters
    // next to the pole at z = 0
    let s = z + T::one();
    let z = s - T::one();
    let jet = hurwitz_zeta_jet(s, q, 1, cfg)?;
    let (zeta, dzeta) = (jet[0].value, jet[1].value);
    let (e0, e1) = (jet[0].est_error, jet[1].est_error);
    let four_eps = eps * T::lit(4.0);

    let (value, est_error) = if z.re < T::lit(-0.5) {
        let r = recip_gamma(-z);
        let h = harmonic_unchecked(-z - T::one());
        let hz = h * zeta;
        let value = r * (dzeta + hz);
        let rn = r.norm();
        let err = rn * (e1 + h.norm() * e0) + four_eps * rn * (dzeta.norm() + hz.norm());
        (value, err)
    } else {
        let g = gamma_unchecked(z + T::one()) / T::PI();
        let sn = sin_pi(z);
        let cs = cos_pi(z) * T::PI();
        let h = harmonic_unchecked(z);
        let hz = h * zeta;
        let value = -g * (sn * (dzeta + hz) + cs * zeta);
        let gn = g.norm();
        let err = gn * (sn.norm() * (e1 + h.norm() * e0) + cs.norm() * e0)
            + four_eps * gn * (sn.norm() * (dzeta.norm() + hz.norm()) + (cs * zeta).norm());
        (value, err)
    };
    Ok(GenPolyValue {
        value,
        est_error,
        branch_used: Branch::DirectFormula,
    })
}

/// ψ(z, 1).
pub fn psi_at_one<T: Real>(z: Complex<T>, cfg: EvalConfig) -> Result<GenPolyValue<T>> {
    gen_polygamma(z, real(T::one()), cfg)
}

/// ψ(z, 1) from the Riemann functional equation:
/// 2(2π)^z [(γ + ln 2π − (π/2) tan(πz/2)) ζ(−z) − ζ'(−z)] cos(πz/2).
/// Independent of [`psi_at_one`] apart from the shared zeta kernel; fails at
/// z = −1 where ζ(−z) has its pole.
pub fn psi_at_one_reflected<T: Real>(z: Complex<T>, cfg: EvalConfig) -> Result<Complex<T>> {
    let jet = riemann_zeta_jet(-z, 1, cfg)?;
    let half = z * T::lit(0.5);
    let c = cos_pi(half);
    let s = sin_pi(half);
    let k = T::lit(EULER_GAMMA + LN_TWO_PI);
    let pref = (z * T::lit(LN_TWO_PI)).exp() * T::lit(2.0);
    Ok(pref * ((c * k - s * T::FRAC_PI_2()) * jet[0].value - c * jet[1].value))
}

/// ψ(w, 0) for `Re w < −1`, where the singular terms of the small-q
/// expansion vanish and the value is ψ(w, 1).
pub fn psi_at_zero<T: Real>(w: Complex<T>, cfg: EvalConfig) -> Result<GenPolyValue<T>> {
    if !(w.re < -T::one()) {
        return Err(Error::Domain {
            function: "psi_at_zero",
            reason: format!("ψ(w, 0) is finite only for Re w < -1, got Re w = {}", w.re),
        });
    }
    psi_at_one(w, cfg)
}

/// ψ(w, 1)/k!, stable for large k where both factors overflow.
pub(crate) fn psi_at_one_over_factorial<T: Real>(w: Complex<T>, k: usize, cfg: EvalConfig) -> Result<(Complex<T>, T)> {
    if k <= 150 {
        let v = psi_at_one(w, cfg)?;
        let f = factorial::<T>(k);
        return Ok((v.value / f, v.est_error / f));
    }
    // reflected form with Γ(w+1)/k! taken through log-gamma; Re w is large here
    let jet = hurwitz_zeta_jet(w + T::one(), real(T::one()), 1, cfg)?;
    let (zeta, dzeta) = (jet[0].value, jet[1].value);
    let ratio = (log_gamma(w + T::one())? - log_gamma(real(T::from_usize_lossy(k + 1)))?).exp() / T::PI();
    let sn = sin_pi(w);
    let cs = cos_pi(w) * T::PI();
    let h = harmonic_unchecked(w);
    let value = -ratio * (sn * (dzeta + h * zeta) + cs * zeta);
    let err = ratio.norm() * (sn.norm() * (jet[1].est_error + h.norm() * jet[0].est_error) + cs.norm() * jet[0].est_error)
        + T::epsilon() * T::lit(64.0) * value.norm();
    Ok((value, err))
}

/// (1/m!)[m ζ'(1−m, q) − H_{m−1} B_m(q)], the balanced negapolygamma of
/// order −m.
pub fn balanced_negapolygamma<T: Real>(m: usize, q: Complex<T>, cfg: EvalConfig) -> Result<Complex<T>> {
    if m == 0 {
        return Err(Error::Domain {
            function: "balanced_negapolygamma",
            reason: "order m must be at least 1".into(),
        });
    }
    check_q(q)?;
    let s = real(T::one() - T::from_usize_lossy(m));
    let dz = hurwitz_zeta_ds(s, q, 1, cfg)?.value;
    let b = bernoulli_poly(m, q)?;
    let mt = T::from_usize_lossy(m);
    Ok((dz * mt - b * harmonic_number::<T>(m - 1)) / factorial::<T>(m))
}

/// Gosper–Adamchik negapolygamma ψ_{−k}(q) = (1/(k−2)!) ∫₀^q (q−t)^{k−2} ln Γ(t) dt
/// for k ≥ 2, and ln Γ(q) for k = 1. Computed from the balanced form minus
/// the polynomial Σ_{r<k} q^{k−r−1}/(k−r−1)! · ψ(−r−1, 1).
pub fn gosper_negapolygamma<T: Real>(k: usize, q: T, cfg: EvalConfig) -> Result<Complex<T>> {
    if k == 0 {
        return Err(Error::Domain {
            function: "gosper_negapolygamma",
            reason: "order k must be at least 1".into(),
        });
    }
    if q == T::zero() && k >= 2 {
        return Ok(real(T::zero()));
    }
    if !(q > T::zero()) || !q.is_finite() {
        return Err(Error::InvalidQ {
            re: q.to_f64_lossy(),
            im: 0.0,
            reason: "gosper_negapolygamma requires real q > 0 (or q = 0 for k >= 2)",
        });
    }
    let poly = negapolygamma_polynomial(k, real(q), cfg)?;
    Ok(balanced_negapolygamma(k, real(q), cfg)? - poly)
}

/// Σ_{r=0}^{m−1} q^{m−r−1}/Γ(m−r) · ψ(−r−1, 1), the difference between the
/// balanced and the Gosper–Adamchik negapolygammas of order −m.
pub fn negapolygamma_polynomial<T: Real>(m: usize, q: Complex<T>, cfg: EvalConfig) -> Result<Complex<T>> {
    let mut poly = real(T::zero());
    for r in 0..m {
        let c = psi_at_one(real(-T::from_usize_lossy(r + 1)), cfg)?.value;
        let p = m - r - 1;
        poly += c * q.powi(p as i32) / factorial::<T>(p);
    }
    Ok(poly)
}

/// The increment in ψ(z, q+1) = ψ(z, q) + shift_rhs(z, q), that is
/// [ln q − H(−z−1)] / (q^{z+1} Γ(−z)), principal branch of ln q.
///
/// At z = m ∈ ℕ₀ this equals (−1)^m m!/q^{m+1}; the reflected evaluation
/// reaches that limit without a 0·∞ product.
pub fn shift_rhs<T: Real>(z: Complex<T>, q: Complex<T>) -> Complex<T> {
    let lq = q.ln();
    let pow = (-(z + T::one()) * lq).exp();
    if z.re < T::lit(-0.5) {
        return recip_gamma(-z) * (lq - harmonic_unchecked(-z - T::one())) * pow;
    }
    let g = gamma_unchecked(z + T::one()) / T::PI();
    -g * (sin_pi(z) * (lq - harmonic_unchecked(z)) - cos_pi(z) * T::PI()) * pow
}

/// ζ(z+1, q)/Γ(−z), entire in z; equal to −1 at z = 0.
pub fn zeta_over_gamma<T: Real>(z: Complex<T>, q: Complex<T>, cfg: EvalConfig) -> Result<Complex<T>> {
    check_q(q)?;
    if z.norm() < T::lit(ZOG_WINDOW) {
        // −1 + z(γ + ψ(q)) + O(z²)
        return Ok(clit::<T>(-1.0) + z * (digamma(q)? + T::lit(EULER_GAMMA)));
    }
    let s = z + T::one();
    let r = recip_gamma(-(s - T::one()));
    if r == real(T::zero()) {
        return Ok(r);
    }
    Ok(hurwitz_zeta(s, q, cfg)?.value * r)
}

/// Both sides of the multiplication formula
/// k^{z+1} ψ(z, kq) = Σ_{j<k} ψ(z, q + j/k) − k^{z+1} ln k · ζ(z+1, kq)/Γ(−z).
pub fn multiplication_lhs_rhs<T: Real>(
    k: usize,
    z: Complex<T>,
    q: Complex<T>,
    cfg: EvalConfig,
) -> Result<(Complex<T>, Complex<T>)> {
    if k < 2 {
        return Err(Error::Domain {
            function: "multiplication_lhs_rhs",
            reason: format!("multiplier k = {k} must be at least 2"),
        });
    }
    check_q(q)?;
    let kt = T::from_usize_lossy(k);
    let kq = q * kt;
    let kpow = ((z + T::one()) * kt.ln()).exp();
    let lhs = kpow * gen_polygamma(z, kq, cfg)?.value;
    let mut sum = real(T::zero());
    for j in 0..k {
        sum += gen_polygamma(z, q + T::from_usize_lossy(j) / kt, cfg)?.value;
    }
    let rhs = sum - kpow * kt.ln() * zeta_over_gamma(z, kq, cfg)?;
    Ok((lhs, rhs))
}

/// Both sides of the duplication formula
/// ψ(z, 2q) = 2^{−z−1}[ψ(z, q) + ψ(z, q + 1/2)] − ln 2 · ζ(z+1, 2q)/Γ(−z).
pub fn duplication_lhs_rhs<T: Real>(z: Complex<T>, q: Complex<T>, cfg: EvalConfig) -> Result<(Complex<T>, Complex<T>)> {
    check_q(q)?;
    let two = T::lit(2.0);
    let lhs = gen_polygamma(z, q * two, cfg)?.value;
    let a = gen_polygamma(z, q, cfg)?.value;
    let b = gen_polygamma(z, q + T::lit(0.5), cfg)?.value;
    let scale = (-(z + T::one()) * two.ln()).exp();
    let rhs = scale * (a + b) - zeta_over_gamma(z, q * two, cfg)? * two.ln();
    Ok((lhs, rhs))
}

/// ∂ψ(z, q)/∂q, which is ψ(z+1, q).
pub fn q_derivative<T: Real>(z: Complex<T>, q: Complex<T>, cfg: EvalConfig) -> Result<GenPolyValue<T>> {
    gen_polygamma(z + T::one(), q, cfg)
}
