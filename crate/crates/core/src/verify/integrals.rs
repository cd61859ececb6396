use num_complex::Complex;

use super::quadrature::{quad_finite, quad_semiinfinite};
use super::report::{to_c64, IdentityReport};
use crate::error::{Error, Result};
use crate::genpoly::{gen_polygamma, psi_at_zero};
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta_jet, EvalConfig};
use crate::inputs;
use crate::kernel::constants::{EULER_GAMMA, LN_TWO_PI};
use crate::kernel::{cos_pi, gamma, log_gamma, recip_gamma, sin_pi};
use crate::scalar::{nearest_integer, real, Real};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn psi<T: Real>(z: Complex<T>, q: Complex<T>) -> Result<Complex<T>> {
    Ok(gen_polygamma(z, q, cfg())?.value)
}

fn hypothesis(identity: &'static str, condition: impl Into<String>) -> Error {
    Error::Hypothesis {
        identity,
        condition: condition.into(),
    }
}

/// Quadrature tolerance for a side of size `scale`.
fn quad_tol<T: Real>(tol: f64, scale: T) -> T {
    T::lit(tol * 0.1) * scale.max(T::one())
}

/// ζ(s, q) = (1/Γ(s)) ∫₀^∞ t^{s−1} e^{−qt}/(1 − e^{−t}) dt, for Re s > 1.
pub fn check_hurwitz_int_rep<T: Real>(s: Complex<T>, q: T, tol: f64) -> Result<IdentityReport> {
    if !(s.re > T::one()) || !(q > T::zero()) {
        return Err(hypothesis("hurwitz-integral-rep", "Re s > 1 and q > 0"));
    }
    let rhs = hurwitz_zeta(s, real(q), cfg())?.value;
    let sm1 = s - T::one();
    let integral = quad_semiinfinite(
        |t: T| Ok((sm1 * t.ln() - q * t).exp() / -(-t).exp_m1()),
        T::zero(),
        quad_tol(tol, rhs.norm()),
    )?;
    let lhs = integral.value * recip_gamma(s);
    Ok(IdentityReport::from_sides(
        "hurwitz-integral-rep",
        inputs!["s" => to_c64(s), "q" => q.to_f64_lossy()],
        lhs,
        rhs,
        tol,
    ))
}

/// ψ(z, q) = −∫₀^∞ e^{−qt} t^z/(1 − e^{−t}) [cos πz + (γ/π) sin πz + (sin πz/π) ln t] dt,
/// for Re z > 0.
pub fn check_psi_int_rep<T: Real>(z: Complex<T>, q: T, tol: f64) -> Result<IdentityReport> {
    if !(z.re > T::zero()) || !(q > T::zero()) {
        return Err(hypothesis("psi-integral-rep", "Re z > 0 and q > 0"));
    }
    let rhs = psi(z, real(q))?;
    let (c, s) = (cos_pi(z), sin_pi(z));
    let a = c + s * T::lit(EULER_GAMMA) / T::PI();
    let b = s / T::PI();
    let integral = quad_semiinfinite(
        |t: T| {
            let lt = t.ln();
            Ok((z * lt - q * t).exp() / -(-t).exp_m1() * (a + b * lt))
        },
        T::zero(),
        quad_tol(tol, rhs.norm()),
    )?;
    Ok(IdentityReport::from_sides(
        "psi-integral-rep",
        inputs!["z" => to_c64(z), "q" => q.to_f64_lossy()],
        -integral.value,
        rhs,
        tol,
    ))
}

/// ∫_lo^hi ψ(z, a+bq) dq = [ψ(z−1, a+b·hi) − ψ(z−1, a+b·lo)]/b. When the
/// lower end reaches a + b·lo = 0 the antiderivative there is ψ(z−1, 0),
/// finite for Re z < 0.
pub fn check_primitive<T: Real>(z: Complex<T>, a: T, b: T, lo: T, hi: T, tol: f64) -> Result<IdentityReport> {
    let start = a + b * lo;
    if !(b > T::zero()) || !(hi > lo) || start < T::zero() {
        return Err(hypothesis("psi-primitive", "b > 0, lo < hi and a + b·lo >= 0"));
    }
    if start == T::zero() && !(z.re < T::zero()) {
        return Err(hypothesis("psi-primitive", "a + b·lo = 0 needs Re z < 0"));
    }
    let zm1 = z - T::one();
    let upper = psi(zm1, real(a + b * hi))?;
    let lower = if start == T::zero() {
        psi_at_zero(zm1, cfg())?.value
    } else {
        psi(zm1, real(start))?
    };
    let rhs = (upper - lower) / b;
    let scale = upper.norm().max(lower.norm()) / b;
    let integral = quad_finite(|x: T| psi(z, real(a + b * x)), lo, hi, quad_tol(tol, scale))?;
    Ok(IdentityReport::from_sides(
        "psi-primitive",
        inputs![
            "z" => to_c64(z),
            "a" => a.to_f64_lossy(),
            "b" => b.to_f64_lossy(),
            "lo" => lo.to_f64_lossy(),
            "hi" => hi.to_f64_lossy(),
        ],
        integral.value,
        rhs,
        tol,
    ))
}

fn product_hypothesis<T: Real>(id: &'static str, z: Complex<T>, w: Complex<T>) -> Result<()> {
    if z.re < T::zero() && w.re < T::zero() && (z + w).re < -T::one() {
        Ok(())
    } else {
        Err(hypothesis(id, "Re z < 0, Re z' < 0 and Re(z + z') < -1"))
    }
}

/// Closed form of ∫₀¹ ψ(z, q) ψ(z', q) dq:
/// 2(2π)^{z+z'} cos(π(z−z')/2) {[π²/4 + c²] ζ(u) − 2c ζ'(u) + ζ''(u)},
/// u = −z−z', c = γ + ln 2π.
pub fn product_integral_closed_form<T: Real>(z: Complex<T>, w: Complex<T>) -> Result<Complex<T>> {
    let u = -(z + w);
    let jet = riemann_zeta_jet(u, 2, cfg())?;
    let c = T::lit(EULER_GAMMA + LN_TWO_PI);
    let pi = T::PI();
    let bracket = jet[0].value * (pi * pi / T::lit(4.0) + c * c) - jet[1].value * (c * T::lit(2.0)) + jet[2].value;
    let pref = ((z + w) * T::lit(LN_TWO_PI)).exp() * T::lit(2.0) * cos_pi((z - w) * T::lit(0.5));
    Ok(pref * bracket)
}

/// ∫₀¹ ψ(z, q) ψ(z', q) dq against its closed form.
pub fn check_product_integral<T: Real>(z: Complex<T>, w: Complex<T>, tol: f64) -> Result<IdentityReport> {
    let id = if z == w { "psi-square-integral" } else { "psi-product-integral" };
    product_hypothesis(id, z, w)?;
    let rhs = product_integral_closed_form(z, w)?;
    let integral = quad_finite(
        |q: T| Ok(psi(z, real(q))? * psi(w, real(q))?),
        T::zero(),
        T::one(),
        quad_tol(tol, rhs.norm()),
    )?;
    Ok(IdentityReport::from_sides(
        id,
        inputs!["z" => to_c64(z), "z_prime" => to_c64(w)],
        integral.value,
        rhs,
        tol,
    ))
}

/// ∫₀¹ ψ(z, q) ψ(z+1, q) dq = 0 for Re z < −1.
pub fn check_orthogonality<T: Real>(z: Complex<T>, tol: f64) -> Result<IdentityReport> {
    if !(z.re < -T::one()) {
        return Err(hypothesis("psi-orthogonality", "Re z < -1"));
    }
    let z1 = z + T::one();
    let integral = quad_finite(
        |q: T| Ok(psi(z, real(q))? * psi(z1, real(q))?),
        T::zero(),
        T::one(),
        T::lit(tol * 0.1),
    )?;
    Ok(IdentityReport::from_sides(
        "psi-orthogonality",
        inputs!["z" => to_c64(z)],
        integral.value,
        real(T::zero()),
        tol,
    ))
}

/// Closed form of ∫₀¹ ζ(z+1, q) ψ(z', q) dq:
/// 2(2π)^{z+z'} Γ(−z) {(π/2) ζ(u) sin(π(z−z')/2) + [c ζ(u) − ζ'(u)] cos(π(z−z')/2)}.
pub fn zeta_psi_closed_form<T: Real>(z: Complex<T>, w: Complex<T>) -> Result<Complex<T>> {
    let u = -(z + w);
    let jet = riemann_zeta_jet(u, 1, cfg())?;
    let c = T::lit(EULER_GAMMA + LN_TWO_PI);
    let half = (z - w) * T::lit(0.5);
    let inner = jet[0].value * sin_pi(half) * T::FRAC_PI_2() + (jet[0].value * c - jet[1].value) * cos_pi(half);
    let pref = ((z + w) * T::lit(LN_TWO_PI)).exp() * T::lit(2.0) * gamma(-z)?;
    Ok(pref * inner)
}

/// ∫₀¹ ζ(z+1, q) ψ(z', q) dq against its closed form.
pub fn check_zeta_psi_integral<T: Real>(z: Complex<T>, w: Complex<T>, tol: f64) -> Result<IdentityReport> {
    product_hypothesis("zeta-psi-integral", z, w)?;
    let rhs = zeta_psi_closed_form(z, w)?;
    let s = z + T::one();
    let integral = quad_finite(
        |q: T| Ok(hurwitz_zeta(s, real(q), cfg())?.value * psi(w, real(q))?),
        T::zero(),
        T::one(),
        quad_tol(tol, rhs.norm()),
    )?;
    Ok(IdentityReport::from_sides(
        "zeta-psi-integral",
        inputs!["z" => to_c64(z), "z_prime" => to_c64(w)],
        integral.value,
        rhs,
        tol,
    ))
}

/// ∫₀¹ ζ(z, q) ψ(z, q) dq = −½ (2π)^{2z} Γ(1−z) ζ(1−2z) for Re z < 0.
pub fn check_zeta_psi_diagonal<T: Real>(z: Complex<T>, tol: f64) -> Result<IdentityReport> {
    if !(z.re < T::zero()) {
        return Err(hypothesis("zeta-psi-diagonal", "Re z < 0"));
    }
    let zeta = riemann_zeta_jet(real(T::one()) - z * T::lit(2.0), 0, cfg())?[0].value;
    let rhs = -(z * T::lit(2.0 * LN_TWO_PI)).exp() * gamma(real(T::one()) - z)? * zeta * T::lit(0.5);
    let integral = quad_finite(
        |q: T| Ok(hurwitz_zeta(z, real(q), cfg())?.value * psi(z, real(q))?),
        T::zero(),
        T::one(),
        quad_tol(tol, rhs.norm()),
    )?;
    Ok(IdentityReport::from_sides(
        "zeta-psi-diagonal",
        inputs!["z" => to_c64(z)],
        integral.value,
        rhs,
        tol,
    ))
}

/// Closed form of ∫₀^∞ q^{α−1} ψ(z, a+bq) dq:
/// b^{−α} Γ(α)/sin π(z−α) · [sin πz · ψ(z−α, a) + sin πα · Γ(z+1−α) ζ(z+1−α, a)].
pub fn mellin_closed_form<T: Real>(z: Complex<T>, alpha: Complex<T>, a: T, b: T) -> Result<Complex<T>> {
    let d = z - alpha;
    let aa = real(a);
    let first = sin_pi(z) * psi(d, aa)?;
    let second = sin_pi(alpha) * gamma(d + T::one())? * hurwitz_zeta(d + T::one(), aa, cfg())?.value;
    let pref = (-alpha * b.ln()).exp() * gamma(alpha)? / sin_pi(d);
    Ok(pref * (first + second))
}

/// Mellin transform of ψ(z, a+bq), split at q = 1.
pub fn check_mellin<T: Real>(z: Complex<T>, alpha: Complex<T>, a: T, b: T, tol: f64) -> Result<IdentityReport> {
    if !(a > T::zero()) || !(b > T::zero()) {
        return Err(hypothesis("psi-mellin", "a > 0 and b > 0"));
    }
    if !(alpha.re > T::zero()) || !(alpha.re < z.re) {
        return Err(hypothesis("psi-mellin", "0 < Re alpha < Re z"));
    }
    if nearest_integer(z - alpha).1 < T::lit(1e-6) {
        return Err(hypothesis("psi-mellin", "z - alpha must stay 1e-6 away from the integers"));
    }
    let rhs = mellin_closed_form(z, alpha, a, b)?;
    let am1 = alpha - T::one();
    let f = |q: T| Ok((am1 * q.ln()).exp() * psi(z, real(a + b * q))?);
    let qt = quad_tol(tol, rhs.norm()) * T::lit(0.5);
    let head = quad_finite(f, T::zero(), T::one(), qt)?;
    let tail = quad_semiinfinite(f, T::one(), qt)?;
    Ok(IdentityReport::from_sides(
        "psi-mellin",
        inputs![
            "z" => to_c64(z),
            "alpha" => to_c64(alpha),
            "a" => a.to_f64_lossy(),
            "b" => b.to_f64_lossy(),
        ],
        head.value + tail.value,
        rhs,
        tol,
    ))
}

/// γ²/12 + π²/48 + (γ/3) ln √(2π) + (4/3) ln² √(2π) − (γ + 2 ln √(2π)) ζ'(2)/π² + ζ''(2)/(2π²).
pub fn log_gamma_squared_closed_form<T: Real>() -> Result<T> {
    let one = real(T::one());
    let two = real(T::lit(2.0));
    let d1 = hurwitz_zeta_ds(two, one, 1, cfg())?.value.re;
    let d2 = hurwitz_zeta_ds(two, one, 2, cfg())?.value.re;
    let g = T::lit(EULER_GAMMA);
    let l = T::lit(0.5 * LN_TWO_PI);
    let pi2 = T::PI() * T::PI();
    Ok(g * g / T::lit(12.0) + pi2 / T::lit(48.0) + g * l / T::lit(3.0) + T::lit(4.0 / 3.0) * l * l
        - (g + l * T::lit(2.0)) * d1 / pi2
        + d2 / (pi2 * T::lit(2.0)))
}

/// ∫₀¹ (ln Γ(q))² dq by quadrature against its closed form.
pub fn check_log_gamma_squared<T: Real>(tol: f64) -> Result<IdentityReport> {
    let rhs = log_gamma_squared_closed_form::<T>()?;
    let integral = quad_finite(
        |q: T| {
            let l = log_gamma(real(q))?;
            Ok(l * l)
        },
        T::zero(),
        T::one(),
        quad_tol(tol, rhs),
    )?;
    Ok(IdentityReport::from_sides(
        "log-gamma-squared-integral",
        vec![],
        integral.value,
        real(rhs),
        tol,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    fn c(re: f64, im: f64) -> Complex<f64> {
        cplx(re, im)
    }

    #[test]
    fn hurwitz_representation() {
        let r = check_hurwitz_int_rep(c(2.0, 0.0), 1.0, 1e-10).unwrap();
        assert!(r.pass, "{r:?}");
        assert!((r.lhs.re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10);
        assert!(check_hurwitz_int_rep(c(3.0, 0.0), 0.5, 1e-10).unwrap().pass);
        assert!(check_hurwitz_int_rep(c(1.5, 0.0), 2.0, 1e-10).unwrap().pass);
        assert!(matches!(check_hurwitz_int_rep(c(0.5, 0.0), 1.0, 1e-8), Err(Error::Hypothesis { .. })));
    }

    #[test]
    fn psi_representation() {
        for &(z, q) in &[(c(1.0, 0.0), 1.0), (c(0.5, 0.0), 1.0), (c(2.5, 0.0), 0.7), (c(1.2, 0.4), 1.3)] {
            let r = check_psi_int_rep(z, q, 1e-9).unwrap();
            assert!(r.pass, "{r:?}");
        }
        assert!(check_psi_int_rep(c(-0.5, 0.0), 1.0, 1e-8).is_err());
    }

    #[test]
    fn primitives() {
        let r = check_primitive(c(-1.5, 0.0), 0.0, 1.0, 0.0, 1.0, 1e-9).unwrap();
        assert!(r.pass && r.rhs.norm() < 1e-12, "{r:?}");
        assert!(check_primitive(c(-1.0, 0.0), 1.0, 2.0, 0.0, 1.0, 1e-9).unwrap().pass);
        assert!(check_primitive(c(0.5, 0.0), 1.0, 1.0, 0.0, 1.0, 1e-9).unwrap().pass);
        assert!(check_primitive(c(0.5, 0.0), 0.0, 1.0, 0.0, 1.0, 1e-9).is_err());
    }

    #[test]
    fn product_is_symmetric() {
        let a = check_product_integral(c(-2.0, 0.0), c(-3.0, 0.0), 1e-8).unwrap();
        let b = check_product_integral(c(-3.0, 0.0), c(-2.0, 0.0), 1e-8).unwrap();
        assert!(a.pass && b.pass);
        assert!((a.lhs - b.lhs).norm() <= 1e-12 && (a.rhs - b.rhs).norm() <= 1e-12);
        assert!(check_product_integral(c(-0.4, 0.0), c(-0.4, 0.0), 1e-8).is_err());
    }

    #[test]
    fn log_gamma_squared() {
        let v = log_gamma_squared_closed_form::<f64>().unwrap();
        assert!((v - 1.866_317_083_793_562).abs() < 1e-13, "{v}");
        assert!(check_log_gamma_squared::<f64>(1e-9).unwrap().pass);
    }

    #[test]
    fn mellin_hypotheses() {
        assert!(check_mellin(c(1.0, 0.0), c(1.0, 0.0), 1.0, 1.0, 1e-7).is_err());
        assert!(check_mellin(c(2.0, 0.0), c(1.0, 0.0), 1.0, 1.0, 1e-7).is_err());
        assert!(check_mellin(c(2.5, 0.0), c(1.0, 0.0), -1.0, 1.0, 1e-7).is_err());
    }
}
