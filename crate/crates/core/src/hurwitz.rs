//! Hurwitz zeta function ζ(s, q) and its first two s-derivatives.
//!
//! Evaluation uses Euler–Maclaurin summation
//!
//! ```text
//! ζ(s,q) = Σ_{n<N} (n+q)^{-s} + (N+q)^{1-s}/(s-1) + ½(N+q)^{-s}
//!        + Σ_{k=1}^{M} B_{2k}/(2k)! · (s)_{2k-1} · (N+q)^{-s-2k+1} + R
//! ```
//!
//! differentiated term by term in `s`, so the value and both derivatives come
//! out of one pass. The reported error is the magnitude of the first omitted
//! correction term plus a rounding allowance for the partial sum.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kernel::bernoulli_table;
use crate::scalar::{real, Real};

/// Half-width of the excluded window around the pole at s = 1.
pub const S_POLE_WINDOW: f64 = 1e-12;

/// Precision and truncation policy for series-based evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Absolute bound demanded of the first omitted correction term.
    pub target_tol: f64,
    /// Starting shift N for `Re s ≥ 0`. For `Re s < 0` the search starts at
    /// N = 0 instead, because the partial sum then grows like N^{1-Re s}
    /// and cancels against the integral term.
    pub em_shift_terms: usize,
    /// Number M of Bernoulli correction terms.
    pub em_tail_terms: usize,
    /// Upper limit on N (and on term counts of other series).
    pub max_series_terms: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            target_tol: 1e-13,
            em_shift_terms: 16,
            em_tail_terms: 12,
            max_series_terms: 1_000_000,
        }
    }
}

impl EvalConfig {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            target_tol: tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_tol > 0.0 && self.target_tol.is_finite()) {
            return Err(Error::Config(format!("target_tol = {} must be positive", self.target_tol)));
        }
        if self.em_shift_terms < 1 {
            return Err(Error::Config("em_shift_terms must be at least 1".into()));
        }
        if self.em_tail_terms < 1 || 2 * (self.em_tail_terms + 1) > bernoulli_table().max_index {
            return Err(Error::Config(format!(
                "em_tail_terms = {} needs Bernoulli numbers past the table",
                self.em_tail_terms
            )));
        }
        if self.max_series_terms < self.em_shift_terms {
            return Err(Error::Config("max_series_terms below em_shift_terms".into()));
        }
        Ok(())
    }
}

/// A zeta-type value with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaValue<T> {
    pub value: Complex<T>,
    pub est_error: T,
}

/// Value and first two derivatives of something with respect to `s`.
type Jet<T> = [Complex<T>; 3];

fn zero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

fn check_args<T: Real>(s: Complex<T>, q: Complex<T>) -> Result<()> {
    if (s - T::one()).norm() < T::lit(S_POLE_WINDOW) {
        return Err(Error::PoleAtSEqualsOne {
            re: s.re.to_f64_lossy(),
            im: s.im.to_f64_lossy(),
        });
    }
    if !(q.re > T::zero()) || !q.im.is_finite() || !q.re.is_finite() {
        return Err(Error::InvalidQ {
            re: q.re.to_f64_lossy(),
            im: q.im.to_f64_lossy(),
            reason: "Hurwitz zeta requires Re q > 0",
        });
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain {
            function: "hurwitz_zeta",
            reason: "non-finite s".into(),
        });
    }
    Ok(())
}

/// Multiplies a Pochhammer jet (P, P', P'') by the factor (s + j).
fn times_linear<T: Real>(p: Jet<T>, s_plus_j: Complex<T>) -> Jet<T> {
    [p[0] * s_plus_j, p[1] * s_plus_j + p[0], p[2] * s_plus_j + p[1] * T::lit(2.0)]
}

/// Jet of c·P(s)·E(s) where E = a^{-s-…} so that E' = −L·E.
fn product_jet<T: Real>(c: T, p: &Jet<T>, e: Complex<T>, l: Complex<T>) -> Jet<T> {
    let pe = p[0] * e;
    let dpe = p[1] * e;
    [
        pe * c,
        (dpe - l * pe) * c,
        (p[2] * e - l * dpe * T::lit(2.0) + l * l * pe) * c,
    ]
}

/// Jet of the Bernoulli corrections at a = N + q for k = 1..=m, plus the
/// jet of the first omitted term k = m + 1.
fn corrections<T: Real>(s: Complex<T>, a: Complex<T>, m: usize) -> (Jet<T>, Jet<T>) {
    let table = bernoulli_table();
    let l = a.ln();
    let inv_a2 = (a * a).inv();
    let mut e = (-s * l).exp() / a;
    let mut p: Jet<T> = [s, real(T::one()), zero()];
    let mut sum: Jet<T> = [zero(); 3];
    for k in 1..=m {
        let c = T::lit(table.em_weight(k).expect("validated tail length"));
        let t = product_jet(c, &p, e, l);
        for o in 0..3 {
            sum[o] += t[o];
        }
        let j = T::from_usize_lossy(2 * k - 1);
        p = times_linear(times_linear(p, s + j), s + j + T::one());
        e *= inv_a2;
    }
    let c = T::lit(table.em_weight(m + 1).expect("validated tail length"));
    (sum, product_jet(c, &p, e, l))
}

fn order_tol<T: Real>(cfg: &EvalConfig, order: usize) -> T {
    T::lit(cfg.target_tol * 10f64.powi(order as i32))
}

/// Longest Bernoulli tail the table supports.
fn max_tail_terms() -> usize {
    bernoulli_table().max_index / 2 - 1
}

/// Smallest admissible shift N meeting the tail bound for all derivative
/// orders up to `order`, together with the tail length M used. M starts at
/// `em_tail_terms`; for `Re s < 0` it may grow so that N stays small.
fn choose_shift<T: Real>(
    s: Complex<T>,
    q: Complex<T>,
    order: usize,
    cfg: &EvalConfig,
) -> Result<(usize, usize)> {
    let negative = s.re < T::zero();
    let mut n = if negative { 0 } else { cfg.em_shift_terms };
    let m_hi = if negative { max_tail_terms() } else { cfg.em_tail_terms };
    loop {
        let a = q + T::from_usize_lossy(n);
        for m in cfg.em_tail_terms..=m_hi.max(cfg.em_tail_terms) {
            let (_, omitted) = corrections(s, a, m);
            let ok = (0..=order).all(|o| {
                let b = omitted[o].norm();
                b.is_finite() && b <= order_tol(cfg, o)
            });
            if ok {
                return Ok((n, m));
            }
        }
        if n >= cfg.max_series_terms {
            return Err(Error::NoConvergence {
                what: "hurwitz_zeta (Euler-Maclaurin shift)",
                budget: cfg.max_series_terms,
            });
        }
        n = if n == 0 { 1 } else { (2 * n).min(cfg.max_series_terms) };
    }
}

/// ζ(s,q), ∂_s ζ and ∂²_s ζ in one pass. Entries above `order` are computed
/// but carry no convergence guarantee.
pub fn hurwitz_zeta_jet<T: Real>(
    s: Complex<T>,
    q: Complex<T>,
    order: usize,
    cfg: EvalConfig,
) -> Result<[ZetaValue<T>; 3]> {
    cfg.validate()?;
    if order > 2 {
        return Err(Error::Config(format!("s-derivative order {order} not supported")));
    }
    check_args(s, q)?;
    let (n, m) = choose_shift(s, q, order, &cfg)?;

    let mut acc: Jet<T> = [zero(); 3];
    let mut mag = [T::zero(); 3];
    for k in (0..n).rev() {
        let b = q + T::from_usize_lossy(k);
        let l = b.ln();
        let t = (-s * l).exp();
        let jet = [t, -l * t, l * l * t];
        for o in 0..3 {
            acc[o] += jet[o];
            mag[o] += jet[o].norm();
        }
    }

    let a = q + T::from_usize_lossy(n);
    let l = a.ln();
    let u = (s - T::one()).inv();
    let e = ((real(T::one()) - s) * l).exp();
    let two = T::lit(2.0);
    let integral = [
        e * u,
        -e * (l * u + u * u),
        e * (l * l * u + l * u * u * two + u * u * u * two),
    ];
    let h = (-s * l).exp() * T::lit(0.5);
    let half = [h, -l * h, l * l * h];
    let (corr, omitted) = corrections(s, a, m);

    let eps = T::epsilon();
    let mut out = [ZetaValue {
        value: zero(),
        est_error: T::zero(),
    }; 3];
    for o in 0..3 {
        let value = acc[o] + integral[o] + half[o] + corr[o];
        let scale = mag[o] + integral[o].norm() + half[o].norm() + corr[o].norm();
        out[o] = ZetaValue {
            value,
            est_error: omitted[o].norm() + eps * T::lit(4.0) * scale,
        };
    }
    Ok(out)
}

/// ζ(s, q) for `s ≠ 1`, `Re q > 0`.
pub fn hurwitz_zeta<T: Real>(s: Complex<T>, q: Complex<T>, cfg: EvalConfig) -> Result<ZetaValue<T>> {
    Ok(hurwitz_zeta_jet(s, q, 0, cfg)?[0])
}

/// ∂^order ζ(s, q)/∂s^order for order ∈ {1, 2}. The tail bound is relaxed by
/// one decimal digit per derivative order.
pub fn hurwitz_zeta_ds<T: Real>(
    s: Complex<T>,
    q: Complex<T>,
    order: usize,
    cfg: EvalConfig,
) -> Result<ZetaValue<T>> {
    if !(1..=2).contains(&order) {
        return Err(Error::Config(format!("hurwitz_zeta_ds supports order 1 or 2, got {order}")));
    }
    Ok(hurwitz_zeta_jet(s, q, order, cfg)?[order])
}

/// Rising factorial (s)_m = s(s+1)…(s+m−1) by direct product.
pub fn pochhammer<T: Real>(s: Complex<T>, m: usize) -> Complex<T> {
    (0..m).fold(real(T::one()), |acc, j| acc * (s + T::from_usize_lossy(j)))
}

/// ∂^m ζ(s, q)/∂q^m = (−1)^m (s)_m ζ(s+m, q).
pub fn hurwitz_zeta_dq<T: Real>(s: Complex<T>, q: Complex<T>, m: usize, cfg: EvalConfig) -> Result<ZetaValue<T>> {
    let shifted = s + T::from_usize_lossy(m);
    let z = hurwitz_zeta(shifted, q, cfg)?;
    let mut factor = pochhammer(s, m);
    if m % 2 == 1 {
        factor = -factor;
    }
    Ok(ZetaValue {
        value: z.value * factor,
        est_error: z.est_error * factor.norm(),
    })
}

/// Riemann zeta ζ(s) = ζ(s, 1).
pub fn riemann_zeta<T: Real>(s: Complex<T>, cfg: EvalConfig) -> Result<ZetaValue<T>> {
    hurwitz_zeta(s, real(T::one()), cfg)
}

/// ζ'(s) or ζ''(s).
pub fn riemann_zeta_ds<T: Real>(s: Complex<T>, order: usize, cfg: EvalConfig) -> Result<ZetaValue<T>> {
    hurwitz_zeta_ds(s, real(T::one()), order, cfg)
}

/// ζ(s), ζ'(s), ζ''(s) in one pass; see [`hurwitz_zeta_jet`].
pub fn riemann_zeta_jet<T: Real>(s: Complex<T>, order: usize, cfg: EvalConfig) -> Result<[ZetaValue<T>; 3]> {
    hurwitz_zeta_jet(s, real(T::one()), order, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::constants::LN_SQRT_TWO_PI;
    use crate::scalar::cplx;

    fn c(re: f64, im: f64) -> Complex<f64> {
        cplx(re, im)
    }

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn close(a: Complex<f64>, b: Complex<f64>, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn config_validation() {
        assert!(EvalConfig::default().validate().is_ok());
        assert!(EvalConfig::with_tol(0.0).validate().is_err());
        let bad = EvalConfig {
            em_tail_terms: 30,
            ..EvalConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = EvalConfig {
            em_shift_terms: 0,
            ..EvalConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn zeta_two() {
        let v = hurwitz_zeta(c(2.0, 0.0), c(1.0, 0.0), cfg()).unwrap();
        assert!(close(v.value, c(1.644_934_066_848_226_4, 0.0), 1e-14));
        assert!(v.est_error < 1e-12);
    }

    #[test]
    fn value_at_zero_is_half_minus_q() {
        for &q in &[c(0.3, 0.0), c(1.0, 0.0), c(2.5, 1.5), c(7.0, -3.0)] {
            let v = hurwitz_zeta(c(0.0, 0.0), q, cfg()).unwrap().value;
            assert!(close(v, c(0.5, 0.0) - q, 1e-13), "q = {q}: {v}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            hurwitz_zeta(c(1.0, 0.0), c(1.0, 0.0), cfg()),
            Err(Error::PoleAtSEqualsOne { .. })
        ));
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), c(-0.5, 0.0), cfg()),
            Err(Error::InvalidQ { .. })
        ));
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), c(0.0, 0.0), cfg()),
            Err(Error::InvalidQ { .. })
        ));
        let tight = EvalConfig {
            max_series_terms: 16,
            target_tol: 1e-300,
            ..EvalConfig::default()
        };
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), c(1.0, 0.0), tight),
            Err(Error::NoConvergence { .. })
        ));
        assert!(hurwitz_zeta_ds(c(2.0, 0.0), c(1.0, 0.0), 3, cfg()).is_err());
    }

    #[test]
    fn derivative_classical_values() {
        let d = riemann_zeta_ds(c(0.0, 0.0), 1, cfg()).unwrap().value;
        assert!(close(d, c(-LN_SQRT_TWO_PI, 0.0), 1e-14));
        let d = hurwitz_zeta_ds(c(0.0, 0.0), c(0.5, 0.0), 1, cfg()).unwrap().value;
        assert!(close(d, c(-0.5 * std::f64::consts::LN_2, 0.0), 1e-14));
        let d = hurwitz_zeta_ds(c(2.0, 0.0), c(1.0, 0.0), 1, cfg()).unwrap().value;
        assert!(close(d, c(-0.937_548_254_315_843_8, 0.0), 1e-14));
        let d2 = riemann_zeta_ds(c(2.0, 0.0), 2, cfg()).unwrap().value;
        assert!(close(d2, c(1.989_280_234_298_901, 0.0), 1e-13));
    }

    #[test]
    fn riemann_negative_values() {
        let v = riemann_zeta(c(-1.0, 0.0), cfg()).unwrap().value;
        assert!(close(v, c(-1.0 / 12.0, 0.0), 1e-15));
        let v = riemann_zeta(c(0.0, 0.0), cfg()).unwrap().value;
        assert!(close(v, c(-0.5, 0.0), 1e-15));
    }

    #[test]
    fn complex_reference_values() {
        // independent 40-digit references
        let s = c(0.5, 3.0);
        let q = c(0.3, 0.2);
        let jet = hurwitz_zeta_jet(s, q, 1, cfg()).unwrap();
        assert!(close(jet[0].value, c(-8.827_737_943_451_7, 2.722_278_206_882_502_6), 1e-13));
        assert!(close(jet[1].value, c(-7.200_415_333_175_427, 8.886_692_902_786_403), 1e-13));
        let d2 = hurwitz_zeta_ds(c(-2.5, 1.0), c(1.7, 0.0), 2, cfg()).unwrap().value;
        assert!(close(d2, c(-0.016_626_972_588_481_24, -0.023_227_387_711_432_627), 1e-12));
        let v = hurwitz_zeta(c(-13.5, 0.0), c(0.25, 0.0), cfg()).unwrap();
        let err = (v.value.re + 0.087_167_710_501_603_82).abs();
        // rounding in the partial sum dominates this far left; the bound must cover it
        assert!(err < 1e-6 && err <= v.est_error, "{v:?}");
    }

    #[test]
    fn q_derivative_examples() {
        let z3 = 1.202_056_903_159_594_3;
        let v = hurwitz_zeta_dq(c(2.0, 0.0), c(1.0, 0.0), 1, cfg()).unwrap().value;
        assert!(close(v, c(-2.0 * z3, 0.0), 1e-14));
        assert!(matches!(
            hurwitz_zeta_dq(c(0.0, 0.0), c(0.7, 0.0), 1, cfg()),
            Err(Error::PoleAtSEqualsOne { .. })
        ));
        let z5 = 1.036_927_755_143_369_9;
        let v = hurwitz_zeta_dq(c(3.0, 0.0), c(2.0, 0.0), 2, cfg()).unwrap().value;
        assert!(close(v, c(12.0 * (z5 - 1.0), 0.0), 1e-13));
    }

    #[test]
    fn est_error_bounds_first_omitted_term() {
        let v = hurwitz_zeta(c(3.0, 1.0), c(0.4, 0.0), cfg()).unwrap();
        assert!(v.est_error > 0.0 && v.est_error < 1e-12);
    }

    #[test]
    fn f32_instantiation() {
        let v = hurwitz_zeta(Complex::<f32>::new(2.0, 0.0), Complex::new(1.0, 0.0), EvalConfig::with_tol(1e-7))
            .unwrap();
        assert!((v.value.re - 1.644_934).abs() < 1e-5);
    }
}
