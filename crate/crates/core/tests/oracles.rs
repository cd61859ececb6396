//! Checks against values computed without the crate's own machinery:
//! high-precision references, plain partial sums, and elementary quadrature.

use polygamma::expansions::grossman_psi;
use polygamma::genpoly::gosper_negapolygamma;
use polygamma::kernel::{gamma, log_gamma};
use polygamma::{gen_polygamma, hurwitz_zeta, Complex64, EvalConfig};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn psi(z: Complex64, q: Complex64) -> Complex64 {
    gen_polygamma(z, q, EvalConfig::default()).unwrap().value
}

/// Σ_{n<N} (n+q)^{−s} plus the first Euler–Maclaurin corrections of the
/// tail, for real s > 1.
fn zeta_sum(s: f64, q: f64) -> f64 {
    let n = 20_000;
    let head: f64 = (0..n).map(|k| (k as f64 + q).powf(-s)).sum();
    let x = n as f64 + q;
    head + x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s) + s * x.powf(-s - 1.0) / 12.0
}

/// Composite Simpson on [a, b] with `n` (even) panels.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

#[test]
fn high_precision_references() {
    // 40-digit evaluations of e^{−γz} d/dz[e^{γz} ζ(z+1,q)/Γ(−z)]
    let table = [
        ((-0.5, 0.0), (1.0, 0.0), (-1.070924874822932209, 0.0)),
        ((-2.5, 0.0), (0.25, 0.0), (-0.00066139430787821343306, 0.0)),
        ((1.5, 0.5), (2.0, -1.0), (0.21784352330122010021, -0.30011270181609487339)),
        ((-1.3, 2.0), (0.7, 0.3), (15.291026751603402028, 3.4228533284057962643)),
        ((3.7, 0.0), (0.1, 0.0), (405245.07617625844387, 0.0)),
        ((-4.2, -0.8), (5.0, 2.0), (-2.3365116413815994982, -11.171960938985248923)),
        ((0.25, 0.0), (0.5, 0.0), (-1.5774045367978341401, 0.0)),
        ((2.0, 1.0), (1.5, 0.0), (-4.8829426394608689318, -4.2153159736358925659)),
    ];
    for ((zr, zi), (qr, qi), (vr, vi)) in table {
        let want = c(vr, vi);
        let got = gen_polygamma(c(zr, zi), c(qr, qi), EvalConfig::default()).unwrap();
        let err = (got.value - want).norm();
        assert!(err <= 1e-12 * want.norm().max(1.0), "ψ({zr}{zi:+}i, {qr}{qi:+}i) = {} vs {want}", got.value);
        assert!(err <= got.est_error.max(1e-15 * want.norm()) * 10.0, "estimate {} vs error {err}", got.est_error);
    }
}

#[test]
fn integer_orders_against_partial_sums() {
    let mut factorial = 1.0;
    for m in 1..=8usize {
        factorial *= m as f64;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        for q in [0.5, 1.0, 3.25] {
            let want = sign * factorial * zeta_sum(m as f64 + 1.0, q);
            let got = psi(c(m as f64, 0.0), c(q, 0.0));
            assert!((got.re - want).abs() <= 1e-11 * want.abs().max(1.0), "m={m} q={q}: {got} vs {want}");
        }
    }
}

#[test]
fn hurwitz_against_partial_sums() {
    for (s, q) in [(2.0, 1.0), (3.0, 0.5), (1.5, 2.0), (4.5, 0.2)] {
        let got = hurwitz_zeta(c(s, 0.0), c(q, 0.0), EvalConfig::default()).unwrap().value.re;
        let want = zeta_sum(s, q);
        assert!((got - want).abs() <= 1e-12 * want, "ζ({s}, {q}) = {got} vs {want}");
    }
}

#[test]
fn gamma_half_by_quadrature() {
    // Γ(1/2) = 2 ∫₀^∞ e^{−u²} du
    let g = 2.0 * simpson(|u| (-u * u).exp(), 0.0, 12.0, 4000);
    assert!((gamma(c(0.5, 0.0)).unwrap().re - g).abs() < 1e-13);
    assert!((g - 1.772_453_850_905_516).abs() < 1e-13);
}

#[test]
fn gosper_against_its_integral() {
    // ψ_{−k}(q) = 1/(k−2)! ∫₀^q (q−t)^{k−2} ln Γ(t) dt, with ln Γ(t) = ln Γ(1+t) − ln t:
    // Simpson on the smooth part, the ln t part in closed form through
    // ∫₀^q t^i ln t dt = q^{i+1}[ln q/(i+1) − 1/(i+1)²]
    let cfg = EvalConfig::default();
    for (k, q) in [(2usize, 0.5), (2, 1.0), (3, 1.5), (4, 2.0)] {
        let j = k - 2;
        let smooth = simpson(|t| (q - t).powi(j as i32) * log_gamma(c(1.0 + t, 0.0)).unwrap().re, 0.0, q, 2000);
        let mut log_part = 0.0;
        let mut binom = 1.0;
        for i in 0..=j {
            let n = (i + 1) as f64;
            let moment = q.powf(n) * (q.ln() / n - 1.0 / (n * n));
            log_part += binom * q.powi((j - i) as i32) * if i % 2 == 0 { 1.0 } else { -1.0 } * moment;
            binom = binom * (j - i) as f64 / (i + 1) as f64;
        }
        let fact: f64 = (1..=j).map(|i| i as f64).product();
        let want = (smooth - log_part) / fact;
        let got = gosper_negapolygamma(k, q, cfg).unwrap().re;
        assert!((got - want).abs() < 1e-12, "k={k} q={q}: {got} vs {want}");
    }
}

#[test]
fn grossman_series_against_beta_coefficients() {
    // partial sums of q^{−ν−1}/Γ(−ν) {−ln q + γ + ψ(−ν) + γq/ν + Σ (−1)^k ζ(k) B(−ν,k) q^k}
    // at ν = 1/2, with B(−ν,k) = Γ(−ν)Γ(k)/Γ(k−ν) by Γ ratios and ζ(k) by partial sums
    let nu = 0.5f64;
    let q = 0.3f64;
    let gm = gamma(c(-nu, 0.0)).unwrap().re;
    let digamma_mnu = 0.036_489_973_978_576_52; // ψ(−1/2) = 2 − γ − 2 ln 2
    let euler = 0.577_215_664_901_532_9;
    let mut brace = -q.ln() + euler + digamma_mnu + euler * q / nu;
    for k in 2..60usize {
        let ratio = (log_gamma(c(k as f64, 0.0)).unwrap().re - log_gamma(c(k as f64 - nu, 0.0)).unwrap().re).exp();
        let zk = if k < 30 { zeta_sum(k as f64, 1.0) } else { 1.0 + 2f64.powi(-(k as i32)) };
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        brace += sign * zk * gm * ratio * q.powi(k as i32);
    }
    let want = q.powf(-nu - 1.0) / gm * brace;
    let got = grossman_psi(c(nu, 0.0), c(q, 0.0), 1e-15).unwrap().value;
    assert!((got.re - want).abs() < 1e-11 * want.abs(), "{got} vs {want}");
    assert!((digamma_mnu - (2.0 - euler - 2.0 * 2f64.ln())).abs() < 1e-15);
}
