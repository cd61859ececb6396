use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::integrals::*;
use super::report::{IdentityReport, Param};
use crate::error::Result;
use crate::expansions::{asymptotic_psi, fourier_psi, grossman_psi, grossman_psi_beta_form, psi_difference, taylor_psi};
use crate::genpoly::{
    balanced_negapolygamma, duplication_lhs_rhs, gen_polygamma, multiplication_lhs_rhs, negapolygamma_polynomial,
    shift_rhs, GENPOLY_SNAP,
};
use crate::hurwitz::{hurwitz_zeta_ds, EvalConfig};
use crate::inputs;
use crate::kernel::constants::LN_SQRT_TWO_PI;
use crate::kernel::log_gamma;

/// Named groups of randomized and grid identity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Shift,
    Mult,
    Derivative,
    Negapoly,
    Taylor,
    Fourier,
    Grossman,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Shift,
        Suite::Mult,
        Suite::Derivative,
        Suite::Negapoly,
        Suite::Taylor,
        Suite::Fourier,
        Suite::Grossman,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Shift => "shift",
            Suite::Mult => "mult",
            Suite::Derivative => "derivative",
            Suite::Negapoly => "negapoly",
            Suite::Taylor => "taylor",
            Suite::Fourier => "fourier",
            Suite::Grossman => "grossman",
            Suite::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::EACH.into_iter().chain([Suite::All]).find(|x| x.name() == s)
    }

    /// Random samples drawn when none are requested. Grid-only suites use 0.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Shift => 300,
            Suite::Mult => 50,
            Suite::Derivative => 50,
            Suite::Taylor => 20,
            Suite::Grossman => 30,
            Suite::Negapoly | Suite::Fourier | Suite::All => 0,
        }
    }
}

/// Overrides for a suite run. `None` keeps each check's own default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: Option<usize>,
    pub tol: Option<f64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: None,
            tol: None,
        }
    }
}

type Job = Box<dyn Fn() -> IdentityReport + Send + Sync>;

fn job<F>(id: &'static str, inputs: Vec<(String, Param)>, tol: f64, f: F) -> Job
where
    F: Fn(f64) -> Result<(Complex64, Complex64)> + Send + Sync + 'static,
{
    Box::new(move || match f(tol) {
        Ok((lhs, rhs)) => IdentityReport::new(id, inputs.clone(), lhs, rhs, tol),
        Err(e) => IdentityReport::failed(id, inputs.clone(), tol, &e),
    })
}

fn report_job<F>(id: &'static str, inputs: Vec<(String, Param)>, tol: f64, f: F) -> Job
where
    F: Fn(f64) -> Result<IdentityReport> + Send + Sync + 'static,
{
    Box::new(move || f(tol).unwrap_or_else(|e| IdentityReport::failed(id, inputs.clone(), tol, &e)))
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn psi(z: Complex64, q: Complex64) -> Result<Complex64> {
    Ok(gen_polygamma(z, q, cfg())?.value)
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// z uniform in the disc of the given radius, kept 1e-4 away from the
/// non-negative integers (the snap window and its cancellation annulus).
fn sample_z(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
    loop {
        let z = c(rng.random_range(-radius..radius), rng.random_range(-radius..radius));
        if z.norm() > radius {
            continue;
        }
        let n = z.re.round();
        if n >= 0.0 && (z - n).norm() < 100.0 * GENPOLY_SNAP {
            continue;
        }
        return z;
    }
}

fn sample_q(rng: &mut ChaCha8Rng, re: std::ops::Range<f64>, im: f64) -> Complex64 {
    c(rng.random_range(re), rng.random_range(-im..im))
}

fn shift_jobs(n: usize, rng: &mut ChaCha8Rng, tol: Option<f64>) -> Vec<Job> {
    let tol = tol.unwrap_or(1e-10);
    (0..n)
        .map(|_| {
            let z = sample_z(rng, 5.0);
            let q = sample_q(rng, 0.2..5.0, 2.0);
            job("psi-shift", inputs!["z" => z, "q" => q], tol, move |_| {
                Ok((psi(z, q + 1.0)?, psi(z, q)? + shift_rhs(z, q)))
            })
        })
        .collect()
}

fn mult_jobs(n: usize, rng: &mut ChaCha8Rng, tol: Option<f64>) -> Vec<Job> {
    let tol = tol.unwrap_or(1e-10);
    let mut jobs = Vec::new();
    for k in [2usize, 3, 4] {
        for _ in 0..n {
            let z = sample_z(rng, 4.0);
            let q = sample_q(rng, 0.2..3.0, 1.0);
            jobs.push(job("psi-multiplication", inputs!["k" => k, "z" => z, "q" => q], tol, move |_| {
                multiplication_lhs_rhs(k, z, q, cfg())
            }));
        }
    }
    let dup = (2 * n).div_ceil(5);
    for _ in 0..dup {
        let z = sample_z(rng, 4.0);
        let q = sample_q(rng, 0.2..3.0, 1.0);
        jobs.push(job("psi-duplication", inputs!["z" => z, "q" => q], tol, move |_| {
            duplication_lhs_rhs(z, q, cfg())
        }));
    }
    jobs
}

fn derivative_jobs(n: usize, rng: &mut ChaCha8Rng, tol: Option<f64>) -> Vec<Job> {
    let tol = tol.unwrap_or(1e-6);
    let h = 1e-5;
    (0..n)
        .map(|_| {
            let z = sample_z(rng, 3.0);
            let q = sample_q(rng, 0.5..4.0, 1.0);
            job("psi-q-derivative", inputs!["z" => z, "q" => q], tol, move |_| {
                let fd = (psi(z, q + h)? - psi(z, q - h)?) / (2.0 * h);
                Ok((fd, psi(z + 1.0, q)?))
            })
        })
        .collect()
}

fn negapoly_jobs(tol: Option<f64>) -> Vec<Job> {
    let tol = tol.unwrap_or(1e-11);
    let mut jobs = Vec::new();
    for m in 1..=6usize {
        for q in [0.25, 1.0, 3.5] {
            jobs.push(job("negapolygamma-balanced", inputs!["m" => m, "q" => q], tol, move |_| {
                let q = c(q, 0.0);
                Ok((psi(c(-(m as f64), 0.0), q)?, balanced_negapolygamma(m, q, cfg())?))
            }));
        }
    }
    for q in [0.1, 0.5, 1.0, 2.0, 7.3] {
        jobs.push(job("lerch", inputs!["q" => q], tol, move |_| {
            let q = c(q, 0.0);
            let lhs = hurwitz_zeta_ds(c(0.0, 0.0), q, 1, cfg())?.value;
            Ok((lhs, log_gamma(q)? - LN_SQRT_TWO_PI))
        }));
    }
    jobs
}

fn taylor_jobs(n: usize, rng: &mut ChaCha8Rng, tol: Option<f64>) -> Vec<Job> {
    let tol = tol.unwrap_or(1e-9);
    let mut jobs = Vec::new();
    for r in [0.1, 0.5, 0.8] {
        for _ in 0..n {
            let z = sample_z(rng, 3.0);
            let q = Complex64::from_polar(r, rng.random_range(-PI..PI));
            jobs.push(job("taylor-vs-direct", inputs!["z" => z, "q" => q], tol, move |tol| {
                Ok((taylor_psi(z, q, tol * 1e-3)?.value, psi(z, q + 1.0)?))
            }));
        }
    }
    jobs
}

/// Periodic trapezoid rule with `nodes` points for ∫₀¹ ψ(z, q) dq, each node
/// from the Fourier series.
pub fn fourier_trapezoid(z: Complex64, nodes: usize, tol: f64) -> Result<Complex64> {
    let mut sum = c(0.0, 0.0);
    for j in 0..nodes {
        sum += fourier_psi(z, j as f64 / nodes as f64, tol)?.value;
    }
    Ok(sum / nodes as f64)
}

fn fourier_jobs(tol: Option<f64>) -> Vec<Job> {
    let grid_tol = tol.unwrap_or(1e-8);
    let mut jobs = Vec::new();
    for z in [c(-2.0, 0.0), c(-2.5, 0.0), c(-3.0, 0.0), c(-4.0, 0.0), c(-2.5, 0.5)] {
        for q in [0.1, 0.25, 0.5, 0.8] {
            jobs.push(job("fourier-vs-direct", inputs!["z" => z, "q" => q], grid_tol, move |tol| {
                Ok((fourier_psi(z, q, tol * 0.1)?.value, psi(z, c(q, 0.0))?))
            }));
        }
    }
    for z in [c(-2.5, 0.0), c(-3.0, 0.0)] {
        // the two endpoints share every term, so the sums agree exactly
        jobs.push(job("fourier-endpoints", inputs!["z" => z], 0.0, move |_| {
            Ok((fourier_psi(z, 0.0, 1e-9)?.value, fourier_psi(z, 1.0, 1e-9)?.value))
        }));
    }
    for z in [c(-1.5, 0.0), c(-2.5, 0.0), c(-4.0, 0.0)] {
        jobs.push(job("fourier-balanced", inputs!["z" => z, "nodes" => 512usize], grid_tol, move |tol| {
            Ok((fourier_trapezoid(z, 512, tol * 0.1)?, c(0.0, 0.0)))
        }));
    }
    jobs
}

fn grossman_jobs(n: usize, rng: &mut ChaCha8Rng, tol: Option<f64>) -> Vec<Job> {
    let mut jobs = Vec::new();
    for m in 0..=3usize {
        for q in [0.3, 0.7] {
            jobs.push(job(
                "grossman-integer-order",
                inputs!["nu" => m, "q" => q],
                tol.unwrap_or(1e-10),
                move |tol| Ok((psi_difference(c(m as f64, 0.0), c(q, 0.0), tol * 1e-2)?, c(0.0, 0.0))),
            ));
        }
    }
    for m in 1..=4usize {
        for q in [0.3, 0.7, 1.2] {
            jobs.push(job(
                "grossman-negative-order",
                inputs!["nu" => -(m as i64), "q" => q],
                tol.unwrap_or(1e-9),
                move |tol| {
                    let q = c(q, 0.0);
                    let d = psi_difference(c(-(m as f64), 0.0), q, tol * 1e-2)?;
                    Ok((d, negapolygamma_polynomial(m, q, cfg())?))
                },
            ));
        }
    }
    // Ψ(−3, ·) is quadratic in q, so its third difference vanishes
    jobs.push(job(
        "grossman-difference-degree",
        inputs!["nu" => -3i64, "q0" => 0.2, "step" => 0.2],
        tol.unwrap_or(1e-8),
        move |tol| {
            let d = |q: f64| psi_difference(c(-3.0, 0.0), c(q, 0.0), tol * 1e-2);
            let third = d(0.8)? - 3.0 * d(0.6)? + 3.0 * d(0.4)? - d(0.2)?;
            Ok((third, c(0.0, 0.0)))
        },
    ));
    for _ in 0..n {
        let nu = loop {
            let nu = c(rng.random_range(-3.0..3.0), rng.random_range(-1.0..1.0));
            let k = nu.re.round();
            if k < 0.0 || (nu - k).norm() > 1e-3 {
                break nu;
            }
        };
        let q = Complex64::from_polar(rng.random_range(0.05..0.9), rng.random_range(-1.4..1.4));
        jobs.push(job(
            "grossman-beta-form",
            inputs!["nu" => nu, "q" => q],
            tol.unwrap_or(1e-8),
            move |tol| Ok((grossman_psi(nu, q, tol * 1e-2)?.value, grossman_psi_beta_form(nu, q, tol * 1e-2)?)),
        ));
    }
    for (z, q, k) in [(c(-1.5, 0.0), 50.0, 8usize), (c(0.0, 0.0), 30.0, 20), (c(-2.5, 0.5), 40.0, 12)] {
        jobs.push(job(
            "asymptotic-vs-direct",
            inputs!["z" => z, "q" => q, "max_k" => k],
            tol.unwrap_or(1e-8),
            move |_| Ok((asymptotic_psi(z, q, k)?.value, psi(z, c(q, 0.0))?)),
        ));
    }
    jobs
}

fn suite_jobs(suite: Suite, opts: SuiteOptions) -> Vec<Job> {
    let index = Suite::EACH.iter().position(|&s| s == suite).unwrap_or(0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(index));
    let n = opts.samples.unwrap_or(suite.default_samples());
    match suite {
        Suite::Shift => shift_jobs(n, &mut rng, opts.tol),
        Suite::Mult => mult_jobs(n, &mut rng, opts.tol),
        Suite::Derivative => derivative_jobs(n, &mut rng, opts.tol),
        Suite::Negapoly => negapoly_jobs(opts.tol),
        Suite::Taylor => taylor_jobs(n, &mut rng, opts.tol),
        Suite::Fourier => fourier_jobs(opts.tol),
        Suite::Grossman => grossman_jobs(n, &mut rng, opts.tol),
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| {
                let o = SuiteOptions {
                    samples: opts.samples.or(Some(s.default_samples())),
                    ..opts
                };
                suite_jobs(s, o)
            })
            .collect(),
    }
}

fn run_jobs(jobs: Vec<Job>) -> Vec<IdentityReport> {
    jobs.par_iter().map(|j| j()).collect()
}

/// Runs a suite in parallel. Reports come back in a fixed order: grouped by
/// identity id, then in sampling order.
pub fn run_suite(suite: Suite, opts: SuiteOptions) -> Vec<IdentityReport> {
    let mut reports = run_jobs(suite_jobs(suite, opts));
    reports.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    reports
}

/// The definite-integral checks on their standard parameter grids. `tol`
/// replaces the per-check defaults (1e-8, and 1e-7 for the Mellin transforms).
pub fn run_integral_suite(tol: Option<f64>) -> Vec<IdentityReport> {
    let t8 = tol.unwrap_or(1e-8);
    let t7 = tol.unwrap_or(1e-7);
    let mut jobs: Vec<Job> = Vec::new();
    for (s, q) in [(2.0, 1.0), (3.0, 0.5), (1.5, 2.0)] {
        jobs.push(report_job("hurwitz-integral-rep", inputs!["s" => c(s, 0.0), "q" => q], t8, move |tol| {
            check_hurwitz_int_rep(c(s, 0.0), q, tol)
        }));
    }
    for (z, q) in [(1.0, 1.0), (0.5, 1.0), (2.5, 0.7)] {
        jobs.push(report_job("psi-integral-rep", inputs!["z" => c(z, 0.0), "q" => q], t8, move |tol| {
            check_psi_int_rep(c(z, 0.0), q, tol)
        }));
    }
    for (z, a, b) in [(-1.5, 0.0, 1.0), (-1.0, 1.0, 2.0), (0.5, 1.0, 1.0)] {
        jobs.push(report_job(
            "psi-primitive",
            inputs!["z" => c(z, 0.0), "a" => a, "b" => b, "lo" => 0.0, "hi" => 1.0],
            t8,
            move |tol| check_primitive(c(z, 0.0), a, b, 0.0, 1.0, tol),
        ));
    }
    for (z, w) in [(-1.0, -1.0), (-2.0, -3.0), (-1.3, -1.3), (-1.5, -2.5)] {
        let id = if z == w { "psi-square-integral" } else { "psi-product-integral" };
        jobs.push(report_job(id, inputs!["z" => c(z, 0.0), "z_prime" => c(w, 0.0)], t8, move |tol| {
            check_product_integral(c(z, 0.0), c(w, 0.0), tol)
        }));
    }
    for z in [c(-2.5, 0.0), c(-3.0, 0.0), c(-2.0, -0.5)] {
        jobs.push(report_job("psi-orthogonality", inputs!["z" => z], t8, move |tol| check_orthogonality(z, tol)));
    }
    for (z, w) in [(-1.5, -2.0), (-1.0, -1.0)] {
        jobs.push(report_job(
            "zeta-psi-integral",
            inputs!["z" => c(z, 0.0), "z_prime" => c(w, 0.0)],
            t8,
            move |tol| check_zeta_psi_integral(c(z, 0.0), c(w, 0.0), tol),
        ));
    }
    for z in [-1.0, -2.2] {
        jobs.push(report_job("zeta-psi-diagonal", inputs!["z" => c(z, 0.0)], t8, move |tol| {
            check_zeta_psi_diagonal(c(z, 0.0), tol)
        }));
    }
    for (z, alpha, a, b) in [(1.0, 0.5, 1.0, 1.0), (2.5, 1.0, 1.0, 2.0), (3.0, 1.5, 2.0, 1.0), (1.7, 0.6, 0.5, 1.5)] {
        jobs.push(report_job(
            "psi-mellin",
            inputs!["z" => c(z, 0.0), "alpha" => c(alpha, 0.0), "a" => a, "b" => b],
            t7,
            move |tol| check_mellin(c(z, 0.0), c(alpha, 0.0), a, b, tol),
        ));
    }
    jobs.push(report_job("log-gamma-squared-integral", vec![], t8, |tol| check_log_gamma_squared::<f64>(tol)));
    let mut reports = run_jobs(jobs);
    reports.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }

    #[test]
    fn deterministic_for_a_seed() {
        let opts = SuiteOptions {
            seed: 7,
            samples: Some(5),
            tol: None,
        };
        let a = run_suite(Suite::Shift, opts);
        let b = run_suite(Suite::Shift, opts);
        assert_eq!(a.len(), 5);
        assert_eq!(a, b);
        let other = run_suite(Suite::Shift, SuiteOptions { seed: 8, ..opts });
        assert_ne!(a[0].inputs, other[0].inputs);
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions {
            samples: Some(6),
            ..SuiteOptions::default()
        };
        for s in [Suite::Shift, Suite::Mult, Suite::Derivative, Suite::Negapoly] {
            for r in run_suite(s, opts) {
                assert!(r.pass, "{}", r.to_json());
            }
        }
    }
}
