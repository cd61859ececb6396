use num_complex::Complex;

use super::AsymptoticResult;
use crate::error::{Error, Result};
use crate::genpoly::shift_rhs;
use crate::kernel::bernoulli_table;
use crate::scalar::{real, Real};

/// Large-q expansion
///
/// ```text
/// ψ(z, q) ~ Σ_k B_k/(k! Γ(1−z−k) q^{k+z}) · [ln q − H(−z−k)]
/// ```
///
/// whose k-th term is B_k/k! · shift_rhs(z+k−1, q). Terms with B_k = 0 are
/// skipped. The sum stops just before the smallest term (k ≥ 1), or after
/// `max_k` if the terms are still decreasing there; `first_omitted` is the
/// magnitude of the first term not included. `max_k` is clamped to what the
/// Bernoulli table supports.
pub fn asymptotic_psi<T: Real>(z: Complex<T>, q: T, max_k: usize) -> Result<AsymptoticResult<T>> {
    if !(q > T::zero()) || !q.is_finite() {
        return Err(Error::InvalidQ {
            re: q.to_f64_lossy(),
            im: 0.0,
            reason: "asymptotic_psi requires real q > 0",
        });
    }
    let table = bernoulli_table();
    let max_k = max_k.min(table.max_index - 2);
    let qc = real(q);

    let mut factorial = T::one();
    let mut terms: Vec<(usize, Complex<T>)> = Vec::new();
    for k in 0..=max_k + 2 {
        if k > 0 {
            factorial *= T::from_usize_lossy(k);
        }
        let b = table.number(k).expect("index within table");
        if b == 0.0 {
            continue;
        }
        let t = shift_rhs(z + T::from_usize_lossy(k) - T::one(), qc) * (T::lit(b) / factorial);
        terms.push((k, t));
    }

    // stop before the first local minimum among the k ≥ 1 terms
    let mut value = real(T::zero());
    let mut used = 0;
    let mut first_omitted = T::zero();
    for (i, &(k, t)) in terms.iter().enumerate() {
        if k > max_k {
            first_omitted = t.norm();
            break;
        }
        if k >= 1 {
            if let Some(&(_, next)) = terms.get(i + 1) {
                if next.norm() >= t.norm() {
                    first_omitted = t.norm();
                    break;
                }
            }
        }
        value += t;
        used = k + 1;
    }
    Ok(AsymptoticResult {
        value,
        terms_used: used,
        first_omitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genpoly::gen_polygamma;
    use crate::hurwitz::EvalConfig;
    use crate::kernel::{digamma, log_gamma};
    use crate::scalar::cplx;

    fn c(re: f64, im: f64) -> Complex<f64> {
        cplx(re, im)
    }

    #[test]
    fn half_integer_order_large_q() {
        let a = asymptotic_psi(c(-1.5, 0.0), 50.0, 8).unwrap();
        let d = gen_polygamma(c(-1.5, 0.0), c(50.0, 0.0), EvalConfig::default()).unwrap().value;
        assert!((a.value - d).norm() < 1e-8, "{} vs {d}", a.value);
        assert!(a.first_omitted < 1e-8);
    }

    #[test]
    fn reduces_to_digamma_asymptotics() {
        let a = asymptotic_psi(c(0.0, 0.0), 30.0, 20).unwrap();
        let d = digamma(c(30.0, 0.0)).unwrap();
        assert!((a.value - d).norm() < 1e-14 * d.norm().max(1.0) + a.first_omitted);
        // leading terms ln q − 1/(2q)
        let two = asymptotic_psi(c(0.0, 0.0), 30.0, 1).unwrap();
        assert!((two.value.re - (30f64.ln() - 1.0 / 60.0)).abs() < 1e-15);
    }

    #[test]
    fn stirling_at_negative_integer() {
        // z = −1: ln Γ(q) + ζ'(0), the Stirling series
        let a = asymptotic_psi(c(-1.0, 0.0), 12.0, 30).unwrap();
        let want = log_gamma(c(12.0, 0.0)).unwrap() - 0.918_938_533_204_672_7;
        assert!((a.value - want).norm() < 1e-13 + a.first_omitted);
    }

    #[test]
    fn superasymptotic_cut_at_small_q() {
        // small q: terms turn around early, and the cut happens before max_k
        let a = asymptotic_psi(c(0.5, 0.0), 1.5, 50).unwrap();
        assert!(a.terms_used < 50);
        let d = gen_polygamma(c(0.5, 0.0), c(1.5, 0.0), EvalConfig::default()).unwrap().value;
        assert!((a.value - d).norm() < 10.0 * a.first_omitted);
    }

    #[test]
    fn first_omitted_shrinks_with_q() {
        let mut prev = f64::INFINITY;
        for &q in &[10.0, 20.0, 40.0, 80.0] {
            let a = asymptotic_psi(c(-1.5, 0.3), q, 10).unwrap();
            assert!(a.first_omitted < prev);
            prev = a.first_omitted;
        }
    }

    #[test]
    fn rejects_bad_q() {
        assert!(asymptotic_psi(c(0.0, 0.0), -3.0, 5).is_err());
    }
}
