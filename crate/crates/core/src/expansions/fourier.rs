use num_complex::Complex;

use super::SeriesResult;
use crate::error::{Error, Result};
use crate::kernel::constants::{EULER_GAMMA, LN_TWO_PI};
use crate::kernel::trig::{cos_pi, sin_pi};
use crate::scalar::{real, Real};

/// Term cap for [`fourier_psi`].
pub const FOURIER_MAX_TERMS: usize = 1 << 23;

const FOURIER_START_TERMS: usize = 16;

/// Fourier series of ψ(z, q) on 0 ≤ q ≤ 1, valid for Re z < −1:
///
/// ```text
/// 2(2π)^z Σ_n n^z [(γ + ln 2πn) cos(2πnq + πz/2) − (π/2) sin(2πnq + πz/2)]
/// ```
///
/// N doubles from 16 until a rigorous tail bound drops below `tol`. The bound
/// is the smaller of a monotone one, C·N^{x+1}(γ + ln 2πN + …)/(−x−1) with
/// x = Re z, and a summation-by-parts one that uses |sin πq| and decays like
/// N^x. At q ∈ {0, 1} only the first applies, so Re z close to −1 exhausts
/// the budget there.
pub fn fourier_psi<T: Real>(z: Complex<T>, q: T, tol: T) -> Result<SeriesResult<T>> {
    let x = z.re;
    if !(x < -T::one()) {
        return Err(Error::Domain {
            function: "fourier_psi",
            reason: format!("Fourier series needs Re z < -1, got {x}"),
        });
    }
    if !(q >= T::zero() && q <= T::one()) {
        return Err(Error::InvalidQ {
            re: q.to_f64_lossy(),
            im: 0.0,
            reason: "fourier_psi requires 0 <= q <= 1",
        });
    }
    let two_pi = T::lit(2.0) * T::PI();
    let c0 = T::lit(EULER_GAMMA + LN_TWO_PI);
    let half_pi = T::FRAC_PI_2();
    let half_z = z * T::lit(0.5);
    let (cb, sb) = (cos_pi(half_z), sin_pi(half_z));
    let pref = (z * T::lit(LN_TWO_PI)).exp() * T::lit(2.0);
    let amp = pref.norm() * (T::PI() * z.im.abs() * T::lit(0.5)).exp();
    let sin_q = sin_pi(real(q)).re.abs();
    let no_convergence = Error::NoConvergence {
        what: "fourier_psi",
        budget: FOURIER_MAX_TERMS,
    };
    // the bound is computable up front, so hopeless requests fail fast
    if !(amp * tail_bound(z, x, FOURIER_MAX_TERMS, c0, sin_q) <= tol) {
        return Err(no_convergence);
    }

    let mut sum = real(T::zero());
    let mut done = 0usize;
    let mut n_max = FOURIER_START_TERMS;
    loop {
        for n in done + 1..=n_max {
            let nf = T::from_usize_lossy(n);
            let ln_n = nf.ln();
            let theta = two_pi * (nf * q).fract();
            let (st, ct) = theta.sin_cos();
            let cos_arg = cb * ct - sb * st;
            let sin_arg = sb * ct + cb * st;
            let nz = (z * ln_n).exp();
            sum += nz * (cos_arg * (c0 + ln_n) - sin_arg * half_pi);
        }
        done = n_max;
        let bound = amp * tail_bound(z, x, n_max, c0, sin_q);
        if bound <= tol {
            return Ok(SeriesResult {
                value: pref * sum,
                terms_used: n_max,
                est_truncation: bound,
            });
        }
        if n_max >= FOURIER_MAX_TERMS {
            return Err(no_convergence);
        }
        n_max = (2 * n_max).min(FOURIER_MAX_TERMS);
    }
}

/// Bound on Σ_{n>N} |u_n| + |v_n| (monotone) or on the oscillating tail via
/// summation by parts, before the prefactor 2|(2π)^z| e^{π|Im z|/2}.
fn tail_bound<T: Real>(z: Complex<T>, x: T, n: usize, c0: T, sin_q: T) -> T {
    let nf = T::from_usize_lossy(n);
    let ln_n = nf.ln();
    let a = -x - T::one();
    let half_pi = T::FRAC_PI_2();
    let p = nf.powf(x + T::one()) / a;
    let mono = p * (c0 + ln_n + a.recip()) + half_pi * p;

    if sin_q <= T::zero() {
        return mono;
    }
    let b = -x;
    let zn = z.norm();
    let np = nf.powf(x) / b;
    let var_u = np * (zn * (c0 + ln_n + b.recip()) + T::one());
    let var_v = half_pi * zn * np;
    let n1 = nf + T::one();
    let u1 = n1.powf(x) * (c0 + n1.ln());
    let v1 = half_pi * n1.powf(x);
    let osc = (u1 + var_u + v1 + var_v) / sin_q;
    mono.min(osc)
}
