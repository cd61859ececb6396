use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, real, Real};

/// Deepest refinement level; level ℓ uses step 2^{−ℓ} in the transformed
/// variable.
pub const MAX_LEVEL: usize = 12;

const MIN_LEVEL: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: Complex<T>,
    /// |S_ℓ − S_{ℓ−1}| at the final level.
    pub est_error: T,
    pub evaluations: usize,
}

/// A double-exponential change of variables: maps t to (x, dx/dt), or
/// `None` once the node has run into the end of the representable range.
trait NodeMap<T> {
    fn node(&self, t: T) -> Option<(T, T)>;
}

struct TanhSinh<T> {
    a: T,
    b: T,
    half: T,
    floor: T,
}

impl<T: Real> NodeMap<T> for TanhSinh<T> {
    fn node(&self, t: T) -> Option<(T, T)> {
        let u = T::FRAC_PI_2() * t.sinh();
        let ch = u.cosh();
        // distance from the nearer endpoint, scaled to [0, 1]: 1 − tanh|u|
        let d = (-u.abs()).exp() / ch;
        if !(d > self.floor) {
            return None;
        }
        let w = self.half * T::FRAC_PI_2() * t.cosh() / (ch * ch);
        if !(w > T::zero()) || !w.is_finite() {
            return None;
        }
        let x = if t < T::zero() { self.a + self.half * d } else { self.b - self.half * d };
        if x <= self.a || x >= self.b {
            return None;
        }
        Some((x, w))
    }
}

struct ExpSinh<T> {
    a: T,
    low: T,
    high: T,
}

impl<T: Real> NodeMap<T> for ExpSinh<T> {
    fn node(&self, t: T) -> Option<(T, T)> {
        let u = T::FRAC_PI_2() * t.sinh();
        let e = u.exp();
        if !(e > self.low) || !(e < self.high) {
            return None;
        }
        let x = self.a + e;
        if x <= self.a {
            return None;
        }
        Some((x, T::FRAC_PI_2() * t.cosh() * e))
    }
}

fn integrate<T, M, F>(map: &M, f: F, tol: T, mut trace: Option<&mut Vec<T>>) -> Result<QuadratureResult<T>>
where
    T: Real,
    M: NodeMap<T>,
    F: Fn(T) -> Result<Complex<T>>,
{
    let mut evaluations = 0usize;
    let mut eval = |x: T| -> Result<Complex<T>> {
        evaluations += 1;
        let v = f(x)?;
        if !is_finite(v) {
            return Err(Error::NonFiniteIntegrand { at: x.to_f64_lossy() });
        }
        Ok(v)
    };

    // running sum of w·f over all nodes so far, in units of the level-0 step
    let mut raw = real(T::zero());
    let mut abs_raw = T::zero();
    let mut prev: Option<Complex<T>> = None;
    let mut h = T::one();
    for level in 0..=MAX_LEVEL {
        let (start, stride) = if level == 0 { (0usize, 1usize) } else { (1, 2) };
        if level == 0 {
            if let Some((x, w)) = map.node(T::zero()) {
                let v = eval(x)? * w;
                raw += v;
                abs_raw += v.norm();
            }
        }
        for sign in [T::one(), -T::one()] {
            let mut k = if start == 0 { 1 } else { start };
            loop {
                let t = sign * h * T::from_usize_lossy(k);
                let Some((x, w)) = map.node(t) else { break };
                let v = eval(x)? * w;
                raw += v;
                abs_raw += v.norm();
                k += stride;
            }
        }
        let s = raw * h;
        if let Some(p) = prev {
            let est = (s - p).norm();
            if let Some(tr) = trace.as_deref_mut() {
                tr.push(est);
            }
            let rounding = T::epsilon() * T::lit(64.0) * abs_raw * h;
            if level >= MIN_LEVEL && (est <= tol || est <= rounding) {
                return Ok(QuadratureResult {
                    value: s,
                    est_error: est,
                    evaluations,
                });
            }
        }
        prev = Some(s);
        h = h * T::lit(0.5);
    }
    Err(Error::NoConvergence {
        what: "quadrature",
        budget: MAX_LEVEL,
    })
}

/// ∫_a^b f by tanh-sinh with level doubling until successive levels agree to
/// `tol`. Integrable endpoint singularities are fine; nodes never land on
/// the endpoints themselves.
pub fn quad_finite<T, F>(f: F, a: T, b: T, tol: T) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: Fn(T) -> Result<Complex<T>>,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain {
            function: "quad_finite",
            reason: format!("need finite a < b, got [{a}, {b}]"),
        });
    }
    let map = TanhSinh {
        a,
        b,
        half: (b - a) * T::lit(0.5),
        floor: T::min_positive_value() * T::lit(1e10),
    };
    integrate(&map, f, tol, None)
}

/// ∫_a^∞ f by the exp-sinh map x = a + exp((π/2) sinh t).
pub fn quad_semiinfinite<T, F>(f: F, a: T, tol: T) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: Fn(T) -> Result<Complex<T>>,
{
    if !a.is_finite() {
        return Err(Error::Domain {
            function: "quad_semiinfinite",
            reason: format!("lower limit {a} is not finite"),
        });
    }
    let max = T::max_value();
    let map = ExpSinh {
        a,
        low: T::min_positive_value() * T::lit(1e10),
        high: max.sqrt().min(T::lit(1e250)),
    };
    integrate(&map, f, tol, None)
}
