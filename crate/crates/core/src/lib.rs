//! The generalized polygamma function ψ(z, q) for complex order z and
//! argument q, built on a Hurwitz zeta kernel with s-derivatives.
//!
//! ```text
//! ψ(z, q) = e^{−γz} ∂/∂z [e^{γz} ζ(z+1, q)/Γ(−z)]
//! ```
//!
//! It is entire in z, reduces to the polygamma ψ^{(m)}(q) at z = m ∈ ℕ₀ and
//! to the balanced negapolygammas at z = −m. Besides the direct evaluator the
//! crate has series representations ([`expansions`]) and a verification
//! harness ([`verify`]) for the functional equations and definite integrals.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`.
//!
//! ```
//! use polygamma::{gen_polygamma, Complex64, EvalConfig};
//!
//! let v = gen_polygamma(Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0), EvalConfig::default()).unwrap();
//! assert!((v.value.re + 0.5 * (2.0 * std::f64::consts::PI).ln()).abs() < 1e-12);
//! ```

pub mod error;
pub mod expansions;
pub mod genpoly;
pub mod hurwitz;
pub mod kernel;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use expansions::{
    asymptotic_psi, fourier_psi, grossman_psi, psi_difference, small_q_psi, taylor_psi, AsymptoticResult, SeriesResult,
};
pub use genpoly::{
    balanced_negapolygamma, gen_polygamma, gosper_negapolygamma, psi_at_one, psi_at_zero, shift_rhs, Branch,
    GenPolyValue,
};
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta, riemann_zeta_ds, EvalConfig, ZetaValue};
pub use num_complex::{Complex, Complex32, Complex64};
pub use scalar::Real;
pub use verify::{IdentityReport, QuadratureResult};

/// The universal scalar: a double-precision complex number.
pub type ComplexValue = Complex64;
pub type GenPolyValue64 = GenPolyValue<f64>;
pub type ZetaValue64 = ZetaValue<f64>;
pub type SeriesResult64 = SeriesResult<f64>;
pub type AsymptoticResult64 = AsymptoticResult<f64>;
pub type QuadratureResult64 = QuadratureResult<f64>;
