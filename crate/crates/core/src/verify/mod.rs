//! Numerical verification: double-exponential quadrature, the definite
//! integral identities of ψ(z, q), and seeded suites of functional
//! equations. Every check produces an [`IdentityReport`].

mod integrals;
mod quadrature;
mod report;
mod suites;

pub use integrals::{
    check_hurwitz_int_rep, check_log_gamma_squared, check_mellin, check_orthogonality, check_primitive,
    check_product_integral, check_psi_int_rep, check_zeta_psi_diagonal, check_zeta_psi_integral,
    log_gamma_squared_closed_form, mellin_closed_form, product_integral_closed_form, zeta_psi_closed_form,
};
pub use quadrature::{quad_finite, quad_semiinfinite, QuadratureResult, MAX_LEVEL};
pub use report::{json_number, IdentityReport, JsonComplex, Param};
pub use suites::{fourier_trapezoid, run_integral_suite, run_suite, Suite, SuiteOptions};
