//! Foundation special functions: gamma family, digamma, generalized harmonic
//! numbers, Bernoulli numbers and polynomials, and the constants they share.
//!
//! All routines are pure; the only shared state is the Bernoulli table,
//! built on first use and immutable afterwards.

pub mod bernoulli;
pub mod constants;
pub mod digamma;
pub mod gamma;
pub mod trig;

pub use bernoulli::{bernoulli_number, bernoulli_poly, bernoulli_table, BernoulliTable};
pub use constants::Constants;
pub use digamma::{digamma, harmonic, harmonic_number};
pub use gamma::{gamma, log_gamma, recip_gamma};
pub use trig::{cos_pi, cot_pi, sin_pi};
