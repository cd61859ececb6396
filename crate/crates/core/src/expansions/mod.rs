//! Series representations of ψ(z, q): Taylor about q = 1, the Fourier
//! series on [0, 1], the small-q and large-q expansions, and the comparison
//! with Grossman's polygamma of complex order.

mod asymptotic;
mod fourier;
mod grossman;
mod taylor;

pub use asymptotic::asymptotic_psi;
pub use fourier::{fourier_psi, FOURIER_MAX_TERMS};
pub use grossman::{grossman_psi, grossman_psi_beta_form, psi_difference, GROSSMAN_MAX_TERMS};
pub use taylor::{small_q_psi, taylor_psi, TAYLOR_MAX_TERMS};

use num_complex::Complex;

/// A truncated convergent series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T> {
    pub value: Complex<T>,
    pub terms_used: usize,
    /// Bound (or, where noted, estimate) on the discarded tail.
    pub est_truncation: T,
}

/// A divergent asymptotic series cut at its smallest term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticResult<T> {
    pub value: Complex<T>,
    pub terms_used: usize,
    /// Magnitude of the first term left out.
    pub first_omitted: T,
}
