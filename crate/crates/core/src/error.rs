use thiserror::Error;

/// Failure modes shared by every module.
///
/// Positions are reported as `f64` pairs so the error type stays independent
/// of the scalar the caller instantiated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: pole at z = {re}{im:+}i")]
    Pole {
        function: &'static str,
        re: f64,
        im: f64,
    },

    #[error("hurwitz zeta: pole at s = 1 (s = {re}{im:+}i)")]
    PoleAtSEqualsOne { re: f64, im: f64 },

    #[error("invalid q = {re}{im:+}i: {reason}")]
    InvalidQ {
        re: f64,
        im: f64,
        reason: &'static str,
    },

    #[error("{function}: argument outside domain ({reason})")]
    Domain {
        function: &'static str,
        reason: String,
    },

    #[error("{what}: no convergence within budget of {budget}")]
    NoConvergence { what: &'static str, budget: usize },

    #[error("integrand is not finite at x = {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("{identity}: parameters violate the validity region ({condition})")]
    Hypothesis {
        identity: &'static str,
        condition: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
