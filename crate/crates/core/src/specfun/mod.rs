//! Complex special functions and classical constants.
//!
//! Everything here works on [`CNum`] (a double-precision complex number) and is
//! a pure function of its arguments. Results are checked for finiteness before
//! they are returned, so a NaN or infinity never leaves this module; overflow
//! is reported as [`SpecFunError::Overflow`].

mod bernoulli;
mod dd;
mod branch;
pub mod cmath;
mod constants;
mod gamma;
mod zeta;

pub use bernoulli::{bernoulli_2j, MAX_BERNOULLI_INDEX};
pub use branch::{log_log, log_log_of_ln, log_pow, log_pow_of_ln};
pub use constants::{alternating_sum, constant, Constant};
pub use gamma::{digamma, gamma, log_gamma};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_ds, riemann_zeta, zeta_derivative};

use thiserror::Error;

/// Complex double-precision scalar used for every value in the crate.
pub type CNum = num_complex::Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: CNum },
    #[error("domain error in {function}: {message}")]
    Domain {
        function: &'static str,
        message: String,
    },
    #[error("{function} did not converge: {message}")]
    Convergence {
        function: &'static str,
        message: String,
    },
    #[error("{function} overflowed at {at}")]
    Overflow { function: &'static str, at: CNum },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, SpecFunError>;

/// Tuning for the Euler–Maclaurin evaluation of the Hurwitz zeta function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecFunConfig {
    /// Number of terms summed directly before the Euler–Maclaurin tail.
    pub em_shift_terms: usize,
    /// Number of Bernoulli correction terms in the tail.
    pub em_bernoulli_terms: usize,
    /// Absolute size below which a tail term ends the correction early.
    pub target_abs_tol: f64,
}

impl Default for SpecFunConfig {
    fn default() -> Self {
        Self {
            em_shift_terms: 32,
            em_bernoulli_terms: 12,
            target_abs_tol: 1e-13,
        }
    }
}

impl SpecFunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.em_shift_terms < 8 {
            return Err(SpecFunError::Config(format!(
                "em_shift_terms must be at least 8, got {}",
                self.em_shift_terms
            )));
        }
        if !(4..=MAX_BERNOULLI_INDEX).contains(&self.em_bernoulli_terms) {
            return Err(SpecFunError::Config(format!(
                "em_bernoulli_terms must lie in [4, {MAX_BERNOULLI_INDEX}], got {}",
                self.em_bernoulli_terms
            )));
        }
        if self.target_abs_tol.is_nan() || self.target_abs_tol <= 0.0 {
            return Err(SpecFunError::Config(format!(
                "target_abs_tol must be positive, got {}",
                self.target_abs_tol
            )));
        }
        Ok(())
    }
}

pub(crate) fn finite(function: &'static str, at: CNum, value: CNum) -> Result<CNum> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(SpecFunError::Overflow { function, at })
    }
}

/// Shorthand for a real value as a complex number.
#[inline]
pub fn real(x: f64) -> CNum {
    CNum::new(x, 0.0)
}
