//! Powers and logarithms of `ln x` for `x` in the open unit interval.
//!
//! For such `x`, `ln x` is a negative real, and its principal logarithm is
//! `ln|ln x| + i pi`. All the integrands in the table use this branch.

use super::{CNum, Result, SpecFunError};
use std::f64::consts::PI;

fn check_unit(function: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(SpecFunError::Domain {
            function,
            message: format!("x must lie in (0, 1), got {x}"),
        })
    }
}

fn check_negative_ln(function: &'static str, ln_x: f64) -> Result<()> {
    if ln_x < 0.0 && ln_x.is_finite() {
        Ok(())
    } else {
        Err(SpecFunError::Domain {
            function,
            message: format!("ln x must be a finite negative number, got {ln_x}"),
        })
    }
}

/// `log(log x)` on the principal branch: `ln|ln x| + i pi`.
pub fn log_log(x: f64) -> Result<CNum> {
    check_unit("log_log", x)?;
    log_log_of_ln(x.ln())
}

/// [`log_log`] taking `ln x` directly, for callers that know it more
/// accurately than `x` itself (e.g. `x` within an ulp of 1).
pub fn log_log_of_ln(ln_x: f64) -> Result<CNum> {
    check_negative_ln("log_log", ln_x)?;
    Ok(CNum::new((-ln_x).ln(), PI))
}

/// `log^k(x) = exp(k (ln|ln x| + i pi))`.
pub fn log_pow(x: f64, k: CNum) -> Result<CNum> {
    check_unit("log_pow", x)?;
    log_pow_of_ln(x.ln(), k)
}

/// [`log_pow`] taking `ln x` directly.
pub fn log_pow_of_ln(ln_x: f64, k: CNum) -> Result<CNum> {
    check_negative_ln("log_pow", ln_x)?;
    let v = (k * CNum::new((-ln_x).ln(), PI)).exp();
    super::finite("log_pow", k, v)
}
