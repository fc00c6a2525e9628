//! Right-hand sides, transcribed as printed.
//!
//! Only `specfun` and elementary complex arithmetic are used here; nothing in
//! this file integrates.

use super::ParamPoint;
use crate::specfun::cmath::{principal_log_wrap, principal_pow, I};
use crate::specfun::{
    constant, digamma, gamma, hurwitz_zeta, log_gamma, real, riemann_zeta, zeta_derivative, CNum,
    Constant, Result, SpecFunConfig, SpecFunError,
};
use std::f64::consts::{LN_2, PI};

fn pow(z: CNum, w: CNum) -> Result<CNum> {
    principal_pow(z, w).ok_or(SpecFunError::Domain {
        function: "pow",
        message: format!("0^{w} is undefined"),
    })
}

fn zeta(s: f64, cfg: &SpecFunConfig) -> Result<f64> {
    Ok(riemann_zeta(real(s), cfg)?.re)
}

fn zeta_d(s: f64, cfg: &SpecFunConfig) -> Result<f64> {
    Ok(zeta_derivative(real(s), cfg)?.re)
}

fn two_pi() -> CNum {
    real(2.0 * PI)
}

/// `zeta(-k-1, (pi - i m log a) / (2 pi))`
fn z_plus(pp: &ParamPoint, m: CNum, cfg: &SpecFunConfig) -> Result<CNum> {
    let q = (PI - I * m * pp.a.ln()) / (2.0 * PI);
    hurwitz_zeta(-pp.k - 1.0, q, cfg)
}

/// `zeta(-k-1, 1 - i n log a / (2 pi))`
fn z_minus(pp: &ParamPoint, n: CNum, cfg: &SpecFunConfig) -> Result<CNum> {
    let q = 1.0 - I * n * pp.a.ln() / (2.0 * PI);
    hurwitz_zeta(-pp.k - 1.0, q, cfg)
}

pub(super) fn i4a(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let (k, m) = (pp.k, pp.m);
    let la = pp.a.ln();
    let elementary = -m * pow(la, k + 2.0)? / ((k + 1.0) * (k + 2.0));
    let z = -I * pow(two_pi(), k + 2.0)? * pow(I / m, k + 1.0)? * z_plus(pp, m, cfg)? / (k + 1.0);
    Ok(elementary + z)
}

pub(super) fn i4b(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let (k, n) = (pp.k, pp.n);
    let la = pp.a.ln();
    let z = -I * pow(two_pi(), k + 2.0)? * pow(I / n, k + 1.0)? * z_minus(pp, n, cfg)? / (k + 1.0);
    let elementary = -n * pow(la, k + 2.0)? / ((k + 1.0) * (k + 2.0));
    let last = -I * PI * pow(la, k + 1.0)? / (k + 1.0);
    Ok(z + elementary + last)
}

fn i5a_parts(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<(CNum, CNum, CNum)> {
    let (k, m) = (pp.k, pp.m);
    let prefactor = pow(two_pi(), k + 2.0)? * pow(I / m, k)? / (2.0 * (k + 1.0) * m);
    let bracket = z_plus(pp, m, cfg)? - z_minus(pp, m, cfg)?;
    let extra = I * PI * m * pow(pp.a.ln(), k + 1.0)?;
    Ok((prefactor, bracket, extra))
}

/// The `i pi m log^{k+1}(a)` term added after the bracketed product.
pub(super) fn i5a_outside(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let (prefactor, bracket, extra) = i5a_parts(pp, cfg)?;
    Ok(prefactor * bracket + extra)
}

/// The same term read as part of the bracket.
pub(super) fn i5a_inside(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let (prefactor, bracket, extra) = i5a_parts(pp, cfg)?;
    Ok(prefactor * (bracket + extra))
}

pub(super) fn i5b(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let (k, m, n) = (pp.k, pp.m, pp.n);
    let la = pp.a.ln();
    let scale = 4.0 * PI * PI / ((k + 1.0) * (k + 2.0) * m * n);
    let factor = pow(two_pi(), k)? * k + pow(real(2.0), k + 1.0)? * pow(real(PI), k)?;
    let zetas = n * pow(I / m, k)? * z_plus(pp, m, cfg)? + m * pow(I / n, k)? * z_minus(pp, n, cfg)?;
    let elementary = m * n * pow(la, k + 1.0)? * (la * (m + n) + I * PI * (k + 2.0));
    Ok(scale * factor * zetas - elementary)
}

pub(super) fn i6a(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let k = pp.k;
    let two = real(2.0);
    let zg = hurwitz_zeta(k + 2.0, real(1.0), cfg)? * gamma(k + 1.0)?;
    Ok(pow(two, -k - 2.0)? * (pow(two, k + 2.0)? - 1.0) * (I * PI * k).exp() * zg)
}

pub(super) fn i6b(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let (k, m, n) = (pp.k, pp.m, pp.n);
    let zg = hurwitz_zeta(k + 2.0, real(1.0), cfg)? * gamma(k + 1.0)?;
    let powers = (2.0 - pow(real(2.0), -k)?) * pow(m, -k - 1.0)? - 2.0 * pow(n, -k - 1.0)?;
    Ok(0.5 * (I * PI * k).exp() * zg * powers)
}

/// The real `a` of the log-gamma and digamma forms is `arg` of the
/// unit-circle parameter.
fn theta(pp: &ParamPoint) -> f64 {
    pp.a.arg()
}

pub(super) fn lg_atanh(pp: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let t = theta(pp);
    let am = t * pp.m;
    // any logarithm of the quotient, wrapped onto the principal branch below
    let log_ratio = am.ln() + 2.0 * log_gamma(am / (2.0 * PI))?
        - (2.0 * PI).ln()
        - 2.0 * log_gamma((am + PI) / (2.0 * PI))?;
    Ok(PI / (4.0 * t) * principal_log_wrap(log_ratio))
}

pub(super) fn lg_log(pp: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let t = theta(pp);
    let (m, n) = (pp.m, pp.n);
    let (am, an) = (t * m, t * n);
    let lg = principal_log_wrap(
        log_gamma((am + PI) / (2.0 * PI))? + log_gamma(an / (2.0 * PI) + 1.0)?,
    );
    let log_ia = (I * t).ln();
    let sum = -2.0 * PI * lg - am + am * log_ia - am * (2.0 * I * PI / m).ln() - an
        + an * log_ia
        - an * (2.0 * I * PI / n).ln()
        + PI * (I * PI * t).ln()
        - PI * (I / (2.0 * n)).ln();
    Ok(sum / (2.0 * t))
}

pub(super) fn dg_atanh(pp: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let t = theta(pp);
    let m = pp.m;
    let am = t * m;
    let v = -m * digamma(am / (2.0 * PI) + 1.0)? + m * digamma((am + PI) / (2.0 * PI))? + PI / t;
    Ok(0.25 * v)
}

pub(super) fn dg_log(pp: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let t = theta(pp);
    let (m, n) = (pp.m, pp.n);
    let (am, an) = (t * m, t * n);
    let log_ia = (I * t).ln();
    let ln_2pi = (2.0 * PI).ln();
    let sum = -am * log_ia + am * (I / m).ln() + am * ln_2pi + am * digamma((am + PI) / (2.0 * PI))?
        - an * log_ia
        + an * (I / n).ln()
        + an * ln_2pi
        + an * digamma(an / (2.0 * PI) + 1.0)?
        - PI;
    Ok(sum / (2.0 * t))
}

pub(super) fn e1(_: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let c = constant(Constant::Catalan);
    Ok(real((2.0 * c - 1.0) / (16.0 * PI)))
}

pub(super) fn e2(_: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let ln_a = constant(Constant::GlaisherLog);
    // log(16 pi^3 / A^36)
    let log_arg = 4.0 * LN_2 + 3.0 * PI.ln() - 36.0 * ln_a;
    Ok(PI * PI / 24.0 * CNum::new(log_arg, 3.0 * PI))
}

pub(super) fn e3(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let v = -(2f64.sqrt() - 8.0) * PI.sqrt() * zeta(2.5, cfg)? / 16.0;
    Ok(CNum::new(0.0, v))
}

pub(super) fn e4(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let v = (2f64.sqrt() - 4.0) * PI.sqrt() * zeta(1.5, cfg)? / 4.0;
    Ok(CNum::new(0.0, v))
}

pub(super) fn e5(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let g = constant(Constant::EulerGamma);
    let z3 = zeta(3.0, cfg)?;
    let v = -7.0 * zeta_d(3.0, cfg)? + z3 * CNum::new(-7.0 + 7.0 * g - LN_2, -7.0 * PI);
    Ok(v / 8.0)
}

pub(super) fn e6(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let g = constant(Constant::EulerGamma);
    let tail = PI.powi(4) * CNum::new(45.0 - 30.0 * g + 2.0 * LN_2, 30.0 * PI) / 1440.0;
    Ok(15.0 * zeta_d(4.0, cfg)? / 8.0 + tail)
}

pub(super) fn e7(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let g = constant(Constant::EulerGamma);
    let v = -6.0 * zeta_d(2.0, cfg)? + CNum::new(g, -PI) * PI * PI;
    Ok(v / 8.0)
}

pub(super) fn e8(_: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    let ln_a = constant(Constant::GlaisherLog);
    // log(A^12 / pi)
    Ok(PI * PI / 12.0 * CNum::new(12.0 * ln_a - PI.ln(), -PI))
}

pub(super) fn e9(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let v = -0.25 * (PI / 2.0).sqrt() * zeta(2.5, cfg)?;
    Ok(CNum::new(0.0, v))
}

pub(super) fn e10(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    Ok(CNum::new(0.0, (PI / 2.0).sqrt() * zeta(1.5, cfg)?))
}

pub(super) fn e11(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let g = constant(Constant::EulerGamma);
    let v = zeta_d(3.0, cfg)? + zeta(3.0, cfg)? * CNum::new(1.0 - g - LN_2, PI);
    Ok(v / 4.0)
}

pub(super) fn e12(_: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let g = constant(Constant::EulerGamma);
    let inner = I * zeta_d(1.5, cfg)? - I * zeta(1.5, cfg)? * CNum::new(g + 3.0 * LN_2, -PI);
    Ok((PI / 2.0).sqrt() * inner)
}

/// `(i/(j+1))^k / (j+1)^2`
fn dd_term(j: CNum, k: CNum) -> Result<CNum> {
    let j1 = j + 1.0;
    Ok(pow(I / j1, k)? / (j1 * j1))
}

pub(super) fn dd1(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let k = pp.k;
    let two = real(2.0);
    let zg = hurwitz_zeta(k + 2.0, real(1.0), cfg)? * gamma(k + 2.0)?;
    let front = -pow(two, -k - 1.0)? * (pow(two, k + 1.0)? - 1.0) * (I * PI * k / 2.0).exp();
    Ok(front * zg * (dd_term(pp.m, k)? - dd_term(pp.p, k)?))
}

pub(super) fn dd2(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let k = pp.k;
    let zg = hurwitz_zeta(k + 2.0, real(1.0), cfg)? * gamma(k + 2.0)?;
    Ok((I * PI * k / 2.0).exp() * zg * (dd_term(pp.p, k)? - dd_term(pp.n, k)?))
}

pub(super) fn e13(pp: &ParamPoint, _: &SpecFunConfig) -> Result<CNum> {
    Ok(0.5 * ((pp.m + 1.0) / (pp.p + 1.0)).ln())
}

pub(super) fn e14(pp: &ParamPoint, cfg: &SpecFunConfig) -> Result<CNum> {
    let cube = |j: CNum| (j + 1.0).powi(3).inv();
    Ok(2.0 * zeta(3.0, cfg)? * (cube(pp.n) - cube(pp.p)))
}
