//! Left-hand-side integrands, one per identity.
//!
//! Every function takes the parameter point and a node of the unit interval.
//! They are written in terms of `L = ln x` so that factors such as
//! `1 - x^n` and `log(log x)` stay accurate when `x` is within an ulp of 1.
//! A value that cannot be formed (a zero raised to a power with nonpositive
//! real part) comes back as NaN and the quadrature reports it.

use super::ParamPoint;
use crate::quad::UnitPoint;
use crate::specfun::cmath::{expm1, ln_1p, principal_pow};
use crate::specfun::{log_log_of_ln, log_pow_of_ln, real, CNum};
use std::f64::consts::PI;

const NAN: CNum = CNum::new(f64::NAN, f64::NAN);

fn pow_x(l: f64, m: CNum) -> CNum {
    (m * l).exp()
}

/// `1 - x^n`
fn one_minus_pow(l: f64, n: CNum) -> CNum {
    -expm1(n * l)
}

fn atanh_pow(l: f64, m: CNum) -> CNum {
    0.5 * (ln_1p(pow_x(l, m)) - one_minus_pow(l, m).ln())
}

fn log_one_plus_pow(l: f64, m: CNum) -> CNum {
    ln_1p(pow_x(l, m))
}

fn log_one_minus_pow(l: f64, n: CNum) -> CNum {
    one_minus_pow(l, n).ln()
}

/// `log((x^m + 1)(1 - x^n))`, the logarithm of the product as written.
fn log_product(pt: UnitPoint, l: f64, m: CNum, n: CNum) -> CNum {
    if pt.x < 0.5 {
        let u = pow_x(l, m);
        let w = pow_x(l, n);
        ln_1p(u - w - u * w)
    } else {
        ((1.0 + pow_x(l, m)) * one_minus_pow(l, n)).ln()
    }
}

fn lp(l: f64, k: CNum) -> CNum {
    log_pow_of_ln(l, k).unwrap_or(NAN)
}

fn ll(l: f64) -> CNum {
    log_log_of_ln(l).unwrap_or(NAN)
}

fn cpow(z: CNum, k: CNum) -> CNum {
    principal_pow(z, k).unwrap_or(NAN)
}

/// `log^k(a/x) + log^k(a x)`
fn shifted_log_pows(pp: &ParamPoint, l: f64) -> CNum {
    let ln_a = pp.a.ln();
    cpow(ln_a - l, pp.k) + cpow(ln_a + l, pp.k)
}

fn theta(pp: &ParamPoint) -> f64 {
    pp.a.arg()
}

pub(super) fn i4a(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    log_one_plus_pow(l, pp.m) * shifted_log_pows(pp, l) / pt.x
}

pub(super) fn i4b(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    log_one_minus_pow(l, pp.n) * shifted_log_pows(pp, l) / pt.x
}

pub(super) fn i5a(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    atanh_pow(l, pp.m) * shifted_log_pows(pp, l) / pt.x
}

pub(super) fn i5b(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    shifted_log_pows(pp, l) * log_product(pt, l, pp.m, pp.n) / pt.x
}

pub(super) fn i6a(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    atanh_pow(l, real(1.0)) * lp(l, pp.k) / pt.x
}

pub(super) fn i6b(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    lp(l, pp.k) * log_product(pt, l, pp.m, pp.n) / pt.x
}

pub(super) fn lg_atanh(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let t = theta(pp);
    atanh_pow(l, pp.m) / (pt.x * (t * t + l * l))
}

pub(super) fn lg_log(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let t = theta(pp);
    log_product(pt, l, pp.m, pp.n) / (pt.x * (t * t + l * l))
}

pub(super) fn dg_atanh(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let t2 = theta(pp).powi(2);
    let l2 = l * l;
    (t2 - l2) * atanh_pow(l, pp.m) / (pt.x * (t2 + l2).powi(2))
}

/// `(-x^m - 1)(x^n - 1)` equals `(x^m + 1)(1 - x^n)` on the unit interval.
pub(super) fn dg_log(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let t2 = theta(pp).powi(2);
    let l2 = l * l;
    (t2 - l2) * log_product(pt, l, pp.m, pp.n) / (pt.x * (t2 + l2).powi(2))
}

pub(super) fn e1(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let num = PI.powi(3) - 12.0 * PI * l * l;
    let den = pt.x * (4.0 * l * l + PI * PI).powi(3);
    atanh_pow(l, real(1.0)) * (num / den)
}

pub(super) fn e2(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    ll(l) * atanh_pow(l, real(1.0)) / pt.x
}

pub(super) fn e3(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    lp(l, real(0.5)) * atanh_pow(l, real(1.0)) / pt.x
}

pub(super) fn e4(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    (atanh_pow(l, real(1.0)) / pt.x).fdiv(lp(l, real(0.5)))
}

pub(super) fn e5(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    l * ll(l) * atanh_pow(l, real(1.0)) / pt.x
}

pub(super) fn e6(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    l * l * ll(l) * atanh_pow(l, real(1.0)) / pt.x
}

/// `log((1 - x)(x^2 + 1))`: the product form with m = 2, n = 1.
pub(super) fn e7(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    log_product(pt, l, real(2.0), real(1.0)) * ll(l) / pt.x
}

pub(super) fn e8(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    log_one_minus_pow(l, real(2.0)) * ll(l) / pt.x
}

pub(super) fn e9(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    lp(l, real(0.5)) * log_one_minus_pow(l, real(2.0)) / pt.x
}

pub(super) fn e10(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    (log_one_minus_pow(l, real(2.0)) / pt.x).fdiv(lp(l, real(0.5)))
}

pub(super) fn e11(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    l * log_one_minus_pow(l, real(2.0)) * ll(l) / pt.x
}

pub(super) fn e12(_: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    (log_one_minus_pow(l, real(2.0)) * ll(l) / pt.x).fdiv(lp(l, real(0.5)))
}

/// `x^m - x^p`, factoring out the larger power so `expm1` never overflows.
fn pow_difference(l: f64, m: CNum, p: CNum) -> CNum {
    if m.re >= p.re {
        pow_x(l, p) * expm1((m - p) * l)
    } else {
        -pow_x(l, m) * expm1((p - m) * l)
    }
}

pub(super) fn dd1(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let num = pow_difference(l, pp.m, pp.p);
    let den = (1.0 + pow_x(l, pp.m + 1.0)) * (1.0 + pow_x(l, pp.p + 1.0));
    (lp(l, pp.k + 1.0) * num).fdiv(den)
}

pub(super) fn dd2(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    // both factors of the denominator vanish at x = 1; divide one at a time
    let ratio = pow_difference(l, pp.n, pp.p).fdiv(expm1((pp.n + 1.0) * l));
    (ratio * lp(l, pp.k + 1.0)).fdiv(expm1((pp.p + 1.0) * l))
}

pub(super) fn e13(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let den = (1.0 + pow_x(l, pp.m + 1.0)) * (1.0 + pow_x(l, pp.p + 1.0));
    (pow_difference(l, pp.m, pp.p) / l).fdiv(den)
}

pub(super) fn e14(pp: &ParamPoint, pt: UnitPoint) -> CNum {
    let l = pt.ln_x();
    let ratio = (l * pow_difference(l, pp.n, pp.p)).fdiv(expm1((pp.n + 1.0) * l));
    (ratio * l).fdiv(expm1((pp.p + 1.0) * l))
}
