//! Elementary complex helpers with the accuracy the integrands need near the
//! ends of the unit interval.

use super::CNum;
use std::f64::consts::PI;

/// `exp(w) - 1` without cancellation for small `|w|`.
pub fn expm1(w: CNum) -> CNum {
    let (a, b) = (w.re, w.im);
    let half_sin = (0.5 * b).sin();
    // e^a cos b - 1 = expm1(a) cos b - 2 sin^2(b/2)
    let re = a.exp_m1() * b.cos() - 2.0 * half_sin * half_sin;
    let im = a.exp() * b.sin();
    CNum::new(re, im)
}

/// `ln(1 + w)` on the principal branch, accurate for small `|w|`.
pub fn ln_1p(w: CNum) -> CNum {
    if w.norm() > 0.5 {
        return (CNum::new(1.0, 0.0) + w).ln();
    }
    // |1+w|^2 - 1 = 2 Re w + |w|^2
    let re = 0.5 * (2.0 * w.re + w.norm_sqr()).ln_1p();
    let im = w.im.atan2(1.0 + w.re);
    CNum::new(re, im)
}

/// Principal power `z^w = exp(w Log z)`, with `0^w = 0` for `Re(w) > 0`.
///
/// Returns `None` for `0^w` with `Re(w) <= 0`.
pub fn principal_pow(z: CNum, w: CNum) -> Option<CNum> {
    if z.re == 0.0 && z.im == 0.0 {
        return if w.re > 0.0 {
            Some(CNum::new(0.0, 0.0))
        } else if w.re == 0.0 && w.im == 0.0 {
            Some(CNum::new(1.0, 0.0))
        } else {
            None
        };
    }
    Some((w * z.ln()).exp())
}

/// Reduce the imaginary part of a logarithm into `(-pi, pi]`.
///
/// Applied to `sum_i Log(z_i)` this yields `Log(prod_i z_i)`.
pub fn principal_log_wrap(l: CNum) -> CNum {
    let two_pi = 2.0 * PI;
    let mut im = (l.im + PI).rem_euclid(two_pi) - PI;
    if im <= -PI {
        im += two_pi;
    }
    CNum::new(l.re, im)
}

/// `i` as a complex number.
pub const I: CNum = CNum::new(0.0, 1.0);
