//! Log-gamma, gamma and digamma for complex arguments.

use super::bernoulli::bernoulli_2j;
use super::{finite, CNum, Result, SpecFunError};
use std::f64::consts::PI;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_MIN_MODULUS: f64 = 8.0;
const STIRLING_TERMS: usize = 10;
const DIGAMMA_MIN_RE: f64 = 10.0;
const DIGAMMA_TERMS: usize = 12;

fn check(function: &'static str, z: CNum) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(SpecFunError::Domain {
            function,
            message: format!("non-finite argument {z}"),
        });
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(SpecFunError::Pole { function, at: z });
    }
    Ok(())
}

/// Principal-branch `log Gamma(z)`: analytic on the plane cut along the
/// negative real axis, and satisfying `lnG(z+1) = lnG(z) + Log z`.
pub fn log_gamma(z: CNum) -> Result<CNum> {
    check("log_gamma", z)?;
    let v = if z.re >= 0.5 {
        log_gamma_right(z)
    } else {
        // lnG(z) = ln pi - Log sin(pi z) - lnG(1-z) + 2 pi i k
        let one_minus = CNum::new(1.0, 0.0) - z;
        let raw = CNum::new(PI.ln(), 0.0) - ln_sin_pi(z) - log_gamma_right(one_minus);
        let sign = if z.im < 0.0 { -1.0 } else { 1.0 };
        let k = sign * (0.5 * z.re + 0.25).floor();
        raw + CNum::new(0.0, 2.0 * PI * k)
    };
    finite("log_gamma", z, v)
}

fn log_gamma_right(z: CNum) -> CNum {
    // modulus as one product, arguments summed so the branch stays principal
    let mut w = z;
    let mut modulus = 1.0;
    let mut arg = 0.0;
    while w.norm() < STIRLING_MIN_MODULUS {
        modulus *= w.norm();
        arg += w.arg();
        w += 1.0;
    }
    stirling(w) - CNum::new(modulus.ln(), arg)
}

fn stirling(w: CNum) -> CNum {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = CNum::new(0.0, 0.0);
    let mut pw = inv;
    for j in 1..=STIRLING_TERMS {
        let jj = (2 * j) as f64;
        series += bernoulli_2j(j) / (jj * (jj - 1.0)) * pw;
        pw *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series
}

/// Principal `Log sin(pi z)`, without overflowing for large `|Im z|`.
fn ln_sin_pi(z: CNum) -> CNum {
    let zr = CNum::new(z.re - 2.0 * (0.5 * z.re).round(), z.im);
    if zr.im.abs() < 200.0 {
        return (PI * zr).sin().ln();
    }
    // sin(pi z) ~ (i/2) e^{-i pi z} for Im z >> 0, -(i/2) e^{i pi z} for Im z << 0
    let l = if zr.im > 0.0 {
        CNum::new(0.5f64.ln() + PI * zr.im, 0.5 * PI - PI * zr.re)
    } else {
        CNum::new(0.5f64.ln() - PI * zr.im, -0.5 * PI + PI * zr.re)
    };
    super::cmath::principal_log_wrap(l)
}

/// `Gamma(z)`; the reflection formula covers `Re(z) < 1/2`.
pub fn gamma(z: CNum) -> Result<CNum> {
    check("gamma", z)?;
    let v = if z.re >= 0.5 {
        log_gamma_right(z).exp()
    } else {
        let zr = CNum::new(z.re - 2.0 * (0.5 * z.re).round(), z.im);
        let one_minus = CNum::new(1.0, 0.0) - z;
        PI / ((PI * zr).sin() * log_gamma_right(one_minus).exp())
    };
    finite("gamma", z, v)
}

/// Digamma `psi(z) = Gamma'(z)/Gamma(z)`.
pub fn digamma(z: CNum) -> Result<CNum> {
    check("digamma", z)?;
    let v = if z.re >= 0.5 {
        digamma_right(z)
    } else {
        // psi(z) = psi(1-z) - pi cot(pi z)
        digamma_right(CNum::new(1.0, 0.0) - z) - PI * cot_pi(z)
    };
    finite("digamma", z, v)
}

fn digamma_right(z: CNum) -> CNum {
    let mut w = z;
    let mut shift = CNum::new(0.0, 0.0);
    while w.re <= DIGAMMA_MIN_RE {
        shift += w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = CNum::new(0.0, 0.0);
    let mut pw = inv2;
    for j in 1..=DIGAMMA_TERMS {
        series += bernoulli_2j(j) / (2 * j) as f64 * pw;
        pw *= inv2;
    }
    w.ln() - 0.5 * inv - series - shift
}

fn cot_pi(z: CNum) -> CNum {
    let zr = CNum::new(z.re - (z.re).round(), z.im);
    let i = CNum::new(0.0, 1.0);
    if zr.im >= 0.0 {
        // i (e^{2 i x} + 1) / (e^{2 i x} - 1), |e^{2ix}| <= 1
        let e = (2.0 * PI * i * zr).exp();
        i * (e + 1.0) / (e - 1.0)
    } else {
        let u = (-2.0 * PI * i * zr).exp();
        i * (1.0 + u) / (1.0 - u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER: f64 = 0.5772156649015329;

    fn r(x: f64) -> CNum {
        CNum::new(x, 0.0)
    }

    #[test]
    fn log_gamma_examples() {
        assert!(log_gamma(r(1.0)).unwrap().norm() < 1e-14);
        assert!((log_gamma(r(0.5)).unwrap().re - 0.5723649429247001).abs() < 1e-14);
        assert!((log_gamma(r(3.5)).unwrap().re - 1.200973602347074).abs() < 1e-14);
    }

    #[test]
    fn log_gamma_matches_reference_off_axis() {
        // 30-digit reference values of the principal log-gamma
        let cases = [
            (CNum::new(2.5, 3.0), CNum::new(-1.4709546103488418, 2.8226156382607996)),
            (CNum::new(0.1, -0.2), CNum::new(1.4196225566088014, 1.1894584561916535)),
            (CNum::new(-2.5, 0.0), CNum::new(-0.056243716497674054, -9.42477796076938)),
            (CNum::new(-3.7, 1.3), CNum::new(-4.7854439029143245, -11.305842446777268)),
            (CNum::new(-20.2, -4.0), CNum::new(-53.28515599728851, 52.88543869684829)),
            (CNum::new(30.0, 40.0), CNum::new(49.2328084940703, 143.83479582266483)),
        ];
        for (z, expected) in cases {
            let v = log_gamma(z).unwrap();
            assert!(
                (v - expected).norm() < 1e-12 * expected.norm().max(1.0),
                "lnG({z}) = {v}, expected {expected}"
            );
        }
    }

    #[test]
    fn gamma_uses_reflection_left_of_one_half() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let v = gamma(r(-0.5)).unwrap();
        assert!((v.re + 2.0 * PI.sqrt()).abs() < 1e-14 * 2.0 * PI.sqrt());
        let v = gamma(r(5.0)).unwrap();
        assert!((v.re - 24.0).abs() < 1e-12);
    }

    #[test]
    fn poles() {
        for z in [0.0, -1.0, -7.0] {
            assert!(matches!(log_gamma(r(z)), Err(SpecFunError::Pole { .. })));
            assert!(matches!(gamma(r(z)), Err(SpecFunError::Pole { .. })));
            assert!(matches!(digamma(r(z)), Err(SpecFunError::Pole { .. })));
        }
    }

    #[test]
    fn gamma_overflow_is_an_error() {
        assert!(matches!(gamma(r(200.0)), Err(SpecFunError::Overflow { .. })));
    }

    #[test]
    fn digamma_examples() {
        assert!((digamma(r(1.0)).unwrap().re + EULER).abs() < 1e-15);
        assert!((digamma(r(0.5)).unwrap().re + 1.963510026021423).abs() < 1e-14);
        assert!((digamma(r(2.0)).unwrap().re - 0.4227843350984671).abs() < 1e-15);
    }

    #[test]
    fn digamma_matches_reference_off_axis() {
        let cases = [
            (CNum::new(0.3, 2.0), CNum::new(0.687523593749104, 1.6727302110566287)),
            (CNum::new(-2.4, -0.7), CNum::new(1.1416686648551642, -2.8445880789508466)),
            (CNum::new(40.0, -25.0), CNum::new(3.844750920149561, -0.5642509573284569)),
        ];
        for (z, expected) in cases {
            let v = digamma(z).unwrap();
            assert!((v - expected).norm() < 1e-12, "psi({z}) = {v}, expected {expected}");
        }
    }
}
