//! Hurwitz zeta function and its `s`-derivative by Euler–Maclaurin summation.
//!
//! ```text
//! zeta(s, q) = sum_{n<N} (q+n)^-s + (q+N)^(1-s)/(s-1) + (q+N)^-s / 2
//!            + sum_{j=1}^{M} B_2j/(2j)! (s)_(2j-1) (q+N)^(-s-2j+1)
//! ```
//!
//! For `Re(s) >= 1/2` the terms decrease and the sum runs in ordinary double
//! precision with the configured `N` and `M`. For `Re(s) < 1/2` the direct
//! sum and the leading tail term grow like `N^(1-Re s)` and cancel almost
//! completely; that side is evaluated in double-double arithmetic with the
//! smallest shift whose Bernoulli tail converges.

use super::bernoulli::bernoulli_2j;
use super::dd::{CDd, Dd, BERNOULLI_OVER_FACTORIAL};
use super::{finite, CNum, Result, SpecFunConfig, SpecFunError};

const SHIFT_SCHEDULE: [usize; 16] = [1, 2, 3, 4, 6, 8, 10, 12, 16, 20, 24, 32, 48, 64, 96, 128];
const DD_TAIL_REL_TOL: f64 = 1e-28;

fn check_args(s: CNum, q: CNum, cfg: &SpecFunConfig) -> Result<()> {
    cfg.validate()?;
    if !(s.re.is_finite() && s.im.is_finite() && q.re.is_finite() && q.im.is_finite()) {
        return Err(SpecFunError::Domain {
            function: "hurwitz_zeta",
            message: format!("non-finite argument s={s}, q={q}"),
        });
    }
    if s.re == 1.0 && s.im == 0.0 {
        return Err(SpecFunError::Pole {
            function: "hurwitz_zeta",
            at: s,
        });
    }
    if q.re <= 0.0 {
        return Err(SpecFunError::Domain {
            function: "hurwitz_zeta",
            message: format!("Re(q) must be positive, got q={q}"),
        });
    }
    Ok(())
}

/// `zeta(s, q)` for complex `s != 1` and `Re(q) > 0`.
pub fn hurwitz_zeta(s: CNum, q: CNum, cfg: &SpecFunConfig) -> Result<CNum> {
    check_args(s, q, cfg)?;
    let v = if s.re >= 0.5 {
        em_f64(s, q, cfg, false)?
    } else {
        em_dd(s, q, false)?
    };
    finite("hurwitz_zeta", s, v)
}

/// `d/ds zeta(s, q)`, by differentiating every Euler–Maclaurin term.
pub fn hurwitz_zeta_ds(s: CNum, q: CNum, cfg: &SpecFunConfig) -> Result<CNum> {
    check_args(s, q, cfg)?;
    let v = if s.re >= 0.5 {
        em_f64(s, q, cfg, true)?
    } else {
        em_dd(s, q, true)?
    };
    finite("zeta_derivative", s, v)
}

/// Riemann zeta, `zeta(s) = zeta(s, 1)`.
pub fn riemann_zeta(s: CNum, cfg: &SpecFunConfig) -> Result<CNum> {
    hurwitz_zeta(s, CNum::new(1.0, 0.0), cfg)
}

/// `zeta'(s)`.
pub fn zeta_derivative(s: CNum, cfg: &SpecFunConfig) -> Result<CNum> {
    hurwitz_zeta_ds(s, CNum::new(1.0, 0.0), cfg)
}

/// Neumaier-compensated complex accumulator.
#[derive(Default)]
struct Acc {
    sum: CNum,
    comp: CNum,
}

impl Acc {
    fn add(&mut self, x: CNum) {
        fn step(sum: &mut f64, comp: &mut f64, x: f64) {
            let t = *sum + x;
            if sum.abs() >= x.abs() {
                *comp += (*sum - t) + x;
            } else {
                *comp += (x - t) + *sum;
            }
            *sum = t;
        }
        step(&mut self.sum.re, &mut self.comp.re, x.re);
        step(&mut self.sum.im, &mut self.comp.im, x.im);
    }

    fn value(&self) -> CNum {
        self.sum + self.comp
    }
}

fn em_f64(s: CNum, q: CNum, cfg: &SpecFunConfig, deriv: bool) -> Result<CNum> {
    let n_shift = cfg.em_shift_terms;
    let mut acc = Acc::default();
    let mut mag: f64 = 0.0;
    for n in 0..n_shift {
        let z = q + n as f64;
        let l = z.ln();
        let mut t = (-s * l).exp();
        if deriv {
            t = -l * t;
        }
        mag = mag.max(t.norm());
        acc.add(t);
    }

    let a = q + n_shift as f64;
    let la = a.ln();
    let a_ms = (-s * la).exp();
    let lead = a * a_ms / (s - 1.0);
    let half = 0.5 * a_ms;
    if deriv {
        acc.add(-la * lead - lead / (s - 1.0));
        acc.add(-la * half);
    } else {
        acc.add(lead);
        acc.add(half);
    }
    mag = mag.max(lead.norm()).max(half.norm()).max(1.0);

    // term_j = B_2j/(2j)! * P_j * a^(-s-2j+1), P_j = s (s+1) ... (s+2j-2)
    let a2 = a * a;
    let mut poch = s;
    let mut dpoch = CNum::new(1.0, 0.0);
    let mut pw = a_ms / a;
    let mut fact = 2.0;
    let mut prev = f64::INFINITY;
    let mut last = f64::INFINITY;
    for j in 1..=cfg.em_bernoulli_terms {
        let c = bernoulli_2j(j) / fact;
        let term = if deriv {
            c * (dpoch - poch * la) * pw
        } else {
            c * poch * pw
        };
        let size = term.norm();
        if size > prev {
            if prev <= cfg.target_abs_tol * mag {
                return Ok(acc.value());
            }
            return Err(SpecFunError::Convergence {
                function: "hurwitz_zeta",
                message: format!(
                    "Bernoulli tail started growing at j={j} (|term|={size:e}) for s={s}, q={q}"
                ),
            });
        }
        acc.add(term);
        last = size;
        if size <= 1e-17 * mag {
            return Ok(acc.value());
        }
        prev = size;
        let jf = j as f64;
        let f1 = s + (2.0 * jf - 1.0);
        let f2 = s + 2.0 * jf;
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch = poch * f1 * f2;
        pw /= a2;
        fact *= (2.0 * jf + 1.0) * (2.0 * jf + 2.0);
    }
    if last <= cfg.target_abs_tol * mag {
        Ok(acc.value())
    } else {
        Err(SpecFunError::Convergence {
            function: "hurwitz_zeta",
            message: format!(
                "Bernoulli tail still at {last:e} after {} terms for s={s}, q={q}",
                cfg.em_bernoulli_terms
            ),
        })
    }
}

fn em_dd(s: CNum, q: CNum, deriv: bool) -> Result<CNum> {
    let sd = CDd::from_c64(s);
    let qd = CDd::from_c64(q);
    let one = CDd::from_real(Dd::ONE);
    let s_minus_1 = sd - one;
    for &n_shift in SHIFT_SCHEDULE.iter() {
        if let Some(v) = em_dd_with_shift(sd, qd, s_minus_1, n_shift, deriv) {
            return Ok(v.to_c64());
        }
    }
    Err(SpecFunError::Convergence {
        function: "hurwitz_zeta",
        message: format!("no shift up to {} gave a convergent tail for s={s}, q={q}", SHIFT_SCHEDULE[SHIFT_SCHEDULE.len() - 1]),
    })
}

fn em_dd_with_shift(s: CDd, q: CDd, s_minus_1: CDd, n_shift: usize, deriv: bool) -> Option<CDd> {
    let mut total = CDd::ZERO;
    let mut mag: f64 = 0.0;
    for n in 0..n_shift {
        let l = q.add_f64(n as f64).ln();
        let mut t = (-(s * l)).exp();
        if deriv {
            t = -(l * t);
        }
        mag = mag.max(t.norm_f64());
        total = total + t;
    }

    let a = q.add_f64(n_shift as f64);
    let la = a.ln();
    let a_ms = (-(s * la)).exp();
    let lead = a * a_ms / s_minus_1;
    let half = a_ms.scale(Dd::from_f64(0.5));
    mag = mag.max(lead.norm_f64()).max(half.norm_f64());
    total = total
        + if deriv {
            -(la * lead) - lead / s_minus_1 - la * half
        } else {
            lead + half
        };

    let a2 = a * a;
    let mut poch = s;
    let mut dpoch = CDd::from_real(Dd::ONE);
    let mut pw = a_ms / a;
    let mut prev = f64::INFINITY;
    for (j, c) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = if deriv {
            (dpoch - poch * la) * pw
        } else {
            poch * pw
        }
        .scale(*c);
        let size = term.norm_f64();
        if size > prev {
            return None;
        }
        total = total + term;
        if size <= DD_TAIL_REL_TOL * mag {
            return Some(total);
        }
        prev = size;
        let jf = (j + 1) as f64;
        let f1 = s.add_f64(2.0 * jf - 1.0);
        let f2 = s.add_f64(2.0 * jf);
        let f12 = f1 * f2;
        dpoch = dpoch * f12 + poch * (f1 + f2);
        poch = poch * f12;
        pw = pw / a2;
    }
    None
}
