//! Tanh-sinh (double-exponential) quadrature on the unit interval.
//!
//! The substitution `x = 1 / (1 + exp(-pi sinh t))` maps the real line onto
//! `(0, 1)` with weights that decay doubly exponentially, so the trapezoid
//! rule in `t` converges quickly even when the integrand has logarithmic or
//! algebraic singularities at either end. Each level halves the step and
//! reuses the previous level's samples.
//!
//! Integrands receive a [`UnitPoint`] carrying both `x` and `1 - x`, each
//! computed from `t` directly. Near `x = 1` the complement keeps full relative
//! precision down to `clip_eps`, which `x` alone cannot.

use crate::specfun::CNum;
use std::cell::Cell;
use std::f64::consts::PI;
use thiserror::Error;

/// Radius around a fill point inside which the supplied limit replaces the
/// integrand.
pub const FILL_RADIUS: f64 = 1e-8;

const MIN_CONVERGED_LEVEL: u32 = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("integrand returned {value} at x = {x:e}")]
    NonFiniteIntegrand { x: f64, value: CNum },
    #[error("invalid quadrature configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid fill point x0 = {0}; must lie in (0, 1]")]
    InvalidFill(f64),
    #[error("invalid breakpoint {0}; must lie strictly inside (0, 1)")]
    InvalidBreakpoint(f64),
}

pub type Result<T> = std::result::Result<T, QuadError>;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadConfig {
    /// Stop once two successive levels differ by at most this much.
    pub abs_tol: f64,
    /// Deepest level; level `L` uses step `2^-L` in `t`.
    pub max_level: u32,
    /// Nodes closer than this to either end of a segment are skipped.
    pub clip_eps: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            max_level: 12,
            clip_eps: 1e-300,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(QuadError::InvalidConfig(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if !(3..=16).contains(&self.max_level) {
            return Err(QuadError::InvalidConfig(format!(
                "max_level must lie in [3, 16], got {}",
                self.max_level
            )));
        }
        if !(self.clip_eps > 0.0 && self.clip_eps < 1e-6) {
            return Err(QuadError::InvalidConfig(format!(
                "clip_eps must lie in (0, 1e-6), got {}",
                self.clip_eps
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: CNum,
    /// `|S_L - S_{L-1}|` at the last level; a heuristic, not a bound.
    pub err_estimate: f64,
    pub levels_used: u32,
    pub evaluations: u64,
    pub converged: bool,
}

/// An abscissa in `(0, 1)` with its complement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitPoint {
    pub x: f64,
    /// `1 - x`, accurate to full relative precision near `x = 1`.
    pub xc: f64,
}

impl UnitPoint {
    pub fn new(x: f64) -> Self {
        Self { x, xc: 1.0 - x }
    }

    /// `ln x` without cancellation near 1.
    pub fn ln_x(&self) -> f64 {
        if self.x < 0.5 {
            self.x.ln()
        } else {
            (-self.xc).ln_1p()
        }
    }
}

/// A removable singularity: `limit` is used within [`FILL_RADIUS`] of `x0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fill {
    pub x0: f64,
    pub limit: CNum,
}

thread_local! {
    static SEGMENTS_INTEGRATED: Cell<u64> = const { Cell::new(0) };
}

/// Number of quadrature segments integrated on the calling thread so far.
///
/// Lets callers check that a code path never reaches the quadrature.
pub fn segments_integrated_on_this_thread() -> u64 {
    SEGMENTS_INTEGRATED.with(|c| c.get())
}

/// `int_0^1 f(x) dx` for a plain function of `x`.
pub fn integrate_unit<F>(f: F, cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(f64) -> CNum,
{
    integrate_split(|p: UnitPoint| f(p.x), &[], &[], cfg)
}

/// `int_0^1 f` with removable singularities replaced by their limits.
pub fn integrate_with_limit_fill<F>(f: F, fills: &[Fill], cfg: &QuadConfig) -> Result<QuadResult>
where
    F: Fn(UnitPoint) -> CNum,
{
    integrate_split(f, &[], fills, cfg)
}

/// As [`integrate_with_limit_fill`], additionally splitting `(0, 1)` at
/// interior points where the integrand has a kink or a branch jump.
pub fn integrate_split<F>(
    f: F,
    breaks: &[f64],
    fills: &[Fill],
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(UnitPoint) -> CNum,
{
    cfg.validate()?;
    for fill in fills {
        if !(fill.x0 > 0.0 && fill.x0 <= 1.0) {
            return Err(QuadError::InvalidFill(fill.x0));
        }
    }
    let mut cuts: Vec<f64> = Vec::with_capacity(breaks.len() + 2);
    cuts.push(0.0);
    for &b in breaks {
        if !(b > 0.0 && b < 1.0) {
            return Err(QuadError::InvalidBreakpoint(b));
        }
        cuts.push(b);
    }
    cuts.push(1.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let pieces = cuts.len() - 1;
    let piece_cfg = QuadConfig {
        abs_tol: cfg.abs_tol / pieces as f64,
        ..*cfg
    };
    let mut total = QuadResult {
        value: CNum::new(0.0, 0.0),
        err_estimate: 0.0,
        levels_used: 0,
        evaluations: 0,
        converged: true,
    };
    for w in cuts.windows(2) {
        let r = integrate_segment(&f, w[0], w[1], fills, &piece_cfg)?;
        total.value += r.value;
        total.err_estimate += r.err_estimate;
        total.levels_used = total.levels_used.max(r.levels_used);
        total.evaluations += r.evaluations;
        total.converged &= r.converged;
    }
    if total.converged && total.err_estimate > cfg.abs_tol {
        total.converged = false;
    }
    Ok(total)
}

struct Node {
    point: UnitPoint,
    weight: f64,
}

/// Node at `t` on `[lo, hi]`, or `None` if it falls within `clip_eps` of an
/// end.
fn node(t: f64, lo: f64, hi: f64, clip_eps: f64) -> Option<Node> {
    let width = hi - lo;
    let u = PI * t.sinh();
    // sigma = 1/(1+e^-u), its complement 1/(1+e^u)
    let (sigma, sigma_c) = if u >= 0.0 {
        let e = (-u).exp();
        (1.0 / (1.0 + e), e / (1.0 + e))
    } else {
        let e = u.exp();
        (e / (1.0 + e), 1.0 / (1.0 + e))
    };
    let from_lo = width * sigma;
    let from_hi = width * sigma_c;
    if from_lo < clip_eps || from_hi < clip_eps {
        return None;
    }
    let weight = width * sigma * sigma_c * PI * t.cosh();
    if weight == 0.0 {
        return None;
    }
    let point = if sigma < 0.5 {
        let x = lo + from_lo;
        UnitPoint { x, xc: 1.0 - x }
    } else if hi == 1.0 {
        UnitPoint {
            x: 1.0 - from_hi,
            xc: from_hi,
        }
    } else {
        let x = hi - from_hi;
        UnitPoint { x, xc: 1.0 - x }
    };
    Some(Node { point, weight })
}

fn sample<F>(f: &F, p: UnitPoint, fills: &[Fill]) -> Result<CNum>
where
    F: Fn(UnitPoint) -> CNum,
{
    for fill in fills {
        let dist = if fill.x0 == 1.0 {
            p.xc
        } else {
            (p.x - fill.x0).abs()
        };
        if dist <= FILL_RADIUS {
            return Ok(fill.limit);
        }
    }
    let v = f(p);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(QuadError::NonFiniteIntegrand { x: p.x, value: v })
    }
}

fn integrate_segment<F>(
    f: &F,
    lo: f64,
    hi: f64,
    fills: &[Fill],
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(UnitPoint) -> CNum,
{
    SEGMENTS_INTEGRATED.with(|c| c.set(c.get() + 1));
    // beyond t_max every node is clipped
    let reach = (-(cfg.clip_eps / (hi - lo)).ln()).max(1.0) + 1.0;
    let t_max = (reach / PI).asinh() + 0.1;

    let mut evaluations = 0u64;
    let mut level_sum = |level: u32| -> Result<CNum> {
        let h = (-(level as f64)).exp2();
        let (start, stride) = if level == 0 { (0i64, 1i64) } else { (1, 2) };
        let j_max = (t_max / h).floor() as i64;
        let mut acc = CNum::new(0.0, 0.0);
        let mut j = start;
        while j <= j_max {
            let t = j as f64 * h;
            let signs: &[f64] = if j == 0 { &[1.0] } else { &[1.0, -1.0] };
            for &sg in signs {
                if let Some(nd) = node(sg * t, lo, hi, cfg.clip_eps) {
                    acc += nd.weight * sample(f, nd.point, fills)?;
                    evaluations += 1;
                }
            }
            j += stride;
        }
        Ok(acc * h)
    };

    let mut estimate = level_sum(0)?;
    let mut err = f64::INFINITY;
    let mut level = 0;
    let mut converged = false;
    while level < cfg.max_level {
        level += 1;
        let fresh = level_sum(level)?;
        let next = 0.5 * estimate + fresh;
        err = (next - estimate).norm();
        estimate = next;
        if level >= MIN_CONVERGED_LEVEL && err <= cfg.abs_tol {
            converged = true;
            break;
        }
    }
    Ok(QuadResult {
        value: estimate,
        err_estimate: err,
        levels_used: level + 1,
        evaluations,
        converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::LN_2;

    fn c(x: f64) -> CNum {
        CNum::new(x, 0.0)
    }

    #[test]
    fn log_squared() {
        let r = integrate_unit(|x| c(x.ln().powi(2)), &QuadConfig::default()).unwrap();
        assert!(r.converged);
        assert!((r.value.re - 2.0).abs() < 1e-12, "{:?}", r);
        assert!(r.err_estimate <= 1e-10);
        assert!(r.evaluations > 0 && r.levels_used >= 1);
    }

    #[test]
    fn inverse_square_root() {
        let r = integrate_unit(|x| c(x.powf(-0.5)), &QuadConfig::default()).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-12, "{:?}", r);
    }

    #[test]
    fn log_one_minus_x_squared_over_x() {
        let r = integrate_with_limit_fill(
            |p: UnitPoint| c((p.xc * (1.0 + p.x)).ln() / p.x),
            &[],
            &QuadConfig::default(),
        )
        .unwrap();
        let expected = -PI * PI / 12.0;
        assert!((r.value.re - expected).abs() < 1e-12, "{:?}", r);
    }

    #[test]
    fn removable_singularity_fills() {
        let cfg = QuadConfig::default();
        let r = integrate_with_limit_fill(
            |p: UnitPoint| c(-p.xc / p.ln_x()),
            &[Fill { x0: 1.0, limit: c(1.0) }],
            &cfg,
        )
        .unwrap();
        assert!((r.value.re - LN_2).abs() < 1e-12, "{:?}", r);

        let r = integrate_with_limit_fill(
            |p: UnitPoint| c((p.x * p.x - p.x) / p.ln_x()),
            &[Fill { x0: 1.0, limit: c(1.0) }],
            &cfg,
        )
        .unwrap();
        assert!((r.value.re - 1.5f64.ln()).abs() < 1e-12, "{:?}", r);

        let r = integrate_with_limit_fill(|_| c(1.0), &[], &cfg).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn split_handles_interior_kink() {
        let r = integrate_split(
            |p: UnitPoint| c((p.x - 0.3).abs().sqrt()),
            &[0.3],
            &[],
            &QuadConfig::default(),
        )
        .unwrap();
        let expected = (2.0 / 3.0) * (0.3f64.powf(1.5) + 0.7f64.powf(1.5));
        assert!((r.value.re - expected).abs() < 1e-12, "{:?}", r);
    }

    #[test]
    fn non_finite_integrand_is_an_error() {
        let e = integrate_unit(|x| c(if x > 0.4 && x < 0.6 { f64::NAN } else { 1.0 }), &QuadConfig::default());
        assert!(matches!(e, Err(QuadError::NonFiniteIntegrand { .. })));
    }

    #[test]
    fn non_convergence_is_reported_not_raised() {
        let cfg = QuadConfig {
            abs_tol: 1e-300,
            max_level: 4,
            ..QuadConfig::default()
        };
        let r = integrate_unit(|x| c(x.sin()), &cfg).unwrap();
        assert!(!r.converged);
        assert_eq!(r.levels_used, 5);
        assert!((r.value.re - (1.0 - 1f64.cos())).abs() < 1e-12);
    }

    #[test]
    fn config_validation() {
        let bad = [
            QuadConfig { abs_tol: 0.0, ..QuadConfig::default() },
            QuadConfig { max_level: 2, ..QuadConfig::default() },
            QuadConfig { max_level: 17, ..QuadConfig::default() },
            QuadConfig { clip_eps: 0.0, ..QuadConfig::default() },
        ];
        for cfg in bad {
            assert!(matches!(
                integrate_unit(|_| c(1.0), &cfg),
                Err(QuadError::InvalidConfig(_))
            ));
        }
        let e = integrate_with_limit_fill(|_| c(1.0), &[Fill { x0: 0.0, limit: c(0.0) }], &QuadConfig::default());
        assert!(matches!(e, Err(QuadError::InvalidFill(_))));
        let e = integrate_split(|_| c(1.0), &[1.0], &[], &QuadConfig::default());
        assert!(matches!(e, Err(QuadError::InvalidBreakpoint(_))));
    }

    #[test]
    fn counts_segments() {
        let before = segments_integrated_on_this_thread();
        integrate_split(|_| c(1.0), &[0.25, 0.5], &[], &QuadConfig::default()).unwrap();
        assert_eq!(segments_integrated_on_this_thread() - before, 3);
    }
}
