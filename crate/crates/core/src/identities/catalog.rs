use super::{closed_forms as cf, integrands as ig};
use super::{Identity, Param, ParamPoint, Reading, StatusHint};
use crate::quad::Fill;
use crate::specfun::{real, CNum};
use std::f64::consts::PI;

type Domain = Result<(), String>;

const SMOOTH_TOL: f64 = 1e-8;
/// Rows with `log(log x)` or `1/sqrt(log x)` factors converge more slowly.
const SLOW_TOL: f64 = 1e-6;

fn finite(pp: &ParamPoint) -> Domain {
    for p in Param::ALL {
        let v = pp.get(p);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(format!("{p} must be finite"));
        }
    }
    Ok(())
}

fn positive(pp: &ParamPoint, p: Param) -> Domain {
    if pp.get(p).re > 0.0 {
        Ok(())
    } else {
        Err(format!("{p} must have positive real part"))
    }
}

fn nonnegative_p(pp: &ParamPoint) -> Domain {
    if pp.p.re >= 0.0 {
        Ok(())
    } else {
        Err("p must have nonnegative real part".to_string())
    }
}

fn k_above_minus_one(pp: &ParamPoint) -> Domain {
    if pp.k == real(-1.0) {
        Err("Gamma pole at k+1=0".to_string())
    } else if pp.k.re <= -1.0 {
        Err("k must have real part greater than -1".to_string())
    } else {
        Ok(())
    }
}

fn log_a(pp: &ParamPoint) -> Domain {
    let a = pp.a;
    if a.norm() == 0.0 || (a.im == 0.0 && a.re < 0.0) {
        Err("a must be nonzero and off the negative real axis".to_string())
    } else {
        Ok(())
    }
}

fn hurwitz_plus(pp: &ParamPoint, m: CNum) -> Domain {
    let q = (PI - CNum::i() * m * pp.a.ln()) / (2.0 * PI);
    if q.re > 0.0 {
        Ok(())
    } else {
        Err(format!("Hurwitz parameter (pi - i m log a)/(2 pi) = {q} needs positive real part"))
    }
}

fn hurwitz_minus(pp: &ParamPoint, n: CNum) -> Domain {
    let q = 1.0 - CNum::i() * n * pp.a.ln() / (2.0 * PI);
    if q.re > 0.0 {
        Ok(())
    } else {
        Err(format!("Hurwitz parameter 1 - i n log a/(2 pi) = {q} needs positive real part"))
    }
}

fn unit_circle(pp: &ParamPoint) -> Domain {
    let theta = pp.a.arg();
    if (pp.a.norm() - 1.0).abs() <= 1e-12 && theta > 0.0 {
        Ok(())
    } else {
        Err("a must lie on the unit circle, a = e^(i theta) with 0 < theta <= pi".to_string())
    }
}

fn d_4a(pp: &ParamPoint) -> Domain {
    finite(pp)?;
    log_a(pp)?;
    k_above_minus_one(pp)?;
    positive(pp, Param::M)?;
    hurwitz_plus(pp, pp.m)
}

fn d_4b(pp: &ParamPoint) -> Domain {
    finite(pp)?;
    log_a(pp)?;
    k_above_minus_one(pp)?;
    positive(pp, Param::N)?;
    hurwitz_minus(pp, pp.n)
}

fn d_5a(pp: &ParamPoint) -> Domain {
    d_4a(pp)?;
    hurwitz_minus(pp, pp.m)
}

fn d_5b(pp: &ParamPoint) -> Domain {
    d_4a(pp)?;
    d_4b(pp)
}

fn d_6a(pp: &ParamPoint) -> Domain {
    finite(pp)?;
    k_above_minus_one(pp)
}

fn d_6b(pp: &ParamPoint) -> Domain {
    d_6a(pp)?;
    positive(pp, Param::M)?;
    positive(pp, Param::N)
}

fn d_circle_m(pp: &ParamPoint) -> Domain {
    finite(pp)?;
    unit_circle(pp)?;
    positive(pp, Param::M)
}

fn d_circle_mn(pp: &ParamPoint) -> Domain {
    d_circle_m(pp)?;
    positive(pp, Param::N)
}

fn d_fixed(_: &ParamPoint) -> Domain {
    Ok(())
}

fn d_dd1(pp: &ParamPoint) -> Domain {
    d_6a(pp)?;
    positive(pp, Param::M)?;
    nonnegative_p(pp)
}

fn d_dd2(pp: &ParamPoint) -> Domain {
    d_6a(pp)?;
    positive(pp, Param::N)?;
    nonnegative_p(pp)
}

fn d_e13(pp: &ParamPoint) -> Domain {
    finite(pp)?;
    positive(pp, Param::M)?;
    nonnegative_p(pp)
}

fn d_e14(pp: &ParamPoint) -> Domain {
    finite(pp)?;
    positive(pp, Param::N)?;
    nonnegative_p(pp)
}

fn no_fills(_: &ParamPoint) -> Vec<Fill> {
    Vec::new()
}

fn no_breaks(_: &ParamPoint) -> Vec<f64> {
    Vec::new()
}

/// For real positive `a != 1` one of `log(a x)`, `log(a/x)` changes sign
/// inside the interval, where `log^k` jumps branch.
fn a_breaks(pp: &ParamPoint) -> Vec<f64> {
    let a = pp.a;
    if a.im == 0.0 && a.re > 0.0 && a.re != 1.0 {
        vec![a.re.min(1.0 / a.re)]
    } else {
        Vec::new()
    }
}

fn e13_fills(pp: &ParamPoint) -> Vec<Fill> {
    vec![Fill {
        x0: 1.0,
        limit: (pp.m - pp.p) / 4.0,
    }]
}

fn e14_fills(_: &ParamPoint) -> Vec<Fill> {
    vec![Fill {
        x0: 1.0,
        limit: real(0.0),
    }]
}

const K_GRID: [f64; 3] = [0.5, 1.0, 2.0];
const MN_GRID: [f64; 2] = [1.0, 2.0];
const P_GRID: [f64; 2] = [0.0, 1.0];
const THETA_GRID: [f64; 3] = [0.5, 1.0, 2.0];

fn a_grid() -> [CNum; 2] {
    [real(2.0), CNum::new(1.0, 0.5)]
}

fn circle_grid() -> Vec<CNum> {
    THETA_GRID.iter().map(|&t| CNum::from_polar(1.0, t)).collect()
}

/// Cartesian product over `axes`, the first axis varying slowest.
fn product(axes: &[(Param, Vec<CNum>)]) -> Vec<ParamPoint> {
    let mut points = vec![ParamPoint::default()];
    for (param, values) in axes {
        points = points
            .iter()
            .flat_map(|pp| values.iter().map(move |&v| pp.with(*param, v)))
            .collect();
    }
    points
}

fn reals(xs: &[f64]) -> Vec<CNum> {
    xs.iter().map(|&x| real(x)).collect()
}

fn g_4a() -> Vec<ParamPoint> {
    product(&[
        (Param::A, a_grid().to_vec()),
        (Param::K, reals(&K_GRID)),
        (Param::M, reals(&MN_GRID)),
    ])
}

fn g_4b() -> Vec<ParamPoint> {
    product(&[
        (Param::A, a_grid().to_vec()),
        (Param::K, reals(&K_GRID)),
        (Param::N, reals(&MN_GRID)),
    ])
}

fn g_5b() -> Vec<ParamPoint> {
    product(&[
        (Param::A, a_grid().to_vec()),
        (Param::K, reals(&K_GRID)),
        (Param::M, reals(&MN_GRID)),
        (Param::N, reals(&MN_GRID)),
    ])
}

fn g_6a() -> Vec<ParamPoint> {
    product(&[(Param::K, reals(&K_GRID))])
}

fn g_6b() -> Vec<ParamPoint> {
    product(&[
        (Param::K, reals(&K_GRID)),
        (Param::M, reals(&MN_GRID)),
        (Param::N, reals(&MN_GRID)),
    ])
}

fn g_circle_m() -> Vec<ParamPoint> {
    product(&[(Param::A, circle_grid()), (Param::M, reals(&MN_GRID))])
}

fn g_circle_mn() -> Vec<ParamPoint> {
    product(&[
        (Param::A, circle_grid()),
        (Param::M, reals(&MN_GRID)),
        (Param::N, reals(&MN_GRID)),
    ])
}

fn g_dd1() -> Vec<ParamPoint> {
    product(&[
        (Param::K, reals(&K_GRID)),
        (Param::M, reals(&MN_GRID)),
        (Param::P, reals(&P_GRID)),
    ])
}

fn g_dd2() -> Vec<ParamPoint> {
    product(&[
        (Param::K, reals(&K_GRID)),
        (Param::N, reals(&MN_GRID)),
        (Param::P, reals(&P_GRID)),
    ])
}

fn g_e13() -> Vec<ParamPoint> {
    product(&[(Param::M, reals(&MN_GRID)), (Param::P, reals(&P_GRID))])
}

fn g_e14() -> Vec<ParamPoint> {
    product(&[(Param::N, reals(&MN_GRID)), (Param::P, reals(&P_GRID))])
}

/// Bindings the fixed examples were derived with; informational only.
fn bound(k: f64, a: CNum, m: f64, n: f64) -> Vec<ParamPoint> {
    vec![ParamPoint {
        a,
        k: real(k),
        m: real(m),
        n: real(n),
        p: real(0.0),
    }]
}

fn g_e1() -> Vec<ParamPoint> {
    bound(-3.0, CNum::new(0.0, -1.0), 1.0, 1.0)
}
fn g_e2() -> Vec<ParamPoint> {
    bound(0.0, real(1.0), 1.0, 1.0)
}
fn g_e3() -> Vec<ParamPoint> {
    bound(0.5, real(1.0), 1.0, 1.0)
}
fn g_e4() -> Vec<ParamPoint> {
    bound(-0.5, real(1.0), 1.0, 1.0)
}
fn g_e5() -> Vec<ParamPoint> {
    bound(1.0, real(1.0), 1.0, 1.0)
}
fn g_e6() -> Vec<ParamPoint> {
    bound(2.0, real(1.0), 1.0, 1.0)
}
fn g_e7() -> Vec<ParamPoint> {
    bound(0.0, real(-1.0), 2.0, 1.0)
}
fn g_e8() -> Vec<ParamPoint> {
    bound(0.0, real(1.0), 1.0, 1.0)
}
fn g_e9() -> Vec<ParamPoint> {
    bound(0.5, real(1.0), 1.0, 1.0)
}
fn g_e10() -> Vec<ParamPoint> {
    bound(-0.5, real(1.0), 1.0, 1.0)
}
fn g_e11() -> Vec<ParamPoint> {
    bound(1.0, real(1.0), 1.0, 1.0)
}
fn g_e12() -> Vec<ParamPoint> {
    bound(-0.5, real(1.0), 1.0, 1.0)
}

const fn only(label: &'static str, eval: super::ClosedForm) -> Reading {
    Reading { label, eval }
}

macro_rules! fixed_example {
    ($id:literal, $desc:literal, $anchor:literal, $f:literal, $cf:literal, $tol:expr, $lhs:path, $rhs:path, $grid:path) => {
        Identity {
            id: $id,
            description: $desc,
            uses: &[],
            status_hint: StatusHint::ExpectedConfirmed,
            anchor: $anchor,
            integrand_text: $f,
            closed_form_text: $cf,
            default_tol: $tol,
            readings: &[only("printed", $rhs)],
            domain: d_fixed,
            integrand: $lhs,
            fills: no_fills,
            breaks: no_breaks,
            grid: $grid,
        }
    };
}

static REGISTRY: &[Identity] = &[
    Identity {
        id: "I_4A",
        description: "log(x^m+1) against shifted log powers, Hurwitz zeta form",
        uses: &[Param::A, Param::K, Param::M],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Eq. (4a), equate the left-hand sides simplifying the factorials",
        integrand_text: "log(x^m+1) (log^k(a/x) + log^k(a x)) / x",
        closed_form_text: "-m log^(k+2)(a)/((k+1)(k+2)) - i (2 pi)^(k+2) (i/m)^(k+1) zeta(-k-1, (pi - i m log a)/(2 pi))/(k+1)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::i4a)],
        domain: d_4a,
        integrand: ig::i4a,
        fills: no_fills,
        breaks: a_breaks,
        grid: g_4a,
    },
    Identity {
        id: "I_4B",
        description: "log(1-x^n) against shifted log powers, Hurwitz zeta form",
        uses: &[Param::A, Param::K, Param::N],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Eq. (4b)",
        integrand_text: "log(1-x^n) (log^k(a/x) + log^k(a x)) / x",
        closed_form_text: "-i (2 pi)^(k+2) (i/n)^(k+1) zeta(-k-1, 1 - i n log(a)/(2 pi))/(k+1) - n log^(k+2)(a)/((k+1)(k+2)) - i pi log^(k+1)(a)/(k+1)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::i4b)],
        domain: d_4b,
        integrand: ig::i4b,
        fills: no_fills,
        breaks: a_breaks,
        grid: g_4b,
    },
    Identity {
        id: "I_5A",
        description: "atanh(x^m) against shifted log powers; two bracket readings",
        uses: &[Param::A, Param::K, Param::M],
        status_hint: StatusHint::SuspectedTypo,
        anchor: "Eq. (5a), taking their difference simplifying",
        integrand_text: "atanh(x^m) (log^k(a/x) + log^k(a x)) / x",
        closed_form_text: "(2 pi)^(k+2) (i/m)^k / (2 (k+1) m) (zeta(-k-1, (pi - i m log a)/(2 pi)) - zeta(-k-1, 1 - i m log(a)/(2 pi))) + i pi m log^(k+1)(a)",
        default_tol: SMOOTH_TOL,
        readings: &[
            only("term_outside_bracket", cf::i5a_outside),
            only("term_inside_bracket", cf::i5a_inside),
        ],
        domain: d_5a,
        integrand: ig::i5a,
        fills: no_fills,
        breaks: a_breaks,
        grid: g_4a,
    },
    Identity {
        id: "I_5B",
        description: "log((x^m+1)(1-x^n)) against shifted log powers",
        uses: &[Param::A, Param::K, Param::M, Param::N],
        status_hint: StatusHint::SuspectedTypo,
        anchor: "Eq. (5b), adding them, then simplifying",
        integrand_text: "(log^k(a/x) + log^k(a x)) log((x^m+1)(1-x^n)) / x",
        closed_form_text: "4 pi^2/((k+1)(k+2) m n) ((2 pi)^k k + 2^(k+1) pi^k) (n (i/m)^k zeta(-k-1, (pi - i m log a)/(2 pi)) + m (i/n)^k zeta(-k-1, 1 - i n log(a)/(2 pi))) - m n log^(k+1)(a) (log(a) (m+n) + i pi (k+2))",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::i5b)],
        domain: d_5b,
        integrand: ig::i5b,
        fills: no_fills,
        breaks: a_breaks,
        grid: g_5b,
    },
    Identity {
        id: "I_6A",
        description: "atanh(x) log^k(x) / x, zeta-gamma form",
        uses: &[Param::K],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Eq. (6a), setting a=1 simplifying we get",
        integrand_text: "atanh(x) log^k(x) / x",
        closed_form_text: "2^(-k-2) (2^(k+2) - 1) e^(i pi k) zeta(k+2) Gamma(k+1)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::i6a)],
        domain: d_6a,
        integrand: ig::i6a,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_6a,
    },
    Identity {
        id: "I_6B",
        description: "log^k(x) log((x^m+1)(1-x^n)) / x, zeta-gamma form",
        uses: &[Param::K, Param::M, Param::N],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Eq. (6b)",
        integrand_text: "log^k(x) log((x^m+1)(1-x^n)) / x",
        closed_form_text: "(1/2) e^(i pi k) zeta(k+2) Gamma(k+1) ((2 - 2^(-k)) m^(-k-1) - 2 n^(-k-1))",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::i6b)],
        domain: d_6b,
        integrand: ig::i6b,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_6b,
    },
    Identity {
        id: "I_LG_ATANH",
        description: "atanh(x^m) / (x (t^2 + log^2 x)), log-gamma form; a = e^(i t)",
        uses: &[Param::A, Param::M],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "log-gamma limit, as k -> -1 respectively (first equation)",
        integrand_text: "atanh(x^m) / (x (t^2 + log^2 x)),  t = arg a",
        closed_form_text: "pi/(4 t) log(t m Gamma(t m/(2 pi))^2 / (2 pi Gamma((t m + pi)/(2 pi))^2))",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::lg_atanh)],
        domain: d_circle_m,
        integrand: ig::lg_atanh,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_circle_m,
    },
    Identity {
        id: "I_LG_LOG",
        description: "log((x^m+1)(1-x^n)) / (x (t^2 + log^2 x)), log-gamma form; a = e^(i t)",
        uses: &[Param::A, Param::M, Param::N],
        status_hint: StatusHint::SuspectedTypo,
        anchor: "log-gamma limit, as k -> -1 respectively (second equation)",
        integrand_text: "log((x^m+1)(1-x^n)) / (x (t^2 + log^2 x)),  t = arg a",
        closed_form_text: "(1/(2 t)) (-2 pi log(Gamma((t m + pi)/(2 pi)) Gamma(t n/(2 pi) + 1)) - t m + t m log(i t) - t m log(2 i pi/m) - t n + t n log(i t) - t n log(2 i pi/n) + pi log(i pi t) - pi log(i/(2 n)))",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::lg_log)],
        domain: d_circle_mn,
        integrand: ig::lg_log,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_circle_mn,
    },
    Identity {
        id: "I_DG_ATANH",
        description: "(t^2 - log^2 x) atanh(x^m) / (x (t^2 + log^2 x)^2), digamma form; a = e^(i t)",
        uses: &[Param::A, Param::M],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "digamma limit, as k -> -2 respectively, simplifying (first equation)",
        integrand_text: "(t^2 - log^2 x) atanh(x^m) / (x (t^2 + log^2 x)^2),  t = arg a",
        closed_form_text: "(1/4) (-m psi(t m/(2 pi) + 1) + m psi((t m + pi)/(2 pi)) + pi/t)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::dg_atanh)],
        domain: d_circle_m,
        integrand: ig::dg_atanh,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_circle_m,
    },
    Identity {
        id: "I_DG_LOG",
        description: "(t^2 - log^2 x) log((-x^m-1)(x^n-1)) / (x (t^2 + log^2 x)^2), digamma form; a = e^(i t)",
        uses: &[Param::A, Param::M, Param::N],
        status_hint: StatusHint::SuspectedTypo,
        anchor: "digamma limit, as k -> -2 respectively, simplifying (second equation)",
        integrand_text: "(t^2 - log^2 x) log((-x^m-1)(x^n-1)) / (x (t^2 + log^2 x)^2),  t = arg a",
        closed_form_text: "(1/(2 t)) (-t m log(i t) + t m log(i/m) + t m log(2 pi) + t m psi((t m + pi)/(2 pi)) - t n log(i t) + t n log(i/n) + t n log(2 pi) + t n psi(t n/(2 pi) + 1) - pi)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::dg_log)],
        domain: d_circle_mn,
        integrand: ig::dg_log,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_circle_mn,
    },
    fixed_example!("E1", "Catalan constant", "Example 1, setting k=-3,m=1",
        "(pi^3 - 12 pi log^2 x) atanh(x) / (x (4 log^2 x + pi^2)^3)", "(2C - 1)/(16 pi)",
        SMOOTH_TOL, ig::e1, cf::e1, g_e1),
    fixed_example!("E2", "Glaisher constant, log(log x) factor", "Example 2",
        "log(log x) atanh(x) / x", "(pi^2/24) (log(16 pi^3 / A^36) + 3 i pi)",
        SLOW_TOL, ig::e2, cf::e2, g_e2),
    fixed_example!("E3", "zeta(5/2), sqrt(log x) factor", "Example 3, setting k=1/2",
        "sqrt(log x) atanh(x) / x", "-(i/16) (sqrt 2 - 8) sqrt(pi) zeta(5/2)",
        SMOOTH_TOL, ig::e3, cf::e3, g_e3),
    fixed_example!("E4", "zeta(3/2), 1/sqrt(log x) factor", "Example 4, setting k=-1/2",
        "atanh(x) / (x sqrt(log x))", "(i/4) (sqrt 2 - 4) sqrt(pi) zeta(3/2)",
        SLOW_TOL, ig::e4, cf::e4, g_e4),
    fixed_example!("E5", "zeta'(3), log(x) log(log x) factor", "Example 5",
        "log(x) log(log x) atanh(x) / x", "(1/8) (-7 zeta'(3) + zeta(3) (-7 + 7 gamma - 7 i pi - log 2))",
        SLOW_TOL, ig::e5, cf::e5, g_e5),
    fixed_example!("E6", "zeta'(4), log^2(x) log(log x) factor", "Example 6",
        "log^2(x) log(log x) atanh(x) / x", "15 zeta'(4)/8 + pi^4 (45 - 30 gamma + 30 i pi + log 4)/1440",
        SLOW_TOL, ig::e6, cf::e6, g_e6),
    fixed_example!("E7", "zeta'(2), log((1-x)(x^2+1)) factor", "Example 7, setting k=0,a=-1,m=2,n=1",
        "log((1-x)(x^2+1)) log(log x) / x", "(1/8) (-6 zeta'(2) + (gamma - i pi) pi^2)",
        SLOW_TOL, ig::e7, cf::e7, g_e7),
    fixed_example!("E8", "Glaisher constant, log(1-x^2) factor", "Example 8, setting k=0,m=n=1",
        "log(1-x^2) log(log x) / x", "(pi^2/12) (log(A^12/pi) - i pi)",
        SLOW_TOL, ig::e8, cf::e8, g_e8),
    fixed_example!("E9", "zeta(5/2), sqrt(log x) log(1-x^2)", "Example 9, setting k=1/2,m=n=1",
        "sqrt(log x) log(1-x^2) / x", "-(i/4) sqrt(pi/2) zeta(5/2)",
        SMOOTH_TOL, ig::e9, cf::e9, g_e9),
    fixed_example!("E10", "zeta(3/2), log(1-x^2)/sqrt(log x)", "Example 10, setting k=-1/2,m=n=1",
        "log(1-x^2) / (x sqrt(log x))", "i sqrt(pi/2) zeta(3/2)",
        SLOW_TOL, ig::e10, cf::e10, g_e10),
    fixed_example!("E11", "zeta'(3), log(x) log(1-x^2) log(log x)", "Example 11, setting k=m=n=1",
        "log(x) log(1-x^2) log(log x) / x", "(1/4) (zeta'(3) + zeta(3) (1 - gamma + i pi - log 2))",
        SLOW_TOL, ig::e11, cf::e11, g_e11),
    fixed_example!("E12", "zeta'(3/2), log(1-x^2) log(log x)/sqrt(log x)", "Example 12, setting k=-1/2,m=n=1",
        "log(1-x^2) log(log x) / (x sqrt(log x))", "sqrt(pi/2) (i zeta'(3/2) - i zeta(3/2) (gamma - i pi + log 8))",
        SLOW_TOL, ig::e12, cf::e12, g_e12),
    Identity {
        id: "I_DD1",
        description: "m-derivative of Eq. (4a), difference of two shifts",
        uses: &[Param::K, Param::M, Param::P],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Eq. (dd:eq1), take the first partial derivative with respect to m",
        integrand_text: "log^(k+1)(x) (x^m - x^p) / ((x^(m+1) + 1)(x^(p+1) + 1))",
        closed_form_text: "-2^(-k-1) (2^(k+1) - 1) e^(i pi k/2) zeta(k+2) Gamma(k+2) ((i/(m+1))^k/(m+1)^2 - (i/(p+1))^k/(p+1)^2)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::dd1)],
        domain: d_dd1,
        integrand: ig::dd1,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_dd1,
    },
    Identity {
        id: "I_DD2",
        description: "n-derivative of Eq. (4b), difference of two shifts",
        uses: &[Param::K, Param::N, Param::P],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Eq. (dd:eq2), repeating the steps above",
        integrand_text: "log^(k+1)(x) (x^n - x^p) / ((x^(n+1) - 1)(x^(p+1) - 1))",
        closed_form_text: "e^(i pi k/2) zeta(k+2) Gamma(k+2) ((i/(p+1))^k/(p+1)^2 - (i/(n+1))^k/(n+1)^2)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::dd2)],
        domain: d_dd2,
        integrand: ig::dd2,
        fills: no_fills,
        breaks: no_breaks,
        grid: g_dd2,
    },
    Identity {
        id: "E13",
        description: "k -> -2 limit of Eq. (dd:eq1)",
        uses: &[Param::M, Param::P],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Example 13, applying L'Hopitals' rule",
        integrand_text: "(x^m - x^p) / ((x^(m+1) + 1)(x^(p+1) + 1) log x)",
        closed_form_text: "(1/2) log((m+1)/(p+1))",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::e13)],
        domain: d_e13,
        integrand: ig::e13,
        fills: e13_fills,
        breaks: no_breaks,
        grid: g_e13,
    },
    Identity {
        id: "E14",
        description: "k = 1 case of Eq. (dd:eq2)",
        uses: &[Param::N, Param::P],
        status_hint: StatusHint::ExpectedConfirmed,
        anchor: "Example 14, setting k=1 simplifying",
        integrand_text: "log^2(x) (x^n - x^p) / ((x^(n+1) - 1)(x^(p+1) - 1))",
        closed_form_text: "2 zeta(3) (1/(n+1)^3 - 1/(p+1)^3)",
        default_tol: SMOOTH_TOL,
        readings: &[only("printed", cf::e14)],
        domain: d_e14,
        integrand: ig::e14,
        fills: e14_fills,
        breaks: no_breaks,
        grid: g_e14,
    },
];

pub fn registry() -> &'static [Identity] {
    REGISTRY
}
