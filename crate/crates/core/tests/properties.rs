use approx::assert_relative_eq;
use proptest::prelude::*;
use zetatab::identities::{self, ParamPoint};
use zetatab::quad::{integrate_unit, segments_integrated_on_this_thread, QuadConfig};
use zetatab::specfun::{
    digamma, gamma, hurwitz_zeta, log_gamma, real, riemann_zeta, zeta_derivative, CNum, SpecFunConfig,
};

fn close(a: CNum, b: CNum, rel: f64) -> bool {
    (a - b).norm() <= rel * a.norm().max(b.norm()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn digamma_recurrence(re in 0.05f64..20.0, im in -20.0f64..20.0) {
        let z = CNum::new(re, im);
        let lhs = digamma(z + 1.0).unwrap();
        let rhs = digamma(z).unwrap() + 1.0 / z;
        prop_assert!(close(lhs, rhs, 1e-12), "{lhs} vs {rhs} at {z}");
    }

    #[test]
    fn log_gamma_recurrence(re in 0.05f64..30.0, im in -30.0f64..30.0) {
        let z = CNum::new(re, im);
        let lhs = log_gamma(z + 1.0).unwrap();
        let rhs = log_gamma(z).unwrap() + z.ln();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * lhs.norm().max(1.0), "{lhs} vs {rhs} at {z}");
    }

    #[test]
    fn gamma_agrees_with_log_gamma(re in 0.1f64..10.0, im in -5.0f64..5.0) {
        let z = CNum::new(re, im);
        let g = gamma(z).unwrap();
        let via_log = log_gamma(z).unwrap().exp();
        prop_assert!(close(g, via_log, 1e-11), "{g} vs {via_log} at {z}");
    }

    #[test]
    fn hurwitz_recurrence(s_re in -6.0f64..8.0, s_im in -10.0f64..10.0, q_re in 0.05f64..4.0, q_im in -1.0f64..1.0) {
        let (s, q) = (CNum::new(s_re, s_im), CNum::new(q_re, q_im));
        prop_assume!((s - 1.0).norm() > 1e-2);
        let cfg = SpecFunConfig::default();
        let z0 = hurwitz_zeta(s, q, &cfg).unwrap();
        let z1 = hurwitz_zeta(s, q + 1.0, &cfg).unwrap();
        let term = (-s * q.ln()).exp();
        let scale = z0.norm().max(z1.norm()).max(term.norm());
        prop_assert!((z0 - z1 - term).norm() <= 1e-12 * scale);
    }

    #[test]
    fn quadrature_is_linear(c0 in -3.0f64..3.0, c1 in -3.0f64..3.0, k in 0.0f64..4.0) {
        let cfg = QuadConfig::default();
        let f = |x: f64| real(x.powf(k));
        let g = |x: f64| CNum::new((-x.ln()).sqrt(), x.cos());
        let combined = integrate_unit(|x| c0 * f(x) + c1 * g(x), &cfg).unwrap().value;
        let separate = c0 * integrate_unit(f, &cfg).unwrap().value + c1 * integrate_unit(g, &cfg).unwrap().value;
        prop_assert!((combined - separate).norm() <= 1e-12 * (1.0 + c0.abs() + c1.abs()));
    }
}

#[test]
fn derivative_matches_central_difference() {
    let cfg = SpecFunConfig::default();
    let h = 1e-5;
    for s in [-1.0, 1.5, 2.0, 3.0, 4.0] {
        let d = zeta_derivative(real(s), &cfg).unwrap();
        let fd = (riemann_zeta(real(s + h), &cfg).unwrap() - riemann_zeta(real(s - h), &cfg).unwrap()) / (2.0 * h);
        assert_relative_eq!(d.re, fd.re, max_relative = 1e-7);
        assert!(d.im.abs() < 1e-14);
    }
}

#[test]
fn deeper_levels_do_not_lose_accuracy() {
    // int_0^1 log(x)^2 / sqrt(x) dx = 16
    let f = |x: f64| real(x.ln().powi(2) / x.sqrt());
    let mut last = f64::INFINITY;
    for level in 3..=8 {
        let cfg = QuadConfig { max_level: level, abs_tol: 1e-300, ..Default::default() };
        let err = (integrate_unit(f, &cfg).unwrap().value - 16.0).norm();
        assert!(err <= last.max(1e-13), "level {level}: {err:e} after {last:e}");
        last = err;
    }
    assert!(last < 1e-12);
}

#[test]
fn complex_integral_is_real_and_imaginary_parts() {
    let cfg = QuadConfig::default();
    let f = |x: f64| CNum::new(x.ln() * x, (1.0 - x).sqrt());
    let whole = integrate_unit(f, &cfg).unwrap().value;
    let re = integrate_unit(|x| real(f(x).re), &cfg).unwrap().value;
    let im = integrate_unit(|x| real(f(x).im), &cfg).unwrap().value;
    assert_relative_eq!(whole.re, re.re, max_relative = 1e-14);
    assert_relative_eq!(whole.im, im.re, max_relative = 1e-14);
    assert_relative_eq!(whole.re, -0.25, max_relative = 1e-12);
    assert_relative_eq!(whole.im, 2.0 / 3.0, max_relative = 1e-12);
}

#[test]
fn closed_forms_never_integrate() {
    let before = segments_integrated_on_this_thread();
    for identity in identities::registry() {
        for pp in identity.default_grid() {
            if identity.check_domain(&pp).is_ok() {
                identity.eval_rhs(&pp).unwrap();
            }
        }
    }
    assert_eq!(segments_integrated_on_this_thread(), before);
    identities::eval_lhs("E13", &ParamPoint::default(), &QuadConfig::default()).unwrap();
    assert!(segments_integrated_on_this_thread() > before);
}

#[test]
fn square_root_rows_are_purely_imaginary() {
    let pp = ParamPoint::default();
    for id in ["E9", "E10"] {
        let rhs = identities::eval_rhs(id, &pp).unwrap();
        assert!(rhs.re.abs() < 1e-14, "{id} rhs {rhs}");
        let lhs = identities::eval_lhs(id, &pp, &QuadConfig::default()).unwrap().value;
        assert!(lhs.re.abs() < 1e-9 * lhs.im.abs(), "{id} lhs {lhs}");
    }
}

#[test]
fn example_12_real_part_comes_from_the_branch_of_log_log() {
    // -i zeta(3/2) (-i pi) leaves -pi sqrt(pi/2) zeta(3/2) outside the i terms
    let pi = std::f64::consts::PI;
    let z = riemann_zeta(real(1.5), &SpecFunConfig::default()).unwrap().re;
    let expected = -pi * (pi / 2.0).sqrt() * z;
    let pp = ParamPoint::default();
    let rhs = identities::eval_rhs("E12", &pp).unwrap();
    assert_relative_eq!(rhs.re, expected, max_relative = 1e-14);
    let lhs = identities::eval_lhs("E12", &pp, &QuadConfig::default()).unwrap().value;
    assert_relative_eq!(lhs.re, expected, max_relative = 1e-8);
}

#[test]
fn eq_6b_with_equal_exponents_collapses() {
    // with m = n the product collapses: (1 + x^m)(1 - x^m) = 1 - x^2m
    let cfg = QuadConfig::default();
    for k in [0.5, 1.0, 2.0] {
        for m in [1.0, 2.0] {
            let pp = ParamPoint { k: real(k), m: real(m), n: real(m), ..Default::default() };
            let lhs = identities::eval_lhs("I_6B", &pp, &cfg).unwrap().value;
            let direct = zetatab::quad::integrate_with_limit_fill(
                |pt| {
                    let l = pt.ln_x();
                    let lk = zetatab::specfun::log_pow_of_ln(l, real(k)).unwrap();
                    lk * real((-(2.0 * m * l).exp_m1()).ln()) / pt.x
                },
                &[],
                &cfg,
            )
            .unwrap()
            .value;
            assert!(close(lhs, direct, 1e-11), "k={k} m={m}: {lhs} vs {direct}");
        }
    }
}
