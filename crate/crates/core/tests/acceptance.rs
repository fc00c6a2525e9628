//! The ten acceptance criteria. Each test prints one `PASS` or `FAIL` line
//! with its timing; run with `--nocapture` to see them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::process::Command;
use std::sync::Mutex;
use std::time::{Duration, Instant};
use zetatab::cli::Report;
use zetatab::identities::{self, Param, ParamPoint};
use zetatab::quad::{integrate_unit, integrate_with_limit_fill, QuadConfig, UnitPoint};
use zetatab::specfun::{constant, gamma, hurwitz_zeta, real, riemann_zeta, CNum, Constant, SpecFunConfig};
use zetatab::verify::{self, IdentityVerdict, PointStatus, Verdict, TABLE_ROWS};

/// Criteria run one at a time so that their timings do not overlap.
static SERIAL: Mutex<()> = Mutex::new(());

fn criterion(number: u32, title: &str, budget: Option<Duration>, body: impl FnOnce() -> Result<String, String>) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = match (outcome, budget) {
        (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:.2?}")),
        (o, _) => o,
    };
    match &outcome {
        Ok(detail) => println!("criterion {number:2} PASS [{elapsed:.3?}] {title}: {detail}"),
        Err(why) => println!("criterion {number:2} FAIL [{elapsed:.3?}] {title}: {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {number} ({title}) failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid(base: ParamPoint, axes: &[(Param, &[f64])]) -> Vec<ParamPoint> {
    let mut points = vec![base];
    for (p, values) in axes {
        points = points
            .iter()
            .flat_map(|pp| values.iter().map(move |&v| pp.with(*p, real(v))))
            .collect();
    }
    points
}

fn confirmed_within(v: &IdentityVerdict, tol: f64) -> Result<(), String> {
    ensure(v.verdict == Verdict::Confirmed, || format!("verdict {}", v.verdict))?;
    ensure(v.skipped.is_empty(), || format!("{} points skipped", v.skipped.len()))?;
    for r in &v.records {
        ensure(r.rel_err <= tol && r.status == PointStatus::Pass, || {
            format!("rel_err {:.2e} at {:?}", r.rel_err, r.params)
        })?;
    }
    Ok(())
}

fn worst(v: &IdentityVerdict) -> f64 {
    v.records.iter().map(|r| r.rel_err).fold(0.0, f64::max)
}

fn qcfg() -> QuadConfig {
    QuadConfig::default()
}

#[test]
fn criterion_01_example_13_grid() {
    criterion(1, "Example 13 on m x p grid", Some(Duration::from_secs(5)), || {
        let pts = grid(ParamPoint::default(), &[(Param::M, &[1.0, 2.0, 5.0]), (Param::P, &[0.0, 1.0, 3.0])]);
        let v = verify::sweep("E13", &pts, 1e-8, &qcfg()).map_err(|e| e.to_string())?;
        confirmed_within(&v, 1e-8)?;
        for r in &v.records {
            let (m, p) = (r.params.m.re, r.params.p.re);
            let target = 0.5 * ((m + 1.0) / (p + 1.0)).ln();
            ensure((r.lhs - target).norm() <= 1e-8 * target.abs().max(1e-4), || {
                format!("lhs {} vs {target} at m={m} p={p}", r.lhs)
            })?;
        }
        Ok(format!("{} points, worst rel_err {:.1e}", v.records.len(), worst(&v)))
    });
}

#[test]
fn criterion_02_example_14_grid() {
    criterion(2, "Example 14 on n x p grid", None, || {
        let pts = grid(ParamPoint::default(), &[(Param::N, &[1.0, 2.0]), (Param::P, &[0.0, 1.0])]);
        let v = verify::sweep("E14", &pts, 1e-8, &qcfg()).map_err(|e| e.to_string())?;
        confirmed_within(&v, 1e-8)?;
        let z3 = riemann_zeta(real(3.0), &SpecFunConfig::default()).unwrap().re;
        for r in &v.records {
            let (n, p) = (r.params.n.re, r.params.p.re);
            let target = 2.0 * z3 * ((n + 1.0).powi(-3) - (p + 1.0).powi(-3));
            ensure((r.lhs.re - target).abs() <= 1e-8 * target.abs().max(1e-8), || {
                format!("lhs {} vs {target} at n={n} p={p}", r.lhs)
            })?;
        }
        Ok(format!("{} points, worst rel_err {:.1e}", v.records.len(), worst(&v)))
    });
}

#[test]
fn criterion_03_catalan_row() {
    criterion(3, "Example 1 against (2C-1)/(16 pi)", None, || {
        let record = verify::verify_point("E1", &ParamPoint::default(), 1e-8, &qcfg()).map_err(|e| e.to_string())?;
        ensure(record.status == PointStatus::Pass, || format!("status {}", record.status))?;
        let target = (2.0 * constant(Constant::Catalan) - 1.0) / (16.0 * PI);
        let err = (record.lhs - target).norm();
        ensure(err <= 1e-8, || format!("|lhs - target| = {err:.2e}"))?;
        Ok(format!("lhs {:.15}, |lhs - target| = {err:.1e}", record.lhs.re))
    });
}

#[test]
fn criterion_04_eq_6a_grid() {
    criterion(4, "I_6A over k", None, || {
        let pts = grid(ParamPoint::default(), &[(Param::K, &[0.5, 1.0, 2.0, 3.0])]);
        let v = verify::sweep("I_6A", &pts, 1e-8, &qcfg()).map_err(|e| e.to_string())?;
        confirmed_within(&v, 1e-8)?;
        let at = |k: f64| v.records.iter().find(|r| r.params.k.re == k).unwrap();
        let k2 = at(2.0);
        let target = PI.powi(4) / 48.0;
        ensure((k2.lhs.re - target).abs() <= 1e-8 * target && k2.lhs.im.abs() <= 1e-8, || {
            format!("k=2 lhs {} vs pi^4/48", k2.lhs)
        })?;
        ensure((k2.rhs.re - target).abs() <= 1e-12 * target, || format!("k=2 rhs {} vs pi^4/48", k2.rhs))?;
        let half = at(0.5);
        let scale = half.rhs.norm();
        ensure(
            (half.lhs.re - half.rhs.re).abs() <= 1e-8 * scale
                && (half.lhs.im - half.rhs.im).abs() <= 1e-8 * scale
                && half.rhs.im.abs() > 0.1,
            || format!("k=0.5 lhs {} rhs {}", half.lhs, half.rhs),
        )?;
        Ok(format!("worst rel_err {:.1e}, k=0.5 value {:.12}", worst(&v), half.lhs))
    });
}

#[test]
fn criterion_05_eq_6b_grid() {
    criterion(5, "I_6B over k x m x n", None, || {
        let pts = grid(
            ParamPoint::default(),
            &[(Param::K, &[0.5, 1.0, 2.0]), (Param::M, &[1.0, 2.0]), (Param::N, &[1.0, 2.0])],
        );
        let v = verify::sweep("I_6B", &pts, 1e-8, &qcfg()).map_err(|e| e.to_string())?;
        confirmed_within(&v, 1e-8)?;
        ensure(v.records.len() == 12, || format!("{} records", v.records.len()))?;
        Ok(format!("12 points, worst rel_err {:.1e}", worst(&v)))
    });
}

/// Exact Bernoulli numbers `B_0 ..= B_n` (with `B_1 = -1/2`).
fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=n {
        let mut s = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            s += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `B_n(q)` exactly.
fn bernoulli_polynomial(b: &[BigRational], n: usize, q: &BigRational) -> BigRational {
    let mut sum = BigRational::zero();
    let mut binom = BigInt::one();
    for (k, bk) in b.iter().enumerate().take(n + 1) {
        let mut power = BigRational::one();
        for _ in 0..n - k {
            power *= q;
        }
        sum += BigRational::from_integer(binom.clone()) * bk * power;
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    sum
}

#[test]
fn criterion_06_hurwitz_properties() {
    criterion(6, "Hurwitz zeta properties", Some(Duration::from_secs(2)), || {
        let cfg = SpecFunConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_2E7A);
        let mut worst_rec: f64 = 0.0;
        for _ in 0..100 {
            let s = CNum::new(rng.gen_range(-6.0..8.0), rng.gen_range(-10.0..10.0));
            let q = CNum::new(rng.gen_range(0.05..4.0), rng.gen_range(-1.0..1.0));
            if (s - 1.0).norm() < 1e-3 {
                continue;
            }
            let z0 = hurwitz_zeta(s, q, &cfg).map_err(|e| e.to_string())?;
            let z1 = hurwitz_zeta(s, q + 1.0, &cfg).map_err(|e| e.to_string())?;
            let term = (-s * q.ln()).exp();
            let scale = z0.norm().max(z1.norm()).max(term.norm());
            let rel = (z0 - z1 - term).norm() / scale;
            worst_rec = worst_rec.max(rel);
            ensure(rel <= 1e-12, || format!("recurrence rel err {rel:.2e} at s={s}, q={q}"))?;
        }

        let b = bernoulli_numbers(13);
        let mut worst_bern: f64 = 0.0;
        for (num, den) in [(1, 3), (1, 2), (3, 4), (1, 1), (2, 1), (5, 2), (1, 10)] {
            let q = BigRational::new(BigInt::from(num), BigInt::from(den));
            let qf = q.to_f64().unwrap();
            for n in 0..=12usize {
                let exact = -bernoulli_polynomial(&b, n + 1, &q) / BigRational::from_integer(BigInt::from(n + 1));
                let exact = exact.to_f64().unwrap();
                let v = hurwitz_zeta(real(-(n as f64)), real(qf), &cfg).map_err(|e| e.to_string())?;
                let err = (v - exact).norm();
                worst_bern = worst_bern.max(err);
                ensure(err <= 1e-12, || format!("zeta(-{n}, {num}/{den}) = {v}, exact {exact}"))?;
            }
        }

        let mut worst_half: f64 = 0.0;
        for s in [
            real(2.0),
            real(3.0),
            real(0.5),
            real(-0.5),
            real(-3.0),
            real(-2.5),
            CNum::new(0.5, 10.0),
            CNum::new(2.0, -3.0),
            CNum::new(-1.5, 4.0),
        ] {
            let lhs = hurwitz_zeta(s, real(0.5), &cfg).map_err(|e| e.to_string())?;
            let rhs = ((s * 2f64.ln()).exp() - 1.0) * riemann_zeta(s, &cfg).map_err(|e| e.to_string())?;
            let rel = (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(1e-300);
            worst_half = worst_half.max(rel);
            ensure(rel <= 1e-12, || format!("half shift rel err {rel:.2e} at s={s}"))?;
        }
        Ok(format!(
            "recurrence {worst_rec:.1e}, Bernoulli {worst_bern:.1e}, half shift {worst_half:.1e}"
        ))
    });
}

#[test]
fn criterion_07_quadrature_oracles() {
    criterion(7, "quadrature oracles", Some(Duration::from_secs(1)), || {
        let cfg = qcfg();
        let mut checks: Vec<(String, CNum, f64)> = Vec::new();
        let ln2 = integrate_unit(|x| real(x.ln().powi(2)), &cfg).map_err(|e| e.to_string())?;
        checks.push(("ln^2 x".into(), ln2.value, 2.0));
        let inv_sqrt = integrate_unit(|x| real(x.powf(-0.5)), &cfg).map_err(|e| e.to_string())?;
        checks.push(("x^(-1/2)".into(), inv_sqrt.value, 2.0));
        for p in [-0.5, 0.5, 2.0] {
            let r = integrate_with_limit_fill(|pt: UnitPoint| real((-pt.ln_x()).powf(p)), &[], &cfg)
                .map_err(|e| e.to_string())?;
            let target = gamma(real(p + 1.0)).map_err(|e| e.to_string())?.re;
            checks.push((format!("|ln x|^{p}"), r.value, target));
        }
        let mut detail = Vec::new();
        for (name, got, target) in checks {
            let err = (got - target).norm();
            ensure(err <= 1e-9, || format!("{name}: {got} vs {target}, error {err:.2e}"))?;
            detail.push(format!("{name} {err:.0e}"));
        }
        Ok(detail.join(", "))
    });
}

#[test]
fn criterion_08_sum_and_difference_integrands() {
    criterion(8, "I_5A and I_5B as combinations of I_4A and I_4B", None, || {
        let cfg = qcfg();
        let lhs = |id: &str, pp: &ParamPoint| identities::eval_lhs(id, pp, &cfg).map(|r| r.value).map_err(|e| e.to_string());
        let points = [
            ParamPoint { a: real(2.0), k: real(1.0), m: real(1.0), n: real(2.0), ..Default::default() },
            ParamPoint { a: CNum::new(1.0, 0.5), k: real(0.5), m: real(2.0), n: real(1.0), ..Default::default() },
            ParamPoint { a: real(3.0), k: real(2.0), m: real(1.0), n: real(3.0), ..Default::default() },
        ];
        let mut worst_err: f64 = 0.0;
        for pp in &points {
            let four_a = lhs("I_4A", pp)?;
            let four_b_same = lhs("I_4B", &pp.with(Param::N, pp.m))?;
            let five_a = lhs("I_5A", pp)?;
            let diff = 0.5 * (four_a - four_b_same);
            let e = (five_a - diff).norm() / five_a.norm().max(1.0);
            ensure(e <= 1e-7, || format!("I_5A {five_a} vs {diff} at {pp:?}"))?;
            worst_err = worst_err.max(e);

            let four_b = lhs("I_4B", pp)?;
            let five_b = lhs("I_5B", pp)?;
            let e = (five_b - (four_a + four_b)).norm() / five_b.norm().max(1.0);
            ensure(e <= 1e-7, || format!("I_5B {five_b} vs {} at {pp:?}", four_a + four_b))?;
            worst_err = worst_err.max(e);
        }
        Ok(format!("3 points, worst relative difference {worst_err:.1e}"))
    });
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_zetatab"))
        .args(args)
        .output()
        .expect("zetatab runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

#[test]
fn criterion_09_full_table_audit() {
    criterion(9, "full table audit", None, || {
        let start = Instant::now();
        let (code, markdown) = run_cli(&["table"]);
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(60), || format!("table took {elapsed:.2?}"))?;
        let rows: Vec<Vec<&str>> = markdown
            .lines()
            .filter(|l| l.starts_with("| ") && l[2..].starts_with(|c: char| c.is_ascii_digit()))
            .map(|l| l.split(" | ").map(str::trim).collect())
            .collect();
        ensure(rows.len() == 18, || format!("{} rows", rows.len()))?;
        for (i, (row, id)) in rows.iter().zip(TABLE_ROWS).enumerate() {
            ensure(row[0] == format!("| {}", i + 1) && row[3] == id, || format!("row {} is {row:?}", i + 1))?;
        }

        let (_, json) = run_cli(&["table", "--format", "json"]);
        let (_, again) = run_cli(&["table", "--format", "json"]);
        ensure(json == again, || "two table runs differ".to_string())?;
        let report: Report = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        for id in ["I_6A", "I_6B", "E1", "E3", "E4", "E9", "E10", "E13"] {
            let v = report.verdicts.iter().find(|v| v.identity_id == id).ok_or(format!("{id} missing"))?;
            ensure(v.verdict == Verdict::Confirmed, || format!("{id} is {}", v.verdict))?;
        }

        let (e14_code, _) = run_cli(&["sweep", "--identity", "E14"]);
        ensure(e14_code == 0, || format!("E14 sweep exited {e14_code}"))?;

        let mut typo = Vec::new();
        for id in ["I_5A", "I_5B", "I_LG_LOG", "I_DG_LOG"] {
            let (_, out) = run_cli(&["sweep", "--identity", id, "--format", "json"]);
            let r: Report = serde_json::from_str(&out).map_err(|e| e.to_string())?;
            let v = r.verdicts[0].verdict;
            ensure(matches!(v, Verdict::Confirmed | Verdict::Failed), || format!("{id} is {v}"))?;
            typo.push(format!("{id} {v}"));
        }
        Ok(format!(
            "18 rows in {elapsed:.2?}, table exit {code}, E14 CONFIRMED; suspected typos: {}",
            typo.join(", ")
        ))
    });
}

#[test]
fn criterion_10_example_2_imaginary_part() {
    criterion(10, "imaginary part of Example 2", None, || {
        let r = identities::eval_lhs("E2", &ParamPoint::default(), &qcfg()).map_err(|e| e.to_string())?;
        let target = PI * PI * PI / 8.0;
        let err = (r.value.im - target).abs();
        ensure(err <= 1e-7, || format!("Im(lhs) {} vs pi^3/8 = {target}", r.value.im))?;
        Ok(format!("Im(lhs) = {:.12}, error {err:.1e}", r.value.im))
    });
}
