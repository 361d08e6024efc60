//! Acceptance suite: one test per shipping criterion, each asserting the
//! stated tolerance (and, where one applies, the stated time budget).
//!
//! Criterion 9 is conditional: the clamped C integral is compared against
//! the classical constant 11π²/72, and a miss is reported as a documented
//! discrepancy — the computed value and its convention — rather than a
//! failure.

use coxint::carlson::{rc, rd, rf, rj};
use coxint::coxeter::{
    coxeter_a, coxeter_b, double_integral_orders, endpoint_asymptotics_candidates, eval_i,
    integral_of_iprime, iprime_closed, iprime_quartic, iprime_trig, quartic_coeffs,
    quartic_discriminant, quartic_roots, run_identity_suite, Lambda, Representation, SuiteStatus,
};
use coxint::legendre::{ellip_f, ellip_pi};
use coxint::quadrature::{integrate_tanh_sinh, QuadratureOptions};
use coxint::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

fn opts() -> QuadratureOptions {
    QuadratureOptions::default()
}

fn lam(x: f64) -> Lambda {
    Lambda::new(x).unwrap()
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

#[test]
fn criterion_01_a_equals_5pi2_over_24() {
    let t0 = Instant::now();
    let a = coxeter_a(&opts()).unwrap();
    let elapsed = t0.elapsed();
    let err = (a.value - 5.0 * PI * PI / 24.0).abs();
    assert!(err <= 1e-9, "|A - 5π²/24| = {err:e}");
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1: PASS — A = {:.15} (err {err:.2e}, {elapsed:?})", a.value);
}

#[test]
fn criterion_02_b_equals_pi2_over_8() {
    let b = coxeter_b(&opts()).unwrap();
    let err_b = (b.value - PI * PI / 8.0).abs();
    assert!(err_b <= 1e-10, "|B - π²/8| = {err_b:e}");

    let i0 = eval_i(lam(0.0), &opts()).unwrap();
    let err_i0 = (i0.value - PI * PI / 8.0).abs();
    assert!(err_i0 <= 1e-12, "|I(0) - π²/8| = {err_i0:e}");
    println!("criterion 2: PASS — B = {:.15} (err {err_b:.2e}), I(0) err {err_i0:.2e}", b.value);
}

#[test]
fn criterion_03_i_of_2_equals_a() {
    let a = coxeter_a(&opts()).unwrap();
    let i2 = eval_i(lam(2.0), &opts()).unwrap();
    let err = (i2.value - a.value).abs();
    assert!(err <= 2e-9, "|I(2) - A| = {err:e}");
    println!("criterion 3: PASS — I(2) = {:.15} (err vs A {err:.2e})", i2.value);
}

#[test]
fn criterion_04_integral_of_iprime_is_pi2_over_12() {
    let t0 = Instant::now();
    let r = integral_of_iprime(lam(2.0), Representation::Trig, &opts()).unwrap();
    let elapsed = t0.elapsed();
    let err = (r.value - PI * PI / 12.0).abs();
    assert!(err <= 1e-7, "|∫₀²I' - π²/12| = {err:e}");
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 4: PASS — ∫₀²I' = {:.15} (err {err:.2e}, {elapsed:?})", r.value);
}

#[test]
fn criterion_05_double_integral_both_orders() {
    let t0 = Instant::now();
    let (theta_inner, s_inner) = double_integral_orders(&opts()).unwrap();
    let elapsed = t0.elapsed();
    let exact = PI * PI / 12.0;
    let err1 = (theta_inner.value - exact).abs();
    let err2 = (s_inner.value - exact).abs();
    assert!(err1 <= 1e-6, "θ-inner order err = {err1:e}");
    assert!(err2 <= 1e-6, "s-inner order err = {err2:e}");
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 5: PASS — double integral {:.15} / {:.15} (errs {err1:.2e}, {err2:.2e}, {elapsed:?})",
        theta_inner.value, s_inner.value
    );
}

#[test]
fn criterion_06_representations_agree_on_the_grid() {
    let grid = [0.25, 0.5, 0.75, 1.25, 1.5, 1.75];
    let mut worst_quartic = 0.0f64;
    let mut worst_closed = 0.0f64;
    for l in grid {
        let t = iprime_trig(lam(l), &opts()).unwrap().value;
        let q = iprime_quartic(lam(l), &opts()).unwrap().value;
        let c = iprime_closed(lam(l)).unwrap();
        worst_quartic = worst_quartic.max((t - q).abs());
        worst_closed = worst_closed.max((t - c).abs());
    }
    assert!(worst_quartic <= 1e-9, "max |trig - quartic| = {worst_quartic:e}");
    assert!(worst_closed <= 1e-8, "max |trig - closed| = {worst_closed:e}");
    println!(
        "criterion 6: PASS — max |trig-quartic| {worst_quartic:.2e}, max |trig-closed| {worst_closed:.2e}"
    );
}

#[test]
fn criterion_07_quartic_algebra_and_weierstrass_equivalence() {
    let mut rng = StdRng::seed_from_u64(2024);

    let mut worst_disc = 0.0f64;
    let mut worst_root = 0.0f64;
    let mut sampled = 0;
    while sampled < 100 {
        let l: f64 = rng.gen_range(-0.9..=10.0);
        if l.abs() < 1e-3 || (l - 2.0).abs() < 1e-3 {
            continue; // the roots degenerate at λ ∈ {0, 2}
        }
        sampled += 1;
        let lambda = lam(l);
        let coeffs = quartic_coeffs(lambda);
        worst_disc = worst_disc.max((quartic_discriminant(&coeffs) - 16.0).abs());
        let roots = quartic_roots(lambda).unwrap();
        for u in [roots.u_plus, roots.u_minus] {
            worst_root = worst_root.max((coeffs.c4 * u * u + coeffs.c2 * u + coeffs.c0).abs());
        }
    }
    assert!(worst_disc <= 1e-9, "max |disc - 16| = {worst_disc:e}");
    assert!(worst_root <= 1e-9, "max root residual = {worst_root:e}");

    // Pointwise equivalence of the two integral representations under
    // t = tan(θ/2): quartic integrand · dt/dθ = trig integrand.
    let mut worst_rel = 0.0f64;
    for _ in 0..200 {
        let theta: f64 = rng.gen_range(0.05..=1.5);
        let l: f64 = rng.gen_range(0.05..=5.0);
        let t = (0.5 * theta).tan();
        let t2 = t * t;
        let q = quartic_coeffs(lam(l)).eval(t);
        let one_minus = 1.0 - t2;
        let quartic_side =
            2.0 * one_minus * one_minus / ((1.0 + t2) * ((1.0 + l) + (1.0 - l) * t2) * q.sqrt());
        let c = theta.cos();
        let g = 1.0 + l * c;
        let trig_side = c * c / (g * (g * g - c * c).sqrt()) * 2.0 / (1.0 + t2);
        worst_rel = worst_rel.max(((quartic_side - trig_side) / trig_side).abs());
    }
    assert!(worst_rel <= 1e-12, "max rel deviation = {worst_rel:e}");
    println!(
        "criterion 7: PASS — disc err {worst_disc:.2e}, root residual {worst_root:.2e}, substitution rel err {worst_rel:.2e}"
    );
}

#[test]
fn criterion_08_elliptic_kernels_against_defining_integrals() {
    let oracle_opts = QuadratureOptions {
        abs_tol: 1e-13,
        rel_tol: 1e-12,
        ..opts()
    };
    let grid = |lo: f64, hi: f64| (0..5).map(move |i| lo + (hi - lo) * i as f64 / 4.0);

    let mut worst = 0.0f64;
    for n in grid(-1.0, 0.8) {
        for phi in grid(0.1, 1.4) {
            for m in grid(-1.0, 0.9) {
                let f_oracle = integrate_tanh_sinh(
                    |t: f64| 1.0 / (1.0 - m * t.sin().powi(2)).sqrt(),
                    0.0,
                    phi,
                    &oracle_opts,
                )
                .unwrap()
                .value;
                let f_rel = ((ellip_f(phi, m).unwrap() - f_oracle) / f_oracle).abs();

                let pi_oracle = integrate_tanh_sinh(
                    |t: f64| {
                        let s2 = t.sin().powi(2);
                        1.0 / ((1.0 - n * s2) * (1.0 - m * s2).sqrt())
                    },
                    0.0,
                    phi,
                    &oracle_opts,
                )
                .unwrap()
                .value;
                let pi_rel = ((ellip_pi(n, phi, m).unwrap() - pi_oracle) / pi_oracle).abs();
                worst = worst.max(f_rel).max(pi_rel);
            }
        }
    }
    assert!(worst <= 1e-10, "max rel deviation on the grid = {worst:e}");

    // Carlson scaling and degeneracy relations.
    let mut rng = StdRng::seed_from_u64(8);
    let mut worst_carlson = 0.0f64;
    for _ in 0..20 {
        let x: f64 = rng.gen_range(0.1..=10.0);
        let y: f64 = rng.gen_range(0.1..=10.0);
        let z: f64 = rng.gen_range(0.1..=10.0);
        let p: f64 = rng.gen_range(0.1..=10.0);
        let k: f64 = rng.gen_range(0.5..=2.0);

        let rf_base = rf(real(x), real(y), real(z)).unwrap();
        let rf_scaled = rf(real(k * x), real(k * y), real(k * z)).unwrap();
        worst_carlson =
            worst_carlson.max((rf_scaled * k.sqrt() - rf_base).norm() / rf_base.norm());

        let rj_base = rj(real(x), real(y), real(z), real(p)).unwrap();
        let rj_scaled = rj(real(k * x), real(k * y), real(k * z), real(k * p)).unwrap();
        worst_carlson =
            worst_carlson.max((rj_scaled * k.powf(1.5) - rj_base).norm() / rj_base.norm());

        let rc_pair = (rc(real(x), real(y)).unwrap(), rf(real(x), real(y), real(y)).unwrap());
        worst_carlson = worst_carlson.max((rc_pair.0 - rc_pair.1).norm() / rc_pair.0.norm());

        let rd_pair = (
            rd(real(x), real(y), real(z)).unwrap(),
            rj(real(x), real(y), real(z), real(z)).unwrap(),
        );
        worst_carlson = worst_carlson.max((rd_pair.0 - rd_pair.1).norm() / rd_pair.0.norm());
    }
    assert!(worst_carlson <= 1e-13, "max Carlson invariant deviation = {worst_carlson:e}");
    println!(
        "criterion 8: PASS — defining-integral rel err {worst:.2e}, Carlson invariants {worst_carlson:.2e}"
    );
}

#[test]
fn criterion_09_conditional_c_identity() {
    let entries = run_identity_suite(&opts()).unwrap();
    let c = entries
        .iter()
        .find(|e| e.report.identity_id == "C_clamped_eq_11pi2_over_72")
        .expect("the C identity must be present");
    assert!(c.conditional);

    match c.status {
        SuiteStatus::Pass => {
            println!("criterion 9: PASS — clamped C matches 11π²/72 within 1e-6");
        }
        SuiteStatus::DocumentedDiscrepancy => {
            let note = c
                .note
                .as_deref()
                .expect("a documented discrepancy must carry its note");
            // The note must pin the computed value to 12 significant digits
            // and name the convention.
            assert!(note.contains("1.64493406685e0"), "note = {note}");
            assert!(note.contains("clamp"), "note = {note}");
            println!("criterion 9: PASS (documented discrepancy) — {note}");
        }
        SuiteStatus::Fail => panic!("the conditional C identity must never hard-fail"),
    }

    // The discrepancy must not poison the suite: every non-conditional
    // entry still passes.
    for e in &entries {
        assert!(e.acceptable(), "{} failed", e.report.identity_id);
    }
}

#[test]
fn criterion_10_fundamental_theorem_at_interior_points() {
    let mut worst = 0.0f64;
    for l in [0.5, 1.0, 1.5] {
        let integral = integral_of_iprime(lam(l), Representation::Trig, &opts()).unwrap();
        let i_val = eval_i(lam(l), &opts()).unwrap();
        let dev = (integral.value - (i_val.value - PI * PI / 8.0)).abs();
        assert!(dev <= 1e-8, "λ = {l}: deviation {dev:e}");
        worst = worst.max(dev);
    }
    println!("criterion 10: PASS — max FTC deviation {worst:.2e}");
}

#[test]
fn criterion_11_asymptotics_complete_with_finite_fits() {
    for endpoint in [0.0, 2.0] {
        let candidates = endpoint_asymptotics_candidates(endpoint, &opts()).unwrap();
        assert_eq!(candidates.len(), 3);
        for fit in &candidates {
            assert!(
                fit.fit_residual.is_finite() && fit.coefficient.is_finite(),
                "endpoint {endpoint}: {fit:?}"
            );
        }
    }
    // The λ → 2⁻ limit point itself is a regular value.
    let edge = iprime_trig(lam(2.0), &opts()).unwrap();
    assert!(edge.value.is_finite() && edge.converged);
    println!(
        "criterion 11: PASS — both endpoint ladders fit finitely; I'(2) = {:.12}",
        edge.value
    );
}
