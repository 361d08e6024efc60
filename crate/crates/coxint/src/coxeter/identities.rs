//! The identity verification suite: every exact statement the library rests
//! on, checked numerically and reported uniformly.
//!
//! Each entry is an [`IdentityReport`] wrapped with suite metadata. All
//! identities are hard gates except the C-value identity, which verifies a
//! *convention* (the clamped reading of a divergent-domain integrand); its
//! failure downgrades to `documented-discrepancy` with the computed value
//! recorded, and does not fail the suite.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::carlson::{rc, rd, rf, rj};
use crate::error::Result;
use crate::legendre::{ellip_f, ellip_pi};
use crate::quadrature::{integrate_tanh_sinh, QuadratureOptions};

use super::{
    coxeter_a, coxeter_b, coxeter_c, coxeter_c_reflected, double_integral_orders,
    endpoint_asymptotics, eval_i, integral_of_iprime, iprime_closed, iprime_integrand,
    iprime_quartic, iprime_trig, quartic_coeffs, quartic_discriminant, quartic_roots, target_a,
    target_a_minus_b, target_b, target_c, Lambda, Representation,
};

/// One numerically verified identity.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    /// Stable machine-readable name.
    pub identity_id: String,
    /// The computed left-hand side (for grid properties: the worst observed
    /// deviation).
    pub lhs: f64,
    /// The reference right-hand side (an exact constant where one exists,
    /// otherwise the independently computed comparison value).
    pub rhs_exact: f64,
    /// |lhs − rhs| (or the worst deviation for grid properties).
    pub abs_error: f64,
    /// Pass threshold for `abs_error`.
    pub tolerance: f64,
    /// Whether `abs_error <= tolerance`.
    pub passed: bool,
    /// Total quadrature evaluations behind the check (0 for pure algebra).
    pub evaluations: u64,
}

impl IdentityReport {
    fn new(id: &str, lhs: f64, rhs: f64, tolerance: f64, evaluations: u64) -> Self {
        let abs_error = (lhs - rhs).abs();
        IdentityReport {
            identity_id: id.to_string(),
            lhs,
            rhs_exact: rhs,
            abs_error,
            tolerance,
            passed: abs_error <= tolerance,
            evaluations,
        }
    }

    /// A grid/property check: `worst` is the largest observed deviation.
    fn from_deviation(id: &str, worst: f64, tolerance: f64, evaluations: u64) -> Self {
        IdentityReport {
            identity_id: id.to_string(),
            lhs: worst,
            rhs_exact: 0.0,
            abs_error: worst,
            tolerance,
            passed: worst <= tolerance,
            evaluations,
        }
    }
}

/// Suite-level outcome of one identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SuiteStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// A conditional identity that failed: reported, not gating.
    #[serde(rename = "documented-discrepancy")]
    DocumentedDiscrepancy,
}

impl std::fmt::Display for SuiteStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SuiteStatus::Pass => "pass",
            SuiteStatus::Fail => "fail",
            SuiteStatus::DocumentedDiscrepancy => "documented-discrepancy",
        };
        f.write_str(s)
    }
}

/// An [`IdentityReport`] with its suite disposition.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    #[serde(flatten)]
    pub report: IdentityReport,
    /// Conditional identities downgrade failure to documented-discrepancy.
    pub conditional: bool,
    pub status: SuiteStatus,
    /// Present for documented discrepancies: the computed value and the
    /// convention under which it was obtained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl SuiteEntry {
    fn gate(report: IdentityReport) -> Self {
        let status = if report.passed {
            SuiteStatus::Pass
        } else {
            SuiteStatus::Fail
        };
        SuiteEntry {
            report,
            conditional: false,
            status,
            note: None,
        }
    }

    fn conditional(report: IdentityReport, note_on_fail: String) -> Self {
        let (status, note) = if report.passed {
            (SuiteStatus::Pass, None)
        } else {
            (SuiteStatus::DocumentedDiscrepancy, Some(note_on_fail))
        };
        SuiteEntry {
            report,
            conditional: true,
            status,
            note,
        }
    }

    /// True unless this is a hard (non-conditional) failure.
    pub fn acceptable(&self) -> bool {
        self.status != SuiteStatus::Fail
    }
}

fn rel_dev(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn rel_dev_c(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Twelve significant digits, for discrepancy notes.
fn twelve_digits(x: f64) -> String {
    format!("{x:.11e}")
}

/// Grid used by the representation-agreement identities.
const REP_GRID: [f64; 6] = [0.25, 0.5, 0.75, 1.25, 1.5, 1.75];

/// Tight options for defining-integral oracle quadratures.
fn oracle_options(opts: &QuadratureOptions) -> QuadratureOptions {
    QuadratureOptions {
        abs_tol: 1e-13,
        rel_tol: 1e-12,
        ..*opts
    }
}

/// Runs every identity in the suite and returns the entries sorted by
/// `identity_id` (the fixed report order, independent of evaluation order).
pub fn run_identity_suite(opts: &QuadratureOptions) -> Result<Vec<SuiteEntry>> {
    opts.validate()?;
    let mut entries = Vec::with_capacity(26);
    let mut rng = StdRng::seed_from_u64(0x5EED_C0C0);

    // --- Special values -------------------------------------------------
    let a = coxeter_a(opts)?;
    let b = coxeter_b(opts)?;
    let i0 = eval_i(Lambda::new(0.0)?, opts)?;
    let i2 = eval_i(Lambda::new(2.0)?, opts)?;

    entries.push(SuiteEntry::gate(IdentityReport::new(
        "A_eq_5pi2_over_24",
        a.value,
        target_a(),
        1e-9,
        a.evaluations,
    )));
    entries.push(SuiteEntry::gate(IdentityReport::new(
        "B_eq_pi2_over_8",
        b.value,
        target_b(),
        1e-10,
        b.evaluations,
    )));
    entries.push(SuiteEntry::gate(IdentityReport::new(
        "I_of_0_eq_pi2_over_8",
        i0.value,
        target_b(),
        1e-12,
        i0.evaluations,
    )));
    // Two independent assemblies of the same integral.
    entries.push(SuiteEntry::gate(IdentityReport::new(
        "A_eq_I_of_2",
        i2.value,
        a.value,
        2e-9,
        a.evaluations + i2.evaluations,
    )));

    // --- The C integral under the clamping convention (conditional) -----
    let c = coxeter_c(opts)?;
    let c_reflected = coxeter_c_reflected(opts)?;
    let pi2_over_6 = PI * PI / 6.0;
    let c_note = format!(
        "computed C = {} under the clamp-to-zero convention (integrand set to 0 where \
         (1-cos th)/(2 cos th) >= 1, i.e. the domain truncated at arccos(1/3)); \
         target 11*pi^2/72 = {}; the computed value differs from pi^2/6 = {} by {:.2e}",
        twelve_digits(c.value),
        twelve_digits(target_c()),
        twelve_digits(pi2_over_6),
        (c.value - pi2_over_6).abs(),
    );
    entries.push(SuiteEntry::conditional(
        IdentityReport::new(
            "C_clamped_eq_11pi2_over_72",
            c.value,
            target_c(),
            1e-6,
            c.evaluations,
        ),
        c_note,
    ));
    entries.push(SuiteEntry::gate(IdentityReport::new(
        "C_reflection_invariance",
        c.value,
        c_reflected.value,
        1e-10,
        c.evaluations + c_reflected.evaluations,
    )));

    // --- The fundamental-theorem identities ------------------------------
    let integral = integral_of_iprime(Lambda::new(2.0)?, Representation::Trig, opts)?;
    entries.push(SuiteEntry::gate(IdentityReport::new(
        "A_minus_B_pi2_over_12",
        integral.value,
        target_a_minus_b(),
        1e-7,
        integral.evaluations,
    )));

    for (suffix, lambda_hi) in [("0_5", 0.5), ("1_0", 1.0), ("1_5", 1.5)] {
        let lhs = integral_of_iprime(Lambda::new(lambda_hi)?, Representation::Trig, opts)?;
        let i_hi = eval_i(Lambda::new(lambda_hi)?, opts)?;
        entries.push(SuiteEntry::gate(IdentityReport::new(
            &format!("fundamental_theorem_lambda_{suffix}"),
            lhs.value,
            i_hi.value - target_b(),
            1e-8,
            lhs.evaluations + i_hi.evaluations,
        )));
    }

    // --- The 2-D Fubini identity -----------------------------------------
    let (theta_inner, s_inner) = double_integral_orders(opts)?;
    let both_evals = theta_inner.evaluations + s_inner.evaluations;
    let worst_order_dev = (theta_inner.value - target_a_minus_b())
        .abs()
        .max((s_inner.value - target_a_minus_b()).abs());
    entries.push(SuiteEntry::gate(IdentityReport {
        identity_id: "double_integral_pi2_over_12".to_string(),
        lhs: theta_inner.value,
        rhs_exact: target_a_minus_b(),
        abs_error: worst_order_dev,
        tolerance: 1e-6,
        passed: worst_order_dev <= 1e-6,
        evaluations: both_evals,
    }));
    entries.push(SuiteEntry::gate(IdentityReport::new(
        "double_integral_order_agreement",
        theta_inner.value,
        s_inner.value,
        1e-6,
        both_evals,
    )));

    // --- Representation agreement ----------------------------------------
    let mut trig_vs_quartic = 0.0f64;
    let mut trig_vs_closed = 0.0f64;
    let mut rep_evals = 0u64;
    for &l in &REP_GRID {
        let lambda = Lambda::new(l)?;
        let t = iprime_trig(lambda, opts)?;
        let q = iprime_quartic(lambda, opts)?;
        let cf = iprime_closed(lambda)?;
        trig_vs_quartic = trig_vs_quartic.max((t.value - q.value).abs());
        trig_vs_closed = trig_vs_closed.max((t.value - cf).abs());
        rep_evals += t.evaluations + q.evaluations;
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "iprime_trig_eq_quartic",
        trig_vs_quartic,
        1e-9,
        rep_evals,
    )));
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "iprime_trig_eq_closed",
        trig_vs_closed,
        1e-8,
        rep_evals,
    )));

    // λ = 2 sits outside the closed form's window but both quadrature
    // representations are finite and must agree there.
    {
        let two = Lambda::new(2.0)?;
        let t = iprime_trig(two, opts)?;
        let q = iprime_quartic(two, opts)?;
        entries.push(SuiteEntry::gate(IdentityReport::new(
            "iprime_at_2_trig_eq_quartic",
            t.value,
            q.value,
            1e-9,
            t.evaluations + q.evaluations,
        )));
    }

    // --- Quartic algebra ---------------------------------------------------
    let mut worst_disc = 0.0f64;
    let mut worst_sum = 0.0f64;
    for _ in 0..100 {
        let l = rng.gen_range(-0.9..=10.0);
        let coeffs = quartic_coeffs(Lambda::new(l)?);
        worst_disc = worst_disc.max((quartic_discriminant(&coeffs) - 16.0).abs());
        worst_sum = worst_sum.max((coeffs.c0 + coeffs.c2 + coeffs.c4 - 4.0).abs());
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "discriminant_16",
        worst_disc,
        1e-9,
        0,
    )));
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "quartic_coefficient_sum",
        worst_sum,
        1e-10,
        0,
    )));

    let mut worst_root = 0.0f64;
    let mut sampled = 0;
    while sampled < 100 {
        let l: f64 = rng.gen_range(-0.9..=10.0);
        if l.abs() < 1e-3 || (l - 2.0).abs() < 1e-3 {
            continue;
        }
        sampled += 1;
        let lambda = Lambda::new(l)?;
        let coeffs = quartic_coeffs(lambda);
        let roots = quartic_roots(lambda)?;
        for u in [roots.u_plus, roots.u_minus] {
            let residual = (coeffs.c4 * u * u + coeffs.c2 * u + coeffs.c0).abs();
            worst_root = worst_root.max(residual);
        }
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "quartic_root_residual",
        worst_root,
        1e-9,
        0,
    )));

    // --- Pointwise integrand identities ------------------------------------
    let mut worst_factorization = 0.0f64;
    for _ in 0..100 {
        let theta: f64 = rng.gen_range(0.0..=FRAC_PI_2);
        let l: f64 = rng.gen_range(0.0..=5.0);
        let cos = theta.cos();
        let g = 1.0 + l * cos;
        let direct = g * g - cos * cos;
        let half_sin = (0.5 * theta).sin();
        let factored = (2.0 * half_sin * half_sin + l * cos) * (1.0 + (l + 1.0) * cos);
        worst_factorization = worst_factorization.max(rel_dev(factored, direct));
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "denominator_factorization",
        worst_factorization,
        1e-13,
        0,
    )));

    // Weierstrass substitution: the quartic integrand at t = tan(θ/2) must
    // equal the trig integrand times dθ/dt = 2/(1+t²).
    let mut worst_weierstrass = 0.0f64;
    for _ in 0..200 {
        let theta: f64 = rng.gen_range(0.05..=1.5);
        let l: f64 = rng.gen_range(0.05..=5.0);
        let t = (0.5 * theta).tan();
        let t2 = t * t;
        let coeffs = quartic_coeffs(Lambda::new(l)?);
        let q = coeffs.eval(t);
        let one_minus = 1.0 - t2;
        let quartic_side =
            2.0 * one_minus * one_minus / ((1.0 + t2) * ((1.0 + l) + (1.0 - l) * t2) * q.sqrt());
        let trig_side = iprime_integrand(theta, l) * 2.0 / (1.0 + t2);
        worst_weierstrass = worst_weierstrass.max(rel_dev(quartic_side, trig_side));
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "weierstrass_substitution",
        worst_weierstrass,
        1e-12,
        0,
    )));

    // --- Elliptic kernels against their defining integrals ------------------
    let oracle_opts = oracle_options(opts);
    let grid_5 = |lo: f64, hi: f64| -> Vec<f64> {
        (0..5).map(|i| lo + (hi - lo) * i as f64 / 4.0).collect()
    };
    let phis = grid_5(0.1, 1.4);
    let ms = grid_5(-1.0, 0.9);
    let ns = grid_5(-1.0, 0.8);

    let mut worst_f = 0.0f64;
    let mut f_evals = 0u64;
    for &phi in &phis {
        for &m in &ms {
            let oracle = integrate_tanh_sinh(
                |th: f64| 1.0 / (1.0 - m * th.sin().powi(2)).sqrt(),
                0.0,
                phi,
                &oracle_opts,
            )?;
            f_evals += oracle.evaluations;
            worst_f = worst_f.max(rel_dev(ellip_f(phi, m)?, oracle.value));
        }
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "elliptic_f_defining_integral",
        worst_f,
        1e-10,
        f_evals,
    )));

    let mut worst_pi = 0.0f64;
    let mut pi_evals = 0u64;
    for &n in &ns {
        for &phi in &phis {
            for &m in &ms {
                if n * phi.sin().powi(2) >= 1.0 {
                    continue; // pole on the path: outside both domains
                }
                let oracle = integrate_tanh_sinh(
                    |th: f64| {
                        let s2 = th.sin().powi(2);
                        1.0 / ((1.0 - n * s2) * (1.0 - m * s2).sqrt())
                    },
                    0.0,
                    phi,
                    &oracle_opts,
                )?;
                pi_evals += oracle.evaluations;
                worst_pi = worst_pi.max(rel_dev(ellip_pi(n, phi, m)?, oracle.value));
            }
        }
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "elliptic_pi_defining_integral",
        worst_pi,
        1e-10,
        pi_evals,
    )));

    // --- Carlson invariants -------------------------------------------------
    let mut worst_homogeneity = 0.0f64;
    let mut worst_degeneracy = 0.0f64;
    for _ in 0..20 {
        let x: f64 = rng.gen_range(0.1..=10.0);
        let y: f64 = rng.gen_range(0.1..=10.0);
        let z: f64 = rng.gen_range(0.1..=10.0);
        let p: f64 = rng.gen_range(0.1..=10.0);
        let k: f64 = rng.gen_range(0.5..=2.0);

        let rf_base = rf(real(x), real(y), real(z))?;
        let rf_scaled = rf(real(k * x), real(k * y), real(k * z))?;
        worst_homogeneity = worst_homogeneity.max(rel_dev_c(rf_scaled * k.sqrt(), rf_base));

        let rj_base = rj(real(x), real(y), real(z), real(p))?;
        let rj_scaled = rj(real(k * x), real(k * y), real(k * z), real(k * p))?;
        worst_homogeneity = worst_homogeneity.max(rel_dev_c(rj_scaled * k.powf(1.5), rj_base));

        let rc_direct = rc(real(x), real(y))?;
        let rc_via_rf = rf(real(x), real(y), real(y))?;
        worst_degeneracy = worst_degeneracy.max(rel_dev_c(rc_direct, rc_via_rf));

        let rd_direct = rd(real(x), real(y), real(z))?;
        let rd_via_rj = rj(real(x), real(y), real(z), real(z))?;
        worst_degeneracy = worst_degeneracy.max(rel_dev_c(rd_direct, rd_via_rj));
    }
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "carlson_homogeneity",
        worst_homogeneity,
        1e-13,
        0,
    )));
    entries.push(SuiteEntry::gate(IdentityReport::from_deviation(
        "carlson_degeneracy",
        worst_degeneracy,
        1e-13,
        0,
    )));

    // --- Endpoint asymptotics: completion gates ----------------------------
    for endpoint in [0.0, 2.0] {
        let fit = endpoint_asymptotics(endpoint, opts)?;
        let id = if endpoint == 0.0 {
            "asymptotics_endpoint_0_completes"
        } else {
            "asymptotics_endpoint_2_completes"
        };
        // Completion gate only: the fit must exist with a finite residual.
        // Which model wins is a measurement, not an identity.
        let residual_ok = fit.fit_residual.is_finite();
        entries.push(SuiteEntry::gate(IdentityReport {
            identity_id: id.to_string(),
            lhs: fit.fit_residual,
            rhs_exact: 0.0,
            abs_error: fit.fit_residual,
            tolerance: 1e3,
            passed: residual_ok && fit.fit_residual <= 1e3,
            evaluations: 0,
        }));
    }

    entries.sort_by(|a, b| a.report.identity_id.cmp(&b.report.identity_id));
    Ok(entries)
}
