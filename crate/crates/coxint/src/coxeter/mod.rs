//! The integral family I(λ), its derivative in three representations, the
//! special values A, B, C, and the exact identities connecting them.
//!
//! The representations of I′(λ):
//!
//! * **Trig** — differentiating under the integral sign:
//!   I′(λ) = ∫₀^{π/2} cos²θ / ((1+λcosθ) √((1+λcosθ)² − cos²θ)) dθ.
//! * **Quartic** — the Weierstrass substitution t = tan(θ/2) turns the trig
//!   form into 2 ∫₀¹ (1−t²)² / ((1+t²)((1+λ)+(1−λ)t²) √Q(t)) dt with the
//!   biquadratic Q(t) = (λ²+2λ) + (4−2λ²)t² + (λ²−2λ)t⁴ (see [`quartic`]).
//! * **ClosedForm** — incomplete elliptic integrals F and Π with
//!   pure-imaginary amplitude i·arcsinh(√(2−λ)/√λ), valid on 0 < λ < 2
//!   (see [`iprime_closed`]).

mod asymptotics;
mod identities;
mod quartic;

pub use asymptotics::{
    endpoint_asymptotics, endpoint_asymptotics_candidates, AsymptoticFit, AsymptoticModel,
};
pub use identities::{run_identity_suite, IdentityReport, SuiteEntry, SuiteStatus};
pub use quartic::{quartic_coeffs, quartic_discriminant, quartic_roots, QuarticCoefficients, QuarticRoots};

use std::cell::{Cell, RefCell};
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::legendre::{ellip_f_imag, ellip_pi_imag};
use crate::quadrature::{
    integrate_adaptive, integrate_improper, EndpointSpec, QuadratureOptions, QuadratureResult,
};

/// The deformation parameter of the family, constrained to λ > −1.
///
/// Individual operations impose tighter domains (e.g. the derivative
/// representations need λ > 0, the closed form 0 < λ < 2) and report
/// violations through their own errors.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Lambda(f64);

impl Lambda {
    /// Accepts any finite λ > −1.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > -1.0 {
            Ok(Lambda(value))
        } else {
            Err(Error::LambdaOutOfDomain {
                value,
                required: "finite and > -1",
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Lambda {
    type Error = Error;
    fn try_from(value: f64) -> Result<Self> {
        Lambda::new(value)
    }
}

impl std::fmt::Display for Lambda {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Which representation of I′ an integral-of-I′ evaluation should use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Trig,
    Quartic,
    ClosedForm,
}

/// A = ∫₀^{π/2} arccos(cosθ/(1+2cosθ)) dθ = 5π²/24.
pub fn target_a() -> f64 {
    5.0 * PI * PI / 24.0
}

/// B = ∫₀^{π/2} arccos(cosθ) dθ = π²/8.
pub fn target_b() -> f64 {
    PI * PI / 8.0
}

/// The classical value 11π²/72 associated with the integral C; whether the
/// clamped reading of C reproduces it is verified, not assumed.
pub fn target_c() -> f64 {
    11.0 * PI * PI / 72.0
}

/// A − B = π²/12, the exact value of ∫₀² I′(s) ds.
pub fn target_a_minus_b() -> f64 {
    PI * PI / 12.0
}

/// u(θ, λ) = cos θ / (1 + λ cos θ), the argument handed to arccos in I(λ).
///
/// Roundoff may push the mathematically-in-range value out of [−1, 1] by a
/// few ulp; excursions up to 1e-12 are clamped, anything larger is a domain
/// error (for λ < 0 the value genuinely exceeds 1 near θ = 0).
pub fn arccos_arg(theta: f64, lambda: Lambda) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::ThetaOutOfRange { theta });
    }
    let c = theta.cos();
    let u = c / (1.0 + lambda.value() * c);
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&u) {
        return Err(Error::ArccosArgOutOfRange { value: u });
    }
    Ok(u.clamp(-1.0, 1.0))
}

/// I(λ) = ∫₀^{π/2} arccos(u(θ, λ)) dθ by adaptive quadrature.
///
/// Defined for λ ≥ 0; for λ ∈ (−1, 0) the arccos argument exceeds 1 near
/// θ = 0 and the evaluation fails with the domain error from [`arccos_arg`].
pub fn eval_i(lambda: Lambda, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    // u(θ,λ) is maximal at θ = 0, so this check covers the whole interval.
    arccos_arg(0.0, lambda)?;
    let f = |theta: f64| match arccos_arg(theta, lambda) {
        Ok(u) => u.acos(),
        Err(_) => f64::NAN,
    };
    integrate_adaptive(f, 0.0, FRAC_PI_2, opts)
}

/// The trig-representation integrand of I′(λ):
/// cos²θ / ((1+λcosθ) √((1+λcosθ)² − cos²θ)).
///
/// The radicand factors as (1+(λ−1)cosθ)(1+(λ+1)cosθ); the first factor is
/// evaluated as 2sin²(θ/2) + λcosθ, which avoids the catastrophic
/// cancellation of 1 − cosθ near θ = 0 that dominates for small λ.
/// Returns NaN where the radicand is non-positive (λ ≤ 0 territory), which
/// the quadrature engines report as an evaluation failure.
pub(crate) fn iprime_integrand(theta: f64, lambda: f64) -> f64 {
    let c = theta.cos();
    let g = 1.0 + lambda * c;
    let half_sin = (0.5 * theta).sin();
    let factor_minus = 2.0 * half_sin * half_sin + lambda * c;
    let factor_plus = 1.0 + (lambda + 1.0) * c;
    let radicand = factor_minus * factor_plus;
    if radicand <= 0.0 {
        return f64::NAN;
    }
    c * c / (g * radicand.sqrt())
}

/// I′(λ) from the trig representation, λ > 0.
///
/// θ = 0 is treated as an improper endpoint: for small λ the integrand has a
/// boundary layer of width ~√(2λ) there (and at λ = 0 the integral
/// diverges), so the left half runs under tanh–sinh.
pub fn iprime_trig(lambda: Lambda, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let l = lambda.value();
    if l <= 0.0 {
        return Err(Error::LambdaOutOfDomain {
            value: l,
            required: "> 0 (the trig integrand is improper at lambda = 0)",
        });
    }
    integrate_improper(
        |theta| iprime_integrand(theta, l),
        0.0,
        FRAC_PI_2,
        EndpointSpec::left_singular(),
        opts,
    )
}

/// I′(λ) from the quartic representation
/// 2 ∫₀¹ (1−t²)² / ((1+t²)((1+λ)+(1−λ)t²) √Q(t)) dt, λ > 0.
///
/// Q(0) = λ²+2λ shrinks with λ, giving the same boundary layer at t = 0 as
/// the trig form has at θ = 0; t = 0 is handled as an improper endpoint.
pub fn iprime_quartic(lambda: Lambda, opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let l = lambda.value();
    if l <= 0.0 {
        return Err(Error::LambdaOutOfDomain {
            value: l,
            required: "> 0 (the quartic integrand is improper at lambda = 0)",
        });
    }
    let coeffs = quartic_coeffs(lambda);
    let f = move |t: f64| {
        let q = coeffs.eval(t);
        if q <= 0.0 {
            return f64::NAN;
        }
        let t2 = t * t;
        let one_minus = 1.0 - t2;
        2.0 * one_minus * one_minus / ((1.0 + t2) * ((1.0 + l) + (1.0 - l) * t2) * q.sqrt())
    };
    integrate_improper(f, 0.0, 1.0, EndpointSpec::left_singular(), opts)
}

/// Width of the guard bands around λ ∈ {0, 1, 2} inside which the closed
/// form is refused.
const CLOSED_FORM_GUARD: f64 = 1e-3;

/// Whether λ lies where [`iprime_closed`] refuses to evaluate.
pub fn in_closed_form_exclusion_zone(lambda: f64) -> bool {
    !(CLOSED_FORM_GUARD..=2.0 - CLOSED_FORM_GUARD).contains(&lambda)
        || (lambda - 1.0).abs() <= CLOSED_FORM_GUARD
}

/// I′(λ) in closed form:
///
/// ```text
/// I′(λ) = 2i/(√(2−λ)·λ·(λ²−1)) · √(1/(2+λ))
///         · [ λ(1+λ)·F(iψ|m) − 2( (λ²−1)·Π(n₁; iψ|m) + Π(n₂; iψ|m) ) ]
/// ```
///
/// with ψ = arcsinh(√(2−λ)/√λ), m = λ²/(λ²−4), n₁ = −λ/(λ−2), and
/// n₂ = (λ−1)λ/((λ−2)(1+λ)). Valid on 0 < λ < 2; refused inside guard bands
/// of width 1e-3 around {0, 1, 2}, where the λ(λ²−1) prefactor makes the
/// assembly numerically meaningless (λ = 1 is a removable singularity of the
/// full expression, not of its parts). The assembled value must be real;
/// a residual imaginary part above 1e-9·(1+|result|) is an error.
pub fn iprime_closed(lambda: Lambda) -> Result<f64> {
    let l = lambda.value();
    if !(CLOSED_FORM_GUARD..=2.0 - CLOSED_FORM_GUARD).contains(&l) {
        return Err(Error::ExclusionZone {
            lambda: l,
            reason: "closed form is evaluated only for lambda in [1e-3, 2 - 1e-3]",
        });
    }
    if (l - 1.0).abs() <= CLOSED_FORM_GUARD {
        return Err(Error::ExclusionZone {
            lambda: l,
            reason: "the lambda^2 - 1 prefactor degenerates near lambda = 1",
        });
    }

    let sqrt_two_minus = (2.0 - l).sqrt();
    let psi = (sqrt_two_minus / l.sqrt()).asinh();
    let m = l * l / (l * l - 4.0);
    let n1 = -l / (l - 2.0);
    let n2 = (l - 1.0) * l / ((l - 2.0) * (1.0 + l));

    let f = ellip_f_imag(psi, m)?;
    let pi1 = ellip_pi_imag(n1, psi, m)?;
    let pi2 = ellip_pi_imag(n2, psi, m)?;

    let a = l * l - 1.0;
    let bracket = l * (1.0 + l) * f - 2.0 * (a * pi1 + pi2);
    let prefactor = Complex64::new(0.0, 2.0) / (sqrt_two_minus * l * a * (2.0 + l).sqrt());
    let value = prefactor * bracket;

    let bound = 1e-9 * (1.0 + value.re.abs());
    if value.im.abs() > bound {
        return Err(Error::ImaginaryResidual {
            residual: value.im.abs(),
            bound,
        });
    }
    Ok(value.re)
}

/// A = I(2) computed from its own literal integrand
/// arccos(cosθ/(1+2cosθ)); exact value 5π²/24.
pub fn coxeter_a(opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let f = |theta: f64| {
        let c = theta.cos();
        (c / (1.0 + 2.0 * c)).acos()
    };
    integrate_adaptive(f, 0.0, FRAC_PI_2, opts)
}

/// B = ∫₀^{π/2} arccos(cosθ) dθ; exact value π²/8.
pub fn coxeter_b(opts: &QuadratureOptions) -> Result<QuadratureResult> {
    integrate_adaptive(|theta: f64| theta.cos().acos(), 0.0, FRAC_PI_2, opts)
}

/// C = ∫ arccos((1−cosθ)/(2cosθ)) dθ under the clamping convention.
///
/// The argument (1−cosθ)/(2cosθ) exceeds 1 for θ > arccos(1/3) ≈ 1.23096,
/// where real arccos is undefined; the convention sets the integrand to 0
/// there, which is the same as integrating over [0, arccos(1/3)] only. The
/// integrand has a square-root vertical tangent where the argument reaches
/// 1, so the right endpoint runs under tanh–sinh.
pub fn coxeter_c(opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let theta_star = (1.0f64 / 3.0).acos();
    let f = |theta: f64| {
        let c = theta.cos();
        let arg = (1.0 - c) / (2.0 * c);
        if arg >= 1.0 {
            0.0
        } else {
            arg.acos()
        }
    };
    integrate_improper(f, 0.0, theta_star, EndpointSpec::right_singular(), opts)
}

/// C after the substitution θ ↦ π/2 − θ:
/// ∫ arccos((1−sinθ)/(2sinθ)) dθ under the same clamping convention, which
/// confines the support to [arcsin(1/3), π/2]. Must equal [`coxeter_c`].
pub fn coxeter_c_reflected(opts: &QuadratureOptions) -> Result<QuadratureResult> {
    let theta_star = (1.0f64 / 3.0).asin();
    let f = |theta: f64| {
        let s = theta.sin();
        let arg = (1.0 - s) / (2.0 * s);
        if arg >= 1.0 {
            0.0
        } else {
            arg.acos()
        }
    };
    integrate_improper(f, theta_star, FRAC_PI_2, EndpointSpec::left_singular(), opts)
}

/// Tolerances for the inner integral of a nested (iterated) evaluation:
/// the caller's budgets with the documented 1e-12/1e-10 inner tolerances,
/// never looser.
fn inner_options(opts: &QuadratureOptions) -> QuadratureOptions {
    QuadratureOptions {
        abs_tol: opts.abs_tol.min(1e-12),
        rel_tol: opts.rel_tol.min(1e-10),
        ..*opts
    }
}

/// Shared plumbing for integrands that are themselves quadratures: smuggles
/// the first inner error out of the closure and accumulates inner
/// evaluation counts.
struct InnerChannel {
    error: RefCell<Option<Error>>,
    evaluations: Cell<u64>,
}

impl InnerChannel {
    fn new() -> Self {
        Self {
            error: RefCell::new(None),
            evaluations: Cell::new(0),
        }
    }

    /// Unwraps an inner quadrature outcome inside an `Fn(f64) -> f64`
    /// integrand: stores the error (if any) and yields NaN so the outer
    /// engine stops at the failing node.
    fn absorb(&self, outcome: Result<QuadratureResult>) -> f64 {
        match outcome {
            Ok(r) => {
                self.evaluations.set(self.evaluations.get() + r.evaluations);
                r.value
            }
            Err(e) => {
                self.error.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }

    /// Rewrites the outer engine's NaN report into the stored inner error
    /// and adds the inner evaluation count to the result.
    fn resolve(self, outer: Result<QuadratureResult>) -> Result<QuadratureResult> {
        match (outer, self.error.into_inner()) {
            (_, Some(inner)) => Err(inner),
            (Ok(mut r), None) => {
                r.evaluations += self.evaluations.get();
                Ok(r)
            }
            (Err(e), None) => Err(e),
        }
    }
}

/// ∫₀^{λhi} I′(s) ds as an improper integral (left endpoint 0 is always
/// improper: I′ grows without bound as s → 0⁺), for 0 < λhi ≤ 2.
///
/// The chosen representation supplies the integrand. `ClosedForm` is
/// bridged with the trig representation inside its exclusion zones (near 0,
/// 1, 2), and for λhi = 2 both endpoints are treated as improper since the
/// closed form's endpoint behaviour is dominated by cancellation.
pub fn integral_of_iprime(
    lambda_hi: Lambda,
    rep: Representation,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult> {
    let hi = lambda_hi.value();
    if !(0.0 < hi && hi <= 2.0) {
        return Err(Error::LambdaOutOfDomain {
            value: hi,
            required: "0 < lambda_hi <= 2",
        });
    }
    opts.validate()?;
    let inner = inner_options(opts);
    let channel = InnerChannel::new();

    let integrand = |s: f64| -> f64 {
        let lambda = match Lambda::new(s) {
            Ok(l) => l,
            Err(_) => return f64::NAN,
        };
        match rep {
            Representation::Trig => channel.absorb(iprime_trig(lambda, &inner)),
            Representation::Quartic => channel.absorb(iprime_quartic(lambda, &inner)),
            Representation::ClosedForm => {
                if in_closed_form_exclusion_zone(s) {
                    channel.absorb(iprime_trig(lambda, &inner))
                } else {
                    match iprime_closed(lambda) {
                        Ok(v) => v,
                        Err(e) => {
                            channel.error.borrow_mut().get_or_insert(e);
                            f64::NAN
                        }
                    }
                }
            }
        }
    };

    let spec = if rep == Representation::ClosedForm && hi == 2.0 {
        EndpointSpec::both_singular()
    } else {
        EndpointSpec::left_singular()
    };
    let outer = integrate_improper(integrand, 0.0, hi, spec, opts);
    channel.resolve(outer)
}

/// Both orders of the iterated double integral
/// ∫₀² ∫₀^{π/2} cos²θ/((1+s cosθ)√((1+s cosθ)²−cos²θ)) dθ ds = π²/12.
///
/// Returns (θ-inner order, s-inner order). In the θ-inner order the outer
/// s-integral is improper at s = 0 (the inner integral is I′(s), which
/// diverges there); in the s-inner order everything is proper and the outer
/// θ-integral is smooth.
pub fn double_integral_orders(
    opts: &QuadratureOptions,
) -> Result<(QuadratureResult, QuadratureResult)> {
    opts.validate()?;
    let inner = inner_options(opts);

    // Order 1: inner over θ — the inner integral is exactly iprime_trig(s).
    let theta_inner = {
        let channel = InnerChannel::new();
        let f = |s: f64| match Lambda::new(s) {
            Ok(lambda) => channel.absorb(iprime_trig(lambda, &inner)),
            Err(_) => f64::NAN,
        };
        let outer = integrate_improper(f, 0.0, 2.0, EndpointSpec::left_singular(), opts);
        channel.resolve(outer)?
    };

    // Order 2: inner over s at fixed θ; the slice is smooth on [0, 2].
    let s_inner = {
        let channel = InnerChannel::new();
        let f = |theta: f64| {
            channel.absorb(integrate_adaptive(
                |s| iprime_integrand(theta, s),
                0.0,
                2.0,
                &inner,
            ))
        };
        let outer = integrate_adaptive(f, 0.0, FRAC_PI_2, opts);
        channel.resolve(outer)?
    };

    Ok((theta_inner, s_inner))
}

/// Verifies the Fubini identity: both iterated orders of the double
/// integral against the exact value π²/12.
///
/// The report's `lhs` is the θ-inner-order value; `abs_error` is the worse
/// of the two orders' deviations from π²/12, so `passed` certifies both.
pub fn double_integral_identity(opts: &QuadratureOptions) -> Result<IdentityReport> {
    let (theta_inner, s_inner) = double_integral_orders(opts)?;
    let exact = target_a_minus_b();
    let dev = (theta_inner.value - exact)
        .abs()
        .max((s_inner.value - exact).abs());
    let tolerance = 1e-6;
    Ok(IdentityReport {
        identity_id: "double_integral_pi2_over_12".to_string(),
        lhs: theta_inner.value,
        rhs_exact: exact,
        abs_error: dev,
        tolerance,
        passed: dev <= tolerance,
        evaluations: theta_inner.evaluations + s_inner.evaluations,
    })
}
