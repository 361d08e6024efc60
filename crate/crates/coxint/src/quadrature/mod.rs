//! One-dimensional quadrature.
//!
//! Two engines with one result type:
//!
//! * [`integrate_adaptive`] — globally adaptive Gauss–Kronrod (G7/K15) with
//!   interval bisection, for integrands smooth on the closed interval.
//! * [`integrate_tanh_sinh`] — tanh–sinh (double-exponential) quadrature,
//!   for integrands with integrable endpoint singularities. Nodes cluster
//!   double-exponentially toward the endpoints and are generated as exact
//!   offsets from each endpoint, so 1/√x-type singularities at an endpoint
//!   that is exactly representable (e.g. 0) are resolved to full precision.
//! * [`integrate_improper`] — dispatcher: describes the endpoints with
//!   [`EndpointSpec`] and routes each piece to the right engine.

mod gauss_kronrod;
mod tanh_sinh;

pub use gauss_kronrod::integrate_adaptive;
pub use tanh_sinh::integrate_tanh_sinh;

use serde::Serialize;

use crate::error::{Error, Result};

/// Tolerances and work budgets shared by both quadrature engines.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    /// Absolute tolerance on the integral value.
    pub abs_tol: f64,
    /// Relative tolerance on the integral value.
    pub rel_tol: f64,
    /// Maximum number of interval bisections (adaptive engine).
    pub max_subdivisions: usize,
    /// Maximum level-doubling depth (tanh–sinh engine); level k uses step
    /// 2^−k in the transformed variable.
    pub max_level: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
            max_subdivisions: 2000,
            max_level: 12,
        }
    }
}

impl QuadratureOptions {
    /// Rejects tolerances and budgets that cannot drive a computation.
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::InvalidOptions {
                reason: "abs_tol must be finite and positive",
            });
        }
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidOptions {
                reason: "rel_tol must be finite and positive",
            });
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidOptions {
                reason: "max_subdivisions must be at least 1",
            });
        }
        if self.max_level == 0 {
            return Err(Error::InvalidOptions {
                reason: "max_level must be at least 1",
            });
        }
        Ok(())
    }

    /// The acceptance threshold for a current value estimate.
    pub(crate) fn tolerance_for(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Outcome of a quadrature run.
///
/// Exhausting the work budget is reported through `converged = false` rather
/// than an error: the value and its estimated error are still the best
/// available and often still useful to the caller.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadratureResult {
    /// Estimate of the integral.
    pub value: f64,
    /// Estimated absolute error of `value`.
    pub error_estimate: f64,
    /// Number of integrand evaluations consumed.
    pub evaluations: u64,
    /// Whether the error estimate met the requested tolerance in budget.
    pub converged: bool,
}

impl QuadratureResult {
    /// Combines results of two adjacent subintervals.
    pub(crate) fn join(self, other: QuadratureResult) -> QuadratureResult {
        QuadratureResult {
            value: self.value + other.value,
            error_estimate: self.error_estimate + other.error_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

/// Behaviour of the integrand at one endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    /// Finite and smooth up to the endpoint: safe for Gauss–Kronrod.
    Smooth,
    /// Unbounded (or with unbounded derivatives) but integrable, e.g. a
    /// 1/√x or log x blow-up: needs double-exponential node clustering.
    IntegrableSingularity,
}

/// Endpoint classification for [`integrate_improper`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndpointSpec {
    pub left: Endpoint,
    pub right: Endpoint,
}

impl EndpointSpec {
    /// Smooth at both ends.
    pub fn smooth() -> Self {
        Self {
            left: Endpoint::Smooth,
            right: Endpoint::Smooth,
        }
    }

    /// Integrable singularity at the left endpoint only.
    pub fn left_singular() -> Self {
        Self {
            left: Endpoint::IntegrableSingularity,
            right: Endpoint::Smooth,
        }
    }

    /// Integrable singularity at the right endpoint only.
    pub fn right_singular() -> Self {
        Self {
            left: Endpoint::Smooth,
            right: Endpoint::IntegrableSingularity,
        }
    }

    /// Integrable singularities at both endpoints.
    pub fn both_singular() -> Self {
        Self {
            left: Endpoint::IntegrableSingularity,
            right: Endpoint::IntegrableSingularity,
        }
    }
}

/// Integrates `f` over `[a, b]`, routing around the endpoint behaviour
/// declared in `spec`.
///
/// A singular endpoint gets the tanh–sinh engine on the half interval next
/// to it (tanh–sinh never samples the endpoint itself); a smooth stretch
/// gets adaptive Gauss–Kronrod. With singularities at both ends a single
/// tanh–sinh pass covers the whole interval.
pub fn integrate_improper<F>(
    f: F,
    a: f64,
    b: f64,
    spec: EndpointSpec,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    opts.validate()?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidInterval { a, b });
    }
    let mid = 0.5 * (a + b);
    match (spec.left, spec.right) {
        (Endpoint::Smooth, Endpoint::Smooth) => integrate_adaptive(f, a, b, opts),
        (Endpoint::IntegrableSingularity, Endpoint::Smooth) => {
            let near = integrate_tanh_sinh(&f, a, mid, opts)?;
            let far = integrate_adaptive(&f, mid, b, opts)?;
            Ok(near.join(far))
        }
        (Endpoint::Smooth, Endpoint::IntegrableSingularity) => {
            let far = integrate_adaptive(&f, a, mid, opts)?;
            let near = integrate_tanh_sinh(&f, mid, b, opts)?;
            Ok(far.join(near))
        }
        (Endpoint::IntegrableSingularity, Endpoint::IntegrableSingularity) => {
            integrate_tanh_sinh(f, a, b, opts)
        }
    }
}
