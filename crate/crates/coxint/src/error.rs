//! Error type shared across the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while evaluating an integral or an elliptic
/// function.
///
/// Numerical *non-convergence within budget* is deliberately not an error:
/// quadrature routines report it through `QuadratureResult::converged` so the
/// caller still gets the best available value and error estimate. `Error` is
/// reserved for conditions where no meaningful value exists (domain
/// violations, non-finite integrand samples, iteration caps in the Carlson
/// duplication loop).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The integrand returned NaN or ±∞ at a quadrature node.
    #[error("integrand evaluated to a non-finite value at x = {abscissa:e}")]
    EvaluationFailure { abscissa: f64 },

    /// Tolerances or budgets that make no sense (negative, zero, NaN).
    #[error("invalid options: {reason}")]
    InvalidOptions { reason: &'static str },

    /// Integration interval with `a >= b` or a non-finite endpoint.
    #[error("invalid integration interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    /// Carlson integral arguments outside the principal-branch domain
    /// (an argument on the negative real axis, or too many zero arguments).
    #[error("Carlson argument domain violation: {reason}")]
    CarlsonDomain { reason: &'static str },

    /// RJ with real arguments and `p < 0` is a Cauchy principal value, which
    /// this crate does not compute.
    #[error("RJ with p on the negative real axis is a principal-value case and is not supported")]
    CarlsonPrincipalValue,

    /// The duplication iteration failed to reach its tolerance.
    #[error("Carlson duplication iteration did not converge within {max_iterations} iterations")]
    CarlsonNonConvergence { max_iterations: usize },

    /// Legendre amplitude outside the supported range.
    #[error("amplitude {phi} outside the supported range (|phi| <= pi/2 real, or >= 0 imaginary)")]
    AmplitudeOutOfRange { phi: f64 },

    /// Amplitudes with both a real and an imaginary part are not supported.
    #[error("amplitude must be real or purely imaginary, got {re} + {im}i")]
    ComplexAmplitudeUnsupported { re: f64, im: f64 },

    /// `1 - m sin^2` (or `1 + m sinh^2`) vanishes or turns negative on the
    /// integration path.
    #[error("elliptic radicand is not positive on the integration path (m = {m})")]
    RadicandNonPositive { m: f64 },

    /// The third-kind characteristic puts a pole on the integration path.
    #[error("third-kind pole on the integration path (n = {n})")]
    PoleOnPath { n: f64 },

    /// λ outside the domain required by the requested operation.
    #[error("lambda = {value} outside required domain: {required}")]
    LambdaOutOfDomain { value: f64, required: &'static str },

    /// An arccos argument left [-1, 1] by more than the roundoff guard.
    #[error("arccos argument {value} outside [-1, 1] beyond the roundoff guard")]
    ArccosArgOutOfRange { value: f64 },

    /// θ outside [0, π/2].
    #[error("theta = {theta} outside [0, pi/2]")]
    ThetaOutOfRange { theta: f64 },

    /// The quartic degenerates (c4 = 0 at λ ∈ {0, 2}), so the stated root
    /// formulas do not apply.
    #[error("quartic degenerates at lambda = {lambda}: roots require lambda not in {{0, 2}}")]
    DegenerateQuartic { lambda: f64 },

    /// The quartic radicand Q(t) lost positivity where it must be positive.
    #[error("quartic radicand Q(t) <= 0 at t = {t}")]
    QuarticNonPositive { t: f64 },

    /// λ in one of the closed-form exclusion zones (near 0, 1, 2) where the
    /// elliptic assembly is numerically meaningless.
    #[error("lambda = {lambda} inside a closed-form exclusion zone ({reason})")]
    ExclusionZone { lambda: f64, reason: &'static str },

    /// The assembled closed form should be real; its imaginary part exceeded
    /// the cancellation bound.
    #[error("closed form imaginary residual {residual:e} exceeds bound {bound:e}")]
    ImaginaryResidual { residual: f64, bound: f64 },
}
