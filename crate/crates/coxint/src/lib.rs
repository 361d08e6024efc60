//! Numerical evaluation of the parametric integral family
//!
//! ```text
//! I(λ) = ∫₀^{π/2} arccos( cos θ / (1 + λ cos θ) ) dθ,        λ > −1,
//! ```
//!
//! its derivative I′(λ) in three independent representations, and the exact
//! identities that connect them.
//!
//! The family interpolates between two classical integrals that evaluate to
//! rational multiples of π²: I(0) = π²/8 and I(2) = 5π²/24. Differentiating
//! under the integral sign gives a trigonometric integral for I′(λ); the
//! Weierstrass substitution t = tan(θ/2) turns it into a quartic-radical
//! integral; and reducing that quartic yields a closed form in incomplete
//! elliptic integrals F and Π with pure-imaginary amplitude. All three
//! representations are implemented and cross-checked, along with the exact
//! values
//!
//! ```text
//! ∫₀² I′(s) ds = I(2) − I(0) = π²/12
//! ```
//!
//! (as an improper integral and as a 2-D iterated integral in both orders).
//!
//! # Modules
//!
//! * [`quadrature`] — adaptive Gauss–Kronrod integration for smooth
//!   integrands, tanh–sinh (double-exponential) integration for integrable
//!   endpoint singularities, and an improper-integral wrapper.
//! * [`carlson`] — Carlson symmetric elliptic integrals RF, RC, RD, RJ over
//!   real and complex arguments via duplication iteration.
//! * [`legendre`] — Legendre-form incomplete elliptic integrals F(φ|m) and
//!   Π(n;φ|m) for real and pure-imaginary amplitudes, built on [`carlson`].
//! * [`coxeter`] — the integral family itself: I, the three representations
//!   of I′, the quartic algebra, the special values A, B, C, the identity
//!   verification suite, and endpoint-asymptotics diagnostics.
//!
//! # Example
//!
//! ```
//! use coxint::coxeter::{eval_i, iprime_trig, Lambda};
//! use coxint::quadrature::QuadratureOptions;
//!
//! let opts = QuadratureOptions::default();
//! let lambda = Lambda::new(2.0).unwrap();
//! let i2 = eval_i(lambda, &opts).unwrap();
//! let target = 5.0 * std::f64::consts::PI.powi(2) / 24.0;
//! assert!((i2.value - target).abs() < 1e-9);
//!
//! // I'(2) is finite: the integrand's denominator is ≥ 1 on [0, π/2].
//! let d2 = iprime_trig(lambda, &opts).unwrap();
//! assert!(d2.value.is_finite() && d2.value > 0.0);
//! ```

pub mod carlson;
pub mod coxeter;
pub mod error;
pub mod legendre;
pub mod quadrature;

pub use error::{Error, Result};
pub use num_complex::Complex64;
