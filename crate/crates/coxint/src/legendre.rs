//! Legendre-form incomplete elliptic integrals, in the *parameter*
//! convention m = k²:
//!
//! ```text
//! F(φ|m)    = ∫₀^φ dθ / √(1 − m sin²θ)
//! Π(n;φ|m)  = ∫₀^φ dθ / ((1 − n sin²θ) √(1 − m sin²θ))
//! ```
//!
//! Both are evaluated through Carlson symmetric integrals:
//!
//! ```text
//! F(φ|m)   = sin φ · RF(cos²φ, 1 − m sin²φ, 1)
//! Π(n;φ|m) = F(φ|m) + (n/3) sin³φ · RJ(cos²φ, 1 − m sin²φ, 1, 1 − n sin²φ)
//! ```
//!
//! The same reductions hold verbatim for a pure-imaginary amplitude
//! φ = iψ, where sin(iψ) = i sinh ψ and cos²(iψ) = cosh²ψ turn every
//! Carlson argument into 1 + (·) sinh²ψ. For m < 0 or n < 0 those arguments
//! can leave the domain; the `_imag` entry points check for that and reject
//! rather than wander onto a branch cut.

use num_complex::Complex64;
use serde::Serialize;

use crate::carlson::{rf, rj};
use crate::error::{Error, Result};

/// Argument bundle (n, φ, m) for a third-kind integral, with φ allowed to be
/// real or purely imaginary. `n = 0` describes a first-kind integral.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EllipticArgs {
    /// Third-kind characteristic (0 for F).
    pub n: f64,
    /// Amplitude: real (`im == 0`) or purely imaginary (`re == 0`).
    pub phi: Complex64,
    /// Parameter m = k² (may be negative).
    pub m: f64,
}

impl EllipticArgs {
    /// Checks the amplitude shape and the path conditions (radicand positive
    /// and no third-kind pole along the whole integration path).
    pub fn validate(&self) -> Result<()> {
        if !self.n.is_finite() || !self.m.is_finite() {
            return Err(Error::InvalidOptions {
                reason: "n and m must be finite",
            });
        }
        if self.phi.im == 0.0 {
            check_real_path(self.n, self.phi.re, self.m).map(|_| ())
        } else if self.phi.re == 0.0 {
            check_imag_path(self.n, self.phi.im, self.m).map(|_| ())
        } else {
            Err(Error::ComplexAmplitudeUnsupported {
                re: self.phi.re,
                im: self.phi.im,
            })
        }
    }

    /// Evaluates Π(n; φ | m) (or F for n = 0), routing on the amplitude.
    pub fn evaluate(&self) -> Result<Complex64> {
        self.validate()?;
        if self.phi.im == 0.0 {
            ellip_pi(self.n, self.phi.re, self.m).map(|v| Complex64::new(v, 0.0))
        } else {
            ellip_pi_imag(self.n, self.phi.im, self.m)
        }
    }
}

/// Geometry of a validated real-amplitude path: sin, sin², cos², radicand at
/// the endpoint, and the sign carried by oddness.
struct RealPath {
    sign: f64,
    s: f64,
    s2: f64,
    c2: f64,
    radicand: f64,
}

fn check_real_path(n: f64, phi: f64, m: f64) -> Result<RealPath> {
    if !phi.is_finite() || phi.abs() > std::f64::consts::FRAC_PI_2 {
        return Err(Error::AmplitudeOutOfRange { phi });
    }
    let sign = if phi < 0.0 { -1.0 } else { 1.0 };
    let p = phi.abs();
    let s = p.sin();
    let s2 = s * s;
    let c = p.cos();
    let c2 = c * c;
    let radicand = 1.0 - m * s2;
    // 1 − m sin²θ is monotone in sin²θ, so positivity at the endpoint
    // implies positivity along the whole path; same for the pole factor.
    if radicand <= 0.0 {
        return Err(Error::RadicandNonPositive { m });
    }
    if n * s2 >= 1.0 {
        return Err(Error::PoleOnPath { n });
    }
    Ok(RealPath {
        sign,
        s,
        s2,
        c2,
        radicand,
    })
}

/// Geometry of a validated imaginary-amplitude path φ = iψ, ψ ≥ 0.
struct ImagPath {
    sh: f64,
    sh2: f64,
    ch2: f64,
    radicand: f64,
}

fn check_imag_path(n: f64, psi: f64, m: f64) -> Result<ImagPath> {
    if !psi.is_finite() || psi < 0.0 {
        return Err(Error::AmplitudeOutOfRange { phi: psi });
    }
    let sh = psi.sinh();
    let sh2 = sh * sh;
    let ch2 = 1.0 + sh2;
    // Along θ = it, sin²θ = −sinh²t, so the radicand is 1 + m sinh²t and the
    // pole factor 1 + n sinh²t; both are monotone in t, so checking the far
    // end of the path covers all of it.
    let radicand = 1.0 + m * sh2;
    if radicand <= 0.0 {
        return Err(Error::RadicandNonPositive { m });
    }
    if 1.0 + n * sh2 <= 0.0 {
        return Err(Error::PoleOnPath { n });
    }
    Ok(ImagPath {
        sh,
        sh2,
        ch2,
        radicand,
    })
}

/// Incomplete elliptic integral of the first kind F(φ|m), |φ| ≤ π/2.
pub fn ellip_f(phi: f64, m: f64) -> Result<f64> {
    let path = check_real_path(0.0, phi, m)?;
    let value = path.s
        * rf(
            Complex64::new(path.c2, 0.0),
            Complex64::new(path.radicand, 0.0),
            Complex64::new(1.0, 0.0),
        )?;
    Ok(path.sign * value.re)
}

/// Incomplete elliptic integral of the third kind Π(n;φ|m), |φ| ≤ π/2.
///
/// For n = 0 the third-kind term vanishes identically and the result equals
/// `ellip_f(phi, m)` exactly.
pub fn ellip_pi(n: f64, phi: f64, m: f64) -> Result<f64> {
    let path = check_real_path(n, phi, m)?;
    let x = Complex64::new(path.c2, 0.0);
    let y = Complex64::new(path.radicand, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let f_part = path.s * rf(x, y, one)?;
    let value = if n == 0.0 {
        f_part
    } else {
        let pole = Complex64::new(1.0 - n * path.s2, 0.0);
        f_part + (n / 3.0) * path.s * path.s2 * rj(x, y, one, pole)?
    };
    Ok(path.sign * value.re)
}

/// F(iψ|m), ψ ≥ 0: the first-kind integral along the imaginary axis. The
/// result is purely imaginary, returned as a complex number.
pub fn ellip_f_imag(psi: f64, m: f64) -> Result<Complex64> {
    let path = check_imag_path(0.0, psi, m)?;
    let sin_phi = Complex64::new(0.0, path.sh);
    let value = sin_phi
        * rf(
            Complex64::new(path.ch2, 0.0),
            Complex64::new(path.radicand, 0.0),
            Complex64::new(1.0, 0.0),
        )?;
    Ok(value)
}

/// Π(n; iψ|m), ψ ≥ 0: the third-kind integral along the imaginary axis.
/// The result is purely imaginary, returned as a complex number.
pub fn ellip_pi_imag(n: f64, psi: f64, m: f64) -> Result<Complex64> {
    let path = check_imag_path(n, psi, m)?;
    let x = Complex64::new(path.ch2, 0.0);
    let y = Complex64::new(path.radicand, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let sin_phi = Complex64::new(0.0, path.sh);
    let f_part = sin_phi * rf(x, y, one)?;
    if n == 0.0 {
        return Ok(f_part);
    }
    let pole = Complex64::new(1.0 + n * path.sh2, 0.0);
    // sin³(iψ) = (i sinh ψ)³ = i sinh ψ · (−sinh²ψ).
    let sin_cubed = -sin_phi * path.sh2;
    Ok(f_part + (n / 3.0) * sin_cubed * rj(x, y, one, pole)?)
}
