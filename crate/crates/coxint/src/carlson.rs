//! Carlson symmetric elliptic integrals RF, RC, RD, RJ.
//!
//! Computed with the duplication-theorem iteration (Carlson 1995,
//! DLMF §19.36): each duplication step quarters the distance of the
//! arguments from their mean, after which a fifth-order Taylor tail in the
//! elementary symmetric functions finishes the job. All four functions
//! accept complex arguments off the negative real axis (principal branch of
//! every square root); relative accuracy is near machine precision for the
//! default tolerance.
//!
//! These are the natural computational kernels for Legendre's incomplete
//! integrals: F(φ|m) = sin φ · RF(cos²φ, 1 − m sin²φ, 1) and the analogous
//! RJ reduction of Π live in [`crate::legendre`].

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Convergence controls for the duplication iteration.
#[derive(Debug, Clone, Copy)]
pub struct CarlsonOptions {
    /// Target relative error of the Taylor tail.
    pub rel_tol: f64,
    /// Cap on duplication steps (each step quarters the spread, so the cap
    /// is generous; hitting it signals pathological input).
    pub max_iterations: usize,
}

impl Default for CarlsonOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_iterations: 100,
        }
    }
}

impl CarlsonOptions {
    fn validate(&self) -> Result<()> {
        if !(self.rel_tol.is_finite() && self.rel_tol > 0.0) {
            return Err(Error::InvalidOptions {
                reason: "rel_tol must be finite and positive",
            });
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidOptions {
                reason: "max_iterations must be at least 1",
            });
        }
        Ok(())
    }
}

fn is_zero(v: Complex64) -> bool {
    v.re == 0.0 && v.im == 0.0
}

fn on_negative_real_axis(v: Complex64) -> bool {
    v.im == 0.0 && v.re < 0.0
}

fn check_branch_cut(args: &[Complex64]) -> Result<()> {
    if args.iter().any(|&v| on_negative_real_axis(v)) {
        return Err(Error::CarlsonDomain {
            reason: "arguments on the negative real axis lie on the branch cut",
        });
    }
    if args.iter().any(|&v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::CarlsonDomain {
            reason: "arguments must be finite",
        });
    }
    Ok(())
}

fn max3(a: f64, b: f64, c: f64) -> f64 {
    a.max(b).max(c)
}

/// RF(x, y, z) = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z)) with default options.
pub fn rf(x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    rf_with(x, y, z, &CarlsonOptions::default())
}

/// RF with explicit convergence controls.
pub fn rf_with(
    x: Complex64,
    y: Complex64,
    z: Complex64,
    opts: &CarlsonOptions,
) -> Result<Complex64> {
    opts.validate()?;
    check_branch_cut(&[x, y, z])?;
    let zeros = [x, y, z].iter().filter(|v| is_zero(**v)).count();
    if zeros >= 2 {
        return Err(Error::CarlsonDomain {
            reason: "RF requires at most one zero argument",
        });
    }

    let a0 = (x + y + z) / 3.0;
    let q = (3.0 * opts.rel_tol).powf(-1.0 / 6.0)
        * max3((a0 - x).norm(), (a0 - y).norm(), (a0 - z).norm());

    let (mut xn, mut yn, mut zn, mut an) = (x, y, z, a0);
    let mut pow4 = 1.0f64;
    let mut n = 0usize;
    while pow4 * q >= an.norm() {
        if n >= opts.max_iterations {
            return Err(Error::CarlsonNonConvergence {
                max_iterations: opts.max_iterations,
            });
        }
        let (sx, sy, sz) = (xn.sqrt(), yn.sqrt(), zn.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        xn = (xn + lambda) * 0.25;
        yn = (yn + lambda) * 0.25;
        zn = (zn + lambda) * 0.25;
        an = (an + lambda) * 0.25;
        pow4 *= 0.25;
        n += 1;
    }

    let xs = (a0 - x) * pow4 / an;
    let ys = (a0 - y) * pow4 / an;
    let zs = -xs - ys;
    let e2 = xs * ys - zs * zs;
    let e3 = xs * ys * zs;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
    Ok(series / an.sqrt())
}

/// RC(x, y) = ½ ∫₀^∞ dt / ((t+y) √(t+x)), the degenerate case
/// RC(x, y) = RF(x, y, y).
///
/// `y` on the negative real axis is the Cauchy principal-value case and is
/// rejected with [`Error::CarlsonPrincipalValue`].
pub fn rc(x: Complex64, y: Complex64) -> Result<Complex64> {
    rc_with(x, y, &CarlsonOptions::default())
}

/// RC with explicit convergence controls.
pub fn rc_with(x: Complex64, y: Complex64, opts: &CarlsonOptions) -> Result<Complex64> {
    opts.validate()?;
    if on_negative_real_axis(y) {
        return Err(Error::CarlsonPrincipalValue);
    }
    check_branch_cut(&[x, y])?;
    if is_zero(y) {
        return Err(Error::CarlsonDomain {
            reason: "RC requires y != 0",
        });
    }

    let a0 = (x + 2.0 * y) / 3.0;
    let q = (3.0 * opts.rel_tol).powf(-1.0 / 8.0) * (a0 - x).norm();

    let (mut xn, mut yn, mut an) = (x, y, a0);
    let mut pow4 = 1.0f64;
    let mut n = 0usize;
    while pow4 * q >= an.norm() {
        if n >= opts.max_iterations {
            return Err(Error::CarlsonNonConvergence {
                max_iterations: opts.max_iterations,
            });
        }
        let lambda = 2.0 * xn.sqrt() * yn.sqrt() + yn;
        xn = (xn + lambda) * 0.25;
        yn = (yn + lambda) * 0.25;
        an = (an + lambda) * 0.25;
        pow4 *= 0.25;
        n += 1;
    }

    let s = (y - a0) * pow4 / an;
    let s2 = s * s;
    let series = 1.0
        + s2 * (3.0 / 10.0)
        + s2 * s * (1.0 / 7.0)
        + s2 * s2 * (3.0 / 8.0)
        + s2 * s2 * s * (9.0 / 22.0)
        + s2 * s2 * s2 * (159.0 / 208.0)
        + s2 * s2 * s2 * s * (9.0 / 8.0);
    Ok(series / an.sqrt())
}

/// RD(x, y, z) = (3/2) ∫₀^∞ dt / ((t+z) √((t+x)(t+y)(t+z))), the degenerate
/// case RJ(x, y, z, z).
pub fn rd(x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    rd_with(x, y, z, &CarlsonOptions::default())
}

/// RD with explicit convergence controls.
pub fn rd_with(
    x: Complex64,
    y: Complex64,
    z: Complex64,
    opts: &CarlsonOptions,
) -> Result<Complex64> {
    opts.validate()?;
    check_branch_cut(&[x, y, z])?;
    if is_zero(z) {
        return Err(Error::CarlsonDomain {
            reason: "RD requires z != 0",
        });
    }
    if is_zero(x) && is_zero(y) {
        return Err(Error::CarlsonDomain {
            reason: "RD requires at most one of x, y zero",
        });
    }

    let a0 = (x + y + 3.0 * z) / 5.0;
    let q = (0.25 * opts.rel_tol).powf(-1.0 / 6.0)
        * max3((a0 - x).norm(), (a0 - y).norm(), (a0 - z).norm());

    let (mut xn, mut yn, mut zn, mut an) = (x, y, z, a0);
    let mut pow4 = 1.0f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut n = 0usize;
    while pow4 * q >= an.norm() {
        if n >= opts.max_iterations {
            return Err(Error::CarlsonNonConvergence {
                max_iterations: opts.max_iterations,
            });
        }
        let (sx, sy, sz) = (xn.sqrt(), yn.sqrt(), zn.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        sum += pow4 / (sz * (zn + lambda));
        xn = (xn + lambda) * 0.25;
        yn = (yn + lambda) * 0.25;
        zn = (zn + lambda) * 0.25;
        an = (an + lambda) * 0.25;
        pow4 *= 0.25;
        n += 1;
    }

    let xs = (a0 - x) * pow4 / an;
    let ys = (a0 - y) * pow4 / an;
    let zs = -(xs + ys) / 3.0;
    let e2 = xs * ys - 6.0 * zs * zs;
    let e3 = (3.0 * xs * ys - 8.0 * zs * zs) * zs;
    let e4 = 3.0 * (xs * ys - zs * zs) * zs * zs;
    let e5 = xs * ys * zs * zs * zs;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(pow4 * an.powf(-1.5) * series + 3.0 * sum)
}

/// RJ(x, y, z, p) = (3/2) ∫₀^∞ dt / ((t+p) √((t+x)(t+y)(t+z))).
///
/// Real arguments with `p < 0` define a Cauchy principal value, which this
/// routine rejects with [`Error::CarlsonPrincipalValue`].
pub fn rj(x: Complex64, y: Complex64, z: Complex64, p: Complex64) -> Result<Complex64> {
    rj_with(x, y, z, p, &CarlsonOptions::default())
}

/// RJ with explicit convergence controls.
pub fn rj_with(
    x: Complex64,
    y: Complex64,
    z: Complex64,
    p: Complex64,
    opts: &CarlsonOptions,
) -> Result<Complex64> {
    opts.validate()?;
    if on_negative_real_axis(p) {
        return Err(Error::CarlsonPrincipalValue);
    }
    check_branch_cut(&[x, y, z, p])?;
    if is_zero(p) {
        return Err(Error::CarlsonDomain {
            reason: "RJ requires p != 0",
        });
    }
    let zeros = [x, y, z].iter().filter(|v| is_zero(**v)).count();
    if zeros >= 2 {
        return Err(Error::CarlsonDomain {
            reason: "RJ requires at most one of x, y, z zero",
        });
    }

    let a0 = (x + y + z + 2.0 * p) / 5.0;
    let delta = (p - x) * (p - y) * (p - z);
    let q = (0.25 * opts.rel_tol).powf(-1.0 / 6.0)
        * max3((a0 - x).norm(), (a0 - y).norm(), (a0 - z).norm()).max((a0 - p).norm());

    let (mut xn, mut yn, mut zn, mut pn, mut an) = (x, y, z, p, a0);
    let mut pow4 = 1.0f64;
    let mut pow64 = 1.0f64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut n = 0usize;
    while pow4 * q >= an.norm() {
        if n >= opts.max_iterations {
            return Err(Error::CarlsonNonConvergence {
                max_iterations: opts.max_iterations,
            });
        }
        let (sx, sy, sz, sp) = (xn.sqrt(), yn.sqrt(), zn.sqrt(), pn.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = pow64 * delta / (d * d);
        sum += pow4 * rc_with(Complex64::new(1.0, 0.0), 1.0 + e, opts)? / d;
        xn = (xn + lambda) * 0.25;
        yn = (yn + lambda) * 0.25;
        zn = (zn + lambda) * 0.25;
        pn = (pn + lambda) * 0.25;
        an = (an + lambda) * 0.25;
        pow4 *= 0.25;
        pow64 /= 64.0;
        n += 1;
    }

    let xs = (a0 - x) * pow4 / an;
    let ys = (a0 - y) * pow4 / an;
    let zs = (a0 - z) * pow4 / an;
    let ps = -(xs + ys + zs) / 2.0;
    let e2 = xs * ys + ys * zs + zs * xs - 3.0 * ps * ps;
    let e3 = xs * ys * zs + 2.0 * e2 * ps + 4.0 * ps * ps * ps;
    let e4 = (2.0 * xs * ys * zs + e2 * ps + 3.0 * ps * ps * ps) * ps;
    let e5 = xs * ys * zs * ps * ps;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(pow4 * an.powf(-1.5) * series + 6.0 * sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_close(got: Complex64, want: Complex64, tol: f64) {
        assert!(
            (got - want).norm() <= tol * want.norm().max(1.0),
            "got {got}, want {want}"
        );
    }

    #[test]
    fn rf_special_values() {
        // RF(1, 1, 1) = 1 and RF(0, 1, 1) = π/2 from the defining integral.
        assert_close(rf(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap(), c(1.0, 0.0), 1e-15);
        assert_close(
            rf(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap(),
            c(std::f64::consts::FRAC_PI_2, 0.0),
            1e-15,
        );
    }

    #[test]
    fn rc_log_identity() {
        // For x > y > 0, RC(x, y) = artanh(√((x−y)/x)) / √(x−y);
        // at x = 9/4, y = 2 this collapses to ln 2.
        let got = rc(c(2.25, 0.0), c(2.0, 0.0)).unwrap();
        assert_close(got, c(std::f64::consts::LN_2, 0.0), 1e-14);
    }

    #[test]
    fn rd_normalization() {
        // RD(1, 1, 1) = (3/2) ∫₀^∞ (t+1)^{-5/2} dt = 1.
        assert_close(rd(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap(), c(1.0, 0.0), 1e-15);
    }

    #[test]
    fn rj_reduces_to_rd() {
        // RJ(x, y, z, z) = RD(x, y, z).
        let x = c(0.3, 0.0);
        let y = c(1.7, 0.0);
        let z = c(2.4, 0.0);
        assert_close(rj(x, y, z, z).unwrap(), rd(x, y, z).unwrap(), 1e-14);
    }

    #[test]
    fn branch_cut_and_zero_rejections() {
        assert!(matches!(
            rf(c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::CarlsonDomain { .. })
        ));
        assert!(matches!(
            rf(c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)),
            Err(Error::CarlsonDomain { .. })
        ));
        assert!(matches!(rc(c(1.0, 0.0), c(-2.0, 0.0)), Err(Error::CarlsonPrincipalValue)));
        assert!(matches!(
            rj(c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(-0.5, 0.0)),
            Err(Error::CarlsonPrincipalValue)
        ));
        assert!(matches!(
            rd(c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)),
            Err(Error::CarlsonDomain { .. })
        ));
    }
}
