//! Algebra of the biquadratic radicand produced by the Weierstrass
//! substitution t = tan(θ/2) in the trig representation of I′(λ):
//!
//! ```text
//! Q(t) = (λ²+2λ) + (4−2λ²)·t² + (λ²−2λ)·t⁴
//! ```
//!
//! Viewed as a quadratic in u = t², its discriminant is the constant 16 for
//! every λ, which is what makes the roots — and with them the reduction of
//! the quartic integral to elliptic form — simple rational functions of λ.

use serde::Serialize;

use crate::error::{Error, Result};

use super::Lambda;

/// Coefficients of Q(t) = c0 + c2·t² + c4·t⁴, plus the companion constant
/// a = λ²−1 used by the elliptic reduction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuarticCoefficients {
    /// λ² + 2λ.
    pub c0: f64,
    /// 4 − 2λ².
    pub c2: f64,
    /// λ² − 2λ.
    pub c4: f64,
    /// λ² − 1.
    pub a: f64,
}

impl QuarticCoefficients {
    /// Q(t).
    pub fn eval(&self, t: f64) -> f64 {
        let t2 = t * t;
        self.c0 + t2 * (self.c2 + t2 * self.c4)
    }
}

/// Roots of c4·u² + c2·u + c0 = 0 in the variable u = t².
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuarticRoots {
    /// u₊ = λ/(λ−2).
    pub u_plus: f64,
    /// u₋ = (λ+2)/λ.
    pub u_minus: f64,
}

/// Coefficients of Q(t) for the given λ.
pub fn quartic_coeffs(lambda: Lambda) -> QuarticCoefficients {
    let l = lambda.value();
    QuarticCoefficients {
        c0: l * l + 2.0 * l,
        c2: 4.0 - 2.0 * l * l,
        c4: l * l - 2.0 * l,
        a: l * l - 1.0,
    }
}

/// Discriminant c2² − 4·c4·c0 of Q as a quadratic in u = t².
///
/// Algebraically this is 16 for every λ:
/// (4−2λ²)² − 4(λ²−2λ)(λ²+2λ) = 16 − 16λ² + 4λ⁴ − 4(λ⁴−4λ²) = 16.
pub fn quartic_discriminant(coeffs: &QuarticCoefficients) -> f64 {
    coeffs.c2 * coeffs.c2 - 4.0 * coeffs.c4 * coeffs.c0
}

/// The two roots u± of the quadratic-in-u form of Q, in the simplified
/// forms u₊ = λ/(λ−2) and u₋ = (λ+2)/λ.
///
/// At λ ∈ {0, 2} the leading coefficient c4 = λ(λ−2) vanishes (Q degenerates
/// to a quadratic in t) and the root formulas do not apply.
pub fn quartic_roots(lambda: Lambda) -> Result<QuarticRoots> {
    let l = lambda.value();
    if l == 0.0 || l == 2.0 {
        return Err(Error::DegenerateQuartic { lambda: l });
    }
    Ok(QuarticRoots {
        u_plus: l / (l - 2.0),
        u_minus: (l + 2.0) / l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(l: f64) -> Lambda {
        Lambda::new(l).unwrap()
    }

    #[test]
    fn coefficients_at_reference_lambdas() {
        // λ=1 → {3, 2, −1}, a=0; λ=2 → {8, −4, 0}, a=3.
        let one = quartic_coeffs(lam(1.0));
        assert_eq!((one.c0, one.c2, one.c4, one.a), (3.0, 2.0, -1.0, 0.0));
        let two = quartic_coeffs(lam(2.0));
        assert_eq!((two.c0, two.c2, two.c4, two.a), (8.0, -4.0, 0.0, 3.0));
    }

    #[test]
    fn coefficient_sum_is_four() {
        for l in [-0.9, -0.25, 0.0, 0.5, 1.0, 2.0, 3.5, 10.0] {
            let c = quartic_coeffs(lam(l));
            assert!((c.c0 + c.c2 + c.c4 - 4.0).abs() < 1e-10, "lambda = {l}");
        }
    }

    #[test]
    fn discriminant_is_sixteen() {
        for l in [-0.9, 0.1, 1.0, 1.9, 2.1, 5.0, 10.0] {
            let d = quartic_discriminant(&quartic_coeffs(lam(l)));
            assert!((d - 16.0).abs() < 1e-9, "lambda = {l}: {d}");
        }
    }

    #[test]
    fn roots_at_reference_lambdas() {
        // λ=3 → (3, 5/3); λ=1 → (−1, 3); λ=4 → (2, 3/2).
        let r3 = quartic_roots(lam(3.0)).unwrap();
        assert!((r3.u_plus - 3.0).abs() < 1e-15);
        assert!((r3.u_minus - 5.0 / 3.0).abs() < 1e-15);
        let r1 = quartic_roots(lam(1.0)).unwrap();
        assert!((r1.u_plus + 1.0).abs() < 1e-15);
        assert!((r1.u_minus - 3.0).abs() < 1e-15);
        let r4 = quartic_roots(lam(4.0)).unwrap();
        assert!((r4.u_plus - 2.0).abs() < 1e-15);
        assert!((r4.u_minus - 1.5).abs() < 1e-15);
    }

    #[test]
    fn roots_satisfy_the_quadratic() {
        for l in [-0.5, 0.3, 1.7, 2.5, 7.0] {
            let c = quartic_coeffs(lam(l));
            let r = quartic_roots(lam(l)).unwrap();
            for u in [r.u_plus, r.u_minus] {
                let residual = c.c4 * u * u + c.c2 * u + c.c0;
                assert!(residual.abs() < 1e-10, "lambda = {l}, u = {u}: {residual}");
            }
        }
    }

    #[test]
    fn degenerate_lambdas_are_rejected() {
        assert!(matches!(
            quartic_roots(lam(0.0)),
            Err(Error::DegenerateQuartic { .. })
        ));
        assert!(matches!(
            quartic_roots(lam(2.0)),
            Err(Error::DegenerateQuartic { .. })
        ));
    }
}
