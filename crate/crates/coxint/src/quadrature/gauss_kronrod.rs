//! Globally adaptive Gauss–Kronrod quadrature on the G7/K15 pair.
//!
//! Each interval is scored by the classical QUADPACK error heuristic; the
//! interval with the largest estimated error is bisected until the global
//! error estimate meets the tolerance or the subdivision budget runs out.

// The node/weight tables keep their full published precision; the compiler
// rounds each literal to the nearest f64.
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

use super::{QuadratureOptions, QuadratureResult};

/// Abscissae of the 15-point Kronrod rule on [-1, 1]: odd entries are the
/// embedded 7-point Gauss nodes, even entries the Kronrod extension.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// Weights of the embedded 7-point Gauss rule.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Weights of the 15-point Kronrod rule.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One K15 application: returns (value, error estimate, evaluation count
/// added to `*evals`).
struct RuleOutcome {
    value: f64,
    error: f64,
}

fn sample<F: Fn(f64) -> f64>(f: &F, x: f64, evals: &mut u64) -> Result<f64> {
    *evals += 1;
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::EvaluationFailure { abscissa: x })
    }
}

/// QUADPACK's error rescaling: sharpen the raw |K15 − G7| difference using
/// the integral of |f − mean| (`resasc`), and floor it at the roundoff level
/// of the integral of |f| (`resabs`).
fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut err = err.abs();
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * resabs;
        if min_err > err {
            err = min_err;
        }
    }
    err
}

fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, evals: &mut u64) -> Result<RuleOutcome> {
    let center = 0.5 * (a + b);
    let half_length = 0.5 * (b - a);
    let abs_half_length = half_length.abs();

    let f_center = sample(f, center, evals)?;
    let mut result_gauss = f_center * WG[3];
    let mut result_kronrod = f_center * WGK[7];
    let mut resabs = result_kronrod.abs();

    let mut fv1 = [0.0f64; 8];
    let mut fv2 = [0.0f64; 8];
    fv1[7] = f_center;
    fv2[7] = f_center;

    for j in 0..7 {
        let abscissa = half_length * XGK[j];
        let fval1 = sample(f, center - abscissa, evals)?;
        let fval2 = sample(f, center + abscissa, evals)?;
        let fsum = fval1 + fval2;
        fv1[j] = fval1;
        fv2[j] = fval2;
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * fsum;
        }
        result_kronrod += WGK[j] * fsum;
        resabs += WGK[j] * (fval1.abs() + fval2.abs());
    }

    let mean = result_kronrod * 0.5;
    let mut resasc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = result_kronrod * half_length;
    resabs *= abs_half_length;
    resasc *= abs_half_length;
    let raw = ((result_kronrod - result_gauss) * half_length).abs();
    Ok(RuleOutcome {
        value,
        error: rescale_error(raw, resabs, resasc),
    })
}

/// A queued interval, ordered by estimated error so the worst offender is
/// always refined first.
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Integrates a smooth `f` over `[a, b]` by globally adaptive G7/K15
/// bisection.
///
/// Returns `converged = false` (with the accumulated value and error) when
/// the subdivision budget is exhausted or an interval becomes too narrow to
/// split in f64; both are budget conditions, not failures. Non-finite
/// integrand values are reported as [`Error::EvaluationFailure`].
pub fn integrate_adaptive<F>(
    f: F,
    a: f64,
    b: f64,
    opts: &QuadratureOptions,
) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    opts.validate()?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::InvalidInterval { a, b });
    }

    let mut evaluations = 0u64;
    let first = qk15(&f, a, b, &mut evaluations)?;
    let mut total_value = first.value;
    let mut total_error = first.error;
    let mut heap = BinaryHeap::new();
    heap.push(Segment {
        a,
        b,
        value: first.value,
        error: first.error,
    });

    let mut subdivisions = 0usize;
    let mut splittable = true;
    while total_error > opts.tolerance_for(total_value)
        && subdivisions < opts.max_subdivisions
        && splittable
    {
        let worst = heap.pop().expect("heap holds at least one segment");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // The interval is one ulp wide; put it back and stop refining.
            heap.push(worst);
            splittable = false;
            continue;
        }
        let left = qk15(&f, worst.a, mid, &mut evaluations)?;
        let right = qk15(&f, mid, worst.b, &mut evaluations)?;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: left.value,
            error: left.error,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: right.value,
            error: right.error,
        });
        subdivisions += 1;
    }

    // Re-sum from the heap to shed cancellation noise accumulated in the
    // incremental updates.
    let (mut value, mut error) = (0.0, 0.0);
    for seg in heap.iter() {
        value += seg.value;
        error += seg.error;
    }

    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
        converged: error <= opts.tolerance_for(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> QuadratureOptions {
        QuadratureOptions::default()
    }

    #[test]
    fn constant_is_exact() {
        let r = integrate_adaptive(|_| 1.0, 0.0, 1.0, &opts()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-14);
        assert_eq!(r.evaluations, 15);
    }

    #[test]
    fn degree_thirteen_polynomial_is_exact_for_k15() {
        // K15 integrates polynomials up to degree 22 exactly; degree 13 also
        // lies inside the embedded G7 rule's degree-13 exactness, so the
        // error estimate collapses to the roundoff floor.
        let r = integrate_adaptive(|x: f64| x.powi(13), 0.0, 1.0, &opts()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0 / 14.0).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_integrand_converges() {
        // ∫₀^{2π} cos(10 x) dx = 0 exactly.
        let r = integrate_adaptive(|x: f64| (10.0 * x).cos(), 0.0, 2.0 * std::f64::consts::PI, &opts())
            .unwrap();
        assert!(r.converged);
        assert!(r.value.abs() < 1e-11);
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let err = integrate_adaptive(|x: f64| 1.0 / x, -1.0, 1.0, &opts()).unwrap_err();
        assert!(matches!(err, Error::EvaluationFailure { .. }));
    }

    #[test]
    fn reversed_interval_is_rejected() {
        let err = integrate_adaptive(|_| 1.0, 1.0, 0.0, &opts()).unwrap_err();
        assert!(matches!(err, Error::InvalidInterval { .. }));
    }

    #[test]
    fn budget_exhaustion_reports_not_converged() {
        let tight = QuadratureOptions {
            abs_tol: 1e-300,
            rel_tol: 1e-300,
            max_subdivisions: 3,
            ..QuadratureOptions::default()
        };
        let r = integrate_adaptive(|x: f64| (x * x).exp(), 0.0, 1.0, &tight).unwrap();
        assert!(!r.converged);
        assert!(r.value.is_finite());
    }
}
