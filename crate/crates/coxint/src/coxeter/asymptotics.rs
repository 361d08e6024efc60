//! Empirical endpoint diagnostics for I′(λ).
//!
//! Near λ = 0 and λ = 2 the derivative's behaviour is delicate: candidate
//! behaviours are a finite limit, logarithmic growth, and an inverse-
//! square-root blow-up. Rather than assert any of them, this module samples
//! I′ on a geometric ladder of distances d = 2^{-k} from the endpoint, fits
//! all three two-parameter models by least squares, and reports which fits
//! best — a measurement, not a theorem.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::QuadratureOptions;

use super::{iprime_trig, Lambda};

/// Candidate endpoint models for I′ at distance d from the endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AsymptoticModel {
    /// I′ ≈ α·ln(1/d) + β; `coefficient` is α.
    LogDivergence,
    /// I′ ≈ D/√d + β; `coefficient` is D.
    InverseSqrt,
    /// I′ ≈ c + b·d; `coefficient` is the limit c.
    Bounded,
}

impl std::fmt::Display for AsymptoticModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AsymptoticModel::LogDivergence => "log_divergence",
            AsymptoticModel::InverseSqrt => "inverse_sqrt",
            AsymptoticModel::Bounded => "bounded",
        };
        f.write_str(name)
    }
}

/// Outcome of fitting one endpoint model to the sampled ladder.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AsymptoticFit {
    /// Which endpoint was probed: 0 or 2.
    pub endpoint: f64,
    /// The fitted model.
    pub model: AsymptoticModel,
    /// The model's leading coefficient (limit value for `Bounded`, log
    /// slope for `LogDivergence`, 1/√ strength for `InverseSqrt`).
    pub coefficient: f64,
    /// Root-mean-square residual of the least-squares fit.
    pub fit_residual: f64,
}

/// Exponent range of the ladder d = 2^{-k}.
const LADDER_RANGE: std::ops::RangeInclusive<u32> = 4..=20;

/// Ordinary least squares for y ≈ slope·x + intercept.
fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let ss: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum();
    (slope, intercept, (ss / n).sqrt())
}

fn fit_model(model: AsymptoticModel, ds: &[f64], ys: &[f64], endpoint: f64) -> AsymptoticFit {
    let xs: Vec<f64> = ds
        .iter()
        .map(|&d| match model {
            AsymptoticModel::LogDivergence => (1.0 / d).ln(),
            AsymptoticModel::InverseSqrt => 1.0 / d.sqrt(),
            AsymptoticModel::Bounded => d,
        })
        .collect();
    let (slope, intercept, residual) = linear_fit(&xs, ys);
    let coefficient = match model {
        AsymptoticModel::Bounded => intercept,
        _ => slope,
    };
    AsymptoticFit {
        endpoint,
        model,
        coefficient,
        fit_residual: residual,
    }
}

/// Fits all three candidate models to the I′ ladder at the given endpoint
/// (0 or 2), ordered as [log_divergence, inverse_sqrt, bounded].
pub fn endpoint_asymptotics_candidates(
    endpoint: f64,
    opts: &QuadratureOptions,
) -> Result<[AsymptoticFit; 3]> {
    if endpoint != 0.0 && endpoint != 2.0 {
        return Err(Error::InvalidOptions {
            reason: "asymptotics endpoint must be 0 or 2",
        });
    }
    let mut ds = Vec::new();
    let mut ys = Vec::new();
    for k in LADDER_RANGE {
        let d = 0.5f64.powi(k as i32);
        let lambda = if endpoint == 0.0 { d } else { 2.0 - d };
        ds.push(d);
        ys.push(iprime_trig(Lambda::new(lambda)?, opts)?.value);
    }
    Ok([
        fit_model(AsymptoticModel::LogDivergence, &ds, &ys, endpoint),
        fit_model(AsymptoticModel::InverseSqrt, &ds, &ys, endpoint),
        fit_model(AsymptoticModel::Bounded, &ds, &ys, endpoint),
    ])
}

/// Samples I′ on the ladder approaching the endpoint (0 or 2) and returns
/// the best-fitting endpoint model by least-squares residual.
pub fn endpoint_asymptotics(endpoint: f64, opts: &QuadratureOptions) -> Result<AsymptoticFit> {
    let fits = endpoint_asymptotics_candidates(endpoint, opts)?;
    Ok(fits
        .into_iter()
        .min_by(|a, b| a.fit_residual.total_cmp(&b.fit_residual))
        .expect("three candidate fits"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_fit_recovers_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [2.5, 4.5, 6.5, 8.5];
        let (slope, intercept, residual) = linear_fit(&xs, &ys);
        assert!((slope - 2.0).abs() < 1e-12);
        assert!((intercept - 0.5).abs() < 1e-12);
        assert!(residual < 1e-12);
    }

    #[test]
    fn synthetic_log_data_selects_log_model() {
        let ds: Vec<f64> = (4..=20).map(|k| 0.5f64.powi(k)).collect();
        let ys: Vec<f64> = ds.iter().map(|d| 0.5 * (1.0 / d).ln() + 0.04).collect();
        let fits = [
            fit_model(AsymptoticModel::LogDivergence, &ds, &ys, 0.0),
            fit_model(AsymptoticModel::InverseSqrt, &ds, &ys, 0.0),
            fit_model(AsymptoticModel::Bounded, &ds, &ys, 0.0),
        ];
        let best = fits
            .iter()
            .min_by(|a, b| a.fit_residual.total_cmp(&b.fit_residual))
            .unwrap();
        assert_eq!(best.model, AsymptoticModel::LogDivergence);
        assert!((best.coefficient - 0.5).abs() < 1e-10);
    }

    #[test]
    fn synthetic_bounded_data_selects_bounded_model() {
        let ds: Vec<f64> = (4..=20).map(|k| 0.5f64.powi(k)).collect();
        let ys: Vec<f64> = ds.iter().map(|d| 0.1215 + 0.3 * d).collect();
        let fits = [
            fit_model(AsymptoticModel::LogDivergence, &ds, &ys, 2.0),
            fit_model(AsymptoticModel::InverseSqrt, &ds, &ys, 2.0),
            fit_model(AsymptoticModel::Bounded, &ds, &ys, 2.0),
        ];
        let best = fits
            .iter()
            .min_by(|a, b| a.fit_residual.total_cmp(&b.fit_residual))
            .unwrap();
        assert_eq!(best.model, AsymptoticModel::Bounded);
        assert!((best.coefficient - 0.1215).abs() < 1e-10);
    }

    #[test]
    fn invalid_endpoint_is_rejected() {
        let err = endpoint_asymptotics(1.0, &QuadratureOptions::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidOptions { .. }));
    }
}
