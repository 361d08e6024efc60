//! Numeric formatting and output-sink handling shared by all subcommands.
//!
//! Numbers are rendered to 15 significant digits, switching to scientific
//! notation below 1e-3 in magnitude, so that repeated runs with the same
//! inputs produce byte-identical output.

use std::path::Path;

use crate::CliError;

/// Formats a finite value to 15 significant digits: plain decimal notation
/// for magnitudes >= 1e-3, scientific otherwise. Zero prints as `0`.
pub fn fmt_sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let ax = x.abs();
    if !x.is_finite() {
        return format!("{x}");
    }
    if ax < 1e-3 {
        // e-format with 14 fractional digits = 15 significant digits.
        return format!("{x:.14e}");
    }
    // floor(log10) is exact enough here: ax >= 1e-3 keeps it well away from
    // subnormal trouble, and a one-off at a power-of-ten boundary only
    // shifts between e.g. 14 and 15 rendered digits of an exact value.
    let magnitude = ax.log10().floor() as i64;
    let decimals = (14 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Writes `content` to `out` if a path was configured, else to stdout.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            CliError::failure(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_notation_down_to_millis() {
        assert_eq!(fmt_sig15(1.0), "1.00000000000000");
        assert_eq!(fmt_sig15(-2.0561675835), "-2.05616758350000");
        assert_eq!(fmt_sig15(1234.5), "1234.50000000000");
        assert_eq!(fmt_sig15(0.001), "0.00100000000000000");
    }

    #[test]
    fn scientific_below_one_thousandth() {
        assert_eq!(fmt_sig15(0.000999), "9.99000000000000e-4");
        assert_eq!(fmt_sig15(1.5e-9), "1.50000000000000e-9");
        assert_eq!(fmt_sig15(-3e-12), "-3.00000000000000e-12");
    }

    #[test]
    fn zero_and_dev_floor() {
        assert_eq!(fmt_sig15(0.0), "0");
    }

    #[test]
    fn round_trips_to_the_same_value_class() {
        for &x in &[std::f64::consts::PI, 0.1, 123456.789, 4.2e-7] {
            let s = fmt_sig15(x);
            let back: f64 = s.parse().unwrap();
            assert!((back - x).abs() <= 1e-14 * x.abs().max(1.0), "{s}");
        }
    }
}
