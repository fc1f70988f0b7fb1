//! Library half of the `gategeo` command-line tool.

pub mod analyze;
pub mod gatefile;
pub mod settings;
pub mod sweep;
pub mod tables;

/// Formats `x` with 12 significant digits in scientific notation.
pub fn fmt_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// `x` in units of π, e.g. `0.75π`.
pub fn fmt_pi(x: f64) -> String {
    let v = x / std::f64::consts::PI;
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    let s = if s == "-0" { "0" } else { s };
    format!("{s}π")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn pi_units() {
        assert_eq!(fmt_pi(0.75 * PI), "0.75π");
        assert_eq!(fmt_pi(0.0), "0π");
        assert_eq!(fmt_pi(PI), "1π");
        assert_eq!(fmt_pi(-1e-12), "0π");
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig12(2.0 / 9.0), "2.22222222222e-1");
        assert_eq!(fmt_sig12(0.0), "0.00000000000e0");
    }
}
