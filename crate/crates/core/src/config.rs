//! Numerical tolerances shared by every module.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Max entry of `|U†U - I|` accepted as unitary.
    pub unitary: f64,
    /// Max imaginary part tolerated in G2 before it is dropped.
    pub g2_imag: f64,
    /// Invariant distance under which two gates are locally equivalent.
    pub equivalence: f64,
    /// Invariant distance accepted when validating extracted coordinates.
    pub coordinate_match: f64,
    /// Slack for the perfect-entangler inequalities and the hull test.
    pub perfect_entangler: f64,
    /// `c3` below which the base mirror `[c1,c2,0] ~ [π-c1,c2,0]` is applied.
    pub mirror: f64,
    /// Allowed deviation from unit norm for input states.
    pub normalization: f64,
    /// Slack on family parameter ranges.
    pub param_range: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        unitary: 1e-10,
        g2_imag: 1e-9,
        equivalence: 1e-9,
        coordinate_match: 1e-8,
        perfect_entangler: 1e-9,
        mirror: 1e-9,
        normalization: 1e-9,
        param_range: 1e-12,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
