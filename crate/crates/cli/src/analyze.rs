//! Full nonlocal characterization of a single gate.

use std::fmt::Write as _;

use anyhow::Result;
use gate_geometry::epower::{entangling_power_closed, entangling_power_mc};
use gate_geometry::invariants::local_invariants_with;
use gate_geometry::weyl::{coordinates_of_with, is_perfect_entangler_coords_with, is_perfect_entangler_hull_with};
use gate_geometry::{Gate4, Tolerances};
use serde::Serialize;

use crate::fmt_pi;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McReport {
    pub mean: f64,
    pub std_error: f64,
    pub n_samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Analysis {
    pub name: Option<String>,
    pub g1: [f64; 2],
    pub g2: f64,
    pub coordinates: [f64; 3],
    pub perfect_entangler_coords: bool,
    pub perfect_entangler_hull: bool,
    pub e_p: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monte_carlo: Option<McReport>,
}

pub fn analyze(name: Option<String>, gate: &Gate4, mc: Option<(usize, u64)>, tol: &Tolerances) -> Result<Analysis> {
    let inv = local_invariants_with(gate, tol)?;
    let c = coordinates_of_with(gate, tol)?;
    let monte_carlo = match mc {
        Some((n, seed)) => {
            let est = entangling_power_mc(gate, n, seed)?;
            Some(McReport { mean: est.mean, std_error: est.std_error, n_samples: n, seed })
        }
        None => None,
    };
    Ok(Analysis {
        name,
        g1: [inv.g1.re, inv.g1.im],
        g2: inv.g2,
        coordinates: c.as_array(),
        perfect_entangler_coords: is_perfect_entangler_coords_with(&c, tol.perfect_entangler),
        perfect_entangler_hull: is_perfect_entangler_hull_with(gate, tol)?,
        e_p: entangling_power_closed(&c),
        monte_carlo,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Analysis {
    pub fn render(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "gate: {name}");
        }
        let [re, im] = self.g1;
        let _ = writeln!(out, "G1 = {re:.12} {:+.12}i", im);
        let _ = writeln!(out, "G2 = {:.12}", self.g2);
        let [a, b, c] = self.coordinates;
        let _ = writeln!(
            out,
            "c  = [{}, {}, {}]  ([{a:.12}, {b:.12}, {c:.12}] rad)",
            fmt_pi(a),
            fmt_pi(b),
            fmt_pi(c)
        );
        let _ = writeln!(
            out,
            "perfect entangler: coordinates {}, convex hull {}",
            yes_no(self.perfect_entangler_coords),
            yes_no(self.perfect_entangler_hull)
        );
        let _ = writeln!(out, "e_p (closed form) = {:.12}", self.e_p);
        if let Some(mc) = &self.monte_carlo {
            let _ = writeln!(
                out,
                "e_p (Monte Carlo, n={}, seed={}) = {:.6} ± {:.6}",
                mc.n_samples, mc.seed, mc.mean, mc.std_error
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gate_geometry::families::{cnot, swap_alpha};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn cnot_analysis() {
        let a = analyze(None, &cnot(), None, &Tolerances::DEFAULT).unwrap();
        assert!(a.g1[0].abs() < 1e-12 && a.g1[1].abs() < 1e-12 && (a.g2 - 1.0).abs() < 1e-12);
        assert!((a.coordinates[0] - FRAC_PI_2).abs() < 1e-7);
        assert!(a.perfect_entangler_coords && a.perfect_entangler_hull);
        assert!((a.e_p - 2.0 / 9.0).abs() < 1e-12);
    }

    #[test]
    fn identity_analysis() {
        let a = analyze(None, &Gate4::identity(), Some((10_000, 1)), &Tolerances::DEFAULT).unwrap();
        assert!((a.g1[0] - 1.0).abs() < 1e-12 && (a.g2 - 3.0).abs() < 1e-12);
        assert!(a.coordinates.iter().all(|x| x.abs() < 1e-9));
        assert!(!a.perfect_entangler_coords && !a.perfect_entangler_hull);
        assert!(a.e_p.abs() < 1e-15);
        assert!(a.monte_carlo.unwrap().mean.abs() < 1e-15);
    }

    #[test]
    fn inverse_sqrt_swap_analysis() {
        let a = analyze(None, &swap_alpha(0.5, true).unwrap(), None, &Tolerances::DEFAULT).unwrap();
        let want = [3.0 * FRAC_PI_4, FRAC_PI_4, FRAC_PI_4];
        for (x, w) in a.coordinates.iter().zip(want) {
            assert!((x - w).abs() < 1e-7);
        }
        assert!(a.perfect_entangler_coords);
        assert!((a.e_p - 1.0 / 6.0).abs() < 1e-12);
        assert!(a.render().contains("0.75π"));
    }
}
