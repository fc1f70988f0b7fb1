//! Named gates and single-parameter gate families.
//!
//! Every edge of the Weyl chamber and of the perfect-entangler polyhedron is a
//! one-parameter line of chamber points. [`Edge`] enumerates them together
//! with their tabulated closed forms for `e_p`, `G1` and `G2`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{Complex, Gate4, I, ONE, ZERO};
use crate::weyl::{canonical_gate, WeylPoint};

/// Controlled-NOT with qubit 1 as control.
pub fn cnot() -> Gate4 {
    Gate4::from_real([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
}

pub fn swap() -> Gate4 {
    Gate4::from_real([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// `SWAP^{-α}` when `inverse` is set, otherwise its adjoint `SWAP^α`.
///
/// The middle block acting on `|01>, |10>` is `½[[1+e, 1-e], [1-e, 1+e]]`
/// with `e = exp(-iπα)`.
pub fn swap_alpha(alpha: f64, inverse: bool) -> Result<Gate4> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::ParamOutOfRange {
            family: if inverse { "SWAP^-α" } else { "SWAP^α" }.into(),
            value: alpha,
            lo: 0.0,
            hi: 1.0,
        });
    }
    let e = Complex::from_polar(1.0, -PI * alpha);
    let p = (ONE + e) * 0.5;
    let m = (ONE - e) * 0.5;
    let g = Gate4::new([
        [ONE, ZERO, ZERO, ZERO],
        [ZERO, p, m, ZERO],
        [ZERO, m, p, ZERO],
        [ZERO, ZERO, ZERO, ONE],
    ]);
    Ok(if inverse { g } else { g.adjoint() })
}

/// Parameter name used by a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamSymbol {
    Theta,
    Phi,
    Alpha,
    Eta,
}

impl ParamSymbol {
    pub fn as_str(self) -> &'static str {
        match self {
            ParamSymbol::Theta => "θ",
            ParamSymbol::Phi => "φ",
            ParamSymbol::Alpha => "α",
            ParamSymbol::Eta => "η",
        }
    }
}

/// Which of the two edge tables a family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeTable {
    /// Edges of the Weyl chamber.
    Chamber,
    /// Edges of the perfect-entangler polyhedron.
    Polyhedron,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edge {
    OA1,
    OA2,
    A2A1,
    A2A3,
    OA3,
    A1A3,
    LQ,
    LM,
    A2M,
    A2Q,
    QP,
    MN,
    PN,
    LN,
    A2P,
    /// Special perfect entanglers, the line `LA2`.
    Spe,
    /// The controlled-unitary half `OL` of `OA1`.
    OL,
}

/// Closed-form `(e_p, G1, G2)` for a family member.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeValues {
    pub e_p: f64,
    pub g1: Complex,
    pub g2: f64,
}

/// A named single-parameter family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeFamily {
    pub edge: Edge,
    pub param_symbol: ParamSymbol,
    pub param_range: (f64, f64),
}

impl Edge {
    pub const CHAMBER: [Edge; 6] = [Edge::OA1, Edge::OA2, Edge::A2A1, Edge::A2A3, Edge::OA3, Edge::A1A3];

    pub const POLYHEDRON: [Edge; 9] = [
        Edge::LQ,
        Edge::LM,
        Edge::A2M,
        Edge::A2Q,
        Edge::QP,
        Edge::MN,
        Edge::PN,
        Edge::LN,
        Edge::A2P,
    ];

    pub const ALL: [Edge; 17] = [
        Edge::OA1,
        Edge::OA2,
        Edge::A2A1,
        Edge::A2A3,
        Edge::OA3,
        Edge::A1A3,
        Edge::LQ,
        Edge::LM,
        Edge::A2M,
        Edge::A2Q,
        Edge::QP,
        Edge::MN,
        Edge::PN,
        Edge::LN,
        Edge::A2P,
        Edge::Spe,
        Edge::OL,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Edge::OA1 => "OA1",
            Edge::OA2 => "OA2",
            Edge::A2A1 => "A2A1",
            Edge::A2A3 => "A2A3",
            Edge::OA3 => "OA3",
            Edge::A1A3 => "A1A3",
            Edge::LQ => "LQ",
            Edge::LM => "LM",
            Edge::A2M => "A2M",
            Edge::A2Q => "A2Q",
            Edge::QP => "QP",
            Edge::MN => "MN",
            Edge::PN => "PN",
            Edge::LN => "LN",
            Edge::A2P => "A2P",
            Edge::Spe => "SPE",
            Edge::OL => "OL",
        }
    }

    pub fn table(self) -> EdgeTable {
        if Edge::CHAMBER.contains(&self) {
            EdgeTable::Chamber
        } else if Edge::POLYHEDRON.contains(&self) {
            EdgeTable::Polyhedron
        } else {
            EdgeTable::Other
        }
    }

    pub fn family(self) -> EdgeFamily {
        use ParamSymbol::*;
        let (param_symbol, hi) = match self {
            Edge::OA1 => (Theta, PI),
            Edge::OA2 | Edge::Spe | Edge::OL => (Theta, FRAC_PI_2),
            Edge::A2A1 | Edge::A2A3 => (Phi, FRAC_PI_2),
            Edge::OA3 | Edge::A1A3 => (Alpha, 1.0),
            Edge::LQ | Edge::LM | Edge::LN | Edge::A2P => (Theta, FRAC_PI_4),
            Edge::A2M | Edge::A2Q => (Phi, FRAC_PI_4),
            Edge::QP | Edge::MN => (Eta, FRAC_PI_4),
            Edge::PN => (Eta, FRAC_PI_2),
        };
        EdgeFamily { edge: self, param_symbol, param_range: (0.0, hi) }
    }

    fn check_param(self, t: f64) -> Result<()> {
        let (lo, hi) = self.family().param_range;
        let slack = Tolerances::DEFAULT.param_range;
        if t.is_finite() && t >= lo - slack && t <= hi + slack {
            Ok(())
        } else {
            Err(Error::ParamOutOfRange { family: self.label().into(), value: t, lo, hi })
        }
    }

    /// Evenly spaced parameter values over the family's range, endpoints exact.
    pub fn grid(self, points: usize) -> Vec<f64> {
        let (lo, hi) = self.family().param_range;
        linspace(lo, hi, points)
    }

    /// The family's chamber point at parameter `t`.
    pub fn point(self, t: f64) -> Result<WeylPoint> {
        self.check_param(t)?;
        let h = FRAC_PI_2;
        let q = FRAC_PI_4;
        let p = match self {
            Edge::OA1 | Edge::OL => [t, 0.0, 0.0],
            Edge::OA2 => [t, t, 0.0],
            Edge::A2A1 | Edge::A2M => [h + t, h - t, 0.0],
            Edge::A2A3 => [h, h, t],
            Edge::OA3 => [PI * t / 2.0; 3],
            Edge::A1A3 => [PI - PI * t / 2.0, PI * t / 2.0, PI * t / 2.0],
            Edge::LQ => [h - t, t, 0.0],
            Edge::LM => [h + t, t, 0.0],
            Edge::A2Q => [h - t, h - t, 0.0],
            Edge::QP => [q, q, t],
            Edge::MN => [3.0 * q, q, t],
            Edge::PN => [q + t, q, q],
            Edge::LN => [h + t, t, t],
            Edge::A2P => [h - t, h - t, t],
            Edge::Spe => [h, t, 0.0],
        };
        Ok(WeylPoint::new(p[0], p[1], p[2]))
    }

    /// Canonical-gate representative at parameter `t`.
    pub fn gate(self, t: f64) -> Result<Gate4> {
        Ok(canonical_gate(&self.point(t)?))
    }

    /// Tabulated closed forms of `(e_p, G1, G2)` at parameter `t`.
    pub fn closed_form(self, t: f64) -> Result<EdgeValues> {
        self.check_param(t)?;
        let cis = |x: f64| Complex::from_polar(1.0, x);
        let re = |x: f64| Complex::new(x, 0.0);
        let (e_p, g1, g2) = match self {
            Edge::OA1 | Edge::OL => {
                let c = t.cos();
                ((1.0 - (2.0 * t).cos()) / 9.0, re(c * c), 2.0 * c * c + 1.0)
            }
            Edge::OA2 => {
                let c2 = (2.0 * t).cos();
                ((3.0 - c2 * c2 - 2.0 * c2) / 18.0, re(0.25 * (1.0 + c2).powi(2)), 1.0 + 2.0 * c2)
            }
            Edge::A2A1 | Edge::A2M | Edge::A2Q => {
                let c2 = (2.0 * t).cos();
                ((3.0 - c2 * c2 + 2.0 * c2) / 18.0, re(0.25 * (c2 - 1.0).powi(2)), 1.0 - 2.0 * c2)
            }
            Edge::A2A3 => {
                let s = t.sin();
                ((1.0 + (2.0 * t).cos()) / 9.0, re(-s * s), (2.0 * t).cos() - 2.0)
            }
            Edge::OA3 => {
                let a = PI * t;
                let g1 = (9.0 * cis(-a) + cis(3.0 * a) + 6.0 * cis(a)) / 16.0;
                ((1.0 - (2.0 * a).cos()) / 12.0, g1, 3.0 * a.cos())
            }
            Edge::A1A3 => {
                let a = PI * t;
                let g1 = (9.0 * cis(a) + cis(-3.0 * a) + 6.0 * cis(-a)) / 16.0;
                ((1.0 - (2.0 * a).cos()) / 12.0, g1, 3.0 * a.cos())
            }
            Edge::LQ | Edge::LM => {
                let c2 = (2.0 * t).cos();
                let s2 = (2.0 * t).sin();
                ((3.0 + c2 * c2) / 18.0, re(0.25 * s2 * s2), 1.0)
            }
            Edge::QP => (1.0 / 6.0, 0.25 * cis(-2.0 * t), (2.0 * t).cos()),
            Edge::MN => (1.0 / 6.0, 0.25 * cis(2.0 * t), (2.0 * t).cos()),
            Edge::PN => (1.0 / 6.0, -0.25 * I * cis(-2.0 * t), -(2.0 * t).sin()),
            Edge::LN => {
                let c2 = (2.0 * t).cos();
                let z = cis(t) * (2.0 * t).sin();
                ((3.0 + c2 * c2) / 18.0, 0.25 * z * z, c2)
            }
            Edge::A2P => {
                let c2 = (2.0 * t).cos();
                let z = cis(t) * (2.0 * t).sin();
                ((3.0 + c2 * c2) / 18.0, -0.25 * z * z, -c2)
            }
            Edge::Spe => (2.0 / 9.0, ZERO, (2.0 * t).cos()),
        };
        Ok(EdgeValues { e_p, g1, g2 })
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Edge::ALL
            .into_iter()
            .find(|e| e.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family '{s}'")))
    }
}

pub fn edge_point(edge: Edge, t: f64) -> Result<WeylPoint> {
    edge.point(t)
}

pub fn edge_invariants_closed(edge: Edge, t: f64) -> Result<EdgeValues> {
    edge.closed_form(t)
}

/// `n` evenly spaced values from `lo` to `hi`; the last one is exactly `hi`.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|k| if k + 1 == n { hi } else { lo + (hi - lo) * k as f64 / (n - 1) as f64 })
            .collect(),
    }
}
