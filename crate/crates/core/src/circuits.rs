//! Two-qubit circuits of alternating nonlocal gates and local layers, and
//! invariant-level checks that a circuit lies in the CNOT class.

use std::fmt;

use rayon::prelude::*;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::families::{swap_alpha, Edge};
use crate::invariants::local_invariants;
use crate::linalg::{assert_unitary, kron, Complex, Gate4, Mat2};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Factor {
    Nonlocal(Gate4),
    /// `k_a ⊗ k_b`.
    Local(Mat2, Mat2),
}

impl Factor {
    pub fn matrix(&self) -> Gate4 {
        match self {
            Factor::Nonlocal(g) => *g,
            Factor::Local(a, b) => kron(a, b),
        }
    }
}

/// Product of factors; the leftmost factor acts last.
#[derive(Clone, Debug, PartialEq)]
pub struct CircuitExpr {
    factors: Vec<Factor>,
}

impl CircuitExpr {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyCircuit);
        }
        Ok(Self { factors })
    }

    /// `gate · (k_a ⊗ k_b) · gate`.
    pub fn sandwich(gate: Gate4, layer: (Mat2, Mat2)) -> Self {
        Self {
            factors: vec![Factor::Nonlocal(gate), Factor::Local(layer.0, layer.1), Factor::Nonlocal(gate)],
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn nonlocal_count(&self) -> usize {
        self.factors.iter().filter(|f| matches!(f, Factor::Nonlocal(_))).count()
    }

    pub fn evaluate(&self) -> Result<Gate4> {
        evaluate(self)
    }
}

pub fn evaluate(expr: &CircuitExpr) -> Result<Gate4> {
    let tol = Tolerances::DEFAULT.unitary;
    expr.factors.iter().try_fold(Gate4::identity(), |acc, f| {
        let m = assert_unitary(f.matrix(), tol)?;
        Ok(acc * m)
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CnotVerdict {
    pub equivalent: bool,
    pub g1: Complex,
    pub g2: f64,
}

/// CNOT class iff `|G1| <= 1e-9` and `|G2 - 1| <= 1e-9`.
pub fn verify_cnot_class(expr: &CircuitExpr) -> Result<CnotVerdict> {
    let inv = local_invariants(&evaluate(expr)?)?;
    let tol = Tolerances::DEFAULT.equivalence;
    Ok(CnotVerdict {
        equivalent: inv.g1.norm() <= tol && (inv.g2 - 1.0).abs() <= tol,
        g1: inv.g1,
        g2: inv.g2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(self) -> Mat2 {
        match self {
            Pauli::I => Mat2::identity(),
            Pauli::X => Mat2::pauli_x(),
            Pauli::Y => Mat2::pauli_y(),
            Pauli::Z => Mat2::pauli_z(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Pauli::I => "I",
            Pauli::X => "σx",
            Pauli::Y => "σy",
            Pauli::Z => "σz",
        }
    }
}

/// The two-nonlocal-gate CNOT constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `SWAP^{-1/2} (σx⊗σy) SWAP^{-1/2}`
    InverseSqrtSwapXY,
    /// `SWAP^{-1/2} (σx⊗σz) SWAP^{-1/2}`
    InverseSqrtSwapXZ,
    /// `A_QP (I⊗σx) A_QP`
    QpIX,
    /// `A_QP (I⊗σy) A_QP`
    QpIY,
    /// `A_MN (σx⊗σz) A_MN`
    MnXZ,
    /// `A_MN (σy⊗σz) A_MN`
    MnYZ,
    /// `A_PN (σx⊗σz) A_PN`
    PnXZ,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::InverseSqrtSwapXY,
        Construction::InverseSqrtSwapXZ,
        Construction::QpIX,
        Construction::QpIY,
        Construction::MnXZ,
        Construction::MnYZ,
        Construction::PnXZ,
    ];

    /// The edge whose parameter the construction sweeps, if any.
    pub fn edge(self) -> Option<Edge> {
        match self {
            Construction::InverseSqrtSwapXY | Construction::InverseSqrtSwapXZ => None,
            Construction::QpIX | Construction::QpIY => Some(Edge::QP),
            Construction::MnXZ | Construction::MnYZ => Some(Edge::MN),
            Construction::PnXZ => Some(Edge::PN),
        }
    }

    pub fn layer(self) -> (Pauli, Pauli) {
        match self {
            Construction::InverseSqrtSwapXY => (Pauli::X, Pauli::Y),
            Construction::InverseSqrtSwapXZ => (Pauli::X, Pauli::Z),
            Construction::QpIX => (Pauli::I, Pauli::X),
            Construction::QpIY => (Pauli::I, Pauli::Y),
            Construction::MnXZ | Construction::PnXZ => (Pauli::X, Pauli::Z),
            Construction::MnYZ => (Pauli::Y, Pauli::Z),
        }
    }

    pub fn nonlocal_gate(self, t: f64) -> Result<Gate4> {
        match self.edge() {
            Some(edge) => edge.gate(t),
            None => swap_alpha(0.5, true),
        }
    }

    pub fn expr(self, t: f64) -> Result<CircuitExpr> {
        let (a, b) = self.layer();
        Ok(CircuitExpr::sandwich(self.nonlocal_gate(t)?, (a.matrix(), b.matrix())))
    }

    /// Parameter values swept for a grid of `grid_size` points.
    pub fn grid(self, grid_size: usize) -> Vec<f64> {
        match self.edge() {
            Some(edge) => edge.grid(grid_size),
            None => vec![0.0],
        }
    }

    pub fn name(self) -> String {
        let (a, b) = self.layer();
        let gate = match self.edge() {
            Some(edge) => format!("A_{}", edge.label()),
            None => "SWAP^-1/2".to_string(),
        };
        format!("{gate} ({}⊗{}) {gate}", a.symbol(), b.symbol())
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepPoint {
    pub param: f64,
    pub verdict: CnotVerdict,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionResult {
    pub construction: Construction,
    pub points: Vec<SweepPoint>,
}

impl ConstructionResult {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.verdict.equivalent)
    }

    pub fn max_abs_g1(&self) -> f64 {
        self.points.iter().map(|p| p.verdict.g1.norm()).fold(0.0, f64::max)
    }

    pub fn max_g2_deviation(&self) -> f64 {
        self.points.iter().map(|p| (p.verdict.g2 - 1.0).abs()).fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub results: Vec<ConstructionResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(ConstructionResult::passed)
    }

    /// `(construction, parameter)` pairs that did not verify.
    pub fn failures(&self) -> Vec<(Construction, f64)> {
        self.results
            .iter()
            .flat_map(|r| {
                r.points
                    .iter()
                    .filter(|p| !p.verdict.equivalent)
                    .map(move |p| (r.construction, p.param))
            })
            .collect()
    }
}

/// Sweeps every construction over an even grid of its edge parameter.
pub fn verify_all_constructions(grid_size: usize) -> Result<VerificationReport> {
    if grid_size < 2 {
        return Err(Error::InvalidArgument("grid size must be at least 2".into()));
    }
    let results = Construction::ALL
        .into_iter()
        .map(|construction| {
            let points = construction
                .grid(grid_size)
                .into_par_iter()
                .map(|param| {
                    let verdict = verify_cnot_class(&construction.expr(param)?)?;
                    Ok(SweepPoint { param, verdict })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(ConstructionResult { construction, points })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport { results })
}

/// All 16 Pauli layers `P ⊗ P'` for which `gate (P⊗P') gate` is in the CNOT class.
pub fn verifying_pauli_layers(gate: &Gate4) -> Result<Vec<(Pauli, Pauli)>> {
    let mut found = Vec::new();
    for a in Pauli::ALL {
        for b in Pauli::ALL {
            let expr = CircuitExpr::sandwich(*gate, (a.matrix(), b.matrix()));
            if verify_cnot_class(&expr)?.equivalent {
                found.push((a, b));
            }
        }
    }
    Ok(found)
}
