//! Edge tables: tabulated closed forms next to values recomputed from gates.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use gate_geometry::epower::entangling_power_closed;
use gate_geometry::families::{Edge, EdgeValues};
use gate_geometry::invariants::local_invariants_with;
use gate_geometry::weyl::{canonical_gate, coordinates_of_with};
use gate_geometry::{Tolerances, WeylPoint};

use crate::fmt_pi;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Weyl,
    Polyhedron,
}

impl TableKind {
    pub fn edges(self) -> &'static [Edge] {
        match self {
            TableKind::Weyl => &Edge::CHAMBER,
            TableKind::Polyhedron => &Edge::POLYHEDRON,
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableKind::Weyl => "Weyl chamber edges",
            TableKind::Polyhedron => "Perfect-entangler polyhedron edges",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub edge: Edge,
    pub param: f64,
    pub point: WeylPoint,
    pub closed: EdgeValues,
    /// `e_p` from the extracted coordinates of the canonical gate, `(G1, G2)`
    /// from the gate's Bell-basis invariants.
    pub pipeline: EdgeValues,
}

impl TableRow {
    pub fn discrepancy(&self) -> f64 {
        (self.closed.e_p - self.pipeline.e_p)
            .abs()
            .max((self.closed.g1 - self.pipeline.g1).norm())
            .max((self.closed.g2 - self.pipeline.g2).abs())
    }
}

pub fn compute_table(kind: TableKind, grid: usize, tol: &Tolerances) -> Result<Vec<TableRow>> {
    if grid < 2 {
        bail!("grid must have at least 2 points");
    }
    let mut rows = Vec::new();
    for &edge in kind.edges() {
        for t in edge.grid(grid) {
            let point = edge.point(t)?;
            let gate = canonical_gate(&point);
            let inv = local_invariants_with(&gate, tol)?;
            let coords = coordinates_of_with(&gate, tol)?;
            rows.push(TableRow {
                edge,
                param: t,
                point,
                closed: edge.closed_form(t)?,
                pipeline: EdgeValues { e_p: entangling_power_closed(&coords), g1: inv.g1, g2: inv.g2 },
            });
        }
    }
    Ok(rows)
}

fn fmt_param(edge: Edge, t: f64) -> String {
    let sym = edge.family().param_symbol.as_str();
    if sym == "α" {
        format!("{sym}={t:.4}")
    } else {
        format!("{sym}={}", fmt_pi(t))
    }
}

fn fmt_c(z: gate_geometry::Complex) -> String {
    format!("{:+.6}{:+.6}i", z.re, z.im)
}

pub fn render_table(kind: TableKind, rows: &[TableRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", kind.title());
    let _ = writeln!(
        out,
        "{:<5} {:<12} {:<30} {:>10} {:>10} {:>22} {:>22} {:>10} {:>10} {:>9}",
        "edge", "param", "[c1, c2, c3]", "e_p", "e_p*", "G1", "G1*", "G2", "G2*", "max|Δ|"
    );
    for r in rows {
        let [a, b, c] = r.point.as_array().map(fmt_pi);
        let _ = writeln!(
            out,
            "{:<5} {:<12} {:<30} {:>10.6} {:>10.6} {:>22} {:>22} {:>10.6} {:>10.6} {:>9.1e}",
            r.edge.label(),
            fmt_param(r.edge, r.param),
            format!("[{a}, {b}, {c}]"),
            r.closed.e_p,
            r.pipeline.e_p,
            fmt_c(r.closed.g1),
            fmt_c(r.pipeline.g1),
            r.closed.g2,
            r.pipeline.g2,
            r.discrepancy(),
        );
    }
    let _ = writeln!(out, "# starred columns are recomputed from the canonical gate");
    for &edge in kind.edges() {
        let worst = rows.iter().filter(|r| r.edge == edge).map(TableRow::discrepancy).fold(0.0, f64::max);
        let _ = writeln!(out, "# {:<5} max discrepancy {:.2e}", edge.label(), worst);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_table_shape_and_agreement() {
        let rows = compute_table(TableKind::Weyl, 5, &Tolerances::DEFAULT).unwrap();
        assert_eq!(rows.len(), 6 * 5);
        assert!(rows.iter().all(|r| r.discrepancy() < 1e-10));
    }

    #[test]
    fn polyhedron_table_constant_edges() {
        let rows = compute_table(TableKind::Polyhedron, 5, &Tolerances::DEFAULT).unwrap();
        assert_eq!(rows.len(), 9 * 5);
        for r in rows.iter().filter(|r| matches!(r.edge, Edge::QP | Edge::MN | Edge::PN)) {
            assert!((r.closed.e_p - 1.0 / 6.0).abs() < 1e-15);
            assert!((r.pipeline.e_p - 1.0 / 6.0).abs() < 1e-10);
        }
        let text = render_table(TableKind::Polyhedron, &rows);
        assert!(text.contains("A2P"));
    }

    #[test]
    fn endpoints_only_grid() {
        let rows = compute_table(TableKind::Weyl, 2, &Tolerances::DEFAULT).unwrap();
        assert_eq!(rows.len(), 12);
        assert!(compute_table(TableKind::Weyl, 1, &Tolerances::DEFAULT).is_err());
    }
}
