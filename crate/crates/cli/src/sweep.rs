//! Parameter sweeps along a gate family, written as CSV.

use std::io::{Read, Write};

use anyhow::{bail, Context, Result};
use gate_geometry::epower::entangling_power_closed;
use gate_geometry::families::Edge;
use gate_geometry::invariants::local_invariants_with;
use gate_geometry::weyl::{canonical_gate, is_perfect_entangler_coords_with};
use gate_geometry::Tolerances;

use crate::fmt_sig12;

pub const HEADER: [&str; 10] =
    ["family_label", "param_value", "c1", "c2", "c3", "e_p", "g1_re", "g1_im", "g2", "is_pe"];

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub family_label: String,
    pub param_value: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub e_p: f64,
    pub g1_re: f64,
    pub g1_im: f64,
    pub g2: f64,
    pub is_pe: bool,
}

impl SweepRecord {
    fn fields(&self) -> [String; 10] {
        [
            self.family_label.clone(),
            fmt_sig12(self.param_value),
            fmt_sig12(self.c1),
            fmt_sig12(self.c2),
            fmt_sig12(self.c3),
            fmt_sig12(self.e_p),
            fmt_sig12(self.g1_re),
            fmt_sig12(self.g1_im),
            fmt_sig12(self.g2),
            self.is_pe.to_string(),
        ]
    }

    /// The record as it reads back after a CSV round trip.
    pub fn rounded(&self) -> SweepRecord {
        let r = |x: f64| fmt_sig12(x).parse::<f64>().expect("formatted float parses");
        SweepRecord {
            family_label: self.family_label.clone(),
            param_value: r(self.param_value),
            c1: r(self.c1),
            c2: r(self.c2),
            c3: r(self.c3),
            e_p: r(self.e_p),
            g1_re: r(self.g1_re),
            g1_im: r(self.g1_im),
            g2: r(self.g2),
            is_pe: self.is_pe,
        }
    }
}

/// One record per grid point: the family's chamber point, its closed-form
/// entangling power, invariants of its canonical gate, and PE membership.
pub fn compute_sweep(edge: Edge, grid: usize, tol: &Tolerances) -> Result<Vec<SweepRecord>> {
    if grid < 2 {
        bail!("grid must have at least 2 points");
    }
    edge.grid(grid)
        .into_iter()
        .map(|t| {
            let p = edge.point(t)?;
            let inv = local_invariants_with(&canonical_gate(&p), tol)?;
            Ok(SweepRecord {
                family_label: edge.label().to_string(),
                param_value: t,
                c1: p.c1,
                c2: p.c2,
                c3: p.c3,
                e_p: entangling_power_closed(&p),
                g1_re: inv.g1.re,
                g1_im: inv.g1.im,
                g2: inv.g2,
                is_pe: is_perfect_entangler_coords_with(&p, tol.perfect_entangler),
            })
        })
        .collect()
}

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(HEADER)?;
    for rec in records {
        w.write_record(rec.fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(records: &[SweepRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    Ok(String::from_utf8(buf)?)
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let header = r.headers()?.clone();
    if header.iter().ne(HEADER.iter().copied()) {
        bail!("unexpected CSV header: {header:?}");
    }
    r.records()
        .enumerate()
        .map(|(i, row)| {
            let row = row?;
            let num = |k: usize| -> Result<f64> {
                row[k].parse::<f64>().with_context(|| format!("row {}: bad value in column {}", i + 1, HEADER[k]))
            };
            Ok(SweepRecord {
                family_label: row[0].to_string(),
                param_value: num(1)?,
                c1: num(2)?,
                c2: num(3)?,
                c3: num(4)?,
                e_p: num(5)?,
                g1_re: num(6)?,
                g1_im: num(7)?,
                g2: num(8)?,
                is_pe: row[9].parse::<bool>().with_context(|| format!("row {}: bad is_pe", i + 1))?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        for edge in Edge::ALL {
            let recs = compute_sweep(edge, 7, &Tolerances::DEFAULT).unwrap();
            let text = to_csv_string(&recs).unwrap();
            assert!(text.ends_with('\n'));
            assert!(text.starts_with("family_label,param_value,c1,c2,c3,e_p,g1_re,g1_im,g2,is_pe\n"));
            let back = read_csv(text.as_bytes()).unwrap();
            let want: Vec<_> = recs.iter().map(SweepRecord::rounded).collect();
            assert_eq!(back, want);
            assert_eq!(to_csv_string(&back).unwrap(), text);
        }
    }

    #[test]
    fn figure_curve_endpoints() {
        let tol = Tolerances::DEFAULT;
        let oa2 = compute_sweep(Edge::OA2, 11, &tol).unwrap();
        assert!(oa2[0].e_p.abs() < 1e-15 && (oa2[10].e_p - 2.0 / 9.0).abs() < 1e-15);
        let a2a3 = compute_sweep(Edge::A2A3, 11, &tol).unwrap();
        assert!((a2a3[0].e_p - 2.0 / 9.0).abs() < 1e-15 && a2a3[10].e_p.abs() < 1e-15);
        let lq = compute_sweep(Edge::LQ, 11, &tol).unwrap();
        assert!((lq[0].e_p - 2.0 / 9.0).abs() < 1e-15 && (lq[10].e_p - 1.0 / 6.0).abs() < 1e-15);
        assert!(lq.iter().all(|r| r.is_pe));
    }

    #[test]
    fn grid_must_have_two_points() {
        assert!(compute_sweep(Edge::QP, 1, &Tolerances::DEFAULT).is_err());
    }

    #[test]
    fn bad_csv_is_rejected() {
        assert!(read_csv("a,b\n1,2\n".as_bytes()).is_err());
        let text = format!("{}\nQP,x,0,0,0,0,0,0,0,true\n", HEADER.join(","));
        assert!(read_csv(text.as_bytes()).is_err());
    }
}
