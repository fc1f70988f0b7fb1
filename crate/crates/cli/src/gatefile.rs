//! JSON gate files: `{"name": ..., "matrix": [[[re, im], ...], ...]}`.

use std::path::Path;

use anyhow::{bail, Context, Result};
use gate_geometry::linalg::assert_unitary;
use gate_geometry::{Complex, Gate4};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl GateFile {
    pub fn from_gate(name: Option<String>, gate: &Gate4) -> Self {
        let matrix = gate
            .entries()
            .iter()
            .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
            .collect();
        Self { name, matrix }
    }

    /// The matrix, checked to be 4×4 and unitary within `unitary_tol`.
    pub fn to_gate(&self, unitary_tol: f64) -> Result<Gate4> {
        if self.matrix.len() != 4 || self.matrix.iter().any(|row| row.len() != 4) {
            bail!("gate matrix must have 4 rows of 4 entries");
        }
        let mut g = Gate4::zeros();
        for (r, row) in self.matrix.iter().enumerate() {
            for (c, [re, im]) in row.iter().enumerate() {
                g[(r, c)] = Complex::new(*re, *im);
            }
        }
        Ok(assert_unitary(g, unitary_tol)?)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("malformed gate file")
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("gate file serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()).with_context(|| format!("writing {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gate_geometry::families::swap_alpha;

    #[test]
    fn round_trip_is_bit_exact() {
        let g = swap_alpha(0.37, true).unwrap();
        let file = GateFile::from_gate(Some("SWAP^-0.37".into()), &g);
        let back = GateFile::parse(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_gate(1e-10).unwrap(), g);
    }

    #[test]
    fn rejects_wrong_shape_and_non_unitary() {
        let bad = GateFile { name: None, matrix: vec![vec![[1.0, 0.0]; 4]; 3] };
        assert!(bad.to_gate(1e-10).is_err());
        let ones = GateFile { name: None, matrix: vec![vec![[1.0, 0.0]; 4]; 4] };
        let err = ones.to_gate(1e-10).unwrap_err();
        assert!(err.to_string().contains("not unitary"));
        assert!(GateFile::parse("{\"matrix\": 3}").is_err());
    }
}
