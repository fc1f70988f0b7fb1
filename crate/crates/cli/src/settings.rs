//! Tolerance configuration loaded from an optional TOML file.

use std::path::Path;

use anyhow::{Context, Result};
use gate_geometry::Tolerances;

/// Environment variable naming a TOML file that overrides tolerance defaults.
pub const TOLERANCES_ENV: &str = "GATEGEO_TOLERANCES";

pub fn load_tolerances(path: Option<&Path>) -> Result<Tolerances> {
    match path {
        None => Ok(Tolerances::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading tolerance file {}", p.display()))?;
            toml::from_str(&text).with_context(|| format!("parsing tolerance file {}", p.display()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_other_defaults() {
        let t: Tolerances = toml::from_str("unitary = 1e-6\n").unwrap();
        assert_eq!(t.unitary, 1e-6);
        assert_eq!(t.equivalence, Tolerances::DEFAULT.equivalence);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<Tolerances>("unitry = 1e-6\n").is_err());
    }

    #[test]
    fn missing_path_uses_defaults() {
        assert_eq!(load_tolerances(None).unwrap(), Tolerances::DEFAULT);
    }
}
