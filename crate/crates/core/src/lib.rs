//! Geometry of nonlocal two-qubit gates.
//!
//! Local invariants, Weyl-chamber coordinates, perfect-entangler tests,
//! entangling power and the named gate families along the edges of the Weyl
//! chamber and of the perfect-entangler polyhedron.

pub mod circuits;
pub mod config;
pub mod epower;
pub mod error;
pub mod families;
pub mod invariants;
pub mod linalg;
pub mod weyl;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use invariants::LocalInvariants;
pub use linalg::{Complex, Gate4, Mat2};
pub use weyl::WeylPoint;
