use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not unitary (max |U†U - I| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("eigenvalue iteration did not converge")]
    NoConvergence,

    #[error("state is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("G2 has a non-negligible imaginary part ({imag:.3e})")]
    ComplexG2 { imag: f64 },

    #[error("parameter {value} outside [{lo}, {hi}] for {family}")]
    ParamOutOfRange { family: String, value: f64, lo: f64, hi: f64 },

    #[error("no chamber point reproduces the gate's invariants (best mismatch {mismatch:.3e})")]
    ExtractionFailed { mismatch: f64 },

    #[error("circuit has no factors")]
    EmptyCircuit,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
