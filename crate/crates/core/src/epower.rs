//! Entangling power: the average linear entropy a gate produces from
//! uniformly random product states.
//!
//! [`entangling_power_closed`] evaluates the closed form in chamber
//! coordinates; [`entangling_power_mc`] estimates the defining average
//! directly and serves as its independent check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{assert_unitary, Complex, Gate4};
use crate::weyl::{coordinates_of, WeylPoint};

/// Samples per deterministic random stream in the Monte-Carlo estimator.
const CHUNK: usize = 8192;

/// Smallest sample count accepted by [`entangling_power_mc`].
pub const MIN_MC_SAMPLES: usize = 1000;

/// `|ψ1> ⊗ |ψ2>` in the computational basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductState {
    pub amplitudes: [Complex; 4],
}

impl ProductState {
    pub fn from_qubits(a: [Complex; 2], b: [Complex; 2]) -> Self {
        Self { amplitudes: [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]] }
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Monte-Carlo estimate of the entangling power.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpEstimate {
    pub mean: f64,
    /// Sample standard deviation over `sqrt(n)`.
    pub std_error: f64,
    pub n_samples: usize,
}

/// Reduced density matrix of one qubit; `trace_out_first` selects which
/// qubit is traced away.
fn reduced_density(state: &[Complex; 4], trace_out_first: bool) -> [[Complex; 2]; 2] {
    let amp = |kept: usize, traced: usize| {
        if trace_out_first {
            state[2 * traced + kept]
        } else {
            state[2 * kept + traced]
        }
    };
    let mut rho = [[Complex::new(0.0, 0.0); 2]; 2];
    for (a, row) in rho.iter_mut().enumerate() {
        for (b, z) in row.iter_mut().enumerate() {
            *z = (0..2).map(|t| amp(a, t) * amp(b, t).conj()).sum();
        }
    }
    rho
}

fn purity(rho: &[[Complex; 2]; 2]) -> f64 {
    rho.iter().flatten().map(|z| z.norm_sqr()).sum()
}

/// `E = 1 - tr(ρ²)` with `ρ` the reduced state of qubit 1.
pub fn linear_entropy(state: &[Complex; 4]) -> Result<f64> {
    let norm = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !((norm - 1.0).abs() <= Tolerances::DEFAULT.normalization) {
        return Err(Error::NotNormalized { norm });
    }
    Ok(linear_entropy_unchecked(state))
}

fn linear_entropy_unchecked(state: &[Complex; 4]) -> f64 {
    let entropy = 1.0 - purity(&reduced_density(state, false));
    debug_assert!(
        (entropy - (1.0 - purity(&reduced_density(state, true)))).abs() <= 1e-12,
        "linear entropy depends on the traced subsystem"
    );
    entropy
}

/// `e_p = (1/18)[3 - (cos2c1 cos2c2 + cos2c2 cos2c3 + cos2c3 cos2c1)]`.
pub fn entangling_power_closed(c: &WeylPoint) -> f64 {
    let [a, b, d] = c.as_array().map(|x| (2.0 * x).cos());
    (3.0 - (a * b + b * d + d * a)) / 18.0
}

/// Closed-form entangling power of an arbitrary gate via its chamber point.
pub fn entangling_power_of(u: &Gate4) -> Result<f64> {
    Ok(entangling_power_closed(&coordinates_of(u)?))
}

fn haar_qubit<R: Rng + ?Sized>(rng: &mut R) -> [Complex; 2] {
    let mut draw = || Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let (a, b) = (draw(), draw());
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    [a / n, b / n]
}

/// Product of two independent Haar-random qubit states.
pub fn sample_product_state<R: Rng + ?Sized>(rng: &mut R) -> ProductState {
    let a = haar_qubit(rng);
    let b = haar_qubit(rng);
    ProductState::from_qubits(a, b)
}

/// Mean linear entropy of `u|ψ1 ψ2>` over `n` random product states.
///
/// Samples are drawn in fixed-size chunks, chunk `j` from stream `j` of a
/// ChaCha generator seeded with `seed`. Chunk sums are combined in index
/// order, so the result is bit-identical however the chunks are scheduled.
pub fn entangling_power_mc(u: &Gate4, n: usize, seed: u64) -> Result<EpEstimate> {
    mc_estimate(u, n, seed, true)
}

/// Single-threaded evaluation of [`entangling_power_mc`]; same result bit for bit.
pub fn entangling_power_mc_sequential(u: &Gate4, n: usize, seed: u64) -> Result<EpEstimate> {
    mc_estimate(u, n, seed, false)
}

fn mc_estimate(u: &Gate4, n: usize, seed: u64, parallel: bool) -> Result<EpEstimate> {
    let u = assert_unitary(*u, Tolerances::DEFAULT.unitary)?;
    if n < MIN_MC_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "Monte-Carlo sample count {n} is below {MIN_MC_SAMPLES}"
        )));
    }
    let chunks = n.div_ceil(CHUNK);
    let run = |j: usize| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(j as u64);
        let len = CHUNK.min(n - j * CHUNK);
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for _ in 0..len {
            let psi = sample_product_state(&mut rng);
            let e = linear_entropy_unchecked(&u.apply(&psi.amplitudes));
            sum += e;
            sum_sq += e * e;
        }
        (sum, sum_sq)
    };
    let partials: Vec<(f64, f64)> = if parallel {
        (0..chunks).into_par_iter().map(run).collect()
    } else {
        (0..chunks).map(run).collect()
    };
    let (sum, sum_sq) = partials
        .iter()
        .fold((0.0, 0.0), |(s, q), (a, b)| (s + a, q + b));
    let nf = n as f64;
    let mean = sum / nf;
    let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
    Ok(EpEstimate { mean, std_error: (var / nf).sqrt(), n_samples: n })
}
