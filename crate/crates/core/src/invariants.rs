//! Bell-basis transform and the Makhlin local invariants `(G1, G2)`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::sync::OnceLock;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{assert_unitary, Complex, Gate4, Mat2, I, ONE, ZERO};

/// Local-equivalence class label: `G1` complex, `G2` real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalInvariants {
    pub g1: Complex,
    pub g2: f64,
}

impl LocalInvariants {
    pub fn new(g1: Complex, g2: f64) -> Self {
        Self { g1, g2 }
    }

    /// `max(|ΔG1|, |ΔG2|)`.
    pub fn distance(&self, other: &LocalInvariants) -> f64 {
        (self.g1 - other.g1).norm().max((self.g2 - other.g2).abs())
    }
}

/// The change-of-basis matrix into the Bell basis (columns are Bell states).
pub fn bell_basis() -> &'static Gate4 {
    static Q: OnceLock<Gate4> = OnceLock::new();
    Q.get_or_init(|| {
        let s = FRAC_1_SQRT_2;
        let (o, r, i) = (ZERO, ONE * s, I * s);
        let q = Gate4::new([[r, o, o, i], [o, i, r, o], [o, i, -r, o], [r, o, o, -i]]);
        assert_unitary(q, 1e-15).expect("Bell-basis matrix must be unitary")
    })
}

/// `U_B = Q† U Q`.
pub fn bell_transform(u: &Gate4) -> Gate4 {
    let q = bell_basis();
    q.adjoint() * *u * *q
}

/// Inverse of [`bell_transform`]: `Q U_B Q†`.
pub fn from_bell(ub: &Gate4) -> Gate4 {
    let q = bell_basis();
    *q * *ub * q.adjoint()
}

/// `M(U) = U_Bᵀ U_B`. Complex-symmetric, and the identity for local gates.
pub fn m_matrix(u: &Gate4) -> Gate4 {
    let ub = bell_transform(u);
    ub.transpose() * ub
}

pub fn local_invariants(u: &Gate4) -> Result<LocalInvariants> {
    local_invariants_with(u, &Tolerances::DEFAULT)
}

/// `G1 = tr²M / (16 det U)`, `G2 = (tr²M - tr M²) / (4 det U)`.
///
/// The division by `det U` makes both values insensitive to the global phase.
pub fn local_invariants_with(u: &Gate4, tol: &Tolerances) -> Result<LocalInvariants> {
    let u = assert_unitary(*u, tol.unitary)?;
    let m = m_matrix(&u);
    let det = u.det();
    let tr = m.trace();
    let tr_sq = tr * tr;
    let g1 = tr_sq / (16.0 * det);
    let g2 = (tr_sq - (m * m).trace()) / (4.0 * det);
    if g2.im.abs() > tol.g2_imag {
        return Err(Error::ComplexG2 { imag: g2.im });
    }
    Ok(LocalInvariants { g1, g2: g2.re })
}

/// Local equivalence decided by invariant equality within `tol`.
pub fn locally_equivalent(u: &Gate4, v: &Gate4, tol: f64) -> Result<bool> {
    Ok(local_invariants(u)?.distance(&local_invariants(v)?) <= tol)
}

/// Haar-random SU(2) element from a normalized Gaussian quaternion.
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> Mat2 {
    let mut q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let norm = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    q.iter_mut().for_each(|x| *x /= norm);
    let [a, b, c, d] = q;
    Mat2::new([
        [Complex::new(a, b), Complex::new(c, d)],
        [Complex::new(-c, d), Complex::new(a, -b)],
    ])
}

/// Random local gate `k1 ⊗ k2` with both factors Haar-distributed in SU(2).
pub fn random_local<R: Rng + ?Sized>(rng: &mut R) -> Gate4 {
    let a = random_su2(rng);
    let b = random_su2(rng);
    crate::linalg::kron(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cnot, swap, swap_alpha};
    use crate::linalg::{kron, random_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_invariants(u: &Gate4, g1: Complex, g2: f64, tol: f64) {
        let inv = local_invariants(u).unwrap();
        assert!((inv.g1 - g1).norm() <= tol, "G1 = {} want {}", inv.g1, g1);
        assert!((inv.g2 - g2).abs() <= tol, "G2 = {} want {}", inv.g2, g2);
    }

    #[test]
    fn bell_transform_of_identity() {
        assert!(bell_transform(&Gate4::identity()).max_abs_diff(&Gate4::identity()) < 1e-15);
    }

    #[test]
    fn bell_transform_preserves_det() {
        let ub = bell_transform(&swap());
        assert!((ub.det() - swap().det()).norm() < 1e-14);
    }

    #[test]
    fn bell_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let u = random_unitary(&mut rng);
            assert!(from_bell(&bell_transform(&u)).max_abs_diff(&u) < 1e-13);
        }
    }

    #[test]
    fn m_matrix_of_local_gates_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let k = random_local(&mut rng);
            assert!(m_matrix(&k).max_abs_diff(&Gate4::identity()) < 1e-12);
        }
        assert!(m_matrix(&Gate4::identity()).max_abs_diff(&Gate4::identity()) < 1e-15);
    }

    #[test]
    fn m_matrix_is_complex_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let m = m_matrix(&random_unitary(&mut rng));
            assert!(m.max_abs_diff(&m.transpose()) < 1e-10);
            assert!(m.unitarity_deviation() < 1e-12);
        }
    }

    #[test]
    fn known_invariants() {
        assert_invariants(&cnot(), ZERO, 1.0, 1e-12);
        assert_invariants(&Gate4::identity(), ONE, 3.0, 1e-12);
        assert_invariants(&swap_alpha(0.5, true).unwrap(), I * 0.25, 0.0, 1e-12);
        assert_invariants(&swap(), -ONE, -3.0, 1e-12);
    }

    #[test]
    fn non_unitary_input_is_rejected() {
        let g = Gate4::from_real([[1.0; 4]; 4]);
        assert!(matches!(local_invariants(&g), Err(Error::NotUnitary { .. })));
    }

    #[test]
    fn local_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let dressed = random_local(&mut rng) * cnot() * random_local(&mut rng);
            assert!(locally_equivalent(&cnot(), &dressed, 1e-9).unwrap());
        }
        assert!(!locally_equivalent(&cnot(), &swap(), 1e-9).unwrap());
        let u = random_unitary(&mut rng);
        assert!(locally_equivalent(&u, &u, 1e-9).unwrap());
    }

    #[test]
    fn local_and_phase_invariance_on_random_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let u = random_unitary(&mut rng);
            let base = local_invariants(&u).unwrap();
            assert!(base.g1.norm() <= 1.0 + 1e-9 && base.g2.abs() <= 3.0 + 1e-9);
            let dressed = random_local(&mut rng) * u * random_local(&mut rng);
            assert!(local_invariants(&dressed).unwrap().distance(&base) <= 1e-8);
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let phased = u.scale(Complex::from_polar(1.0, phi));
            assert!(local_invariants(&phased).unwrap().distance(&base) <= 1e-9);
        }
    }

    #[test]
    fn random_su2_is_special_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..100 {
            let k = random_su2(&mut rng);
            assert!((k.det() - ONE).norm() < 1e-14);
            let kk = k.adjoint() * k;
            assert!((kk.0[0][0] - ONE).norm() < 1e-14 && kk.0[0][1].norm() < 1e-14);
            let g = kron(&k, &Mat2::identity());
            assert!(g.unitarity_deviation() < 1e-14);
        }
    }
}
