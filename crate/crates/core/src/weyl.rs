//! Weyl-chamber geometry.
//!
//! The chamber is the tetrahedron `O A1 A2 A3` with `O = [0,0,0]`,
//! `A1 = [π,0,0]`, `A2 = [π/2,π/2,0]` and `A3 = [π/2,π/2,π/2]`, i.e. the set
//! `0 <= c3 <= c2 <= min(c1, π - c1)`. On the base `c3 = 0` the points
//! `[c1, c2, 0]` and `[π - c1, c2, 0]` are the same class; [`canonicalize`]
//! picks the representative with `c1 <= π/2` there.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::invariants::{local_invariants_with, m_matrix, LocalInvariants};
use crate::linalg::{assert_unitary, eig4, Complex, Gate4, I, ZERO};

/// Canonical coordinates `[c1, c2, c3]` in radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeylPoint {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl WeylPoint {
    pub const fn new(c1: f64, c2: f64, c3: f64) -> Self {
        Self { c1, c2, c3 }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.c1, self.c2, self.c3]
    }

    /// Coordinates divided by π.
    pub fn in_pi_units(&self) -> [f64; 3] {
        self.as_array().map(|x| x / PI)
    }

    /// Membership in the closed tetrahedron, with slack `tol`.
    pub fn is_canonical(&self, tol: f64) -> bool {
        let Self { c1, c2, c3 } = *self;
        c3 >= -tol && c3 <= c2 + tol && c2 <= c1 + tol && c2 <= PI - c1 + tol
    }

    /// Largest per-coordinate difference, treating the base mirror as equal.
    pub fn distance_mod_mirror(&self, other: &WeylPoint, mirror_tol: f64) -> f64 {
        let direct = self.max_abs_diff(other);
        if self.c3.abs() <= mirror_tol || other.c3.abs() <= mirror_tol {
            let mirrored = WeylPoint::new(PI - other.c1, other.c2, other.c3);
            direct.min(self.max_abs_diff(&mirrored))
        } else {
            direct
        }
    }

    pub fn max_abs_diff(&self, other: &WeylPoint) -> f64 {
        (self.c1 - other.c1)
            .abs()
            .max((self.c2 - other.c2).abs())
            .max((self.c3 - other.c3).abs())
    }
}

impl fmt::Display for WeylPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.in_pi_units();
        write!(f, "[{a:.6}π, {b:.6}π, {c:.6}π]")
    }
}

/// Labelled vertices and edge midpoints of the chamber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedPoint {
    O,
    A1,
    A2,
    A3,
    /// Midpoint of `OA1`; the CNOT class.
    L,
    /// Midpoint of `A2A1`.
    M,
    /// Midpoint of `A3A1`; the `SWAP^{-1/2}` class.
    N,
    /// Midpoint of `OA3`; the `SWAP^{1/2}` class.
    P,
    /// Midpoint of `OA2`.
    Q,
}

impl NamedPoint {
    pub const ALL: [NamedPoint; 9] = [
        NamedPoint::O,
        NamedPoint::A1,
        NamedPoint::A2,
        NamedPoint::A3,
        NamedPoint::L,
        NamedPoint::M,
        NamedPoint::N,
        NamedPoint::P,
        NamedPoint::Q,
    ];

    pub fn point(self) -> WeylPoint {
        match self {
            NamedPoint::O => WeylPoint::new(0.0, 0.0, 0.0),
            NamedPoint::A1 => WeylPoint::new(PI, 0.0, 0.0),
            NamedPoint::A2 => WeylPoint::new(FRAC_PI_2, FRAC_PI_2, 0.0),
            NamedPoint::A3 => WeylPoint::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2),
            NamedPoint::L => WeylPoint::new(FRAC_PI_2, 0.0, 0.0),
            NamedPoint::M => WeylPoint::new(3.0 * FRAC_PI_4, FRAC_PI_4, 0.0),
            NamedPoint::N => WeylPoint::new(3.0 * FRAC_PI_4, FRAC_PI_4, FRAC_PI_4),
            NamedPoint::P => WeylPoint::new(FRAC_PI_4, FRAC_PI_4, FRAC_PI_4),
            NamedPoint::Q => WeylPoint::new(FRAC_PI_4, FRAC_PI_4, 0.0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            NamedPoint::O => "O",
            NamedPoint::A1 => "A1",
            NamedPoint::A2 => "A2",
            NamedPoint::A3 => "A3",
            NamedPoint::L => "L",
            NamedPoint::M => "M",
            NamedPoint::N => "N",
            NamedPoint::P => "P",
            NamedPoint::Q => "Q",
        }
    }
}

/// `G1 = ¼[e^{-ic3} cos(c1-c2) + e^{ic3} cos(c1+c2)]²`,
/// `G2 = cos 2c1 + cos 2c2 + cos 2c3`.
pub fn invariants_from_point(c: &WeylPoint) -> LocalInvariants {
    let WeylPoint { c1, c2, c3 } = *c;
    let z = Complex::from_polar(1.0, -c3) * (c1 - c2).cos()
        + Complex::from_polar(1.0, c3) * (c1 + c2).cos();
    LocalInvariants {
        g1: 0.25 * z * z,
        g2: (2.0 * c1).cos() + (2.0 * c2).cos() + (2.0 * c3).cos(),
    }
}

/// The standard representative of the class `c`, written out in the
/// computational basis. Defined (and unitary) for every real triple.
pub fn canonical_gate(c: &WeylPoint) -> Gate4 {
    let WeylPoint { c1, c2, c3 } = *c;
    let (sp, cp) = ((c1 + c2) / 2.0).sin_cos();
    let (sm, cm) = ((c1 - c2) / 2.0).sin_cos();
    let outer = Complex::from_polar(1.0, -c3 / 2.0);
    let inner = Complex::from_polar(1.0, c3 / 2.0);
    let a = outer * cm;
    let b = -I * outer * sm;
    let d = inner * cp;
    let e = -I * inner * sp;
    Gate4::new([[a, ZERO, ZERO, b], [ZERO, d, e, ZERO], [ZERO, e, d, ZERO], [b, ZERO, ZERO, a]])
}

pub fn canonicalize(raw: [f64; 3]) -> WeylPoint {
    canonicalize_with(raw, Tolerances::DEFAULT.mirror)
}

/// Maps an arbitrary triple into the chamber using coordinate permutations,
/// sign flips of coordinate pairs, shifts by π, and the base mirror.
pub fn canonicalize_with(raw: [f64; 3], mirror_tol: f64) -> WeylPoint {
    let mut flips = 0;
    let mut folded = raw.map(|x| {
        let r = x.rem_euclid(PI);
        if r > FRAC_PI_2 {
            flips += 1;
            PI - r
        } else {
            r
        }
    });
    folded.sort_by(|a, b| b.total_cmp(a));
    let [mut c1, c2, c3] = folded;
    // A single reflection c -> π - c is not a symmetry; with an odd count one
    // coordinate keeps its unfolded value, and the largest one is the choice
    // that stays in the chamber.
    if flips % 2 == 1 {
        c1 = PI - c1;
    }
    if c3 <= mirror_tol && c1 > FRAC_PI_2 {
        c1 = PI - c1;
    }
    WeylPoint::new(c1, c2, c3)
}

/// Eigenvalues of `M(U)/√det U`, whose product is 1.
pub fn normalized_m_spectrum(u: &Gate4) -> Result<[Complex; 4]> {
    let m = m_matrix(u);
    let root = u.det().sqrt();
    let spectrum = eig4(&m.scale(root.inv()))?;
    Ok(spectrum.eigenvalues)
}

pub fn coordinates_of(u: &Gate4) -> Result<WeylPoint> {
    coordinates_of_with(u, &Tolerances::DEFAULT)
}

/// Weyl-chamber point of `u`.
///
/// The phases `θ` of the normalized `M(U)` spectrum are, in some order,
/// `c1-c2+c3`, `-c1+c2+c3`, `c1+c2-c3` and `-(c1+c2+c3)`, each modulo 2π.
/// Every assignment of eigenvalues to those slots is tried; each candidate is
/// canonicalized and kept only if its invariants reproduce those of `u`.
pub fn coordinates_of_with(u: &Gate4, tol: &Tolerances) -> Result<WeylPoint> {
    let u = assert_unitary(*u, tol.unitary)?;
    let target = local_invariants_with(&u, tol)?;
    let spectrum = normalized_m_spectrum(&u)?;

    let mut best: Option<(f64, WeylPoint)> = None;
    for sign in [1.0, -1.0] {
        let thetas = spectrum.map(|z| -(z * sign).arg());
        for perm in PERMUTATIONS_4 {
            let [t1, t2, t3] = [thetas[perm[0]], thetas[perm[1]], thetas[perm[2]]];
            let raw = [(t1 + t3) / 2.0, (t2 + t3) / 2.0, (t1 + t2) / 2.0];
            let candidate = canonicalize_with(raw, tol.mirror);
            let mismatch = invariants_from_point(&candidate).distance(&target);
            if best.map_or(true, |(m, _)| mismatch < m) {
                best = Some((mismatch, candidate));
            }
        }
    }
    match best {
        Some((mismatch, point)) if mismatch <= tol.coordinate_match => Ok(point),
        Some((mismatch, _)) => Err(Error::ExtractionFailed { mismatch }),
        None => Err(Error::ExtractionFailed { mismatch: f64::INFINITY }),
    }
}

const PERMUTATIONS_4: [[usize; 4]; 24] = [
    [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
    [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
    [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
    [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
];

pub fn is_perfect_entangler_coords(c: &WeylPoint) -> bool {
    is_perfect_entangler_coords_with(c, Tolerances::DEFAULT.perfect_entangler)
}

/// Closed polyhedron test: some permutation `(i, j, k)` satisfies
/// `π/2 <= c_i + c_k <= c_i + c_j + π/2 <= π` or the same chain shifted by π.
pub fn is_perfect_entangler_coords_with(c: &WeylPoint, tol: f64) -> bool {
    let c = c.as_array();
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    PERMS.iter().any(|&[i, j, k]| {
        let lower = c[i] + c[k];
        let upper = c[i] + c[j] + FRAC_PI_2;
        [FRAC_PI_2, 3.0 * FRAC_PI_2].iter().any(|&base| {
            base - tol <= lower && lower <= upper + tol && upper <= base + FRAC_PI_2 + tol
        })
    })
}

pub fn is_perfect_entangler_hull(u: &Gate4) -> Result<bool> {
    is_perfect_entangler_hull_with(u, &Tolerances::DEFAULT)
}

/// Zero lies in the convex hull of the normalized `M(U)` spectrum.
///
/// The eigenvalues sit on the unit circle, so their hull contains the origin
/// exactly when no angular gap between consecutive eigenvalues exceeds π.
pub fn is_perfect_entangler_hull_with(u: &Gate4, tol: &Tolerances) -> Result<bool> {
    let u = assert_unitary(*u, tol.unitary)?;
    let spectrum = normalized_m_spectrum(&u)?;
    let mut angles = spectrum.map(|z| z.arg());
    angles.sort_by(f64::total_cmp);
    let max_gap = angles
        .windows(2)
        .map(|w| w[1] - w[0])
        .chain(std::iter::once(angles[0] + TAU - angles[3]))
        .fold(0.0, f64::max);
    Ok(max_gap <= PI + tol.perfect_entangler)
}

/// Uniform (by volume) sample of chamber points via sorted uniform variates
/// used as barycentric weights over the four vertices.
pub fn sample_chamber(n: usize, seed: u64) -> Vec<WeylPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| sample_chamber_point(&mut rng)).collect()
}

pub fn sample_chamber_point<R: Rng + ?Sized>(rng: &mut R) -> WeylPoint {
    let mut u: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
    u.sort_by(f64::total_cmp);
    let w = [u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]];
    let vertices = [NamedPoint::O, NamedPoint::A1, NamedPoint::A2, NamedPoint::A3].map(|v| v.point());
    let mut p = [0.0; 3];
    for (wk, v) in w.iter().zip(vertices) {
        for (pi, vi) in p.iter_mut().zip(v.as_array()) {
            *pi += wk * vi;
        }
    }
    WeylPoint::new(p[0], p[1], p[2])
}

/// Fraction of uniformly sampled chamber points that are perfect entanglers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeEstimate {
    pub fraction: f64,
    /// Binomial standard error `sqrt(p(1-p)/n)`.
    pub std_error: f64,
    pub n_samples: usize,
}

pub fn perfect_entangler_fraction(n: usize, seed: u64) -> Result<VolumeEstimate> {
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..n)
        .filter(|_| is_perfect_entangler_coords(&sample_chamber_point(&mut rng)))
        .count();
    let p = hits as f64 / n as f64;
    Ok(VolumeEstimate {
        fraction: p,
        std_error: (p * (1.0 - p) / n as f64).sqrt(),
        n_samples: n,
    })
}
