//! Fixed-size complex linear algebra for one- and two-qubit operators.
//!
//! Basis order for two qubits is `|00>, |01>, |10>, |11>`; the first factor of
//! a Kronecker product acts on qubit 1 (the most significant index bit).

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

pub type Complex = Complex64;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);
pub(crate) const I: Complex = Complex::new(0.0, 1.0);

/// Maximum number of QR sweeps in [`eig4`] before giving up.
const MAX_QR_ITERATIONS: usize = 200;

/// A 2×2 complex matrix (single-qubit operator).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex; 2]; 2]);

impl Mat2 {
    pub const fn new(entries: [[Complex; 2]; 2]) -> Self {
        Self(entries)
    }

    pub const fn identity() -> Self {
        Self([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn pauli_x() -> Self {
        Self([[ZERO, ONE], [ONE, ZERO]])
    }

    pub const fn pauli_y() -> Self {
        Self([[ZERO, Complex::new(0.0, -1.0)], [I, ZERO]])
    }

    pub const fn pauli_z() -> Self {
        Self([[ONE, ZERO], [ZERO, Complex::new(-1.0, 0.0)]])
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Self([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn scale(&self, s: Complex) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|z| *z *= s);
        out
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, z) in row.iter_mut().enumerate() {
                *z = self.0[r][0] * rhs.0[0][c] + self.0[r][1] * rhs.0[1][c];
            }
        }
        Mat2(out)
    }
}

/// A 4×4 complex matrix (two-qubit operator).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gate4(pub [[Complex; 4]; 4]);

impl Gate4 {
    pub const fn new(entries: [[Complex; 4]; 4]) -> Self {
        Self(entries)
    }

    pub const fn zeros() -> Self {
        Self([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::diag([ONE; 4])
    }

    pub fn diag(d: [Complex; 4]) -> Self {
        let mut g = Self::zeros();
        for (k, z) in d.into_iter().enumerate() {
            g.0[k][k] = z;
        }
        g
    }

    /// Builds a gate from real-valued entries.
    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        Self(rows.map(|row| row.map(|x| Complex::new(x, 0.0))))
    }

    pub fn entries(&self) -> &[[Complex; 4]; 4] {
        &self.0
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros();
        for r in 0..4 {
            for c in 0..4 {
                out.0[c][r] = self.0[r][c].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros();
        for r in 0..4 {
            for c in 0..4 {
                out.0[c][r] = self.0[r][c];
            }
        }
        out
    }

    pub fn trace(&self) -> Complex {
        (0..4).map(|k| self.0[k][k]).sum()
    }

    pub fn scale(&self, s: Complex) -> Self {
        let mut out = *self;
        out.0.iter_mut().flatten().for_each(|z| *z *= s);
        out
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex {
        let mut a = self.0;
        let mut det = ONE;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
                .unwrap_or(col);
            if a[pivot][col] == ZERO {
                return ZERO;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col];
            det *= p;
            for r in col + 1..4 {
                let f = a[r][col] / p;
                for c in col..4 {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
        det
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Gate4) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest absolute entry of `U†U - I`.
    pub fn unitarity_deviation(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Gate4::identity())
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn apply(&self, v: &[Complex; 4]) -> [Complex; 4] {
        let mut out = [ZERO; 4];
        for (r, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|c| self.0[r][c] * v[c]).sum();
        }
        out
    }

    /// Returns `self` when it is unitary to within `tol`.
    pub fn assert_unitary(self, tol: f64) -> Result<Self> {
        assert_unitary(self, tol)
    }
}

impl Index<(usize, usize)> for Gate4 {
    type Output = Complex;

    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Gate4 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.0[r][c]
    }
}

impl Mul for Gate4 {
    type Output = Gate4;

    fn mul(self, rhs: Gate4) -> Gate4 {
        let mut out = Gate4::zeros();
        for r in 0..4 {
            for c in 0..4 {
                out.0[r][c] = (0..4).map(|k| self.0[r][k] * rhs.0[k][c]).sum();
            }
        }
        out
    }
}

impl Add for Gate4 {
    type Output = Gate4;

    fn add(mut self, rhs: Gate4) -> Gate4 {
        self.0
            .iter_mut()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .for_each(|(a, b)| *a += b);
        self
    }
}

impl Sub for Gate4 {
    type Output = Gate4;

    fn sub(mut self, rhs: Gate4) -> Gate4 {
        self.0
            .iter_mut()
            .flatten()
            .zip(rhs.0.iter().flatten())
            .for_each(|(a, b)| *a -= b);
        self
    }
}

/// Kronecker product `a ⊗ b`, with `a` acting on qubit 1.
pub fn kron(a: &Mat2, b: &Mat2) -> Gate4 {
    let mut out = Gate4::zeros();
    for ar in 0..2 {
        for ac in 0..2 {
            for br in 0..2 {
                for bc in 0..2 {
                    out.0[2 * ar + br][2 * ac + bc] = a.0[ar][ac] * b.0[br][bc];
                }
            }
        }
    }
    out
}

/// Checks `max |(U†U - I)_jk| <= tol`.
pub fn assert_unitary(g: Gate4, tol: f64) -> Result<Gate4> {
    if !g.is_finite() {
        return Err(Error::NotUnitary { deviation: f64::INFINITY });
    }
    let deviation = g.unitarity_deviation();
    if deviation <= tol {
        Ok(g)
    } else {
        Err(Error::NotUnitary { deviation })
    }
}

/// The four eigenvalues of a 4×4 matrix, unordered, repeated by multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum4 {
    pub eigenvalues: [Complex; 4],
}

impl Spectrum4 {
    pub fn sum(&self) -> Complex {
        self.eigenvalues.iter().sum()
    }

    pub fn product(&self) -> Complex {
        self.eigenvalues.iter().product()
    }

    /// Phases of the eigenvalues in `(-π, π]`.
    pub fn phases(&self) -> [f64; 4] {
        self.eigenvalues.map(|z| z.arg())
    }
}

/// Eigenvalues of a 4×4 complex matrix.
///
/// Householder reduction to upper Hessenberg form followed by Wilkinson-shifted
/// QR sweeps with Givens rotations. Eigenvalues of normal inputs (the only
/// use here) are recovered to near machine precision, including repeated ones.
pub fn eig4(g: &Gate4) -> Result<Spectrum4> {
    if !g.is_finite() {
        return Err(Error::NoConvergence);
    }
    let mut h = hessenberg(g.0);
    let scale = h.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let eps = f64::EPSILON;

    let mut values = [ZERO; 4];
    let mut hi = 3usize;
    let mut iterations = 0;
    loop {
        if hi == 0 {
            values[0] = h[0][0];
            break;
        }
        // Find the start of the active unreduced block ending at `hi`.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[lo][lo - 1].norm();
            let diag = h[lo][lo].norm() + h[lo - 1][lo - 1].norm();
            if sub <= eps * diag.max(scale) {
                h[lo][lo - 1] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            values[hi] = h[hi][hi];
            hi -= 1;
            iterations = 0;
            continue;
        }
        iterations += 1;
        if iterations > MAX_QR_ITERATIONS {
            return Err(Error::NoConvergence);
        }
        let shift = if iterations % 11 == 0 {
            // Exceptional shift to break rare cycles.
            h[hi][hi] + Complex::new(h[hi][hi - 1].norm(), 0.0)
        } else {
            wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi])
        };
        qr_sweep(&mut h, lo, hi, shift);
    }
    Ok(Spectrum4 { eigenvalues: values })
}

fn hessenberg(mut a: [[Complex; 4]; 4]) -> [[Complex; 4]; 4] {
    for k in 0..2 {
        let x: Vec<Complex> = (k + 1..4).map(|r| a[r][k]).collect();
        let alpha_norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if alpha_norm == 0.0 {
            continue;
        }
        let phase = if x[0].norm() > 0.0 { x[0] / x[0].norm() } else { ONE };
        let mut v = x.clone();
        v[0] += phase * alpha_norm;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|z| *z /= vnorm);
        // A <- P A P with P = I - 2 v v† acting on rows/cols k+1..4.
        for c in 0..4 {
            let dot: Complex = (0..v.len()).map(|i| v[i].conj() * a[k + 1 + i][c]).sum();
            for i in 0..v.len() {
                a[k + 1 + i][c] -= 2.0 * v[i] * dot;
            }
        }
        for row in a.iter_mut() {
            let dot: Complex = (0..v.len()).map(|i| row[k + 1 + i] * v[i]).sum();
            for i in 0..v.len() {
                row[k + 1 + i] -= 2.0 * dot * v[i].conj();
            }
        }
        for r in k + 2..4 {
            a[r][k] = ZERO;
        }
    }
    a
}

/// Eigenvalue of the trailing 2×2 block closest to its bottom-right entry.
fn wilkinson_shift(a: Complex, b: Complex, c: Complex, d: Complex) -> Complex {
    let half_tr = (a + d) * 0.5;
    let disc = ((a - d) * 0.5).powu(2) + b * c;
    let root = disc.sqrt();
    let l1 = half_tr + root;
    let l2 = half_tr - root;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// One explicit shifted QR step `H - μI = QR`, `H <- RQ + μI` on the block `lo..=hi`.
fn qr_sweep(h: &mut [[Complex; 4]; 4], lo: usize, hi: usize, shift: Complex) {
    for k in lo..=hi {
        h[k][k] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[k][k], h[k + 1][k]);
        for col in k..4 {
            let x = h[k][col];
            let y = h[k + 1][col];
            h[k][col] = c * x + s * y;
            h[k + 1][col] = -s.conj() * x + c * y;
        }
        rotations.push((k, c, s));
    }
    for (k, c, s) in rotations {
        for row in h.iter_mut().take(hi + 1) {
            let x = row[k];
            let y = row[k + 1];
            row[k] = x * c + y * s.conj();
            row[k + 1] = -x * s + y * c;
        }
    }
    for k in lo..=hi {
        h[k][k] += shift;
    }
}

/// Rotation `[[c, s], [-s*, c]]` with real `c` mapping `(x, y)` to `(r, 0)`.
fn givens(x: Complex, y: Complex) -> (Complex, Complex) {
    let nx = x.norm();
    let ny = y.norm();
    if ny == 0.0 {
        return (ONE, ZERO);
    }
    if nx == 0.0 {
        return (ZERO, y.conj() / ny);
    }
    let r = nx.hypot(ny);
    let phase = x / nx;
    let c = nx / r;
    let s = phase * y.conj() / r;
    (Complex::new(c, 0.0), s)
}

/// Coefficients `[c0, c1, c2, c3]` of `det(λI - g) = λ⁴ + c3 λ³ + c2 λ² + c1 λ + c0`,
/// via Faddeev–LeVerrier.
pub fn characteristic_polynomial(g: &Gate4) -> [Complex; 4] {
    let mut coeffs = [ZERO; 5];
    coeffs[4] = ONE;
    let mut m = Gate4::zeros();
    for k in 1..=4 {
        m = *g * m + Gate4::identity().scale(coeffs[5 - k]);
        let c = -(*g * m).trace() / (k as f64);
        coeffs[4 - k] = c;
    }
    [coeffs[0], coeffs[1], coeffs[2], coeffs[3]]
}

/// Haar-random element of U(4): Gram–Schmidt on a complex Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R) -> Gate4 {
    let mut cols = [[ZERO; 4]; 4];
    for col in cols.iter_mut() {
        for z in col.iter_mut() {
            *z = Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
        }
    }
    for j in 0..4 {
        for k in 0..j {
            let proj: Complex = (0..4).map(|i| cols[k][i].conj() * cols[j][i]).sum();
            for i in 0..4 {
                let v = cols[k][i];
                cols[j][i] -= proj * v;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols[j].iter_mut().for_each(|z| *z /= norm);
    }
    let mut g = Gate4::zeros();
    for (c, col) in cols.iter().enumerate() {
        for (r, z) in col.iter().enumerate() {
            g.0[r][c] = *z;
        }
    }
    g
}
