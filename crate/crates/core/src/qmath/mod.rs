//! Fixed-size complex linear algebra for two-qubit operators.
//!
//! Everything here works on stack values: 4x4 matrices, 4-vectors, and the
//! 64-component vector of the (pair 1) x (pair 2) x (machine) system.

mod spectral;
mod tripartite;

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as Complex;
#[allow(unused_imports)]
use num_traits::Float;

pub use spectral::{
    clamp_nonnegative, hermitian_eigen, matrix_sqrt_psd, singular_values, HermitianEigen,
};
pub use tripartite::{partial_trace, Subsystem, TripartiteState, TRIPARTITE_DIM};

/// Max entrywise |A - A^H| accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalues in `(-PSD_CLAMP_TOL, 0)` are treated as roundoff and clamped to zero.
pub const PSD_CLAMP_TOL: f64 = 1e-10;
/// Norm-squared deviation accepted for state vectors.
pub const NORMALIZATION_TOL: f64 = 1e-9;
/// Jacobi stops once the off-diagonal Frobenius mass drops below this (scaled by max(1, |A|_F)).
pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-14;
/// Sweep cap for both Jacobi iterations.
pub const JACOBI_MAX_SWEEPS: usize = 50;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);

/// A two-qubit ket in the computational order |00>, |01>, |10>, |11>.
pub type Vector4 = [Complex; 4];

/// Dense 4x4 complex matrix, row-major, indexed by `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[Complex; 4]; 4]);

impl Default for Matrix4 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Matrix4 {
    pub const fn zero() -> Self {
        Matrix4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::from_real_diagonal([1.0; 4])
    }

    pub fn from_real_diagonal(d: [f64; 4]) -> Self {
        let mut m = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = Complex::new(v, 0.0);
        }
        m
    }

    pub fn from_real(rows: [[f64; 4]; 4]) -> Self {
        let mut m = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.0[i][j] = Complex::new(v, 0.0);
            }
        }
        m
    }

    /// The outer product |u><v|.
    pub fn outer(u: &Vector4, v: &Vector4) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = u[i] * v[j].conj();
            }
        }
        m
    }

    /// Kronecker product of two single-qubit operators.
    pub fn kron2(a: &[[Complex; 2]; 2], b: &[[Complex; 2]; 2]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
            }
        }
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate (not the adjoint).
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn trace(&self) -> Complex {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, k: f64) -> Self {
        self.map(|z| z * k)
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|z| *z = f(*z));
        m
    }

    pub fn mul_vec(&self, v: &Vector4) -> Vector4 {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Matrix4) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Max entrywise |A - A^H|.
    pub fn hermiticity_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermiticity_deviation() <= HERMITIAN_TOL
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// (A + A^H) / 2; strips roundoff asymmetry from products that are Hermitian in exact arithmetic.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale(0.5)
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.0[r][c]
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;
    fn sub(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] -= rhs.0[i][j];
            }
        }
        self
    }
}

impl Neg for Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        self.map(|z| -z)
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        mat_mul(&self, &rhs)
    }
}

/// Standard matrix product.
pub fn mat_mul(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    let mut m = Matrix4::zero();
    for i in 0..4 {
        for j in 0..4 {
            m.0[i][j] = (0..4).map(|k| a.0[i][k] * b.0[k][j]).sum();
        }
    }
    m
}

/// The Pauli matrix sigma_y.
pub fn sigma_y() -> [[Complex; 2]; 2] {
    [
        [ZERO, Complex::new(0.0, -1.0)],
        [Complex::new(0.0, 1.0), ZERO],
    ]
}

/// sigma_y (x) sigma_y, the two-qubit spin-flip operator.
pub fn spin_flip_operator() -> Matrix4 {
    let sy = sigma_y();
    Matrix4::kron2(&sy, &sy)
}

pub fn vec_norm_sqr(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// <u|v>
pub fn inner(u: &[Complex], v: &[Complex]) -> Complex {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}
