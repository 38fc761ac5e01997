use super::{
    Complex, Matrix4, Vector4, HERMITIAN_TOL, JACOBI_MAX_SWEEPS, JACOBI_OFF_DIAGONAL_TOL,
    PSD_CLAMP_TOL, ZERO,
};
use crate::error::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// Eigenpairs of a Hermitian 4x4 matrix.
///
/// `values` are sorted descending; column `i` of `vectors` is the unit
/// eigenvector for `values[i]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianEigen {
    pub values: [f64; 4],
    pub vectors: Matrix4,
}

impl HermitianEigen {
    pub fn vector(&self, i: usize) -> Vector4 {
        core::array::from_fn(|k| self.vectors.0[k][i])
    }

    /// V diag(f(lambda)) V^H
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> Matrix4 {
        let mut m = Matrix4::zero();
        for (i, &lambda) in self.values.iter().enumerate() {
            let w = f(lambda);
            if w == 0.0 {
                continue;
            }
            let v = self.vector(i);
            m = m + Matrix4::outer(&v, &v).scale(w);
        }
        m
    }

    pub fn reconstruct(&self) -> Matrix4 {
        self.reconstruct_with(|x| x)
    }
}

/// Unitary acting on the (p, q) plane, stored as its 2x2 block
/// `[[u_pp, u_pq], [u_qp, u_qq]]`.
#[derive(Clone, Copy)]
struct PlaneRotation {
    p: usize,
    q: usize,
    u: [[Complex; 2]; 2],
}

impl PlaneRotation {
    /// Rotation that diagonalizes the Hermitian block `[[app, apq], [conj(apq), aqq]]`
    /// under `U^H A U`. Returns `None` when `apq` is exactly zero.
    fn jacobi(p: usize, q: usize, app: f64, aqq: f64, apq: Complex) -> Option<Self> {
        let r = apq.norm();
        if r == 0.0 {
            return None;
        }
        let phase = apq / r;
        let theta = (aqq - app) / (2.0 * r);
        let t = if theta.abs() > 1e150 {
            0.5 / theta
        } else {
            let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
            sign / (theta.abs() + (theta * theta + 1.0).sqrt())
        };
        let c = 1.0 / (t * t + 1.0).sqrt();
        let s = t * c;
        // Phase on column q makes the pivot real, then a real Givens rotation.
        let e = phase.conj();
        Some(PlaneRotation {
            p,
            q,
            u: [
                [Complex::new(c, 0.0), Complex::new(s, 0.0)],
                [e * (-s), e * c],
            ],
        })
    }

    /// M <- M U
    fn apply_right(&self, m: &mut Matrix4) {
        let [[upp, upq], [uqp, uqq]] = self.u;
        for row in m.0.iter_mut() {
            let (a, b) = (row[self.p], row[self.q]);
            row[self.p] = a * upp + b * uqp;
            row[self.q] = a * upq + b * uqq;
        }
    }

    /// M <- U^H M
    fn apply_left_adjoint(&self, m: &mut Matrix4) {
        let [[upp, upq], [uqp, uqq]] = self.u;
        for k in 0..4 {
            let (a, b) = (m.0[self.p][k], m.0[self.q][k]);
            m.0[self.p][k] = upp.conj() * a + uqp.conj() * b;
            m.0[self.q][k] = upq.conj() * a + uqq.conj() * b;
        }
    }
}

fn off_diagonal_mass(m: &Matrix4) -> f64 {
    let mut sum = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                sum += m.0[i][j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
pub fn hermitian_eigen(a: &Matrix4) -> Result<HermitianEigen> {
    if !a.is_finite() {
        return Err(Error::NotHermitian {
            deviation: f64::INFINITY,
        });
    }
    let deviation = a.hermiticity_deviation();
    if deviation > HERMITIAN_TOL {
        return Err(Error::NotHermitian { deviation });
    }

    let mut m = a.hermitian_part();
    let mut v = Matrix4::identity();
    let threshold = JACOBI_OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_mass(&m) < threshold {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                let Some(rot) = PlaneRotation::jacobi(p, q, m.0[p][p].re, m.0[q][q].re, m.0[p][q])
                else {
                    continue;
                };
                rot.apply_right(&mut m);
                rot.apply_left_adjoint(&mut m);
                m.0[p][q] = ZERO;
                m.0[q][p] = ZERO;
                m.0[p][p].im = 0.0;
                m.0[q][q].im = 0.0;
                rot.apply_right(&mut v);
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_unstable_by(|&i, &j| m.0[j][j].re.total_cmp(&m.0[i][i].re));
    let values = order.map(|i| m.0[i][i].re);
    let mut vectors = Matrix4::zero();
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..4 {
            vectors.0[k][dst] = v.0[k][src];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// Clamps roundoff-negative eigenvalues to zero; anything below `-PSD_CLAMP_TOL` is an error.
pub fn clamp_nonnegative(lambda: f64) -> Result<f64> {
    if lambda >= 0.0 {
        Ok(lambda)
    } else if lambda > -PSD_CLAMP_TOL {
        Ok(0.0)
    } else {
        Err(Error::NotPsd { eigenvalue: lambda })
    }
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
pub fn matrix_sqrt_psd(a: &Matrix4) -> Result<Matrix4> {
    let eig = hermitian_eigen(a)?;
    for &lambda in &eig.values {
        clamp_nonnegative(lambda)?;
    }
    Ok(eig.reconstruct_with(|x| x.max(0.0).sqrt()).hermitian_part())
}

/// Singular values (descending) by one-sided Jacobi column orthogonalization.
///
/// Singular values come out as column norms, so small ones keep absolute
/// accuracy near machine epsilon times the largest, instead of the
/// square-root-of-roundoff error from diagonalizing `M M^H`.
pub fn singular_values(a: &Matrix4) -> [f64; 4] {
    let mut m = *a;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..3 {
            for q in (p + 1)..4 {
                let (mut np, mut nq, mut cross) = (0.0, 0.0, ZERO);
                for row in &m.0 {
                    np += row[p].norm_sqr();
                    nq += row[q].norm_sqr();
                    cross += row[p].conj() * row[q];
                }
                if cross.norm() <= f64::EPSILON * (np * nq).sqrt() {
                    continue;
                }
                if let Some(rot) = PlaneRotation::jacobi(p, q, np, nq, cross) {
                    rot.apply_right(&mut m);
                    rotated = true;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut out: [f64; 4] =
        core::array::from_fn(|j| m.0.iter().map(|row| row[j].norm_sqr()).sum::<f64>().sqrt());
    out.sort_unstable_by(|a, b| b.total_cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_sorts_descending() {
        let eig = hermitian_eigen(&Matrix4::from_real_diagonal([0.4, 0.1, 0.4, 0.1])).unwrap();
        assert_eq!(eig.values, [0.4, 0.4, 0.1, 0.1]);
        let eig = hermitian_eigen(&Matrix4::identity().scale(0.25)).unwrap();
        assert_eq!(eig.values, [0.25; 4]);
    }

    #[test]
    fn scm_singlet_clone_spectrum() {
        // X-block ((0.4, -0.3), (-0.3, 0.4)): characteristic polynomial (0.4 - x)^2 - 0.09.
        let rho = Matrix4::from_real([
            [0.1, 0.0, 0.0, 0.0],
            [0.0, 0.4, -0.3, 0.0],
            [0.0, -0.3, 0.4, 0.0],
            [0.0, 0.0, 0.0, 0.1],
        ]);
        let eig = hermitian_eigen(&rho).unwrap();
        let expected = [0.7, 0.1, 0.1, 0.1];
        for (got, want) in eig.values.iter().zip(expected) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
        assert!(eig.reconstruct().max_abs_diff(&rho) < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut a = Matrix4::identity();
        a[(0, 3)] = Complex::new(1e-6, 0.0);
        assert!(matches!(
            hermitian_eigen(&a),
            Err(Error::NotHermitian { .. })
        ));
        a[(0, 3)] = Complex::new(f64::NAN, 0.0);
        assert!(hermitian_eigen(&a).is_err());
    }

    #[test]
    fn sqrt_examples() {
        let i = Matrix4::identity();
        assert!(matrix_sqrt_psd(&i).unwrap().max_abs_diff(&i) < 1e-15);

        let d = Matrix4::from_real_diagonal([4.0, 1.0, 0.0, 9.0]).scale(1.0 / 14.0);
        let want = Matrix4::from_real_diagonal([2.0, 1.0, 0.0, 3.0]).scale(1.0 / 14f64.sqrt());
        assert!(matrix_sqrt_psd(&d).unwrap().max_abs_diff(&want) < 1e-15);

        let h = core::f64::consts::FRAC_1_SQRT_2;
        let singlet = [ZERO, Complex::new(h, 0.0), Complex::new(-h, 0.0), ZERO];
        let proj = Matrix4::outer(&singlet, &singlet);
        assert!(matrix_sqrt_psd(&proj).unwrap().max_abs_diff(&proj) < 1e-12);
    }

    #[test]
    fn sqrt_rejects_negative_spectrum() {
        let a = Matrix4::from_real_diagonal([1.0, 0.0, -1e-11, -1e-3]);
        assert!(matches!(matrix_sqrt_psd(&a), Err(Error::NotPsd { .. })));
        let a = Matrix4::from_real_diagonal([1.0, 0.0, -1e-11, 0.0]);
        assert!(matrix_sqrt_psd(&a).is_ok());
    }

    #[test]
    fn singular_values_of_diagonal_and_unitary() {
        let d = Matrix4::from_real_diagonal([-3.0, 0.5, 2.0, 0.0]);
        assert_eq!(singular_values(&d), [3.0, 2.0, 0.5, 0.0]);
        let sv = singular_values(&crate::qmath::spin_flip_operator());
        for s in sv {
            assert!((s - 1.0).abs() < 1e-15);
        }
    }
}
