//! Two-qubit entanglement of formation via Wootters' concurrence.
//!
//! `E(rho) = h((1 + sqrt(1 - C^2)) / 2)` with `h` the binary entropy and
//! `C = max(0, l1 - l2 - l3 - l4)`, where the `l_i` are the square roots of the
//! eigenvalues of `rho * rho~` and `rho~ = (sy x sy) rho* (sy x sy)`.
//!
//! The `l_i` are computed as singular values of the symmetric matrix
//! `tau_ij = <w_i| (sy x sy) |w_j*>`, with `w_i = sqrt(p_i) v_i` the
//! subnormalized eigenvectors of `rho`. Since `tau tau^H` is similar to
//! `rho rho~`, these are the same numbers; getting them directly as singular
//! values avoids square roots of roundoff-sized eigenvalues.

use crate::error::{Error, Result};
use crate::qmath::{
    clamp_nonnegative, hermitian_eigen, inner, matrix_sqrt_psd, singular_values,
    spin_flip_operator, Matrix4, Vector4, ZERO,
};
use crate::states::{DensityMatrix2Q, PureState2Q};
#[allow(unused_imports)]
use num_traits::Float;

/// Coherences outside the X pattern larger than this reject the closed-form route.
pub const XSTATE_TOL: f64 = 1e-12;
/// Largest imaginary part tolerated in `<psi|rho|psi>`.
pub const FIDELITY_IMAG_TOL: f64 = 1e-12;

/// Which route produced a concurrence value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConcurrenceMethod {
    Generic,
    XStateOracle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub concurrence: f64,
    pub eof: f64,
    /// Square roots of the eigenvalues of `rho * rho~`, descending.
    pub lambdas: [f64; 4],
    pub method: ConcurrenceMethod,
}

fn check_unit(name: &'static str, x: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&x) {
        Ok(x)
    } else {
        Err(Error::OutOfRange { name, value: x })
    }
}

/// `-p log2 p - q log2 q` with `q = 1 - p` passed separately to avoid cancellation.
fn entropy2(p: f64, q: f64) -> f64 {
    let term = |x: f64| if x > 0.0 { -x * x.log2() } else { 0.0 };
    term(p) + term(q)
}

/// `h(x) = -x log2 x - (1 - x) log2 (1 - x)`, with `0 log2 0 = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    let x = check_unit("x", x)?;
    Ok(entropy2(x, 1.0 - x).clamp(0.0, 1.0))
}

/// `h((1 + sqrt(1 - c^2)) / 2)`
pub fn eof_from_concurrence(c: f64) -> Result<f64> {
    let c = check_unit("concurrence", c)?;
    let root = (1.0 - c * c).max(0.0).sqrt();
    let p = (1.0 + root) / 2.0;
    // 1 - p = c^2 / (2 (1 + root)) without subtracting nearly equal numbers.
    let q = c * c / (2.0 * (1.0 + root));
    Ok(entropy2(p, q).clamp(0.0, 1.0))
}

/// `(sy x sy) rho* (sy x sy)`
pub fn spin_flip(rho: &DensityMatrix2Q) -> Matrix4 {
    let y = spin_flip_operator();
    y * rho.matrix().conj() * y
}

/// Concurrence by the general spin-flip procedure.
pub fn concurrence(rho: &DensityMatrix2Q) -> Result<EntanglementReport> {
    let lambdas = spin_flip_lambdas(rho)?;
    let c = (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0);
    Ok(EntanglementReport {
        concurrence: c,
        eof: eof_from_concurrence(c)?,
        lambdas,
        method: ConcurrenceMethod::Generic,
    })
}

/// Entanglement of formation of a two-qubit state.
pub fn entanglement_of_formation(rho: &DensityMatrix2Q) -> Result<f64> {
    Ok(concurrence(rho)?.eof)
}

fn spin_flip_lambdas(rho: &DensityMatrix2Q) -> Result<[f64; 4]> {
    let eig = hermitian_eigen(rho.matrix())?;
    let y = spin_flip_operator();
    let mut w = [[ZERO; 4]; 4];
    for (i, wi) in w.iter_mut().enumerate() {
        let p = clamp_nonnegative(eig.values[i])?;
        let scale = p.sqrt();
        *wi = eig.vector(i).map(|z| z * scale);
    }
    let flipped: [Vector4; 4] = core::array::from_fn(|j| y.mul_vec(&w[j].map(|z| z.conj())));
    let mut tau = Matrix4::zero();
    for i in 0..4 {
        for j in 0..4 {
            tau.0[i][j] = inner(&w[i], &flipped[j]);
        }
    }
    Ok(singular_values(&tau))
}

/// Square roots of the eigenvalues of `sqrt(rho) rho~ sqrt(rho)`, descending.
///
/// Mathematically the same `l_i` as [`concurrence`] reports, but small values
/// carry error of order the square root of machine epsilon. Kept as an
/// independent cross-check.
pub fn lambdas_via_hermitian_product(rho: &DensityMatrix2Q) -> Result<[f64; 4]> {
    let root = matrix_sqrt_psd(rho.matrix())?;
    let r = (root * spin_flip(rho) * root).hermitian_part();
    let eig = hermitian_eigen(&r)?;
    let mut out = [0.0; 4];
    for (o, &v) in out.iter_mut().zip(&eig.values) {
        *o = clamp_nonnegative(v)?.sqrt();
    }
    Ok(out)
}

/// Closed-form concurrence of an X-shaped state.
///
/// `2 max(0, |rho_12| - sqrt(rho_00 rho_33), |rho_03| - sqrt(rho_11 rho_22))`
pub fn concurrence_xstate(rho: &DensityMatrix2Q) -> Result<f64> {
    let m = rho.matrix();
    let stray = [(0, 1), (0, 2), (1, 3), (2, 3)]
        .iter()
        .flat_map(|&(i, j)| [m[(i, j)].norm(), m[(j, i)].norm()])
        .fold(0.0, f64::max);
    if stray >= XSTATE_TOL {
        return Err(Error::NotXState { magnitude: stray });
    }
    let d = |i: usize| m[(i, i)].re.max(0.0);
    let a = m[(1, 2)].norm() - (d(0) * d(3)).sqrt();
    let b = m[(0, 3)].norm() - (d(1) * d(2)).sqrt();
    Ok((2.0 * a.max(b).max(0.0)).min(1.0))
}

/// X-state oracle wrapped as a report.
pub fn concurrence_xstate_report(rho: &DensityMatrix2Q) -> Result<EntanglementReport> {
    let c = concurrence_xstate(rho)?;
    let lambdas = lambdas_via_hermitian_product(rho)?;
    Ok(EntanglementReport {
        concurrence: c,
        eof: eof_from_concurrence(c)?,
        lambdas,
        method: ConcurrenceMethod::XStateOracle,
    })
}

/// `<psi|rho|psi>`
pub fn fidelity(reference: &PureState2Q, rho: &DensityMatrix2Q) -> f64 {
    let psi = reference.amplitudes();
    let h = rho.matrix().hermitian_part();
    let value = inner(psi, &h.mul_vec(psi));
    debug_assert!(value.im.abs() < FIDELITY_IMAG_TOL);
    value.re.clamp(0.0, 1.0)
}
