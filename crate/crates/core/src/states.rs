//! Bell basis, the one-parameter entangled families, and the two-qubit
//! state carriers (pure amplitudes, Bell amplitudes, density matrices).
//!
//! Basis orders are global: computational `(|00>, |01>, |10>, |11>)` and
//! Bell `(Phi+, Phi-, Psi+, Psi-)`.

use core::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::qmath::{
    hermitian_eigen, inner, vec_norm_sqr, Complex, Matrix4, Vector4, HERMITIAN_TOL,
    NORMALIZATION_TOL, ZERO,
};
#[allow(unused_imports)]
use num_traits::Float;

/// |trace - 1| accepted for density matrices.
pub const TRACE_TOL: f64 = 1e-10;
/// Most negative eigenvalue accepted for density matrices.
pub const DENSITY_EIGEN_FLOOR: f64 = -1e-9;

fn check_normalized(v: &[Complex]) -> Result<()> {
    let norm_sqr = vec_norm_sqr(v);
    if (norm_sqr - 1.0).abs() > NORMALIZATION_TOL || !norm_sqr.is_finite() {
        return Err(Error::NotNormalized { norm_sqr });
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(alpha)
    } else {
        Err(Error::OutOfRange {
            name: "alpha",
            value: alpha,
        })
    }
}

/// The four Bell states, in basis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    fn amplitudes(self) -> Vector4 {
        let h = Complex::new(FRAC_1_SQRT_2, 0.0);
        match self {
            BellState::PhiPlus => [h, ZERO, ZERO, h],
            BellState::PhiMinus => [h, ZERO, ZERO, -h],
            BellState::PsiPlus => [ZERO, h, h, ZERO],
            BellState::PsiMinus => [ZERO, h, -h, ZERO],
        }
    }
}

/// Normalized two-qubit ket in the computational basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureState2Q {
    amplitudes: Vector4,
}

impl PureState2Q {
    pub fn new(amplitudes: Vector4) -> Result<Self> {
        check_normalized(&amplitudes)?;
        Ok(PureState2Q { amplitudes })
    }

    pub fn from_real(amplitudes: [f64; 4]) -> Result<Self> {
        Self::new(amplitudes.map(|x| Complex::new(x, 0.0)))
    }

    pub fn amplitudes(&self) -> &Vector4 {
        &self.amplitudes
    }

    pub fn inner(&self, other: &PureState2Q) -> Complex {
        inner(&self.amplitudes, &other.amplitudes)
    }
}

/// Coefficients of a pure state in the Bell basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellAmplitudes {
    coeffs: [Complex; 4],
}

impl BellAmplitudes {
    pub fn new(coeffs: [Complex; 4]) -> Result<Self> {
        check_normalized(&coeffs)?;
        Ok(BellAmplitudes { coeffs })
    }

    pub fn from_real(coeffs: [f64; 4]) -> Result<Self> {
        Self::new(coeffs.map(|x| Complex::new(x, 0.0)))
    }

    pub fn coeffs(&self) -> &[Complex; 4] {
        &self.coeffs
    }

    /// Bell populations |alpha_i|^2.
    pub fn weights(&self) -> [f64; 4] {
        self.coeffs.map(|z| z.norm_sqr())
    }
}

pub fn bell_state(which: BellState) -> PureState2Q {
    PureState2Q {
        amplitudes: which.amplitudes(),
    }
}

/// The one-parameter families `alpha|00> +- beta|11>` and `alpha|01> +- beta|10>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntangledFamily {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

/// Member of an entangled family with real `alpha` in [0, 1] and `beta = sqrt(1 - alpha^2)`.
pub fn family_state(family: EntangledFamily, alpha: f64) -> Result<PureState2Q> {
    let alpha = check_alpha(alpha)?;
    let a = Complex::new(alpha, 0.0);
    let b = Complex::new((1.0 - alpha * alpha).max(0.0).sqrt(), 0.0);
    let amplitudes = match family {
        EntangledFamily::PhiPlus => [a, ZERO, ZERO, b],
        EntangledFamily::PhiMinus => [a, ZERO, ZERO, -b],
        EntangledFamily::PsiPlus => [ZERO, a, b, ZERO],
        EntangledFamily::PsiMinus => [ZERO, a, -b, ZERO],
    };
    PureState2Q::new(amplitudes)
}

/// `alpha|01> - beta|10>`, the input family used throughout the cloner studies.
pub fn psi_minus_family(alpha: f64) -> Result<PureState2Q> {
    family_state(EntangledFamily::PsiMinus, alpha)
}

pub fn to_bell_basis(state: &PureState2Q) -> BellAmplitudes {
    let coeffs = BellState::ALL.map(|b| inner(&b.amplitudes(), &state.amplitudes));
    BellAmplitudes { coeffs }
}

pub fn from_bell_basis(amps: &BellAmplitudes) -> PureState2Q {
    let mut amplitudes = [ZERO; 4];
    for (b, c) in BellState::ALL.iter().zip(amps.coeffs) {
        for (out, x) in amplitudes.iter_mut().zip(b.amplitudes()) {
            *out += c * x;
        }
    }
    PureState2Q { amplitudes }
}

/// Hermitian, unit-trace, positive-semidefinite two-qubit operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2Q {
    matrix: Matrix4,
}

impl DensityMatrix2Q {
    /// Validates Hermiticity, trace, and the spectrum.
    pub fn new(matrix: Matrix4) -> Result<Self> {
        let deviation = matrix.hermiticity_deviation();
        if !matrix.is_finite() || deviation > HERMITIAN_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        if (matrix.trace().re - 1.0).abs() > TRACE_TOL {
            return Err(Error::NotDensityMatrix {
                reason: "trace differs from one",
            });
        }
        let eig = hermitian_eigen(&matrix)?;
        if eig.values[3] < DENSITY_EIGEN_FLOOR {
            return Err(Error::NotPsd {
                eigenvalue: eig.values[3],
            });
        }
        Ok(DensityMatrix2Q { matrix })
    }

    /// For maps that preserve the density-matrix properties by construction.
    pub(crate) fn from_matrix_unchecked(matrix: Matrix4) -> Self {
        DensityMatrix2Q { matrix }
    }

    pub fn maximally_mixed() -> Self {
        Self::from_matrix_unchecked(Matrix4::identity().scale(0.25))
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }

    pub fn purity(&self) -> f64 {
        (self.matrix * self.matrix).trace().re
    }
}

/// |psi><psi|
pub fn density_of(state: &PureState2Q) -> DensityMatrix2Q {
    let mut m = Matrix4::outer(&state.amplitudes, &state.amplitudes);
    for i in 0..4 {
        m.0[i][i].im = 0.0;
    }
    DensityMatrix2Q::from_matrix_unchecked(m)
}
