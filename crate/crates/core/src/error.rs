use core::fmt;

/// Failures raised by the numerical layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Matrix deviates from its adjoint by more than the Hermiticity tolerance.
    NotHermitian { deviation: f64 },
    /// An eigenvalue is below the roundoff clamp window.
    NotPsd { eigenvalue: f64 },
    /// State vector norm squared is not one.
    NotNormalized { norm_sqr: f64 },
    /// A matrix failed the density-matrix checks (trace or positivity).
    NotDensityMatrix { reason: &'static str },
    /// Scalar argument outside its admissible interval.
    OutOfRange { name: &'static str, value: f64 },
    /// `1 + 14 s1 - 15 s1^2` went negative.
    NegativeDiscriminant { value: f64 },
    /// Matrix carries coherences outside the X pattern.
    NotXState { magnitude: f64 },
    /// Shrink factors violate the asymmetric-cloner admissibility inequality.
    ConstraintViolated { s1: f64, s2: f64, value: f64 },
    /// Adaptive quadrature hit its depth cap without meeting the tolerance.
    QuadratureNoConvergence { error_estimate: f64, tolerance: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NotHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (max |A - A^H| = {deviation:e})")
            }
            Error::NotPsd { eigenvalue } => {
                write!(f, "matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")
            }
            Error::NotNormalized { norm_sqr } => {
                write!(f, "state is not normalized (norm^2 = {norm_sqr})")
            }
            Error::NotDensityMatrix { reason } => write!(f, "not a density matrix: {reason}"),
            Error::OutOfRange { name, value } => write!(f, "{name} = {value} is out of range"),
            Error::NegativeDiscriminant { value } => {
                write!(f, "boundary-curve discriminant is negative ({value:e})")
            }
            Error::NotXState { magnitude } => {
                write!(f, "matrix is not X-shaped (stray coherence {magnitude:e})")
            }
            Error::ConstraintViolated { s1, s2, value } => write!(
                f,
                "shrink factors ({s1}, {s2}) violate the admissible region (constraint value {value:e})"
            ),
            Error::QuadratureNoConvergence {
                error_estimate,
                tolerance,
            } => write!(
                f,
                "quadrature did not converge (error estimate {error_estimate:e} > tolerance {tolerance:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
