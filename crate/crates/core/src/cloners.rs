//! The three deterministic cloning machines as maps onto clone density matrices.
//!
//! * Bell-basis Wootters-Zurek machine: copies the four Bell states perfectly,
//!   so a clone is the Bell-diagonal mixture with weights |alpha_i|^2.
//! * Symmetric universal machine: every one of `M` clones is the ideal copy
//!   shrunk toward the maximally mixed state by `s = (M + 4) / (5 M)`.
//! * Asymmetric universal machine: two clones with separate factors `(s1, s2)`
//!   restricted to `4 (1 - s1 - s2)^2 - (1 - s1)(1 - s2) <= 0`.

use crate::error::{Error, Result};
use crate::qmath::{Matrix4, TripartiteState, Vector4, ZERO};
use crate::states::{
    bell_state, density_of, BellAmplitudes, BellState, DensityMatrix2Q, PureState2Q,
};
#[allow(unused_imports)]
use num_traits::Float;

/// Slack on the admissibility inequality so boundary-curve points pass despite roundoff.
pub const CONSTRAINT_SLACK: f64 = 1e-12;

fn check_unit_interval(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::OutOfRange { name, value })
    }
}

/// Number of clones produced by the symmetric machine, at least two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CloneCount(u32);

impl CloneCount {
    pub const TWO: CloneCount = CloneCount(2);

    pub fn new(m: u32) -> Result<Self> {
        if m >= 2 {
            Ok(CloneCount(m))
        } else {
            Err(Error::OutOfRange {
                name: "clone count",
                value: f64::from(m),
            })
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Shrinking factors of the two asymmetric clones.
///
/// Construction only checks that both lie in [0, 1]; region membership is
/// a separate question answered by [`acm_constraint_satisfied`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShrinkParams {
    pub s1: f64,
    pub s2: f64,
}

impl ShrinkParams {
    pub fn new(s1: f64, s2: f64) -> Result<Self> {
        Ok(ShrinkParams {
            s1: check_unit_interval("s1", s1)?,
            s2: check_unit_interval("s2", s2)?,
        })
    }

    /// Like [`ShrinkParams::new`] but also requires region membership.
    pub fn admissible(s1: f64, s2: f64) -> Result<Self> {
        let p = Self::new(s1, s2)?;
        p.check_constraint()?;
        Ok(p)
    }

    /// The symmetric machine's point `(3/5, 3/5)`.
    pub fn symmetric() -> Self {
        ShrinkParams { s1: 0.6, s2: 0.6 }
    }

    pub fn swapped(self) -> Self {
        ShrinkParams {
            s1: self.s2,
            s2: self.s1,
        }
    }

    /// Identity `(1, 0)` or swap `(0, 1)`: no actual cloning happens.
    pub fn is_degenerate(self) -> bool {
        (self.s1 == 1.0 && self.s2 == 0.0) || (self.s1 == 0.0 && self.s2 == 1.0)
    }

    pub(crate) fn check_constraint(self) -> Result<()> {
        let value = acm_constraint_value(self.s1, self.s2);
        if value <= CONSTRAINT_SLACK {
            Ok(())
        } else {
            Err(Error::ConstraintViolated {
                s1: self.s1,
                s2: self.s2,
                value,
            })
        }
    }
}

/// Which root of the admissibility equality to take for `s2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Upper,
    Lower,
}

/// Clone of Bell amplitudes `alpha_i`: `sum_i |alpha_i|^2 |phi_i><phi_i|`.
pub fn wzcm_clone(input: &BellAmplitudes) -> DensityMatrix2Q {
    let mut m = Matrix4::zero();
    for (b, w) in BellState::ALL.iter().zip(input.weights()) {
        let v = bell_state(*b);
        m = m + Matrix4::outer(v.amplitudes(), v.amplitudes()).scale(w);
    }
    DensityMatrix2Q::from_matrix_unchecked(m)
}

/// Clone fidelity `sum_i |alpha_i|^4`.
pub fn wzcm_fidelity(input: &BellAmplitudes) -> f64 {
    input.weights().iter().map(|w| w * w).sum()
}

/// `sum_i alpha_i |phi_i>_1 |phi_i>_2 |omega_i>_C` with orthonormal machine states
/// `|omega_i>` taken as the machine's computational basis.
pub fn wzcm_full_output(input: &BellAmplitudes) -> TripartiteState {
    let mut out = TripartiteState::zero();
    for (idx, (b, &coeff)) in BellState::ALL.iter().zip(input.coeffs()).enumerate() {
        let v = bell_state(*b);
        let mut omega: Vector4 = [ZERO; 4];
        omega[idx] = coeff;
        let term = TripartiteState::product(v.amplitudes(), v.amplitudes(), &omega);
        for (o, t) in out.amplitudes_mut().iter_mut().zip(term.amplitudes()) {
            *o += *t;
        }
    }
    out
}

/// `(M + 4) / (5 M)`
pub fn scm_shrink_factor(count: CloneCount) -> f64 {
    let m = f64::from(count.get());
    (m + 4.0) / (5.0 * m)
}

/// `s rho + (1 - s) I / 4`
pub fn shrink_map(ideal: &DensityMatrix2Q, s: f64) -> Result<DensityMatrix2Q> {
    let s = check_unit_interval("shrink factor", s)?;
    Ok(DensityMatrix2Q::from_matrix_unchecked(shrink_matrix(
        ideal, s,
    )))
}

/// One of the `M` identical clones of the symmetric universal machine.
pub fn scm_clone(input: &PureState2Q, count: CloneCount) -> DensityMatrix2Q {
    let s = scm_shrink_factor(count);
    DensityMatrix2Q::from_matrix_unchecked(shrink_matrix(&density_of(input), s))
}

/// A single asymmetric clone with its own shrinking factor.
pub fn acm_clone(input: &PureState2Q, s: f64) -> Result<DensityMatrix2Q> {
    shrink_map(&density_of(input), s)
}

/// Both asymmetric clones; the pair must be admissible.
pub fn acm_clones(
    input: &PureState2Q,
    params: ShrinkParams,
) -> Result<(DensityMatrix2Q, DensityMatrix2Q)> {
    params.check_constraint()?;
    Ok((acm_clone(input, params.s1)?, acm_clone(input, params.s2)?))
}

fn shrink_matrix(ideal: &DensityMatrix2Q, s: f64) -> Matrix4 {
    let mut m = ideal.matrix().scale(s);
    let noise = (1.0 - s) / 4.0;
    for i in 0..4 {
        m.0[i][i].re += noise;
    }
    m
}

/// `4 (1 - s1 - s2)^2 - (1 - s1)(1 - s2)`; nonpositive inside the admissible region.
pub fn acm_constraint_value(s1: f64, s2: f64) -> f64 {
    let d = 1.0 - s1 - s2;
    4.0 * d * d - (1.0 - s1) * (1.0 - s2)
}

pub fn acm_constraint_satisfied(params: ShrinkParams) -> bool {
    acm_constraint_value(params.s1, params.s2) <= CONSTRAINT_SLACK
}

/// `s2 = (7 - 7 s1 +- sqrt(1 + 14 s1 - 15 s1^2)) / 8`, the two roots of the
/// admissibility equality.
///
/// The upper root stays in [0, 1]. The lower root is negative for `s1 > 3/4`,
/// where the region is bounded by the `s2 = 0` axis instead; the raw root is
/// returned and callers decide what to do with it.
pub fn acm_boundary_s2(s1: f64, branch: Branch) -> Result<f64> {
    let s1 = check_unit_interval("s1", s1)?;
    let disc = 1.0 + 14.0 * s1 - 15.0 * s1 * s1;
    if disc < 0.0 {
        // (1 - s1)(1 + 15 s1) >= 0 on [0, 1]; only drift at s1 = 1 lands here.
        if disc > -CONSTRAINT_SLACK {
            return Ok((7.0 - 7.0 * s1) / 8.0);
        }
        return Err(Error::NegativeDiscriminant { value: disc });
    }
    let root = disc.sqrt();
    let s2 = match branch {
        Branch::Upper => (7.0 - 7.0 * s1 + root) / 8.0,
        Branch::Lower => (7.0 - 7.0 * s1 - root) / 8.0,
    };
    Ok(s2)
}
