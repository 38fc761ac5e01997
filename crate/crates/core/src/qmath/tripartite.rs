use super::{vec_norm_sqr, Complex, Matrix4, Vector4, NORMALIZATION_TOL, ZERO};
use crate::error::{Error, Result};

/// Dimension of pair 1 (x) pair 2 (x) machine, each factor four-dimensional.
pub const TRIPARTITE_DIM: usize = 64;

/// One of the three 4-dimensional tensor factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    Clone1,
    Clone2,
    Machine,
}

/// Pure state of the two clone pairs and the machine.
///
/// Amplitude of `|i>_1 |j>_2 |k>_C` sits at flat index `16 i + 4 j + k`.
/// This ordering is fixed; callers building vectors by hand must follow it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripartiteState {
    amplitudes: [Complex; TRIPARTITE_DIM],
}

impl TripartiteState {
    pub const fn zero() -> Self {
        TripartiteState {
            amplitudes: [ZERO; TRIPARTITE_DIM],
        }
    }

    pub fn from_amplitudes(amplitudes: [Complex; TRIPARTITE_DIM]) -> Self {
        TripartiteState { amplitudes }
    }

    pub fn product(a: &Vector4, b: &Vector4, c: &Vector4) -> Self {
        let mut s = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    *s.get_mut(i, j, k) = a[i] * b[j] * c[k];
                }
            }
        }
        s
    }

    #[inline]
    pub const fn flat_index(i: usize, j: usize, k: usize) -> usize {
        16 * i + 4 * j + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Complex {
        self.amplitudes[Self::flat_index(i, j, k)]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Complex {
        &mut self.amplitudes[Self::flat_index(i, j, k)]
    }

    pub fn amplitudes(&self) -> &[Complex; TRIPARTITE_DIM] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex; TRIPARTITE_DIM] {
        &mut self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        vec_norm_sqr(&self.amplitudes)
    }

    /// Amplitude with the kept factor at `keep` and the two traced factors at `(x, y)`.
    fn amp_for(&self, subsystem: Subsystem, keep: usize, x: usize, y: usize) -> Complex {
        match subsystem {
            Subsystem::Clone1 => self.get(keep, x, y),
            Subsystem::Clone2 => self.get(x, keep, y),
            Subsystem::Machine => self.get(x, y, keep),
        }
    }
}

impl Default for TripartiteState {
    fn default() -> Self {
        Self::zero()
    }
}

/// Reduced density matrix of one factor, tracing out the other two.
pub fn partial_trace(state: &TripartiteState, subsystem: Subsystem) -> Result<Matrix4> {
    let norm_sqr = state.norm_sqr();
    if (norm_sqr - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::NotNormalized { norm_sqr });
    }
    let mut rho = Matrix4::zero();
    for r in 0..4 {
        for c in r..4 {
            let mut acc = ZERO;
            for x in 0..4 {
                for y in 0..4 {
                    acc += state.amp_for(subsystem, r, x, y)
                        * state.amp_for(subsystem, c, x, y).conj();
                }
            }
            rho.0[r][c] = acc;
            rho.0[c][r] = acc.conj();
        }
    }
    for i in 0..4 {
        rho.0[i][i].im = 0.0;
    }
    Ok(rho)
}
