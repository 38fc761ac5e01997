//! Simulation of deterministic quantum cloning machines acting on entangled
//! two-qubit pure states, and of how much entanglement of formation the
//! clones retain.
//!
//! The crate is `no_std` and needs only `alloc` (for sweep series). All
//! matrices are fixed-size stack values.
//!
//! * [`qmath`]: 4x4 complex linear algebra, Jacobi eigensolver, partial trace.
//! * [`states`]: Bell basis, the `alpha|01> - beta|10>` family, density matrices.
//! * [`cloners`]: Wootters-Zurek (Bell basis), symmetric and asymmetric universal cloners.
//! * [`entanglement`]: concurrence, entanglement of formation, fidelity.
//! * [`analysis`]: ensemble means, boundary sweeps, figure data series.
#![no_std]
#![deny(unsafe_code)]
// Fixed 4x4 index arithmetic reads better as explicit loops.
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod cloners;
pub mod entanglement;
pub mod error;
pub mod qmath;
pub mod states;

pub use error::{Error, Result};
