//! Derived quantities over the `|Psi-(alpha)>` input family: per-clone and
//! average entanglement, ensemble means by quadrature, boundary-curve sweeps,
//! the clone-count threshold of the symmetric machine, and the data series
//! behind each figure.

mod quadrature;
mod series;

use alloc::vec;
use alloc::vec::Vec;

pub use quadrature::{
    adaptive_simpson, QuadratureResult, DEFAULT_QUAD_TOL, MAX_QUAD_DEPTH, MIN_QUAD_TOL,
};
pub use series::{Machine, SweepRow, SweepSeries};

use crate::cloners::{
    acm_boundary_s2, acm_clone, scm_clone, scm_shrink_factor, wzcm_clone, Branch, CloneCount,
    ShrinkParams,
};
use crate::entanglement::{concurrence, entanglement_of_formation};
use crate::error::{Error, Result};
use crate::states::{density_of, psi_minus_family, to_bell_basis};

/// Points per axis for figure grids.
pub const DEFAULT_GRID_POINTS: usize = 201;
/// Grid points closer than this are merged.
pub const GRID_DEDUP_TOL: f64 = 1e-12;

/// A cloning machine together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CloneSetup {
    Wzcm,
    Scm(CloneCount),
    Acm(ShrinkParams),
}

impl CloneSetup {
    pub fn machine(&self) -> Machine {
        match self {
            CloneSetup::Wzcm => Machine::Wzcm,
            CloneSetup::Scm(_) => Machine::Scm,
            CloneSetup::Acm(_) => Machine::Acm,
        }
    }
}

/// Machines whose ensemble mean is a single number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedMachine {
    Wzcm,
    Scm,
}

/// What an ACM boundary sweep reports at each `s1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveMetric {
    /// Average entanglement per clone for the input `|Psi-(alpha)>`.
    AverageAt { alpha: f64 },
    /// Ensemble mean of the average entanglement over alpha in [0, 1].
    EnsembleMean { tol: f64 },
}

/// `n >= 2` uniformly spaced points on [0, 1], endpoints included.
pub fn uniform_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            name: "grid points",
            value: n as f64,
        });
    }
    let last = (n - 1) as f64;
    Ok((0..n).map(|i| i as f64 / last).collect())
}

/// Sorted union of `grid` and `extra`, merging points within [`GRID_DEDUP_TOL`].
pub fn with_landmarks(grid: &[f64], extra: &[f64]) -> Vec<f64> {
    let mut all: Vec<f64> = grid.iter().chain(extra).copied().collect();
    all.sort_unstable_by(f64::total_cmp);
    all.dedup_by(|a, b| (*a - *b).abs() <= GRID_DEDUP_TOL);
    all
}

/// Parameters for a boundary point, or `None` when the root leaves [0, 1]
/// (the lower edge for `s1 > 3/4`). Roundoff-sized excursions are snapped back.
fn edge_params(s1: f64, s2: f64) -> Option<ShrinkParams> {
    let s2 = if s2.abs() <= GRID_DEDUP_TOL { 0.0 } else { s2 };
    ShrinkParams::new(s1, s2).ok()
}

fn check_grid(name: &'static str, grid: &[f64]) -> Result<()> {
    match grid.iter().find(|x| !(0.0..=1.0).contains(*x)) {
        Some(&value) => Err(Error::OutOfRange { name, value }),
        None => Ok(()),
    }
}

/// EoF of the input `|Psi-(alpha)>` itself, `E(2 alpha beta)`.
pub fn input_eof(alpha: f64) -> Result<f64> {
    entanglement_of_formation(&density_of(&psi_minus_family(alpha)?))
}

/// EoF of a clone of `|Psi-(alpha)>`; for the ACM, the average over its two clones.
pub fn clone_eof(setup: CloneSetup, alpha: f64) -> Result<f64> {
    let psi = psi_minus_family(alpha)?;
    match setup {
        CloneSetup::Wzcm => entanglement_of_formation(&wzcm_clone(&to_bell_basis(&psi))),
        CloneSetup::Scm(count) => entanglement_of_formation(&scm_clone(&psi, count)),
        CloneSetup::Acm(params) => avg_entanglement_acm(alpha, params),
    }
}

/// Mean EoF of the two asymmetric clones of `|Psi-(alpha)>`.
pub fn avg_entanglement_acm(alpha: f64, params: ShrinkParams) -> Result<f64> {
    params.check_constraint()?;
    let psi = psi_minus_family(alpha)?;
    let e1 = entanglement_of_formation(&acm_clone(&psi, params.s1)?)?;
    let e2 = if params.s2 == params.s1 {
        e1
    } else {
        entanglement_of_formation(&acm_clone(&psi, params.s2)?)?
    };
    Ok(0.5 * (e1 + e2))
}

/// Clone EoF as a function of alpha; for the ACM, the per-clone average.
pub fn entanglement_curve(setup: CloneSetup, grid: &[f64]) -> Result<SweepSeries> {
    check_grid("alpha", grid)?;
    let output = match setup {
        CloneSetup::Acm(_) => "avg_eof",
        _ => "eof",
    };
    let rows = grid
        .iter()
        .map(|&alpha| {
            Ok(SweepRow::new(
                vec![alpha],
                vec![Some(clone_eof(setup, alpha)?)],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSeries::new(
        setup.machine(),
        vec!["alpha"],
        vec![output],
        rows,
    ))
}

/// `integral_0^1 E[rho_clone(alpha)] d alpha` for the WZCM or the two-clone SCM.
pub fn mean_entanglement(machine: FixedMachine, tol: f64) -> Result<QuadratureResult> {
    let setup = match machine {
        FixedMachine::Wzcm => CloneSetup::Wzcm,
        FixedMachine::Scm => CloneSetup::Scm(CloneCount::TWO),
    };
    adaptive_simpson(|alpha| clone_eof(setup, alpha), 0.0, 1.0, tol)
}

/// `integral_0^1 E_av(alpha | s1, s2) d alpha`
pub fn mean_entanglement_acm(params: ShrinkParams, tol: f64) -> Result<QuadratureResult> {
    params.check_constraint()?;
    adaptive_simpson(|alpha| avg_entanglement_acm(alpha, params), 0.0, 1.0, tol)
}

/// Integral of the input family's own EoF, `integral_0^1 E(2 alpha beta) d alpha`.
pub fn mean_input_entanglement(tol: f64) -> Result<QuadratureResult> {
    adaptive_simpson(input_eof, 0.0, 1.0, tol)
}

/// Sweep `s1` along one edge of the admissible region.
///
/// Rows carry `s1` as input and `(s2, value)` as outputs; the identity and
/// swap endpoints are flagged degenerate.
pub fn acm_curve_sweep(grid: &[f64], branch: Branch, metric: CurveMetric) -> Result<SweepSeries> {
    check_grid("s1", grid)?;
    let output = match metric {
        CurveMetric::AverageAt { .. } => "avg_eof",
        CurveMetric::EnsembleMean { .. } => "mean_eof",
    };
    let rows = grid
        .iter()
        .map(|&s1| {
            let s2 = acm_boundary_s2(s1, branch)?;
            let Some(params) = edge_params(s1, s2) else {
                return Ok(SweepRow::new(vec![s1], vec![Some(s2), None]));
            };
            let value = match metric {
                CurveMetric::AverageAt { alpha } => avg_entanglement_acm(alpha, params)?,
                CurveMetric::EnsembleMean { tol } => mean_entanglement_acm(params, tol)?.value,
            };
            Ok(SweepRow::new(vec![s1], vec![Some(params.s2), Some(value)])
                .with_degenerate(params.is_degenerate()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSeries::new(
        Machine::Acm,
        vec!["s1"],
        vec!["s2", output],
        rows,
    ))
}

/// Concurrence and EoF of one SCM clone of `|Psi-(alpha)>` for each clone count.
pub fn scm_multiclone_entanglement(alpha: f64, counts: &[CloneCount]) -> Result<SweepSeries> {
    let psi = psi_minus_family(alpha)?;
    let rows = counts
        .iter()
        .map(|&m| {
            let report = concurrence(&scm_clone(&psi, m))?;
            Ok(SweepRow::new(
                vec![f64::from(m.get())],
                vec![
                    Some(scm_shrink_factor(m)),
                    Some(report.concurrence),
                    Some(report.eof),
                ],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepSeries::new(
        Machine::Scm,
        vec!["clones"],
        vec!["shrink_factor", "concurrence", "eof"],
        rows,
    ))
}

/// Average ACM entanglement over a `resolution x resolution` grid of `(s1, s2)`.
///
/// Points outside the admissible region keep an absent value.
pub fn acm_region_grid(resolution: usize, alpha: f64) -> Result<SweepSeries> {
    let axis = uniform_grid(resolution)?;
    psi_minus_family(alpha)?;
    let mut rows = Vec::with_capacity(axis.len() * axis.len());
    for &s1 in &axis {
        for &s2 in &axis {
            let params = ShrinkParams::new(s1, s2)?;
            let value = match avg_entanglement_acm(alpha, params) {
                Ok(v) => Some(v),
                Err(Error::ConstraintViolated { .. }) => None,
                Err(e) => return Err(e),
            };
            rows.push(
                SweepRow::new(vec![s1, s2], vec![value]).with_degenerate(params.is_degenerate()),
            );
        }
    }
    Ok(SweepSeries::new(
        Machine::Acm,
        vec!["s1", "s2"],
        vec!["avg_eof"],
        rows,
    ))
}

/// Average ACM entanglement over `(alpha, s1)` with `s2` on the chosen edge.
pub fn acm_surface(alpha_grid: &[f64], s1_grid: &[f64], branch: Branch) -> Result<SweepSeries> {
    check_grid("alpha", alpha_grid)?;
    check_grid("s1", s1_grid)?;
    let mut rows = Vec::with_capacity(alpha_grid.len() * s1_grid.len());
    for &alpha in alpha_grid {
        for &s1 in s1_grid {
            let s2 = acm_boundary_s2(s1, branch)?;
            let row = match edge_params(s1, s2) {
                Some(params) => SweepRow::new(
                    vec![alpha, s1],
                    vec![Some(params.s2), Some(avg_entanglement_acm(alpha, params)?)],
                )
                .with_degenerate(params.is_degenerate()),
                None => SweepRow::new(vec![alpha, s1], vec![Some(s2), None]),
            };
            rows.push(row);
        }
    }
    Ok(SweepSeries::new(
        Machine::Acm,
        vec!["alpha", "s1"],
        vec!["s2", "avg_eof"],
        rows,
    ))
}
