use std::f64::consts::FRAC_1_SQRT_2;

use qclone_core::analysis::{
    acm_curve_sweep, acm_region_grid, acm_surface, clone_eof, entanglement_curve,
    mean_entanglement, mean_entanglement_acm, uniform_grid, with_landmarks, CloneSetup,
    CurveMetric, FixedMachine, SweepSeries,
};
use qclone_core::cloners::{acm_clones, scm_clone, wzcm_clone, Branch, CloneCount};
use qclone_core::entanglement::{concurrence, fidelity};
use qclone_core::states::{psi_minus_family, to_bell_basis, DensityMatrix2Q};

use crate::config::{CommandKind, MachineChoice, RunConfig};
use crate::table::{format_bool, format_number as num, format_optional, Table};
use crate::CliError;

/// The symmetric cloner's point on the boundary; always present in s1 grids.
const SCM_S1: f64 = 0.6;

/// Attach a description of the failing computation to a core error.
fn ctx(what: impl FnOnce() -> String) -> impl FnOnce(qclone_core::Error) -> CliError {
    move |source| CliError::Numeric {
        what: what(),
        source,
    }
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Upper => "upper",
        Branch::Lower => "lower",
    }
}

/// Compute the CSV for a validated configuration.
pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let mut table = match cfg.command {
        CommandKind::Fig1 => fig1(cfg)?,
        CommandKind::Fig2 => fig2(cfg)?,
        CommandKind::Fig3 => fig3(cfg)?,
        CommandKind::Fig4 => fig4(cfg)?,
        CommandKind::Fig5 => fig5(cfg)?,
        CommandKind::Clone => clone(cfg)?,
        CommandKind::Entangle => entangle(cfg)?,
        CommandKind::Mean => mean(cfg)?,
    };
    // Config lines go first, then whatever the command added.
    table.prepend_comments(cfg.describe());
    Ok(table.render())
}

fn grid_points(cfg: &RunConfig) -> usize {
    cfg.grid_points.expect("figure commands carry a grid size")
}

fn alpha_grid(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    let g = uniform_grid(grid_points(cfg)).map_err(ctx(|| "alpha grid".into()))?;
    Ok(with_landmarks(&g, &[FRAC_1_SQRT_2]))
}

fn s1_grid(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    let g = uniform_grid(grid_points(cfg)).map_err(ctx(|| "s1 grid".into()))?;
    Ok(with_landmarks(&g, &[SCM_S1]))
}

fn fig1(cfg: &RunConfig) -> Result<Table, CliError> {
    let grid = alpha_grid(cfg)?;
    let wzcm = entanglement_curve(CloneSetup::Wzcm, &grid)
        .map_err(ctx(|| "WZCM clone entanglement curve".into()))?;
    let scm = entanglement_curve(CloneSetup::Scm(CloneCount::TWO), &grid)
        .map_err(ctx(|| "SCM clone entanglement curve".into()))?;
    let mut t = Table::new(["alpha", "eof_wzcm", "eof_scm"]);
    t.comment("landmarks: alpha=1/sqrt(2)");
    for (w, s) in wzcm.rows.iter().zip(&scm.rows) {
        t.push_row(vec![
            num(w.inputs[0]),
            format_optional(w.outputs[0]),
            format_optional(s.outputs[0]),
        ]);
    }
    Ok(t)
}

fn fig2(cfg: &RunConfig) -> Result<Table, CliError> {
    let alpha = cfg.alpha.expect("fig2 carries alpha");
    let series = acm_region_grid(grid_points(cfg), alpha)
        .map_err(ctx(|| format!("ACM region grid at alpha={}", num(alpha))))?;
    let mut t = Table::new(["s1", "s2", "value", "degenerate"]);
    t.comment("value: average clone EoF; outside_region where 4(1-s1-s2)^2 > (1-s1)(1-s2)");
    for r in &series.rows {
        t.push_row(vec![
            num(r.inputs[0]),
            num(r.inputs[1]),
            format_optional(r.outputs[0]),
            format_bool(r.degenerate).into(),
        ]);
    }
    Ok(t)
}

/// Rows of an edge sweep: s1 input, then s2 and one value.
fn edge_rows(series: &SweepSeries) -> impl Iterator<Item = (f64, f64, Option<f64>, bool)> + '_ {
    series.rows.iter().map(|r| {
        let s2 = r.outputs[0].expect("edge sweeps always report s2");
        (r.inputs[0], s2, r.outputs[1], r.degenerate)
    })
}

fn fig3(cfg: &RunConfig) -> Result<Table, CliError> {
    let alpha = cfg.alpha.expect("fig3 carries alpha");
    let branch = cfg.branch.expect("fig3 carries a branch");
    let grid = s1_grid(cfg)?;
    let series =
        acm_curve_sweep(&grid, branch, CurveMetric::AverageAt { alpha }).map_err(ctx(|| {
            format!(
                "ACM average entanglement along the {} edge",
                branch_name(branch)
            )
        }))?;
    let reference = clone_eof(CloneSetup::Scm(CloneCount::TWO), alpha)
        .map_err(ctx(|| "SCM reference entanglement".into()))?;
    let mut t = Table::new(["s1", "s2", "avg_eof", "eof_scm_reference", "degenerate"]);
    t.comment("landmarks: s1=0.6");
    for (s1, s2, v, degenerate) in edge_rows(&series) {
        t.push_row(vec![
            num(s1),
            num(s2),
            format_optional(v),
            num(reference),
            format_bool(degenerate).into(),
        ]);
    }
    Ok(t)
}

fn fig4(cfg: &RunConfig) -> Result<Table, CliError> {
    let branch = cfg.branch.expect("fig4 carries a branch");
    let series = acm_surface(&alpha_grid(cfg)?, &s1_grid(cfg)?, branch).map_err(ctx(|| {
        format!(
            "ACM entanglement surface along the {} edge",
            branch_name(branch)
        )
    }))?;
    let mut t = Table::new(["alpha", "s1", "s2", "avg_eof", "degenerate"]);
    t.comment("landmarks: alpha=1/sqrt(2), s1=0.6");
    for r in &series.rows {
        t.push_row(vec![
            num(r.inputs[0]),
            num(r.inputs[1]),
            format_optional(r.outputs[0]),
            format_optional(r.outputs[1]),
            format_bool(r.degenerate).into(),
        ]);
    }
    Ok(t)
}

fn fig5(cfg: &RunConfig) -> Result<Table, CliError> {
    let branch = cfg.branch.expect("fig5 carries a branch");
    let tol = cfg.quad_tol.expect("fig5 carries a tolerance");
    let grid = s1_grid(cfg)?;
    let wzcm = mean_entanglement(FixedMachine::Wzcm, tol)
        .map_err(ctx(|| "WZCM mean entanglement integral".into()))?
        .value;
    let scm = mean_entanglement(FixedMachine::Scm, tol)
        .map_err(ctx(|| "SCM mean entanglement integral".into()))?
        .value;
    let series =
        acm_curve_sweep(&grid, branch, CurveMetric::EnsembleMean { tol }).map_err(ctx(|| {
            format!(
                "ACM mean entanglement integral along the {} edge",
                branch_name(branch)
            )
        }))?;
    let mut t = Table::new([
        "s1",
        "s2",
        "mean_acm",
        "mean_wzcm",
        "mean_scm",
        "degenerate",
    ]);
    t.comment("landmarks: s1=0.6");
    for (s1, s2, v, degenerate) in edge_rows(&series) {
        t.push_row(vec![
            num(s1),
            num(s2),
            format_optional(v),
            num(wzcm),
            num(scm),
            format_bool(degenerate).into(),
        ]);
    }
    Ok(t)
}

/// Both clones of `|Psi-(alpha)>` under the configured machine.
fn clones(cfg: &RunConfig) -> Result<[DensityMatrix2Q; 2], CliError> {
    let alpha = cfg.alpha.expect("clone commands carry alpha");
    let machine = cfg.machine.expect("clone commands carry a machine");
    let psi = psi_minus_family(alpha).map_err(ctx(|| "input state".into()))?;
    Ok(match machine {
        MachineChoice::Wzcm => {
            let rho = wzcm_clone(&to_bell_basis(&psi));
            [rho, rho]
        }
        MachineChoice::Scm(count) => {
            let rho = scm_clone(&psi, count);
            [rho, rho]
        }
        MachineChoice::Acm(params) => {
            let (a, b) = acm_clones(&psi, params).map_err(ctx(|| "ACM clones".into()))?;
            [a, b]
        }
    })
}

fn clone(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(["clone", "row", "col", "re", "im"]);
    t.comment("basis order |00>, |01>, |10>, |11>");
    for (k, rho) in clones(cfg)?.iter().enumerate() {
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let z = m[(i, j)];
                t.push_row(vec![
                    (k + 1).to_string(),
                    i.to_string(),
                    j.to_string(),
                    num(z.re),
                    num(z.im),
                ]);
            }
        }
    }
    Ok(t)
}

fn entangle(cfg: &RunConfig) -> Result<Table, CliError> {
    let alpha = cfg.alpha.expect("entangle carries alpha");
    let psi = psi_minus_family(alpha).map_err(ctx(|| "input state".into()))?;
    let mut t = Table::new([
        "clone",
        "concurrence",
        "eof",
        "fidelity",
        "lambda1",
        "lambda2",
        "lambda3",
        "lambda4",
    ]);
    for (k, rho) in clones(cfg)?.iter().enumerate() {
        let r = concurrence(rho).map_err(ctx(|| format!("concurrence of clone {}", k + 1)))?;
        let mut row = vec![
            (k + 1).to_string(),
            num(r.concurrence),
            num(r.eof),
            num(fidelity(&psi, rho)),
        ];
        row.extend(r.lambdas.iter().map(|&l| num(l)));
        t.push_row(row);
    }
    Ok(t)
}

fn mean(cfg: &RunConfig) -> Result<Table, CliError> {
    let tol = cfg.quad_tol.expect("mean carries a tolerance");
    let machine = cfg.machine.expect("mean carries a machine");
    let name = machine.name();
    let result = match machine {
        MachineChoice::Wzcm => mean_entanglement(FixedMachine::Wzcm, tol),
        MachineChoice::Scm(_) => mean_entanglement(FixedMachine::Scm, tol),
        MachineChoice::Acm(p) => mean_entanglement_acm(p, tol),
    }
    .map_err(ctx(|| {
        format!("{} mean entanglement integral", name.to_uppercase())
    }))?;
    let tail = [
        num(result.value),
        num(result.abs_error_estimate),
        result.evaluations.to_string(),
    ];
    let t = match machine {
        MachineChoice::Acm(p) => {
            let mut t = Table::new([
                "machine",
                "s1",
                "s2",
                "mean_eof",
                "abs_error_estimate",
                "evaluations",
            ]);
            let mut row = vec![name.to_owned(), num(p.s1), num(p.s2)];
            row.extend(tail);
            t.push_row(row);
            t
        }
        _ => {
            let mut t = Table::new(["machine", "mean_eof", "abs_error_estimate", "evaluations"]);
            let mut row = vec![name.to_owned()];
            row.extend(tail);
            t.push_row(row);
            t
        }
    };
    Ok(t)
}
