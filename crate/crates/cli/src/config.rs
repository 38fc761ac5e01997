//! Command-line surface and its validation into a [`RunConfig`].
//!
//! Each subcommand declares only the flags it uses, so clap itself rejects
//! stray ones; cross-flag rules (machine-specific parameters, the admissible
//! region) are checked here before anything is computed.

use std::f64::consts::FRAC_1_SQRT_2;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qclone_core::analysis::{DEFAULT_GRID_POINTS, DEFAULT_QUAD_TOL, MIN_QUAD_TOL};
use qclone_core::cloners::{acm_constraint_value, Branch, CloneCount, ShrinkParams};

use crate::CliError;

/// Largest accepted `--quad-tol`.
pub const MAX_QUAD_TOL: f64 = 1e-2;
/// Upper bound on `--grid-points`; two-dimensional figures square it.
pub const MAX_GRID_POINTS: usize = 100_001;

#[derive(Debug, Parser)]
#[command(
    name = "qclone",
    version,
    about = "Entanglement of quantum-cloner outputs, as CSV"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clone EoF of the WZCM and SCM versus alpha
    Fig1 {
        #[command(flatten)]
        grid: GridArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Average ACM clone EoF over the (s1, s2) square
    Fig2 {
        #[command(flatten)]
        alpha: AlphaArg,
        #[command(flatten)]
        grid: GridArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Average ACM clone EoF along a boundary curve
    Fig3 {
        #[command(flatten)]
        alpha: AlphaArg,
        #[command(flatten)]
        branch: BranchArg,
        #[command(flatten)]
        grid: GridArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Average ACM clone EoF over (alpha, s1) along a boundary curve
    Fig4 {
        #[command(flatten)]
        branch: BranchArg,
        #[command(flatten)]
        grid: GridArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Ensemble-mean EoF along a boundary curve, with WZCM and SCM references
    Fig5 {
        #[command(flatten)]
        branch: BranchArg,
        #[command(flatten)]
        grid: GridArg,
        #[command(flatten)]
        tol: TolArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Density matrices of both clones of |Psi-(alpha)>
    Clone {
        #[command(flatten)]
        machine: MachineArgs,
        #[command(flatten)]
        alpha: AlphaArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Concurrence, EoF and fidelity of both clones of |Psi-(alpha)>
    Entangle {
        #[command(flatten)]
        machine: MachineArgs,
        #[command(flatten)]
        alpha: AlphaArg,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Clone EoF integrated over alpha in [0, 1]
    Mean {
        #[arg(long, value_enum)]
        machine: MachineArg,
        #[arg(long)]
        s1: Option<f64>,
        #[arg(long)]
        s2: Option<f64>,
        #[command(flatten)]
        tol: TolArg,
        #[command(flatten)]
        out: OutputArg,
    },
}

#[derive(Debug, Args)]
pub struct GridArg {
    /// Points per axis, endpoints included
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    grid_points: usize,
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write CSV here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AlphaArg {
    /// Input state parameter; defaults to the singlet, 1/sqrt(2)
    #[arg(long)]
    alpha: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BranchArg {
    #[arg(long, value_enum, default_value_t = BranchArgValue::Upper)]
    branch: BranchArgValue,
}

#[derive(Debug, Args)]
pub struct TolArg {
    /// Absolute quadrature tolerance
    #[arg(long, default_value_t = DEFAULT_QUAD_TOL)]
    quad_tol: f64,
}

#[derive(Debug, Args)]
pub struct MachineArgs {
    #[arg(long, value_enum)]
    machine: MachineArg,
    /// Number of SCM clones
    #[arg(long)]
    clones: Option<u32>,
    #[arg(long)]
    s1: Option<f64>,
    #[arg(long)]
    s2: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MachineArg {
    Wzcm,
    Scm,
    Acm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArgValue {
    Upper,
    Lower,
}

impl From<BranchArgValue> for Branch {
    fn from(b: BranchArgValue) -> Branch {
        match b {
            BranchArgValue::Upper => Branch::Upper,
            BranchArgValue::Lower => Branch::Lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CommandKind {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Clone,
    Entangle,
    Mean,
}

impl CommandKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CommandKind::Fig1 => "fig1",
            CommandKind::Fig2 => "fig2",
            CommandKind::Fig3 => "fig3",
            CommandKind::Fig4 => "fig4",
            CommandKind::Fig5 => "fig5",
            CommandKind::Clone => "clone",
            CommandKind::Entangle => "entangle",
            CommandKind::Mean => "mean",
        }
    }
}

/// A cloner with validated parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MachineChoice {
    Wzcm,
    Scm(CloneCount),
    Acm(ShrinkParams),
}

impl MachineChoice {
    pub fn name(&self) -> &'static str {
        match self {
            MachineChoice::Wzcm => "wzcm",
            MachineChoice::Scm(_) => "scm",
            MachineChoice::Acm(_) => "acm",
        }
    }
}

/// Fully validated settings for one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub alpha: Option<f64>,
    pub machine: Option<MachineChoice>,
    pub branch: Option<Branch>,
    pub grid_points: Option<usize>,
    pub quad_tol: Option<f64>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    fn bare(command: CommandKind, output: OutputArg) -> Self {
        RunConfig {
            command,
            alpha: None,
            machine: None,
            branch: None,
            grid_points: None,
            quad_tol: None,
            output: output.output,
        }
    }

    /// `key=value` lines describing every setting that affects the output.
    /// Reals use the shortest representation that round-trips exactly.
    pub fn describe(&self) -> Vec<String> {
        let num = |v: f64| format!("{v}");
        let mut lines = vec![format!("qclone {}", env!("CARGO_PKG_VERSION"))];
        lines.push(format!("command={}", self.command.as_str()));
        if let Some(m) = &self.machine {
            lines.push(format!("machine={}", m.name()));
            match m {
                MachineChoice::Wzcm => {}
                MachineChoice::Scm(c) => lines.push(format!("clones={}", c.get())),
                MachineChoice::Acm(p) => {
                    lines.push(format!("s1={}", num(p.s1)));
                    lines.push(format!("s2={}", num(p.s2)));
                }
            }
        }
        if let Some(a) = self.alpha {
            lines.push(format!("alpha={}", num(a)));
        }
        if let Some(b) = self.branch {
            let b = match b {
                Branch::Upper => "upper",
                Branch::Lower => "lower",
            };
            lines.push(format!("branch={b}"));
        }
        if let Some(n) = self.grid_points {
            lines.push(format!("grid_points={n}"));
        }
        if let Some(t) = self.quad_tol {
            lines.push(format!("quad_tol={}", num(t)));
        }
        lines
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn unit(flag: &str, v: f64) -> Result<f64, CliError> {
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(usage(format!("{flag} must lie in [0, 1], got {v}")))
    }
}

fn alpha(a: AlphaArg) -> Result<f64, CliError> {
    unit("--alpha", a.alpha.unwrap_or(FRAC_1_SQRT_2))
}

fn grid(g: GridArg) -> Result<usize, CliError> {
    match g.grid_points {
        n @ 2..=MAX_GRID_POINTS => Ok(n),
        n => Err(usage(format!(
            "--grid-points must lie in [2, {MAX_GRID_POINTS}], got {n}"
        ))),
    }
}

fn tol(t: TolArg) -> Result<f64, CliError> {
    let t = t.quad_tol;
    if (MIN_QUAD_TOL..=MAX_QUAD_TOL).contains(&t) {
        Ok(t)
    } else {
        Err(usage(format!(
            "--quad-tol must lie in [{MIN_QUAD_TOL:e}, {MAX_QUAD_TOL:e}], got {t}"
        )))
    }
}

fn shrink_params(s1: Option<f64>, s2: Option<f64>) -> Result<ShrinkParams, CliError> {
    let (Some(s1), Some(s2)) = (s1, s2) else {
        return Err(usage("--machine acm requires both --s1 and --s2"));
    };
    let (s1, s2) = (unit("--s1", s1)?, unit("--s2", s2)?);
    let params = ShrinkParams::new(s1, s2).map_err(|e| usage(e.to_string()))?;
    if ShrinkParams::admissible(s1, s2).is_err() {
        return Err(usage(format!(
            "(--s1, --s2) = ({s1}, {s2}) is outside the admissible region \
             (4(1-s1-s2)^2 - (1-s1)(1-s2) = {} > 0)",
            crate::table::format_number(acm_constraint_value(s1, s2))
        )));
    }
    Ok(params)
}

fn machine(
    m: MachineArg,
    clones: Option<u32>,
    s1: Option<f64>,
    s2: Option<f64>,
) -> Result<MachineChoice, CliError> {
    if m != MachineArg::Acm && (s1.is_some() || s2.is_some()) {
        return Err(usage("--s1/--s2 only apply to --machine acm"));
    }
    if m != MachineArg::Scm && clones.is_some() {
        return Err(usage("--clones only applies to --machine scm"));
    }
    Ok(match m {
        MachineArg::Wzcm => MachineChoice::Wzcm,
        MachineArg::Scm => {
            let count = CloneCount::new(clones.unwrap_or(2))
                .map_err(|_| usage("--clones must be at least 2"))?;
            MachineChoice::Scm(count)
        }
        MachineArg::Acm => MachineChoice::Acm(shrink_params(s1, s2)?),
    })
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let cfg = match cli.command {
            Command::Fig1 { grid: g, out } => RunConfig {
                grid_points: Some(grid(g)?),
                ..RunConfig::bare(CommandKind::Fig1, out)
            },
            Command::Fig2 {
                alpha: a,
                grid: g,
                out,
            } => RunConfig {
                alpha: Some(alpha(a)?),
                grid_points: Some(grid(g)?),
                ..RunConfig::bare(CommandKind::Fig2, out)
            },
            Command::Fig3 {
                alpha: a,
                branch,
                grid: g,
                out,
            } => RunConfig {
                alpha: Some(alpha(a)?),
                branch: Some(branch.branch.into()),
                grid_points: Some(grid(g)?),
                ..RunConfig::bare(CommandKind::Fig3, out)
            },
            Command::Fig4 {
                branch,
                grid: g,
                out,
            } => RunConfig {
                branch: Some(branch.branch.into()),
                grid_points: Some(grid(g)?),
                ..RunConfig::bare(CommandKind::Fig4, out)
            },
            Command::Fig5 {
                branch,
                grid: g,
                tol: t,
                out,
            } => RunConfig {
                branch: Some(branch.branch.into()),
                grid_points: Some(grid(g)?),
                quad_tol: Some(tol(t)?),
                ..RunConfig::bare(CommandKind::Fig5, out)
            },
            Command::Clone {
                machine: m,
                alpha: a,
                out,
            } => RunConfig {
                alpha: Some(alpha(a)?),
                machine: Some(machine(m.machine, m.clones, m.s1, m.s2)?),
                ..RunConfig::bare(CommandKind::Clone, out)
            },
            Command::Entangle {
                machine: m,
                alpha: a,
                out,
            } => RunConfig {
                alpha: Some(alpha(a)?),
                machine: Some(machine(m.machine, m.clones, m.s1, m.s2)?),
                ..RunConfig::bare(CommandKind::Entangle, out)
            },
            Command::Mean {
                machine: m,
                s1,
                s2,
                tol: t,
                out,
            } => RunConfig {
                machine: Some(machine(m, None, s1, s2)?),
                quad_tol: Some(tol(t)?),
                ..RunConfig::bare(CommandKind::Mean, out)
            },
        };
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("qclone").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        RunConfig::try_from(cli)
    }

    #[test]
    fn defaults() {
        let c = parse(&["fig3"]).unwrap();
        assert_eq!(c.alpha, Some(FRAC_1_SQRT_2));
        assert_eq!(c.branch, Some(Branch::Upper));
        assert_eq!(c.grid_points, Some(201));
        let c = parse(&["mean", "--machine", "scm"]).unwrap();
        assert_eq!(c.machine, Some(MachineChoice::Scm(CloneCount::TWO)));
        assert_eq!(c.quad_tol, Some(1e-7));
    }

    #[test]
    fn rejects_contradictions_and_ranges() {
        for args in [
            &["fig1", "--alpha", "0.3"][..],
            &["mean", "--machine", "wzcm", "--s1", "0.5"],
            &["mean", "--machine", "acm", "--s1", "0.5"],
            &["mean", "--machine", "acm", "--s1", "0.9", "--s2", "0.9"],
            &["mean", "--machine", "scm", "--quad-tol", "1e-12"],
            &["clone", "--machine", "wzcm", "--clones", "3"],
            &["clone", "--machine", "scm", "--clones", "1"],
            &["entangle", "--machine", "scm", "--alpha", "1.5"],
            &["entangle", "--machine", "scm", "--alpha", "NaN"],
            &["fig5", "--grid-points", "1"],
            &["fig3", "--branch", "sideways"],
        ] {
            assert!(matches!(parse(args), Err(CliError::Usage(_))), "{args:?}");
        }
    }

    #[test]
    fn description_is_stable() {
        let c = parse(&["mean", "--machine", "acm", "--s1", "0.6", "--s2", "0.6"]).unwrap();
        let d = c.describe();
        assert_eq!(
            &d[1..],
            [
                "command=mean",
                "machine=acm",
                "s1=0.6",
                "s2=0.6",
                "quad_tol=0.0000001"
            ]
        );
    }
}
