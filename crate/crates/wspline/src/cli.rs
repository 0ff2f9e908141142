//! Command-line front end: JSON problem specs in, CSV/JSON results out.
//!
//! Exit codes: 0 success, 2 schema/data error, 3 solver non-convergence,
//! 1 anything else (I/O and the like).  All output files are
//! deterministic functions of the inputs — no timestamps.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::discrete::{
    coupling_marginal_flow, exact_multimarginal_oracle, solve_chain_sinkhorn, ChainCoupling,
    DiscreteMeasure, SolverConfig,
};
use crate::error::{Error, Result};
use crate::gaussian::{
    assemble_chain_sdp, covariance_flow, solve_chain_sdp, ChainGaussianPlan, GaussianMarginal,
};
use crate::grid::TimeGrid;
use crate::spline::{natural_spline, KnotPath};

/// Measure-valued spline interpolation: Gaussian and discrete marginals.
#[derive(Debug, Parser)]
#[command(name = "wspline", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Interpolate Gaussian marginals (chain covariance SDP).
    Gaussian(RunArgs),
    /// Interpolate discrete marginals (entropic multimarginal solver).
    Discrete(RunArgs),
    /// Natural cubic spline through point knots.
    Spline(RunArgs),
    /// Reproduce the random-variance interpolation figures
    /// (`--grid` selects the knot count, default 5).
    Figures(RunArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Problem spec (JSON); required except for `figures`.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: PathBuf,
    /// Also run the exact enumeration oracle (discrete mode, tiny instances).
    #[arg(long)]
    pub oracle: bool,
    /// RNG seed override.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Solver tolerance override.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output grid resolution (query points; knot count for `figures`).
    #[arg(long)]
    pub grid: Option<usize>,
}

/// Map an error to the documented process exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Schema(_)
        | Error::InvalidArgument(_)
        | Error::DimensionMismatch(_)
        | Error::InvalidGrid(_)
        | Error::OutOfRange(_)
        | Error::InstanceTooLarge(_)
        | Error::Infeasible(_) => 2,
        Error::NonConvergence { .. } => 3,
        Error::Io(_) | Error::Json(_) => 1,
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gaussian(args) => cmd_gaussian(&args),
        Command::Discrete(args) => cmd_discrete(&args),
        Command::Spline(args) => cmd_spline(&args),
        Command::Figures(args) => cmd_figures(&args),
    }
}

// ---------------------------------------------------------------------------
// Problem spec schema
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub mode: String,
    /// Knot times; must start at 0 (unit gaps 0..N in gaussian mode).
    pub times: Vec<f64>,
    /// One entry per knot (gaussian/discrete modes).
    #[serde(default)]
    pub marginals: Vec<MarginalSpec>,
    /// One point per knot (spline mode).
    #[serde(default)]
    pub knots: Vec<Vec<f64>>,
    #[serde(default)]
    pub solver: SolverSpec,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MarginalSpec {
    /// Gaussian mode: mean vector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean: Option<Vec<f64>>,
    /// Gaussian mode: covariance, row-major nested rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cov: Option<Vec<Vec<f64>>>,
    /// Discrete mode: support points.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    /// Discrete mode: weights (must sum to 1).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverSpec {
    pub epsilon: Option<f64>,
    pub max_iters: Option<usize>,
    pub marginal_tol: Option<f64>,
    pub velocity_range_mult: Option<f64>,
    pub velocity_resolution: Option<usize>,
    pub tuple_velocity_cap: Option<usize>,
    pub overrelaxation: Option<f64>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub grid: Option<usize>,
    pub samples: Option<usize>,
    pub seed: Option<u64>,
}

pub fn parse_spec(path: &Path) -> Result<ProblemSpec> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

fn schema_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Schema(format!("{path}: {msg}"))
}

fn spec_grid(spec: &ProblemSpec) -> Result<TimeGrid> {
    TimeGrid::new(spec.times.clone()).map_err(|e| schema_err("times", e))
}

fn gaussian_marginals(spec: &ProblemSpec) -> Result<Vec<GaussianMarginal>> {
    if spec.marginals.is_empty() {
        return Err(schema_err("marginals", "gaussian mode requires marginals"));
    }
    let mut out = Vec::with_capacity(spec.marginals.len());
    let mut dim = None;
    for (i, m) in spec.marginals.iter().enumerate() {
        let mean = m
            .mean
            .as_ref()
            .ok_or_else(|| schema_err(&format!("marginals[{i}].mean"), "missing"))?;
        let cov = m
            .cov
            .as_ref()
            .ok_or_else(|| schema_err(&format!("marginals[{i}].cov"), "missing"))?;
        if m.points.is_some() || m.weights.is_some() {
            return Err(schema_err(
                &format!("marginals[{i}]"),
                "points/weights not allowed in gaussian mode",
            ));
        }
        let d = mean.len();
        if *dim.get_or_insert(d) != d {
            return Err(schema_err(
                &format!("marginals[{i}].mean"),
                format!("dimension {d} differs from earlier marginals"),
            ));
        }
        if cov.len() != d || cov.iter().any(|row| row.len() != d) {
            return Err(schema_err(
                &format!("marginals[{i}].cov"),
                format!("must be {d}x{d}"),
            ));
        }
        let cov = DMatrix::from_fn(d, d, |r, c| cov[r][c]);
        out.push(
            GaussianMarginal::new(DVector::from_vec(mean.clone()), cov)
                .map_err(|e| schema_err(&format!("marginals[{i}]"), e))?,
        );
    }
    Ok(out)
}

fn discrete_marginals(spec: &ProblemSpec) -> Result<Vec<DiscreteMeasure>> {
    if spec.marginals.is_empty() {
        return Err(schema_err("marginals", "discrete mode requires marginals"));
    }
    let mut out = Vec::with_capacity(spec.marginals.len());
    let mut dim = None;
    for (i, m) in spec.marginals.iter().enumerate() {
        let points = m
            .points
            .as_ref()
            .ok_or_else(|| schema_err(&format!("marginals[{i}].points"), "missing"))?;
        if m.mean.is_some() || m.cov.is_some() {
            return Err(schema_err(
                &format!("marginals[{i}]"),
                "mean/cov not allowed in discrete mode",
            ));
        }
        if points.is_empty() {
            return Err(schema_err(&format!("marginals[{i}].points"), "empty"));
        }
        let d = points[0].len();
        if *dim.get_or_insert(d) != d || points.iter().any(|p| p.len() != d) {
            return Err(schema_err(
                &format!("marginals[{i}].points"),
                "inconsistent point dimensions",
            ));
        }
        let points: Vec<DVector<f64>> =
            points.iter().map(|p| DVector::from_vec(p.clone())).collect();
        let measure = match &m.weights {
            Some(w) => DiscreteMeasure::new(points, w.clone()),
            None => DiscreteMeasure::uniform(points),
        }
        .map_err(|e| schema_err(&format!("marginals[{i}]"), e))?;
        out.push(measure);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Serialized Gaussian plans
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct PlanJson {
    pub times: Vec<f64>,
    pub dim: usize,
    pub objective: f64,
    pub primal_residual: f64,
    pub iterations: usize,
    pub means: Vec<Vec<f64>>,
    /// Row-major 2d×2d phase covariances.
    pub sigma_hats: Vec<Vec<f64>>,
    /// Row-major 2d×2d cross blocks.
    pub crosses: Vec<Vec<f64>>,
}

fn matrix_rows(m: &DMatrix<f64>) -> Vec<f64> {
    let mut out = Vec::with_capacity(m.nrows() * m.ncols());
    for r in 0..m.nrows() {
        for c in 0..m.ncols() {
            out.push(m[(r, c)]);
        }
    }
    out
}

pub fn plan_to_json(plan: &ChainGaussianPlan) -> PlanJson {
    PlanJson {
        times: plan.grid().times().to_vec(),
        dim: plan.dim(),
        objective: plan.objective(),
        primal_residual: plan.primal_residual(),
        iterations: plan.iterations(),
        means: plan.means().iter().map(|m| m.as_slice().to_vec()).collect(),
        sigma_hats: (0..=plan.n_segments())
            .map(|i| matrix_rows(plan.sigma_hat(i)))
            .collect(),
        crosses: (0..plan.n_segments())
            .map(|e| matrix_rows(plan.cross(e)))
            .collect(),
    }
}

pub fn plan_from_json(json: &PlanJson) -> Result<ChainGaussianPlan> {
    let grid = TimeGrid::new(json.times.clone())?;
    let td = 2 * json.dim;
    let unpack = |flat: &Vec<f64>, name: &str| -> Result<DMatrix<f64>> {
        if flat.len() != td * td {
            return Err(schema_err(name, format!("expected {} entries", td * td)));
        }
        Ok(DMatrix::from_row_slice(td, td, flat))
    };
    ChainGaussianPlan::from_blocks(
        grid,
        json.means.iter().map(|m| DVector::from_vec(m.clone())).collect(),
        json.sigma_hats
            .iter()
            .map(|s| unpack(s, "sigma_hats"))
            .collect::<Result<_>>()?,
        json.crosses
            .iter()
            .map(|s| unpack(s, "crosses"))
            .collect::<Result<_>>()?,
        json.objective,
        json.primal_residual,
        json.iterations,
    )
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn require_spec(args: &RunArgs) -> Result<ProblemSpec> {
    let path = args
        .spec
        .as_ref()
        .ok_or_else(|| Error::Schema("--spec is required for this mode".into()))?;
    parse_spec(path)
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1).max(1) as f64)
        .collect()
}

/// `t, mean_0..mean_{d-1}, cov_0_0..cov_{d-1}_{d-1}` rows for a plan.
pub fn render_flow_csv(plan: &ChainGaussianPlan, grid_n: usize) -> Result<String> {
    let d = plan.dim();
    let mut out = String::from("t");
    for i in 0..d {
        write!(out, ",mean_{i}").unwrap();
    }
    for r in 0..d {
        for c in 0..d {
            write!(out, ",cov_{r}_{c}").unwrap();
        }
    }
    out.push('\n');
    for t in linspace(plan.grid().start(), plan.grid().end(), grid_n) {
        let mean = plan.mean_spline().eval(t)?;
        let (cov, _) = covariance_flow(plan, t)?;
        write!(out, "{t}").unwrap();
        for i in 0..d {
            write!(out, ",{}", mean[i]).unwrap();
        }
        for r in 0..d {
            for c in 0..d {
                write!(out, ",{}", cov[(r, c)]).unwrap();
            }
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_gaussian(args: &RunArgs) -> Result<()> {
    let spec = require_spec(args)?;
    if spec.mode != "gaussian" {
        return Err(schema_err("mode", format!("expected \"gaussian\", got \"{}\"", spec.mode)));
    }
    let grid = spec_grid(&spec)?;
    let marginals = gaussian_marginals(&spec)?;
    if marginals.len() != grid.n_knots() {
        return Err(schema_err(
            "marginals",
            format!("{} entries but {} knot times", marginals.len(), grid.n_knots()),
        ));
    }
    let tol = args.tol.or(spec.solver.tol).unwrap_or(1e-7);
    let grid_n = args.grid.or(spec.output.grid).unwrap_or(1000);

    let problem = assemble_chain_sdp(&marginals, &grid)?;
    let plan = solve_chain_sdp(&problem, tol)?;

    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("flow.csv"), render_flow_csv(&plan, grid_n)?)?;
    fs::write(
        args.out.join("plan.json"),
        serde_json::to_string_pretty(&plan_to_json(&plan))?,
    )?;
    println!(
        "gaussian: objective {:.6e}, residual {:.3e}, {} iterations",
        plan.objective(),
        plan.primal_residual(),
        plan.iterations()
    );
    Ok(())
}

#[derive(Debug, Serialize)]
struct DiscreteSummary {
    epsilon: f64,
    entropic_cost: f64,
    residual: f64,
    sweeps: usize,
    /// Position-aggregated edge marginals, row-major with shapes.
    edge_marginals: Vec<EdgeMarginalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_cost: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_gap: Option<f64>,
}

#[derive(Debug, Serialize)]
struct EdgeMarginalJson {
    rows: usize,
    cols: usize,
    mass: Vec<f64>,
}

fn render_discrete_flow_csv(coupling: &ChainCoupling, times: &[f64]) -> Result<String> {
    let d = coupling.dim();
    let flows = coupling_marginal_flow(coupling, times)?;
    let mut out = String::from("t");
    for i in 0..d {
        write!(out, ",x_{i}").unwrap();
    }
    out.push_str(",weight\n");
    for (t, flow) in times.iter().zip(&flows) {
        for (p, w) in flow.points().iter().zip(flow.weights()) {
            write!(out, "{t}").unwrap();
            for i in 0..d {
                write!(out, ",{}", p[i]).unwrap();
            }
            writeln!(out, ",{w}").unwrap();
        }
    }
    Ok(out)
}

pub fn cmd_discrete(args: &RunArgs) -> Result<()> {
    let spec = require_spec(args)?;
    if spec.mode != "discrete" {
        return Err(schema_err("mode", format!("expected \"discrete\", got \"{}\"", spec.mode)));
    }
    let grid = spec_grid(&spec)?;
    let marginals = discrete_marginals(&spec)?;
    if marginals.len() != grid.n_knots() {
        return Err(schema_err(
            "marginals",
            format!("{} entries but {} knot times", marginals.len(), grid.n_knots()),
        ));
    }
    let defaults = SolverConfig::default();
    let cfg = SolverConfig {
        epsilon: spec.solver.epsilon.unwrap_or(defaults.epsilon),
        max_iters: spec.solver.max_iters.unwrap_or(defaults.max_iters),
        marginal_tol: args
            .tol
            .or(spec.solver.marginal_tol)
            .unwrap_or(defaults.marginal_tol),
        velocity_range_mult: spec
            .solver
            .velocity_range_mult
            .unwrap_or(defaults.velocity_range_mult),
        velocity_resolution: spec
            .solver
            .velocity_resolution
            .unwrap_or(defaults.velocity_resolution),
        tuple_velocity_cap: spec
            .solver
            .tuple_velocity_cap
            .unwrap_or(defaults.tuple_velocity_cap),
        overrelaxation: spec
            .solver
            .overrelaxation
            .unwrap_or(defaults.overrelaxation),
        seed: args.seed.or(spec.output.seed).unwrap_or(defaults.seed),
    };
    let grid_n = args.grid.or(spec.output.grid).unwrap_or(21);

    let coupling = solve_chain_sinkhorn(&marginals, &grid, &cfg)?;

    let (oracle_cost, oracle_gap) = if args.oracle {
        let oracle = exact_multimarginal_oracle(&marginals, &grid)?;
        let gap = coupling.entropic_cost() - oracle.cost;
        println!(
            "discrete: entropic cost {:.6e}, exact cost {:.6e}, gap {:.3e}",
            coupling.entropic_cost(),
            oracle.cost,
            gap
        );
        (Some(oracle.cost), Some(gap))
    } else {
        println!(
            "discrete: entropic cost {:.6e}, residual {:.3e}, {} sweeps",
            coupling.entropic_cost(),
            coupling.residual(),
            coupling.sweeps()
        );
        (None, None)
    };

    let summary = DiscreteSummary {
        epsilon: coupling.epsilon(),
        entropic_cost: coupling.entropic_cost(),
        residual: coupling.residual(),
        sweeps: coupling.sweeps(),
        edge_marginals: (0..grid.n_segments())
            .map(|e| {
                let m = coupling.edge_position_marginal(e);
                EdgeMarginalJson {
                    rows: m.nrows(),
                    cols: m.ncols(),
                    mass: matrix_rows(&m),
                }
            })
            .collect(),
        oracle_cost,
        oracle_gap,
    };

    let times = linspace(grid.start(), grid.end(), grid_n);
    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("flow.csv"), render_discrete_flow_csv(&coupling, &times)?)?;
    fs::write(
        args.out.join("coupling.json"),
        serde_json::to_string_pretty(&summary)?,
    )?;
    Ok(())
}

pub fn cmd_spline(args: &RunArgs) -> Result<()> {
    let spec = require_spec(args)?;
    if spec.mode != "spline" {
        return Err(schema_err("mode", format!("expected \"spline\", got \"{}\"", spec.mode)));
    }
    let grid = spec_grid(&spec)?;
    if spec.knots.is_empty() {
        return Err(schema_err("knots", "spline mode requires knots"));
    }
    let d = spec.knots[0].len();
    if spec.knots.iter().any(|k| k.len() != d) {
        return Err(schema_err("knots", "inconsistent knot dimensions"));
    }
    let points: Vec<DVector<f64>> = spec.knots.iter().map(|k| DVector::from_vec(k.clone())).collect();
    let knots = KnotPath::new(grid.clone(), points).map_err(|e| schema_err("knots", e))?;
    let curve = natural_spline(&knots)?;
    let grid_n = args.grid.or(spec.output.grid).unwrap_or(1000);

    let mut out = String::from("t");
    for i in 0..d {
        write!(out, ",mean_{i}").unwrap();
    }
    out.push('\n');
    for t in linspace(grid.start(), grid.end(), grid_n) {
        let x = curve.eval(t)?;
        write!(out, "{t}").unwrap();
        for i in 0..d {
            write!(out, ",{}", x[i]).unwrap();
        }
        out.push('\n');
    }
    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("curve.csv"), out)?;
    println!("spline: energy {:.6e}", curve.energy());
    Ok(())
}

/// Random variances for figure mode, log-uniform on [0.1, 10].
pub fn figure_variances(n_knots: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..=n_knots)
        .map(|_| 10.0_f64.powf(rng.gen_range(-1.0..1.0)))
        .collect()
}

pub fn cmd_figures(args: &RunArgs) -> Result<()> {
    let n_knots = args.grid.unwrap_or(5);
    if n_knots < 1 {
        return Err(schema_err("--grid", "knot count must be at least 1"));
    }
    let seed = args.seed.unwrap_or(0);
    let tol = args.tol.unwrap_or(1e-7);
    let variances = figure_variances(n_knots, seed);
    let grid = TimeGrid::unit_gaps(n_knots)?;
    let marginals: Vec<GaussianMarginal> = variances
        .iter()
        .map(|&v| GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, v)))
        .collect::<Result<_>>()?;
    let problem = assemble_chain_sdp(&marginals, &grid)?;
    let plan = solve_chain_sdp(&problem, tol)?;

    let mut out = String::new();
    writeln!(out, "# variances log-uniform [0.1,10], seed={seed}, n_knots={n_knots}").unwrap();
    out.push_str("t,variance,knot\n");
    let mut rows: Vec<(f64, f64, u8)> = Vec::new();
    for t in linspace(0.0, n_knots as f64, 2000) {
        let (cov, _) = covariance_flow(&plan, t)?;
        rows.push((t, cov[(0, 0)], 0));
    }
    for (i, &v) in variances.iter().enumerate() {
        rows.push((i as f64, v, 1));
    }
    rows.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.2.cmp(&b.2)));
    for (t, v, k) in rows {
        writeln!(out, "{t},{v},{k}").unwrap();
    }
    fs::create_dir_all(&args.out)?;
    fs::write(args.out.join("figure.csv"), out)?;
    println!(
        "figures: {} knots, objective {:.6e}",
        n_knots,
        plan.objective()
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_variances_are_in_range_and_deterministic() {
        let a = figure_variances(10, 42);
        let b = figure_variances(10, 42);
        assert_eq!(a, b);
        assert_eq!(a.len(), 11);
        assert!(a.iter().all(|&v| (0.1..=10.0).contains(&v)));
    }

    #[test]
    fn plan_json_round_trip_is_exact() {
        let grid = TimeGrid::unit_gaps(1).unwrap();
        let marginals = vec![
            GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, 1.0)).unwrap(),
            GaussianMarginal::new(DVector::zeros(1), DMatrix::from_element(1, 1, 2.0)).unwrap(),
        ];
        let plan =
            solve_chain_sdp(&assemble_chain_sdp(&marginals, &grid).unwrap(), 1e-7).unwrap();
        let json = serde_json::to_string(&plan_to_json(&plan)).unwrap();
        let parsed: PlanJson = serde_json::from_str(&json).unwrap();
        let restored = plan_from_json(&parsed).unwrap();
        assert_eq!(
            render_flow_csv(&plan, 57).unwrap(),
            render_flow_csv(&restored, 57).unwrap()
        );
    }

    #[test]
    fn schema_errors_carry_field_paths() {
        let spec = ProblemSpec {
            mode: "gaussian".into(),
            times: vec![0.0, 1.0],
            marginals: vec![
                MarginalSpec {
                    mean: Some(vec![0.0]),
                    cov: Some(vec![vec![1.0]]),
                    points: None,
                    weights: None,
                },
                MarginalSpec {
                    mean: Some(vec![0.0, 0.0]),
                    cov: Some(vec![vec![1.0, 0.0], vec![0.0, 1.0]]),
                    points: None,
                    weights: None,
                },
            ],
            knots: vec![],
            solver: SolverSpec::default(),
            output: OutputSpec::default(),
        };
        let err = gaussian_marginals(&spec).unwrap_err();
        assert!(err.to_string().contains("marginals[1]"), "{err}");
        assert_eq!(exit_code(&err), 2);
    }
}
