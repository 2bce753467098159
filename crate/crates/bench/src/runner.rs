//! Executes cases and writes their artifacts.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use tenom::integrator::RunStats;
use tenom::stencil::AdaptParams;
use tenom::{
    CtMode, Curvature, Euler1d, Euler2d, Execution, Field, FluxKind, LimiterKind, LinearAdvection, SchemeConfig,
    Solver, System, TimeConfig, UniformGrid,
};

use crate::cases::{CaseSpec, Physics, ReferenceRecipe};
use crate::error::{BenchError, Result};
use crate::norms::{convergence_rows, error_norms, ConvergenceRow, ErrorNorms};
use crate::reference::{exact_advection, reference_on};
use crate::solution::Solution;

/// Ghost layers allocated for every run; enough for all schemes.
const GHOSTS: usize = 4;

/// Optional changes to a case's defaults and to the scheme parameters.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Overrides {
    pub nx: Option<usize>,
    pub ny: Option<usize>,
    pub t_end: Option<f64>,
    pub cfl: Option<f64>,
    pub limiter: Option<LimiterKind>,
    pub ct: Option<CtMode>,
    pub mp_beta: Option<f64>,
    pub mp_curvature: Option<Curvature>,
    pub dt: Option<f64>,
    pub flux: Option<FluxKind>,
}

/// Parses a cut-off override: a number or `adaptive`.
pub fn parse_ct(s: &str) -> Result<CtMode> {
    if s.eq_ignore_ascii_case("adaptive") {
        return Ok(CtMode::Adaptive(AdaptParams::default()));
    }
    s.parse::<f64>()
        .map(CtMode::Fixed)
        .map_err(|_| BenchError::InvalidOverride(format!("cut-off `{s}` is neither a number nor `adaptive`")))
}

impl Overrides {
    /// Applies the overrides, returning the case, scheme and time settings to run.
    pub fn apply(&self, case: &CaseSpec, scheme: &SchemeConfig) -> Result<(CaseSpec, SchemeConfig, TimeConfig)> {
        let mut case = case.clone().with_resolution(self.nx, self.ny);
        if let Some(t) = self.t_end {
            case.t_end = t;
        }
        if let Some(c) = self.cfl {
            case.cfl = c;
        }
        if let Some(f) = self.flux {
            case.flux = f;
        }
        let mut scheme = *scheme;
        if let Some(l) = self.limiter {
            if !scheme.family.is_teno_m() {
                return Err(BenchError::InvalidOverride(format!("{scheme} takes no limiter")));
            }
            scheme.limiter = Some(l);
        }
        if let Some(ct) = self.ct {
            scheme.ct_mode = ct;
        }
        if let Some(b) = self.mp_beta {
            scheme.mp.beta = b;
        }
        if let Some(c) = self.mp_curvature {
            scheme.mp.curvature = c;
        }
        scheme.validate()?;
        let mut time = TimeConfig::new(case.t_end).with_cfl(case.cfl);
        time.dt_override = self.dt;
        Ok((case, scheme, time))
    }
}

/// Final state of a run in primitive variables, with its budgets.
#[derive(Debug, Clone)]
pub struct Simulation {
    pub solution: Solution,
    pub stats: RunStats,
    pub totals_initial: Vec<f64>,
    pub totals_final: Vec<f64>,
}

pub fn grid_for(case: &CaseSpec) -> Result<UniformGrid> {
    Ok(match case.dims {
        1 => UniformGrid::new_1d(case.domain[0][0], case.domain[0][1], case.resolution[0], GHOSTS)?,
        _ => UniformGrid::new_2d(case.domain[0], case.domain[1], case.resolution, GHOSTS)?,
    })
}

/// Runs `case` to its end time with `scheme`.
pub fn simulate(case: &CaseSpec, scheme: &SchemeConfig, execution: Execution, time: &TimeConfig) -> Result<Simulation> {
    let grid = grid_for(case)?;
    match (case.physics, case.dims) {
        (Physics::Advection { speed }, _) => {
            solve(LinearAdvection { speed }, &["u"], case, grid, scheme, execution, time)
        }
        (Physics::Euler, 1) => solve(Euler1d { gamma: case.gamma }, &["rho", "u", "p"], case, grid, scheme, execution, time),
        (Physics::Euler, _) => {
            solve(Euler2d { gamma: case.gamma }, &["rho", "u", "v", "p"], case, grid, scheme, execution, time)
        }
    }
}

fn solve<S: System<M>, const M: usize>(
    system: S,
    names: &[&str],
    case: &CaseSpec,
    grid: UniformGrid,
    scheme: &SchemeConfig,
    execution: Execution,
    time: &TimeConfig,
) -> Result<Simulation> {
    let mut failure = None;
    let mut u = Field::<M>::from_fn(&grid, |x, y| {
        let p = case.initial.eval(x, y);
        let state = <[f64; M]>::try_from(p.as_slice())
            .map_err(|_| BenchError::InitialState { case: case.name.clone(), expected: M, got: p.len() })
            .and_then(|p| system.prim_to_cons(&p).map_err(BenchError::from));
        state.unwrap_or_else(|e| {
            failure.get_or_insert(e);
            [f64::NAN; M]
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let solver = Solver::new(system.clone(), grid.clone(), case.bc.clone(), *scheme)?
        .with_flux(case.flux)
        .with_source(case.source)?
        .with_execution(execution);
    let totals_initial = u.totals(&grid).to_vec();
    let (mut step, mut t) = (0, 0.0);
    let stats = solver
        .advance_with(&mut u, time, |tn, _| {
            step += 1;
            t = tn;
        })
        .map_err(|e| match e {
            tenom::Error::NonFinite { cell, .. } => {
                BenchError::Instability { step: step + 1, time: t, i: cell % grid.n[0], j: cell / grid.n[0] }
            }
            e => e.into(),
        })?;
    let mut columns = vec![Vec::with_capacity(grid.n[0] * grid.n[1]); M];
    for cell in u.interior() {
        let p = system.cons_to_prim(cell)?;
        for (col, v) in columns.iter_mut().zip(p) {
            col.push(v);
        }
    }
    let y = if grid.dims == 2 { grid.centers(tenom::Axis::Y) } else { vec![0.0] };
    let solution = Solution {
        dims: grid.dims,
        n: grid.n,
        x: grid.centers(tenom::Axis::X),
        y,
        names: names.iter().map(|s| s.to_string()).collect(),
        columns,
    };
    Ok(Simulation { solution, stats, totals_initial, totals_final: u.totals(&grid).to_vec() })
}

/// Structured summary of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub case: String,
    pub scheme: String,
    pub flux: String,
    pub n: Vec<usize>,
    pub t_end: f64,
    pub cfl: f64,
    pub dt_override: Option<f64>,
    pub wall_time: f64,
    pub steps: usize,
    pub fallback_interfaces: usize,
    pub degraded_interfaces: usize,
    /// Errors of the primary variable against the reference, when one exists.
    pub norms: Option<ErrorNorms>,
    pub totals_initial: Vec<f64>,
    pub totals_final: Vec<f64>,
    pub boundary_outflow: Vec<f64>,
    pub source_integral: Vec<f64>,
    pub files: Vec<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub out_dir: Option<PathBuf>,
    pub cache_dir: PathBuf,
    pub execution: Execution,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { out_dir: None, cache_dir: crate::reference::default_cache_dir(), execution: Execution::default() }
    }
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub report: RunReport,
    pub simulation: Simulation,
    pub reference: Option<Solution>,
}

/// Runs `case` with `scheme`, computes error norms and writes artifacts to
/// `opts.out_dir` if set.
pub fn run(case: &CaseSpec, scheme: &SchemeConfig, overrides: &Overrides, opts: &RunOptions) -> Result<RunOutcome> {
    let (case, scheme, time) = overrides.apply(case, scheme)?;
    let start = Instant::now();
    let sim = simulate(&case, &scheme, opts.execution, &time)?;
    let wall_time = start.elapsed().as_secs_f64();
    let reference = match (&case.reference, case.dims) {
        (ReferenceRecipe::FineGrid { .. }, 2) => None,
        _ => reference_on(&case, &sim.solution, &opts.cache_dir)?,
    };
    let norms = reference.as_ref().map(|r| error_norms(sim.solution.primary(), r.primary())).transpose()?;
    let mut report = RunReport {
        case: case.name.clone(),
        scheme: scheme.name(),
        flux: case.flux.to_string(),
        n: if case.dims == 2 { case.resolution.to_vec() } else { vec![case.resolution[0]] },
        t_end: case.t_end,
        cfl: case.cfl,
        dt_override: time.dt_override,
        wall_time,
        steps: sim.stats.steps,
        fallback_interfaces: sim.stats.fallback_interfaces,
        degraded_interfaces: sim.stats.degraded_interfaces,
        norms,
        totals_initial: sim.totals_initial.clone(),
        totals_final: sim.totals_final.clone(),
        boundary_outflow: sim.stats.boundary_outflow.clone(),
        source_integral: sim.stats.source_integral.clone(),
        files: Vec::new(),
    };
    if let Some(dir) = &opts.out_dir {
        report.files = write_artifacts(dir, &report, &sim.solution)?;
    }
    Ok(RunOutcome { report, simulation: sim, reference })
}

fn write_artifacts(dir: &Path, report: &RunReport, sol: &Solution) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| BenchError::io(dir, e))?;
    let stem = format!("{}_{}_{}", report.case, report.scheme, report.n.iter().map(|n| n.to_string()).collect::<Vec<_>>().join("x"));
    let csv = dir.join(format!("{stem}.csv"));
    sol.write_csv(&csv)?;
    let mut files = vec![csv];
    if sol.dims == 2 {
        let mat = dir.join(format!("{stem}_rho.dat"));
        sol.write_matrix("rho", &mat)?;
        files.push(mat);
    }
    let json = dir.join(format!("{stem}.json"));
    files.push(json.clone());
    let report = RunReport { files: files.clone(), ..report.clone() };
    std::fs::write(&json, serde_json::to_string_pretty(&report)?).map_err(|e| BenchError::io(&json, e))?;
    Ok(files)
}

/// Time step used by convergence studies: `cfl dx / |a|` on the coarsest grid,
/// shrinking like `dx^(p/3)` so the third-order time error decays with the
/// spatial order `p`.
pub fn convergence_dt(case: &CaseSpec, scheme: &SchemeConfig, n: usize, n_coarsest: usize) -> f64 {
    let speed = match case.physics {
        Physics::Advection { speed } => speed.abs(),
        Physics::Euler => 1.0,
    };
    let len = case.length(0);
    let (dx, dx0) = (len / n as f64, len / n_coarsest as f64);
    let p = (scheme.order() as f64 / 3.0).max(1.0);
    case.cfl * dx0 / speed * (dx / dx0).powf(p)
}

/// L_inf errors and observed orders on the given resolutions, against the
/// exact solution.
pub fn convergence_table(
    case: &CaseSpec,
    scheme: &SchemeConfig,
    resolutions: &[usize],
    execution: Execution,
) -> Result<Vec<ConvergenceRow>> {
    if resolutions.len() < 2 {
        return Err(BenchError::TooFewLevels(resolutions.len()));
    }
    if case.reference != ReferenceRecipe::Exact {
        return Err(BenchError::NoReference(case.name.clone()));
    }
    let coarsest = resolutions.iter().copied().min().unwrap_or(1);
    let mut levels = Vec::with_capacity(resolutions.len());
    for &n in resolutions {
        let case = case.clone().with_resolution(Some(n), None);
        let mut time = TimeConfig::new(case.t_end).with_cfl(case.cfl);
        time.dt_override = Some(convergence_dt(&case, scheme, n, coarsest));
        let start = Instant::now();
        let sim = simulate(&case, scheme, execution, &time)?;
        let wall = start.elapsed().as_secs_f64();
        let exact = exact_advection(&case, &sim.solution.x)?;
        levels.push((n, error_norms(sim.solution.primary(), &exact)?.linf, wall));
    }
    convergence_rows(&levels)
}
