//! Method-of-lines solver: conservative flux differencing in space and the
//! three-stage strong-stability-preserving Runge-Kutta scheme in time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::System;
use crate::flux::{lf_flux, line_fluxes, FluxKind};
use crate::mesh::{fill_ghosts, Axis, BoundarySpec, Field, UniformGrid};
use crate::parallel::{for_each_chunk, Execution};
use crate::scheme::SchemeConfig;

/// Body force added to the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub enum SourceSpec {
    #[default]
    None,
    /// Uniform acceleration `g` along `axis`: momentum gains `rho g`, energy
    /// gains `rho v g`.
    Gravity { g: f64, axis: Axis },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeConfig {
    pub cfl: f64,
    pub t_end: f64,
    pub max_steps: usize,
    /// Fixed step size instead of the CFL-based one (the last step is still
    /// shortened to land on `t_end`).
    pub dt_override: Option<f64>,
}

impl TimeConfig {
    pub fn new(t_end: f64) -> Self {
        Self { cfl: 0.4, t_end, max_steps: 10_000_000, dt_override: None }
    }

    pub fn with_cfl(mut self, cfl: f64) -> Self {
        self.cfl = cfl;
        self
    }
}

/// Convex-combination arithmetic needed by the Runge-Kutta stages.
pub trait RkState: Clone {
    /// `a * x + b * y`.
    fn lincomb(a: f64, x: &Self, b: f64, y: &Self) -> Self;
}

impl RkState for f64 {
    fn lincomb(a: f64, x: &Self, b: f64, y: &Self) -> Self {
        a * x + b * y
    }
}

impl RkState for num_complex::Complex64 {
    fn lincomb(a: f64, x: &Self, b: f64, y: &Self) -> Self {
        x * a + y * b
    }
}

impl RkState for Vec<f64> {
    fn lincomb(a: f64, x: &Self, b: f64, y: &Self) -> Self {
        x.iter().zip(y).map(|(p, q)| a * p + b * q).collect()
    }
}

impl<const M: usize> RkState for Field<M> {
    fn lincomb(a: f64, x: &Self, b: f64, y: &Self) -> Self {
        let mut out = x.clone();
        for (o, q) in out.raw_mut().iter_mut().zip(y.raw()) {
            for c in 0..M {
                o[c] = a * o[c] + b * q[c];
            }
        }
        out
    }
}

/// One SSP-RK3 step written as convex combinations of forward-Euler steps.
/// `forward_euler(v, stage, t_stage)` must return `v + dt L(v, t_stage)`.
pub fn ssp_rk3<T, F>(u: &T, t: f64, dt: f64, mut forward_euler: F) -> Result<T>
where
    T: RkState,
    F: FnMut(&T, usize, f64) -> Result<T>,
{
    let u1 = forward_euler(u, 0, t)?;
    let u2 = T::lincomb(0.75, u, 0.25, &forward_euler(&u1, 1, t + dt)?);
    Ok(T::lincomb(1.0 / 3.0, u, 2.0 / 3.0, &forward_euler(&u2, 2, t + 0.5 * dt)?))
}

/// Weights of the three stage right-hand sides in the final update.
pub const RK3_STAGE_WEIGHTS: [f64; 3] = [1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0];

/// Interface fluxes of one right-hand-side evaluation.
#[derive(Debug, Clone)]
pub struct Fluxes<const M: usize> {
    nx: usize,
    ny: usize,
    /// Row-major by row: `fx[j * (nx + 1) + i]` is the flux through the left face of cell `(i, j)`.
    pub fx: Vec<[f64; M]>,
    /// Column-major: `fy[i * (ny + 1) + j]` is the flux through the bottom face of cell `(i, j)`.
    pub fy: Vec<[f64; M]>,
    /// Interfaces whose Roe average failed and used the Lax-Friedrichs flux.
    pub degraded: usize,
}

impl<const M: usize> Fluxes<M> {
    fn x(&self, i: usize, j: usize) -> &[f64; M] {
        &self.fx[j * (self.nx + 1) + i]
    }

    fn y(&self, i: usize, j: usize) -> &[f64; M] {
        &self.fy[i * (self.ny + 1) + j]
    }
}

/// Counters and budgets gathered over a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct RunStats {
    pub steps: usize,
    pub time: f64,
    /// Interfaces switched to the first-order flux by the positivity fallback.
    pub fallback_interfaces: usize,
    /// Interfaces whose characteristic decomposition failed.
    pub degraded_interfaces: usize,
    /// Time-integrated net outflow of each conserved quantity through the domain boundary.
    pub boundary_outflow: Vec<f64>,
    /// Time-integrated source contribution of each conserved quantity.
    pub source_integral: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct Solver<S: System<M>, const M: usize> {
    pub system: S,
    pub grid: UniformGrid,
    pub bc: BoundarySpec,
    pub scheme: SchemeConfig,
    pub flux_kind: FluxKind,
    pub source: SourceSpec,
    pub execution: Execution,
    /// Replace interface fluxes around cells that a stage would push out of the
    /// admissible set with the first-order Lax-Friedrichs flux.
    pub positivity_fallback: bool,
}

impl<S: System<M>, const M: usize> Solver<S, M> {
    pub fn new(system: S, grid: UniformGrid, bc: BoundarySpec, scheme: SchemeConfig) -> Result<Self> {
        let solver = Self {
            system,
            grid,
            bc,
            scheme,
            flux_kind: FluxKind::Rusanov,
            source: SourceSpec::None,
            execution: Execution::default(),
            positivity_fallback: true,
        };
        solver.validate()?;
        Ok(solver)
    }

    pub fn with_flux(mut self, kind: FluxKind) -> Self {
        self.flux_kind = kind;
        self
    }

    pub fn with_source(mut self, source: SourceSpec) -> Result<Self> {
        self.source = source;
        self.validate()?;
        Ok(self)
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_fallback(mut self, enabled: bool) -> Self {
        self.positivity_fallback = enabled;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        self.bc.validate()?;
        self.scheme.validate()?;
        if self.grid.n_ghost < self.scheme.half_width() {
            return Err(Error::InvalidGrid(format!(
                "{} ghost layers, {} needs {}",
                self.grid.n_ghost,
                self.scheme,
                self.scheme.half_width()
            )));
        }
        if let SourceSpec::Gravity { g, axis } = self.source {
            let ok = g.is_finite()
                && self.system.normal_momentum(axis).is_some()
                && (axis == Axis::X || self.grid.dims == 2);
            if !ok {
                return Err(Error::InvalidSource(format!("{:?} on a {}D grid", self.source, self.grid.dims)));
            }
        }
        Ok(())
    }

    /// Stable step for the current state.
    pub fn compute_dt(&self, u: &Field<M>, cfl: f64) -> Result<f64> {
        let g = &self.grid;
        let mut rate = 0.0f64;
        for s in u.interior() {
            let mut r = self.system.max_speed(s) / g.dx[0];
            if g.dims == 2 {
                r = r.max(self.system.max_speed(&self.system.rotate(s, Axis::Y)) / g.dx[1]);
            }
            if !r.is_finite() {
                return Err(Error::InvalidTimeStep(format!("non-finite signal speed in state {s:?}")));
            }
            rate = rate.max(r);
        }
        if rate == 0.0 {
            return Err(Error::InvalidTimeStep("all signal speeds are zero".into()));
        }
        Ok(cfl / rate)
    }

    /// Interface fluxes at time `t`; fills the ghost cells of `u` first.
    pub fn fluxes(&self, u: &mut Field<M>, t: f64) -> Result<Fluxes<M>> {
        fill_ghosts(u, &self.grid, &self.bc, &self.system, t)?;
        let [nx, ny] = self.grid.n;
        let [gx, gy] = u.ghost_widths();
        let mut fx = vec![[0.0; M]; ny * (nx + 1)];
        let degraded_x = std::sync::atomic::AtomicUsize::new(0);
        {
            let u = &*u;
            for_each_chunk(self.execution, &mut fx, nx + 1, |j, out| {
                let d = line_fluxes(&self.system, &self.scheme, self.flux_kind, u.row(j as isize), gx, out);
                degraded_x.fetch_add(d, std::sync::atomic::Ordering::Relaxed);
            });
        }
        let mut fy = Vec::new();
        if self.grid.dims == 2 {
            fy = vec![[0.0; M]; nx * (ny + 1)];
            let u = &*u;
            let sys = &self.system;
            for_each_chunk(self.execution, &mut fy, ny + 1, |i, out| {
                let line: Vec<[f64; M]> = (-(gy as isize)..(ny + gy) as isize)
                    .map(|j| sys.rotate(u.get(i as isize, j), Axis::Y))
                    .collect();
                let d = line_fluxes(sys, &self.scheme, self.flux_kind, &line, gy, out);
                for f in out.iter_mut() {
                    *f = sys.rotate(f, Axis::Y);
                }
                degraded_x.fetch_add(d, std::sync::atomic::Ordering::Relaxed);
            });
        }
        Ok(Fluxes { nx, ny, fx, fy, degraded: degraded_x.into_inner() })
    }

    fn source_term(&self, u: &[f64; M]) -> Option<[f64; M]> {
        match self.source {
            SourceSpec::None => None,
            SourceSpec::Gravity { g, axis } => {
                let m = self.system.normal_momentum(axis)?;
                let mut s = [0.0; M];
                s[m] = u[0] * g;
                s[M - 1] = u[m] * g;
                Some(s)
            }
        }
    }

    /// `L(u)` from precomputed fluxes; ghost cells of the result are zero.
    pub fn tendency(&self, u: &Field<M>, f: &Fluxes<M>) -> Field<M> {
        let mut out = Field::zeros(&self.grid);
        let [nx, ny] = self.grid.n;
        let inv = [1.0 / self.grid.dx[0], 1.0 / self.grid.dx[1]];
        for j in 0..ny {
            for i in 0..nx {
                let (l, r) = (f.x(i, j), f.x(i + 1, j));
                let mut du = [0.0; M];
                for c in 0..M {
                    du[c] = -(r[c] - l[c]) * inv[0];
                }
                if self.grid.dims == 2 {
                    let (b, t) = (f.y(i, j), f.y(i, j + 1));
                    for c in 0..M {
                        du[c] -= (t[c] - b[c]) * inv[1];
                    }
                }
                if let Some(s) = self.source_term(u.get(i as isize, j as isize)) {
                    for c in 0..M {
                        du[c] += s[c];
                    }
                }
                *out.get_mut(i as isize, j as isize) = du;
            }
        }
        out
    }

    /// Semi-discrete right-hand side `du/dt`.
    pub fn rhs(&self, u: &mut Field<M>, t: f64) -> Result<Field<M>> {
        let f = self.fluxes(u, t)?;
        Ok(self.tendency(u, &f))
    }

    /// Net outflow rate through the domain boundary.
    fn boundary_rate(&self, f: &Fluxes<M>) -> [f64; M] {
        let [nx, ny] = self.grid.n;
        let area = if self.grid.dims == 2 { [self.grid.dx[1], self.grid.dx[0]] } else { [1.0, 0.0] };
        let mut out = [0.0; M];
        for j in 0..ny {
            let (l, r) = (f.x(0, j), f.x(nx, j));
            for c in 0..M {
                out[c] += (r[c] - l[c]) * area[0];
            }
        }
        if self.grid.dims == 2 {
            for i in 0..nx {
                let (b, t) = (f.y(i, 0), f.y(i, ny));
                for c in 0..M {
                    out[c] += (t[c] - b[c]) * area[1];
                }
            }
        }
        out
    }

    fn source_total(&self, u: &Field<M>) -> [f64; M] {
        let mut out = [0.0; M];
        if self.source == SourceSpec::None {
            return out;
        }
        for s in u.interior().filter_map(|c| self.source_term(c)) {
            for c in 0..M {
                out[c] += s[c];
            }
        }
        out.map(|x| x * self.grid.cell_volume())
    }

    /// Cells of `v + dt L` that leave the admissible set.
    fn inadmissible(&self, v: &Field<M>, l: &Field<M>, dt: f64) -> Vec<(usize, usize)> {
        let [nx, ny] = self.grid.n;
        let mut bad = Vec::new();
        for j in 0..ny {
            for i in 0..nx {
                let (a, b) = (v.get(i as isize, j as isize), l.get(i as isize, j as isize));
                let mut w = [0.0; M];
                for c in 0..M {
                    w[c] = a[c] + dt * b[c];
                }
                if !self.system.admissible(&w) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Replaces the faces of `cells` with the Lax-Friedrichs flux; returns how
    /// many faces changed.
    fn degrade(&self, v: &Field<M>, f: &mut Fluxes<M>, cells: &[(usize, usize)], marked: &mut [bool]) -> usize {
        let [nx, ny] = self.grid.n;
        let sys = &self.system;
        let nfx = f.fx.len();
        let mut changed = 0;
        for &(i, j) in cells {
            for ii in [i, i + 1] {
                let k = j * (nx + 1) + ii;
                if !marked[k] {
                    marked[k] = true;
                    changed += 1;
                    let (a, b) = (v.get(ii as isize - 1, j as isize), v.get(ii as isize, j as isize));
                    f.fx[k] = lf_flux(sys, a, b);
                }
            }
            if self.grid.dims == 2 {
                for jj in [j, j + 1] {
                    let k = i * (ny + 1) + jj;
                    if !marked[nfx + k] {
                        marked[nfx + k] = true;
                        changed += 1;
                        let a = sys.rotate(v.get(i as isize, jj as isize - 1), Axis::Y);
                        let b = sys.rotate(v.get(i as isize, jj as isize), Axis::Y);
                        f.fy[k] = sys.rotate(&lf_flux(sys, &a, &b), Axis::Y);
                    }
                }
            }
        }
        changed
    }

    /// `v + dt L(v)` with the positivity fallback; accumulates budgets in `stats`.
    fn forward_euler(&self, v: &Field<M>, stage: usize, t: f64, dt: f64, stats: &mut RunStats) -> Result<Field<M>> {
        let mut v = v.clone();
        let mut f = self.fluxes(&mut v, t)?;
        stats.degraded_interfaces += f.degraded;
        let mut l = self.tendency(&v, &f);
        if self.positivity_fallback {
            let mut marked = vec![false; f.fx.len() + f.fy.len()];
            for _ in 0..4 {
                let bad = self.inadmissible(&v, &l, dt);
                if bad.is_empty() {
                    break;
                }
                let changed = self.degrade(&v, &mut f, &bad, &mut marked);
                if changed == 0 {
                    break;
                }
                stats.fallback_interfaces += changed;
                l = self.tendency(&v, &f);
            }
        }
        let w = RK3_STAGE_WEIGHTS[stage] * dt;
        let rate = self.boundary_rate(&f);
        let src = self.source_total(&v);
        for c in 0..M {
            stats.boundary_outflow[c] += w * rate[c];
            stats.source_integral[c] += w * src[c];
        }
        let out = Field::lincomb(1.0, &v, dt, &l);
        if let Some(cell) = out.interior().position(|x| x.iter().any(|y| !y.is_finite())) {
            return Err(Error::NonFinite { stage: stage + 1, cell });
        }
        Ok(out)
    }

    /// One SSP-RK3 step of size `dt` from time `t`.
    pub fn step(&self, u: &Field<M>, t: f64, dt: f64, stats: &mut RunStats) -> Result<Field<M>> {
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::InvalidTimeStep(format!("step size {dt}")));
        }
        if stats.boundary_outflow.len() != M {
            stats.boundary_outflow = vec![0.0; M];
            stats.source_integral = vec![0.0; M];
        }
        ssp_rk3(u, t, dt, |v, stage, ts| self.forward_euler(v, stage, ts, dt, stats))
    }

    pub fn advance(&self, u: &mut Field<M>, time: &TimeConfig) -> Result<RunStats> {
        self.advance_with(u, time, |_, _| {})
    }

    /// Integrates to `time.t_end`, calling `observer(t, u)` after every step.
    pub fn advance_with(
        &self,
        u: &mut Field<M>,
        time: &TimeConfig,
        mut observer: impl FnMut(f64, &Field<M>),
    ) -> Result<RunStats> {
        self.validate()?;
        if !(time.cfl > 0.0) || !(time.t_end >= 0.0) {
            return Err(Error::InvalidTimeStep(format!("CFL {} with end time {}", time.cfl, time.t_end)));
        }
        if let Some(max) = self.scheme.max_cfl() {
            if time.dt_override.is_none() && time.cfl > max {
                return Err(Error::InvalidTimeStep(format!("CFL {} exceeds {max:.4} allowed by {}", time.cfl, self.scheme)));
            }
        }
        let mut stats = RunStats { boundary_outflow: vec![0.0; M], source_integral: vec![0.0; M], ..Default::default() };
        let mut t = 0.0;
        while t < time.t_end {
            if stats.steps >= time.max_steps {
                return Err(Error::StepLimit(time.max_steps));
            }
            let mut dt = match time.dt_override {
                Some(dt) => dt,
                None => self.compute_dt(u, time.cfl)?,
            };
            let last = t + dt >= time.t_end * (1.0 - 1e-14);
            if last {
                dt = time.t_end - t;
            }
            *u = self.step(u, t, dt, &mut stats)?;
            t = if last { time.t_end } else { t + dt };
            stats.steps += 1;
            observer(t, u);
        }
        stats.time = t;
        fill_ghosts(u, &self.grid, &self.bc, &self.system, t)?;
        Ok(stats)
    }
}
