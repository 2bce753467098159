//! Hyperbolic systems: linear advection and the 1D/2D compressible Euler
//! equations with Roe-averaged characteristic decompositions.
//!
//! Every method works in the x-normal frame. Sweeps along y rotate states with
//! [`System::rotate`], which swaps the two momentum components.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mesh::Axis;

/// Eigenvalues and left/right eigenvectors at an interface.
/// `right[r][c]` is component `r` of eigenvector `c`; `left[s]` is row `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem<const M: usize> {
    pub lambda: [f64; M],
    pub left: [[f64; M]; M],
    pub right: [[f64; M]; M],
}

impl<const M: usize> EigenSystem<M> {
    #[inline]
    pub fn project(&self, v: &[f64; M]) -> [f64; M] {
        let mut out = [0.0; M];
        for s in 0..M {
            out[s] = (0..M).map(|c| self.left[s][c] * v[c]).sum();
        }
        out
    }

    #[inline]
    pub fn reconstruct(&self, w: &[f64; M]) -> [f64; M] {
        let mut out = [0.0; M];
        for r in 0..M {
            out[r] = (0..M).map(|s| self.right[r][s] * w[s]).sum();
        }
        out
    }
}

pub trait System<const M: usize>: Clone + Send + Sync {
    /// x-direction physical flux.
    fn flux(&self, u: &[f64; M]) -> [f64; M];

    /// x-direction eigenvalues at a single state, in the same order as the
    /// characteristic fields of [`System::eigensystem`].
    fn wave_speeds(&self, u: &[f64; M]) -> [f64; M];

    fn max_speed(&self, u: &[f64; M]) -> f64 {
        self.wave_speeds(u).iter().fold(0.0, |m, l| m.max(l.abs()))
    }

    /// Roe-averaged decomposition between two states.
    fn eigensystem(&self, ul: &[f64; M], ur: &[f64; M]) -> Result<EigenSystem<M>>;

    /// Whether a conserved state is physically admissible.
    fn admissible(&self, u: &[f64; M]) -> bool;

    /// Momentum component normal to walls of `axis`, if any.
    fn normal_momentum(&self, axis: Axis) -> Option<usize>;

    /// Maps a state into the frame whose x axis is `axis`. An involution.
    fn rotate(&self, u: &[f64; M], axis: Axis) -> [f64; M];

    fn prim_to_cons(&self, p: &[f64; M]) -> Result<[f64; M]>;

    fn cons_to_prim(&self, u: &[f64; M]) -> Result<[f64; M]>;
}

/// `u_t + a u_x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearAdvection {
    pub speed: f64,
}

impl System<1> for LinearAdvection {
    fn flux(&self, u: &[f64; 1]) -> [f64; 1] {
        [self.speed * u[0]]
    }

    fn wave_speeds(&self, _u: &[f64; 1]) -> [f64; 1] {
        [self.speed]
    }

    fn eigensystem(&self, _ul: &[f64; 1], _ur: &[f64; 1]) -> Result<EigenSystem<1>> {
        Ok(EigenSystem { lambda: [self.speed], left: [[1.0]], right: [[1.0]] })
    }

    fn admissible(&self, u: &[f64; 1]) -> bool {
        u[0].is_finite()
    }

    fn normal_momentum(&self, _axis: Axis) -> Option<usize> {
        None
    }

    fn rotate(&self, u: &[f64; 1], _axis: Axis) -> [f64; 1] {
        *u
    }

    fn prim_to_cons(&self, p: &[f64; 1]) -> Result<[f64; 1]> {
        Ok(*p)
    }

    fn cons_to_prim(&self, u: &[f64; 1]) -> Result<[f64; 1]> {
        Ok(*u)
    }
}

fn positivity(what: &str, rho: f64, p: f64) -> Result<()> {
    if rho > 0.0 && p > 0.0 && rho.is_finite() && p.is_finite() {
        Ok(())
    } else {
        Err(Error::Positivity(format!("{what}: density {rho}, pressure {p}")))
    }
}

/// Roe-averaged velocity components, total enthalpy and sound speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoeAverage<const D: usize> {
    pub vel: [f64; D],
    pub h: f64,
    pub c: f64,
}

/// Roe average of two states given as `(rho, velocity, total enthalpy)`.
pub fn roe_average<const D: usize>(
    gamma: f64,
    (rl, vl, hl): (f64, [f64; D], f64),
    (rr, vr, hr): (f64, [f64; D], f64),
) -> Result<RoeAverage<D>> {
    positivity("Roe average input", rl, 1.0)?;
    positivity("Roe average input", rr, 1.0)?;
    let (sl, sr) = (rl.sqrt(), rr.sqrt());
    let w = 1.0 / (sl + sr);
    let mut vel = [0.0; D];
    for d in 0..D {
        vel[d] = (sl * vl[d] + sr * vr[d]) * w;
    }
    let h = (sl * hl + sr * hr) * w;
    let q2: f64 = vel.iter().map(|v| v * v).sum();
    let c2 = (gamma - 1.0) * (h - 0.5 * q2);
    if !(c2 > 0.0) || !c2.is_finite() {
        return Err(Error::Positivity(format!("Roe-averaged sound speed squared {c2}")));
    }
    Ok(RoeAverage { vel, h, c: c2.sqrt() })
}

/// One-dimensional Euler equations in `(rho, rho u, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Euler1d {
    pub gamma: f64,
}

impl Default for Euler1d {
    fn default() -> Self {
        Self { gamma: 1.4 }
    }
}

impl Euler1d {
    #[inline]
    pub fn pressure(&self, u: &[f64; 3]) -> f64 {
        (self.gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0])
    }

    fn enthalpy_state(&self, u: &[f64; 3]) -> Result<(f64, [f64; 1], f64)> {
        let p = self.pressure(u);
        positivity("Roe average input", u[0], p)?;
        Ok((u[0], [u[1] / u[0]], (u[2] + p) / u[0]))
    }
}

impl System<3> for Euler1d {
    #[inline]
    fn flux(&self, u: &[f64; 3]) -> [f64; 3] {
        let v = u[1] / u[0];
        let p = self.pressure(u);
        [u[1], u[1] * v + p, (u[2] + p) * v]
    }

    #[inline]
    fn wave_speeds(&self, u: &[f64; 3]) -> [f64; 3] {
        let v = u[1] / u[0];
        let c = (self.gamma * self.pressure(u) / u[0]).abs().sqrt();
        [v - c, v, v + c]
    }

    fn eigensystem(&self, ul: &[f64; 3], ur: &[f64; 3]) -> Result<EigenSystem<3>> {
        let avg = roe_average(self.gamma, self.enthalpy_state(ul)?, self.enthalpy_state(ur)?)?;
        let [u] = avg.vel;
        let (h, c) = (avg.h, avg.c);
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * u * u;
        Ok(EigenSystem {
            lambda: [u - c, u, u + c],
            right: [[1.0, 1.0, 1.0], [u - c, u, u + c], [h - u * c, 0.5 * u * u, h + u * c]],
            left: [
                [0.5 * (b2 + u / c), 0.5 * (-b1 * u - 1.0 / c), 0.5 * b1],
                [1.0 - b2, b1 * u, -b1],
                [0.5 * (b2 - u / c), 0.5 * (-b1 * u + 1.0 / c), 0.5 * b1],
            ],
        })
    }

    fn admissible(&self, u: &[f64; 3]) -> bool {
        u[0] > 0.0 && self.pressure(u) > 0.0 && u.iter().all(|x| x.is_finite())
    }

    fn normal_momentum(&self, axis: Axis) -> Option<usize> {
        (axis == Axis::X).then_some(1)
    }

    fn rotate(&self, u: &[f64; 3], _axis: Axis) -> [f64; 3] {
        *u
    }

    fn prim_to_cons(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        let [rho, v, pr] = *p;
        positivity("primitive state", rho, pr)?;
        Ok([rho, rho * v, pr / (self.gamma - 1.0) + 0.5 * rho * v * v])
    }

    fn cons_to_prim(&self, u: &[f64; 3]) -> Result<[f64; 3]> {
        let p = self.pressure(u);
        positivity("conserved state", u[0], p)?;
        Ok([u[0], u[1] / u[0], p])
    }
}

/// Two-dimensional Euler equations in `(rho, rho u, rho v, E)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Euler2d {
    pub gamma: f64,
}

impl Default for Euler2d {
    fn default() -> Self {
        Self { gamma: 1.4 }
    }
}

impl Euler2d {
    #[inline]
    pub fn pressure(&self, u: &[f64; 4]) -> f64 {
        (self.gamma - 1.0) * (u[3] - 0.5 * (u[1] * u[1] + u[2] * u[2]) / u[0])
    }

    fn enthalpy_state(&self, u: &[f64; 4]) -> Result<(f64, [f64; 2], f64)> {
        let p = self.pressure(u);
        positivity("Roe average input", u[0], p)?;
        Ok((u[0], [u[1] / u[0], u[2] / u[0]], (u[3] + p) / u[0]))
    }
}

impl System<4> for Euler2d {
    #[inline]
    fn flux(&self, u: &[f64; 4]) -> [f64; 4] {
        let vx = u[1] / u[0];
        let p = self.pressure(u);
        [u[1], u[1] * vx + p, u[2] * vx, (u[3] + p) * vx]
    }

    #[inline]
    fn wave_speeds(&self, u: &[f64; 4]) -> [f64; 4] {
        let v = u[1] / u[0];
        let c = (self.gamma * self.pressure(u) / u[0]).abs().sqrt();
        [v - c, v, v, v + c]
    }

    fn eigensystem(&self, ul: &[f64; 4], ur: &[f64; 4]) -> Result<EigenSystem<4>> {
        let avg = roe_average(self.gamma, self.enthalpy_state(ul)?, self.enthalpy_state(ur)?)?;
        let [u, v] = avg.vel;
        let (h, c) = (avg.h, avg.c);
        let q2 = u * u + v * v;
        let b1 = (self.gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * q2;
        Ok(EigenSystem {
            lambda: [u - c, u, u, u + c],
            right: [
                [1.0, 1.0, 0.0, 1.0],
                [u - c, u, 0.0, u + c],
                [v, v, 1.0, v],
                [h - u * c, 0.5 * q2, v, h + u * c],
            ],
            left: [
                [0.5 * (b2 + u / c), 0.5 * (-b1 * u - 1.0 / c), -0.5 * b1 * v, 0.5 * b1],
                [1.0 - b2, b1 * u, b1 * v, -b1],
                [-v, 0.0, 1.0, 0.0],
                [0.5 * (b2 - u / c), 0.5 * (-b1 * u + 1.0 / c), -0.5 * b1 * v, 0.5 * b1],
            ],
        })
    }

    fn admissible(&self, u: &[f64; 4]) -> bool {
        u[0] > 0.0 && self.pressure(u) > 0.0 && u.iter().all(|x| x.is_finite())
    }

    fn normal_momentum(&self, axis: Axis) -> Option<usize> {
        Some(1 + axis.index())
    }

    #[inline]
    fn rotate(&self, u: &[f64; 4], axis: Axis) -> [f64; 4] {
        match axis {
            Axis::X => *u,
            Axis::Y => [u[0], u[2], u[1], u[3]],
        }
    }

    fn prim_to_cons(&self, p: &[f64; 4]) -> Result<[f64; 4]> {
        let [rho, u, v, pr] = *p;
        positivity("primitive state", rho, pr)?;
        Ok([rho, rho * u, rho * v, pr / (self.gamma - 1.0) + 0.5 * rho * (u * u + v * v)])
    }

    fn cons_to_prim(&self, u: &[f64; 4]) -> Result<[f64; 4]> {
        let p = self.pressure(u);
        positivity("conserved state", u[0], p)?;
        Ok([u[0], u[1] / u[0], u[2] / u[0], p])
    }
}

/// Local Lax-Friedrichs splitting `f± = (f ± λu)/2`.
pub fn rusanov_split<const M: usize>(f: &[f64; M], u: &[f64; M], lambda: f64) -> Result<([f64; M], [f64; M])> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return Err(Error::InvalidScheme(format!("splitting speed must be finite and non-negative, got {lambda}")));
    }
    let mut plus = [0.0; M];
    let mut minus = [0.0; M];
    for c in 0..M {
        plus[c] = 0.5 * (f[c] + lambda * u[c]);
        minus[c] = 0.5 * (f[c] - lambda * u[c]);
    }
    Ok((plus, minus))
}
