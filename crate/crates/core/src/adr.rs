//! Approximate dispersion relation of nonlinear schemes.
//!
//! A single Fourier mode is advected for one short step on a periodic grid
//! and the modified wavenumber is read off the change of its Fourier
//! coefficient.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::LinearAdvection;
use crate::integrator::{RunStats, Solver};
use crate::mesh::{Boundary, BoundarySpec, Field, UniformGrid};
use crate::parallel::{map, Execution};
use crate::scheme::SchemeConfig;
use crate::stencil::{candidate_table, optimal_weights};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdrConfig {
    pub n: usize,
    pub amplitude: f64,
    pub cfl: f64,
    pub speed: f64,
}

impl Default for AdrConfig {
    fn default() -> Self {
        Self { n: 64, amplitude: 1.0, cfl: 1e-3, speed: 1.0 }
    }
}

/// One row of an ADR sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdrPoint {
    pub phi: f64,
    pub re: f64,
    pub im: f64,
}

/// Resolved wavenumbers `2 pi k / n` for `k = 1..=n/2`.
pub fn wavenumbers(n: usize) -> Vec<f64> {
    (1..=n / 2).map(|k| 2.0 * std::f64::consts::PI * k as f64 / n as f64).collect()
}

fn bin(phi: f64, n: usize) -> Result<usize> {
    let k = phi * n as f64 / (2.0 * std::f64::consts::PI);
    let kr = k.round();
    if !(kr >= 1.0 && kr <= (n / 2) as f64 && (k - kr).abs() < 1e-9) {
        return Err(Error::InvalidWavenumber(phi));
    }
    Ok(kr as usize)
}

/// Modified wavenumber of `scheme` at `phi`, which must be one of [`wavenumbers`].
pub fn modified_wavenumber(scheme: &SchemeConfig, phi: f64, cfg: &AdrConfig) -> Result<Complex64> {
    let k = bin(phi, cfg.n)?;
    if !(cfg.amplitude > 0.0 && cfg.cfl > 0.0 && cfg.speed > 0.0) {
        return Err(Error::InvalidTimeStep(format!("probe configuration {cfg:?}")));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let grid = UniformGrid::new_1d(0.0, two_pi, cfg.n, scheme.half_width())?;
    let bc = BoundarySpec::one_d(Boundary::Periodic, Boundary::Periodic)?;
    let solver = Solver::new(LinearAdvection { speed: cfg.speed }, grid.clone(), bc, *scheme)?
        .with_execution(Execution::Sequential)
        .with_fallback(false);
    let kf = k as f64;
    // Phase the mode on the cell index so the Nyquist mode does not vanish at cell centres.
    let x0 = grid.center(crate::mesh::Axis::X, 0);
    let u0 = Field::<1>::from_fn(&grid, |x, _| [cfg.amplitude * (kf * (x - x0)).cos()]);
    let dt = cfg.cfl * grid.dx[0] / cfg.speed;
    let u1 = solver.step(&u0, 0.0, dt, &mut RunStats::default())?;
    let c0 = fourier(&u0, &grid, kf);
    let c1 = fourier(&u1, &grid, kf);
    if c0.norm() < 1e-12 * cfg.amplitude || c1.norm() < 1e-300 {
        return Err(Error::AmplitudeLost(c1.norm()));
    }
    let sigma = cfg.speed * dt / grid.dx[0];
    Ok(Complex64::i() * (c1 / c0).ln() / sigma)
}

fn fourier(u: &Field<1>, grid: &UniformGrid, k: f64) -> Complex64 {
    let centers = grid.centers(crate::mesh::Axis::X);
    u.interior().zip(centers).map(|(v, x)| v[0] * Complex64::from_polar(1.0, -k * x)).sum::<Complex64>()
        / grid.n[0] as f64
}

/// Modified wavenumber at every resolved wavenumber, in increasing `phi`.
pub fn adr_sweep(scheme: &SchemeConfig, cfg: &AdrConfig, execution: Execution) -> Result<Vec<AdrPoint>> {
    let phis = wavenumbers(cfg.n);
    map(execution, &phis, |&phi| {
        modified_wavenumber(scheme, phi, cfg).map(|z| AdrPoint { phi, re: z.re, im: z.im })
    })
    .into_iter()
    .collect()
}

/// Coefficients `c_m` of the linear interface flux `sum_m c_m f_{i+m}`, with
/// `m` running from `1 - order/2` upward.
pub fn linear_coefficients(order: usize) -> Result<Vec<f64>> {
    let d = optimal_weights(order)?;
    let lo = 1 - (order as isize) / 2;
    let mut c = vec![0.0; order];
    for (cand, &w) in candidate_table(order)?.iter().zip(d.as_slice()) {
        for m in 0..cand.width() {
            c[(cand.start + m as isize - lo) as usize] += w * cand.coefficient(m);
        }
    }
    Ok(c)
}

/// Exact modified wavenumber of the `order`-point linear scheme.
pub fn linear_modified_wavenumber(order: usize, phi: f64) -> Result<Complex64> {
    let lo = 1 - (order as isize) / 2;
    let sum: Complex64 = linear_coefficients(order)?
        .iter()
        .enumerate()
        .map(|(m, c)| c * Complex64::from_polar(1.0, (lo + m as isize) as f64 * phi))
        .sum();
    Ok(-Complex64::i() * sum * (1.0 - Complex64::from_polar(1.0, -phi)))
}

/// CSV with header `phi,re_phi,im_phi`.
pub fn write_csv<W: std::io::Write>(mut out: W, points: &[AdrPoint]) -> std::io::Result<()> {
    writeln!(out, "phi,re_phi,im_phi")?;
    for p in points {
        writeln!(out, "{:.16e},{:.16e},{:.16e}", p.phi, p.re, p.im)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn off_grid_wavenumber_rejected() {
        let s = SchemeConfig::linear(6).unwrap();
        assert!(matches!(modified_wavenumber(&s, 0.1, &AdrConfig::default()), Err(Error::InvalidWavenumber(_))));
        assert!(modified_wavenumber(&s, 0.0, &AdrConfig::default()).is_err());
    }

    #[test]
    fn linear_coefficients_are_consistent() {
        for order in [6, 8] {
            let c = linear_coefficients(order).unwrap();
            assert!((c.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        }
        let c6 = linear_coefficients(6).unwrap();
        let expected = [1.0, -8.0, 37.0, 37.0, -8.0, 1.0].map(|x| x / 60.0);
        for (a, b) in c6.iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }
}
