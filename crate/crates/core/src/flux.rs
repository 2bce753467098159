//! Numerical fluxes at cell interfaces.
//!
//! Systems are reconstructed field by field in Roe-averaged characteristic
//! variables. The wind-split values of each field are reconstructed from an
//! upwind-oriented window and the result is mapped back with the right
//! eigenvectors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{EigenSystem, System};
use crate::scheme::SchemeConfig;
use crate::stencil::MAX_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum FluxKind {
    /// Local Lax-Friedrichs splitting with the largest per-field speed over the stencil.
    #[default]
    Rusanov,
    /// Upwinding by the sign of the Roe eigenvalue, switching to the
    /// Lax-Friedrichs splitting for fields whose speed is near zero.
    RoeEntropyFix,
}

/// Fields slower than this fraction of the fastest Roe speed use the
/// Lax-Friedrichs splitting under [`FluxKind::RoeEntropyFix`].
pub const ENTROPY_FIX_FRACTION: f64 = 0.05;

impl FromStr for FluxKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rusanov" | "llf" => Ok(FluxKind::Rusanov),
            "roe_ef" | "roe-ef" | "roe" => Ok(FluxKind::RoeEntropyFix),
            _ => Err(Error::Unknown { what: "flux", name: s.to_string() }),
        }
    }
}

impl fmt::Display for FluxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FluxKind::Rusanov => "rusanov",
            FluxKind::RoeEntropyFix => "roe_ef",
        })
    }
}

/// First-order local Lax-Friedrichs flux.
pub fn lf_flux<S: System<M>, const M: usize>(system: &S, ul: &[f64; M], ur: &[f64; M]) -> [f64; M] {
    let (fl, fr) = (system.flux(ul), system.flux(ur));
    let a = system.max_speed(ul).max(system.max_speed(ur));
    let mut out = [0.0; M];
    for c in 0..M {
        out[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * a * (ur[c] - ul[c]);
    }
    out
}

/// Scalar interface flux for `f = a u` from the `2h` values around the
/// interface (`u[i-h+1..=i+h]`).
pub fn scalar_interface_flux(values: &[f64], cfg: &SchemeConfig, a: f64) -> Result<f64> {
    cfg.validate()?;
    let len = 2 * cfg.half_width();
    if values.len() != len {
        return Err(Error::WindowLength { expected: len, got: values.len() });
    }
    let mut f = [0.0; MAX_ORDER];
    for (dst, &u) in f.iter_mut().zip(values) {
        *dst = a * u;
    }
    let k = cfg.order();
    Ok(if a >= 0.0 {
        cfg.reconstruct_unchecked(&f[..k])
    } else {
        f[..len].reverse();
        cfg.reconstruct_unchecked(&f[..k])
    })
}

/// Characteristic interface flux from the `2h` states around the interface.
pub fn char_interface_flux<S: System<M>, const M: usize>(
    system: &S,
    states: &[[f64; M]],
    cfg: &SchemeConfig,
    kind: FluxKind,
) -> Result<[f64; M]> {
    cfg.validate()?;
    let h = cfg.half_width();
    if states.len() != 2 * h {
        return Err(Error::WindowLength { expected: 2 * h, got: states.len() });
    }
    let fluxes: Vec<[f64; M]> = states.iter().map(|u| system.flux(u)).collect();
    let speeds: Vec<[f64; M]> = states.iter().map(|u| system.wave_speeds(u)).collect();
    let eig = system.eigensystem(&states[h - 1], &states[h])?;
    Ok(kernel(&eig, states, &fluxes, &speeds, cfg, kind))
}

/// Reconstruction core shared by the single-interface API and line sweeps.
#[inline]
fn kernel<const M: usize>(
    eig: &EigenSystem<M>,
    states: &[[f64; M]],
    fluxes: &[[f64; M]],
    speeds: &[[f64; M]],
    cfg: &SchemeConfig,
    kind: FluxKind,
) -> [f64; M] {
    let len = states.len();
    let k = cfg.order();
    let mut fc = [[0.0; M]; MAX_ORDER];
    let mut uc = [[0.0; M]; MAX_ORDER];
    for j in 0..len {
        fc[j] = eig.project(&fluxes[j]);
        uc[j] = eig.project(&states[j]);
    }
    let lambda_max = eig.lambda.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    let mut w = [0.0; M];
    let mut plus = [0.0; MAX_ORDER];
    let mut minus = [0.0; MAX_ORDER];
    for s in 0..M {
        let lam = eig.lambda[s];
        let use_roe = kind == FluxKind::RoeEntropyFix && lam.abs() >= ENTROPY_FIX_FRACTION * lambda_max;
        if use_roe {
            for j in 0..len {
                plus[j] = fc[j][s];
            }
            if lam < 0.0 {
                plus[..len].reverse();
            }
            w[s] = cfg.reconstruct_unchecked(&plus[..k]);
        } else {
            let a = speeds[..len].iter().fold(0.0f64, |m, sp| m.max(sp[s].abs()));
            for j in 0..len {
                plus[j] = 0.5 * (fc[j][s] + a * uc[j][s]);
                minus[len - 1 - j] = 0.5 * (fc[j][s] - a * uc[j][s]);
            }
            w[s] = cfg.reconstruct_unchecked(&plus[..k]) + cfg.reconstruct_unchecked(&minus[..k]);
        }
    }
    eig.reconstruct(&w)
}

/// Fluxes at the `n + 1` interfaces of a padded line of `n` interior cells
/// with `g` ghosts on each side; `out[k]` sits between interior cells `k - 1`
/// and `k`. Interfaces whose Roe average fails use the Lax-Friedrichs flux and
/// are flagged in `degraded`. Returns the number of degraded interfaces.
pub(crate) fn line_fluxes<S: System<M>, const M: usize>(
    system: &S,
    cfg: &SchemeConfig,
    kind: FluxKind,
    line: &[[f64; M]],
    g: usize,
    out: &mut [[f64; M]],
) -> usize {
    let h = cfg.half_width();
    debug_assert!(g >= h && out.len() + 2 * g == line.len() + 1);
    let fluxes: Vec<[f64; M]> = line.iter().map(|u| system.flux(u)).collect();
    let speeds: Vec<[f64; M]> = line.iter().map(|u| system.wave_speeds(u)).collect();
    let mut degraded = 0;
    for (k, dst) in out.iter_mut().enumerate() {
        // Interface between padded cells p and p + 1.
        let p = k + g - 1;
        let lo = p + 1 - h;
        let hi = p + 1 + h;
        *dst = match system.eigensystem(&line[p], &line[p + 1]) {
            Ok(eig) => kernel(&eig, &line[lo..hi], &fluxes[lo..hi], &speeds[lo..hi], cfg, kind),
            Err(_) => {
                degraded += 1;
                lf_flux(system, &line[p], &line[p + 1])
            }
        };
        if dst.iter().any(|x| !x.is_finite()) {
            degraded += 1;
            *dst = lf_flux(system, &line[p], &line[p + 1]);
        }
    }
    degraded
}
