//! Interface-value assembly: WENO-JS5, TENO and TENO-M.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limiter::{mp_bounds, median, tvd5_flux, va_flux, LimiterKind, MpParams};
use crate::stencil::{
    candidate_fluxes_n, classify_n, linear_combination, optimal_weights, renormalized, AdaptParams,
    OptimalWeights, Points, SmoothnessParams, MAX_CANDIDATES,
};

/// Cut-off used by the six-point schemes.
pub const TENO6_CT: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    WenoJs5,
    Teno6,
    Teno8A,
    Teno6M,
    Teno8AM,
}

impl Family {
    /// Number of points in the reconstruction window.
    pub fn order(self) -> usize {
        match self {
            Family::WenoJs5 => 5,
            Family::Teno6 | Family::Teno6M => 6,
            Family::Teno8A | Family::Teno8AM => 8,
        }
    }

    /// Cells needed on each side of an interface (ghost-layer width).
    pub fn half_width(self) -> usize {
        match self {
            Family::WenoJs5 | Family::Teno6 | Family::Teno6M => 3,
            Family::Teno8A | Family::Teno8AM => 4,
        }
    }

    pub fn is_teno_m(self) -> bool {
        matches!(self, Family::Teno6M | Family::Teno8AM)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CtMode {
    Fixed(f64),
    Adaptive(AdaptParams),
}

/// Complete description of a reconstruction scheme.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchemeConfig {
    pub family: Family,
    pub limiter: Option<LimiterKind>,
    pub ct_mode: CtMode,
    pub mp: MpParams,
    pub weights: OptimalWeights,
    pub smoothness: SmoothnessParams,
}

impl SchemeConfig {
    /// Default parameters for `family`; `limiter` must be given exactly for
    /// the TENO-M families.
    pub fn new(family: Family, limiter: Option<LimiterKind>) -> Result<Self> {
        let order = match family {
            Family::WenoJs5 => 6,
            f => f.order(),
        };
        let ct_mode = match family {
            Family::Teno8A | Family::Teno8AM => CtMode::Adaptive(AdaptParams::default()),
            _ => CtMode::Fixed(TENO6_CT),
        };
        let cfg = Self {
            family,
            limiter,
            ct_mode,
            mp: MpParams::default(),
            weights: optimal_weights(order)?,
            smoothness: SmoothnessParams::default(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn weno_js5() -> Self {
        Self::new(Family::WenoJs5, None).expect("default WENO-JS5 configuration is valid")
    }

    pub fn teno_m(order: usize, limiter: LimiterKind) -> Result<Self> {
        match order {
            6 => Self::new(Family::Teno6M, Some(limiter)),
            8 => Self::new(Family::Teno8AM, Some(limiter)),
            n => Err(Error::UnsupportedOrder(n)),
        }
    }

    /// The `order`-point linear scheme: TENO with the cut-off disabled.
    pub fn linear(order: usize) -> Result<Self> {
        let family = match order {
            6 => Family::Teno6,
            8 => Family::Teno8A,
            n => return Err(Error::UnsupportedOrder(n)),
        };
        let mut cfg = Self::new(family, None)?;
        cfg.ct_mode = CtMode::Fixed(0.0);
        Ok(cfg)
    }

    /// Parses names such as `weno-js5`, `teno6`, `teno8a`, `teno6m-mp`,
    /// `teno8am-tvd5`, `linear6`.
    pub fn from_name(name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        let unknown = || Error::Unknown { what: "scheme", name: name.to_string() };
        match lower.as_str() {
            "weno-js5" | "wenojs5" | "weno5" => return Ok(Self::weno_js5()),
            "teno6" => return Self::new(Family::Teno6, None),
            "teno8a" => return Self::new(Family::Teno8A, None),
            "linear6" => return Self::linear(6),
            "linear8" => return Self::linear(8),
            _ => {}
        }
        let (head, limiter) = lower.split_once('-').ok_or_else(unknown)?;
        let limiter: LimiterKind = limiter.parse().map_err(|_| unknown())?;
        match head {
            "teno6m" => Self::new(Family::Teno6M, Some(limiter)),
            "teno8am" => Self::new(Family::Teno8AM, Some(limiter)),
            _ => Err(unknown()),
        }
    }

    /// Canonical name accepted by [`SchemeConfig::from_name`].
    pub fn name(&self) -> String {
        let base = match self.family {
            Family::WenoJs5 => "weno-js5",
            Family::Teno6 => "teno6",
            Family::Teno8A => "teno8a",
            Family::Teno6M => "teno6m",
            Family::Teno8AM => "teno8am",
        };
        match self.limiter {
            Some(l) => format!("{base}-{l}"),
            None => base.to_string(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidScheme(msg));
        if self.family.is_teno_m() != self.limiter.is_some() {
            return bad(format!(
                "a limiter is required for TENO-M families and forbidden otherwise ({:?}, {:?})",
                self.family, self.limiter
            ));
        }
        if self.family == Family::WenoJs5 {
            return Ok(());
        }
        if self.weights.order() != self.family.order() {
            return bad(format!(
                "weights for a {}-point scheme used with a {}-point family",
                self.weights.order(),
                self.family.order()
            ));
        }
        let candidates = (self.family.order() - 2) as f64;
        match self.ct_mode {
            CtMode::Adaptive(a) => {
                if self.family.order() != 8 {
                    return bad("adaptive cut-off is only defined for eight-point families".into());
                }
                a.validate()?;
            }
            CtMode::Fixed(ct) => {
                // The smoothest candidate has chi >= 1/(K-2), so it always survives.
                if !(0.0..1.0 / candidates).contains(&ct) {
                    return bad(format!("fixed cut-off {ct} outside [0, 1/{candidates})"));
                }
            }
        }
        if self.limiter == Some(LimiterKind::Mp) && !(self.mp.alpha > 0.0) {
            return bad(format!("MP alpha must be positive, got {}", self.mp.alpha));
        }
        let sp = &self.smoothness;
        if !(sp.epsilon > 0.0) || sp.q < 1 || !(sp.c > 0.0) {
            return bad(format!("invalid smoothness constants {sp:?}"));
        }
        Ok(())
    }

    /// Window length `K` expected by [`reconstruct_interface`].
    pub fn order(&self) -> usize {
        self.family.order()
    }

    pub fn half_width(&self) -> usize {
        self.family.half_width()
    }

    /// Largest CFL number allowed by the configured limiter.
    pub fn max_cfl(&self) -> Option<f64> {
        (self.limiter == Some(LimiterKind::Mp)).then(|| self.mp.max_cfl())
    }

    /// Reconstruction on an oriented window of exactly `order()` points.
    /// The configuration must have been validated.
    #[inline]
    pub(crate) fn reconstruct_unchecked(&self, w: &[f64]) -> f64 {
        match self.family {
            Family::WenoJs5 => weno_js5(&[w[0], w[1], w[2], w[3], w[4]]),
            Family::Teno6 => self.teno::<4>(w),
            Family::Teno8A => self.teno::<6>(w),
            Family::Teno6M => self.limited::<4>(w),
            Family::Teno8AM => self.limited::<6>(w),
        }
    }

    #[inline(always)]
    fn teno<const N: usize>(&self, w: &[f64]) -> f64 {
        let p = Points::from_window(w);
        let q = candidate_fluxes_n::<N>(&p);
        let delta = classify_n::<N>(&p, self);
        renormalized(&q[..N], &delta, &self.weights.as_slice()[..N]).unwrap_or(f64::NAN)
    }

    #[inline(always)]
    fn limited<const N: usize>(&self, w: &[f64]) -> f64 {
        let p = Points::from_window(w);
        let mut q = candidate_fluxes_n::<N>(&p);
        let delta = classify_n::<N>(&p, self);
        self.filter_nonsmooth(&p, &mut q, &delta, N);
        linear_combination(&q[..N], &self.weights.as_slice()[..N])
    }

    #[inline]
    fn filter_nonsmooth(&self, p: &Points, q: &mut [f64; MAX_CANDIDATES], delta: &[bool; MAX_CANDIDATES], n: usize) {
        if delta[..n].iter().all(|&d| d) {
            return;
        }
        match self.limiter {
            Some(LimiterKind::Mp) => {
                let (lo, hi) = mp_bounds(&p.five(), &self.mp);
                for k in 0..n {
                    if !delta[k] {
                        q[k] = median(q[k], lo, hi);
                    }
                }
            }
            Some(kind) => {
                let limited = match kind {
                    LimiterKind::VanAlbada => va_flux(p.at(-1), p.at(0), p.at(1)),
                    _ => tvd5_flux(&p.five()),
                };
                for k in 0..n {
                    if !delta[k] {
                        q[k] = limited;
                    }
                }
            }
            None => unreachable!("TENO-M configurations carry a limiter"),
        }
    }
}

impl fmt::Display for SchemeConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SchemeConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_name(s)
    }
}

/// Interface value `f_{i+1/2}` from an oriented window.
pub fn reconstruct_interface(w: &[f64], cfg: &SchemeConfig) -> Result<f64> {
    cfg.validate()?;
    if w.len() != cfg.order() {
        return Err(Error::WindowLength { expected: cfg.order(), got: w.len() });
    }
    let v = cfg.reconstruct_unchecked(w);
    if v.is_nan() && w.iter().all(|x| x.is_finite()) {
        return Err(Error::AllCandidatesCut);
    }
    Ok(v)
}

/// Orders raw points for the wind direction. `+1` passes them through, `-1`
/// mirrors them about the interface so a left-to-right kernel serves a
/// right-to-left wind.
pub fn orient(values: &[f64], direction: i32) -> Result<Vec<f64>> {
    if values.len() < 2 {
        return Err(Error::WindowLength { expected: 2, got: values.len() });
    }
    match direction {
        1 => Ok(values.to_vec()),
        -1 => Ok(values.iter().rev().copied().collect()),
        d => Err(Error::InvalidScheme(format!("orientation must be +1 or -1, got {d}"))),
    }
}

/// Classical fifth-order WENO of Jiang and Shu on `f[i-2..=i+2]`.
#[inline]
pub fn weno_js5(f: &[f64; 5]) -> f64 {
    const EPS: f64 = 1e-6;
    let [fm2, fm1, f0, fp1, fp2] = *f;
    let q0 = (2.0 * fm2 - 7.0 * fm1 + 11.0 * f0) / 6.0;
    let q1 = (-fm1 + 5.0 * f0 + 2.0 * fp1) / 6.0;
    let q2 = (2.0 * f0 + 5.0 * fp1 - fp2) / 6.0;
    let b0 = 13.0 / 12.0 * (fm2 - 2.0 * fm1 + f0).powi(2) + 0.25 * (fm2 - 4.0 * fm1 + 3.0 * f0).powi(2);
    let b1 = 13.0 / 12.0 * (fm1 - 2.0 * f0 + fp1).powi(2) + 0.25 * (fm1 - fp1).powi(2);
    let b2 = 13.0 / 12.0 * (f0 - 2.0 * fp1 + fp2).powi(2) + 0.25 * (3.0 * f0 - 4.0 * fp1 + fp2).powi(2);
    let a0 = 0.1 / (EPS + b0).powi(2);
    let a1 = 0.6 / (EPS + b1).powi(2);
    let a2 = 0.3 / (EPS + b2).powi(2);
    (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2)
}
