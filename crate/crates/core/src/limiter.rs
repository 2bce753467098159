//! Nonlinear limiters used to filter nonsmooth candidate fluxes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Floor used to keep slope ratios finite while preserving their sign.
const RATIO_FLOOR: f64 = 1e-100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LimiterKind {
    /// Second-order Van Albada slope limiter on the three cells around `i`.
    #[serde(rename = "va")]
    VanAlbada,
    /// Fifth-order TVD limiter on the five cells around `i`.
    #[serde(rename = "tvd5")]
    Tvd5,
    /// Monotonicity-preserving bounds applied to each nonsmooth candidate.
    #[serde(rename = "mp")]
    Mp,
}

impl LimiterKind {
    pub fn name(self) -> &'static str {
        match self {
            LimiterKind::VanAlbada => "va",
            LimiterKind::Tvd5 => "tvd5",
            LimiterKind::Mp => "mp",
        }
    }
}

impl fmt::Display for LimiterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LimiterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "va" => Ok(LimiterKind::VanAlbada),
            "tvd5" => Ok(LimiterKind::Tvd5),
            "mp" => Ok(LimiterKind::Mp),
            _ => Err(Error::Unknown { what: "limiter", name: s.to_string() }),
        }
    }
}

/// Interface curvature measure of the MP limiter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Curvature {
    #[serde(rename = "m4")]
    M4,
    #[serde(rename = "mm")]
    MM,
}

impl FromStr for Curvature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "m4" => Ok(Curvature::M4),
            "mm" => Ok(Curvature::MM),
            _ => Err(Error::Unknown { what: "curvature measure", name: s.to_string() }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MpParams {
    pub alpha: f64,
    pub beta: f64,
    pub curvature: Curvature,
}

impl Default for MpParams {
    fn default() -> Self {
        Self { alpha: 1.25, beta: 4.0, curvature: Curvature::M4 }
    }
}

impl MpParams {
    /// Largest CFL number compatible with the upper limiter, `1/(1 + alpha)`.
    pub fn max_cfl(&self) -> f64 {
        1.0 / (1.0 + self.alpha)
    }
}

/// Sign with `sgn(0) = 0`.
#[inline(always)]
fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

#[inline]
pub fn minmod2(x: f64, y: f64) -> f64 {
    0.5 * (sgn(x) + sgn(y)) * x.abs().min(y.abs())
}

#[inline]
pub fn minmod4(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let sa = sgn(a);
    0.125 * (sa + sgn(b)) * ((sa + sgn(c)) * (sa + sgn(d))).abs() * a.abs().min(b.abs()).min(c.abs()).min(d.abs())
}

#[inline]
pub fn median(x: f64, y: f64, z: f64) -> f64 {
    x + minmod2(y - x, z - x)
}

/// Slope ratio `num/den` with a sign-preserving floor on the denominator;
/// `None` when the denominator is exactly flat.
#[inline(always)]
fn ratio(num: f64, den: f64) -> Option<f64> {
    if den.abs() < RATIO_FLOOR {
        None
    } else {
        Some(num / (den + RATIO_FLOOR.copysign(den)))
    }
}

/// Van Albada limited interface value with `kappa = 1/3`.
#[inline]
pub fn va_flux(fm1: f64, f0: f64, fp1: f64) -> f64 {
    const KAPPA: f64 = 1.0 / 3.0;
    let dm = f0 - fm1;
    let dp = fp1 - f0;
    let Some(r) = ratio(dp, dm) else {
        return f0;
    };
    let phi = 2.0 * r / (r * r + 1.0);
    f0 + 0.25 * phi * ((1.0 - KAPPA * phi) * dm + (1.0 + KAPPA * phi) * dp)
}

/// Limiter value `phi` of the fifth-order TVD limiter on `f[i-2..=i+2]`.
#[inline]
pub fn tvd5_phi(f: &[f64; 5]) -> f64 {
    const ALPHA: f64 = 2.0;
    let dm = f[2] - f[1];
    let dp = f[3] - f[2];
    let Some(r) = ratio(dp, dm) else {
        return 0.0;
    };
    if r <= 0.0 {
        return 0.0;
    }
    // 1/r_{i-1} = dm_{i-1}/dp_{i-1}, and dp_{i-1} = dm_i is nonzero here.
    let inv_r_left = (f[1] - f[0]) / (dm + RATIO_FLOOR.copysign(dm));
    let r_right = ratio(f[4] - f[3], dp).unwrap_or(0.0);
    let beta = (-2.0 * inv_r_left + 11.0 + 24.0 * r - 3.0 * r * r_right) / 30.0;
    0.0f64.max(ALPHA.min(ALPHA * r).min(beta))
}

/// Fifth-order TVD limited interface value on `f[i-2..=i+2]`.
#[inline]
pub fn tvd5_flux(f: &[f64; 5]) -> f64 {
    f[2] + 0.5 * tvd5_phi(f) * (f[2] - f[1])
}

#[inline]
pub fn cell_curvature(fm1: f64, f0: f64, fp1: f64) -> f64 {
    fp1 - 2.0 * f0 + fm1
}

#[inline]
pub fn interface_curvature(d0: f64, d1: f64, variant: Curvature) -> f64 {
    match variant {
        Curvature::M4 => minmod4(4.0 * d0 - d1, 4.0 * d1 - d0, d0, d1),
        Curvature::MM => minmod2(d0, d1),
    }
}

/// Lower and upper monotonicity-preserving bounds at `i + 1/2` from `f[i-2..=i+2]`.
#[inline]
pub fn mp_bounds(f: &[f64; 5], p: &MpParams) -> (f64, f64) {
    let [fm2, fm1, f0, fp1, fp2] = *f;
    let d_m = cell_curvature(fm2, fm1, f0);
    let d_0 = cell_curvature(fm1, f0, fp1);
    let d_p = cell_curvature(f0, fp1, fp2);
    let d_face_right = interface_curvature(d_0, d_p, p.curvature);
    let d_face_left = interface_curvature(d_m, d_0, p.curvature);

    let f_ul = f0 + p.alpha * (f0 - fm1);
    let f_md = 0.5 * (f0 + fp1) - 0.5 * d_face_right;
    let f_lc = f0 + 0.5 * (f0 - fm1) + p.beta / 3.0 * d_face_left;

    let lo = f0.min(fp1).min(f_md).max(f0.min(f_ul).min(f_lc));
    let hi = f0.max(fp1).max(f_md).min(f0.max(f_ul).max(f_lc));
    (lo, hi)
}

/// Clamp a predicted interface value into the MP bounds.
#[inline]
pub fn mp_filter(fhat: f64, f: &[f64; 5], p: &MpParams) -> f64 {
    let (lo, hi) = mp_bounds(f, p);
    median(fhat, lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minmod_examples() {
        assert_eq!(minmod2(1.0, 2.0), 1.0);
        assert_eq!(minmod2(-1.0, 2.0), 0.0);
        assert_eq!(minmod2(-3.0, -2.0), -2.0);
        assert_eq!(minmod4(1.0, 2.0, 3.0, 4.0), 1.0);
        assert_eq!(minmod4(1.0, -2.0, 3.0, 4.0), 0.0);
        assert_eq!(minmod4(-1.0, -2.0, -3.0, -4.0), -1.0);
        // signum(0.0) would be 1.0; the zero argument must not pass a sign.
        assert_eq!(minmod2(0.0, 2.0), 0.0);
    }

    #[test]
    fn median_examples() {
        assert_eq!(median(1.0, 2.0, 3.0), 2.0);
        assert_eq!(median(5.0, 2.0, 3.0), 3.0);
        assert_eq!(median(4.0, 4.0, -1.0), 4.0);
    }

    #[test]
    fn van_albada_examples() {
        assert_eq!(va_flux(1.0, 2.0, 3.0), 2.5);
        assert_eq!(va_flux(1.0, 2.0, 2.0), 2.0);
        assert_eq!(va_flux(2.0, 2.0, 5.0), 2.0);
    }

    #[test]
    fn tvd5_examples() {
        let line = [0.0, 1.0, 2.0, 3.0, 4.0];
        assert_eq!(tvd5_phi(&line), 1.0);
        assert_eq!(tvd5_flux(&line), 2.5);
        let peak = [0.0, 1.0, 2.0, 1.0, 0.0];
        assert_eq!(tvd5_flux(&peak), 2.0);
        let flat_left = [0.0, 2.0, 2.0, 3.0, 4.0];
        assert_eq!(tvd5_flux(&flat_left), 2.0);
    }

    #[test]
    fn curvature_examples() {
        assert_eq!(cell_curvature(1.0, 2.0, 3.0), 0.0);
        assert_eq!(cell_curvature(0.0, 0.0, 1.0), 1.0);
        assert_eq!(cell_curvature(1.0, 0.0, 1.0), 2.0);
        assert_eq!(interface_curvature(1.0, 1.0, Curvature::M4), 1.0);
        assert_eq!(interface_curvature(1.0, -1.0, Curvature::M4), 0.0);
        assert_eq!(interface_curvature(1.0, -1.0, Curvature::MM), 0.0);
        assert_eq!(interface_curvature(1.0, 5.0, Curvature::M4), 0.0);
        assert_eq!(interface_curvature(1.0, 5.0, Curvature::MM), 1.0);
    }

    #[test]
    fn mp_filter_step_window() {
        let f = [0.0, 0.0, 0.0, 1.0, 1.0];
        assert_eq!(mp_bounds(&f, &MpParams::default()), (0.0, 0.0));
        assert_eq!(mp_filter(-0.1, &f, &MpParams::default()), 0.0);
    }

    #[test]
    fn mp_filter_passes_and_clamps() {
        let f = [0.0, 1.0, 2.0, 3.0, 4.0];
        let p = MpParams::default();
        let (lo, hi) = mp_bounds(&f, &p);
        assert!(lo <= 2.5 && 2.5 <= hi);
        assert_eq!(mp_filter(2.5, &f, &p), 2.5);
        assert_eq!(mp_filter(hi + 1.0, &f, &p), hi);
    }

    #[test]
    fn names_parse() {
        assert_eq!("TVD5".parse::<LimiterKind>().unwrap(), LimiterKind::Tvd5);
        assert!("superbee".parse::<LimiterKind>().is_err());
        assert_eq!("mm".parse::<Curvature>().unwrap(), Curvature::MM);
    }

    fn order_middle(x: f64, y: f64, z: f64) -> f64 {
        let mut v = [x, y, z];
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v[1]
    }

    proptest! {
        #[test]
        fn median_is_middle_order_statistic(x in -1e3..1e3f64, y in -1e3..1e3f64, z in -1e3..1e3f64) {
            let m = median(x, y, z);
            let mid = order_middle(x, y, z);
            prop_assert!((m - mid).abs() <= 1e-12 * (1.0 + mid.abs()));
        }

        #[test]
        fn minmod_is_odd_and_bounded(a in -10.0..10.0f64, b in -10.0..10.0f64, c in -10.0..10.0f64, d in -10.0..10.0f64) {
            prop_assert_eq!(minmod2(-a, -b), -minmod2(a, b));
            prop_assert_eq!(minmod4(-a, -b, -c, -d), -minmod4(a, b, c, d));
            prop_assert!(minmod2(a, b).abs() <= a.abs().min(b.abs()));
            let m4 = minmod4(a, b, c, d);
            prop_assert!(m4.abs() <= a.abs().min(b.abs()).min(c.abs()).min(d.abs()));
            let same = (a > 0.0 && b > 0.0 && c > 0.0 && d > 0.0) || (a < 0.0 && b < 0.0 && c < 0.0 && d < 0.0);
            if !same {
                prop_assert_eq!(m4, 0.0);
            }
        }

        #[test]
        fn mp_output_stays_in_bounds(
            f in proptest::array::uniform5(-5.0..5.0f64),
            fhat in -10.0..10.0f64,
            beta in prop_oneof![Just(1.0), Just(2.0), Just(4.0)],
            mm in any::<bool>(),
        ) {
            let p = MpParams { beta, curvature: if mm { Curvature::MM } else { Curvature::M4 }, ..MpParams::default() };
            let (lo, hi) = mp_bounds(&f, &p);
            let out = mp_filter(fhat, &f, &p);
            prop_assert!(out >= lo.min(hi) - 1e-12 && out <= lo.max(hi) + 1e-12);
            if fhat >= lo.min(hi) && fhat <= lo.max(hi) {
                prop_assert_eq!(out, fhat);
            }
        }

        #[test]
        fn tvd5_phi_in_range(f in proptest::array::uniform5(-5.0..5.0f64)) {
            let phi = tvd5_phi(&f);
            prop_assert!((0.0..=2.0).contains(&phi));
        }

        #[test]
        fn limiters_exact_on_lines(a in -5.0..5.0f64, s in -5.0..5.0f64) {
            prop_assume!(s.abs() > 1e-6);
            let f = [a - 2.0 * s, a - s, a, a + s, a + 2.0 * s];
            let exact = a + 0.5 * s;
            prop_assert!((va_flux(f[1], f[2], f[3]) - exact).abs() <= 1e-12 * (1.0 + exact.abs()));
            prop_assert!((tvd5_flux(&f) - exact).abs() <= 1e-12 * (1.0 + exact.abs()));
        }
    }
}
