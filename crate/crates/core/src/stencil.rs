//! Candidate stencils, smoothness indicators and the ENO-like cut-off.
//!
//! All kernels work on point values ordered left to right around the
//! interface `i + 1/2`, with the wind blowing from left to right. A six-point
//! window holds `f[i-2..=i+3]`, an eight-point window `f[i-3..=i+4]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scheme::{CtMode, SchemeConfig};
use crate::smoothness_tables as tables;

/// Widest supported window.
pub const MAX_ORDER: usize = 8;
/// Largest number of candidate stencils (`MAX_ORDER - 2`).
pub const MAX_CANDIDATES: usize = MAX_ORDER - 2;

/// Point values around one interface, oriented so the wind blows left to right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window<'a> {
    values: &'a [f64],
}

impl<'a> Window<'a> {
    /// Wraps a six- or eight-point slice.
    pub fn new(values: &'a [f64]) -> Result<Self> {
        match values.len() {
            6 | 8 => Ok(Self { values }),
            n => Err(Error::UnsupportedOrder(n)),
        }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &'a [f64] {
        self.values
    }

    /// Value at cell `i + offset`.
    pub fn at(&self, offset: isize) -> f64 {
        let center = self.values.len() / 2 - 1;
        self.values[(center as isize + offset) as usize]
    }

    /// Number of candidate stencils, `K - 2`.
    pub fn candidates(&self) -> usize {
        self.values.len() - 2
    }

    pub(crate) fn padded(&self) -> Points {
        Points::from_window(self.values)
    }
}

/// Eight slots where slot `j + 3` holds `f[i + j]`; a six-point window
/// leaves the outermost slots as copies of its end points.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Points(pub [f64; MAX_ORDER]);

impl Points {
    #[inline]
    pub(crate) fn from_window(w: &[f64]) -> Self {
        let mut p = [0.0; MAX_ORDER];
        if w.len() == 8 {
            p.copy_from_slice(w);
        } else {
            p[1..7].copy_from_slice(&w[..6]);
            p[0] = w[0];
            p[7] = w[5];
        }
        Points(p)
    }

    /// `f[i + offset]`.
    #[inline(always)]
    pub(crate) fn at(&self, offset: isize) -> f64 {
        self.0[(offset + 3) as usize]
    }

    /// The five values `f[i-2..=i+2]` used by the limiters.
    #[inline(always)]
    pub(crate) fn five(&self) -> [f64; 5] {
        [self.0[1], self.0[2], self.0[3], self.0[4], self.0[5]]
    }

    /// The six values `f[i-2..=i+3]`.
    #[inline(always)]
    pub(crate) fn six(&self) -> [f64; 6] {
        [self.0[1], self.0[2], self.0[3], self.0[4], self.0[5], self.0[6]]
    }

    /// First differences, slot `j` holds `f[i+j-2] - f[i+j-3]`.
    #[inline(always)]
    fn differences(&self) -> [f64; MAX_ORDER - 1] {
        let p = &self.0;
        [p[1] - p[0], p[2] - p[1], p[3] - p[2], p[4] - p[3], p[5] - p[4], p[6] - p[5], p[7] - p[6]]
    }
}

/// One row of the candidate table: integer numerators over a common
/// denominator, starting at cell `i + start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub start: isize,
    pub numerators: &'static [f64],
    pub denominator: f64,
}

impl Candidate {
    /// Stencil width `r_k`.
    pub fn width(&self) -> usize {
        self.numerators.len()
    }

    /// Coefficient `c_m` for cell `i + start + m`.
    pub fn coefficient(&self, m: usize) -> f64 {
        self.numerators[m] / self.denominator
    }

    #[inline(always)]
    fn apply(&self, p: &Points) -> f64 {
        let mut acc = 0.0;
        for (m, c) in self.numerators.iter().enumerate() {
            acc += c * p.at(self.start + m as isize);
        }
        acc / self.denominator
    }
}

/// Interface fluxes of the candidate stencils of incremental width.
pub const CANDIDATES: [Candidate; MAX_CANDIDATES] = [
    Candidate { start: -1, numerators: &[-1.0, 5.0, 2.0], denominator: 6.0 },
    Candidate { start: 0, numerators: &[2.0, 5.0, -1.0], denominator: 6.0 },
    Candidate { start: -2, numerators: &[2.0, -7.0, 11.0], denominator: 6.0 },
    Candidate { start: 0, numerators: &[3.0, 13.0, -5.0, 1.0], denominator: 12.0 },
    Candidate { start: -3, numerators: &[-3.0, 13.0, -23.0, 25.0], denominator: 12.0 },
    Candidate { start: 0, numerators: &[12.0, 77.0, -43.0, 17.0, -3.0], denominator: 60.0 },
];

/// The candidate rows used by a `order`-point scheme.
pub fn candidate_table(order: usize) -> Result<&'static [Candidate]> {
    match order {
        6 => Ok(&CANDIDATES[..4]),
        8 => Ok(&CANDIDATES[..6]),
        n => Err(Error::UnsupportedOrder(n)),
    }
}

/// Stencil widths `{r_k}` for an even order `K`: `3, 3, 3, 4, ..., (K+2)/2`.
pub fn stencil_widths(order: usize) -> Result<Vec<usize>> {
    Ok(candidate_table(order)?.iter().map(Candidate::width).collect())
}

/// Sum-of-squares form of a smoothness indicator over `D` first differences:
/// `beta = sum_t weights[t] * (sum_s rows[t][s] * diff[s])^2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SmoothnessForm<const D: usize> {
    pub weights: [f64; D],
    pub rows: [[f64; D]; D],
}

impl<const D: usize> SmoothnessForm<D> {
    #[inline(always)]
    pub(crate) fn eval(&self, diffs: &[f64]) -> f64 {
        let mut beta = 0.0;
        for t in 0..D {
            let mut s = 0.0;
            for k in t..D {
                s += self.rows[t][k] * diffs[k];
            }
            beta += self.weights[t] * s * s;
        }
        beta
    }
}

/// Constants of the scale-separated indicator `gamma = (C + tau/(beta + eps))^q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothnessParams {
    pub c: f64,
    pub q: i32,
    pub epsilon: f64,
}

impl Default for SmoothnessParams {
    fn default() -> Self {
        Self { c: 1.0, q: 6, epsilon: 1e-40 }
    }
}

/// Parameters of the adaptive cut-off `C_T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdaptParams {
    pub xi: f64,
    pub c_r: f64,
    pub alpha1: f64,
    pub alpha2: f64,
}

impl Default for AdaptParams {
    fn default() -> Self {
        Self { xi: 1e-3, c_r: 0.23, alpha1: 10.5, alpha2: 3.5 }
    }
}

impl AdaptParams {
    pub fn validate(&self) -> Result<()> {
        let r = 0.9 * self.c_r;
        if !(r > 0.0 && r < 1.0) || !(self.xi > 0.0) {
            return Err(Error::InvalidScheme(format!(
                "adaptive cut-off needs 0 < 0.9*C_r < 1 and xi > 0 (C_r = {}, xi = {})",
                self.c_r, self.xi
            )));
        }
        Ok(())
    }

    fn eta_epsilon(&self) -> f64 {
        let r = 0.9 * self.c_r;
        r / (1.0 - r) * self.xi * self.xi
    }
}

/// Linear weights `d_k` of the candidate stencils.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimalWeights {
    order: usize,
    d: [f64; MAX_CANDIDATES],
}

impl OptimalWeights {
    /// Custom weight set for `order`; must sum to one.
    pub fn custom(order: usize, weights: &[f64]) -> Result<Self> {
        let n = candidate_table(order)?.len();
        if weights.len() != n {
            return Err(Error::InvalidScheme(format!(
                "{order}-point scheme needs {n} weights, got {}",
                weights.len()
            )));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidScheme(format!("weights sum to {sum}, not 1")));
        }
        let mut d = [0.0; MAX_CANDIDATES];
        d[..n].copy_from_slice(weights);
        Ok(Self { order, d })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.d[..self.order - 2]
    }
}

/// Weights that make the combination of candidates the `order`-point
/// maximum-order interpolation.
pub fn optimal_weights(order: usize) -> Result<OptimalWeights> {
    match order {
        6 => Ok(OptimalWeights { order, d: [0.45, 0.3, 0.05, 0.2, 0.0, 0.0] }),
        8 => Ok(OptimalWeights {
            order,
            d: [3.0 / 7.0, 9.0 / 35.0, 2.0 / 35.0, 6.0 / 35.0, 1.0 / 70.0, 1.0 / 14.0],
        }),
        n => Err(Error::UnsupportedOrder(n)),
    }
}

/// Interface flux of candidate `k`.
pub fn candidate_flux(k: usize, w: &Window<'_>) -> Result<f64> {
    let table = candidate_table(w.order())?;
    let c = table
        .get(k)
        .ok_or(Error::CandidateOutOfRange { index: k, order: w.order() })?;
    Ok(c.apply(&w.padded()))
}

/// Smoothness indicator of candidate `k`.
pub fn beta_candidate(k: usize, w: &Window<'_>) -> Result<f64> {
    if k >= w.candidates() {
        return Err(Error::CandidateOutOfRange { index: k, order: w.order() });
    }
    let d = w.padded().differences();
    Ok(candidate_beta(k, &d))
}

/// Smoothness indicator of the full `K`-point interpolant.
pub fn beta_global(w: &Window<'_>) -> f64 {
    let d = w.padded().differences();
    full_beta(w.order(), &d)
}

/// Global high-order reference `tau_K = |beta_K - (beta_1 + beta_2 + 4 beta_0)/6|`.
pub fn tau(w: &Window<'_>) -> f64 {
    let d = w.padded().differences();
    tau_from(full_beta(w.order(), &d), candidate_beta(0, &d), candidate_beta(1, &d), candidate_beta(2, &d))
}

/// `gamma_k = (C + tau/(beta_k + eps))^q`.
pub fn gamma(beta: f64, tau: f64, p: &SmoothnessParams) -> f64 {
    int_pow(p.c + tau / (beta + p.epsilon), p.q)
}

/// `chi_k = gamma_k / sum(gamma)`.
pub fn normalize_chi(gamma: &[f64]) -> Vec<f64> {
    let sum: f64 = gamma.iter().sum();
    gamma.iter().map(|g| g / sum).collect()
}

/// Sharp cut-off: a candidate is smooth unless `chi_k < C_T`.
pub fn cutoff_delta(chi: &[f64], ct: f64) -> Vec<bool> {
    chi.iter().map(|&c| !(c < ct)).collect()
}

/// Adaptive cut-off from the six values `f[i-2..=i+3]`.
pub fn adapt_ct(f: &[f64; 6], p: &AdaptParams) -> f64 {
    let eps = p.eta_epsilon();
    let df = [f[1] - f[0], f[2] - f[1], f[3] - f[2], f[4] - f[3], f[5] - f[4]];
    let eta = |lo: f64, hi: f64| ((2.0 * hi * lo).abs() + eps) / (hi * hi + lo * lo + eps);
    let eta_face = eta(df[0], df[1]).min(eta(df[1], df[2])).min(eta(df[2], df[3])).min(eta(df[3], df[4]));
    let m = 1.0 - (eta_face / p.c_r).min(1.0);
    let g = (1.0 - m).powi(4) * (1.0 + 4.0 * m);
    let beta = p.alpha1 - p.alpha2 * (1.0 - g);
    let exponent = beta.floor().max(1.0);
    10f64.powi(-(exponent as i32))
}

/// Standard TENO reconstruction: candidates with `delta_k = 1` combined with
/// renormalized linear weights.
pub fn teno_flux(w: &Window<'_>, cfg: &SchemeConfig) -> Result<f64> {
    if cfg.order() != w.order() {
        return Err(Error::WindowLength { expected: cfg.order(), got: w.order() });
    }
    let p = w.padded();
    let n = w.candidates();
    let q = candidate_fluxes(&p, n);
    let delta = classify(&p, n, cfg);
    renormalized(&q, &delta, cfg.weights.as_slice()).ok_or(Error::AllCandidatesCut)
}

/// `x^q` by binary exponentiation.
#[inline(always)]
fn int_pow(mut x: f64, q: i32) -> f64 {
    if q < 0 {
        return 1.0 / int_pow(x, -q);
    }
    let mut n = q as u32;
    let mut r = 1.0;
    loop {
        if n & 1 == 1 {
            r *= x;
        }
        n >>= 1;
        if n == 0 {
            return r;
        }
        x *= x;
    }
}

#[inline(always)]
fn candidate_beta(k: usize, d: &[f64; MAX_ORDER - 1]) -> f64 {
    // Difference slot of the first cell pair is `start + 3`.
    match k {
        0 => tables::CANDIDATE_0.eval(&d[2..4]),
        1 => tables::CANDIDATE_1.eval(&d[3..5]),
        2 => tables::CANDIDATE_2.eval(&d[1..3]),
        3 => tables::CANDIDATE_3.eval(&d[3..6]),
        4 => tables::CANDIDATE_4.eval(&d[0..3]),
        5 => tables::CANDIDATE_5.eval(&d[3..7]),
        _ => unreachable!("candidate index checked by callers"),
    }
}

#[inline(always)]
fn full_beta(order: usize, d: &[f64; MAX_ORDER - 1]) -> f64 {
    if order == 6 {
        tables::FULL_6.eval(&d[1..6])
    } else {
        tables::FULL_8.eval(&d[0..7])
    }
}

#[inline(always)]
fn tau_from(beta_k: f64, b0: f64, b1: f64, b2: f64) -> f64 {
    (beta_k - (b1 + b2 + 4.0 * b0) / 6.0).abs()
}

#[inline(always)]
pub(crate) fn candidate_fluxes(p: &Points, n: usize) -> [f64; MAX_CANDIDATES] {
    if n == 4 {
        candidate_fluxes_n::<4>(p)
    } else {
        candidate_fluxes_n::<6>(p)
    }
}

/// Candidate fluxes with the candidate count `N` fixed at compile time.
#[inline(always)]
pub(crate) fn candidate_fluxes_n<const N: usize>(p: &Points) -> [f64; MAX_CANDIDATES] {
    let mut q = [0.0; MAX_CANDIDATES];
    for k in 0..N {
        q[k] = CANDIDATES[k].apply(p);
    }
    q
}

/// Cut-off flags for the `n` candidates of window `p`.
///
/// `chi` is evaluated as `(a_k/a_max)^q / sum_l (a_l/a_max)^q` with
/// `a_k = C + tau/(beta_k + eps)`, which equals `gamma_k / sum(gamma)` but
/// cannot overflow when `tau/eps` is large.
#[inline]
pub(crate) fn classify(p: &Points, n: usize, cfg: &SchemeConfig) -> [bool; MAX_CANDIDATES] {
    if n == 4 {
        classify_n::<4>(p, cfg)
    } else {
        classify_n::<6>(p, cfg)
    }
}

#[inline(always)]
pub(crate) fn classify_n<const N: usize>(p: &Points, cfg: &SchemeConfig) -> [bool; MAX_CANDIDATES] {
    let n = N;
    let mut delta = [false; MAX_CANDIDATES];
    let ct = match cfg.ct_mode {
        CtMode::Fixed(ct) => ct,
        CtMode::Adaptive(ref a) => adapt_ct(&p.six(), a),
    };
    if ct <= 0.0 {
        delta[..n].iter_mut().for_each(|d| *d = true);
        return delta;
    }
    let d = p.differences();
    let order = n + 2;
    let mut a = [0.0; MAX_CANDIDATES];
    for (k, ak) in a.iter_mut().enumerate().take(n) {
        *ak = candidate_beta(k, &d);
    }
    let t = tau_from(full_beta(order, &d), a[0], a[1], a[2]);
    let sp = &cfg.smoothness;
    let mut a_max = 0.0f64;
    for ak in a.iter_mut().take(n) {
        *ak = sp.c + t / (*ak + sp.epsilon);
        a_max = a_max.max(*ak);
    }
    let mut s = [0.0; MAX_CANDIDATES];
    let mut sum = 0.0;
    for k in 0..n {
        s[k] = int_pow(a[k] / a_max, sp.q);
        sum += s[k];
    }
    for k in 0..n {
        delta[k] = !(s[k] / sum < ct);
    }
    delta
}

#[inline]
pub(crate) fn renormalized(q: &[f64], delta: &[bool], d: &[f64]) -> Option<f64> {
    let n = d.len();
    if delta[..n].iter().all(|&x| x) {
        return Some(linear_combination(q, d));
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for k in 0..n {
        if delta[k] {
            num += d[k] * q[k];
            den += d[k];
        }
    }
    (den > 0.0).then(|| num / den)
}

/// `sum_k d_k q_k`, the linear path shared by TENO and TENO-M.
#[inline(always)]
pub(crate) fn linear_combination(q: &[f64], d: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (qk, dk) in q.iter().zip(d) {
        acc += dk * qk;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn w6(v: &[f64; 6]) -> Window<'_> {
        Window::new(v).unwrap()
    }

    #[test]
    fn candidate_rows_are_consistent() {
        for c in CANDIDATES {
            let sum: f64 = c.numerators.iter().sum();
            assert_eq!(sum, c.denominator);
        }
        assert_eq!(stencil_widths(6).unwrap(), vec![3, 3, 3, 4]);
        assert_eq!(stencil_widths(8).unwrap(), vec![3, 3, 3, 4, 4, 5]);
    }

    #[test]
    fn candidate_flux_examples() {
        // window f[i-2..=i+3]
        let ones = [1.0; 6];
        assert_eq!(candidate_flux(0, &w6(&ones)).unwrap(), 1.0);
        let ramp = [9.0, 0.0, 1.0, 2.0, 9.0, 9.0];
        assert_relative_eq!(candidate_flux(0, &w6(&ramp)).unwrap(), 1.5, epsilon = 1e-15);
        assert!(matches!(
            candidate_flux(4, &w6(&ones)),
            Err(Error::CandidateOutOfRange { index: 4, order: 6 })
        ));
    }

    #[test]
    fn beta_examples() {
        let flat = [3.0; 6];
        assert_eq!(beta_candidate(0, &w6(&flat)).unwrap(), 0.0);
        assert_eq!(beta_global(&w6(&flat)), 0.0);
        let ramp = [7.0, 0.0, 1.0, 2.0, 7.0, 7.0];
        assert_relative_eq!(beta_candidate(0, &w6(&ramp)).unwrap(), 1.0, epsilon = 1e-14);
        let curved = [0.0, 1.0, 2.0, 4.0, 0.0, 0.0];
        assert_relative_eq!(beta_candidate(0, &w6(&curved)).unwrap(), 10.0 / 3.0, epsilon = 1e-14);
        let line: Vec<f64> = (0..8).map(|j| j as f64).collect();
        assert_relative_eq!(beta_global(&Window::new(&line).unwrap()), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&w6(&[2.0; 6])), 0.0);
        let quad: Vec<f64> = (-3..=4).map(|j| (j * j) as f64).collect();
        assert!(tau(&Window::new(&quad).unwrap()) < 1e-12);
        assert!(tau(&Window::new(&quad[1..7]).unwrap()) < 1e-12);
        let step = [0.0, 0.0, 0.0, 1.0, 1.0, 1.0];
        assert!(tau(&w6(&step)) > 0.0);
    }

    #[test]
    fn gamma_examples() {
        let p = SmoothnessParams::default();
        assert_eq!(gamma(0.3, 0.0, &p), 1.0);
        assert_relative_eq!(gamma(0.0, 1.0, &p), 1e240, max_relative = 1e-15);
        assert!(gamma(0.0, 1.0, &p).is_finite());
        assert_relative_eq!(gamma(1.0, 1.0, &p), 64.0, epsilon = 1e-12);
    }

    #[test]
    fn chi_and_cutoff_examples() {
        assert_eq!(normalize_chi(&[2.0; 4]), vec![0.25; 4]);
        let chi = normalize_chi(&[64.0, 1.0, 1.0, 1.0]);
        assert_relative_eq!(chi[0], 64.0 / 67.0);
        assert_eq!(normalize_chi(&[5.0]), vec![1.0]);
        assert_eq!(cutoff_delta(&[1e-8], 1e-7), vec![false]);
        assert_eq!(cutoff_delta(&[1e-7], 1e-7), vec![true]);
        assert_eq!(cutoff_delta(&[0.25; 4], 1e-5), vec![true; 4]);
    }

    #[test]
    fn adapt_ct_examples() {
        let p = AdaptParams::default();
        let line = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(adapt_ct(&line, &p), 1e-10);
        assert_eq!(adapt_ct(&[4.0; 6], &p), 1e-10);
        let jump = [0.0, 0.0, 0.0, 1.0, 1.0, 1.0];
        assert_eq!(adapt_ct(&jump, &p), 1e-7);
    }

    #[test]
    fn optimal_weights_sum_to_one() {
        for k in [6, 8] {
            let w = optimal_weights(k).unwrap();
            let s: f64 = w.as_slice().iter().sum();
            assert_relative_eq!(s, 1.0, epsilon = 1e-15);
        }
        assert!(matches!(optimal_weights(7), Err(Error::UnsupportedOrder(7))));
        assert!(OptimalWeights::custom(6, &[0.5, 0.5, 0.1, 0.0]).is_err());
    }

    #[test]
    fn window_rejects_odd_orders() {
        assert!(Window::new(&[0.0; 5]).is_err());
        let v: Vec<f64> = (0..8).map(f64::from).collect();
        let w = Window::new(&v).unwrap();
        assert_eq!(w.at(-3), 0.0);
        assert_eq!(w.at(4), 7.0);
    }
}
