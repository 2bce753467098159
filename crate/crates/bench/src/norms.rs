//! Discrete error norms and observed orders of accuracy.

use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

/// Errors below this are treated as round-off when estimating orders.
pub const ROUNDOFF_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorNorms {
    /// Mean absolute error.
    pub l1: f64,
    /// Root-mean-square error.
    pub l2: f64,
    pub linf: f64,
}

/// Norms of `numerical - reference` over the cells of a common grid.
pub fn error_norms(numerical: &[f64], reference: &[f64]) -> Result<ErrorNorms> {
    if numerical.len() != reference.len() || numerical.is_empty() {
        return Err(BenchError::ShapeMismatch { expected: vec![reference.len()], got: vec![numerical.len()] });
    }
    let n = numerical.len() as f64;
    let (mut l1, mut l2, mut linf) = (0.0f64, 0.0f64, 0.0f64);
    for (a, b) in numerical.iter().zip(reference) {
        let e = (a - b).abs();
        l1 += e;
        l2 += e * e;
        linf = linf.max(e);
    }
    Ok(ErrorNorms { l1: l1 / n, l2: (l2 / n).sqrt(), linf })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub n: usize,
    pub linf: f64,
    pub wall_time: f64,
    /// `log2(e_prev / e)` against the previous (coarser) row; `None` on the
    /// first row and when either error is at round-off.
    pub order: Option<f64>,
}

/// Builds the table from `(N, L_inf, seconds)` triples sorted by `N`.
pub fn convergence_rows(levels: &[(usize, f64, f64)]) -> Result<Vec<ConvergenceRow>> {
    if levels.len() < 2 {
        return Err(BenchError::TooFewLevels(levels.len()));
    }
    let mut rows = Vec::with_capacity(levels.len());
    for (k, &(n, linf, wall_time)) in levels.iter().enumerate() {
        let order = (k > 0)
            .then(|| levels[k - 1])
            .filter(|prev| prev.1 > ROUNDOFF_FLOOR && linf > ROUNDOFF_FLOOR)
            .map(|prev| (prev.1 / linf).log2() / (n as f64 / prev.0 as f64).log2());
        rows.push(ConvergenceRow { n, linf, wall_time, order });
    }
    Ok(rows)
}
