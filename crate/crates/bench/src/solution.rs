//! Primitive-variable snapshots on a structured grid, plus their text formats.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub dims: usize,
    pub n: [usize; 2],
    /// Cell centres along x.
    pub x: Vec<f64>,
    /// Cell centres along y (a single zero in 1D).
    pub y: Vec<f64>,
    pub names: Vec<String>,
    /// One row-major (x fastest) array per variable.
    pub columns: Vec<Vec<f64>>,
}

impl Solution {
    pub fn len(&self) -> usize {
        self.n[0] * self.n[1]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.names.iter().position(|n| n == name).map(|k| self.columns[k].as_slice())
    }

    /// The variable used for error norms: density, or `u` for scalar cases.
    pub fn primary(&self) -> &[f64] {
        &self.columns[0]
    }

    /// Structural sanity check, used when loading cached files.
    pub fn check(&self) -> Result<()> {
        let len = self.len();
        let ok = self.x.len() == self.n[0]
            && self.y.len() == self.n[1]
            && self.names.len() == self.columns.len()
            && !self.columns.is_empty()
            && self.columns.iter().all(|c| c.len() == len && c.iter().all(|v| v.is_finite()));
        if ok {
            Ok(())
        } else {
            Err(BenchError::ShapeMismatch { expected: vec![self.n[0], self.n[1]], got: vec![self.x.len(), self.y.len()] })
        }
    }

    /// Samples a 1D solution at `x` by linear interpolation between cell
    /// centres (constant beyond the outermost centres).
    pub fn sample_1d(&self, x: &[f64]) -> Result<Solution> {
        if self.dims != 1 {
            return Err(BenchError::ShapeMismatch { expected: vec![self.n[0]], got: self.n.to_vec() });
        }
        let xs = &self.x;
        let last = xs.len() - 1;
        let columns = self
            .columns
            .iter()
            .map(|col| {
                x.iter()
                    .map(|&xq| {
                        let k = xs.partition_point(|&c| c <= xq);
                        if k == 0 {
                            col[0]
                        } else if k > last {
                            col[last]
                        } else {
                            let t = (xq - xs[k - 1]) / (xs[k] - xs[k - 1]);
                            col[k - 1] + t * (col[k] - col[k - 1])
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Solution { dims: 1, n: [x.len(), 1], x: x.to_vec(), y: self.y.clone(), names: self.names.clone(), columns })
    }

    /// Column-per-variable CSV with a header row and 17 significant digits.
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut out = Vec::new();
        let mut header = vec!["x"];
        if self.dims == 2 {
            header.push("y");
        }
        header.extend(self.names.iter().map(String::as_str));
        writeln!(out, "{}", header.join(",")).expect("write to memory");
        for j in 0..self.n[1] {
            for i in 0..self.n[0] {
                let k = j * self.n[0] + i;
                write!(out, "{:.16e}", self.x[i]).expect("write to memory");
                if self.dims == 2 {
                    write!(out, ",{:.16e}", self.y[j]).expect("write to memory");
                }
                for c in &self.columns {
                    write!(out, ",{:.16e}", c[k]).expect("write to memory");
                }
                out.push(b'\n');
            }
        }
        std::fs::write(path, out).map_err(|e| BenchError::io(path, e))
    }

    /// Whitespace-separated matrix of one variable, one grid row (fixed y) per line.
    pub fn write_matrix(&self, name: &str, path: &Path) -> Result<()> {
        let col = self.column(name).ok_or_else(|| BenchError::InvalidOverride(format!("no variable `{name}`")))?;
        let mut out = String::new();
        for row in col.chunks(self.n[0]) {
            let line: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        std::fs::write(path, out).map_err(|e| BenchError::io(path, e))
    }
}
