//! Uniform Cartesian grids, ghost-padded state fields and boundary conditions.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::System;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
        }
    }
}

/// Cell-centred uniform grid in one or two dimensions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UniformGrid {
    pub dims: usize,
    pub origin: [f64; 2],
    pub dx: [f64; 2],
    pub n: [usize; 2],
    pub n_ghost: usize,
}

impl UniformGrid {
    pub fn new_1d(x0: f64, x1: f64, nx: usize, n_ghost: usize) -> Result<Self> {
        let g = Self { dims: 1, origin: [x0, 0.0], dx: [(x1 - x0) / nx as f64, 1.0], n: [nx, 1], n_ghost };
        g.validate()?;
        Ok(g)
    }

    pub fn new_2d(x: [f64; 2], y: [f64; 2], n: [usize; 2], n_ghost: usize) -> Result<Self> {
        let g = Self {
            dims: 2,
            origin: [x[0], y[0]],
            dx: [(x[1] - x[0]) / n[0] as f64, (y[1] - y[0]) / n[1] as f64],
            n,
            n_ghost,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let axes = &self.n[..self.dims];
        let ok = matches!(self.dims, 1 | 2)
            && self.n_ghost > 0
            && axes.iter().all(|&n| n >= 2 * self.n_ghost)
            && self.dx[..self.dims].iter().all(|&d| d.is_finite() && d > 0.0)
            && (self.dims == 2 || self.n[1] == 1);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidGrid(format!(
                "{}D grid with cells {:?}, spacing {:?} and {} ghost layers",
                self.dims, self.n, self.dx, self.n_ghost
            )))
        }
    }

    pub fn nx(&self) -> usize {
        self.n[0]
    }

    pub fn ny(&self) -> usize {
        self.n[1]
    }

    /// Ghost layers along `axis` (zero in y for one-dimensional grids).
    pub fn ghosts(&self, axis: Axis) -> usize {
        if axis == Axis::Y && self.dims == 1 {
            0
        } else {
            self.n_ghost
        }
    }

    pub fn center(&self, axis: Axis, i: isize) -> f64 {
        let a = axis.index();
        self.origin[a] + (i as f64 + 0.5) * self.dx[a]
    }

    pub fn centers(&self, axis: Axis) -> Vec<f64> {
        (0..self.n[axis.index()] as isize).map(|i| self.center(axis, i)).collect()
    }

    /// Cell volume (length in 1D, area in 2D).
    pub fn cell_volume(&self) -> f64 {
        self.dx[..self.dims].iter().product()
    }
}

/// Ghost-padded cell data with `M` conserved components per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Field<const M: usize> {
    n: [usize; 2],
    g: [usize; 2],
    data: Vec<[f64; M]>,
}

impl<const M: usize> Field<M> {
    pub fn zeros(grid: &UniformGrid) -> Self {
        let g = [grid.ghosts(Axis::X), grid.ghosts(Axis::Y)];
        let len = (grid.n[0] + 2 * g[0]) * (grid.n[1] + 2 * g[1]);
        Self { n: grid.n, g, data: vec![[0.0; M]; len] }
    }

    /// Fills the interior from `f(x, y)`.
    pub fn from_fn(grid: &UniformGrid, mut f: impl FnMut(f64, f64) -> [f64; M]) -> Self {
        let mut field = Self::zeros(grid);
        for j in 0..grid.n[1] as isize {
            let y = if grid.dims == 2 { grid.center(Axis::Y, j) } else { 0.0 };
            for i in 0..grid.n[0] as isize {
                *field.get_mut(i, j) = f(grid.center(Axis::X, i), y);
            }
        }
        field
    }

    pub fn shape(&self) -> [usize; 2] {
        self.n
    }

    pub fn ghost_widths(&self) -> [usize; 2] {
        self.g
    }

    /// Row stride of the padded storage.
    pub(crate) fn stride(&self) -> usize {
        self.n[0] + 2 * self.g[0]
    }

    #[inline]
    pub(crate) fn index(&self, i: isize, j: isize) -> usize {
        let ii = (i + self.g[0] as isize) as usize;
        let jj = (j + self.g[1] as isize) as usize;
        jj * self.stride() + ii
    }

    /// Cell `(i, j)`; negative and past-the-end indices address ghost cells.
    #[inline]
    pub fn get(&self, i: isize, j: isize) -> &[f64; M] {
        &self.data[self.index(i, j)]
    }

    #[inline]
    pub fn get_mut(&mut self, i: isize, j: isize) -> &mut [f64; M] {
        let k = self.index(i, j);
        &mut self.data[k]
    }

    pub(crate) fn raw(&self) -> &[[f64; M]] {
        &self.data
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [[f64; M]] {
        &mut self.data
    }

    /// Padded row `j` including x ghosts.
    pub(crate) fn row(&self, j: isize) -> &[[f64; M]] {
        let start = self.index(-(self.g[0] as isize), j);
        &self.data[start..start + self.stride()]
    }

    /// Interior cells in row-major order (x fastest).
    pub fn interior(&self) -> impl Iterator<Item = &[f64; M]> + '_ {
        (0..self.n[1] as isize).flat_map(move |j| (0..self.n[0] as isize).map(move |i| self.get(i, j)))
    }

    /// Interior component `c` as a row-major vector.
    pub fn component(&self, c: usize) -> Vec<f64> {
        self.interior().map(|u| u[c]).collect()
    }

    /// Sum of each conserved component over interior cells, times the cell volume.
    pub fn totals(&self, grid: &UniformGrid) -> [f64; M] {
        let mut sum = [0.0; M];
        for u in self.interior() {
            for c in 0..M {
                sum[c] += u[c];
            }
        }
        sum.map(|s| s * grid.cell_volume())
    }

    pub fn all_finite(&self) -> bool {
        self.interior().all(|u| u.iter().all(|x| x.is_finite()))
    }
}

/// Condition applied on one side of the domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Boundary {
    Periodic,
    /// Mirror with the wall-normal momentum negated.
    Reflective,
    ZeroGradient,
    /// Constant state given in primitive variables.
    Fixed(Vec<f64>),
    /// Top wall of the double Mach reflection: post-shock state left of the
    /// moving shock foot, pre-shock state right of it.
    DmrTop { pre: Vec<f64>, post: Vec<f64> },
    /// Bottom wall of the double Mach reflection: post-shock state for
    /// `x < 1/6`, reflective wall beyond.
    DmrBottom { post: Vec<f64> },
}

impl FromStr for Boundary {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "periodic" => Ok(Boundary::Periodic),
            "reflective" | "wall" => Ok(Boundary::Reflective),
            "zero-gradient" | "outflow" | "transmissive" => Ok(Boundary::ZeroGradient),
            _ => Err(Error::Unknown { what: "boundary", name: s.to_string() }),
        }
    }
}

/// Boundary conditions on all four sides; `bottom`/`top` are ignored in 1D.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundarySpec {
    pub left: Boundary,
    pub right: Boundary,
    pub bottom: Boundary,
    pub top: Boundary,
}

impl BoundarySpec {
    pub fn new(left: Boundary, right: Boundary, bottom: Boundary, top: Boundary) -> Result<Self> {
        let spec = Self { left, right, bottom, top };
        spec.validate()?;
        Ok(spec)
    }

    pub fn one_d(left: Boundary, right: Boundary) -> Result<Self> {
        Self::new(left, right, Boundary::ZeroGradient, Boundary::ZeroGradient)
    }

    pub fn uniform(b: Boundary) -> Result<Self> {
        Self::new(b.clone(), b.clone(), b.clone(), b)
    }

    pub fn validate(&self) -> Result<()> {
        let periodic = |b: &Boundary| *b == Boundary::Periodic;
        if periodic(&self.left) != periodic(&self.right) {
            return Err(Error::PeriodicPairing { axis: "x" });
        }
        if periodic(&self.bottom) != periodic(&self.top) {
            return Err(Error::PeriodicPairing { axis: "y" });
        }
        Ok(())
    }

    fn check_states(&self, m: usize) -> Result<()> {
        for b in [&self.left, &self.right, &self.bottom, &self.top] {
            let ok = match b {
                Boundary::Fixed(p) | Boundary::DmrBottom { post: p } => p.len() == m,
                Boundary::DmrTop { pre, post } => pre.len() == m && post.len() == m,
                _ => true,
            };
            if !ok {
                return Err(Error::InvalidBoundary(format!("{b:?} does not have {m} components")));
            }
        }
        Ok(())
    }
}

/// Shock foot on the top wall of the double Mach reflection at time `t`.
pub fn dmr_shock_x(t: f64) -> f64 {
    1.0 / 6.0 + (1.0 + 20.0 * t) / 3f64.sqrt()
}

fn to_cons<S: System<M>, const M: usize>(system: &S, prim: &[f64]) -> Result<[f64; M]> {
    let mut p = [0.0; M];
    p.copy_from_slice(prim);
    system.prim_to_cons(&p)
}

/// Fills every ghost cell of `field`: x ghosts on interior rows first, then
/// full padded rows in y (corners take the x-filled values).
pub fn fill_ghosts<S: System<M>, const M: usize>(
    field: &mut Field<M>,
    grid: &UniformGrid,
    bc: &BoundarySpec,
    system: &S,
    t: f64,
) -> Result<()> {
    bc.validate()?;
    bc.check_states(M)?;
    let [nx, ny] = grid.n.map(|n| n as isize);
    let gx = field.g[0] as isize;
    let fixed = |prim: &[f64]| to_cons::<S, M>(system, prim);

    for j in 0..ny {
        for side in [Side::Low, Side::High] {
            let b = if side == Side::Low { &bc.left } else { &bc.right };
            let constant = match b {
                Boundary::Fixed(p) => Some(fixed(p)?),
                _ => None,
            };
            for k in 0..gx {
                let (ghost, mirror, wrap, edge) = match side {
                    Side::Low => (-1 - k, k, nx - 1 - k, 0),
                    Side::High => (nx + k, nx - 1 - k, k, nx - 1),
                };
                let value = match b {
                    Boundary::Periodic => *field.get(wrap, j),
                    Boundary::ZeroGradient => *field.get(edge, j),
                    Boundary::Reflective => reflect(system, Axis::X, *field.get(mirror, j)),
                    Boundary::Fixed(_) => constant.unwrap(),
                    other => {
                        return Err(Error::InvalidBoundary(format!("{other:?} is only valid on the y axis")))
                    }
                };
                *field.get_mut(ghost, j) = value;
            }
        }
    }

    let gy = field.g[1] as isize;
    if gy == 0 {
        return Ok(());
    }
    for side in [Side::Low, Side::High] {
        let b = if side == Side::Low { &bc.bottom } else { &bc.top };
        for k in 0..gy {
            let (ghost, mirror, wrap, edge) = match side {
                Side::Low => (-1 - k, k, ny - 1 - k, 0),
                Side::High => (ny + k, ny - 1 - k, k, ny - 1),
            };
            for i in -gx..nx + gx {
                let value = match b {
                    Boundary::Periodic => *field.get(i, wrap),
                    Boundary::ZeroGradient => *field.get(i, edge),
                    Boundary::Reflective => reflect(system, Axis::Y, *field.get(i, mirror)),
                    Boundary::Fixed(p) => fixed(p)?,
                    Boundary::DmrTop { pre, post } => {
                        let x = grid.center(Axis::X, i);
                        fixed(if x < dmr_shock_x(t) { post } else { pre })?
                    }
                    Boundary::DmrBottom { post } => {
                        if grid.center(Axis::X, i) < 1.0 / 6.0 {
                            fixed(post)?
                        } else {
                            reflect(system, Axis::Y, *field.get(i, mirror))
                        }
                    }
                };
                *field.get_mut(i, ghost) = value;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Low,
    High,
}

fn reflect<S: System<M>, const M: usize>(system: &S, axis: Axis, mut u: [f64; M]) -> [f64; M] {
    if let Some(c) = system.normal_momentum(axis) {
        u[c] = -u[c];
    }
    u
}
