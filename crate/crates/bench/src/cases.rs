//! Benchmark case definitions.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use tenom::{Axis, Boundary, BoundarySpec, FluxKind, SourceSpec};

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Physics {
    /// `u_t + a u_x = 0`.
    Advection { speed: f64 },
    Euler,
}

/// Initial data; Euler variants return primitive states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum InitialCondition {
    Gaussian { center: f64, sharpness: f64 },
    Sine { wavenumber: f64 },
    Constant { value: f64 },
    /// Gaussian, square, triangle and half-ellipse pulses on `[0, 2]`.
    Multiwave { a: f64, z: f64, theta: f64, alpha: f64 },
    /// Piecewise-constant states; `states[k]` holds for `x < splits[k]`, the
    /// last state beyond the final split.
    Piecewise { splits: Vec<f64>, states: Vec<Vec<f64>> },
    ShuOsher,
    RayleighTaylor { gamma: f64 },
    DoubleMach,
}

pub const DMR_PRE: [f64; 4] = [1.4, 0.0, 0.0, 1.0];
pub const DMR_POST: [f64; 4] = [8.0, 7.145, -4.125, 116.8333];

fn gauss_bump(x: f64, beta: f64, z: f64) -> f64 {
    (-beta * (x - z).powi(2)).exp()
}

fn ellipse(x: f64, alpha: f64, a: f64) -> f64 {
    (1.0 - alpha * alpha * (x - a).powi(2)).max(0.0).sqrt()
}

impl InitialCondition {
    pub fn eval(&self, x: f64, y: f64) -> Vec<f64> {
        match self {
            InitialCondition::Gaussian { center, sharpness } => vec![(-sharpness * (x - center).powi(2)).exp()],
            InitialCondition::Sine { wavenumber } => vec![(2.0 * PI * wavenumber * x).sin()],
            InitialCondition::Constant { value } => vec![*value],
            InitialCondition::Multiwave { a, z, theta, alpha } => {
                let beta = 2f64.ln() / (36.0 * theta * theta);
                let s = x - 1.0;
                let u = if (0.2..0.4).contains(&x) {
                    (gauss_bump(s, beta, z - theta) + gauss_bump(s, beta, z + theta) + 4.0 * gauss_bump(s, beta, *z)) / 6.0
                } else if (0.6..=0.8).contains(&x) {
                    1.0
                } else if (1.0..=1.2).contains(&x) {
                    1.0 - (10.0 * (x - 1.1)).abs()
                } else if (1.4..1.6).contains(&x) {
                    (ellipse(s, *alpha, a - theta) + ellipse(s, *alpha, a + theta) + 4.0 * ellipse(s, *alpha, *a)) / 6.0
                } else {
                    0.0
                };
                vec![u]
            }
            InitialCondition::Piecewise { splits, states } => {
                let k = splits.iter().position(|&s| x < s).unwrap_or(splits.len());
                states[k].clone()
            }
            InitialCondition::ShuOsher => {
                if x < 1.0 {
                    vec![3.857, 2.629, 10.333]
                } else {
                    vec![1.0 + 0.2 * (5.0 * (x - 5.0)).sin(), 0.0, 1.0]
                }
            }
            InitialCondition::RayleighTaylor { gamma } => {
                let (rho, p) = if y < 0.5 { (2.0, 1.0 + 2.0 * y) } else { (1.0, y + 1.5) };
                let c = (gamma * p / rho).sqrt();
                vec![rho, 0.0, -0.025 * c * (8.0 * PI * x).cos(), p]
            }
            InitialCondition::DoubleMach => {
                if y < 1.732 * (x - 0.1667) {
                    DMR_PRE.to_vec()
                } else {
                    DMR_POST.to_vec()
                }
            }
        }
    }
}

/// How a reference solution is obtained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ReferenceRecipe {
    None,
    /// Exact translation of the initial data (periodic advection).
    Exact,
    /// A fine-grid run of `scheme` with `n` cells.
    FineGrid { n: usize, scheme: String, flux: FluxKind },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseSpec {
    pub name: String,
    pub dims: usize,
    /// `[x0, x1]` and `[y0, y1]`; the y range is ignored in 1D.
    pub domain: [[f64; 2]; 2],
    pub resolution: [usize; 2],
    pub gamma: f64,
    pub physics: Physics,
    pub initial: InitialCondition,
    pub bc: BoundarySpec,
    pub source: SourceSpec,
    pub flux: FluxKind,
    pub t_end: f64,
    pub cfl: f64,
    pub reference: ReferenceRecipe,
}

fn one_d(name: &str, x: [f64; 2], n: usize, t_end: f64, physics: Physics, initial: InitialCondition) -> CaseSpec {
    let bc = match physics {
        Physics::Advection { .. } => Boundary::Periodic,
        Physics::Euler => Boundary::ZeroGradient,
    };
    CaseSpec {
        name: name.to_string(),
        dims: 1,
        domain: [x, [0.0, 1.0]],
        resolution: [n, 1],
        gamma: 1.4,
        physics,
        initial,
        bc: BoundarySpec::one_d(bc.clone(), bc).expect("paired boundaries"),
        source: SourceSpec::None,
        flux: FluxKind::Rusanov,
        t_end,
        cfl: 0.4,
        reference: match physics {
            Physics::Advection { .. } => ReferenceRecipe::Exact,
            Physics::Euler => ReferenceRecipe::None,
        },
    }
}

fn fine(n: usize, flux: FluxKind) -> ReferenceRecipe {
    ReferenceRecipe::FineGrid { n, scheme: "weno-js5".into(), flux }
}

fn riemann(name: &str, left: [f64; 3], right: [f64; 3], t_end: f64) -> CaseSpec {
    let mut c = one_d(
        name,
        [0.0, 1.0],
        100,
        t_end,
        Physics::Euler,
        InitialCondition::Piecewise { splits: vec![0.5], states: vec![left.to_vec(), right.to_vec()] },
    );
    c.reference = fine(2000, FluxKind::Rusanov);
    c
}

/// Every case at its default resolution.
pub fn case_registry() -> Vec<CaseSpec> {
    let advection = Physics::Advection { speed: 1.0 };
    let mut shu = one_d("shu-osher", [0.0, 10.0], 200, 1.8, Physics::Euler, InitialCondition::ShuOsher);
    shu.reference = fine(2000, FluxKind::Rusanov);

    let mut blast = one_d(
        "blast",
        [0.0, 1.0],
        400,
        0.038,
        Physics::Euler,
        InitialCondition::Piecewise {
            splits: vec![0.1, 0.9],
            states: vec![vec![1.0, 0.0, 1000.0], vec![1.0, 0.0, 0.01], vec![1.0, 0.0, 100.0]],
        },
    );
    blast.bc = BoundarySpec::uniform(Boundary::Reflective).expect("paired boundaries");
    blast.flux = FluxKind::RoeEntropyFix;
    blast.reference = fine(2500, FluxKind::RoeEntropyFix);

    let mut leblanc = one_d(
        "leblanc",
        [0.0, 9.0],
        900,
        6.0,
        Physics::Euler,
        InitialCondition::Piecewise {
            splits: vec![3.0],
            states: vec![vec![1.0, 0.0, 2.0 / 3.0 * 1e-1], vec![1e-3, 0.0, 2.0 / 3.0 * 1e-10]],
        },
    );
    leblanc.gamma = 5.0 / 3.0;
    leblanc.reference = fine(2500, FluxKind::Rusanov);

    let rt_gamma = 5.0 / 3.0;
    let rt = CaseSpec {
        name: "rt".into(),
        dims: 2,
        domain: [[0.0, 0.25], [0.0, 1.0]],
        resolution: [64, 256],
        gamma: rt_gamma,
        physics: Physics::Euler,
        initial: InitialCondition::RayleighTaylor { gamma: rt_gamma },
        bc: BoundarySpec::new(
            Boundary::Reflective,
            Boundary::Reflective,
            Boundary::Fixed(vec![2.0, 0.0, 0.0, 1.0]),
            Boundary::Fixed(vec![1.0, 0.0, 0.0, 2.5]),
        )
        .expect("paired boundaries"),
        source: SourceSpec::Gravity { g: 1.0, axis: Axis::Y },
        flux: FluxKind::Rusanov,
        t_end: 1.95,
        cfl: 0.4,
        reference: ReferenceRecipe::None,
    };

    let dmr = CaseSpec {
        name: "dmr".into(),
        dims: 2,
        domain: [[0.0, 4.0], [0.0, 1.0]],
        resolution: [400, 100],
        gamma: 1.4,
        physics: Physics::Euler,
        initial: InitialCondition::DoubleMach,
        bc: BoundarySpec::new(
            Boundary::Fixed(DMR_POST.to_vec()),
            Boundary::ZeroGradient,
            Boundary::DmrBottom { post: DMR_POST.to_vec() },
            Boundary::DmrTop { pre: DMR_PRE.to_vec(), post: DMR_POST.to_vec() },
        )
        .expect("paired boundaries"),
        source: SourceSpec::None,
        flux: FluxKind::Rusanov,
        t_end: 0.2,
        cfl: 0.4,
        reference: ReferenceRecipe::None,
    };

    vec![
        one_d("gauss", [0.0, 1.0], 64, 1.0, advection, InitialCondition::Gaussian { center: 0.5, sharpness: 300.0 }),
        one_d("sine", [0.0, 1.0], 64, 1.0, advection, InitialCondition::Sine { wavenumber: 1.0 }),
        one_d(
            "multiwave",
            [0.0, 2.0],
            200,
            2.0,
            advection,
            InitialCondition::Multiwave { a: 0.5, z: -0.7, theta: 0.005, alpha: 10.0 },
        ),
        one_d("constant", [0.0, 1.0], 64, 1.0, advection, InitialCondition::Constant { value: 0.75 }),
        riemann("sod", [1.0, 0.0, 1.0], [0.125, 0.0, 0.1], 0.2),
        riemann("lax", [0.445, 0.698, 3.528], [0.5, 0.0, 0.571], 0.14),
        shu,
        blast,
        rt,
        dmr,
        leblanc,
    ]
}

pub fn find_case(name: &str) -> Result<CaseSpec> {
    let lower = name.to_ascii_lowercase();
    case_registry()
        .into_iter()
        .find(|c| c.name == lower)
        .ok_or_else(|| BenchError::UnknownCase(name.to_string()))
}

impl CaseSpec {
    pub fn with_resolution(mut self, nx: Option<usize>, ny: Option<usize>) -> Self {
        if let Some(n) = nx {
            self.resolution[0] = n;
        }
        if let Some(n) = ny {
            if self.dims == 2 {
                self.resolution[1] = n;
            }
        }
        self
    }

    pub fn length(&self, axis: usize) -> f64 {
        self.domain[axis][1] - self.domain[axis][0]
    }
}
