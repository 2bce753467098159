use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tenom::adr::{adr_sweep, AdrConfig};
use tenom::{Boundary, BoundarySpec, Euler2d, Execution, Field, SchemeConfig, Solver, System, UniformGrid};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

/// Right-hand side on a 400x100 field with an oblique shock, the layout of the double Mach reflection.
fn rhs(c: &mut Criterion) {
    let grid = UniformGrid::new_2d([0.0, 4.0], [0.0, 1.0], [400, 100], 4).unwrap();
    let bc = BoundarySpec::uniform(Boundary::ZeroGradient).unwrap();
    let sys = Euler2d::default();
    let post = sys.prim_to_cons(&[8.0, 7.1447, -4.125, 116.5]).unwrap();
    let pre = sys.prim_to_cons(&[1.4, 0.0, 0.0, 1.0]).unwrap();
    let field = Field::<4>::from_fn(&grid, |x, y| if y < 1.732 * (x - 0.1667) { pre } else { post });

    let mut group = c.benchmark_group("rhs_400x100");
    group.sample_size(20);
    for scheme in ["teno6m-mp", "teno8am-mp"] {
        for (label, mode) in MODES {
            let solver = Solver::new(sys, grid.clone(), bc.clone(), SchemeConfig::from_name(scheme).unwrap())
                .unwrap()
                .with_execution(mode);
            group.bench_with_input(BenchmarkId::new(scheme, label), &solver, |b, s| {
                let mut u = field.clone();
                b.iter(|| s.rhs(&mut u, 0.0).unwrap())
            });
        }
    }
    group.finish();
}

fn adr(c: &mut Criterion) {
    let scheme = SchemeConfig::from_name("teno8am-mp").unwrap();
    let cfg = AdrConfig::default();
    let mut group = c.benchmark_group("adr_sweep");
    for (label, mode) in MODES {
        group.bench_function(label, |b| b.iter(|| adr_sweep(&scheme, &cfg, mode).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, rhs, adr);
criterion_main!(benches);
