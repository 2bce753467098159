use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tenom::euler::{roe_average, rusanov_split, Euler1d, Euler2d, LinearAdvection, System};
use tenom::flux::{char_interface_flux, scalar_interface_flux, FluxKind};
use tenom::mesh::{dmr_shock_x, fill_ghosts, Axis, Boundary, BoundarySpec, Field, UniformGrid};
use tenom::scheme::SchemeConfig;

const SCHEMES: [&str; 9] = [
    "weno-js5", "teno6", "teno8a", "teno6m-va", "teno6m-tvd5", "teno6m-mp", "teno8am-va", "teno8am-tvd5", "teno8am-mp",
];

fn random_prim2(rng: &mut StdRng) -> [f64; 4] {
    [rng.gen_range(0.1..5.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.1..10.0)]
}

/// x-direction flux Jacobian of the 2D Euler equations written out by hand.
fn jacobian(gamma: f64, u: f64, v: f64, h: f64) -> [[f64; 4]; 4] {
    let g1 = gamma - 1.0;
    let q2 = u * u + v * v;
    [
        [0.0, 1.0, 0.0, 0.0],
        [0.5 * g1 * q2 - u * u, (3.0 - gamma) * u, -g1 * v, g1],
        [-u * v, v, u, 0.0],
        [u * (0.5 * g1 * q2 - h), h - g1 * u * u, -g1 * u * v, gamma * u],
    ]
}

#[test]
fn eigenvectors_are_inverse_and_diagonalize_the_jacobian() {
    let mut rng = StdRng::seed_from_u64(1);
    for gamma in [1.4, 5.0 / 3.0] {
        let e = Euler2d { gamma };
        for _ in 0..200 {
            let ul = e.prim_to_cons(&random_prim2(&mut rng)).unwrap();
            let ur = e.prim_to_cons(&random_prim2(&mut rng)).unwrap();
            let eig = e.eigensystem(&ul, &ur).unwrap();
            let enthalpy = |u: &[f64; 4]| (u[3] + e.pressure(u)) / u[0];
            let avg = roe_average(
                gamma,
                (ul[0], [ul[1] / ul[0], ul[2] / ul[0]], enthalpy(&ul)),
                (ur[0], [ur[1] / ur[0], ur[2] / ur[0]], enthalpy(&ur)),
            )
            .unwrap();
            let a = jacobian(gamma, avg.vel[0], avg.vel[1], avg.h);
            let scale = a.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
            for r in 0..4 {
                for c in 0..4 {
                    let lr: f64 = (0..4).map(|k| eig.left[r][k] * eig.right[k][c]).sum();
                    let expected = if r == c { 1.0 } else { 0.0 };
                    assert!((lr - expected).abs() < 1e-12, "L.R[{r}][{c}] = {lr}");
                    let rl: f64 = (0..4).map(|k| eig.right[r][k] * eig.lambda[k] * eig.left[k][c]).sum();
                    assert!((rl - a[r][c]).abs() < 1e-10 * scale, "A[{r}][{c}]: {rl} vs {}", a[r][c]);
                }
            }
        }
    }
}

#[test]
fn one_d_eigenvectors_are_inverse() {
    let mut rng = StdRng::seed_from_u64(2);
    let e = Euler1d::default();
    for _ in 0..200 {
        let p = |rng: &mut StdRng| [rng.gen_range(0.1..5.0), rng.gen_range(-3.0..3.0), rng.gen_range(0.1..10.0)];
        let eig = e.eigensystem(&e.prim_to_cons(&p(&mut rng)).unwrap(), &e.prim_to_cons(&p(&mut rng)).unwrap()).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                let lr: f64 = (0..3).map(|k| eig.left[r][k] * eig.right[k][c]).sum();
                assert!((lr - if r == c { 1.0 } else { 0.0 }).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn roe_average_examples() {
    let same = roe_average(1.4, (2.0, [0.3], 4.0), (2.0, [0.3], 4.0)).unwrap();
    assert!((same.vel[0] - 0.3).abs() < 1e-15 && (same.h - 4.0).abs() < 1e-15);
    // sqrt-density weights 1/3 and 2/3.
    let avg = roe_average(1.4, (1.0, [0.0], 3.0), (4.0, [3.0], 6.0)).unwrap();
    assert!((avg.vel[0] - 2.0).abs() < 1e-15);
    assert!((avg.h - 5.0).abs() < 1e-15);
    assert!(roe_average(1.4, (-1.0, [0.0], 3.0), (1.0, [0.0], 3.0)).is_err());
}

#[test]
fn conversion_examples() {
    let e = Euler1d::default();
    let u = e.prim_to_cons(&[1.0, 0.0, 1.0]).unwrap();
    assert_eq!([u[0], u[1]], [1.0, 0.0]);
    assert!((u[2] - 2.5).abs() < 1e-15);
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..100 {
        let p = random_prim2(&mut rng);
        let e2 = Euler2d::default();
        let back = e2.cons_to_prim(&e2.prim_to_cons(&p).unwrap()).unwrap();
        for c in 0..4 {
            assert!((back[c] - p[c]).abs() <= 1e-14 * p[c].abs().max(1.0));
        }
    }
    assert!(e.prim_to_cons(&[1.0, 0.0, -0.1]).is_err());
}

#[test]
fn rusanov_split_identities() {
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..100 {
        let f: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        let u: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        let lam = rng.gen_range(0.0..4.0);
        let (p, m) = rusanov_split(&f, &u, lam).unwrap();
        let (p2, m2) = rusanov_split(&f, &u, 2.0 * lam).unwrap();
        for c in 0..3 {
            assert!((p[c] + m[c] - f[c]).abs() <= 1e-14 * f[c].abs().max(1.0));
            assert!(((p2[c] - m2[c]) - 2.0 * (p[c] - m[c])).abs() < 1e-12);
        }
    }
    let (p, m) = rusanov_split(&[0.7], &[0.7], 1.0).unwrap();
    assert_eq!((p, m), ([0.7], [0.0]));
}

#[test]
fn scalar_pipeline_is_bit_exact_with_single_field_systems() {
    let mut rng = StdRng::seed_from_u64(8);
    for name in SCHEMES {
        let cfg = SchemeConfig::from_name(name).unwrap();
        let len = 2 * cfg.half_width();
        for _ in 0..200 {
            let vals: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let states: Vec<[f64; 1]> = vals.iter().map(|&v| [v]).collect();
            for a in [1.0, 0.5, -1.0, -2.5] {
                let sys = LinearAdvection { speed: a };
                let c = char_interface_flux(&sys, &states, &cfg, FluxKind::Rusanov).unwrap()[0];
                let s = scalar_interface_flux(&vals, &cfg, a).unwrap();
                assert_eq!(c.to_bits(), s.to_bits(), "{name}, a = {a}");
            }
        }
    }
}

#[test]
fn scalar_flux_examples() {
    let cfg = SchemeConfig::from_name("teno6m-mp").unwrap();
    let linear = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0];
    assert!((scalar_interface_flux(&linear, &cfg, 1.0).unwrap() - 2.5).abs() < 1e-14);
    assert_eq!(scalar_interface_flux(&[0.3; 6], &cfg, 2.0).unwrap(), 0.6);
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..100 {
        let v: Vec<f64> = (0..6).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mirrored: Vec<f64> = v.iter().rev().copied().collect();
        let plus = scalar_interface_flux(&v, &cfg, 1.0).unwrap();
        let minus = scalar_interface_flux(&mirrored, &cfg, -1.0).unwrap();
        assert_eq!(plus, -minus);
    }
}

#[test]
fn uniform_states_give_the_physical_flux() {
    let e = Euler2d::default();
    let mut rng = StdRng::seed_from_u64(10);
    for name in SCHEMES {
        let cfg = SchemeConfig::from_name(name).unwrap();
        for kind in [FluxKind::Rusanov, FluxKind::RoeEntropyFix] {
            let u = e.prim_to_cons(&random_prim2(&mut rng)).unwrap();
            let states = vec![u; 2 * cfg.half_width()];
            let f = char_interface_flux(&e, &states, &cfg, kind).unwrap();
            let exact = e.flux(&u);
            for c in 0..4 {
                assert!((f[c] - exact[c]).abs() <= 1e-12 * exact[c].abs().max(1.0), "{name} {kind}");
            }
        }
    }
}

#[test]
fn interface_fluxes_are_mirror_equivariant() {
    let e = Euler1d::default();
    let mut rng = StdRng::seed_from_u64(12);
    for name in SCHEMES {
        let cfg = SchemeConfig::from_name(name).unwrap();
        for kind in [FluxKind::Rusanov, FluxKind::RoeEntropyFix] {
            for _ in 0..50 {
                let states: Vec<[f64; 3]> = (0..2 * cfg.half_width())
                    .map(|_| {
                        let rho = if rng.gen_bool(0.5) { 1.0 } else { 0.125 };
                        e.prim_to_cons(&[rho * rng.gen_range(0.9..1.1), rng.gen_range(-1.0..1.0), rng.gen_range(0.1..1.0)])
                            .unwrap()
                    })
                    .collect();
                let mirrored: Vec<[f64; 3]> = states.iter().rev().map(|u| [u[0], -u[1], u[2]]).collect();
                let f = char_interface_flux(&e, &states, &cfg, kind).unwrap();
                let g = char_interface_flux(&e, &mirrored, &cfg, kind).unwrap();
                let expected = [-f[0], f[1], -f[2]];
                for c in 0..3 {
                    assert!((g[c] - expected[c]).abs() <= 1e-12 * f[c].abs().max(1.0), "{name} {kind}: {g:?} vs {expected:?}");
                }
            }
        }
    }
}

#[test]
fn ghost_examples() {
    let g = UniformGrid::new_1d(0.0, 4.0, 4, 2).unwrap();
    let sys = LinearAdvection { speed: 1.0 };
    let mut f = Field::<1>::from_fn(&g, |x, _| [x.floor() + 1.0]);
    let bc = BoundarySpec::uniform(Boundary::Periodic).unwrap();
    fill_ghosts(&mut f, &g, &bc, &sys, 0.0).unwrap();
    assert_eq!([f.get(-2, 0)[0], f.get(-1, 0)[0]], [3.0, 4.0]);
    assert_eq!([f.get(4, 0)[0], f.get(5, 0)[0]], [1.0, 2.0]);

    let e = Euler1d::default();
    let g = UniformGrid::new_1d(0.0, 1.0, 8, 3).unwrap();
    let mut f = Field::<3>::from_fn(&g, |_, _| [1.0, 2.0, 5.0]);
    let wall = BoundarySpec::uniform(Boundary::Reflective).unwrap();
    fill_ghosts(&mut f, &g, &wall, &e, 0.0).unwrap();
    assert_eq!(*f.get(-1, 0), [1.0, -2.0, 5.0]);
    let before = f.clone();
    fill_ghosts(&mut f, &g, &wall, &e, 0.0).unwrap();
    assert_eq!(f, before);

    assert!((dmr_shock_x(0.0) - (1.0 / 6.0 + 1.0 / 3f64.sqrt())).abs() < 1e-15);
    assert!((dmr_shock_x(0.0) - 0.744).abs() < 1e-3);
    // The initial shock line y = 1.732 (x - 0.1667) meets y = 1 at the same place.
    assert!((dmr_shock_x(0.0) - (1.0 / 1.732 + 0.1667)).abs() < 1e-3);
}

#[test]
fn dmr_top_boundary_switches_at_shock_foot() {
    let e = Euler2d::default();
    let pre = vec![1.4, 0.0, 0.0, 1.0];
    let post = vec![8.0, 7.145, -4.125, 116.5];
    let g = UniformGrid::new_2d([0.0, 4.0], [0.0, 1.0], [160, 40], 3).unwrap();
    let bc = BoundarySpec::new(
        Boundary::Fixed(post.clone()),
        Boundary::ZeroGradient,
        Boundary::DmrBottom { post: post.clone() },
        Boundary::DmrTop { pre: pre.clone(), post: post.clone() },
    )
    .unwrap();
    let mut f = Field::<4>::from_fn(&g, |_, _| e.prim_to_cons(&[1.4, 0.0, 0.0, 1.0]).unwrap());
    fill_ghosts(&mut f, &g, &bc, &e, 0.0).unwrap();
    for i in 0..160 {
        let x = g.center(Axis::X, i);
        let rho = f.get(i, 40)[0];
        assert_eq!(rho, if x < dmr_shock_x(0.0) { 8.0 } else { 1.4 }, "x = {x}");
        let bottom = f.get(i, -1)[0];
        assert_eq!(bottom, if x < 1.0 / 6.0 { 8.0 } else { 1.4 });
    }
}

#[test]
fn unknown_or_unpaired_boundaries_rejected() {
    assert!("slip".parse::<Boundary>().is_err());
    assert!(BoundarySpec::new(Boundary::Periodic, Boundary::Periodic, Boundary::Periodic, Boundary::Reflective).is_err());
}
