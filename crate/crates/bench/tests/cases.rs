use std::time::Instant;

use tenom::{Execution, FluxKind, SchemeConfig, SourceSpec, TimeConfig};
use tenom_bench::cases::{InitialCondition, ReferenceRecipe, DMR_PRE};
use tenom_bench::reference::{cache_key, exact_advection, make_reference};
use tenom_bench::runner::{convergence_table, simulate};
use tenom_bench::{case_registry, find_case, run, BenchError, CaseSpec, Overrides, RunOptions};

fn opts(dir: &tempfile::TempDir) -> RunOptions {
    RunOptions { out_dir: None, cache_dir: dir.path().to_path_buf(), execution: Execution::default() }
}

#[test]
fn registry_round_trips_through_json() {
    for case in case_registry() {
        let text = serde_json::to_string(&case).unwrap();
        let back: CaseSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, case, "{}", case.name);
    }
}

#[test]
fn defaults() {
    let get = |n: &str| find_case(n).unwrap();
    assert_eq!(get("lax").t_end, 0.14);
    assert_eq!(get("shu-osher").resolution[0], 200);
    assert_eq!(get("shu-osher").t_end, 1.8);
    let blast = get("blast");
    assert_eq!((blast.resolution[0], blast.t_end, blast.flux), (400, 0.038, FluxKind::RoeEntropyFix));
    assert!(matches!(blast.reference, ReferenceRecipe::FineGrid { n: 2500, flux: FluxKind::RoeEntropyFix, .. }));
    let rt = get("rt");
    assert_eq!((rt.resolution, rt.t_end, rt.gamma), ([64, 256], 1.95, 5.0 / 3.0));
    assert!(matches!(rt.source, SourceSpec::Gravity { g, .. } if g == 1.0));
    let lb = get("leblanc");
    assert_eq!((lb.resolution[0], lb.t_end, lb.gamma), (900, 6.0, 5.0 / 3.0));
    assert_eq!(get("dmr").initial.eval(2.0, 0.2), DMR_PRE.to_vec());
    assert!(matches!(find_case("noh"), Err(BenchError::UnknownCase(_))));
}

#[test]
fn every_case_constructs_at_default_and_custom_resolution() {
    for case in case_registry() {
        for ov in [(None, None), (Some(16), Some(8))] {
            let mut c = case.clone().with_resolution(ov.0, ov.1);
            c.t_end = 0.0;
            let sim = simulate(&c, &SchemeConfig::weno_js5(), Execution::default(), &TimeConfig::new(0.0)).unwrap();
            assert_eq!(sim.solution.n[0], c.resolution[0], "{}", c.name);
            assert_eq!(sim.stats.steps, 0);
            assert!(sim.solution.check().is_ok(), "{}", c.name);
        }
    }
}

#[test]
fn gauss_exact_solution_after_one_period_is_the_initial_data() {
    let case = find_case("gauss").unwrap();
    let x: Vec<f64> = (0..50).map(|i| (i as f64 + 0.5) / 50.0).collect();
    let exact = exact_advection(&case, &x).unwrap();
    for (xi, e) in x.iter().zip(exact) {
        assert!((e - case.initial.eval(*xi, 0.0)[0]).abs() < 1e-12);
    }
}

#[test]
fn sod_mirror_symmetry() {
    let mut case = find_case("sod").unwrap();
    case.reference = ReferenceRecipe::None;
    let mut mirror = case.clone();
    mirror.initial =
        InitialCondition::Piecewise { splits: vec![0.5], states: vec![vec![0.125, 0.0, 0.1], vec![1.0, 0.0, 1.0]] };
    let scheme = SchemeConfig::from_name("teno6m-mp").unwrap();
    let time = TimeConfig::new(case.t_end).with_cfl(case.cfl);
    let a = simulate(&case, &scheme, Execution::default(), &time).unwrap().solution;
    let b = simulate(&mirror, &scheme, Execution::default(), &time).unwrap().solution;
    let n = a.n[0];
    for i in 0..n {
        let j = n - 1 - i;
        assert!((a.columns[0][i] - b.columns[0][j]).abs() < 1e-10);
        assert!((a.columns[1][i] + b.columns[1][j]).abs() < 1e-10);
        assert!((a.columns[2][i] - b.columns[2][j]).abs() < 1e-10);
    }
}

fn small_reference_case() -> CaseSpec {
    let mut c = find_case("sod").unwrap();
    c.resolution[0] = 50;
    c.reference = ReferenceRecipe::FineGrid { n: 200, scheme: "weno-js5".into(), flux: FluxKind::Rusanov };
    c
}

#[test]
fn reference_cache_is_reused_and_recovers_from_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let case = small_reference_case();
    let first = make_reference(&case, dir.path()).unwrap();
    assert_eq!(first.n[0], 200);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    assert!(files[0].to_string_lossy().contains(&cache_key(&case).unwrap()[..16]));

    let start = Instant::now();
    assert_eq!(make_reference(&case, dir.path()).unwrap(), first);
    assert!(start.elapsed().as_secs_f64() < 0.5);

    std::fs::write(&files[0], b"{\"dims\": 1, \"trunc").unwrap();
    assert_eq!(make_reference(&case, dir.path()).unwrap(), first);

    let mut other = case.clone();
    other.t_end = 0.1;
    assert_ne!(cache_key(&other).unwrap(), cache_key(&case).unwrap());
}

#[test]
fn run_reports_norms_and_writes_profiles() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let mut o = opts(&dir);
    o.out_dir = Some(out.clone());
    let case = small_reference_case();
    let scheme = SchemeConfig::from_name("teno6m-mp").unwrap();
    let r = run(&case, &scheme, &Overrides::default(), &o).unwrap();
    let norms = r.report.norms.expect("case has a reference");
    assert!(norms.l1 > 0.0 && norms.l1 < 0.02, "{norms:?}");
    assert!(norms.l1 <= norms.l2 && norms.l2 <= norms.linf);
    assert_eq!(r.report.files.len(), 2);
    let csv = std::fs::read_to_string(&r.report.files[0]).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("x,rho,u,p"));
    assert_eq!(lines.count(), 50);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&r.report.files[1]).unwrap()).unwrap();
    assert_eq!(json["scheme"], "teno6m-mp");
    assert_eq!(json["steps"].as_u64().unwrap() as usize, r.report.steps);
}

#[test]
fn two_dimensional_output_has_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let mut o = opts(&dir);
    o.out_dir = Some(dir.path().to_path_buf());
    let ov = Overrides { nx: Some(16), ny: Some(8), t_end: Some(0.01), ..Default::default() };
    let r = run(&find_case("dmr").unwrap(), &SchemeConfig::from_name("teno6m-va").unwrap(), &ov, &o).unwrap();
    assert!(r.report.norms.is_none());
    let csv = std::fs::read_to_string(&r.report.files[0]).unwrap();
    assert!(csv.starts_with("x,y,rho,u,v,p\n"));
    assert_eq!(csv.lines().count(), 16 * 8 + 1);
    let mat = std::fs::read_to_string(&r.report.files[1]).unwrap();
    assert_eq!(mat.lines().count(), 8);
    assert!(mat.lines().all(|l| l.split_whitespace().count() == 16));
}

#[test]
fn dt_override_fixes_the_step_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut case = find_case("sod").unwrap();
    case.reference = ReferenceRecipe::None;
    let ov = Overrides { dt: Some(1e-3), ..Default::default() };
    let r = run(&case, &SchemeConfig::from_name("teno8am-tvd5").unwrap(), &ov, &opts(&dir)).unwrap();
    assert_eq!(r.report.steps, 200);
    assert_eq!(r.report.dt_override, Some(1e-3));
}

#[test]
fn overrides_modify_the_scheme() {
    let case = find_case("leblanc").unwrap();
    let ov = Overrides {
        nx: Some(300),
        limiter: Some(tenom::LimiterKind::Mp),
        mp_beta: Some(1.0),
        mp_curvature: Some(tenom::Curvature::MM),
        ct: Some(tenom_bench::runner::parse_ct("1e-6").unwrap()),
        ..Default::default()
    };
    let (c, s, _) = ov.apply(&case, &SchemeConfig::from_name("teno8am-va").unwrap()).unwrap();
    assert_eq!(c.resolution[0], 300);
    assert_eq!(s.name(), "teno8am-mp");
    assert_eq!((s.mp.beta, s.mp.curvature), (1.0, tenom::Curvature::MM));
    assert_eq!(s.ct_mode, tenom::CtMode::Fixed(1e-6));
    assert!(tenom_bench::runner::parse_ct("sharp").is_err());
    let bad = Overrides { limiter: Some(tenom::LimiterKind::Mp), ..Default::default() };
    assert!(matches!(bad.apply(&case, &SchemeConfig::weno_js5()), Err(BenchError::InvalidOverride(_))));
}

#[test]
fn blow_up_is_reported_with_step_and_cell() {
    let dir = tempfile::tempdir().unwrap();
    let mut case = find_case("shu-osher").unwrap();
    case.reference = ReferenceRecipe::None;
    let ov = Overrides { dt: Some(0.5), ..Default::default() };
    let mut o = opts(&dir);
    o.execution = Execution::Sequential;
    let err = run(&case, &SchemeConfig::from_name("linear6").unwrap(), &ov, &o).unwrap_err();
    assert!(matches!(err, BenchError::Instability { .. } | BenchError::Solver(_)), "{err}");
}

#[test]
fn linear_data_converges_to_roundoff() {
    let case = find_case("constant").unwrap();
    let rows = convergence_table(&case, &SchemeConfig::from_name("teno6m-mp").unwrap(), &[16, 32], Execution::default())
        .unwrap();
    assert!(rows.iter().all(|r| r.linf < 1e-13 && r.order.is_none()));
    let err = convergence_table(&case, &SchemeConfig::weno_js5(), &[16], Execution::default()).unwrap_err();
    assert!(matches!(err, BenchError::TooFewLevels(1)));
}
