use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use tenom::adr::{adr_sweep, write_csv, AdrConfig};
use tenom::{Curvature, Execution, FluxKind, LimiterKind, SchemeConfig};
use tenom_bench::runner::parse_ct;
use tenom_bench::{case_registry, convergence_table, find_case, run, BenchError, Overrides, Result, RunOptions};

#[derive(Parser)]
#[command(name = "tenom", version, about = "Run TENO-M benchmark cases and spectral analyses")]
struct Cli {
    /// Run row and column sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one case and write profiles plus a JSON report.
    Run(RunArgs),
    /// Approximate dispersion relation of a scheme.
    Adr(AdrArgs),
    /// Observed order of accuracy on a smooth advection case.
    Converge(ConvergeArgs),
    /// Print every case definition as JSON.
    Cases,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    case: String,
    #[arg(long)]
    scheme: String,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long)]
    ny: Option<usize>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    cfl: Option<f64>,
    /// va, tvd5 or mp.
    #[arg(long)]
    limiter: Option<String>,
    /// Fixed cut-off value or `adaptive`.
    #[arg(long)]
    ct: Option<String>,
    #[arg(long)]
    mp_beta: Option<f64>,
    /// m4 or mm.
    #[arg(long)]
    mp_curv: Option<String>,
    /// Fixed time step instead of the CFL condition.
    #[arg(long)]
    dt_override: Option<f64>,
    /// rusanov or roe_ef.
    #[arg(long)]
    flux: Option<String>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct AdrArgs {
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value_t = 1.0)]
    amplitude: f64,
    #[arg(long, default_value_t = 1e-3)]
    cfl: f64,
    /// Number of cells of the periodic probe grid.
    #[arg(long, default_value_t = 64)]
    n: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ConvergeArgs {
    #[arg(long, default_value = "gauss")]
    case: String,
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value_t = 5)]
    levels: usize,
    /// Coarsest resolution; each level doubles it.
    #[arg(long, default_value_t = 32)]
    base: usize,
}

fn overrides(a: &RunArgs) -> Result<Overrides> {
    Ok(Overrides {
        nx: a.nx,
        ny: a.ny,
        t_end: a.t_end,
        cfl: a.cfl,
        limiter: a.limiter.as_deref().map(str::parse::<LimiterKind>).transpose()?,
        ct: a.ct.as_deref().map(parse_ct).transpose()?,
        mp_beta: a.mp_beta,
        mp_curvature: a.mp_curv.as_deref().map(str::parse::<Curvature>).transpose()?,
        dt: a.dt_override,
        flux: a.flux.as_deref().map(str::parse::<FluxKind>).transpose()?,
    })
}

fn execute(cli: Cli) -> Result<serde_json::Value> {
    let execution = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match cli.command {
        Command::Run(args) => {
            let case = find_case(&args.case)?;
            let scheme = SchemeConfig::from_name(&args.scheme)?;
            let opts = RunOptions { out_dir: Some(args.out.clone()), execution, ..Default::default() };
            let outcome = run(&case, &scheme, &overrides(&args)?, &opts)?;
            Ok(serde_json::to_value(outcome.report)?)
        }
        Command::Adr(args) => {
            let scheme = SchemeConfig::from_name(&args.scheme)?;
            let cfg = AdrConfig { n: args.n, amplitude: args.amplitude, cfl: args.cfl, ..Default::default() };
            let points = adr_sweep(&scheme, &cfg, execution)?;
            let file = std::fs::File::create(&args.out).map_err(|e| BenchError::io(&args.out, e))?;
            write_csv(std::io::BufWriter::new(file), &points).map_err(|e| BenchError::io(&args.out, e))?;
            let meta_path = args.out.with_extension("json");
            let meta = json!({
                "scheme": scheme.name(),
                "amplitude": cfg.amplitude,
                "cfl": cfg.cfl,
                "n": cfg.n,
                "speed": cfg.speed,
                "csv": args.out,
            });
            std::fs::write(&meta_path, serde_json::to_string_pretty(&meta)?).map_err(|e| BenchError::io(&meta_path, e))?;
            Ok(meta)
        }
        Command::Converge(args) => {
            let case = find_case(&args.case)?;
            let scheme = SchemeConfig::from_name(&args.scheme)?;
            let ns: Vec<usize> = (0..args.levels).map(|k| args.base << k).collect();
            let rows = convergence_table(&case, &scheme, &ns, execution)?;
            for r in &rows {
                let order = r.order.map_or("n/a".to_string(), |o| format!("{o:.2}"));
                eprintln!("{:>6}  {:.3e}  {:>6}  {:.2}s", r.n, r.linf, order, r.wall_time);
            }
            Ok(json!({ "case": case.name, "scheme": scheme.name(), "rows": rows }))
        }
        Command::Cases => Ok(serde_json::to_value(case_registry())?),
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            println!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}
