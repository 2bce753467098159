//! Reference solutions: exact translation for periodic advection, otherwise
//! fine-grid runs cached on disk.

use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use tenom::{Execution, SchemeConfig, TimeConfig};

use crate::cases::{CaseSpec, Physics, ReferenceRecipe};
use crate::error::{BenchError, Result};
use crate::runner::simulate;
use crate::solution::Solution;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "TENOM_CACHE_DIR";

pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("tenom-cache"))
}

/// Periodic translation of the initial data evaluated on `grid`'s centres.
pub fn exact_advection(case: &CaseSpec, x: &[f64]) -> Result<Vec<f64>> {
    let Physics::Advection { speed } = case.physics else {
        return Err(BenchError::NoReference(case.name.clone()));
    };
    let [x0, _] = case.domain[0];
    let len = case.length(0);
    Ok(x.iter()
        .map(|&xi| {
            let s = x0 + (xi - speed * case.t_end - x0).rem_euclid(len);
            case.initial.eval(s, 0.0)[0]
        })
        .collect())
}

/// Cache key: SHA-256 over the case (at the fine resolution) and the recipe.
pub fn cache_key(case: &CaseSpec) -> Result<String> {
    let json = serde_json::to_vec(&(&fine_case(case)?, &case.reference))?;
    Ok(Sha256::digest(&json).iter().map(|b| format!("{b:02x}")).collect())
}

fn fine_case(case: &CaseSpec) -> Result<CaseSpec> {
    let ReferenceRecipe::FineGrid { n, flux, .. } = &case.reference else {
        return Err(BenchError::NoReference(case.name.clone()));
    };
    let mut fine = case.clone().with_resolution(Some(*n), None);
    fine.flux = *flux;
    Ok(fine)
}

/// Fine-grid reference for `case`, computed once and cached under `dir`.
/// Unreadable or malformed cache files are recomputed.
pub fn make_reference(case: &CaseSpec, dir: &Path) -> Result<Solution> {
    let ReferenceRecipe::FineGrid { scheme, .. } = &case.reference else {
        return Err(BenchError::NoReference(case.name.clone()));
    };
    let path = dir.join(format!("{}-{}.json", case.name, &cache_key(case)?[..16]));
    if let Some(sol) = load(&path) {
        return Ok(sol);
    }
    let fine = fine_case(case)?;
    let scheme = SchemeConfig::from_name(scheme)?;
    let time = TimeConfig::new(fine.t_end).with_cfl(fine.cfl);
    let sol = simulate(&fine, &scheme, Execution::default(), &time)?.solution;
    store(&path, &sol)?;
    Ok(sol)
}

fn load(path: &Path) -> Option<Solution> {
    let bytes = std::fs::read(path).ok()?;
    let sol: Solution = serde_json::from_slice(&bytes).ok()?;
    sol.check().ok()?;
    Some(sol)
}

fn store(path: &Path, sol: &Solution) -> Result<()> {
    let dir = path.parent().expect("cache files live in a directory");
    std::fs::create_dir_all(dir).map_err(|e| BenchError::io(dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| BenchError::io(dir, e))?;
    tmp.write_all(&serde_json::to_vec(sol)?).map_err(|e| BenchError::io(tmp.path(), e))?;
    tmp.persist(path).map_err(|e| BenchError::io(path, e.error))?;
    Ok(())
}

/// Reference restricted to the cell centres of `sol`, if the case has one.
pub fn reference_on(case: &CaseSpec, sol: &Solution, dir: &Path) -> Result<Option<Solution>> {
    match &case.reference {
        ReferenceRecipe::None => Ok(None),
        ReferenceRecipe::Exact => {
            let u = exact_advection(case, &sol.x)?;
            Ok(Some(Solution { columns: vec![u], ..sol.clone() }))
        }
        ReferenceRecipe::FineGrid { .. } => {
            if sol.dims != 1 {
                return Err(BenchError::NoReference(case.name.clone()));
            }
            make_reference(case, dir)?.sample_1d(&sol.x).map(Some)
        }
    }
}
