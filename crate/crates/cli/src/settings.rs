//! Quadrature settings: defaults, then the config file, then flags.

use std::path::Path;

use infoweight::QuadratureConfig;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    abs_tol: Option<f64>,
    rel_tol: Option<f64>,
    max_subdivisions: Option<usize>,
}

fn read_config(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let is_json = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad JSON config {}: {e}", path.display())))
    } else {
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad TOML config {}: {e}", path.display())))
    }
}

pub fn resolve(config: Option<&Path>, abs_tol: Option<f64>, rel_tol: Option<f64>) -> Result<QuadratureConfig, CliError> {
    let file = match config {
        Some(p) => read_config(p)?,
        None => FileConfig::default(),
    };
    let d = QuadratureConfig::default();
    let cfg = QuadratureConfig {
        abs_tol: abs_tol.or(file.abs_tol).unwrap_or(d.abs_tol),
        rel_tol: rel_tol.or(file.rel_tol).unwrap_or(d.rel_tol),
        max_subdivisions: file.max_subdivisions.unwrap_or(d.max_subdivisions),
    };
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(cfg)
}
