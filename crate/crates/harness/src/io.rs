//! JSON encodings of sampled functions and time-frequency arrays.

use serde::{Deserialize, Serialize};
use std::path::Path;
use tfnorm_core::{GridSpec, SampledFunction, TimeFrequencyArray, C64};

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridJson {
    pub dim: usize,
    #[serde(rename = "L")]
    pub l: f64,
    #[serde(rename = "N")]
    pub n: usize,
}

impl From<GridSpec> for GridJson {
    fn from(g: GridSpec) -> Self {
        GridJson { dim: g.dim, l: g.l, n: g.n }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionJson {
    pub grid: GridJson,
    pub values: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TfJson {
    pub x_grid: GridJson,
    pub xi_grid: GridJson,
    /// Row-major with `x` as the slow index.
    pub values: Vec<[f64; 2]>,
}

fn pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|c| [c.re, c.im]).collect()
}

pub fn function_to_json(f: &SampledFunction) -> FunctionJson {
    FunctionJson { grid: f.grid.into(), values: pairs(&f.values) }
}

pub fn function_from_json(j: &FunctionJson) -> Result<SampledFunction> {
    let grid = GridSpec::new(j.grid.dim, j.grid.l, j.grid.n)?;
    let values = j.values.iter().map(|[re, im]| C64::new(*re, *im)).collect();
    Ok(SampledFunction::new(grid, values)?)
}

pub fn tf_to_json(a: &TimeFrequencyArray) -> TfJson {
    TfJson { x_grid: a.x_grid.into(), xi_grid: a.xi_grid.into(), values: pairs(&a.values) }
}

pub fn read_function(path: &Path) -> Result<SampledFunction> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })?;
    function_from_json(&serde_json::from_str(&text)?)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| HarnessError::Io { path: path.display().to_string(), source })
}
