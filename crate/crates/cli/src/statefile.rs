//! JSON state files.
//!
//! ```json
//! {"schema_version":"1","N":3,"particles":2,"matrix":[[re,im],...],"metadata":{}}
//! ```
//!
//! `matrix` is row-major with `(N^particles)²` entries. Numbers are written
//! in the shortest form that parses back to the same `f64`, so a
//! write → read → write cycle reproduces the file byte for byte.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use qudit_pt::{Complex, ComplexMatrix, DensityLike, LatticeDim, Particles};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub schema_version: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub particles: u32,
    pub matrix: Vec<[f64; 2]>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl StateFile {
    pub fn from_density(rho: &DensityLike, metadata: BTreeMap<String, String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_owned(),
            n: rho.n().get(),
            particles: rho.particles().count(),
            matrix: rho.matrix().as_slice().iter().map(|z| [z.re, z.im]).collect(),
            metadata,
        }
    }

    pub fn to_density(&self) -> Result<DensityLike, CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Schema(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                self.schema_version
            )));
        }
        let n = LatticeDim::new(self.n).map_err(|e| CliError::Schema(e.to_string()))?;
        let particles = Particles::from_count(self.particles)
            .ok_or_else(|| CliError::Schema(format!("particles must be 1 or 2, got {}", self.particles)))?;
        let dim = particles.hilbert_dim(n);
        if self.matrix.len() != dim * dim {
            return Err(CliError::Schema(format!(
                "matrix has {} entries, expected {} for N={} with {} particle(s)",
                self.matrix.len(),
                dim * dim,
                self.n,
                self.particles
            )));
        }
        let data = self.matrix.iter().map(|&[re, im]| Complex::new(re, im)).collect();
        let mat = ComplexMatrix::from_row_major(dim, data).map_err(|e| CliError::Schema(e.to_string()))?;
        Ok(DensityLike::new(n, particles, mat)?)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("state file serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        Self::from_json(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_json()).map_err(|source| CliError::Io { path: path.to_owned(), source })
    }
}
