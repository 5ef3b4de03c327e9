//! Scenario file parsing and conversion into library types.
//!
//! Scenarios are JSON documents with up to five sections — `sync`,
//! `kinematics`, `quantum`, `propagator`, `output` — all optional; each
//! command requires only the sections it consumes and reports the missing
//! or malformed field by name. Complex numbers are `[re, im]` pairs and
//! matrices are row-major arrays of such pairs, so there is never any
//! ambiguity about the encoding.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64 as C64;
use serde::Deserialize;

use synchrony_core::kinematics::SyncParam;
use synchrony_core::quantum::{MeasurementSetting, QuantumScenario};

use crate::CliError;

pub type CPair = [f64; 2];
pub type CMatrixSpec = Vec<Vec<CPair>>;
pub type CVectorSpec = Vec<CPair>;

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    /// Labeled synchronization tilt vectors, e.g. `"einstein": [0,0,0]`.
    #[serde(default)]
    pub sync: BTreeMap<String, [f64; 3]>,
    pub kinematics: Option<KinematicsSection>,
    pub quantum: Option<QuantumSection>,
    #[allow(dead_code)]
    pub propagator: Option<PropagatorSection>,
    pub output: Option<OutputSection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KinematicsSection {
    #[serde(default)]
    pub events: Vec<EventSpec>,
    #[serde(default)]
    pub velocities: Vec<f64>,
    #[serde(default)]
    pub lengths: Vec<f64>,
    /// Sync labels naming the source and target conventions for transforms.
    pub from: Option<String>,
    pub to: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventSpec {
    pub t: f64,
    pub x: f64,
    #[serde(default)]
    pub y: f64,
    #[serde(default)]
    pub z: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantumSection {
    /// Subsystem dimensions `[dim_a, dim_b]`.
    pub dims: [usize; 2],
    pub h_a: Option<CMatrixSpec>,
    pub h_b: Option<CMatrixSpec>,
    pub h_int: Option<CMatrixSpec>,
    pub o_a: Option<CMatrixSpec>,
    pub o_b: Option<CMatrixSpec>,
    /// `[t_in, t_a, t_b, t_out]`.
    pub times: Option<[f64; 4]>,
    pub psi_in: Option<CVectorSpec>,
    pub psi_out: Option<CVectorSpec>,
    /// Detector angles for correlation scans, two per side.
    pub angles_a: Option<[f64; 2]>,
    pub angles_b: Option<[f64; 2]>,
    /// Expected |S| for the correlation scan, checked to 1e-6 when present.
    pub expected_abs_s: Option<f64>,
    pub remote_basis: Option<BasisSpec>,
    pub local_basis: Option<BasisSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
pub enum BasisSpec {
    /// `"computational"`.
    Named(String),
    /// `{"spin_axis": theta}` — qubit basis tilted by `theta` in the x–z plane.
    Axis { spin_axis: f64 },
}

/// Sampling plans for batch propagator runs. No command reads these yet —
/// the propagator command is flag-driven — but the section is parsed and
/// type-checked (seeds must be 64-bit unsigned) so scenario archives can
/// keep a full run configuration in one validated file.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
pub struct PropagatorSection {
    #[serde(default)]
    pub masses: Vec<f64>,
    #[serde(default)]
    pub epsilons: Vec<f64>,
    pub samples: Option<u64>,
    #[serde(default)]
    pub seeds: Vec<u64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    /// `"csv"` or `"json"`.
    pub format: Option<String>,
    pub path: Option<PathBuf>,
}

impl ScenarioFile {
    /// Read and parse a scenario, returning the parsed document together
    /// with the raw bytes (used for input digests).
    pub fn load(path: &Path) -> Result<(Self, Vec<u8>), CliError> {
        let bytes = std::fs::read(path)
            .map_err(|e| CliError::Input(format!("cannot read scenario `{}`: {e}", path.display())))?;
        let parsed: ScenarioFile = serde_json::from_slice(&bytes)
            .map_err(|e| CliError::Input(format!("scenario `{}`: {e}", path.display())))?;
        Ok((parsed, bytes))
    }

    /// Look up a sync label, enforcing the every-label-defined invariant.
    pub fn sync_param(&self, label: &str) -> Result<SyncParam, CliError> {
        let alpha = self.sync.get(label).ok_or_else(|| {
            CliError::Input(format!("sync label `{label}` is not defined in the `sync` section"))
        })?;
        Ok(SyncParam::new(*alpha, label))
    }
}

pub fn require<T>(section: &str, field: &str, v: Option<T>) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Input(format!("missing field `{section}.{field}`")))
}

/// Convert a `[re, im]` pair matrix, checking rectangularity.
pub fn cmatrix(name: &str, spec: &CMatrixSpec) -> Result<DMatrix<C64>, CliError> {
    let rows = spec.len();
    if rows == 0 {
        return Err(CliError::Input(format!("matrix `{name}` is empty")));
    }
    let cols = spec[0].len();
    for (i, row) in spec.iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::Input(format!(
                "matrix `{name}` is not rectangular: row {i} has {} entries, row 0 has {cols}",
                row.len()
            )));
        }
    }
    Ok(DMatrix::from_fn(rows, cols, |i, j| {
        C64::new(spec[i][j][0], spec[i][j][1])
    }))
}

pub fn cvector(name: &str, spec: &CVectorSpec) -> Result<DVector<C64>, CliError> {
    if spec.is_empty() {
        return Err(CliError::Input(format!("vector `{name}` is empty")));
    }
    Ok(DVector::from_fn(spec.len(), |i, _| {
        C64::new(spec[i][0], spec[i][1])
    }))
}

fn dim_check(name: &str, m: &DMatrix<C64>, rows: usize, cols: usize) -> Result<(), CliError> {
    if m.nrows() != rows || m.ncols() != cols {
        return Err(CliError::Input(format!(
            "matrix `{name}` is {}×{}, expected {rows}×{cols} from `quantum.dims`",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

impl QuantumSection {
    /// Assemble the full two-party evolution scenario. `psi_out` may be
    /// omitted for marginal-only runs, in which case a placeholder basis
    /// state is used (marginals never consult it).
    pub fn scenario(&self) -> Result<QuantumScenario, CliError> {
        let [da, db] = self.dims;
        let joint = da * db;
        let h_a = cmatrix("quantum.h_a", require("quantum", "h_a", self.h_a.as_ref())?)?;
        let h_b = cmatrix("quantum.h_b", require("quantum", "h_b", self.h_b.as_ref())?)?;
        let o_a = cmatrix("quantum.o_a", require("quantum", "o_a", self.o_a.as_ref())?)?;
        let o_b = cmatrix("quantum.o_b", require("quantum", "o_b", self.o_b.as_ref())?)?;
        dim_check("quantum.h_a", &h_a, da, da)?;
        dim_check("quantum.h_b", &h_b, db, db)?;
        dim_check("quantum.o_a", &o_a, da, da)?;
        dim_check("quantum.o_b", &o_b, db, db)?;
        let h_int = match &self.h_int {
            Some(spec) => {
                let m = cmatrix("quantum.h_int", spec)?;
                dim_check("quantum.h_int", &m, joint, joint)?;
                Some(m)
            }
            None => None,
        };
        let [t_in, t_a, t_b, t_out] = require("quantum", "times", self.times)?;
        let psi_in = cvector("quantum.psi_in", require("quantum", "psi_in", self.psi_in.as_ref())?)?;
        let psi_out = match &self.psi_out {
            Some(spec) => cvector("quantum.psi_out", spec)?,
            None => synchrony_core::quantum::basis_state(joint, 0),
        };
        QuantumScenario {
            h_a,
            h_b,
            h_int,
            o_a,
            o_b,
            t_in,
            t_a,
            t_b,
            t_out,
            psi_in,
            psi_out,
        }
        .validated()
        .map_err(|e| CliError::Input(format!("quantum section: {e}")))
    }

    pub fn basis(
        &self,
        field: &str,
        spec: &Option<BasisSpec>,
        dim: usize,
    ) -> Result<MeasurementSetting, CliError> {
        match spec {
            None => Ok(MeasurementSetting::computational_basis(dim)),
            Some(BasisSpec::Named(name)) if name == "computational" => {
                Ok(MeasurementSetting::computational_basis(dim))
            }
            Some(BasisSpec::Named(name)) => Err(CliError::Input(format!(
                "unknown basis `{name}` in `quantum.{field}` (expected \"computational\" or {{\"spin_axis\": theta}})"
            ))),
            Some(BasisSpec::Axis { spin_axis }) => {
                if dim != 2 {
                    return Err(CliError::Input(format!(
                        "`quantum.{field}`: spin_axis bases require a qubit, got dimension {dim}"
                    )));
                }
                Ok(MeasurementSetting::spin_axis(*spin_axis))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ragged_matrices_by_name() {
        let spec: CMatrixSpec = vec![vec![[1.0, 0.0], [0.0, 0.0]], vec![[0.0, 0.0]]];
        let err = cmatrix("quantum.h_a", &spec).unwrap_err();
        match err {
            CliError::Input(msg) => {
                assert!(msg.contains("quantum.h_a"), "{msg}");
                assert!(msg.contains("rectangular"), "{msg}");
            }
            _ => panic!("wrong error kind"),
        }
    }

    #[test]
    fn undefined_sync_label_is_an_input_error() {
        let s: ScenarioFile = serde_json::from_str(r#"{"sync": {"einstein": [0,0,0]}}"#).unwrap();
        assert!(s.sync_param("einstein").is_ok());
        match s.sync_param("tilted").unwrap_err() {
            CliError::Input(msg) => assert!(msg.contains("tilted"), "{msg}"),
            _ => panic!("wrong error kind"),
        }
    }

    #[test]
    fn unknown_sections_are_rejected() {
        let bad = serde_json::from_str::<ScenarioFile>(r#"{"quantm": {}}"#);
        assert!(bad.is_err());
    }
}
