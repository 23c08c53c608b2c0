//! Run manifests: every resolved input of a run, enough to replay it.

use serde::{Deserialize, Serialize};

use sbath_core::comparators::ComparatorModel;
use sbath_core::sweep::linspace;
use sbath_core::{ConfigDocument, SweepAxis};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaGrid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl OmegaGrid {
    pub fn values(&self) -> CliResult<Vec<f64>> {
        if self.points == 0 || !self.min.is_finite() || !self.max.is_finite() || self.max < self.min {
            return Err(CliError::usage(format!(
                "bad frequency grid: [{}, {}] with {} points",
                self.min, self.max, self.points
            )));
        }
        Ok(linspace(self.min, self.max, self.points))
    }
}

impl Default for OmegaGrid {
    fn default() -> Self {
        use sbath_core::sweep::{DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_MIN, DEFAULT_OMEGA_POINTS};
        OmegaGrid {
            min: DEFAULT_OMEGA_MIN,
            max: DEFAULT_OMEGA_MAX,
            points: DEFAULT_OMEGA_POINTS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RunSpec {
    Sigma {
        preset: String,
        network: ConfigDocument,
        output_node: String,
        omega: OmegaGrid,
    },
    Sweep {
        preset: String,
        network: ConfigDocument,
        output_node: String,
        axis: SweepAxis,
        omega: OmegaGrid,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        heatmap: Option<String>,
    },
    Compare {
        model: ComparatorModel,
        omega: OmegaGrid,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    /// Subcommand as typed (`sigma`, `sweep`, `pump-sweep`, `compare`).
    pub command: String,
    /// Preset name or config/model path the run was resolved from.
    pub source: String,
    pub run: RunSpec,
    /// Output file names, relative to the output directory.
    pub outputs: Vec<String>,
    pub code_version: String,
    pub timestamp: String,
}

impl RunManifest {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        sbath_core::config::from_json(text).map_err(CliError::from)
    }
}
