//! Text grid file for gain maps.
//!
//! ```text
//! # sbath gain grid
//! # preset: C1
//! # axis: J_L1L2-scale
//! # pump: {"edge":["B3","B4"],"g":0.0,"p":0.0,"delta_omega3":0.0}
//! # axis_values: 5.0000000000000000e-1,...
//! # omega_ghz: 5.7999999999999998e0,...
//! <gain row for axis_values[0]>
//! ...
//! ```
//!
//! Rows are comma separated, one per axis value; singular cells are `nan`.
//! `pump` is `none` when the network has no pump.

use std::io::{BufRead, Write};

use sbath_core::{PumpSpec, SweepResult};

use crate::error::{CliError, CliResult};
use crate::format::{fmt_row, parse_row};

const MAGIC: &str = "# sbath gain grid";

#[derive(Debug, Clone, PartialEq)]
pub struct GridFile {
    pub preset: String,
    pub axis: String,
    pub pump: Option<PumpSpec>,
    pub axis_values: Vec<f64>,
    pub omega: Vec<f64>,
    /// Row-major gains, `None` for missing cells.
    pub gains: Vec<Vec<Option<f64>>>,
}

impl GridFile {
    pub fn from_sweep(r: &SweepResult) -> Self {
        GridFile {
            preset: r.meta.preset.clone(),
            axis: r.axis.parameter.to_string(),
            pump: r.meta.pump.clone(),
            axis_values: r.axis.values.clone(),
            omega: r.omega_grid.clone(),
            gains: r.grid.clone(),
        }
    }

    pub fn rows(&self) -> usize {
        self.gains.len()
    }

    pub fn cols(&self) -> usize {
        self.omega.len()
    }

    pub fn write(&self, mut w: impl Write) -> CliResult<()> {
        let pump = match &self.pump {
            Some(p) => serde_json::to_string(p).expect("pump serializes"),
            None => "none".into(),
        };
        writeln!(w, "{MAGIC}")?;
        writeln!(w, "# preset: {}", self.preset)?;
        writeln!(w, "# axis: {}", self.axis)?;
        writeln!(w, "# pump: {pump}")?;
        writeln!(w, "# axis_values: {}", fmt_row(self.axis_values.iter().copied()))?;
        writeln!(w, "# omega_ghz: {}", fmt_row(self.omega.iter().copied()))?;
        for row in &self.gains {
            writeln!(w, "{}", fmt_row(row.iter().map(|g| g.unwrap_or(f64::NAN))))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read(r: impl BufRead) -> CliResult<Self> {
        let mut lines = r.lines();
        let mut next = || -> CliResult<String> {
            lines
                .next()
                .transpose()?
                .ok_or_else(|| CliError::format("grid file ends inside the header"))
        };
        if next()?.trim_end() != MAGIC {
            return Err(CliError::format("not a gain grid file"));
        }
        let mut field = |key: &str| -> CliResult<String> {
            let line = next()?;
            line.strip_prefix("# ")
                .and_then(|l| l.strip_prefix(key))
                .and_then(|l| l.strip_prefix(": ").or_else(|| l.strip_prefix(":")))
                .map(str::to_string)
                .ok_or_else(|| CliError::format(format!("expected `# {key}:` header, found `{line}`")))
        };
        let preset = field("preset")?;
        let axis = field("axis")?;
        let pump = match field("pump")?.as_str() {
            "none" => None,
            text => Some(
                serde_json::from_str(text)
                    .map_err(|e| CliError::format(format!("bad pump header: {e}")))?,
            ),
        };
        let axis_values = parse_row(&field("axis_values")?)?;
        let omega = parse_row(&field("omega_ghz")?)?;
        let mut gains = Vec::with_capacity(axis_values.len());
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let row = parse_row(&line)?;
            if row.len() != omega.len() {
                return Err(CliError::format(format!(
                    "grid row {} has {} cells, expected {}",
                    gains.len(),
                    row.len(),
                    omega.len()
                )));
            }
            gains.push(row.into_iter().map(|g| Some(g).filter(|x| !x.is_nan())).collect());
        }
        if gains.len() != axis_values.len() {
            return Err(CliError::format(format!(
                "grid has {} rows for {} axis values",
                gains.len(),
                axis_values.len()
            )));
        }
        Ok(GridFile {
            preset,
            axis,
            pump,
            axis_values,
            omega,
            gains,
        })
    }
}
