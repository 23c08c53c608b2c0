//! Parameter × frequency gain maps and ridge extraction.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{apply_pump, NetworkSpec, PumpSpec};
use crate::presets::{coupling_group, CouplingGroup, Preset, LAYER1, LAYER2};

pub const DEFAULT_OMEGA_MIN: f64 = 5.8;
pub const DEFAULT_OMEGA_MAX: f64 = 7.6;
pub const DEFAULT_OMEGA_POINTS: usize = 601;
pub const DEFAULT_AXIS_STEPS: usize = 121;
pub const PUMP_MIN: f64 = 0.0;
pub const PUMP_MAX: f64 = 6.0;

/// `n` equally spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => {
            let span = hi - lo;
            let last = (n - 1) as f64;
            (0..n)
                .map(|k| if k + 1 == n { hi } else { lo + span * (k as f64 / last) })
                .collect()
        }
    }
}

pub fn default_omega_grid() -> Vec<f64> {
    linspace(DEFAULT_OMEGA_MIN, DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_POINTS)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SweepParameter {
    /// Multiplies the four inter-layer couplings.
    InterLayerScale,
    /// Multiplies the three layer-2 triangle couplings.
    TriangleScale,
    /// Multiplies the system–bath couplings.
    SystemBathScale,
    /// Sets the loss of every layer-1 node.
    Gamma1,
    /// Sets the loss of every layer-2 node.
    Gamma2,
    /// Pump amplitude `P`.
    Pump,
    /// Sets one coupling directly.
    Edge(String, String),
}

impl fmt::Display for SweepParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepParameter::InterLayerScale => f.write_str("J_L1L2-scale"),
            SweepParameter::TriangleScale => f.write_str("J_L2-scale"),
            SweepParameter::SystemBathScale => f.write_str("J_SB-scale"),
            SweepParameter::Gamma1 => f.write_str("gamma1"),
            SweepParameter::Gamma2 => f.write_str("gamma2"),
            SweepParameter::Pump => f.write_str("pump-P"),
            SweepParameter::Edge(a, b) => write!(f, "edge:{a}-{b}"),
        }
    }
}

impl FromStr for SweepParameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "J_L1L2-scale" => SweepParameter::InterLayerScale,
            "J_L2-scale" => SweepParameter::TriangleScale,
            "J_SB-scale" => SweepParameter::SystemBathScale,
            "gamma1" => SweepParameter::Gamma1,
            "gamma2" => SweepParameter::Gamma2,
            "pump-P" => SweepParameter::Pump,
            _ => {
                let edge = s.strip_prefix("edge:").and_then(|e| e.split_once('-'));
                match edge {
                    Some((a, b)) if !a.is_empty() && !b.is_empty() => {
                        SweepParameter::Edge(a.to_string(), b.to_string())
                    }
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "unknown sweep parameter `{s}` (expected J_L1L2-scale, J_L2-scale, \
                             J_SB-scale, gamma1, gamma2, pump-P or edge:<a>-<b>)"
                        )))
                    }
                }
            }
        })
    }
}

impl Serialize for SweepParameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SweepParameter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepAxis {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

impl SweepAxis {
    pub fn new(parameter: SweepParameter, values: Vec<f64>) -> Self {
        SweepAxis { parameter, values }
    }

    pub fn linspace(parameter: SweepParameter, from: f64, to: f64, steps: usize) -> Self {
        SweepAxis::new(parameter, linspace(from, to, steps))
    }

    /// Pump scan over the default amplitude range.
    pub fn pump_default() -> Self {
        SweepAxis::linspace(SweepParameter::Pump, PUMP_MIN, PUMP_MAX, DEFAULT_AXIS_STEPS)
    }

    pub fn validate(&self) -> Result<()> {
        if self.values.is_empty() {
            return Err(Error::InvalidArgument("sweep axis has no values".into()));
        }
        if self.values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("sweep axis values must be finite".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepMeta {
    pub preset: String,
    /// Pump as configured for the sweep (amplitude 0 unless the pump is swept).
    pub pump: Option<PumpSpec>,
    pub timestamp: Option<String>,
    pub code_version: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub axis: SweepAxis,
    pub omega_grid: Vec<f64>,
    /// `grid[k][m]`: gain at axis value `k` and frequency `m`; `None` marks a
    /// singular cell.
    pub grid: Vec<Vec<Option<f64>>>,
    /// Ridge frequency per axis value; `None` when the whole row is missing.
    pub ridge: Vec<Option<f64>>,
    pub meta: SweepMeta,
}

impl SweepResult {
    /// Largest gain in the whole map.
    pub fn max_gain(&self) -> Option<f64> {
        self.grid.iter().flatten().flatten().copied().reduce(f64::max)
    }

    /// Largest gain in row `k`.
    pub fn row_max(&self, k: usize) -> Option<f64> {
        self.grid[k].iter().flatten().copied().reduce(f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

fn scale_group(spec: &mut NetworkSpec, group: CouplingGroup, factor: f64) -> Result<()> {
    let system = spec.system.clone();
    let mut hit = false;
    for c in spec.couplings.iter_mut() {
        if coupling_group(&system, c) == Some(group) {
            c.j *= factor;
            hit = true;
        }
    }
    if !hit {
        return Err(Error::InvalidArgument(format!("network has no {group:?} couplings to scale")));
    }
    Ok(())
}

fn set_layer_gamma(spec: &mut NetworkSpec, layer: &[&str], gamma: f64) -> Result<()> {
    let mut hit = false;
    for n in spec.nodes.iter_mut() {
        if layer.contains(&n.label.as_str()) {
            n.gamma = gamma;
            hit = true;
        }
    }
    if !hit {
        return Err(Error::InvalidArgument(format!("network has none of the nodes {layer:?}")));
    }
    Ok(())
}

/// Pump as it acts during a sweep over `parameter`: held at `P = 0` unless
/// the pump itself is swept.
pub fn sweep_pump(preset: &Preset, parameter: &SweepParameter) -> Option<PumpSpec> {
    preset.pump.as_ref().map(|p| match parameter {
        SweepParameter::Pump => p.clone(),
        _ => p.with_amplitude(0.0),
    })
}

/// Network at one axis value, pump included.
pub fn configure(preset: &Preset, parameter: &SweepParameter, value: f64) -> Result<NetworkSpec> {
    let mut spec = preset.spec.clone();
    let mut pump = sweep_pump(preset, parameter);
    match parameter {
        SweepParameter::InterLayerScale => scale_group(&mut spec, CouplingGroup::InterLayer, value)?,
        SweepParameter::TriangleScale => scale_group(&mut spec, CouplingGroup::Triangle, value)?,
        SweepParameter::SystemBathScale => scale_group(&mut spec, CouplingGroup::SystemBath, value)?,
        SweepParameter::Gamma1 => set_layer_gamma(&mut spec, &LAYER1, value)?,
        SweepParameter::Gamma2 => set_layer_gamma(&mut spec, &LAYER2, value)?,
        SweepParameter::Edge(a, b) => spec.set_coupling(a, b, value),
        SweepParameter::Pump => match pump.as_mut() {
            Some(p) => p.p = value,
            None => return Err(Error::InvalidArgument("pump sweep needs a pump".into())),
        },
    }
    let spec = match &pump {
        Some(p) => apply_pump(&spec, p)?,
        None => spec,
    };
    spec.ensure_valid()?;
    Ok(spec)
}

/// Frequency of maximal gain; ties go to the lowest frequency.
pub fn extract_ridge(row: &[Option<f64>], omega_grid: &[f64]) -> Result<f64> {
    assert_eq!(row.len(), omega_grid.len());
    let mut best: Option<(f64, f64)> = None;
    for (&cell, &w) in row.iter().zip(omega_grid) {
        let Some(g) = cell else { continue };
        best = match best {
            Some((bg, bw)) if g < bg || (g == bg && w >= bw) => Some((bg, bw)),
            _ => Some((g, w)),
        };
    }
    best.map(|(_, w)| w)
        .ok_or_else(|| Error::InvalidArgument("ridge row has no valid cells".into()))
}

fn evaluate_row(spec: &NetworkSpec, output: &str, omega_grid: &[f64]) -> Result<Vec<Option<f64>>> {
    let net = spec.compile()?;
    let out = net.output_position(output)?;
    Ok(omega_grid
        .iter()
        .map(|&w| net.gain(w, out).ok())
        .collect())
}

pub fn run_sweep(preset: &Preset, axis: &SweepAxis, omega_grid: &[f64]) -> Result<SweepResult> {
    run_sweep_with(preset, axis, omega_grid, Execution::Parallel)
}

/// Evaluates the gain map. Rows are independent; the result does not depend
/// on `exec`.
pub fn run_sweep_with(
    preset: &Preset,
    axis: &SweepAxis,
    omega_grid: &[f64],
    exec: Execution,
) -> Result<SweepResult> {
    axis.validate()?;
    if omega_grid.is_empty() || omega_grid.iter().any(|w| !w.is_finite()) {
        return Err(Error::InvalidArgument("frequency grid must be nonempty and finite".into()));
    }
    let specs = axis
        .values
        .iter()
        .map(|&v| configure(preset, &axis.parameter, v))
        .collect::<Result<Vec<_>>>()?;

    let row = |spec: &NetworkSpec| evaluate_row(spec, &preset.output_node, omega_grid);
    let grid = match exec {
        Execution::Serial => specs.iter().map(row).collect::<Result<Vec<_>>>()?,
        Execution::Parallel => specs.par_iter().map(row).collect::<Result<Vec<_>>>()?,
    };
    let ridge = grid.iter().map(|r| extract_ridge(r, omega_grid).ok()).collect();

    Ok(SweepResult {
        axis: axis.clone(),
        omega_grid: omega_grid.to_vec(),
        grid,
        ridge,
        meta: SweepMeta {
            preset: preset.name.clone(),
            pump: sweep_pump(preset, &axis.parameter),
            timestamp: None,
            code_version: crate::VERSION.to_string(),
        },
    })
}
