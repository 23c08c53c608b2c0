//! Subcommand implementations. Each run is first resolved into a
//! [`RunManifest`], then executed from the manifest alone, so replaying a
//! manifest goes through exactly the same code path.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter};
use std::path::{Path, PathBuf};

use serde::Serialize;

use sbath_core::comparators::ComparatorModel;
use sbath_core::config::from_json;
use sbath_core::presets::{all_presets, preset};
use sbath_core::self_energy::DEFAULT_OUTPUT;
use sbath_core::{
    apply_pump, run_sweep_with, ConfigDocument, Execution, Preset, SweepAxis, Violation,
};

use crate::error::{CliError, CliResult};
use crate::format::{write_compare, write_ridge, write_spectrum};
use crate::grid::GridFile;
use crate::heatmap::{render_heatmap, ColorScale};
use crate::manifest::{OmegaGrid, RunManifest, RunSpec};

pub const MANIFEST_FILE: &str = "manifest.json";
pub const SPECTRUM_FILE: &str = "spectrum.csv";
pub const GRID_FILE: &str = "grid.txt";
pub const RIDGE_FILE: &str = "ridge.csv";
pub const HEATMAP_FILE: &str = "heatmap.pgm";
pub const COMPARE_FILE: &str = "compare.csv";

/// Name recorded for networks read from a config file.
pub const CONFIG_PRESET_NAME: &str = "config";

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Preset(String),
    Config(PathBuf),
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::Preset(n) => n.clone(),
            Source::Config(p) => p.display().to_string(),
        }
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::new(crate::ExitStatus::Io, format!("{}: {e}", path.display())))
}

/// Resolves a preset name or config file into a validated [`Preset`].
pub fn load_source(source: &Source, output_node: Option<&str>) -> CliResult<Preset> {
    let mut p = match source {
        Source::Preset(name) => preset(name)?,
        Source::Config(path) => {
            let (spec, pump) = sbath_core::parse_config(&read_text(path)?)?;
            Preset {
                name: CONFIG_PRESET_NAME.into(),
                spec,
                pump,
                output_node: DEFAULT_OUTPUT.into(),
            }
        }
    };
    if let Some(out) = output_node {
        p.output_node = out.to_string();
    }
    Ok(p)
}

fn create_out(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::new(crate::ExitStatus::Io, format!("{}: {e}", dir.display())))
}

fn create_file(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::new(crate::ExitStatus::Io, format!("{}: {e}", path.display())))
}

fn timestamp() -> String {
    chrono::Utc::now().to_rfc3339()
}

fn manifest(command: &str, source: String, run: RunSpec) -> RunManifest {
    RunManifest {
        command: command.into(),
        source,
        run,
        outputs: vec![],
        code_version: sbath_core::VERSION.into(),
        timestamp: timestamp(),
    }
}

pub fn resolve_sigma(
    source: &Source,
    pump_p: Option<f64>,
    output_node: Option<&str>,
    omega: OmegaGrid,
) -> CliResult<RunManifest> {
    let p = load_source(source, output_node)?;
    let mut pump = p.pump.clone();
    if let Some(amp) = pump_p {
        match pump.as_mut() {
            Some(pump) => pump.p = amp,
            None => return Err(CliError::config("--pump-p needs a network with a pump")),
        }
    }
    let run = RunSpec::Sigma {
        preset: p.name.clone(),
        network: ConfigDocument::new(&p.spec, pump.as_ref()),
        output_node: p.output_node.clone(),
        omega,
    };
    Ok(manifest("sigma", source.describe(), run))
}

pub fn resolve_sweep(
    command: &str,
    source: &Source,
    axis: SweepAxis,
    output_node: Option<&str>,
    omega: OmegaGrid,
    heatmap: Option<ColorScale>,
) -> CliResult<RunManifest> {
    let p = load_source(source, output_node)?;
    let run = RunSpec::Sweep {
        preset: p.name.clone(),
        network: ConfigDocument::new(&p.spec, p.pump.as_ref()),
        output_node: p.output_node.clone(),
        axis,
        omega,
        heatmap: heatmap.map(|s| match s {
            ColorScale::Linear => "linear".to_string(),
            ColorScale::Log => "log".to_string(),
        }),
    };
    Ok(manifest(command, source.describe(), run))
}

pub fn resolve_compare(model_path: &Path, omega: OmegaGrid) -> CliResult<RunManifest> {
    let model: ComparatorModel = from_json(&read_text(model_path)?)?;
    model.validate()?;
    Ok(manifest(
        "compare",
        model_path.display().to_string(),
        RunSpec::Compare { model, omega },
    ))
}

/// Runs a resolved manifest, writing every output plus `manifest.json`
/// into `out`. Returns the manifest as written.
pub fn execute(m: &RunManifest, out: &Path, exec: Execution) -> CliResult<RunManifest> {
    let mut m = m.clone();
    m.outputs.clear();
    match &m.run {
        RunSpec::Sigma {
            network,
            output_node,
            omega,
            ..
        } => {
            let (spec, pump) = network.clone().into_parts();
            let spec = match &pump {
                Some(p) => apply_pump(&spec, p)?,
                None => spec,
            };
            let trace = spec.compile()?.spectrum(&omega.values()?, output_node)?;
            create_out(out)?;
            write_spectrum(&trace, create_file(&out.join(SPECTRUM_FILE))?)?;
            m.outputs.push(SPECTRUM_FILE.into());
        }
        RunSpec::Sweep {
            preset,
            network,
            output_node,
            axis,
            omega,
            heatmap,
        } => {
            let (spec, pump) = network.clone().into_parts();
            let p = Preset {
                name: preset.clone(),
                spec,
                pump,
                output_node: output_node.clone(),
            };
            let result = run_sweep_with(&p, axis, &omega.values()?, exec)?;
            let grid = GridFile::from_sweep(&result);
            create_out(out)?;
            grid.write(create_file(&out.join(GRID_FILE))?)?;
            write_ridge(&result.axis.values, &result.ridge, create_file(&out.join(RIDGE_FILE))?)?;
            m.outputs.push(GRID_FILE.into());
            m.outputs.push(RIDGE_FILE.into());
            if let Some(scale) = heatmap {
                let img = render_heatmap(&grid, scale.parse()?)?;
                img.write_pgm(create_file(&out.join(HEATMAP_FILE))?)?;
                m.outputs.push(HEATMAP_FILE.into());
            }
        }
        RunSpec::Compare { model, omega } => {
            let rows = omega
                .values()?
                .into_iter()
                .map(|w| Ok((w, model.sigma(w)?)))
                .collect::<CliResult<Vec<_>>>()?;
            create_out(out)?;
            write_compare(&rows, create_file(&out.join(COMPARE_FILE))?)?;
            m.outputs.push(COMPARE_FILE.into());
        }
    }
    fs::write(out.join(MANIFEST_FILE), m.to_json())?;
    Ok(m)
}

/// Re-runs a manifest with a fresh timestamp.
pub fn replay(manifest_path: &Path, out: &Path, exec: Execution) -> CliResult<RunManifest> {
    let mut m = RunManifest::from_json(&read_text(manifest_path)?)?;
    m.timestamp = timestamp();
    execute(&m, out, exec)
}

#[derive(Serialize)]
struct PresetListing {
    name: String,
    output_node: String,
    network: ConfigDocument,
}

/// JSON listing of one or all presets.
pub fn presets(name: Option<&str>) -> CliResult<String> {
    let list: Vec<Preset> = match name {
        Some(n) => vec![preset(n)?],
        None => all_presets(),
    };
    let listing: Vec<PresetListing> = list
        .into_iter()
        .map(|p| PresetListing {
            network: ConfigDocument::new(&p.spec, p.pump.as_ref()),
            name: p.name,
            output_node: p.output_node,
        })
        .collect();
    Ok(serde_json::to_string_pretty(&listing).expect("listing serializes"))
}

/// Every violation of a config document (structure errors are reported as
/// errors, invariant breaks as a list).
pub fn validate(source: &Source) -> CliResult<Vec<Violation>> {
    match source {
        Source::Preset(name) => {
            let p = preset(name)?;
            let mut v = p.spec.validate();
            if let Some(pump) = &p.pump {
                v.extend(pump.validate(&p.spec));
            }
            Ok(v)
        }
        Source::Config(path) => {
            let doc: ConfigDocument = from_json(&read_text(path)?)?;
            let (spec, pump) = doc.into_parts();
            let mut v = spec.validate();
            if let Some(pump) = &pump {
                if v.is_empty() {
                    v.extend(pump.validate(&spec));
                }
            }
            Ok(v)
        }
    }
}

pub fn render(grid_path: &Path, scale: ColorScale, out: &Path) -> CliResult<()> {
    let file = File::open(grid_path)
        .map_err(|e| CliError::new(crate::ExitStatus::Io, format!("{}: {e}", grid_path.display())))?;
    let grid = GridFile::read(BufReader::new(file))?;
    let img = render_heatmap(&grid, scale)?;
    if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
        create_out(dir)?;
    }
    img.write_pgm(create_file(out)?)
}
