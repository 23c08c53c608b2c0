use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sbath_cli::commands::{self, Source};
use sbath_cli::{CliError, CliResult, ColorScale, ExitStatus, OmegaGrid};
use sbath_core::sweep::{DEFAULT_AXIS_STEPS, PUMP_MAX, PUMP_MIN};
use sbath_core::{Execution, SweepAxis, SweepParameter};

/// Self-energies, Green's functions and gain maps of structured-bath networks.
#[derive(Parser)]
#[command(name = "sbath", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of one network: Σ, G_SS, transfer function and gain.
    Sigma {
        #[command(flatten)]
        source: SourceArgs,
        /// Pump amplitude applied before evaluation.
        #[arg(long)]
        pump_p: Option<f64>,
        #[arg(long)]
        output_node: Option<String>,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// Parameter × frequency gain map with ridge line.
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        /// J_L1L2-scale, J_L2-scale, J_SB-scale, gamma1, gamma2, pump-P or edge:<a>-<b>.
        #[arg(long)]
        axis: String,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = DEFAULT_AXIS_STEPS)]
        steps: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Pump-amplitude sweep (sweep with the pump-P axis).
    PumpSweep {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = PUMP_MIN)]
        from: f64,
        #[arg(long, default_value_t = PUMP_MAX)]
        to: f64,
        #[arg(long, default_value_t = DEFAULT_AXIS_STEPS)]
        steps: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Evaluate a heom, tn or epr comparator self-energy from a model document.
    Compare {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        omega: OmegaArgs,
        #[arg(long, default_value = "out")]
        out: PathBuf,
    },
    /// List presets with their resolved parameters (JSON).
    Presets {
        #[arg(long)]
        name: Option<String>,
    },
    /// Check a network document against every invariant.
    Validate {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Render a grid file as an 8-bit graymap.
    Render {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long, default_value = "linear")]
        scale: String,
        #[arg(long, default_value = "heatmap.pgm")]
        out: PathBuf,
    },
    /// Re-run a manifest.
    Replay {
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        #[arg(long)]
        serial: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    config: Option<PathBuf>,
}

impl SourceArgs {
    fn source(&self) -> Source {
        match (&self.preset, &self.config) {
            (Some(p), _) => Source::Preset(p.clone()),
            (None, Some(c)) => Source::Config(c.clone()),
            (None, None) => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Args)]
struct OmegaArgs {
    #[arg(long, default_value_t = OmegaGrid::default().min)]
    omega_min: f64,
    #[arg(long, default_value_t = OmegaGrid::default().max)]
    omega_max: f64,
    #[arg(long, default_value_t = OmegaGrid::default().points)]
    omega_points: usize,
}

impl OmegaArgs {
    fn grid(&self) -> OmegaGrid {
        OmegaGrid {
            min: self.omega_min,
            max: self.omega_max,
            points: self.omega_points,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    output_node: Option<String>,
    #[command(flatten)]
    omega: OmegaArgs,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Also write heatmap.pgm with this color scale (linear|log).
    #[arg(long)]
    scale: Option<String>,
    /// Evaluate rows on one thread.
    #[arg(long)]
    serial: bool,
}

impl SweepArgs {
    fn exec(&self) -> Execution {
        if self.serial {
            Execution::Serial
        } else {
            Execution::Parallel
        }
    }

    fn scale(&self) -> CliResult<Option<ColorScale>> {
        self.scale.as_deref().map(str::parse).transpose()
    }
}

fn run_sweep(name: &str, source: &SourceArgs, axis: SweepAxis, args: &SweepArgs) -> CliResult<()> {
    let m = commands::resolve_sweep(
        name,
        &source.source(),
        axis,
        args.output_node.as_deref(),
        args.omega.grid(),
        args.scale()?,
    )?;
    let m = commands::execute(&m, &args.out, args.exec())?;
    report(&args.out, &m.outputs);
    Ok(())
}

fn report(dir: &std::path::Path, outputs: &[String]) {
    for f in outputs.iter().map(String::as_str).chain([commands::MANIFEST_FILE]) {
        println!("{}", dir.join(f).display());
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Sigma {
            source,
            pump_p,
            output_node,
            omega,
            out,
        } => {
            let m = commands::resolve_sigma(&source.source(), pump_p, output_node.as_deref(), omega.grid())?;
            let m = commands::execute(&m, &out, Execution::Serial)?;
            report(&out, &m.outputs);
        }
        Command::Sweep {
            source,
            axis,
            from,
            to,
            steps,
            sweep,
        } => {
            let parameter: SweepParameter = axis.parse().map_err(|e: sbath_core::Error| CliError::usage(e.to_string()))?;
            run_sweep("sweep", &source, SweepAxis::linspace(parameter, from, to, steps), &sweep)?;
        }
        Command::PumpSweep {
            source,
            from,
            to,
            steps,
            sweep,
        } => {
            let axis = SweepAxis::linspace(SweepParameter::Pump, from, to, steps);
            run_sweep("pump-sweep", &source, axis, &sweep)?;
        }
        Command::Compare { model, omega, out } => {
            let m = commands::resolve_compare(&model, omega.grid())?;
            let m = commands::execute(&m, &out, Execution::Serial)?;
            report(&out, &m.outputs);
        }
        Command::Presets { name } => println!("{}", commands::presets(name.as_deref())?),
        Command::Validate { source } => {
            let v = commands::validate(&source.source())?;
            if !v.is_empty() {
                for x in &v {
                    eprintln!("{x}");
                }
                return Err(CliError::config(format!("{} violation(s)", v.len())));
            }
            println!("ok");
        }
        Command::Render { grid, scale, out } => {
            commands::render(&grid, scale.parse()?, &out)?;
            println!("{}", out.display());
        }
        Command::Replay { manifest, out, serial } => {
            let exec = if serial { Execution::Serial } else { Execution::Parallel };
            let m = commands::replay(&manifest, &out, exec)?;
            report(&out, &m.outputs);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(ExitStatus::Usage.code() as u8),
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status.code() as u8)
        }
    }
}
