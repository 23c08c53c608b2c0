//! File formats and subcommands behind the `sbath` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod grid;
pub mod heatmap;
pub mod manifest;

pub use error::{CliError, CliResult, ExitStatus};
pub use grid::GridFile;
pub use heatmap::{render_heatmap, ColorScale, Graymap};
pub use manifest::{OmegaGrid, RunManifest, RunSpec};
