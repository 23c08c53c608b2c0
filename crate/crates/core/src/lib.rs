//! Complex self-energies, Green's functions and transfer-gain maps for finite
//! structured-bath networks, with exponential-mode, chain and
//! participation-ratio comparator models.
//!
//! All frequencies, couplings and losses are plain numbers in GHz;
//! ħ = k_B = 1, so temperatures are frequencies too.

pub mod comparators;
pub mod config;
pub mod error;
pub mod linalg;
pub mod network;
pub mod presets;
pub mod self_energy;
pub mod sweep;

pub use config::{parse_config, ConfigDocument};
pub use error::{Error, Result};
pub use network::{
    apply_pump, build_bath_resolvent, build_full_matrix, validate, BathResolvent, Coupling,
    Network, NetworkSpec, Node, PumpSpec, Violation,
};
pub use presets::{preset, Preset, PRESET_NAMES};
pub use self_energy::{
    full_resolvent_oracle, gain, green_system, green_transfer, sigma_chain, sigma_network,
    ChainParams, SelfEnergySample, SpectrumTrace,
};
pub use sweep::{
    extract_ridge, run_sweep, run_sweep_with, Execution, SweepAxis, SweepMeta, SweepParameter,
    SweepResult,
};

pub use num_complex::Complex64;

/// Crate version recorded in sweep metadata and manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
