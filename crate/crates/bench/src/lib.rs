//! Benchmark fixtures shared by the bench targets.

use sbath_core::{preset, Preset};

/// The pumped six-node network used by most benches.
pub fn fixture() -> Preset {
    preset("FIG3").expect("known preset")
}
