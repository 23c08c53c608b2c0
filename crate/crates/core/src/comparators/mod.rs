//! Comparator self-energies (exponential-mode, chain and
//! participation-ratio models) and thermal bath correlation functions.

pub mod epr;
pub mod heom;
pub mod quadrature;
pub mod thermal;
pub mod tn;

use serde::{Deserialize, Serialize};

pub use epr::{epr_delta_omega, epr_sigma, EprElement, EprModel};
pub use heom::{correlation_to_sigma, heom_correlation, heom_sigma, CorrelationSamples, HeomMode, HeomModes};
pub use quadrature::Estimate;
pub use thermal::{bath_correlation_thermal, bose_occupation, DiscreteMode, SpectralDensity};
pub use tn::{tn_kernel, tn_sigma_cf, TnChain};

use crate::error::Result;
use num_complex::Complex64;

/// Any comparator model, tagged by `kind` in documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComparatorModel {
    Heom(HeomModes),
    Tn(TnChain),
    Epr(EprModel),
}

impl ComparatorModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            ComparatorModel::Heom(m) => m.validate(),
            ComparatorModel::Tn(chain) => chain.validate(),
            ComparatorModel::Epr(m) => m.validate(),
        }
    }

    pub fn sigma(&self, omega: f64) -> Result<Complex64> {
        match self {
            ComparatorModel::Heom(m) => heom_sigma(m, omega),
            ComparatorModel::Tn(chain) => tn_sigma_cf(chain, omega),
            ComparatorModel::Epr(m) => epr_sigma(m),
        }
    }
}
