//! Energy-participation model: each circuit element `i` stores a fraction
//! `p_i` of the mode energy and shifts the mode by `E_i p_i²`. The
//! resulting self-energy is real and frequency independent.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EprElement {
    /// Element energy scale, GHz.
    pub energy: f64,
    /// Energy participation in `[0, 1]`.
    pub participation: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EprModel {
    pub elements: Vec<EprElement>,
}

impl EprModel {
    pub fn from_pairs(energy: &[f64], participation: &[f64]) -> Self {
        assert_eq!(energy.len(), participation.len());
        EprModel {
            elements: energy
                .iter()
                .zip(participation)
                .map(|(&energy, &participation)| EprElement { energy, participation })
                .collect(),
        }
    }

    pub fn concat(&self, other: &EprModel) -> EprModel {
        EprModel {
            elements: self.elements.iter().chain(&other.elements).copied().collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (k, e) in self.elements.iter().enumerate() {
            if !(0.0..=1.0).contains(&e.participation) {
                return Err(Error::InvalidArgument(format!(
                    "element {k}: participation {} outside [0, 1]",
                    e.participation
                )));
            }
            if !e.energy.is_finite() {
                return Err(Error::InvalidArgument(format!("element {k}: energy is not finite")));
            }
        }
        Ok(())
    }
}

/// `Δω_m = Σ_i E_i p_i²`.
pub fn epr_delta_omega(model: &EprModel) -> Result<f64> {
    model.validate()?;
    Ok(model
        .elements
        .iter()
        .map(|e| e.energy * e.participation * e.participation)
        .sum())
}

pub fn epr_sigma(model: &EprModel) -> Result<Complex64> {
    Ok(Complex64::new(epr_delta_omega(model)?, 0.0))
}
