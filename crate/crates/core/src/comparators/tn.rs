//! Chain-mapped bath: the environment as a tridiagonal chain with on-site
//! energies `ε_n` and hoppings `t_n`, coupled to the system through `λ`.
//! Its self-energy is the continued fraction
//! `λ² / (ω − ε₀ − t₀² / (ω − ε₁ − t₁² / (…)))`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quadrature::trapezoid;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TnChain {
    pub lambda: f64,
    pub eps: Vec<f64>,
    pub hop: Vec<f64>,
    pub depth: usize,
    /// Imaginary shift `ω → ω + iη` applied at every level.
    #[serde(default)]
    pub eta: f64,
}

impl TnChain {
    pub fn new(lambda: f64, eps: Vec<f64>, hop: Vec<f64>) -> Self {
        TnChain {
            lambda,
            depth: eps.len(),
            eps,
            hop,
            eta: 0.0,
        }
    }

    pub fn with_eta(self, eta: f64) -> Self {
        TnChain { eta, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.depth == 0 {
            return Err(Error::InvalidArgument("chain depth must be at least 1".into()));
        }
        if self.eps.len() != self.depth || self.hop.len() + 1 != self.depth {
            return Err(Error::InvalidArgument(format!(
                "chain of depth {} needs {} energies and {} hoppings, got {} and {}",
                self.depth,
                self.depth,
                self.depth - 1,
                self.eps.len(),
                self.hop.len()
            )));
        }
        if !(self.eta >= 0.0 && self.eta.is_finite()) {
            return Err(Error::InvalidArgument(format!("eta must be >= 0, got {}", self.eta)));
        }
        Ok(())
    }
}

/// Continued fraction evaluated from the deepest level upwards.
pub fn tn_sigma_cf(chain: &TnChain, omega: f64) -> Result<Complex64> {
    chain.validate()?;
    let z = Complex64::new(omega, chain.eta);
    let zero = Complex64::new(0.0, 0.0);
    let last = chain.depth - 1;
    let mut d = z - chain.eps[last];
    if d == zero {
        return Err(Error::singular(omega, format!("chain level {last}")));
    }
    for n in (0..last).rev() {
        let t = chain.hop[n];
        d = z - chain.eps[n] - t * t / d;
        if d == zero {
            return Err(Error::singular(omega, format!("chain level {n}")));
        }
    }
    Ok(chain.lambda * chain.lambda / d)
}

/// Memory kernel `(1/2π) ∫ Σ(ω) e^{−iωt} dω` by the trapezoid rule on
/// `points` equally spaced frequencies spanning `window`.
pub fn tn_kernel(chain: &TnChain, t: f64, window: (f64, f64), points: usize) -> Result<Complex64> {
    let (lo, hi) = window;
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() || points < 2 {
        return Err(Error::InvalidArgument(format!(
            "degenerate kernel window [{lo}, {hi}] with {points} points"
        )));
    }
    if !(chain.eta > 0.0) {
        return Err(Error::InvalidArgument("kernel needs eta > 0".into()));
    }
    let h = (hi - lo) / (points - 1) as f64;
    let values = (0..points)
        .map(|k| {
            let w = lo + h * k as f64;
            Ok(tn_sigma_cf(chain, w)? * Complex64::from_polar(1.0, -w * t))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(trapezoid(&values, h) / (2.0 * PI))
}
