//! Exponential-mode bath: `C(t) = Σ_j c_j e^{−γ_j t}` and its one-sided
//! Laplace transform `Σ(ω) = ∫₀^∞ C(t) e^{iωt} dt = Σ_j c_j / (γ_j − iω)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quadrature::{richardson, Estimate};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeomMode {
    /// Complex amplitude, serialized as `[re, im]`.
    pub c: Complex64,
    /// Decay rate, must be positive.
    pub gamma: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeomModes {
    pub modes: Vec<HeomMode>,
}

impl HeomModes {
    pub fn new(modes: Vec<HeomMode>) -> Self {
        HeomModes { modes }
    }

    pub fn validate(&self) -> Result<()> {
        for (k, m) in self.modes.iter().enumerate() {
            if !(m.gamma > 0.0 && m.gamma.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "mode {k}: decay rate must be positive, got {}",
                    m.gamma
                )));
            }
            if !m.c.is_finite() {
                return Err(Error::InvalidArgument(format!("mode {k}: amplitude is not finite")));
            }
        }
        Ok(())
    }
}

pub fn heom_sigma(m: &HeomModes, omega: f64) -> Result<Complex64> {
    m.validate()?;
    Ok(m.modes
        .iter()
        .map(|mode| mode.c / Complex64::new(mode.gamma, -omega))
        .sum())
}

pub fn heom_correlation(m: &HeomModes, t: f64) -> Result<Complex64> {
    m.validate()?;
    if !(t >= 0.0) {
        return Err(Error::InvalidArgument(format!("time must be >= 0, got {t}")));
    }
    Ok(m.modes.iter().map(|mode| mode.c * (-mode.gamma * t).exp()).sum())
}

/// Correlation function sampled at `t_k = k·dt`, `k = 0…n−1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationSamples {
    pub dt: f64,
    pub values: Vec<Complex64>,
}

impl CorrelationSamples {
    pub fn sample(m: &HeomModes, dt: f64, count: usize) -> Result<Self> {
        let values = (0..count)
            .map(|k| heom_correlation(m, k as f64 * dt))
            .collect::<Result<Vec<_>>>()?;
        Ok(CorrelationSamples { dt, values })
    }

    pub fn sample_fn(f: impl Fn(f64) -> Complex64, dt: f64, count: usize) -> Self {
        CorrelationSamples {
            dt,
            values: (0..count).map(|k| f(k as f64 * dt)).collect(),
        }
    }
}

/// Truncated `∫₀^{t_end} C(t) e^{iωt} dt` by the Richardson-checked trapezoid.
///
/// Fails when `|C(t_end)|` exceeds `decay_tol` times the largest sample
/// magnitude, since the discarded tail would then be significant.
pub fn correlation_to_sigma(c: &CorrelationSamples, omega: f64, decay_tol: f64) -> Result<Estimate> {
    if c.values.is_empty() {
        return Ok(Estimate::exact(Complex64::new(0.0, 0.0)));
    }
    if !(c.dt > 0.0) {
        return Err(Error::InvalidArgument("time step must be positive".into()));
    }
    let peak = c.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let last = c.values[c.values.len() - 1].norm();
    if last > decay_tol * peak {
        return Err(Error::Truncation {
            magnitude: last,
            tolerance: decay_tol * peak,
        });
    }
    let integrand: Vec<Complex64> = c
        .values
        .iter()
        .enumerate()
        .map(|(k, &v)| v * Complex64::from_polar(1.0, omega * k as f64 * c.dt))
        .collect();
    Ok(richardson(&integrand, c.dt))
}
