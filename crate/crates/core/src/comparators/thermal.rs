//! Thermal occupations and the finite-temperature bath correlation
//! `C(t) = ∫ dω J(ω) [(n(ω)+1) e^{−iωt} + n(ω) e^{iωt}]` over `ω > 0`.
//! Units are ħ = k_B = 1, so `T` is a frequency.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quadrature::{richardson_nonuniform, Estimate};
use crate::error::{Error, Result};

/// Bose–Einstein occupation `1 / (e^{ω/T} − 1)`; zero at `T = 0`.
pub fn bose_occupation(omega: f64, temperature: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::InvalidArgument(format!("occupation needs omega > 0, got {omega}")));
    }
    if !(temperature >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "temperature must be >= 0, got {temperature}"
        )));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (omega / temperature).exp_m1())
}

/// `(emission, absorption)` weights `(n + 1, n)`.
pub fn kms_weights(omega: f64, temperature: f64) -> Result<(f64, f64)> {
    let n = bose_occupation(omega, temperature)?;
    Ok((n + 1.0, n))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiscreteMode {
    pub g: f64,
    pub omega: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SpectralDensity {
    /// `J(ω) = Σ_k g_k² δ(ω − ω_k)`.
    Discrete { modes: Vec<DiscreteMode> },
    /// Nonnegative samples on an increasing grid inside `ω > 0`.
    Tabulated { omega: Vec<f64>, values: Vec<f64> },
}

impl SpectralDensity {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        match self {
            SpectralDensity::Discrete { modes } => {
                for m in modes {
                    if !(m.omega > 0.0 && m.omega.is_finite() && m.g.is_finite()) {
                        return bad(format!("discrete mode at omega = {} is not physical", m.omega));
                    }
                }
            }
            SpectralDensity::Tabulated { omega, values } => {
                if omega.len() != values.len() || omega.len() < 2 {
                    return bad("tabulated density needs matching grids of at least 2 points".into());
                }
                if !(omega[0] > 0.0) || omega.windows(2).any(|w| !(w[1] > w[0])) {
                    return bad("tabulated grid must be increasing and positive".into());
                }
                if values.iter().any(|v| !(*v >= 0.0 && v.is_finite())) {
                    return bad("spectral density must be nonnegative".into());
                }
            }
        }
        Ok(())
    }
}

fn thermal_term(weight: f64, omega: f64, temperature: f64, t: f64) -> Result<Complex64> {
    let (emit, absorb) = kms_weights(omega, temperature)?;
    Ok((Complex64::from_polar(emit, -omega * t) + Complex64::from_polar(absorb, omega * t)) * weight)
}

/// Correlation at time `t`. Discrete densities are summed exactly
/// (`error = 0`); tabulated ones use the Richardson-checked trapezoid.
pub fn bath_correlation_thermal(j: &SpectralDensity, temperature: f64, t: f64) -> Result<Estimate> {
    j.validate()?;
    match j {
        SpectralDensity::Discrete { modes } => {
            let mut sum = Complex64::new(0.0, 0.0);
            for m in modes {
                sum += thermal_term(m.g * m.g, m.omega, temperature, t)?;
            }
            Ok(Estimate::exact(sum))
        }
        SpectralDensity::Tabulated { omega, values } => {
            let integrand = omega
                .iter()
                .zip(values)
                .map(|(&w, &v)| thermal_term(v, w, temperature, t))
                .collect::<Result<Vec<_>>>()?;
            Ok(richardson_nonuniform(omega, &integrand))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn occupation_values() {
        assert_eq!(bose_occupation(3.0, 0.0).unwrap(), 0.0);
        let n = bose_occupation(0.7 * 2f64.ln(), 0.7).unwrap();
        assert!((n - 1.0).abs() < 1e-14);
        assert!(bose_occupation(0.0, 1.0).is_err());
        assert!(bose_occupation(-1.0, 1.0).is_err());
        assert!(bose_occupation(1.0, -1.0).is_err());
    }

    #[test]
    fn single_mode_zero_temperature() {
        let j = SpectralDensity::Discrete {
            modes: vec![DiscreteMode { g: 0.3, omega: 2.0 }],
        };
        let c0 = bath_correlation_thermal(&j, 0.0, 0.0).unwrap();
        assert_eq!(c0.value, Complex64::new(0.09, 0.0));
        let t = 0.8;
        let c = bath_correlation_thermal(&j, 0.0, t).unwrap().value;
        assert!((c - Complex64::from_polar(0.09, -2.0 * t)).norm() < 1e-16);
    }

    #[test]
    fn density_validation() {
        let neg = SpectralDensity::Tabulated {
            omega: vec![0.1, 0.2],
            values: vec![1.0, -1.0],
        };
        assert!(neg.validate().is_err());
        let zero = SpectralDensity::Tabulated {
            omega: vec![0.0, 0.2],
            values: vec![1.0, 1.0],
        };
        assert!(zero.validate().is_err());
    }
}
