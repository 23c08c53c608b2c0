//! System self-energy, Green's functions and transfer gain.
//!
//! Eliminating the bath block of `ωI − H + iΓ` gives
//!
//! ```text
//! Σ_S(ω) = J_SBᵀ M(ω)⁻¹ J_SB,      G_SS(ω) = 1 / (ω − ω_S − Σ_S(ω))
//! G_{B←S}(ω) = (M(ω)⁻¹ J_SB)_B · G_SS(ω)
//! ```
//!
//! `M⁻¹ J_SB` is obtained from one pivoted LU solve. Only
//! [`full_resolvent_oracle`] forms an explicit inverse, and it does so through
//! an independent code path so it can serve as a check.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector, Lu};
use crate::network::{Coupling, Network, NetworkSpec, Node};

/// Bath resolvents with a reciprocal condition number below this are
/// treated as singular.
pub const RCOND_MIN: f64 = 1e-13;

/// Output node used when none is given.
pub const DEFAULT_OUTPUT: &str = "B3";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelfEnergySample {
    pub omega: f64,
    pub sigma: Complex64,
    pub g_ss: Complex64,
    pub g_transfer: Complex64,
    pub gain: f64,
}

/// Ordered samples of one network at increasing frequencies.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpectrumTrace {
    pub output_node: String,
    pub samples: Vec<SelfEnergySample>,
}

/// Two-layer chain `S - L₁ - L₂` with Markovian losses on both layers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainParams {
    pub j_sl1: f64,
    pub j_l12: f64,
    pub omega_l1: f64,
    pub omega_l2: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

impl ChainParams {
    /// Equivalent three-node network `S, L1, L2` with the system at `omega_s`.
    pub fn to_network(&self, omega_s: f64) -> NetworkSpec {
        NetworkSpec::new(
            vec![
                Node::new("S", omega_s, 0.0),
                Node::new("L1", self.omega_l1, self.gamma1),
                Node::new("L2", self.omega_l2, self.gamma2),
            ],
            "S",
            vec![
                Coupling::new("S", "L1", self.j_sl1),
                Coupling::new("L1", "L2", self.j_l12),
            ],
        )
    }
}

/// Closed-form self-energy of the two-layer chain,
/// `J²_SL₁ / (ω − ω_L₁ + iγ₁ − J²_L₁₂ / (ω − ω_L₂ + iγ₂))`.
pub fn sigma_chain(p: &ChainParams, omega: f64) -> Result<Complex64> {
    if p.gamma1 < 0.0 || p.gamma2 < 0.0 {
        return Err(Error::InvalidArgument("chain losses must be nonnegative".into()));
    }
    let inner = Complex64::new(omega - p.omega_l2, p.gamma2);
    if inner == Complex64::new(0.0, 0.0) {
        return Err(Error::singular(omega, "chain layer L2"));
    }
    let outer = Complex64::new(omega - p.omega_l1, p.gamma1) - p.j_l12 * p.j_l12 / inner;
    if outer == Complex64::new(0.0, 0.0) {
        return Err(Error::singular(omega, "chain layer L1"));
    }
    Ok(p.j_sl1 * p.j_sl1 / outer)
}

/// `1 / (ω − ω_S − Σ)`.
pub fn green_from_sigma(omega: f64, omega_s: f64, sigma: Complex64) -> Result<Complex64> {
    let d = Complex64::new(omega - omega_s, 0.0) - sigma;
    if d == Complex64::new(0.0, 0.0) {
        return Err(Error::singular(omega, "system Green's function pole"));
    }
    Ok(d.inv())
}

impl Network {
    /// `x = M(ω)⁻¹ J_SB` by pivoted LU with a conditioning guard.
    fn bath_response(&self, omega: f64) -> Result<CVector> {
        let m = self.bath_resolvent(omega).matrix;
        let lu = Lu::factor(&m);
        if lu.is_singular() || lu.rcond() < RCOND_MIN {
            return Err(Error::singular(omega, "bath resolvent"));
        }
        Ok(lu.solve(&self.system_coupling()).expect("nonsingular factors"))
    }

    pub fn sigma(&self, omega: f64) -> Result<Complex64> {
        let x = self.bath_response(omega)?;
        Ok(self.system_coupling().dot(&x))
    }

    pub fn green_system(&self, omega: f64) -> Result<Complex64> {
        green_from_sigma(omega, self.system_omega(), self.sigma(omega)?)
    }

    /// Full sample for one frequency; `output` is a bath position
    /// (see [`Network::bath_position`]).
    pub fn evaluate(&self, omega: f64, output: usize) -> Result<SelfEnergySample> {
        assert!(output < self.bath_len(), "output index out of range");
        let jsb = self.system_coupling();
        let x = self.bath_response(omega)?;
        let sigma = jsb.dot(&x);
        let g_ss = green_from_sigma(omega, self.system_omega(), sigma)?;
        let g_transfer = x[output] * g_ss;
        Ok(SelfEnergySample {
            omega,
            sigma,
            g_ss,
            g_transfer,
            gain: g_transfer.norm_sqr(),
        })
    }

    pub fn gain(&self, omega: f64, output: usize) -> Result<f64> {
        Ok(self.evaluate(omega, output)?.gain)
    }

    /// Bath position of `label`, or [`Error::UnknownNode`].
    pub fn output_position(&self, label: &str) -> Result<usize> {
        self.bath_position(label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn spectrum(&self, omegas: &[f64], output_node: &str) -> Result<SpectrumTrace> {
        let out = self.output_position(output_node)?;
        let samples = omegas
            .iter()
            .map(|&w| self.evaluate(w, out))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumTrace {
            output_node: output_node.to_string(),
            samples,
        })
    }
}

pub fn sigma_network(spec: &NetworkSpec, omega: f64) -> Result<Complex64> {
    spec.compile()?.sigma(omega)
}

pub fn green_system(spec: &NetworkSpec, omega: f64) -> Result<Complex64> {
    spec.compile()?.green_system(omega)
}

pub fn green_transfer(spec: &NetworkSpec, omega: f64, output_node: &str) -> Result<Complex64> {
    let net = spec.compile()?;
    let out = net.output_position(output_node)?;
    Ok(net.evaluate(omega, out)?.g_transfer)
}

pub fn gain(spec: &NetworkSpec, omega: f64, output_node: &str) -> Result<f64> {
    Ok(green_transfer(spec, omega, output_node)?.norm_sqr())
}

/// Dense inverse `G(ω) = (ωI − H + iΓ)⁻¹` in the `[S, B…]` basis.
///
/// Test and validation use only.
pub fn full_resolvent_oracle(spec: &NetworkSpec, omega: f64) -> Result<CMatrix> {
    let a = spec.compile()?.full_matrix(omega);
    a.try_inverse()
        .filter(|g| g.iter().all(|z| z.is_finite()))
        .ok_or_else(|| Error::singular(omega, "full resolvent"))
}
