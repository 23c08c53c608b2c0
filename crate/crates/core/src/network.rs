//! Network data model and matrix assembly.
//!
//! A network is a set of labeled modes with real frequencies, bath losses and
//! real symmetric couplings. Everything downstream works in the
//! single-excitation sector, so the Hamiltonian is just the dense matrix
//! `H_ii = ω_i`, `H_ij = J_ij`, and the resolvent is `ωI − H + iΓ` with the
//! loss matrix `Γ = diag(γ_i)` acting on bath nodes only.

use std::collections::HashMap;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, CVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Node {
    pub label: String,
    #[serde(rename = "omega_ghz")]
    pub omega: f64,
    /// Loss half-width (HWHM). Must be zero on the system node.
    pub gamma: f64,
}

impl Node {
    pub fn new(label: impl Into<String>, omega: f64, gamma: f64) -> Self {
        Node {
            label: label.into(),
            omega,
            gamma,
        }
    }
}

/// Undirected edge `a - b` with real coupling `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Coupling {
    pub a: String,
    pub b: String,
    #[serde(rename = "j_ghz")]
    pub j: f64,
}

impl Coupling {
    pub fn new(a: impl Into<String>, b: impl Into<String>, j: f64) -> Self {
        Coupling {
            a: a.into(),
            b: b.into(),
            j,
        }
    }

    pub fn joins(&self, a: &str, b: &str) -> bool {
        (self.a == a && self.b == b) || (self.a == b && self.b == a)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSpec {
    /// Declaration order. Bath nodes keep this order in every matrix.
    pub nodes: Vec<Node>,
    pub system: String,
    pub couplings: Vec<Coupling>,
}

/// A single broken invariant of a [`NetworkSpec`] or [`PumpSpec`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NoNodes,
    DuplicateLabel(String),
    MissingSystem(String),
    NoBathNodes,
    NonFinite { item: String },
    NegativeGamma { label: String, gamma: f64 },
    SystemLoss { label: String, gamma: f64 },
    SelfEdge(String),
    DuplicateEdge { a: String, b: String },
    UnknownEndpoint { label: String },
    NegativePump(f64),
    MissingPumpEdge { a: String, b: String },
    MissingShiftNode(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoNodes => write!(f, "network has no nodes"),
            Violation::DuplicateLabel(l) => write!(f, "duplicate node label `{l}`"),
            Violation::MissingSystem(l) => write!(f, "system node `{l}` is not declared"),
            Violation::NoBathNodes => write!(f, "network has no bath nodes"),
            Violation::NonFinite { item } => write!(f, "{item} is not finite"),
            Violation::NegativeGamma { label, gamma } => {
                write!(f, "gamma of `{label}` is negative ({gamma})")
            }
            Violation::SystemLoss { label, gamma } => {
                write!(f, "system node `{label}` must be lossless (gamma = {gamma})")
            }
            Violation::SelfEdge(l) => write!(f, "self-edge on `{l}`"),
            Violation::DuplicateEdge { a, b } => write!(f, "duplicate edge `{a}`–`{b}`"),
            Violation::UnknownEndpoint { label } => {
                write!(f, "edge endpoint `{label}` is not a declared node")
            }
            Violation::NegativePump(p) => write!(f, "pump amplitude is negative ({p})"),
            Violation::MissingPumpEdge { a, b } => {
                write!(f, "pump edge `{a}`–`{b}` is not a coupling of the network")
            }
            Violation::MissingShiftNode(l) => {
                write!(f, "delta_omega3 needs a node labeled `{l}`")
            }
        }
    }
}

impl NetworkSpec {
    pub fn new(nodes: Vec<Node>, system: impl Into<String>, couplings: Vec<Coupling>) -> Self {
        NetworkSpec {
            nodes,
            system: system.into(),
            couplings,
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    pub fn node(&self, label: &str) -> Option<&Node> {
        self.nodes.iter().find(|n| n.label == label)
    }

    pub fn node_mut(&mut self, label: &str) -> Option<&mut Node> {
        self.nodes.iter_mut().find(|n| n.label == label)
    }

    pub fn coupling(&self, a: &str, b: &str) -> Option<&Coupling> {
        self.couplings.iter().find(|c| c.joins(a, b))
    }

    pub fn coupling_mut(&mut self, a: &str, b: &str) -> Option<&mut Coupling> {
        self.couplings.iter_mut().find(|c| c.joins(a, b))
    }

    /// Sets `J_ab`, adding the edge when it is not declared yet.
    pub fn set_coupling(&mut self, a: &str, b: &str, j: f64) {
        match self.coupling_mut(a, b) {
            Some(c) => c.j = j,
            None => self.couplings.push(Coupling::new(a, b, j)),
        }
    }

    /// Every invariant violation; empty iff the spec is well-formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            out.push(Violation::NoNodes);
            return out;
        }
        let mut seen: HashMap<&str, usize> = HashMap::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if seen.insert(n.label.as_str(), i).is_some() {
                out.push(Violation::DuplicateLabel(n.label.clone()));
            }
            if !n.omega.is_finite() {
                out.push(Violation::NonFinite {
                    item: format!("omega of `{}`", n.label),
                });
            }
            if !n.gamma.is_finite() {
                out.push(Violation::NonFinite {
                    item: format!("gamma of `{}`", n.label),
                });
            } else if n.label == self.system {
                if n.gamma != 0.0 {
                    out.push(Violation::SystemLoss {
                        label: n.label.clone(),
                        gamma: n.gamma,
                    });
                }
            } else if n.gamma < 0.0 {
                out.push(Violation::NegativeGamma {
                    label: n.label.clone(),
                    gamma: n.gamma,
                });
            }
        }
        if !seen.contains_key(self.system.as_str()) {
            out.push(Violation::MissingSystem(self.system.clone()));
        } else if self.nodes.len() < 2 {
            out.push(Violation::NoBathNodes);
        }

        let mut edges: Vec<(&str, &str)> = Vec::new();
        for c in &self.couplings {
            for end in [&c.a, &c.b] {
                if !seen.contains_key(end.as_str()) {
                    out.push(Violation::UnknownEndpoint { label: end.clone() });
                }
            }
            if !c.j.is_finite() {
                out.push(Violation::NonFinite {
                    item: format!("coupling `{}`–`{}`", c.a, c.b),
                });
            }
            if c.a == c.b {
                out.push(Violation::SelfEdge(c.a.clone()));
                continue;
            }
            let key = if c.a < c.b {
                (c.a.as_str(), c.b.as_str())
            } else {
                (c.b.as_str(), c.a.as_str())
            };
            if edges.contains(&key) {
                out.push(Violation::DuplicateEdge {
                    a: c.a.clone(),
                    b: c.b.clone(),
                });
            } else {
                edges.push(key);
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidSpec(v))
        }
    }

    /// Validates and lowers to the dense form used by the solvers.
    pub fn compile(&self) -> Result<Network> {
        self.ensure_valid()?;
        Ok(Network::from_valid(self))
    }
}

/// Validated network in dense form, basis ordered as `[S, B₁, …, B_n]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    labels: Vec<String>,
    omega: Vec<f64>,
    gamma: Vec<f64>,
    /// Real symmetric coupling matrix with zero diagonal.
    coupling: DMatrix<f64>,
}

impl Network {
    fn from_valid(spec: &NetworkSpec) -> Self {
        let sys = spec.index_of(&spec.system).expect("validated");
        let order: Vec<usize> = std::iter::once(sys)
            .chain((0..spec.nodes.len()).filter(|&i| i != sys))
            .collect();
        let pos: HashMap<&str, usize> = order
            .iter()
            .enumerate()
            .map(|(k, &i)| (spec.nodes[i].label.as_str(), k))
            .collect();
        let n = order.len();
        let mut coupling = DMatrix::zeros(n, n);
        for c in &spec.couplings {
            let (a, b) = (pos[c.a.as_str()], pos[c.b.as_str()]);
            coupling[(a, b)] = c.j;
            coupling[(b, a)] = c.j;
        }
        Network {
            labels: order.iter().map(|&i| spec.nodes[i].label.clone()).collect(),
            omega: order.iter().map(|&i| spec.nodes[i].omega).collect(),
            gamma: order
                .iter()
                .map(|&i| if i == sys { 0.0 } else { spec.nodes[i].gamma })
                .collect(),
            coupling,
        }
    }

    /// Labels in matrix order; entry 0 is the system.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bath_len(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn system_omega(&self) -> f64 {
        self.omega[0]
    }

    /// Position of `label` within the bath block (0-based), if it is a bath node.
    pub fn bath_position(&self, label: &str) -> Option<usize> {
        self.labels[1..].iter().position(|l| l == label)
    }

    /// Coupling vector `J_SB` over bath nodes.
    pub fn system_coupling(&self) -> CVector {
        CVector::from_iterator(
            self.bath_len(),
            self.coupling.row(0).iter().skip(1).map(|&j| Complex64::new(j, 0.0)),
        )
    }

    #[inline]
    fn entry(&self, omega: f64, i: usize, j: usize) -> Complex64 {
        if i == j {
            Complex64::new(omega - self.omega[i], self.gamma[i])
        } else {
            Complex64::new(-self.coupling[(i, j)], 0.0)
        }
    }

    fn assemble(&self, omega: f64, offset: usize) -> CMatrix {
        let n = self.labels.len() - offset;
        CMatrix::from_fn(n, n, |i, j| self.entry(omega, i + offset, j + offset))
    }

    /// Bath resolvent `M(ω) = ωI − H_B + iΓ`.
    pub fn bath_resolvent(&self, omega: f64) -> BathResolvent {
        BathResolvent {
            matrix: self.assemble(omega, 1),
            omega,
        }
    }

    /// Full `ωI − H (+ iΓ)` in the `[S, B…]` basis.
    pub fn full_matrix(&self, omega: f64) -> CMatrix {
        self.assemble(omega, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BathResolvent {
    pub matrix: CMatrix,
    pub omega: f64,
}

pub fn validate(spec: &NetworkSpec) -> Vec<Violation> {
    spec.validate()
}

pub fn build_bath_resolvent(spec: &NetworkSpec, omega: f64) -> Result<BathResolvent> {
    Ok(spec.compile()?.bath_resolvent(omega))
}

pub fn build_full_matrix(spec: &NetworkSpec, omega: f64) -> Result<CMatrix> {
    Ok(spec.compile()?.full_matrix(omega))
}

/// Parametric drive modeled as a linear dressing of one coupling,
/// `J_eff = J + g·P`, plus an optional static shift of node `B3`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PumpSpec {
    #[serde(default = "PumpSpec::default_edge")]
    pub edge: (String, String),
    pub g: f64,
    #[serde(default)]
    pub p: f64,
    #[serde(default)]
    pub delta_omega3: f64,
}

/// Node that receives `delta_omega3`.
pub const PUMP_SHIFT_NODE: &str = "B3";

impl PumpSpec {
    fn default_edge() -> (String, String) {
        ("B3".into(), "B4".into())
    }

    /// Pump on the default `B3–B4` edge with zero amplitude.
    pub fn new(g: f64) -> Self {
        PumpSpec {
            edge: Self::default_edge(),
            g,
            p: 0.0,
            delta_omega3: 0.0,
        }
    }

    pub fn with_amplitude(&self, p: f64) -> Self {
        PumpSpec { p, ..self.clone() }
    }

    pub fn validate(&self, spec: &NetworkSpec) -> Vec<Violation> {
        let mut out = Vec::new();
        if !self.p.is_finite() || !self.g.is_finite() || !self.delta_omega3.is_finite() {
            out.push(Violation::NonFinite {
                item: "pump parameter".into(),
            });
        }
        if self.p < 0.0 {
            out.push(Violation::NegativePump(self.p));
        }
        let (a, b) = &self.edge;
        if spec.coupling(a, b).is_none() {
            out.push(Violation::MissingPumpEdge {
                a: a.clone(),
                b: b.clone(),
            });
        }
        if self.delta_omega3 != 0.0 && spec.node(PUMP_SHIFT_NODE).is_none() {
            out.push(Violation::MissingShiftNode(PUMP_SHIFT_NODE.into()));
        }
        out
    }

    /// Dressed coupling value for a bare coupling `j`.
    pub fn dressed(&self, j: f64) -> f64 {
        j + self.g * self.p
    }
}

/// Returns a copy of `spec` with the pump applied; `spec` is left untouched.
pub fn apply_pump(spec: &NetworkSpec, pump: &PumpSpec) -> Result<NetworkSpec> {
    let v = pump.validate(spec);
    if !v.is_empty() {
        return Err(Error::InvalidSpec(v));
    }
    let mut out = spec.clone();
    let (a, b) = &pump.edge;
    let c = out.coupling_mut(a, b).expect("checked above");
    c.j = pump.dressed(c.j);
    if pump.delta_omega3 != 0.0 {
        out.node_mut(PUMP_SHIFT_NODE).expect("checked above").omega += pump.delta_omega3;
    }
    Ok(out)
}
