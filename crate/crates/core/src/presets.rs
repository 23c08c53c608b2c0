//! The six-node amplifier network and its named parameter sets.
//!
//! Node order is `S, B1, B2, B3, B4, B5`. Layer 1 is `{B1, B2}`, layer 2 is
//! the triangle `{B3, B4, B5}`. Coupling groups are listed in a fixed order:
//!
//! * system–bath: `[S–B1, S–B2]`
//! * inter-layer: `[B1–B3, B1–B4, B2–B4, B2–B5]`
//! * layer-2 triangle: `[B3–B4, B4–B5, B3–B5]`

use crate::error::{Error, Result};
use crate::network::{Coupling, NetworkSpec, Node, PumpSpec};
use crate::self_energy::DEFAULT_OUTPUT;

pub const SYSTEM: &str = "S";
pub const LAYER1: [&str; 2] = ["B1", "B2"];
pub const LAYER2: [&str; 3] = ["B3", "B4", "B5"];

pub const BASELINE_OMEGA: [f64; 6] = [6.0, 6.5, 6.7, 7.0, 7.2, 7.4];
pub const GAMMA_LOW: f64 = 1e-3;
pub const GAMMA_HIGH: f64 = 2e-2;

pub const PRESET_NAMES: [&str; 12] = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "FIG1", "FIG2", "FIG3",
];

const SB_EDGES: [(&str, &str); 2] = [("S", "B1"), ("S", "B2")];
const BRIDGE_EDGE: (&str, &str) = ("B1", "B2");
const INTER_EDGES: [(&str, &str); 4] = [("B1", "B3"), ("B1", "B4"), ("B2", "B4"), ("B2", "B5")];
const TRIANGLE_EDGES: [(&str, &str); 3] = [("B3", "B4"), ("B4", "B5"), ("B3", "B5")];

/// Which coupling group an edge belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingGroup {
    SystemBath,
    Bridge,
    InterLayer,
    Triangle,
}

/// Classifies an edge by the layers of its endpoints.
pub fn coupling_group(system: &str, c: &Coupling) -> Option<CouplingGroup> {
    let in1 = |l: &str| LAYER1.contains(&l);
    let in2 = |l: &str| LAYER2.contains(&l);
    let (a, b) = (c.a.as_str(), c.b.as_str());
    if a == system || b == system {
        Some(CouplingGroup::SystemBath)
    } else if in1(a) && in1(b) {
        Some(CouplingGroup::Bridge)
    } else if (in1(a) && in2(b)) || (in2(a) && in1(b)) {
        Some(CouplingGroup::InterLayer)
    } else if in2(a) && in2(b) {
        Some(CouplingGroup::Triangle)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Preset {
    pub name: String,
    pub spec: NetworkSpec,
    pub pump: Option<PumpSpec>,
    pub output_node: String,
}

/// One row of the configuration table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub omega: [f64; 6],
    pub j_sb: [f64; 2],
    pub j_b1b2: f64,
    pub j_l1l2: [f64; 4],
    pub j_l2: [f64; 3],
    pub g: f64,
}

const fn row(
    omega: [f64; 6],
    j_sb: [f64; 2],
    j_b1b2: f64,
    j_l1l2: [f64; 4],
    j_l2: [f64; 3],
    g: f64,
) -> TableRow {
    TableRow {
        omega,
        j_sb,
        j_b1b2,
        j_l1l2,
        j_l2,
        g,
    }
}

const B: [f64; 6] = BASELINE_OMEGA;

const C1: TableRow = row(B, [0.05, 0.05], 0.03, [0.03; 4], [0.03; 3], 0.0);
const C2: TableRow = row(B, [0.10, 0.10], 0.20, [0.10, 0.08, 0.00, 0.00], [0.03; 3], 0.0);
const C3: TableRow = row(B, [0.16, 0.16], 0.30, [0.35, 0.30, 0.20, 0.20], [0.08, 0.06, 0.05], 0.0);
const C4: TableRow = row(
    [6.0, 6.5, 6.7, 7.015, 7.2, 7.4],
    [0.26, 0.24],
    0.40,
    [0.45, 0.40, 0.35, 0.35],
    [0.10, 0.08, 0.07],
    0.20,
);
const C5: TableRow = row(B, [0.26, 0.26], 0.45, [0.50, 0.45, 0.40, 0.40], [0.12, 0.10, 0.08], 0.20);
const C6: TableRow = row(
    [6.0, 6.49, 6.71, 7.015, 7.20, 7.40],
    [0.32, 0.16],
    0.50,
    [0.50, 0.42, 0.36, 0.36],
    [0.12, 0.09, 0.08],
    0.30,
);
const C7: TableRow = row(
    [6.0, 6.5, 6.7, 7.010, 7.200, 6.990],
    [0.22, 0.22],
    0.40,
    [0.42, 0.38, 0.28, 0.28],
    [0.14, 0.02, 0.10],
    0.0,
);
const C8: TableRow = row(
    [6.020, 6.520, 6.720, 7.020, 7.200, 7.400],
    [0.24, 0.24],
    0.45,
    [0.48, 0.44, 0.34, 0.34],
    [0.10, 0.08, 0.06],
    0.0,
);
const C9: TableRow = row(
    [6.0, 6.505, 6.705, 7.035, 7.230, 7.410],
    [0.32, 0.32],
    0.55,
    [0.60, 0.55, 0.50, 0.50],
    [0.16, 0.14, 0.12],
    0.55,
);
// Transparent regime: weak system-bath links, nearly inactive triangle.
const FIG1: TableRow = row(B, [0.005, 0.01], 0.05, [0.05; 4], [0.01; 3], 0.0);
// Strong bridge and inter-layer links with the pump on B3-B4.
const FIG3: TableRow = row(B, [0.30, 0.26], 0.4, [0.45; 4], [0.15; 3], 0.2);

impl TableRow {
    /// Six-node network with loss `gamma1` on layer 1 and `gamma2` on layer 2.
    pub fn network(&self, gamma1: f64, gamma2: f64) -> NetworkSpec {
        let labels = ["S", "B1", "B2", "B3", "B4", "B5"];
        let nodes = labels
            .iter()
            .zip(self.omega)
            .map(|(&l, w)| {
                let gamma = if l == SYSTEM {
                    0.0
                } else if LAYER1.contains(&l) {
                    gamma1
                } else {
                    gamma2
                };
                Node::new(l, w, gamma)
            })
            .collect();
        let mut couplings = Vec::with_capacity(10);
        let mut push = |edges: &[(&str, &str)], js: &[f64]| {
            for (&(a, b), &j) in edges.iter().zip(js) {
                couplings.push(Coupling::new(a, b, j));
            }
        };
        push(&SB_EDGES, &self.j_sb);
        push(&[BRIDGE_EDGE], &[self.j_b1b2]);
        push(&INTER_EDGES, &self.j_l1l2);
        push(&TRIANGLE_EDGES, &self.j_l2);
        NetworkSpec::new(nodes, SYSTEM, couplings)
    }
}

pub fn table_row(name: &str) -> Result<TableRow> {
    Ok(match name {
        "C1" => C1,
        "C2" => C2,
        "C3" | "FIG2" => C3,
        "C4" => C4,
        "C5" => C5,
        "C6" => C6,
        "C7" => C7,
        "C8" => C8,
        "C9" => C9,
        "FIG1" => FIG1,
        "FIG3" => FIG3,
        _ => return Err(Error::UnknownPreset(name.to_string())),
    })
}

/// Named parameter set. `FIG2` shares the `C3` network.
pub fn preset(name: &str) -> Result<Preset> {
    let r = table_row(name)?;
    let gamma2 = if name == "FIG3" { GAMMA_HIGH } else { GAMMA_LOW };
    Ok(Preset {
        name: name.to_string(),
        spec: r.network(GAMMA_LOW, gamma2),
        pump: Some(PumpSpec::new(r.g)),
        output_node: DEFAULT_OUTPUT.to_string(),
    })
}

pub fn all_presets() -> Vec<Preset> {
    PRESET_NAMES
        .iter()
        .map(|n| preset(n).expect("known preset"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(p: &Preset, a: &str, b: &str) -> f64 {
        p.spec.coupling(a, b).unwrap().j
    }

    #[test]
    fn every_preset_is_valid() {
        for p in all_presets() {
            assert!(p.spec.validate().is_empty(), "{}", p.name);
            assert!(p.pump.as_ref().unwrap().validate(&p.spec).is_empty());
        }
        assert!(matches!(preset("C10"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn c1_row() {
        let p = preset("C1").unwrap();
        assert_eq!([j(&p, "S", "B1"), j(&p, "S", "B2")], [0.05, 0.05]);
        assert_eq!(j(&p, "B1", "B2"), 0.03);
        for (a, b) in INTER_EDGES.iter().chain(&TRIANGLE_EDGES) {
            assert_eq!(j(&p, a, b), 0.03);
        }
        assert_eq!(p.pump.unwrap().g, 0.0);
        assert!(p.spec.nodes.iter().skip(1).all(|n| n.gamma == GAMMA_LOW));
    }

    #[test]
    fn c6_row() {
        let p = preset("C6").unwrap();
        let w: Vec<f64> = p.spec.nodes.iter().map(|n| n.omega).collect();
        assert_eq!(w, vec![6.0, 6.49, 6.71, 7.015, 7.20, 7.40]);
        assert_eq!([j(&p, "S", "B1"), j(&p, "S", "B2")], [0.32, 0.16]);
        assert_eq!(p.pump.unwrap().g, 0.30);
    }

    #[test]
    fn fig3_setup() {
        let p = preset("FIG3").unwrap();
        assert_eq!(j(&p, "B1", "B2"), 0.4);
        assert_eq!([j(&p, "S", "B1"), j(&p, "S", "B2")], [0.30, 0.26]);
        assert_eq!(j(&p, "B3", "B4"), 0.15);
        assert_eq!(p.spec.node("B1").unwrap().gamma, 1e-3);
        assert_eq!(p.spec.node("B4").unwrap().gamma, 2e-2);
        assert_eq!(p.pump.as_ref().unwrap().g, 0.2);
        assert_eq!(p.pump.unwrap().edge, ("B3".to_string(), "B4".to_string()));
    }

    #[test]
    fn groups() {
        let s = preset("C1").unwrap().spec;
        let count = |g| s.couplings.iter().filter(|c| coupling_group("S", c) == Some(g)).count();
        assert_eq!(count(CouplingGroup::SystemBath), 2);
        assert_eq!(count(CouplingGroup::Bridge), 1);
        assert_eq!(count(CouplingGroup::InterLayer), 4);
        assert_eq!(count(CouplingGroup::Triangle), 3);
    }
}
