//! JSON network documents.
//!
//! ```json
//! {"nodes": [{"label": "S", "omega_ghz": 6.0, "gamma": 0.0}, ...],
//!  "system": "S",
//!  "couplings": [{"a": "S", "b": "B1", "j_ghz": 0.05}, ...],
//!  "pump": {"edge": ["B3", "B4"], "g": 0.2, "p": 0.0, "delta_omega3": 0.0}}
//! ```
//!
//! Unknown fields are rejected. `pump` may be omitted.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{Coupling, NetworkSpec, Node, PumpSpec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub nodes: Vec<Node>,
    pub system: String,
    pub couplings: Vec<Coupling>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pump: Option<PumpSpec>,
}

impl ConfigDocument {
    pub fn new(spec: &NetworkSpec, pump: Option<&PumpSpec>) -> Self {
        ConfigDocument {
            nodes: spec.nodes.clone(),
            system: spec.system.clone(),
            couplings: spec.couplings.clone(),
            pump: pump.cloned(),
        }
    }

    pub fn into_parts(self) -> (NetworkSpec, Option<PumpSpec>) {
        (
            NetworkSpec::new(self.nodes, self.system, self.couplings),
            self.pump,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Deserializes `text`, mapping syntax errors to [`Error::Parse`] and type or
/// field errors to [`Error::Schema`] with the offending path.
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        match inner.classify() {
            serde_json::error::Category::Data => Error::Schema {
                path,
                message: inner.to_string(),
            },
            _ => Error::Parse(inner.to_string()),
        }
    })
}

/// Parses and fully validates a network document.
pub fn parse_config(text: &str) -> Result<(NetworkSpec, Option<PumpSpec>)> {
    let (spec, pump) = from_json::<ConfigDocument>(text)?.into_parts();
    spec.ensure_valid()?;
    if let Some(p) = &pump {
        let v = p.validate(&spec);
        if !v.is_empty() {
            return Err(Error::InvalidSpec(v));
        }
    }
    Ok((spec, pump))
}
