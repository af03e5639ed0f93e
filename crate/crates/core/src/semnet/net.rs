use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::attribute::{FuzzyClass, FuzzyObject, Instance};
use super::inclusion::{incl_classes, membership_instance};
use super::vars::{ProcedureId, UserLinguisticVariable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    /// class -> class
    #[serde(rename = "kind-of")]
    KindOf,
    /// instance -> class
    #[serde(rename = "is-a")]
    IsA,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::KindOf => "kind-of",
            EdgeKind::IsA => "is-a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub from: String,
    pub to: String,
    pub kind: EdgeKind,
    pub degree: f64,
}

/// The resolved network: every attribute reference has been replaced by
/// its value.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SemanticNet {
    pub procedures: BTreeSet<ProcedureId>,
    pub terms: BTreeMap<String, UserLinguisticVariable>,
    pub classes: BTreeMap<String, FuzzyClass>,
    pub instances: BTreeMap<String, Instance>,
    pub objects: BTreeMap<String, FuzzyObject>,
    pub edges: Vec<Edge>,
}

impl SemanticNet {
    /// Checks edge endpoints, edge kinds and degree ranges.
    pub fn validate(&self) -> Result<()> {
        for edge in &self.edges {
            let from_ok = match edge.kind {
                EdgeKind::KindOf => self.classes.contains_key(&edge.from),
                EdgeKind::IsA => self.instances.contains_key(&edge.from),
            };
            let kind = match edge.kind {
                EdgeKind::KindOf => "class",
                EdgeKind::IsA => "instance",
            };
            if !from_ok {
                return Err(self.edge_error(edge, Error::unknown(kind, &edge.from)));
            }
            if !self.classes.contains_key(&edge.to) {
                return Err(self.edge_error(edge, Error::unknown("class", &edge.to)));
            }
            if !(0.0..=1.0).contains(&edge.degree) {
                return Err(self.edge_error(edge, Error::DegreeOutOfRange(edge.degree)));
            }
        }
        Ok(())
    }

    fn edge_error(&self, edge: &Edge, source: Error) -> Error {
        Error::Edge {
            from: edge.from.clone(),
            to: edge.to.clone(),
            source: Box::new(source),
        }
    }

    fn compute_degree(&self, edge: &Edge) -> Result<f64> {
        let target = self
            .classes
            .get(&edge.to)
            .ok_or_else(|| Error::unknown("class", &edge.to))?;
        match edge.kind {
            EdgeKind::KindOf => {
                let source = self
                    .classes
                    .get(&edge.from)
                    .ok_or_else(|| Error::unknown("class", &edge.from))?;
                incl_classes(source, target)
            }
            EdgeKind::IsA => {
                let source = self
                    .instances
                    .get(&edge.from)
                    .ok_or_else(|| Error::unknown("instance", &edge.from))?;
                membership_instance(source, target)
            }
        }
    }
}

/// Recomputes every kind-of and is-a degree from the attributes.
pub fn grade_network(net: &SemanticNet) -> Result<SemanticNet> {
    let edges = net
        .edges
        .iter()
        .map(|edge| {
            net.compute_degree(edge)
                .map(|degree| Edge {
                    degree,
                    ..edge.clone()
                })
                .map_err(|e| net.edge_error(edge, e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SemanticNet {
        edges,
        ..net.clone()
    })
}
