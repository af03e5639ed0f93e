//! Similarity between linguistic variables, attributes and objects, and the
//! threshold partition of a network's objects.
//!
//! User variables are reduced to per-level centroids first. For every
//! procedure both variables describe, the intersection value is the mean of
//! the per-level minima and the union value the mean of the per-level
//! maxima, over the levels both sides define. The similarity is the ratio
//! of the largest intersection value to the largest union value.

mod partition;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use partition::{partition, Partition, DEFAULT_THETA};

use crate::error::{Error, Result};
use crate::semnet::{
    Attribute, CentroidTable, FuzzyObject, ProcedureId, SystemLinguisticVariable,
    UserLinguisticVariable,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProcedureSimilarity {
    pub procedure: ProcedureId,
    pub intersection: f64,
    pub union: f64,
}

/// Everything computed on the way to a user-variable similarity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityReport {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub left: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub right: String,
    pub procedures: Vec<ProcedureSimilarity>,
    pub ratio: f64,
    pub left_centroids: CentroidTable,
    pub right_centroids: CentroidTable,
}

impl SimilarityReport {
    pub fn labelled(mut self, left: impl Into<String>, right: impl Into<String>) -> Self {
        self.left = left.into();
        self.right = right.into();
        self
    }

    pub fn procedure(&self, p: &str) -> Option<&ProcedureSimilarity> {
        self.procedures.iter().find(|s| s.procedure.as_str() == p)
    }

    /// Plain-text table: per-procedure intersection and union, then the ratio.
    /// Values are shown with 4 decimals.
    pub fn render_table(&self) -> String {
        use std::fmt::Write;

        let left = if self.left.is_empty() { "G" } else { &self.left };
        let right = if self.right.is_empty() { "H" } else { &self.right };
        let mut out = String::new();
        let _ = writeln!(out, "centroids");
        for (name, table) in [(left, &self.left_centroids), (right, &self.right_centroids)] {
            for (p, levels) in table {
                let cells: Vec<String> = levels
                    .iter()
                    .map(|(l, c)| format!("{l}={c:.4}"))
                    .collect();
                let _ = writeln!(out, "  {name:<12} {p:<16} {}", cells.join(" "));
            }
        }
        let _ = writeln!(out, "{:<16} {:>12} {:>12}", "procedure", "intersection", "union");
        for s in &self.procedures {
            let _ = writeln!(
                out,
                "{:<16} {:>12.4} {:>12.4}",
                s.procedure.as_str(),
                s.intersection,
                s.union
            );
        }
        let _ = writeln!(out, "Sim({left}, {right}) = {:.4}", self.ratio);
        out
    }
}

/// Max-min similarity ratio between two user variables.
pub fn sim_user_vars(g: &UserLinguisticVariable, h: &UserLinguisticVariable) -> Result<SimilarityReport> {
    let left_centroids = g.centroids();
    let right_centroids = h.centroids();
    let mut procedures = Vec::new();
    for (p, gl) in &left_centroids {
        let Some(hl) = right_centroids.get(p) else {
            continue;
        };
        let pairs: Vec<(f64, f64)> = gl
            .iter()
            .filter_map(|(l, cg)| hl.get(l).map(|ch| (*cg, *ch)))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        let n = pairs.len() as f64;
        procedures.push(ProcedureSimilarity {
            procedure: p.clone(),
            intersection: pairs.iter().map(|(x, y)| x.min(*y)).sum::<f64>() / n,
            union: pairs.iter().map(|(x, y)| x.max(*y)).sum::<f64>() / n,
        });
    }
    if procedures.is_empty() {
        return Err(Error::NoSharedProcedures);
    }
    let top_intersection = procedures.iter().map(|s| s.intersection).fold(0.0, f64::max);
    let top_union = procedures.iter().map(|s| s.union).fold(0.0, f64::max);
    if top_union <= 0.0 {
        return Err(Error::degenerate("union of the two variables is empty"));
    }
    Ok(SimilarityReport {
        left: String::new(),
        right: String::new(),
        procedures,
        ratio: top_intersection / top_union,
        left_centroids,
        right_centroids,
    })
}

/// `max_p min(u_p, v_p) / max_p max(u_p, v_p)` on possibility degrees.
pub fn sim_system_vars(u: &SystemLinguisticVariable, v: &SystemLinguisticVariable) -> Result<f64> {
    let mut degrees: BTreeMap<&str, (f64, f64)> = BTreeMap::new();
    for (p, d) in u.iter() {
        degrees.entry(p.as_str()).or_default().0 = d;
    }
    for (p, d) in v.iter() {
        degrees.entry(p.as_str()).or_default().1 = d;
    }
    let top_min = degrees.values().map(|(x, y)| x.min(*y)).fold(0.0, f64::max);
    let top_max = degrees.values().map(|(x, y)| x.max(*y)).fold(0.0, f64::max);
    if top_max <= 0.0 {
        return Err(Error::degenerate("both system variables are empty"));
    }
    Ok(top_min / top_max)
}

/// Mean similarity over positionally paired linguistic values.
pub fn sim_attributes(a: &Attribute, b: &Attribute) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::degenerate("attribute has no linguistic values"));
    }
    let sims: Vec<f64> = match (a, b) {
        (Attribute::System(x), Attribute::System(y)) => x
            .0
            .values()
            .zip(y.0.values())
            .map(|(u, v)| sim_system_vars(u, v))
            .collect::<Result<_>>()?,
        (Attribute::User(x), Attribute::User(y)) => x
            .0
            .values()
            .zip(y.0.values())
            .map(|(g, h)| sim_user_vars(g, h).map(|r| r.ratio))
            .collect::<Result<_>>()?,
        _ => return Err(Error::AttributeKindMismatch),
    };
    Ok(sims.iter().sum::<f64>() / sims.len() as f64)
}

/// Minimum attribute similarity between two objects.
pub fn sim_objects(o: &FuzzyObject, o2: &FuzzyObject) -> Result<f64> {
    if o.attributes.len() != o2.attributes.len() {
        return Err(Error::LengthMismatch {
            left: o.attributes.len(),
            right: o2.attributes.len(),
        });
    }
    if o.attributes.is_empty() {
        return Err(Error::degenerate("object has no attributes"));
    }
    o.attributes
        .iter()
        .zip(&o2.attributes)
        .map(|(x, y)| sim_attributes(&x.value, &y.value))
        .try_fold(1.0_f64, |acc, s| s.map(|s| acc.min(s)))
}
