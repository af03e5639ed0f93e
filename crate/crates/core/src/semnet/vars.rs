use std::borrow::Borrow;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{InterpretationLevel, LevelProfile};

/// Identifier of an expert goal or procedure, e.g. `CutWithMenu`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProcedureId(String);

impl ProcedureId {
    pub fn new(id: impl Into<String>) -> Self {
        Self(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ProcedureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ProcedureId {
    fn from(s: &str) -> Self {
        Self(s.to_string())
    }
}

impl Borrow<str> for ProcedureId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// Expert-supplied possibility degrees: how well each procedure stands in
/// for a given goal.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SystemLinguisticVariable(BTreeMap<ProcedureId, f64>);

impl SystemLinguisticVariable {
    pub fn new<P: Into<ProcedureId>>(pairs: impl IntoIterator<Item = (P, f64)>) -> Result<Self> {
        let var = Self(pairs.into_iter().map(|(p, d)| (p.into(), d)).collect());
        var.validate()?;
        Ok(var)
    }

    pub fn validate(&self) -> Result<()> {
        match self.0.values().find(|d| !(0.0..=1.0).contains(*d)) {
            Some(bad) => Err(Error::DegreeOutOfRange(*bad)),
            None => Ok(()),
        }
    }

    /// Degree for `p`, 0 when the procedure is not listed.
    pub fn degree(&self, p: &str) -> f64 {
        self.0.get(p).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProcedureId, f64)> {
        self.0.iter().map(|(p, d)| (p, *d))
    }

    pub fn procedures(&self) -> impl Iterator<Item = &ProcedureId> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A user term described, per expert procedure, by a level profile.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UserLinguisticVariable(BTreeMap<ProcedureId, LevelProfile>);

impl UserLinguisticVariable {
    pub fn new<P: Into<ProcedureId>>(
        entries: impl IntoIterator<Item = (P, LevelProfile)>,
    ) -> Result<Self> {
        let var = Self(entries.into_iter().map(|(p, l)| (p.into(), l)).collect());
        var.validate()?;
        Ok(var)
    }

    pub fn validate(&self) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::degenerate("user linguistic variable has no procedures"));
        }
        self.0.values().try_for_each(LevelProfile::validate)
    }

    pub fn profile(&self, p: &str) -> Option<&LevelProfile> {
        self.0.get(p)
    }

    pub fn profile_mut(&mut self, p: &str) -> Option<&mut LevelProfile> {
        self.0.get_mut(p)
    }

    pub fn insert(&mut self, p: ProcedureId, profile: LevelProfile) -> Option<LevelProfile> {
        self.0.insert(p, profile)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProcedureId, &LevelProfile)> {
        self.0.iter()
    }

    pub fn procedures(&self) -> impl Iterator<Item = &ProcedureId> {
        self.0.keys()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Per-procedure, per-level centroids.
    pub fn centroids(&self) -> CentroidTable {
        self.0
            .iter()
            .map(|(p, profile)| (p.clone(), profile.defuzzify()))
            .collect()
    }
}

/// Defuzzified form of a user variable.
pub type CentroidTable = BTreeMap<ProcedureId, BTreeMap<InterpretationLevel, f64>>;
