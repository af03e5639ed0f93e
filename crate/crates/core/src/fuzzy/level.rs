use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::mf::TrapezoidMF;
use crate::error::{Error, Result};

/// The five graded readings of a user term with respect to an expert goal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InterpretationLevel {
    NotTrue,
    LittleTrue,
    HalfTrue,
    RatherTrue,
    QuiteTrue,
}

impl InterpretationLevel {
    pub const ALL: [InterpretationLevel; 5] = [
        InterpretationLevel::NotTrue,
        InterpretationLevel::LittleTrue,
        InterpretationLevel::HalfTrue,
        InterpretationLevel::RatherTrue,
        InterpretationLevel::QuiteTrue,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            InterpretationLevel::NotTrue => "not_true",
            InterpretationLevel::LittleTrue => "little_true",
            InterpretationLevel::HalfTrue => "half_true",
            InterpretationLevel::RatherTrue => "rather_true",
            InterpretationLevel::QuiteTrue => "quite_true",
        }
    }

    /// Position in the order, 0 for `not_true` up to 4 for `quite_true`.
    pub fn rank(self) -> usize {
        self as usize
    }

    /// Ranking weight, `rank / 4`.
    pub fn weight(self) -> f64 {
        self.rank() as f64 / 4.0
    }

    /// One step toward `quite_true`, saturating.
    pub fn raised(self) -> Self {
        Self::ALL[(self.rank() + 1).min(4)]
    }

    /// One step toward `not_true`, saturating.
    pub fn lowered(self) -> Self {
        Self::ALL[self.rank().saturating_sub(1)]
    }

    /// The default function for this level.
    pub fn default_mf(self) -> TrapezoidMF {
        let corners = match self {
            InterpretationLevel::NotTrue => [0.0, 0.0, 0.2, 0.4],
            InterpretationLevel::LittleTrue => [0.2, 0.4, 0.4, 0.6],
            InterpretationLevel::HalfTrue => [0.4, 0.6, 0.6, 0.8],
            InterpretationLevel::RatherTrue => [0.6, 0.8, 0.8, 1.0],
            // Right shoulder: the upper corner is open-ended, and the
            // universe stops at 1.
            InterpretationLevel::QuiteTrue => [0.8, 1.0, 1.0, 1.0],
        };
        TrapezoidMF::from(corners)
    }
}

impl fmt::Display for InterpretationLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InterpretationLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::unknown("interpretation level", s))
    }
}

/// A partial assignment of membership functions to interpretation levels.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LevelProfile(BTreeMap<InterpretationLevel, TrapezoidMF>);

impl LevelProfile {
    pub fn new(entries: impl IntoIterator<Item = (InterpretationLevel, TrapezoidMF)>) -> Result<Self> {
        let profile = Self(entries.into_iter().collect());
        profile.validate()?;
        Ok(profile)
    }

    pub fn single(level: InterpretationLevel, mf: TrapezoidMF) -> Self {
        Self(BTreeMap::from([(level, mf)]))
    }

    pub fn validate(&self) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::EmptyProfile);
        }
        self.0.values().try_for_each(TrapezoidMF::validate)
    }

    pub fn get(&self, level: InterpretationLevel) -> Option<&TrapezoidMF> {
        self.0.get(&level)
    }

    pub fn iter(&self) -> impl Iterator<Item = (InterpretationLevel, &TrapezoidMF)> {
        self.0.iter().map(|(l, mf)| (*l, mf))
    }

    pub fn levels(&self) -> impl Iterator<Item = InterpretationLevel> + '_ {
        self.0.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The highest level present.
    pub fn dominant(&self) -> Option<(InterpretationLevel, &TrapezoidMF)> {
        self.0.iter().next_back().map(|(l, mf)| (*l, mf))
    }

    pub fn insert(&mut self, level: InterpretationLevel, mf: TrapezoidMF) -> Option<TrapezoidMF> {
        self.0.insert(level, mf)
    }

    pub fn remove(&mut self, level: InterpretationLevel) -> Option<TrapezoidMF> {
        self.0.remove(&level)
    }

    pub fn defuzzify(&self) -> BTreeMap<InterpretationLevel, f64> {
        defuzzify_profile(self)
    }
}

/// The five default level functions.
pub fn default_levels() -> LevelProfile {
    LevelProfile(
        InterpretationLevel::ALL
            .into_iter()
            .map(|l| (l, l.default_mf()))
            .collect(),
    )
}

/// Centroid of every function in the profile, keyed by level.
pub fn defuzzify_profile(profile: &LevelProfile) -> BTreeMap<InterpretationLevel, f64> {
    profile.iter().map(|(l, mf)| (l, mf.centroid())).collect()
}
