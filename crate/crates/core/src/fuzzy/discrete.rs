use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A fuzzy subset of a finite universe of named elements.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteFuzzySet {
    degrees: BTreeMap<String, f64>,
}

impl DiscreteFuzzySet {
    pub fn new<K: Into<String>>(degrees: impl IntoIterator<Item = (K, f64)>) -> Result<Self> {
        let degrees: BTreeMap<String, f64> =
            degrees.into_iter().map(|(k, v)| (k.into(), v)).collect();
        if degrees.is_empty() {
            return Err(Error::degenerate("empty universe"));
        }
        if let Some(bad) = degrees.values().find(|d| !(0.0..=1.0).contains(*d)) {
            return Err(Error::DegreeOutOfRange(*bad));
        }
        Ok(Self { degrees })
    }

    pub fn degree(&self, element: &str) -> Option<f64> {
        self.degrees.get(element).copied()
    }

    pub fn universe(&self) -> impl Iterator<Item = &str> {
        self.degrees.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.degrees.iter().map(|(k, v)| (k.as_str(), *v))
    }

    fn same_universe(&self, other: &Self) -> bool {
        self.degrees.len() == other.degrees.len()
            && self.degrees.keys().zip(other.degrees.keys()).all(|(x, y)| x == y)
    }
}

/// Graded inclusion of `a` in `b`: `sum(min(a, b)) / sum(a)`.
pub fn discrete_inclusion(a: &DiscreteFuzzySet, b: &DiscreteFuzzySet) -> Result<f64> {
    if !a.same_universe(b) {
        return Err(Error::UniverseMismatch);
    }
    let total: f64 = a.degrees.values().sum();
    if total <= 0.0 {
        return Err(Error::degenerate("included set has zero cardinality"));
    }
    let shared: f64 = a
        .degrees
        .values()
        .zip(b.degrees.values())
        .map(|(x, y)| x.min(*y))
        .sum();
    Ok(shared / total)
}
