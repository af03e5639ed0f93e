use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::vars::{ProcedureId, SystemLinguisticVariable, UserLinguisticVariable};
use crate::error::{Error, Result};

/// Expert goals with their equivalence lists.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SystemAttribute(pub BTreeMap<ProcedureId, SystemLinguisticVariable>);

/// User terms with their fuzzy readings.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct UserAttribute(pub BTreeMap<String, UserLinguisticVariable>);

/// Either kind of attribute. Inclusion and similarity only pair like kinds.
#[derive(Debug, Clone, PartialEq)]
pub enum Attribute {
    System(SystemAttribute),
    User(UserAttribute),
}

impl Attribute {
    /// Number of linguistic variables the attribute carries.
    pub fn len(&self) -> usize {
        match self {
            Attribute::System(a) => a.0.len(),
            Attribute::User(a) => a.0.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_system(&self) -> bool {
        matches!(self, Attribute::System(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NamedAttribute {
    pub name: String,
    pub value: Attribute,
}

/// A fuzzy class, defined by an ordered list of attributes.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyClass {
    pub name: String,
    pub attributes: Vec<NamedAttribute>,
}

/// A concrete member of some class, with attribute values aligned to it.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub name: String,
    pub attributes: Vec<NamedAttribute>,
}

/// A device object, described by attributes and compared by similarity.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyObject {
    pub name: String,
    pub attributes: Vec<NamedAttribute>,
}

pub(crate) fn check_unique_names(owner: &str, attributes: &[NamedAttribute]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for attr in attributes {
        if !seen.insert(attr.name.as_str()) {
            return Err(Error::degenerate(format!(
                "attribute `{}` repeated in `{owner}`",
                attr.name
            )));
        }
    }
    Ok(())
}

impl FuzzyClass {
    pub fn new(name: impl Into<String>, attributes: Vec<NamedAttribute>) -> Result<Self> {
        let name = name.into();
        check_unique_names(&name, &attributes)?;
        Ok(Self { name, attributes })
    }
}
