//! The fuzzy semantic network and graded inclusion.
//!
//! Kind-of edges are graded by class inclusion and is-a edges by instance
//! membership; both average attribute-level inclusions, which in turn
//! average variable-level inclusions over positionally paired variables.

mod attribute;
mod inclusion;
mod net;
mod vars;

pub use attribute::{
    Attribute, FuzzyClass, FuzzyObject, Instance, NamedAttribute, SystemAttribute, UserAttribute,
};
pub use inclusion::{
    incl_attributes, incl_classes, incl_system_vars, incl_user_vars, membership_instance,
};
pub use net::{grade_network, Edge, EdgeKind, SemanticNet};
pub use vars::{CentroidTable, ProcedureId, SystemLinguisticVariable, UserLinguisticVariable};
