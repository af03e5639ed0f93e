//! Knowledge-base documents: format, validation, persistence, the built-in
//! sample and the append-only session log.
//!
//! A document is UTF-8 JSON. Attributes are declared once, by name, and
//! referenced by name from objects, classes and instances; user attributes
//! list the user terms they group. Membership functions are written as
//! `[a,b,c,d]` arrays.

mod canonical;
mod log;
mod sample;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use canonical::to_canonical_string;
pub use log::{read_log, replay, LogEvent, SessionLog, SessionLogRecord};
pub use sample::{builtin_sample_kb, SAMPLE_PATH};

use crate::error::{Error, Result, ValidationIssue};
use crate::semnet::{
    grade_network, Attribute, Edge, EdgeKind, FuzzyClass, FuzzyObject, Instance, NamedAttribute,
    ProcedureId, SemanticNet, SystemAttribute, UserAttribute, UserLinguisticVariable,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnowledgeBase {
    pub format_version: u32,
    pub procedures: BTreeSet<ProcedureId>,
    #[serde(default)]
    pub terms: BTreeMap<String, UserLinguisticVariable>,
    #[serde(default)]
    pub system_attributes: BTreeMap<String, SystemAttribute>,
    /// attribute name -> user terms
    #[serde(default)]
    pub user_attributes: BTreeMap<String, BTreeSet<String>>,
    /// object id -> attribute names
    #[serde(default)]
    pub objects: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub classes: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub instances: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub edges: Vec<Edge>,
}

impl Default for KnowledgeBase {
    fn default() -> Self {
        Self {
            format_version: FORMAT_VERSION,
            procedures: BTreeSet::new(),
            terms: BTreeMap::new(),
            system_attributes: BTreeMap::new(),
            user_attributes: BTreeMap::new(),
            objects: BTreeMap::new(),
            classes: BTreeMap::new(),
            instances: BTreeMap::new(),
            edges: Vec::new(),
        }
    }
}

struct Issues(Vec<ValidationIssue>);

impl Issues {
    fn push(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.0.push(ValidationIssue {
            path: path.into(),
            message: message.into(),
        });
    }
}

impl KnowledgeBase {
    /// Every integrity problem in the document, in one pass.
    pub fn issues(&self) -> Vec<ValidationIssue> {
        let mut issues = Issues(Vec::new());
        let out = &mut issues;

        if self.format_version != FORMAT_VERSION {
            out.push(
                "format_version",
                format!("unsupported version {} (expected {FORMAT_VERSION})", self.format_version),
            );
        }
        for p in &self.procedures {
            if p.as_str().trim().is_empty() {
                out.push("procedures", "empty procedure id");
            }
        }
        self.check_terms(out);
        self.check_system_attributes(out);
        self.check_user_attributes(out);
        for (section, entries) in [
            ("objects", &self.objects),
            ("classes", &self.classes),
            ("instances", &self.instances),
        ] {
            self.check_attribute_lists(section, entries, out);
        }
        self.check_edges(out);
        issues.0
    }

    fn check_procedure(&self, path: &str, p: &ProcedureId, out: &mut Issues) {
        if !self.procedures.contains(p) {
            out.push(path, format!("unknown procedure `{p}`"));
        }
    }

    fn check_terms(&self, out: &mut Issues) {
        for (term, var) in &self.terms {
            let base = format!("terms/{term}");
            if term.trim().is_empty() {
                out.push(&base, "empty term id");
            }
            if var.is_empty() {
                out.push(&base, "term has no procedure links");
            }
            for (p, profile) in var.iter() {
                let path = format!("{base}/{p}");
                self.check_procedure(&path, p, out);
                if profile.is_empty() {
                    out.push(&path, "empty level profile");
                }
                for (level, mf) in profile.iter() {
                    if let Err(e) = mf.validate() {
                        out.push(format!("{path}/{level}"), e.to_string());
                    }
                }
            }
        }
    }

    fn check_system_attributes(&self, out: &mut Issues) {
        for (name, attr) in &self.system_attributes {
            for (goal, var) in &attr.0 {
                let path = format!("system_attributes/{name}/{goal}");
                self.check_procedure(&path, goal, out);
                for (p, d) in var.iter() {
                    let path = format!("{path}/{p}");
                    self.check_procedure(&path, p, out);
                    if !(0.0..=1.0).contains(&d) {
                        out.push(path, format!("degree {d} outside [0, 1]"));
                    }
                }
            }
            if self.user_attributes.contains_key(name) {
                out.push(
                    format!("system_attributes/{name}"),
                    "name also used by a user attribute",
                );
            }
        }
    }

    fn check_user_attributes(&self, out: &mut Issues) {
        for (name, terms) in &self.user_attributes {
            for t in terms {
                if !self.terms.contains_key(t) {
                    out.push(format!("user_attributes/{name}"), format!("unknown term `{t}`"));
                }
            }
        }
    }

    fn has_attribute(&self, name: &str) -> bool {
        self.system_attributes.contains_key(name) || self.user_attributes.contains_key(name)
    }

    fn check_attribute_lists(
        &self,
        section: &str,
        entries: &BTreeMap<String, Vec<String>>,
        out: &mut Issues,
    ) {
        for (id, attrs) in entries {
            let path = format!("{section}/{id}");
            if id.trim().is_empty() {
                out.push(&path, "empty id");
            }
            let mut seen = BTreeSet::new();
            for a in attrs {
                if !self.has_attribute(a) {
                    out.push(&path, format!("unknown attribute `{a}`"));
                }
                if !seen.insert(a) {
                    out.push(&path, format!("attribute `{a}` listed twice"));
                }
            }
        }
    }

    fn check_edges(&self, out: &mut Issues) {
        for (i, e) in self.edges.iter().enumerate() {
            let path = format!("edges/{i}");
            let (source_kind, source_ok) = match e.kind {
                EdgeKind::KindOf => ("class", self.classes.contains_key(&e.from)),
                EdgeKind::IsA => ("instance", self.instances.contains_key(&e.from)),
            };
            if !source_ok {
                out.push(&path, format!("{} source `{}` is not a known {source_kind}", e.kind, e.from));
            }
            if !self.classes.contains_key(&e.to) {
                out.push(&path, format!("target `{}` is not a known class", e.to));
            }
            if !(0.0..=1.0).contains(&e.degree) {
                out.push(&path, format!("degree {} outside [0, 1]", e.degree));
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        let issues = self.issues();
        if issues.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(issues))
        }
    }

    /// Resolves an attribute by name.
    pub fn attribute(&self, name: &str) -> Result<Attribute> {
        if let Some(attr) = self.system_attributes.get(name) {
            return Ok(Attribute::System(attr.clone()));
        }
        let terms = self
            .user_attributes
            .get(name)
            .ok_or_else(|| Error::unknown("attribute", name))?;
        let vars = terms
            .iter()
            .map(|t| {
                self.terms
                    .get(t)
                    .map(|v| (t.clone(), v.clone()))
                    .ok_or_else(|| Error::unknown("term", t))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Attribute::User(UserAttribute(vars)))
    }

    fn named_attributes(&self, names: &[String]) -> Result<Vec<NamedAttribute>> {
        names
            .iter()
            .map(|n| {
                Ok(NamedAttribute {
                    name: n.clone(),
                    value: self.attribute(n)?,
                })
            })
            .collect()
    }

    pub fn class(&self, id: &str) -> Result<FuzzyClass> {
        let names = self.classes.get(id).ok_or_else(|| Error::unknown("class", id))?;
        FuzzyClass::new(id, self.named_attributes(names)?)
    }

    pub fn instance(&self, id: &str) -> Result<Instance> {
        let names = self.instances.get(id).ok_or_else(|| Error::unknown("instance", id))?;
        Ok(Instance {
            name: id.to_string(),
            attributes: self.named_attributes(names)?,
        })
    }

    pub fn object(&self, id: &str) -> Result<FuzzyObject> {
        let names = self.objects.get(id).ok_or_else(|| Error::unknown("object", id))?;
        Ok(FuzzyObject {
            name: id.to_string(),
            attributes: self.named_attributes(names)?,
        })
    }

    /// The resolved semantic network.
    pub fn net(&self) -> Result<SemanticNet> {
        let net = SemanticNet {
            procedures: self.procedures.clone(),
            terms: self.terms.clone(),
            classes: self
                .classes
                .keys()
                .map(|id| self.class(id).map(|c| (id.clone(), c)))
                .collect::<Result<_>>()?,
            instances: self
                .instances
                .keys()
                .map(|id| self.instance(id).map(|c| (id.clone(), c)))
                .collect::<Result<_>>()?,
            objects: self
                .objects
                .keys()
                .map(|id| self.object(id).map(|c| (id.clone(), c)))
                .collect::<Result<_>>()?,
            edges: self.edges.clone(),
        };
        net.validate()?;
        Ok(net)
    }

    /// A copy with every edge degree recomputed from the attributes.
    pub fn graded(&self) -> Result<KnowledgeBase> {
        let net = grade_network(&self.net()?)?;
        Ok(KnowledgeBase {
            edges: net.edges,
            ..self.clone()
        })
    }

    /// Looks up a user term, tolerating case and a missing `to-` prefix.
    pub fn resolve_term(&self, raw: &str) -> Option<&str> {
        let wanted = normalize_term(raw);
        let candidates = [wanted.clone(), format!("to-{wanted}")];
        candidates.iter().find_map(|c| {
            self.terms
                .keys()
                .find(|k| normalize_term(k) == *c)
                .map(String::as_str)
        })
    }

    pub fn to_canonical_string(&self) -> Result<String> {
        to_canonical_string(self)
    }
}

/// Lower-case, trimmed, inner whitespace replaced by `-`.
pub fn normalize_term(raw: &str) -> String {
    raw.split_whitespace()
        .collect::<Vec<_>>()
        .join("-")
        .to_lowercase()
}

/// Parses and validates a document.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase> {
    let kb: KnowledgeBase = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    kb.validate()?;
    Ok(kb)
}

/// Loads a document from disk. The path [`SAMPLE_PATH`] yields the built-in
/// sample.
pub fn load_kb(path: impl AsRef<Path>) -> Result<KnowledgeBase> {
    let path = path.as_ref();
    if path == Path::new(SAMPLE_PATH) {
        return Ok(builtin_sample_kb());
    }
    parse_kb(&std::fs::read_to_string(path)?)
}

pub fn save_kb(kb: &KnowledgeBase, path: impl AsRef<Path>) -> Result<()> {
    kb.validate()?;
    std::fs::write(path, kb.to_canonical_string()?)?;
    Ok(())
}
