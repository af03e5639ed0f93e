//! Command line, REPL and HTTP front ends.
//!
//! Numbers are printed with 4 decimals in text output; JSON output keeps
//! full precision.

pub mod cli;
mod error;
pub mod http;
pub mod repl;

pub use error::ApiError;

use crate::diagnosis::DialogueSession;
use crate::error::{Error, Result};
use crate::kb::KnowledgeBase;
use crate::semnet::{incl_attributes, incl_classes, incl_user_vars, membership_instance};
use crate::similarity::{sim_user_vars, SimilarityReport};

/// Environment variable naming the default KB path.
pub const KB_ENV: &str = "FUZZYNET_KB";
pub const DEFAULT_PORT: u16 = 7341;
/// Header carried by every service response.
pub const FORMAT_VERSION_HEADER: &str = "x-kb-format-version";

fn term<'a>(kb: &'a KnowledgeBase, raw: &str) -> Result<&'a str> {
    kb.resolve_term(raw).ok_or_else(|| Error::unknown("term", raw))
}

/// Similarity report between two user terms, labelled with their KB ids.
pub fn similarity_between(kb: &KnowledgeBase, a: &str, b: &str) -> Result<SimilarityReport> {
    let (a, b) = (term(kb, a)?, term(kb, b)?);
    Ok(sim_user_vars(&kb.terms[a], &kb.terms[b])?.labelled(a, b))
}

/// Inclusion of `a` in `b`, where both name terms, attributes or classes,
/// or `a` names an instance and `b` a class.
pub fn inclusion_between(kb: &KnowledgeBase, a: &str, b: &str) -> Result<f64> {
    if let (Some(x), Some(y)) = (kb.resolve_term(a), kb.resolve_term(b)) {
        return incl_user_vars(&kb.terms[x], &kb.terms[y]);
    }
    if kb.classes.contains_key(b) {
        if kb.classes.contains_key(a) {
            return incl_classes(&kb.class(a)?, &kb.class(b)?);
        }
        if kb.instances.contains_key(a) {
            return membership_instance(&kb.instance(a)?, &kb.class(b)?);
        }
    }
    if let (Ok(x), Ok(y)) = (kb.attribute(a), kb.attribute(b)) {
        return incl_attributes(&x, &y);
    }
    Err(Error::unknown("term, attribute, class or instance pair", format!("{a} / {b}")))
}

/// Numbered candidate lines for text front ends.
pub fn render_candidates(session: &DialogueSession) -> String {
    let mut out = String::new();
    for (i, c) in session.candidates.iter().enumerate() {
        let mark = if session.rejected.contains(&c.procedure) { " (rejected)" } else { "" };
        out.push_str(&format!(
            "  {}. {:<16} score={:.4} level={} centroid={:.4} via={} sim={:.4}{mark}\n",
            i + 1,
            c.procedure.as_str(),
            c.score,
            c.evidence.level,
            c.evidence.centroid,
            c.evidence.term,
            c.evidence.similarity,
        ));
    }
    out
}

pub(crate) fn teach_me(session: &DialogueSession) -> String {
    format!(
        "no plausible interpretation for `{}`; teach me with: learn {} <procedure> <level>",
        session.query.goal, session.term
    )
}
