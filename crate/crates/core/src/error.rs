use std::fmt;

use thiserror::Error;

/// A single problem found while validating a knowledge-base document.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationIssue {
    /// JSON-pointer-like location, e.g. `terms/to-gum/CutWithKey/half_true`.
    pub path: String,
    pub message: String,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid membership function [{},{},{},{}]: {reason}", corners[0], corners[1], corners[2], corners[3])]
    InvalidMembershipFunction { corners: [f64; 4], reason: String },

    #[error("degree {0} is outside [0, 1]")]
    DegreeOutOfRange(f64),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("fuzzy sets are defined over different universes")]
    UniverseMismatch,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("cannot pair a system attribute with a user attribute")]
    AttributeKindMismatch,

    #[error("no shared procedures between the two variables")]
    NoSharedProcedures,

    #[error("level profile is empty")]
    EmptyProfile,

    #[error("unknown {kind} `{id}`")]
    Unknown { kind: &'static str, id: String },

    #[error("edge {from} -> {to}: {source}")]
    Edge {
        from: String,
        to: String,
        #[source]
        source: Box<Error>,
    },

    #[error("knowledge base has no user terms")]
    EmptyKnowledgeBase,

    #[error("session {0} is closed")]
    SessionClosed(u64),

    #[error("candidate {0} was already rejected")]
    CandidateAlreadyRejected(String),

    #[error("term `{term}` is already linked to {procedure}")]
    DuplicateLink { term: String, procedure: String },

    #[error("learning rate {0} is outside (0, 1]")]
    InvalidLearningRate(f64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{} validation error(s): {}", .0.len(), join_issues(.0))]
    Validation(Vec<ValidationIssue>),

    #[error("session log replay failed at record {seq}: {message}")]
    Replay { seq: u64, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn join_issues(issues: &[ValidationIssue]) -> String {
    issues
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

impl Error {
    pub(crate) fn unknown(kind: &'static str, id: impl Into<String>) -> Self {
        Error::Unknown {
            kind,
            id: id.into(),
        }
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
