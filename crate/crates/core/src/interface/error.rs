use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Machine-readable error body returned by the service.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entity: Option<String>,
}

impl ApiError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        Self {
            code: code.to_string(),
            message: message.into(),
            entity: None,
        }
    }

    /// HTTP status for this code.
    pub fn status(&self) -> u16 {
        match self.code.as_str() {
            "not_found" => 404,
            "session_closed" | "candidate_rejected" | "duplicate_link" => 409,
            "replay_failed" | "io_error" => 500,
            _ => 400,
        }
    }
}

fn code_of(err: &Error) -> &'static str {
    match err {
        Error::InvalidMembershipFunction { .. } => "invalid_membership_function",
        Error::DegreeOutOfRange(_) => "degree_out_of_range",
        Error::Degenerate(_) => "degenerate_input",
        Error::UniverseMismatch => "universe_mismatch",
        Error::LengthMismatch { .. } => "length_mismatch",
        Error::AttributeKindMismatch => "attribute_kind_mismatch",
        Error::NoSharedProcedures => "no_shared_procedures",
        Error::EmptyProfile => "empty_profile",
        Error::Unknown { .. } => "not_found",
        Error::Edge { .. } => "edge_grading_failed",
        Error::EmptyKnowledgeBase => "empty_knowledge_base",
        Error::SessionClosed(_) => "session_closed",
        Error::CandidateAlreadyRejected(_) => "candidate_rejected",
        Error::DuplicateLink { .. } => "duplicate_link",
        Error::InvalidLearningRate(_) => "invalid_learning_rate",
        Error::Parse { .. } => "parse_error",
        Error::Validation(_) => "validation_failed",
        Error::Replay { .. } => "replay_failed",
        Error::Io(_) => "io_error",
        Error::Json(_) => "malformed_json",
    }
}

fn entity_of(err: &Error) -> Option<String> {
    match err {
        Error::Unknown { id, .. } => Some(id.clone()),
        Error::Edge { from, to, .. } => Some(format!("{from}->{to}")),
        Error::SessionClosed(id) => Some(id.to_string()),
        Error::CandidateAlreadyRejected(p) => Some(p.clone()),
        Error::DuplicateLink { term, procedure } => Some(format!("{term}/{procedure}")),
        _ => None,
    }
}

impl From<&Error> for ApiError {
    fn from(err: &Error) -> Self {
        Self {
            code: code_of(err).to_string(),
            message: err.to_string(),
            entity: entity_of(err),
        }
    }
}

impl From<Error> for ApiError {
    fn from(err: Error) -> Self {
        Self::from(&err)
    }
}
