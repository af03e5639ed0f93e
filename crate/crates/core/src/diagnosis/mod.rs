//! Query diagnosis and progressive adjustment of the knowledge base.
//!
//! A known goal term scores each linked procedure by the centroid of its
//! dominant (highest) level, weighted by the level rank: `quite_true`
//! counts fully, `rather_true` 3/4, down to 0 for `not_true`. An unknown
//! term borrows scores from known terms named in the query context or
//! attached to the query object, scaled by their similarity to those seed
//! terms.
//!
//! Confirming a candidate raises the link's dominant level one step and
//! blends its function toward the default function of the new level.
//! Rejecting blends the dominant function toward the `not_true` default.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzy::{InterpretationLevel, LevelProfile, TrapezoidMF};
use crate::kb::{normalize_term, KnowledgeBase};
use crate::semnet::{Attribute, ProcedureId, UserLinguisticVariable};
use crate::similarity::sim_user_vars;

/// Scores below this are not offered as candidates.
pub const SCORE_FLOOR: f64 = 0.05;

pub const DEFAULT_LEARNING_RATE: f64 = 0.2;

/// Level a new link starts from when an unknown term is confirmed.
const SEED_LEVEL: InterpretationLevel = InterpretationLevel::HalfTrue;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Query {
    pub goal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub context: Vec<String>,
}

impl Query {
    pub fn new(goal: impl Into<String>) -> Self {
        Self {
            goal: goal.into(),
            object: None,
            context: Vec::new(),
        }
    }

    pub fn with_object(mut self, object: impl Into<String>) -> Self {
        self.object = Some(object.into());
        self
    }

    pub fn with_context(mut self, tags: impl IntoIterator<Item = impl Into<String>>) -> Self {
        self.context.extend(tags.into_iter().map(Into::into));
        self
    }
}

/// Why a candidate got its score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    /// The known term whose profile was scored.
    pub term: String,
    pub level: InterpretationLevel,
    pub centroid: f64,
    /// 1 for a direct match, otherwise the similarity to the seed term.
    pub similarity: f64,
    pub centroids: BTreeMap<InterpretationLevel, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub procedure: ProcedureId,
    pub score: f64,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SessionStatus {
    Open,
    Confirmed,
    Rejected,
    Abandoned,
}

/// One recorded change to a (term, procedure) link.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LearningDelta {
    pub term: String,
    pub procedure: ProcedureId,
    pub from_level: InterpretationLevel,
    pub to_level: InterpretationLevel,
    pub before: TrapezoidMF,
    pub after: TrapezoidMF,
    pub eta: f64,
    /// The link did not exist and was seeded before adjusting.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub created: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DialogueSession {
    pub id: u64,
    pub query: Query,
    /// KB term the adjustments apply to.
    pub term: String,
    /// Whether `term` was found in the KB when the query was diagnosed.
    pub known_term: bool,
    pub candidates: Vec<Candidate>,
    pub status: SessionStatus,
    #[serde(default)]
    pub rejected: BTreeSet<ProcedureId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confirmed: Option<ProcedureId>,
    #[serde(default)]
    pub deltas: Vec<LearningDelta>,
}

impl DialogueSession {
    pub fn candidate(&self, procedure: &str) -> Option<&Candidate> {
        self.candidates
            .iter()
            .find(|c| c.procedure.as_str() == procedure)
    }

    pub fn is_open(&self) -> bool {
        self.status == SessionStatus::Open
    }

    fn check_actionable(&self, procedure: &str) -> Result<()> {
        if !self.is_open() {
            return Err(Error::SessionClosed(self.id));
        }
        if self.candidate(procedure).is_none() {
            return Err(Error::unknown("candidate", procedure));
        }
        if self.rejected.contains(procedure) {
            return Err(Error::CandidateAlreadyRejected(procedure.to_string()));
        }
        Ok(())
    }
}

fn check_eta(eta: f64) -> Result<()> {
    if eta > 0.0 && eta <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidLearningRate(eta))
    }
}

/// Centroid of the dominant level times its weight.
pub fn link_score(profile: &LevelProfile) -> Option<(f64, InterpretationLevel, f64)> {
    let (level, mf) = profile.dominant()?;
    let centroid = mf.centroid();
    Some((centroid * level.weight(), level, centroid))
}

fn direct_candidates(term: &str, var: &UserLinguisticVariable, similarity: f64) -> Vec<Candidate> {
    var.iter()
        .filter_map(|(p, profile)| {
            let (score, level, centroid) = link_score(profile)?;
            Some(Candidate {
                procedure: p.clone(),
                score: score * similarity,
                evidence: Evidence {
                    term: term.to_string(),
                    level,
                    centroid,
                    similarity,
                    centroids: profile.defuzzify(),
                },
            })
        })
        .collect()
}

/// Known terms a query for an unknown word can borrow from.
fn seed_terms(kb: &KnowledgeBase, q: &Query) -> BTreeSet<String> {
    let mut seeds: BTreeSet<String> = q
        .context
        .iter()
        .filter_map(|tag| kb.resolve_term(tag).map(str::to_string))
        .collect();
    if let Some(object) = q.object.as_deref() {
        let wanted = normalize_term(object);
        if let Some((_, attrs)) = kb.objects.iter().find(|(id, _)| normalize_term(id) == wanted) {
            for name in attrs {
                if let Ok(Attribute::User(attr)) = kb.attribute(name) {
                    seeds.extend(attr.0.keys().cloned());
                }
            }
        }
    }
    seeds
}

fn rank(mut candidates: Vec<Candidate>) -> Vec<Candidate> {
    candidates.retain(|c| c.score >= SCORE_FLOOR);
    candidates.sort_by(|x, y| {
        y.score
            .total_cmp(&x.score)
            .then_with(|| x.procedure.cmp(&y.procedure))
    });
    candidates
}

/// Ranks the expert procedures that may interpret `q`.
///
/// The returned session has id 0; [`crate::Engine`] assigns real ids.
pub fn diagnose(kb: &KnowledgeBase, q: &Query) -> Result<DialogueSession> {
    if kb.terms.is_empty() {
        return Err(Error::EmptyKnowledgeBase);
    }
    if q.goal.trim().is_empty() {
        return Err(Error::degenerate("query goal term is empty"));
    }
    let (term, known_term, candidates) = match kb.resolve_term(&q.goal) {
        Some(term) => {
            let var = &kb.terms[term];
            (term.to_string(), true, direct_candidates(term, var, 1.0))
        }
        None => {
            let seeds = seed_terms(kb, q);
            let mut best: BTreeMap<ProcedureId, Candidate> = BTreeMap::new();
            for (known, var) in &kb.terms {
                let similarity = seeds
                    .iter()
                    .map(|s| {
                        sim_user_vars(&kb.terms[s], var)
                            .map(|r| r.ratio)
                            .unwrap_or(0.0)
                    })
                    .fold(0.0, f64::max);
                if similarity <= 0.0 {
                    continue;
                }
                for c in direct_candidates(known, var, similarity) {
                    match best.get(&c.procedure) {
                        Some(prev) if prev.score >= c.score => {}
                        _ => {
                            best.insert(c.procedure.clone(), c);
                        }
                    }
                }
            }
            (normalize_term(&q.goal), false, best.into_values().collect())
        }
    };
    Ok(DialogueSession {
        id: 0,
        query: q.clone(),
        term,
        known_term,
        candidates: rank(candidates),
        status: SessionStatus::Open,
        rejected: BTreeSet::new(),
        confirmed: None,
        deltas: Vec::new(),
    })
}

fn link_mut<'a>(kb: &'a mut KnowledgeBase, term: &str, procedure: &str) -> Option<&'a mut LevelProfile> {
    kb.terms.get_mut(term)?.profile_mut(procedure)
}

/// Raises the link's dominant level one step and blends it toward that
/// level's default. A missing link is first seeded at `half_true`.
pub fn apply_confirm(
    kb: &KnowledgeBase,
    term: &str,
    procedure: &ProcedureId,
    eta: f64,
) -> Result<(KnowledgeBase, LearningDelta)> {
    check_eta(eta)?;
    let mut kb = kb.clone();
    let mut created = false;
    if link_mut(&mut kb, term, procedure.as_str()).is_none() {
        kb = learn_term(&kb, term, procedure, SEED_LEVEL)?;
        created = true;
    }
    let profile = link_mut(&mut kb, term, procedure.as_str()).expect("link present");
    let (from_level, before) = profile
        .dominant()
        .map(|(l, mf)| (l, *mf))
        .ok_or(Error::EmptyProfile)?;
    let to_level = from_level.raised();
    let after = before.blend(&to_level.default_mf(), eta);
    profile.remove(from_level);
    profile.insert(to_level, after);
    Ok((
        kb,
        LearningDelta {
            term: term.to_string(),
            procedure: procedure.clone(),
            from_level,
            to_level,
            before,
            after,
            eta,
            created,
        },
    ))
}

/// Blends the link's dominant function toward the `not_true` default.
/// Returns no delta when the link does not exist.
pub fn apply_reject(
    kb: &KnowledgeBase,
    term: &str,
    procedure: &ProcedureId,
    eta: f64,
) -> Result<(KnowledgeBase, Option<LearningDelta>)> {
    check_eta(eta)?;
    let mut kb = kb.clone();
    let Some(profile) = link_mut(&mut kb, term, procedure.as_str()) else {
        return Ok((kb, None));
    };
    let (level, before) = profile
        .dominant()
        .map(|(l, mf)| (l, *mf))
        .ok_or(Error::EmptyProfile)?;
    let after = before.blend(&InterpretationLevel::NotTrue.default_mf(), eta);
    profile.insert(level, after);
    let delta = LearningDelta {
        term: term.to_string(),
        procedure: procedure.clone(),
        from_level: level,
        to_level: level,
        before,
        after,
        eta,
        created: false,
    };
    Ok((kb, Some(delta)))
}

/// Confirms `procedure` as the meaning of the session's term.
pub fn confirm(
    kb: &KnowledgeBase,
    session: &mut DialogueSession,
    procedure: &str,
    eta: f64,
) -> Result<(KnowledgeBase, LearningDelta)> {
    check_eta(eta)?;
    session.check_actionable(procedure)?;
    let procedure = ProcedureId::from(procedure);
    let (kb, delta) = apply_confirm(kb, &session.term, &procedure, eta)?;
    session.status = SessionStatus::Confirmed;
    session.confirmed = Some(procedure);
    session.deltas.push(delta.clone());
    Ok((kb, delta))
}

/// Rejects one candidate. The session is abandoned once every candidate
/// has been rejected.
pub fn reject(
    kb: &KnowledgeBase,
    session: &mut DialogueSession,
    procedure: &str,
    eta: f64,
) -> Result<(KnowledgeBase, Option<LearningDelta>)> {
    check_eta(eta)?;
    session.check_actionable(procedure)?;
    let procedure = ProcedureId::from(procedure);
    let (kb, delta) = apply_reject(kb, &session.term, &procedure, eta)?;
    session.rejected.insert(procedure);
    if session.rejected.len() == session.candidates.len() {
        session.status = SessionStatus::Abandoned;
    }
    if let Some(d) = &delta {
        session.deltas.push(d.clone());
    }
    Ok((kb, delta))
}

/// Links `term` to `procedure` with the default function of `level`.
pub fn learn_term(
    kb: &KnowledgeBase,
    term: &str,
    procedure: &ProcedureId,
    level: InterpretationLevel,
) -> Result<KnowledgeBase> {
    if term.trim().is_empty() {
        return Err(Error::degenerate("term is empty"));
    }
    if !kb.procedures.contains(procedure) {
        return Err(Error::unknown("procedure", procedure.as_str()));
    }
    let mut kb = kb.clone();
    let var = kb.terms.entry(term.to_string()).or_default();
    if var.profile(procedure.as_str()).is_some() {
        return Err(Error::DuplicateLink {
            term: term.to_string(),
            procedure: procedure.to_string(),
        });
    }
    var.insert(
        procedure.clone(),
        LevelProfile::single(level, level.default_mf()),
    );
    Ok(kb)
}
