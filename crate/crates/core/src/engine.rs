//! Shared state behind the REPL and the HTTP service.
//!
//! Readers take an `Arc` snapshot of the knowledge base and never block on
//! writers for longer than the pointer swap. Every mutation, and every
//! event that must be logged, runs under one writer lock, so log sequence
//! numbers follow the order in which changes were applied.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, MutexGuard, RwLock};

use crate::diagnosis::{self, DialogueSession, LearningDelta, Query};
use crate::error::{Error, Result};
use crate::fuzzy::InterpretationLevel;
use crate::kb::{KnowledgeBase, LogEvent, SessionLog, SessionLogRecord};
use crate::semnet::ProcedureId;

struct WriterState {
    sessions: BTreeMap<u64, DialogueSession>,
    next_session: u64,
    log: SessionLog,
}

pub struct Engine {
    kb: RwLock<Arc<KnowledgeBase>>,
    writer: Mutex<WriterState>,
}

impl Engine {
    pub fn new(kb: KnowledgeBase, log: SessionLog) -> Self {
        Self {
            kb: RwLock::new(Arc::new(kb)),
            writer: Mutex::new(WriterState {
                sessions: BTreeMap::new(),
                next_session: 1,
                log,
            }),
        }
    }

    pub fn in_memory(kb: KnowledgeBase) -> Self {
        Self::new(kb, SessionLog::in_memory())
    }

    pub fn snapshot(&self) -> Arc<KnowledgeBase> {
        self.kb.read().expect("kb lock poisoned").clone()
    }

    fn writer(&self) -> MutexGuard<'_, WriterState> {
        self.writer.lock().expect("writer lock poisoned")
    }

    fn publish(&self, kb: KnowledgeBase) {
        *self.kb.write().expect("kb lock poisoned") = Arc::new(kb);
    }

    pub fn diagnose(&self, query: Query) -> Result<DialogueSession> {
        let kb = self.snapshot();
        let mut session = diagnosis::diagnose(&kb, &query)?;
        let mut w = self.writer();
        session.id = w.next_session;
        w.next_session += 1;
        w.log.append(LogEvent::Diagnose {
            session: session.id,
            query,
            candidates: session.candidates.clone(),
        })?;
        w.sessions.insert(session.id, session.clone());
        Ok(session)
    }

    pub fn session(&self, id: u64) -> Result<DialogueSession> {
        self.writer()
            .sessions
            .get(&id)
            .cloned()
            .ok_or_else(|| Error::unknown("session", id.to_string()))
    }

    pub fn confirm(&self, id: u64, candidate: &str, eta: f64) -> Result<(DialogueSession, LearningDelta)> {
        let mut w = self.writer();
        let mut session = w
            .sessions
            .get(&id)
            .cloned()
            .ok_or_else(|| Error::unknown("session", id.to_string()))?;
        let (kb, delta) = diagnosis::confirm(&self.snapshot(), &mut session, candidate, eta)?;
        w.log.append(LogEvent::Confirm {
            session: id,
            candidate: ProcedureId::from(candidate),
            eta,
            delta: delta.clone(),
        })?;
        self.publish(kb);
        w.sessions.insert(id, session.clone());
        Ok((session, delta))
    }

    pub fn reject(
        &self,
        id: u64,
        candidate: &str,
        eta: f64,
    ) -> Result<(DialogueSession, Option<LearningDelta>)> {
        let mut w = self.writer();
        let mut session = w
            .sessions
            .get(&id)
            .cloned()
            .ok_or_else(|| Error::unknown("session", id.to_string()))?;
        let (kb, delta) = diagnosis::reject(&self.snapshot(), &mut session, candidate, eta)?;
        w.log.append(LogEvent::Reject {
            session: id,
            candidate: ProcedureId::from(candidate),
            eta,
            delta: delta.clone(),
        })?;
        self.publish(kb);
        w.sessions.insert(id, session.clone());
        Ok((session, delta))
    }

    pub fn learn(&self, term: &str, procedure: &str, level: InterpretationLevel) -> Result<()> {
        let mut w = self.writer();
        let procedure = ProcedureId::from(procedure);
        let kb = diagnosis::learn_term(&self.snapshot(), term, &procedure, level)?;
        w.log.append(LogEvent::Learn {
            term: term.to_string(),
            procedure,
            level,
        })?;
        self.publish(kb);
        Ok(())
    }

    pub fn log_records(&self) -> Vec<SessionLogRecord> {
        self.writer().log.records().to_vec()
    }
}
