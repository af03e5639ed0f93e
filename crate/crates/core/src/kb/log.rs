//! Append-only session log, one JSON object per line.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

use super::KnowledgeBase;
use crate::diagnosis::{apply_confirm, apply_reject, learn_term, Candidate, LearningDelta, Query};
use crate::error::{Error, Result};
use crate::fuzzy::InterpretationLevel;
use crate::semnet::ProcedureId;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum LogEvent {
    Diagnose {
        session: u64,
        query: Query,
        candidates: Vec<Candidate>,
    },
    Confirm {
        session: u64,
        candidate: ProcedureId,
        eta: f64,
        delta: LearningDelta,
    },
    Reject {
        session: u64,
        candidate: ProcedureId,
        eta: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<LearningDelta>,
    },
    Learn {
        term: String,
        procedure: ProcedureId,
        level: InterpretationLevel,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionLogRecord {
    pub seq: u64,
    pub timestamp: DateTime<Utc>,
    #[serde(flatten)]
    pub event: LogEvent,
}

/// Sequential appender. Sequence numbers start at 1 and have no gaps;
/// timestamps never go backwards.
#[derive(Debug, Default)]
pub struct SessionLog {
    records: Vec<SessionLogRecord>,
    sink: Option<File>,
}

impl SessionLog {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Appends to `path`, creating it if needed. Existing records are read
    /// first so numbering continues.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let records = if path.exists() { read_log(path)? } else { Vec::new() };
        let sink = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Self {
            records,
            sink: Some(sink),
        })
    }

    pub fn append(&mut self, event: LogEvent) -> Result<&SessionLogRecord> {
        let (seq, floor) = match self.records.last() {
            Some(last) => (last.seq + 1, Some(last.timestamp)),
            None => (1, None),
        };
        let now = Utc::now();
        let timestamp = floor.map_or(now, |f| now.max(f));
        let record = SessionLogRecord {
            seq,
            timestamp,
            event,
        };
        if let Some(sink) = &mut self.sink {
            let mut line = serde_json::to_string(&record)?;
            line.push('\n');
            sink.write_all(line.as_bytes())?;
            sink.flush()?;
        }
        self.records.push(record);
        Ok(self.records.last().expect("just pushed"))
    }

    pub fn records(&self) -> &[SessionLogRecord] {
        &self.records
    }
}

pub fn read_log(path: impl AsRef<Path>) -> Result<Vec<SessionLogRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| Error::Parse {
            line: i + 1,
            column: e.column(),
            message: e.to_string(),
        })?;
        records.push(record);
    }
    Ok(records)
}

fn check_delta(seq: u64, recorded: &LearningDelta, replayed: &LearningDelta) -> Result<()> {
    if recorded != replayed {
        return Err(Error::Replay {
            seq,
            message: format!(
                "recorded {} -> {} but replay produced {} -> {}",
                recorded.before, recorded.after, replayed.before, replayed.after
            ),
        });
    }
    Ok(())
}

/// Re-executes every learning event over `initial`, checking each
/// recomputed delta against the recorded one.
pub fn replay(initial: &KnowledgeBase, records: &[SessionLogRecord]) -> Result<KnowledgeBase> {
    let mut kb = initial.clone();
    let mut previous: Option<&SessionLogRecord> = None;
    for record in records {
        let seq = record.seq;
        if let Some(prev) = previous {
            if seq != prev.seq + 1 {
                return Err(Error::Replay {
                    seq,
                    message: format!("sequence gap after {}", prev.seq),
                });
            }
            if record.timestamp < prev.timestamp {
                return Err(Error::Replay {
                    seq,
                    message: "timestamp goes backwards".into(),
                });
            }
        }
        previous = Some(record);
        let wrap = |e: Error| Error::Replay {
            seq,
            message: e.to_string(),
        };
        match &record.event {
            LogEvent::Diagnose { .. } => {}
            LogEvent::Confirm { delta, eta, .. } => {
                let (next, replayed) =
                    apply_confirm(&kb, &delta.term, &delta.procedure, *eta).map_err(wrap)?;
                check_delta(seq, delta, &replayed)?;
                kb = next;
            }
            LogEvent::Reject {
                delta: Some(delta),
                eta,
                ..
            } => {
                let (next, replayed) =
                    apply_reject(&kb, &delta.term, &delta.procedure, *eta).map_err(wrap)?;
                match replayed {
                    Some(replayed) => check_delta(seq, delta, &replayed)?,
                    None => {
                        return Err(Error::Replay {
                            seq,
                            message: "rejected link is missing".into(),
                        })
                    }
                }
                kb = next;
            }
            LogEvent::Reject { delta: None, .. } => {}
            LogEvent::Learn {
                term,
                procedure,
                level,
            } => {
                kb = learn_term(&kb, term, procedure, *level).map_err(wrap)?;
            }
        }
    }
    Ok(kb)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_and_timestamps_are_monotone() {
        let mut log = SessionLog::in_memory();
        for i in 0..5 {
            log.append(LogEvent::Learn {
                term: format!("t{i}"),
                procedure: "CutWithKey".into(),
                level: InterpretationLevel::HalfTrue,
            })
            .unwrap();
        }
        let seqs: Vec<u64> = log.records().iter().map(|r| r.seq).collect();
        assert_eq!(seqs, vec![1, 2, 3, 4, 5]);
        assert!(log.records().windows(2).all(|w| w[0].timestamp <= w[1].timestamp));
    }

    #[test]
    fn file_log_round_trips_and_continues_numbering() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("session.log");
        let event = LogEvent::Learn {
            term: "wipe".into(),
            procedure: "EraseWithMenu".into(),
            level: InterpretationLevel::QuiteTrue,
        };
        {
            let mut log = SessionLog::open(&path).unwrap();
            log.append(event.clone()).unwrap();
        }
        let mut log = SessionLog::open(&path).unwrap();
        assert_eq!(log.append(event).unwrap().seq, 2);
        let records = read_log(&path).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records, log.records());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.lines().all(|l| l.contains("\"kind\":\"learn\"")));
    }

    #[test]
    fn replay_detects_gaps() {
        let mut log = SessionLog::in_memory();
        for _ in 0..2 {
            log.append(LogEvent::Reject {
                session: 1,
                candidate: "CutWithKey".into(),
                eta: 0.2,
                delta: None,
            })
            .unwrap();
        }
        let mut records = log.records().to_vec();
        records[1].seq = 5;
        let kb = KnowledgeBase::default();
        assert!(matches!(replay(&kb, &records), Err(Error::Replay { seq: 5, .. })));
    }
}
