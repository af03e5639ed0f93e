//! Line-oriented dialogue loop.
//!
//! ```text
//! > diagnose rub letters
//! session 1: `rub` -> to-rub
//!   1. CutWithMenu      score=0.8500 level=quite_true ...
//! > confirm 3
//! ```

use std::io::{BufRead, Write};

use super::{render_candidates, similarity_between, teach_me};
use crate::diagnosis::{Query, DEFAULT_LEARNING_RATE};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::fuzzy::InterpretationLevel;
use crate::kb::save_kb;

const HELP: &str = "\
commands:
  diagnose <goal> [object] [context...]   rank interpretations of a goal term
  confirm <n|procedure>                   accept a candidate of the current session
  reject <n|procedure>                    discard a candidate of the current session
  learn <term> <procedure> <level>        link a new term to a procedure
  sim <termA> <termB>                     similarity table between two terms
  show <term>                             print a term's profiles
  save <path>                             write the current KB
  help | quit";

pub struct Repl<'e> {
    engine: &'e Engine,
    eta: f64,
    current: Option<u64>,
}

impl<'e> Repl<'e> {
    pub fn new(engine: &'e Engine) -> Self {
        Self {
            engine,
            eta: DEFAULT_LEARNING_RATE,
            current: None,
        }
    }

    pub fn with_learning_rate(mut self, eta: f64) -> Self {
        self.eta = eta;
        self
    }

    /// Runs until `quit` or end of input.
    pub fn run<W: Write + ?Sized>(&mut self, input: impl BufRead, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "fuzzynet dialogue; type `help` for commands")?;
        write!(out, "> ")?;
        out.flush()?;
        for line in input.lines() {
            let line = line?;
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.first().copied() {
                None => {}
                Some("quit" | "exit") => break,
                Some(_) => match self.execute(&words) {
                    Ok(text) => write!(out, "{text}")?,
                    Err(e) => writeln!(out, "error: {e}")?,
                },
            }
            write!(out, "> ")?;
            out.flush()?;
        }
        writeln!(out)?;
        Ok(())
    }

    fn candidate_name(&self, id: u64, arg: &str) -> Result<String> {
        let session = self.engine.session(id)?;
        match arg.parse::<usize>() {
            Ok(n) if n >= 1 && n <= session.candidates.len() => {
                Ok(session.candidates[n - 1].procedure.to_string())
            }
            Ok(_) => Err(Error::unknown("candidate", arg)),
            Err(_) => Ok(arg.to_string()),
        }
    }

    fn current(&self) -> Result<u64> {
        self.current
            .ok_or_else(|| Error::degenerate("no session yet; run `diagnose` first"))
    }

    fn execute(&mut self, words: &[&str]) -> Result<String> {
        match words {
            ["help"] => Ok(format!("{HELP}\n")),
            ["diagnose", goal, rest @ ..] => {
                let mut query = Query::new(*goal);
                if let Some((object, context)) = rest.split_first() {
                    query = query.with_object(*object).with_context(context.iter().copied());
                }
                let session = self.engine.diagnose(query)?;
                self.current = Some(session.id);
                let mut text = format!("session {}: `{}` -> {}\n", session.id, goal, session.term);
                if session.candidates.is_empty() {
                    text.push_str(&teach_me(&session));
                    text.push('\n');
                } else {
                    text.push_str(&render_candidates(&session));
                }
                Ok(text)
            }
            ["confirm", which] => {
                let id = self.current()?;
                let name = self.candidate_name(id, which)?;
                let (_, delta) = self.engine.confirm(id, &name, self.eta)?;
                Ok(format!(
                    "confirmed {name}: {} {} -> {} {}\n",
                    delta.from_level, delta.before, delta.to_level, delta.after
                ))
            }
            ["reject", which] => {
                let id = self.current()?;
                let name = self.candidate_name(id, which)?;
                let (session, delta) = self.engine.reject(id, &name, self.eta)?;
                let mut text = match delta {
                    Some(d) => format!("rejected {name}: {} {} -> {}\n", d.from_level, d.before, d.after),
                    None => format!("rejected {name}\n"),
                };
                if !session.is_open() {
                    text.push_str("all candidates rejected; session abandoned\n");
                }
                Ok(text)
            }
            ["learn", term, procedure, level] => {
                let level: InterpretationLevel = level.parse()?;
                self.engine.learn(term, procedure, level)?;
                Ok(format!("learned {term} -> {procedure} ({level})\n"))
            }
            ["sim", a, b] => Ok(similarity_between(&self.engine.snapshot(), a, b)?.render_table()),
            ["show", raw] => {
                let kb = self.engine.snapshot();
                let term = kb.resolve_term(raw).ok_or_else(|| Error::unknown("term", *raw))?;
                let mut text = format!("{term}\n");
                for (p, profile) in kb.terms[term].iter() {
                    for (level, mf) in profile.iter() {
                        text.push_str(&format!(
                            "  {:<16} {:<12} {} centroid={:.4}\n",
                            p.as_str(),
                            level.as_str(),
                            mf,
                            mf.centroid()
                        ));
                    }
                }
                Ok(text)
            }
            ["save", path] => {
                save_kb(&self.engine.snapshot(), path)?;
                Ok(format!("saved {path}\n"))
            }
            _ => Err(Error::degenerate(format!(
                "unrecognised command `{}`; try `help`",
                words.join(" ")
            ))),
        }
    }
}
