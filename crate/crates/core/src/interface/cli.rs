//! `fuzzynet` command line.
//!
//! Exit codes: 0 success, 1 validation or engine failure, 2 usage error.
//! Wherever the KB is the only positional argument it may be omitted in
//! favour of `$FUZZYNET_KB`. The path `@sample` selects the built-in sample.

use std::ffi::OsString;
use std::io::{self, Write};
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use super::{inclusion_between, render_candidates, similarity_between, teach_me, DEFAULT_PORT, KB_ENV};
use crate::diagnosis::{Query, DEFAULT_LEARNING_RATE};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::kb::{load_kb, to_canonical_string, SessionLog};
use crate::similarity::{partition, DEFAULT_THETA};

#[derive(Parser, Debug)]
#[command(name = "fuzzynet", version, about = "Fuzzy semantic-network assistant")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Knowledge-base maintenance
    Kb {
        #[command(subcommand)]
        action: KbAction,
    },
    /// Similarity between two user terms
    Sim {
        kb: PathBuf,
        a: String,
        b: String,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Inclusion degree of `a` in `b` (terms, attributes, classes, or instance in class)
    Include { kb: PathBuf, a: String, b: String },
    /// Rank expert procedures for a user goal term
    Diagnose {
        #[arg(env = KB_ENV)]
        kb: PathBuf,
        #[arg(long)]
        goal: String,
        #[arg(long)]
        object: Option<String>,
        /// Known terms that give context to an unknown goal
        #[arg(long)]
        context: Vec<String>,
    },
    /// Group similar objects
    Partition {
        #[arg(env = KB_ENV)]
        kb: PathBuf,
        #[arg(long, default_value_t = DEFAULT_THETA)]
        theta: f64,
    },
    /// Interactive dialogue
    Repl {
        #[arg(env = KB_ENV)]
        kb: PathBuf,
        /// Append session events to this file
        #[arg(long)]
        log: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_LEARNING_RATE)]
        eta: f64,
    },
    /// Run the HTTP service
    Serve {
        #[arg(env = KB_ENV)]
        kb: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum KbAction {
    /// Check a document and report every problem
    Validate {
        #[arg(env = KB_ENV)]
        path: PathBuf,
    },
    /// Print a document in canonical form
    Fmt {
        #[arg(env = KB_ENV)]
        path: PathBuf,
    },
}

fn open_log(path: Option<PathBuf>) -> Result<SessionLog> {
    match path {
        Some(p) => SessionLog::open(p),
        None => Ok(SessionLog::in_memory()),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Kb { action: KbAction::Validate { path } } => {
            let kb = load_kb(&path)?;
            writeln!(
                out,
                "{}: ok ({} procedures, {} terms, {} classes, {} edges)",
                path.display(),
                kb.procedures.len(),
                kb.terms.len(),
                kb.classes.len(),
                kb.edges.len()
            )?;
        }
        Command::Kb { action: KbAction::Fmt { path } } => {
            write!(out, "{}", load_kb(&path)?.to_canonical_string()?)?;
        }
        Command::Sim { kb, a, b, json } => {
            let report = similarity_between(&load_kb(&kb)?, &a, &b)?;
            if json {
                write!(out, "{}", to_canonical_string(&report)?)?;
            } else {
                write!(out, "{}", report.render_table())?;
            }
        }
        Command::Include { kb, a, b } => {
            let degree = inclusion_between(&load_kb(&kb)?, &a, &b)?;
            writeln!(out, "Deg({a} ⊂ {b}) = {degree:.4}")?;
        }
        Command::Diagnose { kb, goal, object, context } => {
            let mut query = Query::new(goal).with_context(context);
            query.object = object;
            let engine = Engine::in_memory(load_kb(&kb)?);
            let session = engine.diagnose(query)?;
            writeln!(out, "`{}` -> {}", session.query.goal, session.term)?;
            if session.candidates.is_empty() {
                writeln!(out, "{}", teach_me(&session))?;
                return Ok(1);
            }
            write!(out, "{}", render_candidates(&session))?;
        }
        Command::Partition { kb, theta } => {
            if !(0.0..=1.0).contains(&theta) {
                return Err(Error::degenerate(format!("theta {theta} outside [0, 1]")));
            }
            let p = partition(&load_kb(&kb)?.net()?, theta);
            writeln!(out, "theta = {:.4}", p.threshold)?;
            for (i, g) in p.groups.iter().enumerate() {
                writeln!(out, "group {}: {}", i + 1, g.join(", "))?;
            }
        }
        Command::Repl { kb, log, eta } => {
            let engine = Engine::new(load_kb(&kb)?, open_log(log)?);
            let stdin = io::stdin();
            super::repl::Repl::new(&engine)
                .with_learning_rate(eta)
                .run(stdin.lock(), out)?;
        }
        Command::Serve { kb, port, host, log } => {
            let engine = Arc::new(Engine::new(load_kb(&kb)?, open_log(log)?));
            let addr = SocketAddr::new(host, port);
            writeln!(out, "listening on http://{addr}")?;
            out.flush()?;
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(super::http::serve(engine, addr))?;
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
