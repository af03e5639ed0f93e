//! A scripted dialogue: diagnose, confirm, re-diagnose, teach a new term.
//!
//!     cargo run --example diagnosis_dialogue

use fuzzynet::diagnosis::Query;
use fuzzynet::fuzzy::InterpretationLevel;
use fuzzynet::interface::render_candidates;
use fuzzynet::kb::builtin_sample_kb;
use fuzzynet::Engine;

fn main() -> fuzzynet::Result<()> {
    let engine = Engine::in_memory(builtin_sample_kb());

    let first = engine.diagnose(Query::new("rub"))?;
    println!("session {}: rub", first.id);
    print!("{}", render_candidates(&first));

    let (_, delta) = engine.confirm(first.id, "EraseWithMenu", 0.3)?;
    println!(
        "confirmed EraseWithMenu: {} {} -> {} {}",
        delta.from_level, delta.before, delta.to_level, delta.after
    );

    let second = engine.diagnose(Query::new("rub"))?;
    println!("session {}: rub", second.id);
    print!("{}", render_candidates(&second));

    let unknown = engine.diagnose(Query::new("smudge").with_context(["to-gum"]))?;
    println!("session {}: smudge (context to-gum)", unknown.id);
    print!("{}", render_candidates(&unknown));

    engine.learn("to-wipe", "EraseWithKey", InterpretationLevel::RatherTrue)?;
    let taught = engine.diagnose(Query::new("wipe"))?;
    println!("session {}: wipe (after teaching)", taught.id);
    print!("{}", render_candidates(&taught));

    println!("\n{} log records", engine.log_records().len());
    Ok(())
}
