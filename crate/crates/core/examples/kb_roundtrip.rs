//! Save, reload and replay: the session log reproduces the learned KB.
//!
//!     cargo run --example kb_roundtrip [dir]

use std::path::PathBuf;

use fuzzynet::diagnosis::Query;
use fuzzynet::kb::{builtin_sample_kb, load_kb, read_log, replay, save_kb, SessionLog};
use fuzzynet::Engine;

fn main() -> fuzzynet::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir)
        .join("fuzzynet-roundtrip");
    std::fs::create_dir_all(&dir)?;
    let kb_path = dir.join("kb.json");
    let log_path = dir.join("sessions.ndjson");
    let _ = std::fs::remove_file(&log_path);

    let initial = builtin_sample_kb();
    save_kb(&initial, &kb_path)?;
    assert_eq!(load_kb(&kb_path)?, initial);
    println!("wrote {}", kb_path.display());

    let engine = Engine::new(load_kb(&kb_path)?, SessionLog::open(&log_path)?);
    for (goal, pick) in [("rub", "EraseWithMenu"), ("gum", "CutWithMenu"), ("rub", "EraseWithMenu")] {
        let s = engine.diagnose(Query::new(goal))?;
        engine.confirm(s.id, pick, 0.25)?;
    }
    println!("logged {} events to {}", engine.log_records().len(), log_path.display());

    let rebuilt = replay(&initial, &read_log(&log_path)?)?;
    let same = rebuilt.to_canonical_string()? == engine.snapshot().to_canonical_string()?;
    println!("replay reproduces the live KB: {same}");
    Ok(())
}
