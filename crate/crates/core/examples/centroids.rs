//! Defuzzify the to-gum and to-rub profiles of the sample knowledge base.
//!
//!     cargo run --example centroids

use fuzzynet::fuzzy::InterpretationLevel;
use fuzzynet::kb::builtin_sample_kb;

fn main() {
    let kb = builtin_sample_kb();
    println!("Default levels:");
    for level in InterpretationLevel::ALL {
        let mf = level.default_mf();
        println!("  {:<12} {:<20} centroid {:.4}", level.as_str(), mf.to_string(), mf.centroid());
    }
    for term in ["to-gum", "to-rub"] {
        println!("\n{term}");
        for (procedure, profile) in kb.terms[term].iter() {
            let row: Vec<String> = profile
                .defuzzify()
                .iter()
                .map(|(level, c)| format!("{level}={c:.4}"))
                .collect();
            println!("  {:<14} {}", procedure.as_str(), row.join("  "));
        }
    }
}
