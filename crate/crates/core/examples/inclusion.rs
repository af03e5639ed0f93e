//! Graded inclusion at every level of the network: discrete sets, system
//! and user variables, classes and instances.
//!
//!     cargo run --example inclusion

use fuzzynet::fuzzy::{discrete_inclusion, DiscreteFuzzySet};
use fuzzynet::interface::inclusion_between;
use fuzzynet::kb::builtin_sample_kb;
use fuzzynet::semnet::{incl_system_vars, SystemLinguisticVariable};

fn main() -> fuzzynet::Result<()> {
    let tall = DiscreteFuzzySet::new([("ann", 0.9), ("bob", 0.4), ("cy", 0.7)])?;
    let adult = DiscreteFuzzySet::new([("ann", 1.0), ("bob", 0.3), ("cy", 0.8)])?;
    println!("Deg(tall ⊂ adult) = {:.4}", discrete_inclusion(&tall, &adult)?);

    let cut_menu = SystemLinguisticVariable::new([("CutWithKey", 0.9), ("EraseWithMenu", 0.6)])?;
    let erase_key = SystemLinguisticVariable::new([("CutWithKey", 0.5), ("EraseWithMenu", 0.8)])?;
    println!("Deg(CutWithMenu ⊂ EraseWithKey) = {:.4}", incl_system_vars(&cut_menu, &erase_key)?);
    println!("Deg(EraseWithKey ⊂ CutWithMenu) = {:.4}", incl_system_vars(&erase_key, &cut_menu)?);

    let kb = builtin_sample_kb();
    for (a, b) in [
        ("to-gum", "to-rub"),
        ("to-rub", "to-gum"),
        ("word-unit", "text-fragment"),
        ("cut-verbs", "erase-verbs"),
        ("selected-word", "word-unit"),
    ] {
        println!("Deg({a} ⊂ {b}) = {:.4}", inclusion_between(&kb, a, b)?);
    }

    println!("\nGraded edges:");
    for e in kb.graded()?.edges {
        println!("  {} {} {} : {:.4}", e.from, e.kind, e.to, e.degree);
    }
    Ok(())
}
