//! Similarity table between two user terms, plus object similarity.
//!
//!     cargo run --example similarity [termA termB]

use fuzzynet::interface::similarity_between;
use fuzzynet::kb::builtin_sample_kb;
use fuzzynet::similarity::sim_objects;

fn main() -> fuzzynet::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (a, b) = match args.as_slice() {
        [a, b] => (a.as_str(), b.as_str()),
        _ => ("to-gum", "to-rub"),
    };
    let kb = builtin_sample_kb();
    print!("{}", similarity_between(&kb, a, b)?.render_table());

    let net = kb.net()?;
    println!();
    for (x, y) in [("gum", "rub"), ("word", "chain-of-characters")] {
        let s = sim_objects(&net.objects[x], &net.objects[y])?;
        println!("Sim(object {x}, object {y}) = {s:.4}");
    }
    Ok(())
}
