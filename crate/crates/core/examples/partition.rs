//! Group similar objects at a few thresholds.
//!
//!     cargo run --example partition

use fuzzynet::kb::builtin_sample_kb;
use fuzzynet::similarity::{partition, DEFAULT_THETA};

fn main() -> fuzzynet::Result<()> {
    let net = builtin_sample_kb().net()?;
    for theta in [1.0, DEFAULT_THETA, 0.5, 0.0] {
        let p = partition(&net, theta);
        let groups: Vec<String> = p.groups.iter().map(|g| format!("{{{}}}", g.join(", "))).collect();
        println!("theta {theta:.2}: {}", groups.join(" "));
    }
    Ok(())
}
