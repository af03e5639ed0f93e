//! Fuzzy semantic networks for on-line assistance.
//!
//! Expert knowledge is a network of procedures, objects, classes and
//! instances. Novice vocabulary ("to gum", "to rub") is attached to expert
//! procedures through trapezoidal membership functions at five
//! interpretation levels. The engine grades kind-of and is-a relations by
//! fuzzy inclusion, measures similarity between fuzzy descriptions, and
//! diagnoses user queries, adjusting the vocabulary as users confirm or
//! reject its interpretations.
//!
//! ```
//! use fuzzynet::kb::builtin_sample_kb;
//! use fuzzynet::similarity::sim_user_vars;
//!
//! let kb = builtin_sample_kb();
//! let report = sim_user_vars(&kb.terms["to-gum"], &kb.terms["to-rub"]).unwrap();
//! assert!(report.ratio > 0.9 && report.ratio < 1.0);
//! ```

pub mod diagnosis;
pub mod engine;
pub mod error;
pub mod fuzzy;
pub mod interface;
pub mod kb;
pub mod semnet;
pub mod similarity;

pub use engine::Engine;
pub use error::{Error, Result};
pub use interface::cli;
