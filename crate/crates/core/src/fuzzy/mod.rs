//! Trapezoidal membership functions, interpretation levels and
//! center-of-gravity defuzzification.

mod discrete;
mod level;
mod mf;

pub use discrete::{discrete_inclusion, DiscreteFuzzySet};
pub use level::{default_levels, defuzzify_profile, InterpretationLevel, LevelProfile};
pub use mf::{mf_centroid, mf_eval, TrapezoidMF};
