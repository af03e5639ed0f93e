//! Shared fixtures, strategies and independent oracles for integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use fuzzynet::fuzzy::{InterpretationLevel, LevelProfile, TrapezoidMF};
use fuzzynet::kb::KnowledgeBase;
use fuzzynet::semnet::{ProcedureId, SystemAttribute, SystemLinguisticVariable, UserLinguisticVariable};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub const PROCEDURES: [&str; 5] = ["CopyWithKey", "CutWithKey", "CutWithMenu", "EraseWithKey", "EraseWithMenu"];

pub fn mf(c: [f64; 4]) -> TrapezoidMF {
    TrapezoidMF::from_corners(c).unwrap()
}

pub fn profile(rows: &[(InterpretationLevel, [f64; 4])]) -> LevelProfile {
    LevelProfile::new(rows.iter().map(|(l, c)| (*l, mf(*c)))).unwrap()
}

/// The worked Gum profile on CutWithMenu and CutWithKey.
pub fn paper_gum() -> UserLinguisticVariable {
    use InterpretationLevel::*;
    UserLinguisticVariable::new([
        (
            "CutWithMenu",
            profile(&[(NotTrue, [0.0, 0.0, 0.1, 0.4]), (HalfTrue, [0.2, 0.3, 0.4, 0.6]), (QuiteTrue, [0.7, 0.9, 0.9, 1.0])]),
        ),
        (
            "CutWithKey",
            profile(&[(NotTrue, [0.0, 0.0, 0.1, 0.4]), (HalfTrue, [0.2, 0.4, 0.4, 0.6]), (QuiteTrue, [0.7, 0.9, 0.9, 1.0])]),
        ),
    ])
    .unwrap()
}

/// The worked Rub profile on CutWithMenu and CutWithKey.
pub fn paper_rub() -> UserLinguisticVariable {
    use InterpretationLevel::*;
    UserLinguisticVariable::new([
        (
            "CutWithMenu",
            profile(&[(NotTrue, [0.0, 0.1, 0.1, 0.4]), (HalfTrue, [0.2, 0.4, 0.4, 0.6]), (QuiteTrue, [0.7, 0.8, 0.9, 1.0])]),
        ),
        (
            "CutWithKey",
            profile(&[(NotTrue, [0.0, 0.2, 0.3, 0.4]), (HalfTrue, [0.2, 0.3, 0.5, 0.6]), (QuiteTrue, [0.6, 0.7, 0.9, 1.0])]),
        ),
    ])
    .unwrap()
}

/// Membership written out independently of the library.
pub fn oracle_mu(c: [f64; 4], x: f64) -> f64 {
    let [a, b, cc, d] = c;
    if x < a || x > d {
        0.0
    } else if x >= b && x <= cc {
        1.0
    } else if x < b {
        (x - a) / (b - a)
    } else {
        (d - x) / (d - cc)
    }
}

/// Centroid by the composite trapezoid rule on `[0, 1]` with step `h`.
pub fn oracle_centroid(c: [f64; 4], h: f64) -> f64 {
    let n = (1.0 / h).round() as usize;
    let (mut moment, mut area) = (0.0, 0.0);
    for i in 0..=n {
        let x = i as f64 * h;
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        let y = oracle_mu(c, x);
        moment += w * x * y;
        area += w * y;
    }
    moment / area
}

pub fn arb_mf() -> impl Strategy<Value = TrapezoidMF> {
    prop::array::uniform4(0.0..=1.0f64).prop_map(|mut c| {
        c.sort_by(f64::total_cmp);
        mf(c)
    })
}

/// Corners on a 0.05 grid, so vertical edges and triangles come up often.
pub fn arb_grid_mf() -> impl Strategy<Value = TrapezoidMF> {
    prop::array::uniform4(0u32..=20).prop_map(|mut c| {
        c.sort();
        mf(c.map(|v| v as f64 / 20.0))
    })
}

pub fn arb_any_mf() -> impl Strategy<Value = TrapezoidMF> {
    prop_oneof![arb_mf(), arb_grid_mf()]
}

pub fn arb_level() -> impl Strategy<Value = InterpretationLevel> {
    prop::sample::select(InterpretationLevel::ALL.to_vec())
}

pub fn arb_profile() -> impl Strategy<Value = LevelProfile> {
    prop::collection::btree_map(arb_level(), arb_any_mf(), 1..=5)
        .prop_map(|m| LevelProfile::new(m).unwrap())
}

pub fn arb_user_var() -> impl Strategy<Value = UserLinguisticVariable> {
    prop::collection::btree_map(prop::sample::select(PROCEDURES.to_vec()), arb_profile(), 1..=4)
        .prop_map(|m| UserLinguisticVariable::new(m).unwrap())
}

/// Degrees on a 0.001 grid.
pub fn arb_system_var() -> impl Strategy<Value = SystemLinguisticVariable> {
    prop::collection::btree_map(
        prop::sample::select(PROCEDURES.to_vec()),
        (0u32..=1000).prop_map(|v| v as f64 / 1000.0),
        1..=5,
    )
    .prop_map(|m| SystemLinguisticVariable::new(m).unwrap())
}

pub fn arb_system_attribute(goals: usize) -> impl Strategy<Value = SystemAttribute> {
    prop::collection::vec(arb_system_var(), goals).prop_map(|vars| {
        SystemAttribute(
            vars.into_iter()
                .enumerate()
                .map(|(i, v)| (ProcedureId::from(PROCEDURES[i % PROCEDURES.len()]), v))
                .collect(),
        )
    })
}

/// A random, valid knowledge base: `n_objects` objects that each carry one
/// system attribute (2 goals) followed by one user attribute (1 term).
pub fn arb_kb(n_objects: usize) -> impl Strategy<Value = KnowledgeBase> {
    (
        prop::collection::vec(arb_user_var(), n_objects),
        prop::collection::vec(arb_system_attribute(2), n_objects),
    )
        .prop_map(move |(vars, sys)| {
            let mut kb = KnowledgeBase {
                procedures: PROCEDURES.iter().map(|p| ProcedureId::from(*p)).collect(),
                ..KnowledgeBase::default()
            };
            for (i, (var, attr)) in vars.into_iter().zip(sys).enumerate() {
                let term = format!("term-{i}");
                kb.terms.insert(term.clone(), var);
                kb.user_attributes.insert(format!("usage-{i}"), BTreeSet::from([term]));
                kb.system_attributes.insert(format!("goals-{i}"), attr);
                kb.objects
                    .insert(format!("object-{i}"), vec![format!("goals-{i}"), format!("usage-{i}")]);
            }
            kb.validate().unwrap();
            kb
        })
}

/// Deterministic runner, so acceptance output is reproducible.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

pub fn level_map(pairs: &[(InterpretationLevel, f64)]) -> BTreeMap<InterpretationLevel, f64> {
    pairs.iter().copied().collect()
}
