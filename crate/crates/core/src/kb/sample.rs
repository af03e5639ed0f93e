//! The built-in word-processor sample.
//!
//! `to-gum` and `to-rub` carry the worked Gum/Rub profiles on CutWithMenu
//! and CutWithKey, plus their EraseWithMenu readings. The `edit-goals`
//! system attribute holds the expert equivalence rows for CutWithMenu and
//! EraseWithKey. The remaining attributes, objects, classes and the
//! instance are small fixtures that give every edge kind something to grade.

use std::collections::{BTreeMap, BTreeSet};

use super::KnowledgeBase;
use crate::fuzzy::{InterpretationLevel, LevelProfile, TrapezoidMF};
use crate::semnet::{
    Edge, EdgeKind, ProcedureId, SystemAttribute, SystemLinguisticVariable, UserLinguisticVariable,
};

/// Pass this as a KB path to get [`builtin_sample_kb`].
pub const SAMPLE_PATH: &str = "@sample";

fn profile(rows: &[(InterpretationLevel, [f64; 4])]) -> LevelProfile {
    LevelProfile::new(
        rows.iter()
            .map(|(l, c)| (*l, TrapezoidMF::from_corners(*c).expect("sample MF"))),
    )
    .expect("sample profile")
}

fn equivalences(rows: &[(&str, &[(&str, f64)])]) -> SystemAttribute {
    SystemAttribute(
        rows.iter()
            .map(|(goal, pairs)| {
                (
                    ProcedureId::from(*goal),
                    SystemLinguisticVariable::new(pairs.iter().copied()).expect("sample degrees"),
                )
            })
            .collect(),
    )
}

fn names(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn edge(from: &str, to: &str, kind: EdgeKind) -> Edge {
    Edge {
        from: from.into(),
        to: to.into(),
        kind,
        degree: 0.0,
    }
}

pub fn builtin_sample_kb() -> KnowledgeBase {
    use InterpretationLevel::*;

    let gum = UserLinguisticVariable::new([
        (
            "CutWithMenu",
            profile(&[
                (NotTrue, [0.0, 0.0, 0.1, 0.4]),
                (HalfTrue, [0.2, 0.3, 0.4, 0.6]),
                (QuiteTrue, [0.7, 0.9, 0.9, 1.0]),
            ]),
        ),
        (
            "CutWithKey",
            profile(&[
                (NotTrue, [0.0, 0.0, 0.1, 0.4]),
                (HalfTrue, [0.2, 0.4, 0.4, 0.6]),
                (QuiteTrue, [0.7, 0.9, 0.9, 1.0]),
            ]),
        ),
        (
            "EraseWithMenu",
            profile(&[
                (NotTrue, [0.0, 0.0, 0.1, 0.4]),
                (HalfTrue, [0.2, 0.4, 0.4, 0.6]),
                (QuiteTrue, [0.4, 0.9, 0.9, 1.0]),
            ]),
        ),
    ])
    .expect("sample term");

    let rub = UserLinguisticVariable::new([
        (
            "CutWithMenu",
            profile(&[
                (NotTrue, [0.0, 0.1, 0.1, 0.4]),
                (HalfTrue, [0.2, 0.4, 0.4, 0.6]),
                (QuiteTrue, [0.7, 0.8, 0.9, 1.0]),
            ]),
        ),
        (
            "CutWithKey",
            profile(&[
                (NotTrue, [0.0, 0.2, 0.3, 0.4]),
                (HalfTrue, [0.2, 0.3, 0.5, 0.6]),
                (QuiteTrue, [0.6, 0.7, 0.9, 1.0]),
            ]),
        ),
        (
            "EraseWithMenu",
            profile(&[
                (NotTrue, [0.0, 0.0, 0.2, 0.4]),
                (HalfTrue, [0.2, 0.4, 0.4, 0.6]),
                (RatherTrue, [0.7, 0.9, 0.9, 1.0]),
            ]),
        ),
    ])
    .expect("sample term");

    let procedures: BTreeSet<ProcedureId> = ["CutWithMenu", "CutWithKey", "EraseWithMenu", "EraseWithKey"]
        .into_iter()
        .map(ProcedureId::from)
        .collect();

    let system_attributes = BTreeMap::from([
        (
            "edit-goals".to_string(),
            equivalences(&[
                ("CutWithMenu", &[("CutWithKey", 0.9), ("EraseWithMenu", 0.6)]),
                ("EraseWithKey", &[("CutWithKey", 0.5), ("EraseWithMenu", 0.8)]),
            ]),
        ),
        (
            "word-edit-goals".to_string(),
            equivalences(&[
                ("CutWithMenu", &[("CutWithKey", 0.8), ("EraseWithMenu", 0.5)]),
                ("EraseWithKey", &[("CutWithKey", 0.4), ("EraseWithMenu", 0.9)]),
            ]),
        ),
        (
            "selection-goals".to_string(),
            equivalences(&[
                ("CutWithMenu", &[("CutWithKey", 0.7), ("EraseWithMenu", 0.6)]),
                ("EraseWithKey", &[("CutWithKey", 0.5), ("EraseWithMenu", 0.7)]),
            ]),
        ),
    ]);

    let user_attributes = BTreeMap::from([
        ("gum-sense".to_string(), BTreeSet::from(["to-gum".to_string()])),
        ("rub-sense".to_string(), BTreeSet::from(["to-rub".to_string()])),
        (
            "novice-verbs".to_string(),
            BTreeSet::from(["to-gum".to_string(), "to-rub".to_string()]),
        ),
    ]);

    let kb = KnowledgeBase {
        procedures,
        terms: BTreeMap::from([("to-gum".to_string(), gum), ("to-rub".to_string(), rub)]),
        system_attributes,
        user_attributes,
        objects: BTreeMap::from([
            ("chain-of-characters".to_string(), names(&["edit-goals"])),
            ("word".to_string(), names(&["word-edit-goals"])),
            ("gum".to_string(), names(&["gum-sense"])),
            ("rub".to_string(), names(&["rub-sense"])),
            ("letters".to_string(), names(&["novice-verbs"])),
        ]),
        classes: BTreeMap::from([
            ("text-fragment".to_string(), names(&["edit-goals"])),
            ("word-unit".to_string(), names(&["word-edit-goals"])),
            ("cut-verbs".to_string(), names(&["gum-sense"])),
            ("erase-verbs".to_string(), names(&["rub-sense"])),
        ]),
        instances: BTreeMap::from([("selected-word".to_string(), names(&["selection-goals"]))]),
        edges: vec![
            edge("word-unit", "text-fragment", EdgeKind::KindOf),
            edge("cut-verbs", "erase-verbs", EdgeKind::KindOf),
            edge("selected-word", "word-unit", EdgeKind::IsA),
            edge("selected-word", "text-fragment", EdgeKind::IsA),
        ],
        ..KnowledgeBase::default()
    };
    kb.graded().expect("sample KB grades")
}
