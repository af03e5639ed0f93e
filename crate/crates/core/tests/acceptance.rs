//! Acceptance suite. Each test prints one `[PASS]`/`[FAIL]` line per check
//! and fails if any of its checks fail.
//!
//! Run with `cargo test -p fuzzynet --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::cell::Cell;
use std::collections::BTreeMap;
use std::io::Cursor;
use std::time::Instant;

use common::*;
use fuzzynet::diagnosis::Query;
use fuzzynet::fuzzy::{discrete_inclusion, DiscreteFuzzySet, InterpretationLevel, LevelProfile};
use fuzzynet::interface::repl::Repl;
use fuzzynet::kb::{builtin_sample_kb, parse_kb, replay, KnowledgeBase};
use fuzzynet::semnet::{incl_system_vars, incl_user_vars, ProcedureId};
use fuzzynet::similarity::{sim_attributes, sim_objects, sim_user_vars};
use fuzzynet::Engine;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

fn report(id: &str, what: &str, ok: bool, detail: impl AsRef<str>) -> bool {
    let mark = if ok { "PASS" } else { "FAIL" };
    println!("[{mark}] {id} {what}: {}", detail.as_ref());
    ok
}

fn finish(id: &str, results: &[bool]) {
    let failed = results.iter().filter(|ok| !**ok).count();
    assert_eq!(failed, 0, "{id}: {failed} of {} checks failed", results.len());
}

fn trunc2(v: f64) -> f64 {
    (v * 100.0 + 1e-9).floor() / 100.0
}

#[test]
fn c1_centroid_goldens() {
    use InterpretationLevel::*;
    let start = Instant::now();
    let table: [(&str, fuzzynet::semnet::UserLinguisticVariable, &str, [f64; 3]); 4] = [
        ("Gum", paper_gum(), "CutWithMenu", [0.14, 0.38, 0.86]),
        ("Gum", paper_gum(), "CutWithKey", [0.14, 0.40, 0.86]),
        ("Rub", paper_rub(), "CutWithMenu", [0.16, 0.40, 0.85]),
        ("Rub", paper_rub(), "CutWithKey", [0.22, 0.40, 0.80]),
    ];
    let mut results = Vec::new();
    for (term, var, procedure, printed) in &table {
        let got = var.profile(procedure).unwrap().defuzzify();
        for (level, p) in [NotTrue, HalfTrue, QuiteTrue].into_iter().zip(printed) {
            let v = got[&level];
            let dev = (v - p).abs();
            let ok = dev <= 0.005;
            results.push(report(
                "C1",
                &format!("{term} {procedure} {level}"),
                ok,
                format!("{v:.6} vs {p:.2} (|dev| {dev:.4}, 2-dp cut {:.2})", trunc2(v)),
            ));
        }
    }
    let exact = [
        (paper_gum(), "CutWithMenu", QuiteTrue, 13.0 / 15.0),
        (paper_rub(), "CutWithMenu", NotTrue, 1.0 / 6.0),
    ];
    for (var, p, level, want) in exact {
        let v = var.profile(p).unwrap().defuzzify()[&level];
        results.push(report("C1", &format!("exact {p} {level}"), (v - want).abs() < 1e-12, format!("{v:.12}")));
    }
    let elapsed = start.elapsed();
    results.push(report("C1", "runtime", elapsed.as_secs_f64() < 1.0, format!("{elapsed:?}")));
    finish("C1", &results);
}

#[test]
fn c2_similarity_golden() {
    let report_ = sim_user_vars(&paper_gum(), &paper_rub()).unwrap();
    let cm = report_.procedure("CutWithMenu").unwrap();
    let ck = report_.procedure("CutWithKey").unwrap();
    let checks = [
        ("f_and(CutWithMenu)", cm.intersection, 0.46),
        ("f_or(CutWithMenu)", cm.union, 0.47),
        ("f_and(CutWithKey)", ck.intersection, 0.45),
        ("f_or(CutWithKey)", ck.union, 0.49),
        ("Sim(to-gum, to-rub)", report_.ratio, 0.94),
    ];
    let results: Vec<bool> = checks
        .iter()
        .map(|(what, v, want)| {
            report("C2", what, (v - want).abs() <= 0.01, format!("{v:.6} vs {want:.2} ± 0.01"))
        })
        .collect();

    let kb = builtin_sample_kb();
    let sample = sim_user_vars(&kb.terms["to-gum"], &kb.terms["to-rub"]).unwrap();
    report(
        "C2",
        "sample KB agrees with worked data",
        (sample.ratio - report_.ratio).abs() < 1e-12,
        format!("{:.6}", sample.ratio),
    );
    finish("C2", &results);
}

#[test]
fn c3_centroid_matches_numerical_integration() {
    let mut runner = runner(1000);
    let worst = Cell::new(0.0f64);
    let count = Cell::new(0u32);
    let outcome = runner.run(&arb_mf(), |m| {
        let exact = m.centroid();
        let numeric = oracle_centroid(m.corners(), 1e-4);
        let err = (exact - numeric).abs();
        worst.set(worst.get().max(err));
        count.set(count.get() + 1);
        prop_assert!(err <= 1e-4, "{m}: closed {exact} vs numeric {numeric}");
        Ok(())
    });
    let ok = report(
        "C3",
        "closed form vs trapezoid rule (h = 1e-4)",
        outcome.is_ok() && count.get() >= 1000,
        format!("{} MFs, max |err| {:.2e}{}", count.get(), worst.get(), outcome.err().map(|e| format!(", {e}")).unwrap_or_default()),
    );
    finish("C3", &[ok]);
}

fn check<S: Strategy>(
    id: &str,
    what: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> bool {
    let mut runner = runner(1000);
    let outcome = runner.run(&strategy, test);
    report(
        id,
        what,
        outcome.is_ok(),
        match outcome {
            Ok(()) => "1000 cases".to_string(),
            Err(e) => e.to_string(),
        },
    )
}

fn brute_force_inclusion(a: &BTreeMap<String, f64>, b: &BTreeMap<String, f64>) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for (k, x) in a {
        let y = b[k];
        num += if x < &y { *x } else { y };
        den += x;
    }
    num / den
}

#[test]
fn c4_inclusion_properties() {
    let mut results = Vec::new();
    results.push(check(
        "C4",
        "system-variable degree in [0, 1]",
        (arb_system_var(), arb_system_var()),
        |(a, b)| {
            prop_assume!(a.iter().any(|(_, d)| d > 0.0));
            let d = incl_system_vars(&a, &b).unwrap();
            prop_assert!((0.0..=1.0).contains(&d), "{d}");
            Ok(())
        },
    ));
    results.push(check(
        "C4",
        "user-variable degree in [0, 1]",
        (arb_user_var(), arb_user_var()),
        |(t, s)| {
            let Ok(d) = incl_user_vars(&t, &s) else {
                return Err(TestCaseError::reject("zero centroids"));
            };
            prop_assert!((0.0..=1.0).contains(&d), "{d}");
            Ok(())
        },
    ));
    results.push(check("C4", "system-variable reflexivity", arb_system_var(), |a| {
        prop_assume!(a.iter().any(|(_, d)| d > 0.0));
        prop_assert_eq!(incl_system_vars(&a, &a).unwrap(), 1.0);
        Ok(())
    }));
    results.push(check("C4", "user-variable reflexivity", arb_user_var(), |t| {
        let Ok(d) = incl_user_vars(&t, &t) else {
            return Err(TestCaseError::reject("zero centroids"));
        };
        prop_assert_eq!(d, 1.0);
        Ok(())
    }));
    results.push(check(
        "C4",
        "system inclusion is exactly 1 iff dominated",
        (arb_system_var(), arb_system_var(), any::<bool>()),
        |(a, b, force)| {
            prop_assume!(a.iter().any(|(_, d)| d > 0.0));
            // Half the cases lift b over a so both outcomes are exercised.
            let b = if force {
                let lifted = a
                    .iter()
                    .map(|(p, d)| (p.clone(), d.max(b.degree(p.as_str()))))
                    .chain(b.iter().map(|(p, d)| (p.clone(), d)))
                    .fold(BTreeMap::new(), |mut m: BTreeMap<ProcedureId, f64>, (p, d)| {
                        let e = m.entry(p).or_insert(0.0);
                        *e = e.max(d);
                        m
                    });
                fuzzynet::semnet::SystemLinguisticVariable::new(lifted).unwrap()
            } else {
                b
            };
            let dominated = a.iter().all(|(p, d)| d <= b.degree(p.as_str()));
            let deg = incl_system_vars(&a, &b).unwrap();
            prop_assert_eq!(deg == 1.0, dominated, "deg {}", deg);
            Ok(())
        },
    ));
    let universe = prop::collection::vec((0.0..=1.0f64, 0.0..=1.0f64), 10);
    results.push(check(
        "C4",
        "discrete inclusion equals brute-force sum bit-exactly",
        universe,
        |pairs| {
            let a: BTreeMap<String, f64> = pairs.iter().enumerate().map(|(i, p)| (format!("u{i:02}"), p.0)).collect();
            let b: BTreeMap<String, f64> = pairs.iter().enumerate().map(|(i, p)| (format!("u{i:02}"), p.1)).collect();
            prop_assume!(a.values().any(|x| *x > 0.0));
            let got = discrete_inclusion(
                &DiscreteFuzzySet::new(a.clone()).unwrap(),
                &DiscreteFuzzySet::new(b.clone()).unwrap(),
            )
            .unwrap();
            let want = brute_force_inclusion(&a, &b);
            prop_assert_eq!(got.to_bits(), want.to_bits(), "{} vs {}", got, want);
            Ok(())
        },
    ));
    finish("C4", &results);
}

#[test]
fn c5_similarity_properties() {
    let mut runner = runner(1000);
    let kbs = Cell::new(0u32);
    let compared = Cell::new(0u32);
    let outcome = runner.run(&arb_kb(3), |kb| {
        kbs.set(kbs.get() + 1);
        let net = kb.net().unwrap();
        let objects: Vec<_> = net.objects.values().collect();
        for x in &objects {
            for y in &objects {
                let xy = sim_objects(x, y);
                let yx = sim_objects(y, x);
                match (&xy, &yx) {
                    (Ok(s), Ok(t)) => {
                        compared.set(compared.get() + 1);
                        prop_assert_eq!(s, t, "symmetry {} / {}", x.name, y.name);
                        prop_assert!((0.0..=1.0).contains(s), "bounds {}", s);
                        let attrs: Vec<f64> = x
                            .attributes
                            .iter()
                            .zip(&y.attributes)
                            .map(|(a, b)| sim_attributes(&a.value, &b.value).unwrap())
                            .collect();
                        for a in &attrs {
                            prop_assert!((0.0..=1.0).contains(a), "attribute bounds {}", a);
                        }
                        let min = attrs.iter().copied().fold(f64::INFINITY, f64::min);
                        prop_assert_eq!(*s, min, "object sim is min of attribute sims");
                        if x.name == y.name {
                            prop_assert_eq!(*s, 1.0, "reflexivity {}", x.name);
                        }
                    }
                    (Err(_), Err(_)) => prop_assert!(x.name != y.name || self_incomparable(&kb, &x.name)),
                    _ => prop_assert!(false, "only one direction comparable: {:?} / {:?}", xy, yx),
                }
            }
        }
        Ok(())
    });
    let ok = report(
        "C5",
        "symmetry, reflexivity, bounds, min over attributes",
        outcome.is_ok() && kbs.get() >= 1000,
        format!(
            "{} KBs, {} comparable object pairs{}",
            kbs.get(),
            compared.get(),
            outcome.err().map(|e| format!(", {e}")).unwrap_or_default()
        ),
    );
    finish("C5", &[ok]);
}

/// An object cannot be compared with itself only when one of its
/// linguistic values is identically zero.
fn self_incomparable(kb: &KnowledgeBase, object: &str) -> bool {
    kb.objects[object].iter().any(|attr| match kb.attribute(attr) {
        Ok(fuzzynet::semnet::Attribute::System(s)) => s.0.values().any(|v| v.iter().all(|(_, d)| d == 0.0)),
        Ok(fuzzynet::semnet::Attribute::User(u)) => u.0.values().any(|v| {
            v.centroids().values().all(|levels| levels.values().all(|c| *c == 0.0))
        }),
        Err(_) => true,
    })
}

/// A one-term KB whose only link is `term -> CutWithMenu` at `quite_true`.
fn learning_kb(initial: fuzzynet::fuzzy::TrapezoidMF) -> KnowledgeBase {
    let mut kb = KnowledgeBase {
        procedures: PROCEDURES.iter().map(|p| ProcedureId::from(*p)).collect(),
        ..KnowledgeBase::default()
    };
    kb.terms.insert(
        "to-blot".into(),
        fuzzynet::semnet::UserLinguisticVariable::new([(
            "CutWithMenu",
            LevelProfile::single(InterpretationLevel::QuiteTrue, initial),
        )])
        .unwrap(),
    );
    kb
}

#[test]
fn c6_learning_invariants() {
    let mut results = Vec::new();
    results.push(check(
        "C6",
        "blended corners stay ordered",
        (arb_any_mf(), arb_level(), 0.0..=1.0f64, 1usize..20),
        |(m, level, eta, n)| {
            let anchor = level.default_mf();
            let mut cur = m;
            for _ in 0..n {
                cur = cur.blend(&anchor, eta);
                let [a, b, c, d] = cur.corners();
                prop_assert!(0.0 <= a && a <= b && b <= c && c <= d && d <= 1.0, "{}", cur);
            }
            Ok(())
        },
    ));
    results.push(check(
        "C6",
        "anchor distance after n confirmations is (1 - eta)^n of the initial",
        (arb_mf(), 0.01..=0.99f64, 1usize..12),
        |(m, eta, n)| {
            let anchor = InterpretationLevel::QuiteTrue.default_mf();
            let engine = Engine::in_memory(learning_kb(m));
            let d0 = m.corner_distance(&anchor);
            for _ in 0..n {
                let s = engine.diagnose(Query::new("blot")).unwrap();
                engine.confirm(s.id, "CutWithMenu", eta).unwrap();
            }
            let kb = engine.snapshot();
            let profile = kb.terms["to-blot"].profile("CutWithMenu").unwrap();
            let (level, now) = profile.dominant().unwrap();
            prop_assert_eq!(level, InterpretationLevel::QuiteTrue);
            let dn = now.corner_distance(&anchor);
            let want = (1.0 - eta).powi(n as i32) * d0;
            prop_assert!((dn - want).abs() <= 1e-9, "{} vs {}", dn, want);
            Ok(())
        },
    ));
    results.push(check(
        "C6",
        "log replay reproduces the final KB byte-for-byte",
        prop::collection::vec((0usize..3, any::<bool>(), 0.05..=0.9f64), 1..12),
        |ops| {
            let initial = builtin_sample_kb();
            let engine = Engine::in_memory(initial.clone());
            let goals = ["rub", "gum", "smudge"];
            for (g, accept, eta) in ops {
                let q = Query::new(goals[g]).with_context(["to-rub"]);
                let s = engine.diagnose(q).unwrap();
                let Some(first) = s.candidates.first() else { continue };
                let name = first.procedure.to_string();
                if accept {
                    engine.confirm(s.id, &name, eta).unwrap();
                } else {
                    engine.reject(s.id, &name, eta).unwrap();
                }
            }
            let _ = engine.learn("to-wipe", "EraseWithKey", InterpretationLevel::RatherTrue);
            let records = engine.log_records();
            let replayed = replay(&initial, &records).unwrap();
            prop_assert_eq!(
                replayed.to_canonical_string().unwrap(),
                engine.snapshot().to_canonical_string().unwrap()
            );
            Ok(())
        },
    ));
    finish("C6", &results);
}

fn repl_score(text: &str, session: u64, procedure: &str) -> Option<f64> {
    let header = format!("session {session}:");
    let block = text.split(&header).nth(1)?;
    block
        .lines()
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .find(|l| l.split_whitespace().nth(1) == Some(procedure))?
        .split_whitespace()
        .find_map(|w| w.strip_prefix("score="))?
        .parse()
        .ok()
}

#[test]
fn c7_plumbing() {
    let mut results = Vec::new();
    let sample = builtin_sample_kb();

    let text = sample.to_canonical_string().unwrap();
    let parsed = parse_kb(&text).unwrap();
    results.push(report("C7", "KB round-trip identity", parsed == sample, format!("{} bytes", text.len())));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kb.json");
    fuzzynet::kb::save_kb(&sample, &path).unwrap();
    let loaded = fuzzynet::kb::load_kb(&path).unwrap();
    results.push(report("C7", "KB round-trip through a file", loaded == sample, path.display().to_string()));

    let again = parsed.to_canonical_string().unwrap();
    results.push(report("C7", "canonical serialization fixed point", again == text, "sample KB"));
    results.push(check("C7", "canonical fixed point on random KBs", arb_kb(3), |kb| {
        let once = kb.to_canonical_string().unwrap();
        let twice = parse_kb(&once).unwrap().to_canonical_string().unwrap();
        prop_assert_eq!(once, twice);
        Ok(())
    }));

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = fuzzynet::cli::run(["fuzzynet", "sim", "@sample", "to-gum", "to-rub"], &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    let printed = out
        .lines()
        .last()
        .and_then(|l| l.rsplit(" = ").next())
        .and_then(|v| v.parse::<f64>().ok());
    results.push(report(
        "C7",
        "CLI `sim` on the sample KB prints 0.94",
        code == 0 && printed.is_some_and(|v| format!("{v:.2}") == "0.94"),
        format!("exit {code}, printed {:?}", out.lines().last().unwrap_or("")),
    ));

    let engine = Engine::in_memory(sample.clone());
    let script = "diagnose rub\nconfirm EraseWithMenu\ndiagnose rub\nquit\n";
    let mut transcript = Vec::new();
    Repl::new(&engine).run(Cursor::new(script), &mut transcript).unwrap();
    let transcript = String::from_utf8(transcript).unwrap();
    let before = repl_score(&transcript, 1, "EraseWithMenu");
    let after = repl_score(&transcript, 2, "EraseWithMenu");
    results.push(report(
        "C7",
        "REPL diagnose -> confirm -> re-diagnose raises the score",
        matches!((before, after), (Some(b), Some(a)) if a > b),
        format!("EraseWithMenu {before:?} -> {after:?}"),
    ));
    finish("C7", &results);
}
