//! One line per acceptance criterion. Run with
//! `cargo test -p cutforge --test acceptance`.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_rational::Rational64;

use cutforge::oracle::battery::{
    agreement_checks, annihilator_formulas, ideal_identities, idempotent_census, lemma_battery, m_property_checks,
    solver_trichotomy, SuiteCheck,
};
use cutforge::oracle::WindowSpec;
use cutforge::segcalc::{enumerate_segments, FinalSegment};
use cutforge::GroupSignature;

fn sig(s: &str) -> GroupSignature {
    GroupSignature::parse(s).unwrap()
}

fn window(radius: i64) -> WindowSpec {
    WindowSpec { radius, margin: Rational64::new(1, 2), samples: 10_000, seed: 1, ..WindowSpec::default() }
}

struct Outcome {
    passed: bool,
    detail: String,
}

/// Sums up a set of checks; the first failing one goes in the detail.
fn tally(checks: &[SuiteCheck]) -> Outcome {
    let instances: usize = checks.iter().map(|c| c.instances).sum();
    let bad: Vec<&SuiteCheck> = checks.iter().filter(|c| !c.passed()).collect();
    let mut detail = format!("{} checks, {instances} instances, {} failing", checks.len(), bad.len());
    if let Some(c) = bad.first() {
        detail.push_str(&format!("; first: {c}"));
    }
    Outcome { passed: bad.is_empty() && !checks.is_empty(), detail }
}

fn oracle_agreement() -> Outcome {
    let mut checks = agreement_checks(&sig("Z,Z"), 3, &window(12)).unwrap();
    checks.extend(agreement_checks(&sig("Z,Z,Z"), 2, &window(6)).unwrap());
    tally(&checks)
}

const SEG_RUNS: [(&str, i64, i64); 2] = [("Z,Z", 3, 12), ("Z,Z,Z", 2, 6)];

fn trichotomy() -> Outcome {
    let checks: Vec<_> = SEG_RUNS.iter().flat_map(|&(g, b, m)| solver_trichotomy(&sig(g), b, &window(m))).collect();
    tally(&checks)
}

fn lemmas() -> Outcome {
    let mut checks = lemma_battery(&sig("Z,Z"), 3, &window(12));
    // some lemmas only apply to a quarter of the draws; each still needs 10^4
    let w = WindowSpec { samples: 50_000, ..window(12) };
    for g in ["Q,Z", "Q,Q"] {
        checks.extend(lemma_battery(&sig(g), 3, &w));
    }
    let mut out = tally(&checks);
    // random groups must really see 10^4 instances per check
    let thin = checks.iter().skip(14).filter(|c| c.instances < 10_000).count();
    if thin > 0 {
        out.passed = false;
        out.detail.push_str(&format!("; {thin} random checks under 10000 instances"));
    }
    out
}

fn idempotents() -> Outcome {
    let g = sig("Q,Z");
    let c = idempotent_census(&g, 3);
    let hits: Vec<FinalSegment> =
        enumerate_segments(&g, 3, 2).into_iter().filter(|s| s.add(s).map(|t| t == *s).unwrap_or(false)).collect();
    let names: Vec<String> = hits.iter().map(ToString::to_string).collect();
    let mut out = tally(&[c]);
    out.passed &= hits.len() == 3;
    out.detail = format!("{}; hits: {}", out.detail, names.join(", "));
    out
}

fn m_properties() -> Outcome {
    let start = Instant::now();
    let checks: Vec<_> = ["Z", "Q", "Z,Z", "Q,Z", "Q,Q"].iter().flat_map(|g| m_property_checks(&sig(g), 2)).collect();
    let mut out = tally(&checks);
    out.passed &= checks.len() == 5 * 14;
    out.detail.push_str(&format!("; {:.1}s", start.elapsed().as_secs_f64()));
    out
}

const IDEAL_RUNS: [(&str, i64); 4] = [("Z,Z", 3), ("Z,Z,Z", 2), ("Q,Z", 2), ("Q,Q", 2)];

fn ideals() -> Outcome {
    let checks: Vec<_> = IDEAL_RUNS.iter().flat_map(|&(g, b)| ideal_identities(&sig(g), b)).collect();
    tally(&checks)
}

fn annihilators() -> Outcome {
    let checks: Vec<_> = IDEAL_RUNS.iter().flat_map(|&(g, b)| annihilator_formulas(&sig(g), b)).collect();
    tally(&checks)
}

fn dsl() -> Outcome {
    let mut notes = Vec::new();
    let mut passed = true;
    match common::round_trip(10_000, 2024) {
        Ok(n) => notes.push(format!("{n} values round-trip")),
        Err(e) => {
            passed = false;
            notes.push(format!("round trip: {e}"));
        }
    }
    match common::fuzz(100_000, 2024) {
        Ok(s) => notes.push(format!("{} mutated inputs, {} located errors, no crash", s.runs, s.errors)),
        Err(e) => {
            passed = false;
            notes.push(format!("fuzz: {e}"));
        }
    }
    for (group, bound, radius) in [("Z,Z", "3", "12"), ("Q,Z", "2", "12")] {
        let status = Command::new(env!("CARGO_BIN_EXE_cutforge"))
            .args(["verify", "--group", group, "--anchor-bound", bound, "--box", radius, "--suite", "all"])
            .output()
            .unwrap()
            .status;
        passed &= status.success();
        notes.push(format!("verify {group} exit {}", status.code().unwrap_or(-1)));
    }
    Outcome { passed, detail: notes.join("; ") }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("exhaustive oracle agreement on Z^2 (bound 3, m 12) and Z^3 (bound 2, m 6)", oracle_agreement),
        ("solve trichotomy and postconditions", trichotomy),
        ("lemma battery on Z^2 and 10^4 random instances on Q x Z and Q^2", lemmas),
        ("exactly three idempotent segments in Q x Z", idempotents),
        ("M(I) property suite on Z, Q, Z^2, Q x Z, Q^2", m_properties),
        ("ideal identities", ideals),
        ("annihilator formulas", annihilators),
        ("DSL round trip, fuzzing and the verify command", dsl),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}  {name} ({:.1}s)  [{}]", i + 1, start.elapsed().as_secs_f64(), out.detail);
        if !out.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
