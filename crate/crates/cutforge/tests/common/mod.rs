//! Value generators and input mutation shared by the DSL tests and the
//! acceptance run.

#![allow(dead_code)]

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cutforge::cutlang::{json, CutError, Session, Value};
use cutforge::idealcalc::{solve_ideal, Ideal, ValuedField};
use cutforge::segcalc::{solve, Sampler};
use cutforge::{ConvexSubgroup, GroupSignature};

pub const GROUPS: &[&str] = &["Z", "Q", "Z,Z", "Q,Z", "Z,Q", "Q,Q", "Z,Z,Z", "Q,Z,Q"];

pub fn random_value(sig: &GroupSignature, s: &mut Sampler) -> Value {
    let n = sig.rank();
    let f = ValuedField::new(sig.clone());
    match s.rng().gen_range(0..9) {
        0 => {
            let k: i64 = s.rng().gen_range(-1000..=1000);
            let big = BigInt::from(s.rng().gen::<u64>()) * BigInt::from(s.rng().gen::<u64>());
            Value::Int(if s.rng().gen_bool(0.2) { big * k } else { k.into() })
        }
        1 => Value::Bool(s.rng().gen()),
        2 => Value::Element(s.element()),
        3 => Value::Segment(s.segment()),
        4 => Value::Ideal(Ideal::from_segment(s.segment())),
        5 => Value::Overring(f.overring(s.rng().gen_range(1..=n)).unwrap()),
        6 => Value::Subgroup(ConvexSubgroup::new(sig, s.rng().gen_range(0..=n)).unwrap()),
        7 => Value::Solve(solve(&s.segment(), &s.segment()).unwrap()),
        _ => {
            let (a, b) = (Ideal::from_segment(s.segment()), Ideal::from_segment(s.segment()));
            Value::SolveIdeal(solve_ideal(&a, &b).unwrap())
        }
    }
}

/// Prints `count` generated values, reads each back in a fresh session and
/// through JSON, and returns the number checked.
pub fn round_trip(count: usize, seed: u64) -> Result<usize, String> {
    let sigs: Vec<GroupSignature> = GROUPS.iter().map(|g| GroupSignature::parse(g).unwrap()).collect();
    let mut samplers: Vec<Sampler> =
        sigs.iter().enumerate().map(|(i, g)| Sampler::new(g, 5, 6, seed, i as u64)).collect();
    for i in 0..count {
        let k = i % sigs.len();
        let (sig, sampler) = (&sigs[k], &mut samplers[k]);
        let v = random_value(sig, sampler);
        let text = v.to_string();
        let back = Session::with_group(sig.clone()).eval_str(&text).map_err(|e| format!("{sig}: `{text}`: {e}"))?;
        if back != v {
            return Err(format!("{sig}: `{text}` read back as `{back}`"));
        }
        let encoded = json::to_json_string(&v);
        let decoded = json::from_json_str(sig, &encoded).map_err(|e| format!("{sig}: {encoded}: {e}"))?;
        if decoded != v {
            return Err(format!("{sig}: {encoded} decoded as `{decoded}`"));
        }
    }
    Ok(count)
}

const CORPUS: &[&str] = &[
    include_str!("../../examples/idempotents.cut"),
    include_str!("../../examples/ideals.cut"),
    "group Z^2\nS = seg(1, >=, [0,0])\nprint S + S",
    "group Q,Z\nS = seg(1,>,[0,0])\nprint S + S\nprint delta(S) - [1/2, 3]",
    "group Q,Q\nA = seg(2, >, [1/2, -3/4])\nB = ntimes(A, 3)\nsolve A + ? = B\nprint ms(B, A)\nprint push(B, 1)",
    "group Z^3\nprint cdiff(seg(3, >=, [1, 2, 3]), seg(2, >, [0, 1, 0]))\nprint hat(seg(1, >, [0]))",
    "group Q,Z\nI = ideal(seg(1, >, [1/3, 0]))\nprint dhat(I)\nprint closure(I, O(1))\nsolve I * I = I * ?",
    "group Z,Q\nprint annpow(ideal(seg(1, >=, [1, 0])), [0, 1/2], 2)\nprint annball([1, 0], O(1), 3)",
    "group Q\nprint no-solution { s2' = seg(1, >, [0]), tmax = seg(1, >=, [0]) }\nprint largest Mv\nprint unique (seg(1, >=, [-2]) + [1])",
    "group Z^2\nprint eq(inv(seg(1, >=, [5, 0])), H(1))\nprint member(seg(2, >, [0, 0]), [0, 1]) # yes",
];

const PIECES: &[&str] = &[
    "(",
    ")",
    "[",
    "]",
    "{",
    "}",
    ",",
    "=",
    ">=",
    ">",
    "+",
    "-",
    "*",
    "/",
    "^",
    "?",
    "#",
    "\"",
    "'",
    "\n",
    " ",
    "0",
    "1",
    "-1",
    "1/2",
    "0/0",
    "99999999999999999999",
    "Z",
    "Q",
    "seg",
    "ideal",
    "group",
    "print",
    "solve",
    "delta",
    "ms",
    "push",
    "O",
    "M",
    "H",
    "Ov",
    "Mv",
    "no-solution",
    "unique",
    "largest",
    "s2'",
    "tmax",
    "i2'",
    "jmax",
    "é",
    "\t",
    "\u{0}",
];

fn mutate(src: &str, rng: &mut ChaCha8Rng) -> String {
    let mut chars: Vec<char> = src.chars().collect();
    for _ in 0..rng.gen_range(1..=4) {
        let at = rng.gen_range(0..=chars.len());
        match rng.gen_range(0..5) {
            0 if !chars.is_empty() => {
                let end = (at + rng.gen_range(1..8)).min(chars.len());
                chars.drain(at.min(end)..end);
            }
            1 => {
                let piece = PIECES.choose(rng).unwrap();
                chars.splice(at..at, piece.chars());
            }
            2 if !chars.is_empty() => {
                let i = rng.gen_range(0..chars.len());
                chars[i] = *PIECES.choose(rng).unwrap().chars().collect::<Vec<_>>().first().unwrap_or(&'x');
            }
            3 if at < chars.len() => {
                let end = (at + rng.gen_range(1..12)).min(chars.len());
                let copy: Vec<char> = chars[at..end].to_vec();
                chars.splice(at..at, copy);
            }
            _ => chars.insert(at, char::from(rng.gen_range(b' '..=b'~'))),
        }
    }
    chars.into_iter().collect()
}

/// Checks that an error points inside the input and says where.
fn located(src: &str, e: &CutError) -> bool {
    let span = e.span();
    let lines = src.split('\n').count();
    let prefix = format!("{}:{}: ", span.line, span.col);
    span.line >= 1 && span.col >= 1 && span.line <= lines + 1 && e.to_string().starts_with(&prefix)
}

pub struct FuzzStats {
    pub runs: usize,
    pub errors: usize,
}

/// Runs `count` mutated programs; fails on a panic or an unlocated error.
pub fn fuzz(count: usize, seed: u64) -> Result<FuzzStats, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut errors = 0;
    let hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let result = (|| {
        for _ in 0..count {
            let base = CORPUS.choose(&mut rng).unwrap();
            let src = mutate(base, &mut rng);
            let outcome = catch_unwind(AssertUnwindSafe(|| {
                let mut session = Session::new();
                session.run_with(&src, &mut |v| drop(v.to_string()))
            }));
            match outcome {
                Err(_) => return Err(format!("panic on {src:?}")),
                Ok(Err(e)) if !located(&src, &e) => return Err(format!("badly located `{e}` on {src:?}")),
                Ok(Err(_)) => errors += 1,
                Ok(Ok(())) => {}
            }
        }
        Ok(FuzzStats { runs: count, errors })
    })();
    std::panic::set_hook(hook);
    result
}

/// The corpus itself must run cleanly.
pub fn corpus_runs() -> Result<(), String> {
    for src in CORPUS {
        Session::new().run(src).map_err(|e| format!("{e} in {src:?}"))?;
    }
    Ok(())
}
