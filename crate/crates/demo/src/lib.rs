//! Browser bindings for the playground page in `www/`.
//!
//! Each export takes and returns strings; results are JSON documents so the
//! page does not need to know Rust types.

use cutforge::cutlang::json::to_json;
use cutforge::cutlang::{Session, Value};
use cutforge::{FinalSegment, GroupElement, GroupSignature};
use num_rational::BigRational;
use serde_json::{json, Value as Json};
use wasm_bindgen::prelude::*;

/// Largest half-width of a drawn window.
pub const MAX_RADIUS: i64 = 24;

/// Runs a script and returns `{"lines": [...], "values": [...]}` or `{"error": "l:c: ..."}`.
pub fn run_script(src: &str) -> Json {
    let mut lines = Vec::new();
    let mut values = Vec::new();
    let r = Session::new().run_with(src, &mut |v| {
        lines.push(v.to_string());
        values.push(to_json(v));
    });
    match r {
        Ok(()) => json!({ "lines": lines, "values": values }),
        Err(e) => json!({ "lines": lines, "values": values, "error": e.to_string() }),
    }
}

fn as_segment(v: Value) -> Result<FinalSegment, String> {
    match v {
        Value::Segment(s) => Ok(s),
        Value::Ideal(i) => Ok(i.into_segment()),
        Value::Overring(o) => Ok(o.ring_segment()),
        Value::Solve(o) => Ok(o.best().clone()),
        Value::SolveIdeal(o) => Ok(o.best().segment().clone()),
        other => Err(format!("expected a segment or an ideal, got {}", other.kind())),
    }
}

/// Points along coordinate `i` (from 0): steps of 1 for Z, 1/`den` for Q.
fn axis(sig: &GroupSignature, i: usize, radius: i64, den: i64) -> Vec<BigRational> {
    let den = if sig.factor(i + 1) == cutforge::Factor::Int { 1 } else { den };
    (-radius * den..=radius * den).map(|k| BigRational::new(k.into(), den.into())).collect()
}

/// Membership of every point of a rank 2 window in the value of `expr`.
///
/// Rows run from the top (largest second coordinate) down. `cells` holds
/// one `'1'` or `'0'` per point, row by row.
pub fn grid(group: &str, expr: &str, radius: i64, den: i64) -> Json {
    let result = (|| -> Result<Json, String> {
        let sig = GroupSignature::parse(group).map_err(|e| e.to_string())?;
        if sig.rank() != 2 {
            return Err(format!("the picture needs a rank 2 group, {sig} has rank {}", sig.rank()));
        }
        let radius = radius.clamp(1, MAX_RADIUS);
        let den = den.clamp(1, 4);
        let v = Session::with_group(sig.clone()).eval_str(expr).map_err(|e| e.to_string())?;
        let s = as_segment(v)?;
        if s.signature() != &sig {
            return Err(format!("{s} lives in {}, not {sig}", s.signature()));
        }
        let xs = axis(&sig, 0, radius, den);
        let mut ys = axis(&sig, 1, radius, den);
        ys.reverse();
        let mut cells = String::with_capacity(xs.len() * ys.len());
        for y in &ys {
            for x in &xs {
                let g = GroupElement::new(&sig, vec![x.clone(), y.clone()]).map_err(|e| e.to_string())?;
                cells.push(if s.member(&g).map_err(|e| e.to_string())? { '1' } else { '0' });
            }
        }
        Ok(json!({
            "segment": s.to_string(),
            "xs": xs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "ys": ys.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "cells": cells,
        }))
    })();
    result.unwrap_or_else(|e| json!({ "error": e }))
}

/// Solves `s1 + T = s2` over `group` and pictures `s1`, `s2` and the best `T`.
pub fn solve_pair(group: &str, s1: &str, s2: &str, radius: i64) -> Json {
    let outcome = Session::new().run(&format!("group {group}\nprint solve({s1}, {s2})"));
    match outcome {
        Err(e) => json!({ "error": e.to_string() }),
        Ok(values) => {
            let v = &values[0];
            let best = match v {
                Value::Solve(o) => o.best().to_string(),
                Value::SolveIdeal(o) => o.best().to_string(),
                other => return json!({ "error": format!("unexpected {}", other.kind()) }),
            };
            json!({
                "outcome": v.to_string(),
                "value": to_json(v),
                "pictures": [grid(group, s1, radius, 2), grid(group, s2, radius, 2), grid(group, &best, radius, 2)],
            })
        }
    }
}

#[wasm_bindgen(js_name = runScript)]
pub fn run_script_js(src: &str) -> String {
    run_script(src).to_string()
}

#[wasm_bindgen(js_name = grid)]
pub fn grid_js(group: &str, expr: &str, radius: i32, den: i32) -> String {
    grid(group, expr, radius.into(), den.into()).to_string()
}

#[wasm_bindgen(js_name = solvePair)]
pub fn solve_pair_js(group: &str, s1: &str, s2: &str, radius: i32) -> String {
    solve_pair(group, s1, s2, radius.into()).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scripts() {
        let out = run_script("group Q,Z\nS = seg(1, >, [0, 0])\nprint S + S");
        assert_eq!(out["lines"], json!(["seg(1, >, [0, 0])"]));
        assert_eq!(out["values"][0]["kind"], "segment");
        let out = run_script("group Z\nprint T");
        assert_eq!(out["error"], "2:7: unbound name `T`");
    }

    #[test]
    fn pictures() {
        let out = grid("Z,Z", "seg(2, >=, [0, 1])", 1, 1);
        // rows y = 1, 0, -1; columns x = -1, 0, 1
        assert_eq!(out["cells"], "011001001");
        assert_eq!(out["ys"], json!(["1", "0", "-1"]));
        let out = grid("Q,Z", "seg(1, >, [0, 0])", 1, 2);
        assert_eq!(out["xs"], json!(["-1", "-1/2", "0", "1/2", "1"]));
        assert_eq!(out["cells"], "000110001100011");
        assert!(grid("Z", "seg(1, >=, [0])", 1, 1)["error"].is_string());
        assert!(grid("Z,Z", "seg(1, >=, [0])", 1, 1)["error"].is_string());
        assert!(grid("Z,Z", "1 +", 1, 1)["error"].is_string());
    }

    #[test]
    fn solving() {
        let out = solve_pair("Z,Z", "seg(1, >=, [0, 0])", "seg(2, >=, [0, 0])", 2);
        assert_eq!(out["outcome"], "no-solution { s2' = seg(1, >=, [1, 0]), tmax = seg(1, >=, [1, 0]) }");
        assert_eq!(out["pictures"].as_array().unwrap().len(), 3);
        let out = solve_pair("Z,Z", "ideal(seg(1, >=, [0, 0]))", "ideal(seg(1, >=, [1, 0]))", 2);
        assert!(out["outcome"].as_str().unwrap().starts_with("largest ideal("), "{out}");
    }
}
