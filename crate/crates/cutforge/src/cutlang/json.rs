//! JSON form of values. Rationals are strings such as `"-5/2"` so no
//! consumer ever rounds them.
//!
//! ```json
//! {"kind":"segment","level":1,"flavor":"geq","anchor":["1","0"]}
//! ```
//!
//! Decoding needs the declared group; shorter anchors belong to its prefix,
//! as in the text syntax.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value as Json};

use super::{Report, Value};
use crate::error::{Error, Result};
use crate::idealcalc::{Ideal, SolveIdealOutcome, ValuedField};
use crate::lexgroup::{parse_rational, ConvexSubgroup, GroupElement, GroupSignature};
use crate::segcalc::{FinalSegment, Flavor, SolveOutcome};

fn coords(g: &GroupElement) -> Json {
    Json::Array(g.coords().iter().map(|c| Json::String(c.to_string())).collect())
}

fn segment(s: &FinalSegment) -> Json {
    json!({"kind": "segment", "level": s.level(), "flavor": s.flavor().name(), "anchor": coords(s.anchor())})
}

fn ideal(i: &Ideal) -> Json {
    json!({"kind": "ideal", "segment": segment(i.segment())})
}

pub fn to_json(v: &Value) -> Json {
    match v {
        Value::Int(n) => json!({"kind": "int", "value": n.to_string()}),
        Value::Bool(b) => json!({"kind": "bool", "value": b}),
        Value::Element(g) => json!({"kind": "element", "coords": coords(g)}),
        Value::Segment(s) => segment(s),
        Value::Ideal(i) => ideal(i),
        Value::Overring(o) => json!({"kind": "overring", "level": o.level()}),
        Value::Subgroup(h) => json!({"kind": "subgroup", "level": h.level()}),
        Value::Solve(o) => match o {
            SolveOutcome::Unique(t) | SolveOutcome::Largest(t) => {
                json!({"kind": "solve", "outcome": o.label(), "t": segment(t)})
            }
            SolveOutcome::NoSolution { s2_prime, t_max } => {
                json!({"kind": "solve", "outcome": o.label(), "s2_prime": segment(s2_prime), "t_max": segment(t_max)})
            }
        },
        Value::SolveIdeal(o) => match o {
            SolveIdealOutcome::Unique(j) | SolveIdealOutcome::Largest(j) => {
                json!({"kind": "solve-ideal", "outcome": o.label(), "j": ideal(j)})
            }
            SolveIdealOutcome::NoSolution { i2_prime, j_max } => {
                json!({"kind": "solve-ideal", "outcome": o.label(), "i2_prime": ideal(i2_prime), "j_max": ideal(j_max)})
            }
        },
        Value::Report(r) => json!({"kind": "report", "passed": r.passed, "text": r.text}),
    }
}

pub fn to_json_string(v: &Value) -> String {
    to_json(v).to_string()
}

fn bad(text: impl Into<String>) -> Error {
    Error::BadLiteral { what: "JSON value", text: text.into() }
}

fn field<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a Json> {
    obj.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn str_field<'a>(obj: &'a Map<String, Json>, key: &str) -> Result<&'a str> {
    field(obj, key)?.as_str().ok_or_else(|| bad(format!("field {key:?} is not a string")))
}

fn usize_field(obj: &Map<String, Json>, key: &str) -> Result<usize> {
    field(obj, key)?
        .as_u64()
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| bad(format!("field {key:?} is not a level")))
}

fn object<'a>(j: &'a Json, kind: &str) -> Result<&'a Map<String, Json>> {
    let obj = j.as_object().ok_or_else(|| bad("expected an object"))?;
    if str_field(obj, "kind")? != kind {
        return Err(bad(format!("expected kind {kind:?}")));
    }
    Ok(obj)
}

fn element_from(sig: &GroupSignature, j: &Json) -> Result<GroupElement> {
    let items = j.as_array().ok_or_else(|| bad("coordinates must be an array"))?;
    let cs = items
        .iter()
        .map(|c| c.as_str().ok_or_else(|| bad("coordinates must be strings")).and_then(parse_rational))
        .collect::<Result<Vec<BigRational>>>()?;
    if cs.is_empty() || cs.len() > sig.rank() {
        return Err(Error::ArityMismatch { expected: sig.rank(), got: cs.len() });
    }
    GroupElement::new(&sig.prefix(cs.len())?, cs)
}

fn segment_from(sig: &GroupSignature, j: &Json) -> Result<FinalSegment> {
    let obj = object(j, "segment")?;
    let flavor = match str_field(obj, "flavor")? {
        "geq" => Flavor::Geq,
        "gt" => Flavor::Gt,
        other => return Err(bad(format!("unknown flavor {other:?}"))),
    };
    let anchor = element_from(sig, field(obj, "anchor")?)?;
    FinalSegment::new(anchor.signature(), usize_field(obj, "level")?, flavor, &anchor)
}

fn ideal_from(sig: &GroupSignature, j: &Json) -> Result<Ideal> {
    Ok(Ideal::from_segment(segment_from(sig, field(object(j, "ideal")?, "segment")?)?))
}

/// Decodes a value printed by [`to_json`] under the group `sig`.
pub fn from_json(sig: &GroupSignature, j: &Json) -> Result<Value> {
    let obj = j.as_object().ok_or_else(|| bad("expected an object"))?;
    let kind = str_field(obj, "kind")?;
    Ok(match kind {
        "int" => Value::Int(str_field(obj, "value")?.parse::<BigInt>().map_err(|_| bad("bad integer"))?),
        "bool" => Value::Bool(field(obj, "value")?.as_bool().ok_or_else(|| bad("bad bool"))?),
        "element" => Value::Element(element_from(sig, field(obj, "coords")?)?),
        "segment" => Value::Segment(segment_from(sig, j)?),
        "ideal" => Value::Ideal(ideal_from(sig, j)?),
        "overring" => Value::Overring(ValuedField::new(sig.clone()).overring(usize_field(obj, "level")?)?),
        "subgroup" => Value::Subgroup(ConvexSubgroup::new(sig, usize_field(obj, "level")?)?),
        "solve" => Value::Solve(match str_field(obj, "outcome")? {
            "unique" => SolveOutcome::Unique(segment_from(sig, field(obj, "t")?)?),
            "largest" => SolveOutcome::Largest(segment_from(sig, field(obj, "t")?)?),
            "no-solution" => SolveOutcome::NoSolution {
                s2_prime: segment_from(sig, field(obj, "s2_prime")?)?,
                t_max: segment_from(sig, field(obj, "t_max")?)?,
            },
            other => return Err(bad(format!("unknown outcome {other:?}"))),
        }),
        "solve-ideal" => Value::SolveIdeal(match str_field(obj, "outcome")? {
            "unique" => SolveIdealOutcome::Unique(ideal_from(sig, field(obj, "j")?)?),
            "largest" => SolveIdealOutcome::Largest(ideal_from(sig, field(obj, "j")?)?),
            "no-solution" => SolveIdealOutcome::NoSolution {
                i2_prime: ideal_from(sig, field(obj, "i2_prime")?)?,
                j_max: ideal_from(sig, field(obj, "j_max")?)?,
            },
            other => return Err(bad(format!("unknown outcome {other:?}"))),
        }),
        "report" => Value::Report(Report {
            passed: field(obj, "passed")?.as_bool().ok_or_else(|| bad("bad flag"))?,
            text: str_field(obj, "text")?.to_string(),
        }),
        other => return Err(bad(format!("unknown kind {other:?}"))),
    })
}

pub fn from_json_str(sig: &GroupSignature, text: &str) -> Result<Value> {
    let j: Json = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    from_json(sig, &j)
}
