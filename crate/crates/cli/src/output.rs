//! Certificate envelopes and value formatting.
//!
//! Every computed certificate is a JSON object with sorted keys:
//! `{"schema":"bindingfactor/1","kind":...,"input_graph6":...,
//!   "parameters":...,"payload":...}`. Rationals print as `"p/q"`, the
//! convention zero as `{"convention":"size","value":"0/1"}`, and infinite
//! toughness as `"inf"`.

use bindfactor_core::binding::{BindingOutcome, BindingValue};
use bindfactor_core::factors::BarrierCertificate;
use bindfactor_core::harness::VerificationReport;
use bindfactor_core::matching::{Matching, MatchingFamily};
use bindfactor_core::properties::Toughness;
use bindfactor_core::{Rational, VertexSet};
use serde_json::{json, Value};

pub const SCHEMA: &str = "bindingfactor/1";

pub fn envelope(kind: &str, input_graph6: &str, parameters: Value, payload: Value) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": kind,
        "input_graph6": input_graph6,
        "parameters": parameters,
        "payload": payload,
    })
}

pub fn ratio_string(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn binding_outcome_value(outcome: &BindingOutcome) -> Value {
    match outcome {
        BindingOutcome::Value(r) => Value::String(ratio_string(*r)),
        BindingOutcome::DefinedZero => json!({"value": "0/1", "convention": "size"}),
        BindingOutcome::NoFeasibleSet => {
            json!({"value": Value::Null, "convention": "no_feasible_set"})
        }
    }
}

pub fn toughness_value(t: &Toughness) -> Value {
    match t {
        Toughness::Infinite => Value::String("inf".into()),
        Toughness::Finite(r) => Value::String(ratio_string(*r)),
    }
}

pub fn set_value(s: &VertexSet) -> Value {
    Value::Array(s.iter().map(|v| json!(v)).collect())
}

pub fn edges_value(edges: &[(usize, usize)]) -> Value {
    Value::Array(edges.iter().map(|&(u, v)| json!([u, v])).collect())
}

pub fn matching_value(m: &Matching) -> Value {
    json!({
        "edges": edges_value(m.edges()),
        "covered": set_value(m.covered()),
    })
}

pub fn family_value(f: &MatchingFamily) -> Value {
    Value::Array(f.matchings().iter().map(matching_value).collect())
}

pub fn binding_payload(op: &str, b: &BindingValue, extra: &[(&str, Value)]) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("op".into(), json!(op));
    obj.insert("value".into(), binding_outcome_value(&b.outcome));
    obj.insert(
        "witness".into(),
        b.witness.as_ref().map(set_value).unwrap_or(Value::Null),
    );
    obj.insert("feasible_count".into(), json!(b.feasible_count));
    for (k, v) in extra {
        obj.insert((*k).into(), v.clone());
    }
    Value::Object(obj)
}

pub fn barrier_payload(b: &BarrierCertificate) -> Value {
    json!({
        "k": b.k,
        "s": set_value(&b.partition.s),
        "t": set_value(&b.partition.t),
        "u": set_value(&b.partition.u),
        "deficiency": b.deficiency,
        "odd_components": Value::Array(b.odd_components.iter().map(set_value).collect()),
        "maxmin": b.maxmin,
    })
}

pub fn report_payload(r: &VerificationReport) -> Value {
    json!({
        "claim": r.claim,
        "graphs_scanned": r.graphs_scanned,
        "hypothesis_hits": r.hypothesis_hits,
        "counterexamples": Value::Array(
            r.counterexamples
                .iter()
                .map(|c| json!({"graph6": c.graph6, "k": c.k, "details": c.details}))
                .collect()
        ),
        "elapsed_ms": r.elapsed.as_millis() as u64,
    })
}

/// Serialized with sorted keys (serde_json objects are ordered maps).
pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("valid json"));
}
