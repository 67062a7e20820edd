//! Independent re-checking of emitted certificates.
//!
//! A certificate must be verifiable from its `input_graph6` and
//! `parameters` alone: value-style payloads are recomputed and compared
//! field by field, while structural payloads (factors, barriers,
//! matchings, witnesses) are validated directly against the graph, which
//! does not trust the solver that produced them.

use crate::output::{binding_payload, report_payload, set_value, toughness_value, SCHEMA};
use bindfactor_core::binding::{beta_k, beta_k_bipartite, bind_classical, bind_bipartite};
use bindfactor_core::factors::{
    delta, find_maxmin_barrier_capped, odd_components, OrderedPartition, PARTITION_CAP,
};
use bindfactor_core::family::{generate, FamilySpec};
use bindfactor_core::graph6::parse_graph6;
use bindfactor_core::harness::{
    probe_conjecture, verify_claim, verify_claim_indexed, ClaimId, GraphSource, ProbeId,
    ProbeParams,
};
use bindfactor_core::matching::{lebensold_value, max_matching, tutte_q};
use bindfactor_core::properties::{independence_number, toughness, vertex_connectivity};
use bindfactor_core::{Graph, VertexSet};
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CertError {
    /// The certificate's claims do not hold for its input.
    Mismatch(String),
    /// The certificate is structurally unusable.
    Malformed(String),
}

fn malformed(msg: impl Into<String>) -> CertError {
    CertError::Malformed(msg.into())
}

fn mismatch(msg: impl Into<String>) -> CertError {
    CertError::Mismatch(msg.into())
}

type Res = Result<(), CertError>;

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CertError> {
    v.get(key)
        .ok_or_else(|| malformed(format!("missing field '{key}'")))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str, CertError> {
    field(v, key)?
        .as_str()
        .ok_or_else(|| malformed(format!("field '{key}' is not a string")))
}

fn u64_field(v: &Value, key: &str) -> Result<u64, CertError> {
    field(v, key)?
        .as_u64()
        .ok_or_else(|| malformed(format!("field '{key}' is not an integer")))
}

fn set_field(v: &Value, key: &str) -> Result<VertexSet, CertError> {
    let arr = field(v, key)?
        .as_array()
        .ok_or_else(|| malformed(format!("field '{key}' is not an array")))?;
    let mut out = VertexSet::new();
    for x in arr {
        out.insert(
            x.as_u64()
                .ok_or_else(|| malformed(format!("bad vertex in '{key}'")))? as usize,
        );
    }
    Ok(out)
}

fn edges_field(v: &Value, key: &str) -> Result<Vec<(usize, usize)>, CertError> {
    let arr = field(v, key)?
        .as_array()
        .ok_or_else(|| malformed(format!("field '{key}' is not an array")))?;
    let mut out = Vec::with_capacity(arr.len());
    for e in arr {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| malformed(format!("bad edge in '{key}'")))?;
        let u = pair[0].as_u64().ok_or_else(|| malformed("bad endpoint"))? as usize;
        let v = pair[1].as_u64().ok_or_else(|| malformed("bad endpoint"))? as usize;
        out.push((u, v));
    }
    Ok(out)
}

fn input_graph(cert: &Value) -> Result<Graph, CertError> {
    let g6 = str_field(cert, "input_graph6")?;
    parse_graph6(g6).map_err(|e| malformed(format!("input_graph6: {e}")))
}

fn expect_equal(kind: &str, recomputed: &Value, stored: &Value) -> Res {
    if recomputed == stored {
        Ok(())
    } else {
        Err(mismatch(format!(
            "{kind} payload does not match recomputation: stored {stored}, recomputed {recomputed}"
        )))
    }
}

pub fn verify_certificate(cert: &Value) -> Res {
    if str_field(cert, "schema")? != SCHEMA {
        return Err(malformed(format!(
            "unknown schema '{}'",
            str_field(cert, "schema")?
        )));
    }
    let params = field(cert, "parameters")?.clone();
    let payload = field(cert, "payload")?.clone();
    let op = str_field(&params, "op")?;
    match op {
        "beta" => {
            let g = input_graph(cert)?;
            let k = u64_field(&params, "k")? as usize;
            let b = beta_k(&g, k).map_err(|e| mismatch(e.to_string()))?;
            let recomputed = binding_payload("beta", &b, &[("k", json!(k))]);
            expect_equal("BINDING", &recomputed, &payload)
        }
        "beta_bipartite" => {
            let g = input_graph(cert)?;
            let k = u64_field(&params, "k")? as usize;
            let x = set_field(&params, "x")?;
            let b = beta_k_bipartite(&g, &x, k).map_err(|e| mismatch(e.to_string()))?;
            let recomputed = binding_payload(
                "beta_bipartite",
                &b,
                &[("k", json!(k)), ("x", set_value(&x))],
            );
            expect_equal("BINDING", &recomputed, &payload)
        }
        "bind" => {
            let g = input_graph(cert)?;
            let b = bind_classical(&g).map_err(|e| mismatch(e.to_string()))?;
            expect_equal("BINDING", &binding_payload("bind", &b, &[]), &payload)
        }
        "bind_bipartite" => {
            let g = input_graph(cert)?;
            let x = set_field(&params, "x")?;
            let y = set_field(&params, "y")?;
            let b = bind_bipartite(&g, &x, &y).map_err(|e| mismatch(e.to_string()))?;
            let recomputed = binding_payload(
                "bind_bipartite",
                &b,
                &[("x", set_value(&x)), ("y", set_value(&y))],
            );
            expect_equal("BINDING", &recomputed, &payload)
        }
        "lebensold_value" => {
            let g = input_graph(cert)?;
            let k = u64_field(&params, "k")? as usize;
            let x = set_field(&params, "x")?;
            let s = set_field(&params, "s")?;
            let v = lebensold_value(&g, &x, &s, k).map_err(|e| mismatch(e.to_string()))?;
            let recomputed = json!({"op":"lebensold_value","k":k,"s":set_value(&s),"value":v});
            expect_equal("BINDING", &recomputed, &payload)
        }
        "toughness" => {
            let g = input_graph(cert)?;
            let t = toughness(&g).map_err(|e| mismatch(e.to_string()))?;
            let recomputed = json!({"op":"toughness","value": toughness_value(&t)});
            expect_equal("BINDING", &recomputed, &payload)
        }
        "independence_number" => {
            let g = input_graph(cert)?;
            let a = independence_number(&g).map_err(|e| mismatch(e.to_string()))?;
            let recomputed = json!({"op":"independence_number","value": a});
            expect_equal("BINDING", &recomputed, &payload)
        }
        "vertex_connectivity" => {
            let g = input_graph(cert)?;
            let k = vertex_connectivity(&g);
            let recomputed = json!({"op":"vertex_connectivity","value": k});
            expect_equal("BINDING", &recomputed, &payload)
        }
        "matching" => verify_matching(cert, &params, &payload),
        "hypomatchable" => verify_hypomatchable(cert, &payload),
        "disjoint_matchings" => verify_disjoint(cert, &params, &payload),
        "x_cover" => verify_x_cover(cert, &params, &payload),
        "factor" => verify_factor_or_barrier(cert, &params, &payload),
        "barrier" => verify_factor_or_barrier(cert, &params, &payload),
        "verify" => verify_report(&params, &payload),
        "probe" => verify_probe_report(&params, &payload),
        other => Err(malformed(format!("unknown certificate op '{other}'"))),
    }
}

/// Validates that `edges` is a matching inside `g` whose covered set
/// matches the stored one.
fn check_matching(g: &Graph, m: &Value) -> Result<VertexSet, CertError> {
    let edges = edges_field(m, "edges")?;
    let mut covered = VertexSet::new();
    for &(u, v) in &edges {
        if !g.has_edge(u, v) {
            return Err(mismatch(format!("({u},{v}) is not an edge of the graph")));
        }
        if covered.contains(u) || covered.contains(v) {
            return Err(mismatch(format!("edges share endpoint at ({u},{v})")));
        }
        covered.insert(u);
        covered.insert(v);
    }
    let stored = set_field(m, "covered")?;
    if stored != covered {
        return Err(mismatch("stored covered set is wrong"));
    }
    Ok(covered)
}

fn verify_matching(cert: &Value, params: &Value, payload: &Value) -> Res {
    let g = input_graph(cert)?;
    let perfect = field(params, "perfect")?.as_bool().unwrap_or(false);
    if payload.get("matching").is_some() {
        let covered = check_matching(&g, field(payload, "matching")?)?;
        let size = covered.len() / 2;
        if perfect {
            if covered != g.vertices() {
                return Err(mismatch("perfect matching does not cover every vertex"));
            }
        } else if size != max_matching(&g).len() {
            return Err(mismatch("matching is not maximum"));
        }
        Ok(())
    } else {
        // Tutte witness for the perfect case.
        let set = set_field(payload, "set")?;
        let q = tutte_q(&g, &set).map_err(|e| mismatch(e.to_string()))?;
        if q != u64_field(payload, "odd_count")? as usize {
            return Err(mismatch("odd component count is wrong"));
        }
        if q <= set.len() {
            return Err(mismatch("witness does not violate the matching condition"));
        }
        Ok(())
    }
}

fn verify_hypomatchable(cert: &Value, payload: &Value) -> Res {
    let g = input_graph(cert)?;
    let holds = field(payload, "holds")?
        .as_bool()
        .ok_or_else(|| malformed("'holds' is not a boolean"))?;
    if holds {
        let list = field(payload, "per_vertex")?
            .as_array()
            .ok_or_else(|| malformed("'per_vertex' is not an array"))?;
        if list.len() != g.n() {
            return Err(mismatch("certificate does not cover every vertex"));
        }
        for entry in list {
            let v = u64_field(entry, "vertex")? as usize;
            let covered = check_matching(&g, field(entry, "matching")?)?;
            let expect = VertexSet::singleton(v).complement(g.n());
            if covered != expect {
                return Err(mismatch(format!(
                    "matching for vertex {v} does not cover exactly the rest"
                )));
            }
        }
        Ok(())
    } else {
        let v = u64_field(payload, "failing_vertex")? as usize;
        if g.n() % 2 == 1 {
            let keep = VertexSet::singleton(v).complement(g.n());
            let (h, _) = g.induced_subgraph(&keep);
            if max_matching(&h).len() * 2 == h.n() {
                return Err(mismatch(format!(
                    "vertex {v} does not witness non-hypomatchability"
                )));
            }
        }
        Ok(())
    }
}

fn verify_disjoint(cert: &Value, params: &Value, payload: &Value) -> Res {
    let g = input_graph(cert)?;
    let t = u64_field(params, "t")? as usize;
    let target = g.n() / 2;
    if let Some(list) = payload.get("matchings").and_then(|m| m.as_array()) {
        if list.len() != t {
            return Err(mismatch(format!("expected {t} matchings, found {}", list.len())));
        }
        let mut seen = std::collections::BTreeSet::new();
        for m in list {
            let covered = check_matching(&g, m)?;
            if covered.len() / 2 != target {
                return Err(mismatch("matching is not (near-)perfect"));
            }
            for e in edges_field(m, "edges")? {
                if !seen.insert(e) {
                    return Err(mismatch(format!("edge {e:?} reused across matchings")));
                }
            }
        }
        Ok(())
    } else {
        let step = u64_field(payload, "failed_step")? as usize;
        match bindfactor_core::matching::disjoint_near_perfect_matchings(&g, t) {
            Ok(_) => Err(mismatch("pipeline succeeds, failure certificate is wrong")),
            Err(f) if f.step == step => Ok(()),
            Err(f) => Err(mismatch(format!(
                "pipeline fails at step {}, certificate says {step}",
                f.step
            ))),
        }
    }
}

fn verify_x_cover(cert: &Value, params: &Value, payload: &Value) -> Res {
    let g = input_graph(cert)?;
    let k = u64_field(params, "k")? as usize;
    let x = set_field(params, "x")?;
    if let Some(list) = payload.get("matchings").and_then(|m| m.as_array()) {
        if list.len() != k {
            return Err(mismatch(format!("expected {k} matchings, found {}", list.len())));
        }
        let mut seen = std::collections::BTreeSet::new();
        for m in list {
            let covered = check_matching(&g, m)?;
            if !x.is_subset_of(&covered) {
                return Err(mismatch("a matching misses part of x"));
            }
            for e in edges_field(m, "edges")? {
                if !seen.insert(e) {
                    return Err(mismatch(format!("edge {e:?} reused across matchings")));
                }
            }
        }
        Ok(())
    } else {
        let s = set_field(payload, "violating_set")?;
        if !s.is_subset_of(&x) || s.is_empty() {
            return Err(mismatch("violating set is not a nonempty subset of x"));
        }
        let l = lebensold_value(&g, &x, &s, k).map_err(|e| mismatch(e.to_string()))?;
        if l >= k * s.len() {
            return Err(mismatch(format!(
                "set satisfies the covering condition: L = {l} >= k|S| = {}",
                k * s.len()
            )));
        }
        Ok(())
    }
}

fn verify_factor_or_barrier(cert: &Value, params: &Value, payload: &Value) -> Res {
    let g = input_graph(cert)?;
    let k = u64_field(params, "k")? as usize;
    if payload.get("edges").is_some() {
        // FACTOR payload: spanning k-regular subgraph.
        let edges = edges_field(payload, "edges")?;
        let mut deg = vec![0usize; g.n()];
        for &(u, v) in &edges {
            if !g.has_edge(u, v) {
                return Err(mismatch(format!("({u},{v}) is not an edge of the graph")));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != k) {
            return Err(mismatch(format!("edge set is not {k}-regular")));
        }
        Ok(())
    } else if payload.get("s").is_some() {
        // BARRIER payload.
        let s = set_field(payload, "s")?;
        let t = set_field(payload, "t")?;
        let u = set_field(payload, "u")?;
        let p = OrderedPartition::new(&g, s, t, u).map_err(|e| mismatch(e.to_string()))?;
        let d = delta(&g, &p, k).map_err(|e| mismatch(e.to_string()))?;
        if d != field(payload, "deficiency")?
            .as_i64()
            .ok_or_else(|| malformed("'deficiency' is not an integer"))?
        {
            return Err(mismatch(format!("deficiency recomputes to {d}")));
        }
        if d >= 0 {
            return Err(mismatch("deficiency is not negative; not a barrier"));
        }
        let recomputed: Vec<Value> = odd_components(&g, &p, k)
            .map_err(|e| mismatch(e.to_string()))?
            .iter()
            .map(set_value)
            .collect();
        if Value::Array(recomputed) != *field(payload, "odd_components")? {
            return Err(mismatch("odd component list is wrong"));
        }
        let is_maxmin = field(payload, "maxmin")?.as_bool().unwrap_or(false);
        if is_maxmin && g.n() <= PARTITION_CAP {
            let found = find_maxmin_barrier_capped(&g, k, PARTITION_CAP)
                .map_err(|e| mismatch(e.to_string()))?
                .ok_or_else(|| mismatch("no barrier exists at all"))?;
            if found.partition != p {
                return Err(mismatch("partition is a barrier but not the maxmin one"));
            }
        }
        Ok(())
    } else {
        Err(mismatch(
            "certificate asserts a negative result but carries no checkable payload",
        ))
    }
}

fn source_from_value(v: &Value) -> Result<SourceSpec, CertError> {
    if let Some(n) = v.get("internal").and_then(|x| x.as_u64()) {
        return Ok(SourceSpec::Internal(n as usize));
    }
    if let Some(path) = v.get("stream").and_then(|x| x.as_str()) {
        return Ok(SourceSpec::Stream(path.into()));
    }
    if let Some(spec) = v.get("gen").and_then(|x| x.as_str()) {
        return Ok(SourceSpec::Gen(spec.to_string()));
    }
    if let Some(sides) = v.get("bipartite").and_then(|x| x.as_array()) {
        if sides.len() == 2 {
            let a = sides[0].as_u64().ok_or_else(|| malformed("bad side"))? as usize;
            let b = sides[1].as_u64().ok_or_else(|| malformed("bad side"))? as usize;
            return Ok(SourceSpec::Bipartite(a, b));
        }
    }
    Err(malformed("unknown source descriptor"))
}

enum SourceSpec {
    Internal(usize),
    Stream(std::path::PathBuf),
    Gen(String),
    Bipartite(usize, usize),
}

fn compare_reports(recomputed: &Value, stored: &Value) -> Res {
    let strip = |v: &Value| {
        let mut v = v.clone();
        if let Some(obj) = v.as_object_mut() {
            obj.remove("elapsed_ms");
        }
        v
    };
    if strip(recomputed) == strip(stored) {
        Ok(())
    } else {
        Err(mismatch(format!(
            "report does not match re-run: stored {stored}, recomputed {recomputed}"
        )))
    }
}

fn verify_report(params: &Value, payload: &Value) -> Res {
    let claim: ClaimId = str_field(params, "claim")?
        .parse()
        .map_err(|e: bindfactor_core::Error| malformed(e.to_string()))?;
    let ks: Vec<usize> = field(params, "k")?
        .as_array()
        .ok_or_else(|| malformed("'k' is not an array"))?
        .iter()
        .map(|x| x.as_u64().map(|v| v as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| malformed("bad k list"))?;
    let report = match source_from_value(field(params, "source")?)? {
        SourceSpec::Internal(n) => verify_claim(claim, &GraphSource::Internal(n), &ks)
            .map_err(|e| mismatch(e.to_string()))?,
        SourceSpec::Stream(path) => verify_claim(claim, &GraphSource::Stream(path), &ks)
            .map_err(|e| mismatch(e.to_string()))?,
        SourceSpec::Gen(spec) => {
            let parsed: FamilySpec = spec
                .parse()
                .map_err(|e: bindfactor_core::Error| malformed(e.to_string()))?;
            let g = generate(&parsed).map_err(|e| malformed(e.to_string()))?;
            let graphs = [g];
            verify_claim_indexed(claim, 1, |i| graphs[i as usize].clone(), &ks)
        }
        SourceSpec::Bipartite(_, _) => {
            return Err(malformed("claim reports cannot use a bipartite source"))
        }
    };
    compare_reports(&report_payload(&report), payload)
}

fn verify_probe_report(params: &Value, payload: &Value) -> Res {
    let which: ProbeId = str_field(params, "which")?
        .parse()
        .map_err(|e: bindfactor_core::Error| malformed(e.to_string()))?;
    let k = u64_field(params, "k")? as usize;
    let t = params.get("t").and_then(|x| x.as_u64()).map(|v| v as usize);
    let probe_params = ProbeParams { k, t };
    let report = match source_from_value(field(params, "source")?)? {
        SourceSpec::Internal(n) => {
            probe_conjecture(which, &GraphSource::Internal(n), &probe_params)
                .map_err(|e| mismatch(e.to_string()))?
        }
        SourceSpec::Stream(path) => {
            probe_conjecture(which, &GraphSource::Stream(path), &probe_params)
                .map_err(|e| mismatch(e.to_string()))?
        }
        SourceSpec::Gen(spec) => {
            let parsed: FamilySpec = spec
                .parse()
                .map_err(|e: bindfactor_core::Error| malformed(e.to_string()))?;
            let g = generate(&parsed).map_err(|e| malformed(e.to_string()))?;
            let graphs = [g];
            bindfactor_core::harness::probe_indexed(
                which,
                1,
                |i| graphs[i as usize].clone(),
                &probe_params,
            )
        }
        SourceSpec::Bipartite(a, b) => {
            let en = bindfactor_core::harness::BipartiteInstances::new(a, b);
            bindfactor_core::harness::probe_indexed(
                which,
                en.len(),
                |i| en.get(i).0,
                &probe_params,
            )
        }
    };
    compare_reports(&report_payload(&report), payload)
}
