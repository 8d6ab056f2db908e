//! JSON report assembly. Exact integers are serialized as decimal strings so
//! nothing is lost to double rounding; floating groups carry their
//! tolerance and an `exact: false` marker.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use sgraph::cert::CanonicalCert;
use sgraph::poly::Poly;
use sgraph::{Sign, SignedGraph};

pub fn graph_json(g: &SignedGraph) -> Value {
    json!({
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges().iter().map(|e| {
            json!([e.u, e.v, if e.sign == Sign::Minus { "-" } else { "+" }])
        }).collect::<Vec<_>>(),
    })
}

pub fn int_poly_json(p: &Poly<BigInt>) -> Value {
    json!({
        "exact": true,
        "coefficients_ascending": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "pretty": p.to_string(),
    })
}

pub fn float_group(values: Vec<f64>, tol: f64) -> Value {
    json!({
        "exact": false,
        "tol": tol,
        "values": values,
    })
}

pub fn cert_json(c: &CanonicalCert) -> Value {
    Value::String(c.to_hex())
}

/// Top-level report envelope.
pub fn envelope(command: &str, input: Value, params: Value, result: Value) -> Value {
    let mut map = Map::new();
    map.insert("command".into(), Value::String(command.into()));
    map.insert("version".into(), Value::String(env!("CARGO_PKG_VERSION").into()));
    map.insert("input".into(), input);
    map.insert("params".into(), params);
    map.insert("result".into(), result);
    Value::Object(map)
}

pub fn print(report: &Value) {
    println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
}

/// Machine-readable error object on standard error.
pub fn print_error(kind: &str, message: &str, exit: i32) {
    let obj = json!({ "error": { "kind": kind, "message": message, "exit": exit } });
    eprintln!("{}", serde_json::to_string(&obj).expect("error serializes"));
}
