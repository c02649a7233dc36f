//! Browser bindings for the kstrips library. Every export takes plain
//! strings and numbers and returns a JSON document, or throws a message.

use kstrips::identities::{verify, Identity};
use kstrips::{bijection, k_modular_diagram, Partition};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest truncation order the page will compute.
pub const MAX_LIMIT: u32 = 200;
/// Largest weight enumerated to cross-check an identity in the browser.
pub const ORACLE_CAP: u32 = 20;

fn parse(input: &str) -> Result<Partition, String> {
    input.parse().map_err(|e: kstrips::PartitionError| e.to_string())
}

fn modulus(k: u32) -> Result<u64, String> {
    if k == 0 {
        Err("k must be at least 1".into())
    } else {
        Ok(k.into())
    }
}

/// The k-modular diagram of `input`, as a grid of cells and as text.
pub fn diagram_json(input: &str, k: u32) -> Result<String, String> {
    let p = parse(input)?;
    let d = k_modular_diagram(&p, modulus(k)?);
    Ok(json!({
        "k": k,
        "partition": p,
        "weight": p.weight(),
        "rows": d.grid(),
        "text": d.render_text(),
    })
    .to_string())
}

/// Applies the bijection (or its inverse) and reports every stage of the
/// forward computation for the preimage.
pub fn map_json(input: &str, k: u32, strict: bool, inverse: bool) -> Result<String, String> {
    let given = parse(input)?;
    let k = modulus(k)?;
    let (preimage, output) = if inverse {
        let lambda = bijection::inverse(&given, k, strict).map_err(|e| e.to_string())?;
        (lambda.clone(), lambda)
    } else {
        let beta = bijection::forward(&given, k, strict).map_err(|e| e.to_string())?;
        (given.clone(), beta)
    };
    let trace = bijection::trace(&preimage, k).map_err(|e| e.to_string())?;
    Ok(json!({
        "direction": if inverse { "unmap" } else { "map" },
        "k": k,
        "strict": strict,
        "input": given,
        "output": output,
        "weight": given.weight(),
        "trace": trace,
    })
    .to_string())
}

/// Expands both sides of an identity to `limit` and compares them.
pub fn verify_json(identity: u8, k: u32, m: Option<u32>, limit: u32) -> Result<String, String> {
    if limit > MAX_LIMIT {
        return Err(format!("limit {limit} exceeds {MAX_LIMIT}"));
    }
    let which = Identity::from_number(identity, m.map(u64::from))
        .ok_or_else(|| match (identity, m) {
            (2, None) => "identity 2 needs m".to_string(),
            (1 | 3, Some(_)) => format!("identity {identity} takes no m"),
            _ => format!("unknown identity {identity}"),
        })?;
    let cap = ORACLE_CAP.min(limit);
    let report = verify(which, modulus(k)?, limit as usize, cap.into()).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn diagram(input: &str, k: u32) -> Result<String, JsValue> {
    diagram_json(input, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = mapPartition)]
pub fn map_partition(input: &str, k: u32, strict: bool, inverse: bool) -> Result<String, JsValue> {
    map_json(input, k, strict, inverse).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = verifyIdentity)]
pub fn verify_identity(identity: u8, k: u32, m: Option<u32>, limit: u32) -> Result<String, JsValue> {
    verify_json(identity, k, m, limit).map_err(|e| JsValue::from_str(&e))
}
