//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string. The plain functions in [`ops`] do the
//! work and are what the native tests call.

use wasm_bindgen::prelude::*;

pub mod ops;

fn js(r: Result<serde_json::Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

/// Certify a named family; `genus` is ignored by families that don't take one.
#[wasm_bindgen]
pub fn certify_family(name: &str, genus: Option<u32>) -> Result<String, JsValue> {
    js(ops::certify_family(name, genus.map(|g| g as usize)))
}

/// Analyze and certify a graph given in the `vertices` / `edge` text format.
#[wasm_bindgen]
pub fn analyze_graph(text: &str) -> Result<String, JsValue> {
    js(ops::analyze_graph(text))
}

#[wasm_bindgen]
pub fn frobenius_census(poly: &str, bound: u32) -> Result<String, JsValue> {
    js(ops::frobenius_census(poly, bound as u64))
}
