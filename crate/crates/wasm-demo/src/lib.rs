//! Browser bindings for the curve reports. Each call returns either the
//! report or a single `error=... code=... message=...` line.

use cubic3::report;
use cubic3::Error;
use wasm_bindgen::prelude::*;

fn render(r: Result<String, Error>) -> String {
    r.unwrap_or_else(|e| format!("error={} code={} message={e}\n", e.tag(), e.exit_code()))
}

#[wasm_bindgen]
pub fn invariants(curve: &str) -> String {
    render(report::invariants(curve))
}

#[wasm_bindgen]
pub fn split(curve: &str, place: &str) -> String {
    render(report::split(curve, place))
}

#[wasm_bindgen]
pub fn compred(curve: &str, i1: &str, i2: &str) -> String {
    render(report::compred(curve, i1, i2))
}
