use cubic3_wasm_demo::{compred, invariants, split};

const CURVE: &str = include_str!("../../core/data/as_small.curve");

#[test]
fn reports_and_errors() {
    assert!(invariants(CURVE).contains("genus = "));
    assert!(split(CURVE, "inf").contains("splitting = totally_ramified"));
    assert!(compred(CURVE, "ideal", "ideal").contains("result = "));
    assert!(split(CURVE, "0 (1").starts_with("error=parse code=2"));
}
