use degenera_web::ops;

#[test]
fn k5_payload() {
    let v = ops::certify_family("k5", None).unwrap();
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 10);
    assert_eq!(v["verdict"]["status"], "CERTIFIED_NONSPLIT");
}

#[test]
fn custom_graph() {
    let v = ops::analyze_graph("vertices 4\nedge 0 1\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\nedge 2 3\n").unwrap();
    assert_eq!(v["verdict"]["status"], "SPLITS_TRIVIALLY");
    // degree 2 vertices: shown, not certified
    let v = ops::analyze_graph("vertices 2\nedge 0 1\nedge 0 1\n").unwrap();
    assert_eq!(v["stable"], false);
    assert!(v["verdict"].is_null());
    assert!(ops::analyze_graph("vertices two").is_err());
}

#[test]
fn census_payload() {
    let v = ops::frobenius_census("x^4-x-1", 10_000).unwrap();
    let total: f64 = v["rows"].as_array().unwrap().iter().map(|r| r["frequency"].as_f64().unwrap()).sum();
    assert!((total - 1.0).abs() < 1e-9);
    assert!(ops::frobenius_census("x^4-x-1", ops::MAX_BOUND + 1).is_err());
}
