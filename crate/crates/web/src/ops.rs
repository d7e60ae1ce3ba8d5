use degenera::clutch::{certify_nonsplit, CertifyOptions};
use degenera::frobenius::{census, IntPoly};
use degenera::graph::{automorphism_group, DartGraph, Family};
use serde_json::{json, Value};

/// Largest census bound the page will run; keeps the tab responsive.
pub const MAX_BOUND: u64 = 2_000_000;

/// Group orders above this are not enumerated in the browser.
const BROWSER_CAP: u128 = 200_000;

fn describe(g: &DartGraph, label: String) -> Result<Value, String> {
    let aut = automorphism_group(g);
    let stable = g.check_stable().is_ok();
    let verdict = if stable {
        let opts = CertifyOptions { cap: BROWSER_CAP, ..CertifyOptions::default() };
        Some(certify_nonsplit(g, &opts).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(json!({
        "label": label,
        "vertices": g.vertex_count(),
        "edges": g.edges(),
        "genus": g.genus(),
        "degrees": g.degrees(),
        "aut_order": aut.order(),
        "edge_orbits": aut.edge_orbits(),
        "stable": stable,
        "verdict": verdict,
    }))
}

pub fn certify_family(name: &str, genus: Option<usize>) -> Result<Value, String> {
    let family = Family::parse(name, genus).map_err(|e| e.to_string())?;
    let g = family.build().map_err(|e| e.to_string())?;
    describe(&g, family.to_string())
}

pub fn analyze_graph(text: &str) -> Result<Value, String> {
    let g: DartGraph = text.parse().map_err(|e: degenera::Error| e.to_string())?;
    describe(&g, "custom graph".into())
}

pub fn frobenius_census(poly: &str, bound: u64) -> Result<Value, String> {
    if bound > MAX_BOUND {
        return Err(format!("bound {bound} is above the demo limit {MAX_BOUND}"));
    }
    let f: IntPoly = poly.parse().map_err(|e: degenera::Error| e.to_string())?;
    let c = census(&f, bound).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = c
        .rows()
        .into_iter()
        .map(|(p, count, freq)| json!({ "pattern": p.to_string(), "count": count, "frequency": freq }))
        .collect();
    Ok(json!({
        "poly": f.to_string(),
        "discriminant": f.discriminant().to_string(),
        "bound": bound,
        "ramified": c.ramified,
        "unramified": c.unramified_total(),
        "all_even_frequency": c.all_even_frequency(),
        "rows": rows,
    }))
}
