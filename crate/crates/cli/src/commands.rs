use std::fmt::Write;
use std::time::Instant;

use degenera::clutch::{certify_nonsplit, roundtrip_check, CertifyOptions, Status};
use degenera::frobenius::{
    census, certifies_symmetric, find_even_witnesses, galois_cycle_witnesses, IntPoly, DEFAULT_CENSUS_BOUND,
    DEFAULT_WITNESS_BOUND,
};
use degenera::graph::{automorphism_group, DartGraph, Family};
use serde_json::{json, Value};

use crate::report::Report;
use crate::{GraphSource, Outcome, PolyArgs};

type Run = Result<(Report, Outcome), String>;

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load_graph(src: &GraphSource) -> Result<(DartGraph, Value, String), String> {
    if let Some(path) = src.path.as_ref().or(src.file.as_ref()) {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let g: DartGraph = text.parse().map_err(|e| format!("{}: {e}", path.display()))?;
        let label = path.display().to_string();
        return Ok((g, json!({ "file": label }), label));
    }
    let Some(name) = &src.family else {
        return Err("give a graph file or --family".into());
    };
    let family = Family::parse(name, src.genus).map_err(|e| e.to_string())?;
    let g = family.build().map_err(|e| e.to_string())?;
    Ok((g, json!({ "family": name, "genus": src.genus }), family.to_string()))
}

fn with_shape(mut input: Value, g: &DartGraph) -> Value {
    input["vertices"] = json!(g.vertex_count());
    input["edges"] = json!(g.edge_count());
    input
}

fn parse_poly(s: &str) -> Result<IntPoly, String> {
    s.parse().map_err(|e: degenera::Error| e.to_string())
}

pub fn graph_analyze(src: &GraphSource) -> Run {
    let start = Instant::now();
    let (g, input, label) = load_graph(src)?;
    let aut = automorphism_group(&g);
    let stable = g.check_stable().is_ok();
    let admissible = stable.then(|| aut.generic_stabilizer().is_trivial());
    let edge_orbits = aut.edge_orbits();
    let result = json!({
        "genus": g.genus(),
        "degrees": g.degrees(),
        "stable": stable,
        "aut_order": aut.order(),
        "vertex_transitive": aut.is_vertex_transitive(),
        "edge_transitive": edge_orbits.len() == 1,
        "edge_orbits": edge_orbits,
        "admissible": admissible,
        "all_degrees_even": g.all_degrees_even(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "graph             {label}");
    let _ = writeln!(text, "vertices, edges   {}, {}", g.vertex_count(), g.edge_count());
    let _ = writeln!(text, "genus             {}", g.genus());
    let degrees: Vec<String> = g.degrees().iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "degrees           {}", degrees.join(" "));
    let _ = writeln!(text, "|Aut|             {}", aut.order());
    let _ = writeln!(text, "vertex-transitive {}", yes_no(aut.is_vertex_transitive()));
    let sizes: Vec<String> = edge_orbits.iter().map(|o| o.len().to_string()).collect();
    let _ = writeln!(text, "edge orbits       {} (sizes {})", edge_orbits.len(), sizes.join(", "));
    let _ = writeln!(
        text,
        "admissible        {}",
        admissible.map_or("n/a (not stable)", yes_no)
    );
    let _ = writeln!(text, "all degrees even  {}", yes_no(g.all_degrees_even()));
    let input = with_shape(input, &g);
    Ok((Report::new("graph analyze", input, result, elapsed_ms(start), text), Outcome::Success))
}

pub fn certify(src: &GraphSource, cap: u128) -> Run {
    let start = Instant::now();
    let (g, input, label) = load_graph(src)?;
    let opts = CertifyOptions { cap, ..CertifyOptions::default() };
    let v = certify_nonsplit(&g, &opts).map_err(|e| e.to_string())?;
    let result = serde_json::to_value(&v).map_err(|e| e.to_string())?;
    let status = result["status"].as_str().unwrap_or_default().to_string();

    let mut text = String::new();
    let _ = writeln!(text, "graph {label}: {} vertices, {} edges, genus {}", g.vertex_count(), g.edge_count(), g.genus());
    let _ = writeln!(
        text,
        "|Aut| = {}, vertex-transitive: {}, admissible: {}, all degrees even: {}",
        v.aut_order,
        yes_no(v.vertex_transitive),
        yes_no(v.admissible),
        yes_no(v.all_degrees_even)
    );
    if !v.per_orbit.is_empty() {
        let _ = writeln!(text, "v0 = {}, |G2| = {}", v.v0, v.g2_order);
    }
    for o in &v.per_orbit {
        let _ = writeln!(
            text,
            "orbit {}: {} darts, edge {}, |G3| = {}, [G2:G3] = {}, edge reversed: {}",
            o.orbit_id,
            o.darts.len(),
            o.edge,
            o.g3_order,
            o.m,
            yes_no(o.endpoint_swap)
        );
        match &o.certificate {
            Some(c) => {
                let sizes: Vec<String> = c.orbit_sizes.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "  g0 = {} (order {}), orbits on G2/G3: {{{}}}", c.element, c.element_order, sizes.join(", "));
            }
            None => {
                let _ = writeln!(text, "  no element with all orbits even");
            }
        }
    }
    for n in &v.notes {
        let _ = writeln!(text, "note: {n}");
    }
    let _ = writeln!(text, "status: {status}");
    let outcome = if v.status == Status::CertifiedNonsplit { Outcome::Success } else { Outcome::NotCertified };
    let input = with_shape(input, &g);
    Ok((Report::new("certify", input, result, elapsed_ms(start), text), outcome))
}

pub fn clutch_roundtrip(src: &GraphSource) -> Run {
    let start = Instant::now();
    let (g, input, label) = load_graph(src)?;
    let report = roundtrip_check(&g).map_err(|e| e.to_string())?;
    let ok = report.all_isomorphic();
    let mut result = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    result["roundtrip"] = json!(ok);

    let mut text = String::new();
    let _ = writeln!(text, "graph {label}, v0 = {}", report.v0);
    for o in &report.orbits {
        let _ = writeln!(
            text,
            "edge orbit of size {} (e0 = {}): n = {}, m = {}, [G4:G3] = {}, isomorphic: {}",
            o.edge_orbit.len(),
            o.e0,
            o.n,
            o.m,
            o.endpoint_swap_index,
            yes_no(o.isomorphism.is_some())
        );
        if let Some(err) = &o.error {
            let _ = writeln!(text, "  {err}");
        }
    }
    let _ = writeln!(text, "roundtrip: {ok}");
    let outcome = if ok { Outcome::Success } else { Outcome::NotCertified };
    let input = with_shape(input, &g);
    Ok((Report::new("clutch roundtrip", input, result, elapsed_ms(start), text), outcome))
}

fn poly_input(f: &IntPoly, bound: u64) -> Value {
    json!({ "poly": f.to_string(), "degree": f.degree(), "bound": bound })
}

pub fn frobenius_census(args: &PolyArgs) -> Run {
    let start = Instant::now();
    let f = parse_poly(&args.poly)?;
    let bound = args.bound.unwrap_or(DEFAULT_CENSUS_BOUND);
    let c = census(&f, bound).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = c
        .rows()
        .into_iter()
        .map(|(p, count, freq)| json!({ "pattern": p.to_string(), "count": count, "frequency": freq }))
        .collect();
    let result = json!({
        "discriminant": f.discriminant().to_string(),
        "primes_scanned": c.primes_scanned,
        "unramified": c.unramified_total(),
        "ramified": c.ramified,
        "skipped": c.skipped,
        "patterns": rows,
        "all_even_frequency": c.all_even_frequency(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "f = {f}, disc = {}, primes <= {bound}: {}", f.discriminant(), c.primes_scanned);
    let ramified: Vec<String> = c.ramified.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "ramified: {}", if ramified.is_empty() { "none".into() } else { ramified.join(" ") });
    if !c.skipped.is_empty() {
        let skipped: Vec<String> = c.skipped.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "skipped (divide leading coefficient): {}", skipped.join(" "));
    }
    let _ = writeln!(text, "{:<12} {:>10} {:>10}", "pattern", "count", "frequency");
    for (p, count, freq) in c.rows() {
        let _ = writeln!(text, "{:<12} {:>10} {:>10.6}", p.to_string(), count, freq);
    }
    let _ = writeln!(text, "all-even fraction {:.6}", c.all_even_frequency());
    Ok((Report::new("frobenius census", poly_input(&f, bound), result, elapsed_ms(start), text), Outcome::Success))
}

pub fn frobenius_witness(args: &PolyArgs) -> Run {
    let start = Instant::now();
    let f = parse_poly(&args.poly)?;
    let bound = args.bound.unwrap_or(DEFAULT_WITNESS_BOUND);
    let found = find_even_witnesses(&f, bound).map_err(|e| e.to_string())?;
    let mut text = String::new();
    let (result, outcome) = match found {
        Some(w) => {
            let _ = writeln!(text, "f = {f}, disc = {}", w.discriminant);
            for (p, pat) in w.primes.iter().zip(&w.patterns) {
                let _ = writeln!(text, "p = {p}: pattern {pat}");
            }
            let mut result = serde_json::to_value(&w).map_err(|e| e.to_string())?;
            result["found"] = json!(true);
            result["verified"] = json!(w.verify());
            (result, Outcome::Success)
        }
        None => {
            let reason = if f.degree() % 2 == 1 {
                "odd degree: every pattern has an odd part, so no all-even prime exists".to_string()
            } else {
                format!("fewer than two unramified primes <= {bound} with an all-even pattern")
            };
            let _ = writeln!(text, "f = {f}: not found ({reason})");
            (json!({ "found": false, "reason": reason }), Outcome::NotCertified)
        }
    };
    Ok((Report::new("frobenius witness", poly_input(&f, bound), result, elapsed_ms(start), text), outcome))
}

pub fn frobenius_galois(args: &PolyArgs) -> Run {
    let start = Instant::now();
    let f = parse_poly(&args.poly)?;
    let bound = args.bound.unwrap_or(DEFAULT_WITNESS_BOUND);
    let patterns = galois_cycle_witnesses(&f, bound).map_err(|e| e.to_string())?;
    let symmetric = certifies_symmetric(&patterns, f.degree() as u32);
    let names: Vec<String> = patterns.iter().rev().map(ToString::to_string).collect();
    let result = json!({ "patterns": names, "certifies_symmetric": symmetric });
    let mut text = String::new();
    let _ = writeln!(text, "f = {f}, primes <= {bound}");
    let _ = writeln!(text, "observed patterns: {}", names.join(" "));
    let _ = writeln!(
        text,
        "Galois group S_{}: {}",
        f.degree(),
        if symmetric { "certified" } else { "not certified by these patterns" }
    );
    Ok((Report::new("frobenius galois", poly_input(&f, bound), result, elapsed_ms(start), text), Outcome::Success))
}
