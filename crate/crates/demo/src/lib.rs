//! WebAssembly bindings for the browser demo. Every export returns a JSON
//! string; failures come back as `{"error": "..."}`.

use ramseylab::constructions::{
    k43e_from_graph, kneser_matching_coloring, sum_mod, two_pentagon_coloring,
};
use ramseylab::format::{parse_coloring, write_coloring};
use ramseylab::search::{exists_good_coloring, SearchStatus};
use ramseylab::{certificate, find_mono_copy, Coloring, Pattern};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest host the page will search; keeps the tab responsive.
const MAX_DEMO_EDGES: u64 = 120;

fn coloring_json(c: &Coloring) -> Value {
    let edges: Vec<Value> = c
        .assigned_edges()
        .map(|(e, color)| json!({ "v": e, "c": color }))
        .collect();
    json!({
        "r": c.r(),
        "n": c.n(),
        "k": c.k(),
        "class_sizes": c.class_sizes(),
        "edges": edges,
        "hrc": write_coloring(c),
    })
}

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn build(kind: &str, a: u32, b: u32) -> Result<(Coloring, String), String> {
    let err = |e: ramseylab::Error| e.to_string();
    Ok(match kind {
        "sum-mod" => (
            sum_mod(a as usize, b as u16).map_err(err)?,
            format!("triple ijl colored (i+j+l) mod {b}; kite-free when n <= m"),
        ),
        "kneser" => (
            kneser_matching_coloring(3, a as u16).map_err(err)?,
            "color of a triple is min(smallest vertex, k-1); no two disjoint triples share a color"
                .into(),
        ),
        "k43e" => (
            k43e_from_graph(&two_pentagon_coloring()).map_err(err)?,
            "two-pentagon coloring of K_5 lifted to triples; no monochromatic K43e".into(),
        ),
        name => (
            certificate(name).map_err(err)?,
            format!("catalog certificate {name}"),
        ),
    })
}

/// Build a coloring: `sum-mod` (n = a, m = b), `kneser` (k = a), `k43e`, or
/// any catalog certificate name.
#[wasm_bindgen]
pub fn construct(kind: &str, a: u32, b: u32) -> String {
    match build(kind, a, b) {
        Ok((c, claim)) => {
            let mut v = coloring_json(&c);
            v["claim"] = json!(claim);
            v.to_string()
        }
        Err(e) => error(e),
    }
}

/// Look for a monochromatic copy of `pattern` in an HRC1 coloring.
#[wasm_bindgen]
pub fn verify(pattern: &str, hrc: &str) -> String {
    let p = match Pattern::parse(pattern) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let c = match parse_coloring(hrc) {
        Ok(c) => c,
        Err(e) => return error(e),
    };
    match find_mono_copy(&c, &p) {
        Ok(None) => json!({ "clean": true, "class_sizes": c.class_sizes() }).to_string(),
        Ok(Some(e)) => json!({
            "clean": false,
            "class_sizes": c.class_sizes(),
            "witness": { "color": e.color, "map": e.map, "edges": e.image_edges(&p) },
        })
        .to_string(),
        Err(e) => error(e),
    }
}

/// Exhaustive search for a k-coloring of K_n^r without a monochromatic copy.
#[wasm_bindgen]
pub fn search(pattern: &str, k: u16, n: u32, budget: u32) -> String {
    let p = match Pattern::parse(pattern) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    if ramseylab::binomial(u64::from(n), p.r() as u64) > MAX_DEMO_EDGES {
        return error(format!(
            "the demo searches hosts with at most {MAX_DEMO_EDGES} edges"
        ));
    }
    match exists_good_coloring(&p, k, n as usize, u64::from(budget)) {
        Ok(out) => {
            let status = match out.status {
                SearchStatus::Found => "found",
                SearchStatus::NotFound => "not-found",
                SearchStatus::BudgetExceeded => "budget-exceeded",
            };
            let mut v =
                json!({ "status": status, "nodes": out.nodes_explored, "pattern": p.name() });
            if let Some(c) = &out.certificate {
                v["coloring"] = coloring_json(c);
            }
            v.to_string()
        }
        Err(e) => error(e),
    }
}
