//! Browser bindings. Every exported function takes and returns plain
//! strings (edge-list text in, JSON or SVG out) so the page needs no glue
//! beyond the generated module.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use kappa3::connectivity::vertex_connectivity;
use kappa3::generators::{generate_family, FamilySpec};
use kappa3::io::{parse_edge_list, write_edge_list};
use kappa3::oracle::{kappa3_exact_with, ExactOptions, OracleLimits};
use kappa3::packing::{kappa3_bounds, pack_trees_traced, verify_packing, TreePacking};
use kappa3::planar::decide_kappa3_planar;
use kappa3::planarity::is_planar;
use kappa3::{Graph, VertexId};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order for which `analyze` also runs the exact search.
pub const EXACT_LIMIT: usize = 10;

const PALETTE: &[&str] = &["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324"];

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Edge-list text for a named family; `params` is `key=value,...`.
pub fn generate_text(family: &str, params: &str) -> Result<String, String> {
    let mut map = BTreeMap::new();
    for pair in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| format!("parameter {pair:?} is not key=value"))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    let spec = FamilySpec::from_params(family, &map).map_err(err)?;
    let gen = generate_family(&spec).map_err(err)?;
    let mut comments = vec![format!("family: {spec}")];
    if let Some([a, b, c]) = gen.terminals {
        comments.push(format!("terminals: {a},{b},{c}"));
    }
    Ok(write_edge_list(&gen.graph, &comments))
}

/// Summary of a graph as JSON: order, size, planarity, κ, bounds on κ₃,
/// the planar decision when planar and the exact value when small.
pub fn analyze_json(text: &str) -> Result<String, String> {
    let g = parse_edge_list(text).map_err(err)?;
    let planar = is_planar(&g);
    let mut out = json!({
        "n": g.order(),
        "m": g.size(),
        "connected": g.is_connected(),
        "planar": planar,
    });
    if g.order() < 3 || !g.is_connected() {
        return Ok(out.to_string());
    }
    out["kappa"] = json!(vertex_connectivity(&g).map_err(err)?);
    let b = kappa3_bounds(&g).map_err(err)?;
    out["bounds"] = json!({
        "lower": b.lower,
        "upper": b.upper,
        "notes": b.lower_notes.iter().chain(&b.upper_notes).collect::<Vec<_>>(),
    });
    if planar {
        let d = decide_kappa3_planar(&g).map_err(err)?;
        out["planar_value"] = json!(d.value);
    }
    if g.order() <= EXACT_LIMIT {
        let opts = ExactOptions { limits: OracleLimits::default(), jobs: 1 };
        let k = kappa3_exact_with(&g, &opts).map_err(err)?;
        out["exact"] = json!({ "value": k.value, "triple": k.triple });
    }
    Ok(out.to_string())
}

fn parse_terminals(raw: &str) -> Result<[VertexId; 3], String> {
    let parts: Vec<VertexId> = raw
        .split(',')
        .map(|p| p.trim().parse().map_err(|_| format!("bad terminal {p:?}")))
        .collect::<Result<_, _>>()?;
    parts.try_into().map_err(|_| "need exactly three terminals".to_string())
}

/// Constructive packing for `terminals` (`"a,b,c"`) as JSON with an SVG
/// drawing under `"svg"`.
pub fn pack_json(text: &str, terminals: &str) -> Result<String, String> {
    let g = parse_edge_list(text).map_err(err)?;
    let s = parse_terminals(terminals)?;
    let (packing, trace) = pack_trees_traced(&g, s).map_err(err)?;
    verify_packing(&g, &packing).map_err(err)?;
    let trees: Vec<Value> = packing.trees.iter().map(|t| json!(t.edges())).collect();
    Ok(json!({
        "terminals": s,
        "kappa": trace.kappa,
        "guaranteed": trace.guaranteed,
        "outcome": format!("{:?}", trace.outcome),
        "trees": trees,
        "svg": render_svg(&g, Some(&packing)),
    })
    .to_string())
}

/// Circular drawing; tree edges coloured per tree, terminals as squares.
pub fn render_svg(g: &Graph, packing: Option<&TreePacking>) -> String {
    let n = g.order().max(1);
    let (size, r) = (420.0, 170.0);
    let pos: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
            (size / 2.0 + r * a.cos(), size / 2.0 + r * a.sin())
        })
        .collect();
    let mut colour = BTreeMap::new();
    let mut terminals: &[VertexId] = &[];
    if let Some(p) = packing {
        terminals = &p.terminals;
        for (i, t) in p.trees.iter().enumerate() {
            for &(u, v) in t.edges() {
                colour.insert((u.min(v), u.max(v)), PALETTE[i % PALETTE.len()]);
            }
        }
    }
    let mut svg = format!(r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">"#);
    for (u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (pos[u], pos[v]);
        let (stroke, width) = match colour.get(&(u, v)) {
            Some(c) => (*c, 3.0),
            None => ("#ccc", 1.0),
        };
        let _ = write!(
            svg,
            r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }
    for (v, &(x, y)) in pos.iter().enumerate().take(g.order()) {
        if terminals.contains(&v) {
            let _ = write!(svg, r##"<rect x="{:.1}" y="{:.1}" width="20" height="20" fill="#222"/>"##, x - 10.0, y - 10.0);
            let _ = write!(svg, r##"<text x="{x:.1}" y="{:.1}" fill="#fff" font-size="11" text-anchor="middle">{v}</text>"##, y + 4.0);
        } else {
            let _ = write!(svg, r##"<circle cx="{x:.1}" cy="{y:.1}" r="10" fill="#fff" stroke="#222"/>"##);
            let _ = write!(svg, r#"<text x="{x:.1}" y="{:.1}" font-size="11" text-anchor="middle">{v}</text>"#, y + 4.0);
        }
    }
    svg.push_str("</svg>");
    svg
}

#[wasm_bindgen]
pub fn generate(family: &str, params: &str) -> Result<String, JsError> {
    generate_text(family, params).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_json(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pack(text: &str, terminals: &str) -> Result<String, JsError> {
    pack_json(text, terminals).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn draw(text: &str) -> Result<String, JsError> {
    let g = parse_edge_list(text).map_err(|e| JsError::new(&e.to_string()))?;
    Ok(render_svg(&g, None))
}
