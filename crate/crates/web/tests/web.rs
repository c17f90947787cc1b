use kappa3_web::{analyze_json, generate_text, pack_json};
use serde_json::Value;

#[test]
fn generate_then_analyze_octahedron() {
    let text = generate_text("octahedron", "").unwrap();
    let r: Value = serde_json::from_str(&analyze_json(&text).unwrap()).unwrap();
    assert_eq!(r["kappa"], 4);
    assert_eq!(r["planar"], true);
    assert_eq!(r["planar_value"], 3);
    assert_eq!(r["exact"]["value"], 3);
    assert_eq!(r["bounds"]["lower"], 3);
}

#[test]
fn disconnected_graph_has_no_values() {
    let r: Value = serde_json::from_str(&analyze_json("4 2\n0 1\n2 3\n").unwrap()).unwrap();
    assert_eq!(r["connected"], false);
    assert!(r.get("kappa").is_none());
}

#[test]
fn pack_returns_trees_and_drawing() {
    let text = generate_text("complete", "n=6").unwrap();
    let r: Value = serde_json::from_str(&pack_json(&text, "0,2,4").unwrap()).unwrap();
    assert_eq!(r["trees"].as_array().unwrap().len(), 4);
    let svg = r["svg"].as_str().unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<rect").count(), 3);
}

#[test]
fn errors_are_messages() {
    assert!(generate_text("nonsense", "").unwrap_err().contains("unknown family"));
    assert!(generate_text("cycle", "n").is_err());
    assert!(pack_json("3 3\n0 1\n1 2\n0 2\n", "0,1").is_err());
    assert!(analyze_json("garbage").is_err());
}
