//! Edge-list text format and DOT export.
//!
//! Edge-list format: the first non-comment line is `n m`, followed by `m`
//! lines `u v` (0-indexed, whitespace separated). Lines starting with `#`
//! and blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return parse_err(lineno, format!("expected two integers, got {line:?}"));
        }
        let a: usize = match fields[0].parse() {
            Ok(x) => x,
            Err(_) => return parse_err(lineno, format!("not a non-negative integer: {}", fields[0])),
        };
        let b: usize = match fields[1].parse() {
            Ok(x) => x,
            Err(_) => return parse_err(lineno, format!("not a non-negative integer: {}", fields[1])),
        };
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return parse_err(lineno, format!("endpoint out of range 0..{n}"));
                }
                if a == b {
                    return parse_err(lineno, format!("self-loop at vertex {a}"));
                }
                edges.push((a, b));
            }
        }
    }
    let Some((n, m)) = header else {
        return parse_err(1, "missing `n m` header");
    };
    if edges.len() != m {
        return parse_err(
            text.lines().count(),
            format!("header announces {m} edges but {} were given", edges.len()),
        );
    }
    Graph::new(n, &edges)
}

/// Serializes a graph in the edge-list format. `comments` are emitted as
/// leading `#` lines.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const PALETTE: &[&str] = &[
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#9a6324",
    "#469990", "#800000", "#808000", "#000075",
];

/// Renders the graph as an undirected DOT document. When `trees` is given,
/// each tree's edges get a distinct colour and the `terminals` are drawn as
/// filled boxes.
pub fn to_dot(g: &Graph, trees: Option<&[Vec<(VertexId, VertexId)>]>, terminals: &[VertexId]) -> String {
    let mut colour: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    if let Some(trees) = trees {
        for (i, t) in trees.iter().enumerate() {
            for &(u, v) in t {
                colour.insert((u.min(v), u.max(v)), i);
            }
        }
    }
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if terminals.contains(&v) {
            let _ = writeln!(out, "  {v} [shape=box, style=filled, fillcolor=\"#dddddd\"];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (u, v) in g.edges() {
        match colour.get(&(u, v)) {
            Some(&i) => {
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=\"{}\", penwidth=2.5, label=\"T{}\"];",
                    PALETTE[i % PALETTE.len()],
                    i + 1
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v} [color=\"#bbbbbb\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n# x\n0 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::new(5, &[(0, 4), (3, 1), (2, 1)]).unwrap();
        let text = write_edge_list(&g, &["hello".to_string()]);
        assert!(text.starts_with("# hello\n5 3\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn dot_colours_trees() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let trees = vec![vec![(0, 1), (1, 2)]];
        let dot = to_dot(&g, Some(&trees), &[0, 1, 2]);
        assert!(dot.contains("0 -- 1 [color=\"#e6194b\""));
        assert!(dot.contains("0 -- 2 [color=\"#bbbbbb\"]"));
        assert!(dot.contains("shape=box"));
    }
}
