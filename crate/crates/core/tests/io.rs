mod common;

use common::arb_graph;
use kappa3::io::{parse_edge_list, to_dot, write_edge_list};
use kappa3::Error;
use proptest::prelude::*;

#[test]
fn parse_errors_carry_line_numbers() {
    match parse_edge_list("3 2\n0 1\n1 x\n") {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_edge_list("3 1\n0 0\n").is_err());
    assert!(parse_edge_list("3 1\n0 5\n").is_err());
    assert!(parse_edge_list("3 2\n0 1\n").is_err());
}

#[test]
fn comments_and_blank_lines_are_skipped() {
    let g = parse_edge_list("# a triangle\n3 3\n\n0 1\n1 2\n# mid\n0 2\n").unwrap();
    assert_eq!((g.order(), g.size()), (3, 3));
}

#[test]
fn dot_marks_terminals() {
    let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
    let dot = to_dot(&g, Some(&[vec![(0, 1), (1, 2)]]), &[0, 2]);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("shape=box").count(), 2);
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph(1, 12)) {
        let text = write_edge_list(&g, &["note".to_string()]);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.hash_hex(), g.hash_hex());
    }

    #[test]
    fn hash_changes_with_edges(g in arb_graph(3, 10)) {
        let (u, v) = (0, g.order() - 1);
        let h = if g.has_edge(u, v) { g.without_edge(u, v) } else { g.with_edge(u, v).unwrap() };
        prop_assert_ne!(h.hash_hex(), g.hash_hex());
    }
}
