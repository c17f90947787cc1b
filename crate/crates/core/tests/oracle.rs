mod common;

use common::{all_subtrees_containing, arb_connected, naive_kappa_s};
use kappa3::corpus::connected_graphs;
use kappa3::generators::{complete, complete_multipartite, cycle};
use kappa3::oracle::{
    enumerate_irreducible_trees, enumerate_minimal_trees, kappa3_exact, kappa3_exact_with, kappa_s_exact,
    max_packing, ExactOptions, OracleLimits, TreeShape,
};
use kappa3::packing::verify_packing;
use kappa3::Graph;
use proptest::prelude::*;

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c])))
}

/// Subtrees containing `s` whose leaves all lie in `s`.
fn naive_minimal_count(g: &Graph, s: [usize; 3]) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    all_subtrees_containing(g, s)
        .into_iter()
        .filter(|&mask| {
            let mut deg = vec![0; g.order()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg[u] += 1;
                    deg[v] += 1;
                }
            }
            (0..g.order()).all(|v| deg[v] != 1 || s.contains(&v))
        })
        .count()
}

#[test]
fn minimal_tree_count_in_k4() {
    let g = complete(4);
    let limits = OracleLimits::default();
    let trees = enumerate_minimal_trees(&g, [0, 1, 2], &limits).unwrap();
    assert_eq!(trees.len(), naive_minimal_count(&g, [0, 1, 2]));
    assert_eq!(trees.iter().filter(|t| matches!(t.shape, TreeShape::Spider { .. })).count(), 1);
}

#[test]
fn minimal_tree_counts_match_subtree_enumeration() {
    let limits = OracleLimits::default();
    for n in 3..=6 {
        for g in connected_graphs(n).into_iter().filter(|g| g.size() <= 13) {
            for s in triples(n) {
                let trees = enumerate_minimal_trees(&g, s, &limits).unwrap();
                assert_eq!(trees.len(), naive_minimal_count(&g, s), "{:?} {s:?}", g.edges().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn kappa_s_matches_naive_packing_up_to_five() {
    for n in 3..=5 {
        for g in connected_graphs(n) {
            for s in triples(n) {
                let got = kappa_s_exact(&g, s).unwrap();
                verify_packing(&g, &got.witness).unwrap();
                assert_eq!(got.value, naive_kappa_s(&g, s), "{:?} {s:?}", g.edges().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn kappa_s_matches_naive_packing_on_sparse_six() {
    for g in connected_graphs(6).into_iter().filter(|g| g.size() <= 10) {
        for s in triples(6) {
            assert_eq!(kappa_s_exact(&g, s).unwrap().value, naive_kappa_s(&g, s));
        }
    }
}

#[test]
fn complete_and_cycle_values() {
    for n in 3..=7 {
        assert_eq!(kappa3_exact(&complete(n)).unwrap().value, n - 2);
    }
    for n in 3..=8 {
        assert_eq!(kappa3_exact(&cycle(n)).unwrap().value, 1);
    }
}

#[test]
fn parallel_search_is_deterministic() {
    let g = complete_multipartite(&[2, 3, 3]);
    let one = kappa3_exact_with(&g, &ExactOptions { jobs: 1, ..ExactOptions::default() }).unwrap();
    let two = kappa3_exact_with(&g, &ExactOptions { jobs: 2, ..ExactOptions::default() }).unwrap();
    assert_eq!(one, two);
}

#[test]
fn resource_cap_is_reported() {
    let limits = OracleLimits { max_vertices: 5, ..OracleLimits::default() };
    let err = kappa3_exact_with(&complete(6), &ExactOptions { limits, jobs: 1 }).unwrap_err();
    assert!(matches!(err, kappa3::Error::Resource(_)));
}

#[test]
fn disconnected_rejected() {
    let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(kappa3_exact(&g), Err(kappa3::Error::Disconnected)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn irreducible_trees_lose_nothing(g in arb_connected(4, 8), seed in 0usize..1000) {
        let n = g.order();
        let all: Vec<_> = triples(n).collect();
        let s = all[seed % all.len()];
        let limits = OracleLimits::default();
        let full = enumerate_minimal_trees(&g, s, &limits).unwrap();
        let pruned = enumerate_irreducible_trees(&g, s, &limits).unwrap();
        prop_assert!(pruned.iter().all(|t| full.contains(t)));
        let a = max_packing(&full, s, &limits, None).unwrap();
        let b = max_packing(&pruned, s, &limits, None).unwrap();
        prop_assert_eq!(a.value, b.value);
    }

    #[test]
    fn witness_shapes_describe_trees(g in arb_connected(4, 9), seed in 0usize..1000) {
        let n = g.order();
        let all: Vec<_> = triples(n).collect();
        let s = all[seed % all.len()];
        let k = kappa_s_exact(&g, s).unwrap();
        verify_packing(&g, &k.witness).unwrap();
        prop_assert_eq!(k.shapes.len(), k.value);
        for (shape, tree) in k.shapes.iter().zip(&k.witness.trees) {
            let deg = |v: usize| tree.edges().iter().filter(|e| e.0 == v || e.1 == v).count();
            match *shape {
                TreeShape::Spider { center } => prop_assert_eq!(deg(center), 3),
                TreeShape::Through { middle } => prop_assert_eq!(deg(s[middle]), 2),
            }
        }
    }
}
