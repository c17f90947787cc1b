mod common;

use common::{arb_connected, arb_graph, brute_connectivity, brute_linkage, brute_local_connectivity, has_kuratowski_minor};
use kappa3::connectivity::{
    find_fan, find_linkage, local_connectivity, max_disjoint_paths, min_vertex_cut, vertex_connectivity,
    LinkageInstance,
};
use kappa3::corpus::{all_graphs, connected_graphs};
use kappa3::planarity::is_planar;
use kappa3::Graph;
use proptest::prelude::*;

#[test]
fn connectivity_matches_subset_search_up_to_seven() {
    for n in 2..=7 {
        for g in connected_graphs(n) {
            assert_eq!(vertex_connectivity(&g).unwrap(), brute_connectivity(&g), "{:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn disconnected_graphs_have_zero_connectivity() {
    for g in all_graphs(5).into_iter().filter(|g| !g.is_connected()) {
        assert_eq!(vertex_connectivity(&g).unwrap(), 0);
    }
}

#[test]
fn min_cut_separates() {
    for g in connected_graphs(6).into_iter().filter(|g| !g.is_complete()) {
        let cut = min_vertex_cut(&g).unwrap();
        assert_eq!(cut.len(), vertex_connectivity(&g).unwrap());
        let mut removed = vec![false; g.order()];
        for &v in &cut {
            removed[v] = true;
        }
        assert!(!g.is_connected_avoiding(&removed));
    }
}

#[test]
fn planarity_matches_minor_search_up_to_seven() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            assert_eq!(is_planar(&g), !has_kuratowski_minor(&g), "{:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn planar_counts_at_seven_and_eight() {
    assert_eq!(connected_graphs(7).iter().filter(|g| is_planar(g)).count(), 646);
    assert_eq!(connected_graphs(8).iter().filter(|g| is_planar(g)).count(), 5974);
}

#[test]
fn fan_reaches_every_target_in_complete_graph() {
    let g = kappa3::generators::complete(7);
    let fan = find_fan(&g, 0, &[1, 2, 3, 4, 5, 6], 6).unwrap();
    fan.validate(&g).unwrap();
    assert_eq!(fan.legs.len(), 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn menger_pairs(g in arb_connected(3, 9), a in 0usize..9, b in 0usize..9) {
        let n = g.order();
        let (u, v) = (a % n, b % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let system = max_disjoint_paths(&g, u, v).unwrap();
        system.validate(&g).unwrap();
        prop_assert_eq!(system.len(), brute_local_connectivity(&g, u, v));
        prop_assert_eq!(local_connectivity(&g, u, v, 2), system.len().min(2));
    }

    #[test]
    fn fans_validate(g in arb_connected(5, 10), x in 0usize..10, k in 1usize..4) {
        let n = g.order();
        let x = x % n;
        let targets: Vec<usize> = (0..n).filter(|&v| v != x).take(k + 1).collect();
        let kappa = vertex_connectivity(&g).unwrap();
        prop_assume!(kappa >= k);
        let fan = find_fan(&g, x, &targets, k).unwrap();
        fan.validate(&g).unwrap();
        prop_assert_eq!(fan.legs.len(), k);
    }

    #[test]
    fn linkage_matches_path_enumeration(g in arb_graph(4, 8), seed in any::<u64>(), pairs in 1usize..4) {
        let n = g.order();
        let mut ends: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ends.swap(i, (s >> 33) as usize % (i + 1));
        }
        let pairs = pairs.min(n / 2);
        let list: Vec<(usize, usize)> = (0..pairs).map(|i| (ends[2 * i], ends[2 * i + 1])).collect();
        let inst = LinkageInstance::new(g.clone(), list.clone()).unwrap();
        let found = find_linkage(&inst).unwrap();
        if let Some(paths) = &found {
            inst.check(paths).unwrap();
        }
        prop_assert_eq!(found.is_some(), brute_linkage(&g, &list));
    }

    #[test]
    fn connectivity_at_most_min_degree(g in arb_connected(2, 12)) {
        let k = vertex_connectivity(&g).unwrap();
        prop_assert!(k <= g.min_degree());
    }
}

#[test]
fn linkage_rejects_reused_endpoint() {
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert!(LinkageInstance::new(g, vec![(0, 1), (1, 3)]).is_err());
}
