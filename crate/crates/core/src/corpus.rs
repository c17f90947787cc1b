//! Graph collections for exhaustive and randomized checks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::generators::random_gnp;
use crate::graph::{Graph, VertexId};

/// Largest order supported by [`all_graphs`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

fn pair_bit(u: usize, v: usize) -> u32 {
    let (a, b) = (u.min(v), u.max(v));
    1 << (b * (b - 1) / 2 + a)
}

fn encode(adj: &[u8], perm: &[usize]) -> u32 {
    let n = adj.len();
    let mut code = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 1 {
                code |= pair_bit(perm[u], perm[v]);
            }
        }
    }
    code
}

/// Smallest code over relabelings that list vertices by ascending degree.
/// Isomorphic graphs give the same code.
fn canonical(adj: &[u8]) -> u32 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let classes: Vec<(usize, usize)> = {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || deg[order[i]] != deg[order[start]] {
                out.push((start, i));
                start = i;
            }
        }
        out
    };
    let mut best = u32::MAX;
    let mut slots = order.clone();
    permute_classes(adj, &classes, 0, &mut slots, &mut best);
    best
}

fn permute_classes(adj: &[u8], classes: &[(usize, usize)], c: usize, slots: &mut Vec<usize>, best: &mut u32) {
    if c == classes.len() {
        // slots[i] is the vertex placed at position i.
        let mut perm = vec![0; slots.len()];
        for (pos, &v) in slots.iter().enumerate() {
            perm[v] = pos;
        }
        *best = (*best).min(encode(adj, &perm));
        return;
    }
    let (lo, hi) = classes[c];
    heap_permute(adj, classes, c, slots, lo, hi - lo, best);
}

/// Heap's algorithm over `slots[lo..lo + k]`, recursing into the next
/// class at each permutation.
fn heap_permute(adj: &[u8], classes: &[(usize, usize)], c: usize, slots: &mut Vec<usize>, lo: usize, k: usize, best: &mut u32) {
    if k <= 1 {
        permute_classes(adj, classes, c + 1, slots, best);
        return;
    }
    heap_permute(adj, classes, c, slots, lo, k - 1, best);
    for i in 0..k - 1 {
        if k.is_multiple_of(2) {
            slots.swap(lo + i, lo + k - 1);
        } else {
            slots.swap(lo, lo + k - 1);
        }
        heap_permute(adj, classes, c, slots, lo, k - 1, best);
    }
}

fn decode(n: usize, code: u32) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if code & pair_bit(u, v) != 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("decoded edges are valid")
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices, built by adding a vertex to each class on `n - 1` vertices in
/// every possible way.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_EXHAUSTIVE_ORDER, "exhaustive generation is limited to {MAX_EXHAUSTIVE_ORDER} vertices");
    let mut level: BTreeSet<u32> = BTreeSet::from([0]);
    for order in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let mut adj = vec![0u8; order + 1];
            for v in 1..order {
                for u in 0..v {
                    if code & pair_bit(u, v) != 0 {
                        adj[u] |= 1 << v;
                        adj[v] |= 1 << u;
                    }
                }
            }
            for mask in 0u32..(1 << order) {
                let mut grown = adj.clone();
                grown[order] = 0;
                for u in 0..order {
                    if mask >> u & 1 == 1 {
                        grown[u] |= 1 << order;
                        grown[order] |= 1 << u;
                    }
                }
                next.insert(canonical(&grown));
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    level.into_iter().map(|code| decode(n, code)).collect()
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Seeded connected `G(n, p)` samples with `n` drawn from `orders` and `p`
/// from `[0.25, 0.9]`; disconnected draws are skipped.
pub fn random_connected_graphs(count: usize, orders: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(orders.clone());
        let p = rng.gen_range(0.25..0.9);
        let g = random_gnp(n, p, rng.gen());
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Seeded connected planar graphs: a random stacked triangulation, random
/// edge flips, then random edge deletions that keep the graph connected.
pub fn random_planar_graphs(count: usize, orders: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(orders.clone());
            random_planar(n, &mut rng)
        })
        .collect()
}

fn random_planar(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n < 3 {
        return crate::generators::path_graph(n.max(1));
    }
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::from([(0, 1), (0, 2), (1, 2)]);
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    let norm = |u: VertexId, v: VertexId| (u.min(v), u.max(v));
    for _ in 0..3 * n {
        let list: Vec<_> = edges.iter().copied().collect();
        let (u, v) = *list.choose(rng).unwrap();
        let holding: Vec<usize> = (0..faces.len()).filter(|&i| faces[i].contains(&u) && faces[i].contains(&v)).collect();
        if holding.len() != 2 {
            continue;
        }
        let apex = |f: [VertexId; 3]| f.into_iter().find(|&x| x != u && x != v).unwrap();
        let (a, b) = (apex(faces[holding[0]]), apex(faces[holding[1]]));
        let degree = |x: VertexId| edges.iter().filter(|e| e.0 == x || e.1 == x).count();
        if a == b || edges.contains(&norm(a, b)) || degree(u) <= 3 || degree(v) <= 3 {
            continue;
        }
        edges.remove(&norm(u, v));
        edges.insert(norm(a, b));
        faces[holding[0]] = [a, b, u];
        faces[holding[1]] = [a, b, v];
    }
    let q: f64 = rng.gen_range(0.0..0.5);
    let mut g = Graph::new(n, &edges.iter().copied().collect::<Vec<_>>()).unwrap();
    let mut order: Vec<_> = g.edges().collect();
    order.shuffle(rng);
    for (u, v) in order {
        if rng.gen_bool(q) {
            let h = g.without_edge(u, v);
            if h.is_connected() {
                g = h;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::is_planar;

    #[test]
    fn class_counts() {
        let all = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(all_graphs(n).len(), all[n - 1], "n = {n}");
            assert_eq!(connected_graphs(n).len(), connected[n - 1], "n = {n}");
        }
    }

    #[test]
    fn random_planar_are_planar_and_connected() {
        for g in random_planar_graphs(40, 4..=10, 7) {
            assert!(g.is_connected());
            assert!(is_planar(&g));
        }
    }

    #[test]
    fn seeded() {
        assert_eq!(random_connected_graphs(5, 5..=9, 1), random_connected_graphs(5, 5..=9, 1));
        assert_eq!(random_planar_graphs(5, 5..=9, 1), random_planar_graphs(5, 5..=9, 1));
    }
}
