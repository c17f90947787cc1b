//! Brute-force reference implementations and generators shared by the
//! integration tests. Everything here is deliberately naive and shares no
//! code with the library beyond `Graph`.

#![allow(dead_code)]

use kappa3::Graph;
use proptest::prelude::*;

/// Graphs on `lo..=hi` vertices, each pair present independently.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| from_bits(n, &bits))
}

/// Connected graphs (a random spanning tree plus random extra edges).
pub fn arb_connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(0usize..1000, n),
            proptest::collection::vec(0u8..100, pairs),
            10u8..95,
        )
    })
    .prop_map(|(n, parents, weights, density)| {
        let mut edges = Vec::new();
        for (v, &p) in parents.iter().enumerate().skip(1) {
            edges.push((p % v, v));
        }
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if weights[k] < density {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    })
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn connected_without(g: &Graph, removed: u32) -> bool {
    let n = g.order();
    let Some(start) = (0..n).find(|&v| removed >> v & 1 == 0) else {
        return true;
    };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// κ(G) by trying every vertex subset in order of size.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    let mut best = n - 1;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < best && n - k >= 2 && !connected_without(g, mask) {
            best = k;
        }
    }
    best
}

/// Smallest vertex set separating non-adjacent `u` and `v`.
pub fn brute_local_connectivity(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.order();
    let mut best = usize::MAX;
    for mask in 0u32..(1 << n) {
        if mask >> u & 1 == 1 || mask >> v & 1 == 1 {
            continue;
        }
        let k = mask.count_ones() as usize;
        if k >= best {
            continue;
        }
        let mut seen = mask | 1 << u;
        let mut stack = vec![u];
        while let Some(x) = stack.pop() {
            for &w in g.neighbors(x) {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if seen >> v & 1 == 0 {
            best = k;
        }
    }
    best
}

/// All simple paths from `a` to `b` as vertex lists.
pub fn simple_paths(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, b: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *cur.last().unwrap();
        if u == b {
            out.push(cur.clone());
            return;
        }
        for &w in g.neighbors(u) {
            if !cur.contains(&w) {
                cur.push(w);
                rec(g, b, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(g, b, &mut vec![a], &mut out);
    out
}

/// Whether pairwise vertex-disjoint paths join every pair.
pub fn brute_linkage(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let options: Vec<Vec<u32>> = pairs
        .iter()
        .map(|&(a, b)| simple_paths(g, a, b).iter().map(|p| p.iter().fold(0u32, |m, &v| m | 1 << v)).collect())
        .collect();
    fn rec(options: &[Vec<u32>], i: usize, used: u32) -> bool {
        if i == options.len() {
            return true;
        }
        options[i].iter().any(|&m| m & used == 0 && rec(options, i + 1, used | m))
    }
    rec(&options, 0, 0)
}

/// Every subtree of `g` (as an edge bitmask over `g.edges()`) whose vertex
/// set contains `s`.
pub fn all_subtrees_containing(g: &Graph, s: [usize; 3]) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    assert!(m <= 22, "too many edges for subset enumeration");
    let mut out = Vec::new();
    for mask in 1u64..(1 << m) {
        let mut verts = 0u32;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                verts |= 1 << u | 1 << v;
            }
        }
        if s.iter().any(|&t| verts >> t & 1 == 0) {
            continue;
        }
        if verts.count_ones() != mask.count_ones() + 1 {
            continue;
        }
        // Connected via union-find.
        let mut parent: Vec<usize> = (0..g.order()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut comps = verts.count_ones();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
        if comps == 1 {
            out.push(mask);
        }
    }
    out
}

/// κ(S) by maximum packing over every subtree containing `S`.
pub fn naive_kappa_s(g: &Graph, s: [usize; 3]) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let terminals: u32 = s.iter().fold(0, |m, &t| m | 1 << t);
    let trees: Vec<(u64, u32)> = all_subtrees_containing(g, s)
        .into_iter()
        .map(|mask| {
            let mut verts = 0u32;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    verts |= 1 << u | 1 << v;
                }
            }
            (mask, verts & !terminals)
        })
        .collect();
    fn rec(trees: &[(u64, u32)], from: usize, used_e: u64, used_v: u32, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for i in from..trees.len() {
            let (e, v) = trees[i];
            if e & used_e == 0 && v & used_v == 0 {
                rec(trees, i + 1, used_e | e, used_v | v, depth + 1, best);
            }
        }
    }
    let mut best = 0;
    rec(&trees, 0, 0, 0, 0, &mut best);
    best
}

fn has_k5_or_k33(g: &Graph) -> bool {
    let n = g.order();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones();
        if k == 5 {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b))) {
                return true;
            }
        }
        if k == 6 {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            for side in 0u32..64 {
                if side.count_ones() != 3 || side & 1 == 0 {
                    continue;
                }
                let a: Vec<usize> = (0..6).filter(|&i| side >> i & 1 == 1).map(|i| vs[i]).collect();
                let b: Vec<usize> = (0..6).filter(|&i| side >> i & 1 == 0).map(|i| vs[i]).collect();
                if a.iter().all(|&x| b.iter().all(|&y| g.has_edge(x, y))) {
                    return true;
                }
            }
        }
    }
    false
}

fn contract(g: &Graph, u: usize, v: usize) -> Graph {
    let n = g.order();
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    let edges: Vec<(usize, usize)> =
        g.edges().map(|(a, b)| (relabel(a), relabel(b))).filter(|(a, b)| a != b).collect();
    Graph::new(n - 1, &edges).unwrap()
}

/// Non-planarity by searching for a `K5` or `K_{3,3}` minor.
pub fn has_kuratowski_minor(g: &Graph) -> bool {
    if has_k5_or_k33(g) {
        return true;
    }
    if g.order() <= 5 {
        return false;
    }
    g.edges().any(|(u, v)| has_kuratowski_minor(&contract(g, u, v)))
}
