//! Planarity testing.
//!
//! [`is_planar`] first applies the Euler edge bound and the degree-5 bound,
//! then splits the graph into biconnected blocks and runs the
//! Demoucron–Malgrange–Pertuiset face-embedding procedure on each block.
//! A graph is planar iff every block is.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Graph, VertexId};

/// Fast necessary conditions for planarity: `m <= 3n - 6` and a vertex of
/// degree at most 5. Returns `false` when the graph is certainly
/// non-planar, `true` when inconclusive. Graphs with fewer than three
/// vertices are always inconclusive (and planar).
pub fn quick_planar_filters(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return true;
    }
    g.size() <= 3 * n - 6 && g.min_degree() <= 5
}

pub fn is_planar(g: &Graph) -> bool {
    if !quick_planar_filters(g) {
        return false;
    }
    biconnected_blocks(g).iter().all(|block| block_is_planar(block))
}

/// Edge sets of the biconnected components (bridges form their own block).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(VertexId, VertexId)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(VertexId, VertexId)>,
        blocks: Vec<Vec<(VertexId, VertexId)>>,
    }
    fn dfs(st: &mut State, u: VertexId, parent: Option<VertexId>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for &w in st.g.neighbors(u) {
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                dfs(st, w, Some(u));
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push(e);
                        if e == (u, w) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if Some(w) != parent && st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }
    let n = g.order();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.blocks
}

fn block_is_planar(block: &[(VertexId, VertexId)]) -> bool {
    let mut verts: Vec<VertexId> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let nb = verts.len();
    if nb <= 4 {
        return true;
    }
    if block.len() > 3 * nb - 6 {
        return false;
    }
    let local = |v: VertexId| verts.binary_search(&v).unwrap();
    let edges: Vec<_> = block.iter().map(|&(u, v)| (local(u), local(v))).collect();
    let h = Graph::new(nb, &edges).expect("block edges are simple");
    dmp(&h)
}

/// Demoucron–Malgrange–Pertuiset on a biconnected graph with at least one cycle.
fn dmp(h: &Graph) -> bool {
    let n = h.order();
    let Some(cycle) = find_cycle(h) else {
        return true;
    };
    let mut in_emb = vec![false; n];
    let mut emb_edges: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        in_emb[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        emb_edges.insert((v.min(w), v.max(w)));
    }
    let mut faces: Vec<Vec<VertexId>> = vec![cycle.clone(), cycle];

    while emb_edges.len() < h.size() {
        let fragments = fragments(h, &in_emb, &emb_edges);
        debug_assert!(!fragments.is_empty());
        let mut chosen: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    chosen = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = chosen.expect("at least one fragment");
        let path = fragment_path(h, &fragments[fi], &in_emb);
        for w in path.windows(2) {
            emb_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_emb[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn find_cycle(h: &Graph) -> Option<Vec<VertexId>> {
    let n = h.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX || h.degree(root) == 0 {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
            if *idx < h.degree(u) {
                let w = h.neighbors(u)[*idx];
                *idx += 1;
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    stack.push((w, 0));
                } else if w != parent[u] && depth[w] < depth[u] {
                    let mut cyc = vec![u];
                    let mut x = u;
                    while x != w {
                        x = parent[x];
                        cyc.push(x);
                    }
                    return Some(cyc);
                }
            } else {
                stack.pop();
            }
        }
    }
    None
}

struct Fragment {
    /// Unembedded vertices of the fragment (empty for a single chord edge).
    inner: Vec<VertexId>,
    attachments: Vec<VertexId>,
    chord: Option<(VertexId, VertexId)>,
}

fn fragments(h: &Graph, in_emb: &[bool], emb_edges: &BTreeSet<(VertexId, VertexId)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in h.edges() {
        if in_emb[u] && in_emb[v] && !emb_edges.contains(&(u, v)) {
            out.push(Fragment { inner: vec![], attachments: vec![u, v], chord: Some((u, v)) });
        }
    }
    let n = h.order();
    let mut comp_seen = vec![false; n];
    for s in 0..n {
        if in_emb[s] || comp_seen[s] {
            continue;
        }
        let mut inner = vec![];
        let mut attach = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        comp_seen[s] = true;
        while let Some(u) = queue.pop_front() {
            inner.push(u);
            for &w in h.neighbors(u) {
                if in_emb[w] {
                    attach.insert(w);
                } else if !comp_seen[w] {
                    comp_seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push(Fragment { inner, attachments: attach.into_iter().collect(), chord: None });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(h: &Graph, frag: &Fragment, in_emb: &[bool]) -> Vec<VertexId> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let n = h.order();
    let mut inside = vec![false; n];
    for &v in &frag.inner {
        inside[v] = true;
    }
    let start = frag.attachments[0];
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &w in h.neighbors(start) {
        if inside[w] && prev[w] == usize::MAX {
            prev[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in h.neighbors(u) {
            if in_emb[w] && w != start {
                let mut path = vec![w, u];
                let mut x = u;
                while prev[x] != start {
                    x = prev[x];
                    path.push(x);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if inside[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("a fragment of a biconnected graph has two attachments")
}

fn split_face(face: &[VertexId], path: &[VertexId]) -> (Vec<VertexId>, Vec<VertexId>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let len = face.len();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let mut seg1 = vec![];
    let mut k = i;
    loop {
        seg1.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    let mut seg2 = vec![];
    let mut k = j;
    loop {
        seg2.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    let interior = &path[1..path.len() - 1];
    seg1.extend(interior.iter().rev());
    seg2.extend(interior.iter());
    (seg1, seg2)
}
