//! Menger-style computations: internally disjoint paths, vertex
//! connectivity, minimum vertex cuts, fans and exact disjoint-path linkages.
//!
//! All flow computations split every vertex `v` into `in(v) -> out(v)` with
//! unit capacity and run breadth-first augmentation. Arcs are inserted in
//! ascending vertex order and flow is decomposed by always following the
//! first loaded arc, so every returned path system is deterministic.

use std::collections::VecDeque;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, PathSeq, VertexId};

/// Internally disjoint `source`–`sink` paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub source: VertexId,
    pub sink: VertexId,
    pub paths: Vec<PathSeq>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks every path runs source→sink in `g` and that paths share no
    /// vertex besides the endpoints.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut owner = vec![usize::MAX; g.order()];
        for (i, p) in self.paths.iter().enumerate() {
            p.validate(g)?;
            if p.first() != self.source || p.last() != self.sink {
                return Err(format!("path {i} does not run {}→{}", self.source, self.sink));
            }
            for &v in p.interior() {
                if owner[v] != usize::MAX {
                    return Err(format!("paths {} and {i} share vertex {v}", owner[v]));
                }
                owner[v] = i;
            }
        }
        Ok(())
    }
}

/// A set of internally disjoint legs from `center` to distinct vertices of
/// `target_set`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub center: VertexId,
    pub target_set: Vec<VertexId>,
    pub legs: Vec<PathSeq>,
}

impl Fan {
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut in_target = vec![false; g.order()];
        for &y in &self.target_set {
            in_target[y] = true;
        }
        if in_target[self.center] {
            return Err("center lies in the target set".into());
        }
        let mut owner = vec![usize::MAX; g.order()];
        for (i, leg) in self.legs.iter().enumerate() {
            leg.validate(g)?;
            if leg.first() != self.center {
                return Err(format!("leg {i} does not start at the center"));
            }
            if !in_target[leg.last()] {
                return Err(format!("leg {i} does not end in the target set"));
            }
            for &v in &leg.vertices()[1..] {
                if v != leg.last() && in_target[v] {
                    return Err(format!("leg {i} meets target vertex {v} before its end"));
                }
                if owner[v] != usize::MAX {
                    return Err(format!("legs {} and {i} share vertex {v}", owner[v]));
                }
                owner[v] = i;
            }
        }
        Ok(())
    }
}

/// Prescribed pairs `(x_i, y_i)` to be joined by fully vertex-disjoint paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageInstance {
    pub graph: Graph,
    pub pairs: Vec<(VertexId, VertexId)>,
}

impl LinkageInstance {
    pub fn new(graph: Graph, pairs: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut seen = vec![false; graph.order()];
        for &(x, y) in &pairs {
            for v in [x, y] {
                if v >= graph.order() {
                    return invalid(format!("linkage endpoint {v} out of range"));
                }
                if seen[v] {
                    return invalid(format!("linkage endpoint {v} used twice"));
                }
                seen[v] = true;
            }
        }
        Ok(LinkageInstance { graph, pairs })
    }

    /// Checks a candidate solution: one path per pair, pairwise disjoint.
    pub fn check(&self, paths: &[PathSeq]) -> std::result::Result<(), String> {
        if paths.len() != self.pairs.len() {
            return Err("wrong number of paths".into());
        }
        let mut owner = vec![usize::MAX; self.graph.order()];
        for (i, (p, &(x, y))) in paths.iter().zip(&self.pairs).enumerate() {
            p.validate(&self.graph)?;
            if p.first() != x || p.last() != y {
                return Err(format!("path {i} does not join {x} and {y}"));
            }
            for &v in p.vertices() {
                if owner[v] != usize::MAX {
                    return Err(format!("paths {} and {i} share vertex {v}", owner[v]));
                }
                owner[v] = i;
            }
        }
        Ok(())
    }
}


const INF: i32 = i32::MAX / 4;

struct Arc {
    to: usize,
    cap: i32,
    rev: usize,
    original: bool,
}

/// Unit vertex-capacity flow network over a graph.
struct SplitNetwork {
    arcs: Vec<Vec<Arc>>,
    source: usize,
    sink: usize,
    n: usize,
}

enum Sink<'a> {
    Vertex(VertexId),
    /// Super-sink fed by every target vertex; targets are not traversed.
    Set(&'a [bool]),
}

fn node_in(v: VertexId) -> usize {
    2 * v
}

fn node_out(v: VertexId) -> usize {
    2 * v + 1
}

impl SplitNetwork {
    fn build(g: &Graph, source: VertexId, sink: Sink, blocked: &[bool]) -> Self {
        let n = g.order();
        let total = 2 * n + 1;
        let mut net = SplitNetwork {
            arcs: (0..total).map(|_| Vec::new()).collect(),
            source: node_out(source),
            sink: 0,
            n,
        };
        let is_target = |v: VertexId| match sink {
            Sink::Vertex(t) => v == t,
            Sink::Set(set) => set[v],
        };
        net.sink = match sink {
            Sink::Vertex(t) => node_in(t),
            Sink::Set(_) => 2 * n,
        };
        for v in 0..n {
            if blocked[v] && v != source {
                continue;
            }
            if v != source && !matches!(sink, Sink::Vertex(t) if t == v) {
                net.add_arc(node_in(v), node_out(v), 1);
            }
            if let Sink::Set(_) = sink {
                if is_target(v) {
                    net.add_arc(node_out(v), 2 * n, 1);
                    continue;
                }
            }
            if matches!(sink, Sink::Vertex(t) if t == v) {
                continue;
            }
            for &w in g.neighbors(v) {
                if w == source || (blocked[w] && !is_target(w)) {
                    continue;
                }
                let cap = if matches!(sink, Sink::Vertex(t) if t == w) { 1 } else { INF };
                net.add_arc(node_out(v), node_in(w), cap);
            }
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from, original: true });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: rev_to, original: false });
    }

    /// Breadth-first augmentation up to `limit` units. Returns the flow value.
    fn run(&mut self, limit: usize) -> usize {
        let mut flow = 0;
        let total = self.arcs.len();
        while flow < limit {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; total];
            let mut seen = vec![false; total];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            while let Some(u) = queue.pop_front() {
                if u == self.sink {
                    break;
                }
                for (i, a) in self.arcs[u].iter().enumerate() {
                    if a.cap > 0 && !seen[a.to] {
                        seen[a.to] = true;
                        prev[a.to] = Some((u, i));
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[self.sink] {
                break;
            }
            let mut v = self.sink;
            while let Some((u, i)) = prev[v] {
                self.arcs[u][i].cap -= 1;
                let rev = self.arcs[u][i].rev;
                self.arcs[v][rev].cap += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    /// Decomposes the flow into vertex sequences, following the first loaded
    /// arc at every step.
    fn paths(&mut self, count: usize) -> Vec<Vec<VertexId>> {
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut seq = vec![self.source / 2];
            let mut u = self.source;
            while u != self.sink {
                let idx = self.arcs[u]
                    .iter()
                    .position(|a| a.original && self.arcs[a.to][a.rev].cap > 0)
                    .expect("flow conservation");
                let to = self.arcs[u][idx].to;
                // Unload one unit so the next walk takes a different route.
                self.arcs[u][idx].cap += 1;
                let rev = self.arcs[u][idx].rev;
                self.arcs[to][rev].cap -= 1;
                if to < 2 * self.n {
                    let v = to / 2;
                    if *seq.last().unwrap() != v {
                        seq.push(v);
                    }
                }
                u = to;
            }
            out.push(seq);
        }
        out
    }

    /// Nodes reachable from the source in the residual network.
    fn residual_reach(&self) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }
}

/// A maximum set of internally disjoint `u`–`v` paths. If `u` and `v` are
/// adjacent the single edge counts as one of the paths.
pub fn max_disjoint_paths(g: &Graph, u: VertexId, v: VertexId) -> Result<PathSystem> {
    disjoint_paths_avoiding(g, u, v, &vec![false; g.order()], usize::MAX)
}

/// Like [`max_disjoint_paths`], stopping after `limit` paths and never
/// entering the `blocked` vertices.
pub fn disjoint_paths_avoiding(
    g: &Graph,
    u: VertexId,
    v: VertexId,
    blocked: &[bool],
    limit: usize,
) -> Result<PathSystem> {
    if u == v {
        return invalid("source and sink coincide");
    }
    if u >= g.order() || v >= g.order() {
        return invalid("vertex out of range");
    }
    let mut net = SplitNetwork::build(g, u, Sink::Vertex(v), blocked);
    let value = net.run(limit);
    let paths = net.paths(value).into_iter().map(PathSeq::new).collect();
    Ok(PathSystem { source: u, sink: v, paths })
}

/// Number of internally disjoint `u`–`v` paths, stopping once `limit` is
/// reached.
pub fn local_connectivity(g: &Graph, u: VertexId, v: VertexId, limit: usize) -> usize {
    let mut net = SplitNetwork::build(g, u, Sink::Vertex(v), &vec![false; g.order()]);
    net.run(limit)
}

/// Vertex connectivity κ(G): `n - 1` for complete graphs, otherwise the
/// minimum over non-adjacent pairs of the local connectivity.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    Ok(connectivity_witness(g)?.0)
}

/// κ(G) together with a non-adjacent pair attaining it (None for complete graphs).
fn connectivity_witness(g: &Graph) -> Result<(usize, Option<(VertexId, VertexId)>)> {
    let n = g.order();
    if n < 2 {
        return invalid("connectivity needs at least two vertices");
    }
    if g.is_complete() {
        return Ok((n - 1, None));
    }
    if !g.is_connected() {
        let other = g.reach(0, &vec![false; n]).iter().position(|&s| !s).unwrap();
        return Ok((0, Some((0, other))));
    }
    let mut best = n - 1;
    let mut pair = None;
    // Among any best+1 vertices one lies outside a minimum cut, and every
    // vertex beyond the cut from it has a larger index than the first such.
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let k = local_connectivity(g, i, j, best);
            if k < best || pair.is_none() {
                best = k;
                pair = Some((i, j));
            }
        }
        i += 1;
    }
    Ok((best, pair))
}

/// A minimum vertex cut (size κ(G)). Complete graphs have none.
pub fn min_vertex_cut(g: &Graph) -> Result<Vec<VertexId>> {
    let (k, pair) = connectivity_witness(g)?;
    let Some((s, t)) = pair else {
        return Err(Error::NotFound("complete graphs have no vertex cut".into()));
    };
    let mut net = SplitNetwork::build(g, s, Sink::Vertex(t), &vec![false; g.order()]);
    let value = net.run(usize::MAX);
    debug_assert_eq!(value, k);
    let reach = net.residual_reach();
    let cut: Vec<VertexId> = g
        .vertices()
        .filter(|&v| v != s && v != t && reach[node_in(v)] && !reach[node_out(v)])
        .collect();
    debug_assert_eq!(cut.len(), k);
    Ok(cut)
}

/// A `k`-fan from `x` to `targets`: `k` internally disjoint paths from `x`
/// ending at distinct vertices of `targets` and meeting `targets` only at
/// their ends.
pub fn find_fan(g: &Graph, x: VertexId, targets: &[VertexId], k: usize) -> Result<Fan> {
    find_fan_avoiding(g, x, targets, k, &vec![false; g.order()])
}

pub fn find_fan_avoiding(
    g: &Graph,
    x: VertexId,
    targets: &[VertexId],
    k: usize,
    blocked: &[bool],
) -> Result<Fan> {
    let n = g.order();
    let mut in_target = vec![false; n];
    for &y in targets {
        if y >= n {
            return invalid(format!("target {y} out of range"));
        }
        in_target[y] = true;
    }
    if x >= n || in_target[x] {
        return invalid("fan center must be a vertex outside the target set");
    }
    if in_target.iter().filter(|&&t| t).count() < k {
        return invalid(format!("target set has fewer than {k} vertices"));
    }
    let mut net = SplitNetwork::build(g, x, Sink::Set(&in_target), blocked);
    let value = net.run(k);
    if value < k {
        return Err(Error::NotFound(format!("only {value} of {k} fan legs exist")));
    }
    let legs = net.paths(value).into_iter().map(PathSeq::new).collect();
    let mut target_set: Vec<VertexId> = targets.to_vec();
    target_set.sort_unstable();
    target_set.dedup();
    Ok(Fan { center: x, target_set, legs })
}

/// Search limits for [`find_linkage_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct LinkageLimits {
    /// Maximum number of search nodes before giving up with a resource error.
    pub max_nodes: Option<u64>,
}

/// Exact labelled linkage: pairwise vertex-disjoint paths, the `i`-th from
/// `x_i` to `y_i`, or `None` when no such system exists.
pub fn find_linkage(inst: &LinkageInstance) -> Result<Option<Vec<PathSeq>>> {
    find_linkage_with(inst, LinkageLimits::default())
}

pub fn find_linkage_with(inst: &LinkageInstance, limits: LinkageLimits) -> Result<Option<Vec<PathSeq>>> {
    let g = &inst.graph;
    let n = g.order();
    let mut used = vec![false; n];
    for &(x, y) in &inst.pairs {
        used[x] = true;
        used[y] = true;
    }
    let mut search = LinkageSearch {
        g,
        pairs: &inst.pairs,
        used,
        paths: vec![Vec::new(); inst.pairs.len()],
        nodes: 0,
        max_nodes: limits.max_nodes.unwrap_or(u64::MAX),
        dist_scratch: vec![usize::MAX; n],
        queue: VecDeque::new(),
    };
    if !search.remaining_feasible(0) {
        return Ok(None);
    }
    match search.solve(0) {
        Ok(true) => {
            let paths: Vec<PathSeq> = search.paths.into_iter().map(PathSeq::new).collect();
            debug_assert!(inst.check(&paths).is_ok());
            Ok(Some(paths))
        }
        Ok(false) => Ok(None),
        Err(()) => Err(Error::Resource(format!("linkage search exceeded {} nodes", search.max_nodes))),
    }
}

struct LinkageSearch<'a> {
    g: &'a Graph,
    pairs: &'a [(VertexId, VertexId)],
    /// Vertices on chosen paths plus every pair endpoint.
    used: Vec<bool>,
    paths: Vec<Vec<VertexId>>,
    nodes: u64,
    max_nodes: u64,
    dist_scratch: Vec<usize>,
    queue: VecDeque<VertexId>,
}

impl LinkageSearch<'_> {
    fn solve(&mut self, idx: usize) -> std::result::Result<bool, ()> {
        if idx == self.pairs.len() {
            return Ok(true);
        }
        let (x, _) = self.pairs[idx];
        self.paths[idx] = vec![x];
        let found = self.extend(idx, x)?;
        if !found {
            self.paths[idx].clear();
        }
        Ok(found)
    }

    fn extend(&mut self, idx: usize, cur: VertexId) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(());
        }
        let (_, y) = self.pairs[idx];
        if self.g.has_edge(cur, y) {
            self.paths[idx].push(y);
            if self.remaining_feasible(idx + 1) && self.solve(idx + 1)? {
                return Ok(true);
            }
            self.paths[idx].pop();
        }
        // Try neighbours closest to the target first.
        let dist = self.distances_from(y);
        let mut order: Vec<VertexId> = self
            .g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| !self.used[w] && dist[w] != usize::MAX)
            .collect();
        order.sort_by_key(|&w| (dist[w], w));
        for w in order {
            self.used[w] = true;
            self.paths[idx].push(w);
            if self.remaining_feasible(idx + 1) && self.extend(idx, w)? {
                return Ok(true);
            }
            self.paths[idx].pop();
            self.used[w] = false;
        }
        Ok(false)
    }

    /// BFS distances to `y` through free vertices (y itself is the source).
    fn distances_from(&mut self, y: VertexId) -> Vec<usize> {
        let dist = &mut self.dist_scratch;
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[y] = 0;
        self.queue.clear();
        self.queue.push_back(y);
        while let Some(u) = self.queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if dist[w] == usize::MAX && !self.used[w] {
                    dist[w] = dist[u] + 1;
                    self.queue.push_back(w);
                }
            }
        }
        dist.clone()
    }

    /// Every pair from `from` on must still be joinable through free vertices.
    fn remaining_feasible(&mut self, from: usize) -> bool {
        for j in from..self.pairs.len() {
            let (x, y) = self.pairs[j];
            if !self.joinable(x, y) {
                return false;
            }
        }
        true
    }

    fn joinable(&mut self, x: VertexId, y: VertexId) -> bool {
        if self.g.has_edge(x, y) {
            return true;
        }
        let seen = &mut self.dist_scratch;
        seen.iter_mut().for_each(|d| *d = usize::MAX);
        seen[x] = 0;
        self.queue.clear();
        self.queue.push_back(x);
        while let Some(u) = self.queue.pop_front() {
            for &w in self.g.neighbors(u) {
                if w == y {
                    return true;
                }
                if seen[w] == usize::MAX && !self.used[w] {
                    seen[w] = 0;
                    self.queue.push_back(w);
                }
            }
        }
        false
    }
}
