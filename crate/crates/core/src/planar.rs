//! Deciding κ₃ on planar graphs.
//!
//! A planar graph has `κ - 1 ≤ κ₃ ≤ κ` and `κ ≤ 5`, so only the question
//! "does every triple carry κ trees?" remains. A family of `ℓ` minimal
//! trees for `S` has a *shape type*: how many trees are spiders, and which
//! terminal is the middle of each through-path. Three spiders with
//! disjoint centres would contain a subdivision of `K_{3,3}`, so planar
//! graphs need at most two. For a fixed type and fixed spider centres the
//! question becomes a linkage problem on a gadget graph:
//!
//! 1. subdivide every edge between two special vertices (terminals and
//!    centres), so such an edge can serve one tree only;
//! 2. replace each special vertex by copies sharing its neighbourhood:
//!    three per centre, and per terminal one copy for each tree that
//!    reaches it as a spider leaf or path end plus two for each path that
//!    has it as middle;
//! 3. ask for disjoint paths joining each centre copy to a copy of its
//!    terminal, and for each path tree `a … m … b`, a copy of `a` to a copy
//!    of `m` and another copy of `m` to a copy of `b`.
//!
//! Linkages and tree families of the type translate into each other.

use std::collections::VecDeque;

use crate::connectivity::{find_linkage, vertex_connectivity, LinkageInstance};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, PathSeq, VertexId};
use crate::oracle::{MinimalTree, TreeShape};
use crate::packing::{pack_trees_constructive, verify_packing, TreeCert, TreePacking};
use crate::planarity::is_planar;

/// `spider_count` spiders plus one through-path per entry of `middles`
/// (terminal indices, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeShapeType {
    pub spider_count: usize,
    pub middles: Vec<usize>,
}

impl TreeShapeType {
    pub fn trees(&self) -> usize {
        self.spider_count + self.middles.len()
    }

    /// Edges each terminal must spend: one per spider and per path end,
    /// two per path it is the middle of.
    pub fn terminal_demand(&self) -> [usize; 3] {
        let mut need = [self.spider_count; 3];
        for &m in &self.middles {
            for (i, slot) in need.iter_mut().enumerate() {
                *slot += if i == m { 2 } else { 1 };
            }
        }
        need
    }
}

/// All shape types with `ℓ` trees and at most two spiders, spiders first
/// (most spiders first), middles in lexicographic order.
pub fn type_catalog(l: usize) -> Result<Vec<TreeShapeType>> {
    if !(2..=4).contains(&l) {
        return invalid(format!("tree count {l} outside 2..=4"));
    }
    let mut out = Vec::new();
    for spiders in (0..=2.min(l)).rev() {
        for middles in multisets(l - spiders) {
            out.push(TreeShapeType { spider_count: spiders, middles });
        }
    }
    Ok(out)
}

/// Sorted multisets of size `k` over `{0, 1, 2}`.
fn multisets(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in from..3 {
            cur.push(x);
            rec(k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 0, &mut Vec::new(), &mut out);
    out
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Vertex(VertexId),
    /// Subdivision vertex of the edge `(u, v)`, `u < v`.
    Subdivision(VertexId, VertexId),
}

/// The part of a tree one linkage pair realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Leg from the centre of spider `tree` to terminal `terminal`.
    SpiderLeg { terminal: usize },
    /// Half of a through-path, from terminal `from` to terminal `to`.
    PathHalf { from: usize, to: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub tree: usize,
    pub role: Role,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    pub terminals: [VertexId; 3],
    pub shape: TreeShapeType,
    pub centers: Vec<VertexId>,
    /// Origin of every gadget vertex.
    pub origin: Vec<Origin>,
    /// `slots[i]` describes linkage pair `i`.
    pub slots: Vec<Slot>,
}

impl GadgetMap {
    /// Gadget vertex sequence → original vertex sequence.
    fn contract(&self, path: &PathSeq) -> Vec<VertexId> {
        path.vertices()
            .iter()
            .filter_map(|&x| match self.origin[x] {
                Origin::Vertex(v) => Some(v),
                Origin::Subdivision(..) => None,
            })
            .collect()
    }

    /// Trees realized by a linkage of the gadget.
    pub fn linkage_to_packing(&self, paths: &[PathSeq]) -> TreePacking {
        let count = self.shape.trees();
        let mut walks: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); count];
        for (slot, path) in self.slots.iter().zip(paths) {
            walks[slot.tree].push(self.contract(path));
        }
        let trees = walks
            .iter()
            .map(|w| {
                let refs: Vec<&[VertexId]> = w.iter().map(Vec::as_slice).collect();
                TreeCert::from_walks(&refs)
            })
            .collect();
        TreePacking { terminals: self.terminals, trees }
    }

    /// A linkage of the gadget realizing `trees`, which must be minimal
    /// trees matching the shape type and centres of this gadget. Returns
    /// `None` when they do not match.
    pub fn packing_to_linkage(&self, g: &Graph, inst: &LinkageInstance, trees: &[MinimalTree]) -> Option<Vec<PathSeq>> {
        if trees.len() != self.shape.trees() {
            return None;
        }
        // Slot tree index → given tree.
        let mut assigned: Vec<Option<usize>> = vec![None; trees.len()];
        let mut taken = vec![false; trees.len()];
        for (slot_tree, assigned_to) in assigned.iter_mut().enumerate() {
            let want = if slot_tree < self.shape.spider_count {
                TreeShape::Spider { center: self.centers[slot_tree] }
            } else {
                TreeShape::Through { middle: self.shape.middles[slot_tree - self.shape.spider_count] }
            };
            let pick = (0..trees.len()).find(|&i| !taken[i] && trees[i].shape == want)?;
            taken[pick] = true;
            *assigned_to = Some(pick);
        }
        let mut paths = Vec::with_capacity(self.slots.len());
        for (slot, &(x, y)) in self.slots.iter().zip(&inst.pairs) {
            let tree = &trees[assigned[slot.tree]?].tree;
            let (a, b) = self.shape_endpoints(slot)?;
            let route = tree_path(tree, a, b)?;
            paths.push(self.expand(g, &route, x, y)?);
        }
        inst.check(&paths).ok()?;
        Some(paths)
    }

    fn shape_endpoints(&self, slot: &Slot) -> Option<(VertexId, VertexId)> {
        Some(match slot.role {
            Role::SpiderLeg { terminal } => (self.centers[slot.tree], self.terminals[terminal]),
            Role::PathHalf { from, to } => (self.terminals[from], self.terminals[to]),
        })
    }

    /// Original route → gadget path from copy `x` to copy `y`, inserting
    /// subdivision vertices between consecutive special vertices.
    fn expand(&self, g: &Graph, route: &[VertexId], x: VertexId, y: VertexId) -> Option<PathSeq> {
        let index_of = |o: Origin| self.origin.iter().position(|&q| q == o);
        let special = |v: VertexId| self.terminals.contains(&v) || self.centers.contains(&v);
        let mut seq = vec![x];
        for (i, w) in route.windows(2).enumerate() {
            let (u, v) = (w[0], w[1]);
            if !g.has_edge(u, v) {
                return None;
            }
            if special(u) && special(v) {
                seq.push(index_of(Origin::Subdivision(u.min(v), u.max(v)))?);
            }
            if i + 2 == route.len() {
                seq.push(y);
            } else {
                seq.push(index_of(Origin::Vertex(v))?);
            }
        }
        Some(PathSeq(seq))
    }
}

/// The path between `a` and `b` inside a tree.
fn tree_path(tree: &TreeCert, a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
    let verts = tree.vertices();
    let n = verts.last().map_or(0, |&v| v + 1);
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in tree.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut prev = vec![usize::MAX; n];
    if a >= n || b >= n {
        return None;
    }
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    if prev[b] == usize::MAX {
        return None;
    }
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    Some(path)
}

pub fn build_gadget(
    g: &Graph,
    s: [VertexId; 3],
    shape: &TreeShapeType,
    centers: &[VertexId],
) -> Result<(LinkageInstance, GadgetMap)> {
    let n = g.order();
    if s.iter().any(|&v| v >= n) || s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
        return invalid(format!("terminals {s:?} must be three distinct vertices below {n}"));
    }
    if centers.len() != shape.spider_count {
        return invalid(format!("{} centres for {} spiders", centers.len(), shape.spider_count));
    }
    for (i, &c) in centers.iter().enumerate() {
        if c >= n || s.contains(&c) || centers[..i].contains(&c) {
            return invalid(format!("centre {c} is out of range, a terminal, or repeated"));
        }
    }
    let mut special = vec![false; n];
    for &v in s.iter().chain(centers) {
        special[v] = true;
    }

    let mut origin: Vec<Origin> = Vec::new();
    let mut index: Vec<Option<usize>> = vec![None; n];
    for v in g.vertices().filter(|&v| !special[v]) {
        index[v] = Some(origin.len());
        origin.push(Origin::Vertex(v));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Neighbourhood of each special vertex in the subdivided graph.
    let mut around: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        match (special[u], special[v]) {
            (false, false) => edges.push((index[u].unwrap(), index[v].unwrap())),
            (true, false) => around[u].push(index[v].unwrap()),
            (false, true) => around[v].push(index[u].unwrap()),
            (true, true) => {
                let mid = origin.len();
                origin.push(Origin::Subdivision(u, v));
                around[u].push(mid);
                around[v].push(mid);
            }
        }
    }
    let copy = |v: VertexId, origin: &mut Vec<Origin>, edges: &mut Vec<(usize, usize)>| {
        let x = origin.len();
        origin.push(Origin::Vertex(v));
        for &w in &around[v] {
            edges.push((x, w));
        }
        x
    };

    let mut pairs = Vec::new();
    let mut slots = Vec::new();
    for (tree, &c) in centers.iter().enumerate() {
        for (ti, &t) in s.iter().enumerate() {
            let from = copy(c, &mut origin, &mut edges);
            let to = copy(t, &mut origin, &mut edges);
            pairs.push((from, to));
            slots.push(Slot { tree, role: Role::SpiderLeg { terminal: ti } });
        }
    }
    for (j, &m) in shape.middles.iter().enumerate() {
        let tree = shape.spider_count + j;
        let ends: Vec<usize> = (0..3).filter(|&i| i != m).collect();
        for (from, to) in [(ends[0], m), (m, ends[1])] {
            let a = copy(s[from], &mut origin, &mut edges);
            let b = copy(s[to], &mut origin, &mut edges);
            pairs.push((a, b));
            slots.push(Slot { tree, role: Role::PathHalf { from, to } });
        }
    }
    let graph = Graph::new(origin.len(), &edges)?;
    let inst = LinkageInstance::new(graph, pairs)?;
    let map = GadgetMap { terminals: s, shape: shape.clone(), centers: centers.to_vec(), origin, slots };
    Ok((inst, map))
}

/// Ascending `k`-subsets of `pool`.
fn combinations(pool: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    fn rec(pool: &[VertexId], k: usize, from: usize, cur: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `ℓ` internally disjoint trees for `s`, searched type by type and
/// centre tuple by centre tuple. Every returned packing is verified.
pub fn triple_has_trees(g: &Graph, s: [VertexId; 3], l: usize) -> Result<Option<TreePacking>> {
    let catalog = type_catalog(l)?;
    let centers_pool: Vec<VertexId> = g.vertices().filter(|&v| !s.contains(&v) && g.degree(v) >= 3).collect();
    for shape in &catalog {
        let need = shape.terminal_demand();
        if (0..3).any(|i| need[i] > g.degree(s[i])) {
            continue;
        }
        for centers in combinations(&centers_pool, shape.spider_count) {
            let (inst, map) = build_gadget(g, s, shape, &centers)?;
            if let Some(paths) = find_linkage(&inst)? {
                let packing = map.linkage_to_packing(&paths);
                verify_packing(g, &packing)
                    .map_err(|e| Error::Construction(format!("gadget linkage gave a bad packing: {e}")))?;
                return Ok(Some(packing));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDecision {
    pub kappa: usize,
    pub value: usize,
    /// A triple carrying fewer than κ trees, when `value = κ - 1` was
    /// established by search.
    pub failing_triple: Option<[VertexId; 3]>,
}

/// κ₃ of a connected planar graph. Triples are tried by ascending degree
/// sum (low degrees fail first), ties lexicographically; a triple for
/// which the constructive engine already yields κ trees is skipped.
pub fn decide_kappa3_planar(g: &Graph) -> Result<PlanarDecision> {
    let n = g.order();
    if n < 3 {
        return invalid("need at least three vertices");
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_planar(g) {
        return Err(Error::NotPlanar);
    }
    let kappa = vertex_connectivity(g)?;
    match kappa {
        1 => return Ok(PlanarDecision { kappa, value: 1, failing_triple: None }),
        5 => return Ok(PlanarDecision { kappa, value: 4, failing_triple: None }),
        2..=4 => {}
        _ => return Err(Error::Construction(format!("planar graph with κ = {kappa}"))),
    }
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push([a, b, c]);
            }
        }
    }
    triples.sort_by_key(|t| (t.iter().map(|&v| g.degree(v)).sum::<usize>(), *t));
    for s in triples {
        if pack_trees_constructive(g, s)?.len() >= kappa {
            continue;
        }
        if triple_has_trees(g, s, kappa)?.is_none() {
            return Ok(PlanarDecision { kappa, value: kappa - 1, failing_triple: Some(s) });
        }
    }
    Ok(PlanarDecision { kappa, value: kappa, failing_triple: None })
}
