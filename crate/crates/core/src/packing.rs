//! Internally disjoint trees connecting a vertex triple.
//!
//! [`pack_trees_constructive`] builds at least `3k + ⌈r/2⌉` trees for any
//! triple of a graph with `κ = 4k + r`. Outline, with `S = {v1, v2, v3}`:
//!
//! 1. Take κ internally disjoint `v1v2`-paths. If one contains `v3` it is
//!    the first *through* path (`t = 1`). Otherwise take a κ-fan from `v3`
//!    to the path vertices: legs landing on distinct paths give κ trees
//!    `P_j ∪ M_j` at once, and otherwise two legs landing on one path are
//!    spliced into it, making it a through path.
//! 2. Re-route the `t` through paths ([`crate::path_transform`]). If the
//!    `κ - 2t` residual legs land on distinct clean paths, assemble
//!    `κ - ⌈t/2⌉` trees (*middle break*); otherwise splice two residual
//!    legs into a new through path and repeat.
//! 3. At `t = 2k` (`2k + 1` when `r = 3`) assemble the *final break*.
//!
//! `r = 2` runs as if `κ` were `4k + 1`. Every result is re-checked by
//! [`verify_packing`] before it is returned.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::connectivity::{find_fan, max_disjoint_paths, vertex_connectivity};
use crate::error::{invalid, Error, Result};
use crate::graph::{degree_profile, Graph, PathSeq, VertexId};
use crate::path_transform::{path_transformation_unchecked, ReducedStructure, ThroughPathConfig};
use crate::planarity::is_planar;

/// Edge set of one tree, stored as sorted `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCert {
    edges: Vec<(VertexId, VertexId)>,
}

impl TreeCert {
    pub fn from_edges(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let set: BTreeSet<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        TreeCert { edges: set.into_iter().collect() }
    }

    /// Union of the edges of several vertex walks.
    pub fn from_walks(walks: &[&[VertexId]]) -> Self {
        Self::from_edges(walks.iter().flat_map(|w| w.windows(2).map(|e| (e[0], e[1]))))
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        let set: BTreeSet<_> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        set.into_iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePacking {
    pub terminals: [VertexId; 3],
    pub trees: Vec<TreeCert>,
}

impl TreePacking {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// First violated packing condition, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BadTerminals(String),
    EdgeNotInGraph { tree: usize, u: VertexId, v: VertexId },
    NotATree { tree: usize, reason: String },
    MissingTerminal { tree: usize, terminal: VertexId },
    VertexOverlap { a: usize, b: usize, vertex: VertexId },
    SharedEdge { a: usize, b: usize, u: VertexId, v: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadTerminals(m) => write!(f, "bad terminals: {m}"),
            Violation::EdgeNotInGraph { tree, u, v } => write!(f, "tree {tree}: edge {u}-{v} not in graph"),
            Violation::NotATree { tree, reason } => write!(f, "tree {tree} is not a tree: {reason}"),
            Violation::MissingTerminal { tree, terminal } => write!(f, "tree {tree} misses terminal {terminal}"),
            Violation::VertexOverlap { a, b, vertex } => {
                write!(f, "trees {a} and {b}: vertex-intersection exceeds S at {vertex}")
            }
            Violation::SharedEdge { a, b, u, v } => write!(f, "trees {a} and {b}: shared edge {u}-{v}"),
        }
    }
}

impl std::error::Error for Violation {}

pub fn verify_packing(g: &Graph, p: &TreePacking) -> std::result::Result<(), Violation> {
    let n = g.order();
    let s = p.terminals;
    if s.iter().any(|&v| v >= n) {
        return Err(Violation::BadTerminals(format!("{s:?} out of range for {n} vertices")));
    }
    if s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
        return Err(Violation::BadTerminals(format!("{s:?} not distinct")));
    }
    let mut vertex_owner: Vec<Option<usize>> = vec![None; n];
    let mut edge_owner = std::collections::HashMap::new();
    for (ti, tree) in p.trees.iter().enumerate() {
        for &(u, v) in tree.edges() {
            if u >= n || v >= n || !g.has_edge(u, v) {
                return Err(Violation::EdgeNotInGraph { tree: ti, u, v });
            }
        }
        let verts = tree.vertices();
        if verts.len() != tree.edges().len() + 1 {
            return Err(Violation::NotATree {
                tree: ti,
                reason: format!("{} vertices but {} edges", verts.len(), tree.edges().len()),
            });
        }
        if !spans_connected(&verts, tree.edges()) {
            return Err(Violation::NotATree { tree: ti, reason: "disconnected".into() });
        }
        for &t in &s {
            if verts.binary_search(&t).is_err() {
                return Err(Violation::MissingTerminal { tree: ti, terminal: t });
            }
        }
        for &v in &verts {
            if s.contains(&v) {
                continue;
            }
            if let Some(other) = vertex_owner[v] {
                return Err(Violation::VertexOverlap { a: other, b: ti, vertex: v });
            }
            vertex_owner[v] = Some(ti);
        }
        for &e in tree.edges() {
            if let Some(other) = edge_owner.insert(e, ti) {
                return Err(Violation::SharedEdge { a: other, b: ti, u: e.0, v: e.1 });
            }
        }
    }
    Ok(())
}

fn spans_connected(verts: &[VertexId], edges: &[(VertexId, VertexId)]) -> bool {
    if verts.is_empty() {
        return true;
    }
    let idx = |v: VertexId| verts.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); verts.len()];
    for &(u, v) in edges {
        adj[idx(u)].push(idx(v));
        adj[idx(v)].push(idx(u));
    }
    let mut seen = vec![false; verts.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == verts.len()
}

/// `3k + ⌈r/2⌉` for `κ = 4k + r`.
pub fn guaranteed_trees(kappa: usize) -> usize {
    3 * (kappa / 4) + (kappa % 4).div_ceil(2)
}

fn half_to(p: &PathSeq, v3: VertexId, toward_v1: bool) -> &[VertexId] {
    let at = p.position(v3).expect("through path contains v3");
    if toward_v1 {
        &p.vertices()[..=at]
    } else {
        &p.vertices()[at..]
    }
}

/// For each residual leg, the clean path it is charged to. Legs ending at
/// `v1` or `v2` may go to any clean path; the others must land on distinct
/// clean paths. Returns `None` when two legs land inside the same path.
fn charge_legs(rs: &ReducedStructure) -> Option<Vec<usize>> {
    let mut charged: Vec<Option<usize>> = vec![None; rs.residual_fan.len()];
    let mut used = vec![false; rs.clean_paths.len()];
    for (li, leg) in rs.residual_fan.iter().enumerate() {
        let y = leg.last();
        if y == rs.v1 || y == rs.v2 {
            continue;
        }
        let c = rs.clean_paths.iter().position(|p| p.contains(y))?;
        if used[c] {
            return None;
        }
        used[c] = true;
        charged[li] = Some(c);
    }
    for slot in charged.iter_mut().filter(|c| c.is_none()) {
        let c = used.iter().position(|&u| !u)?;
        used[c] = true;
        *slot = Some(c);
    }
    Some(charged.into_iter().map(Option::unwrap).collect())
}

fn finish(g: &Graph, v: [VertexId; 3], trees: Vec<TreeCert>) -> Result<TreePacking> {
    let packing = TreePacking { terminals: v, trees };
    verify_packing(g, &packing).map_err(|e| Error::Construction(e.to_string()))?;
    Ok(packing)
}

/// Trees for a reduced structure whose residual legs land on distinct clean
/// paths: through path `i < ⌈t/2⌉` gives its `v1`-half and `v2`-half to
/// two trees, each completed by an untouched clean path; the remaining
/// through paths are trees on their own; every leg joins its clean path.
/// Yields `κ - ⌈t/2⌉` trees.
pub fn middle_break_assembly(g: &Graph, rs: &ReducedStructure) -> Result<TreePacking> {
    let t = rs.t();
    let Some(charge) = charge_legs(rs) else {
        return invalid("residual legs do not land on distinct clean paths");
    };
    if rs.residual_fan.len() + 2 * t != rs.kappa() {
        return invalid(format!("expected {} residual legs, got {}", rs.kappa() - 2 * t, rs.residual_fan.len()));
    }
    let free: Vec<usize> = (0..rs.clean_paths.len()).filter(|c| !charge.contains(c)).collect();
    let mut trees = Vec::new();
    for (slot, &c) in free.iter().enumerate().take(t) {
        let through = &rs.rerouted_paths[slot / 2];
        let half = half_to(through, rs.v3, slot % 2 == 0);
        trees.push(TreeCert::from_walks(&[half, rs.clean_paths[c].vertices()]));
    }
    for through in &rs.rerouted_paths[t.div_ceil(2)..] {
        trees.push(TreeCert::from_walks(&[through.vertices()]));
    }
    for (leg, &c) in rs.residual_fan.iter().zip(&charge) {
        trees.push(TreeCert::from_walks(&[rs.clean_paths[c].vertices(), leg.vertices()]));
    }
    finish(g, [rs.v1, rs.v2, rs.v3], trees)
}

/// Trees at the final threshold `t = 2k` (`r ∈ {0, 1}`) or `t = 2k + 1`
/// (`r = 3`), with `κ = rs.kappa() = 4k + r`: the first `k` (`k + 1` for
/// `r = 3`) through paths are split into halves paired with clean paths,
/// the rest are trees on their own, and for `r = 1` the single residual
/// leg joins its clean path. Yields `3k + ⌈r/2⌉` trees.
pub fn final_break_assembly(g: &Graph, rs: &ReducedStructure) -> Result<TreePacking> {
    let kappa = rs.kappa();
    let (k, r) = (kappa / 4, kappa % 4);
    let t = rs.t();
    let (threshold, pairs) = match r {
        0 | 1 => (2 * k, k),
        3 => (2 * k + 1, k + 1),
        _ => return invalid("κ ≡ 2 (mod 4) has no final break; run with κ - 1"),
    };
    if t != threshold {
        return invalid(format!("final break for κ = {kappa} needs t = {threshold}, got {t}"));
    }
    let mut clean: Vec<usize> = (0..rs.clean_paths.len()).collect();
    let mut extra = None;
    if r == 1 {
        if rs.residual_fan.len() != 1 {
            return invalid("κ = 4k + 1 needs exactly one residual leg");
        }
        let c = charge_legs(rs).expect("one leg is always chargeable")[0];
        clean.retain(|&x| x != c);
        extra = Some(TreeCert::from_walks(&[rs.clean_paths[c].vertices(), rs.residual_fan[0].vertices()]));
    }
    let mut trees = Vec::new();
    for i in 0..pairs {
        let through = &rs.rerouted_paths[i];
        for (side, &c) in clean[2 * i..2 * i + 2].iter().enumerate() {
            let half = half_to(through, rs.v3, side == 0);
            trees.push(TreeCert::from_walks(&[half, rs.clean_paths[c].vertices()]));
        }
    }
    for through in &rs.rerouted_paths[pairs..] {
        trees.push(TreeCert::from_walks(&[through.vertices()]));
    }
    trees.extend(extra);
    finish(g, [rs.v1, rs.v2, rs.v3], trees)
}

/// How the constructive engine finished.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    SingleTree,
    MiddleBreak { t: usize },
    FinalBreak { t: usize },
}

/// Guarantee checks of one re-routing step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformCheck {
    pub t: usize,
    pub facts: std::result::Result<(), String>,
    pub remarks: std::result::Result<(), String>,
}

impl TransformCheck {
    pub fn passed(&self) -> bool {
        self.facts.is_ok() && self.remarks.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub kappa: usize,
    /// Connectivity the construction runs with (`κ - 1` when `κ ≡ 2 mod 4`).
    pub kappa_used: usize,
    pub guaranteed: usize,
    pub merges: usize,
    pub transforms: Vec<TransformCheck>,
    pub outcome: Outcome,
}

pub fn pack_trees_constructive(g: &Graph, s: [VertexId; 3]) -> Result<TreePacking> {
    pack_trees_traced(g, s).map(|(p, _)| p)
}

/// [`pack_trees_constructive`] plus a record of every step.
pub fn pack_trees_traced(g: &Graph, s: [VertexId; 3]) -> Result<(TreePacking, ConstructionTrace)> {
    let n = g.order();
    let [v1, v2, v3] = s;
    if s.iter().any(|&v| v >= n) || v1 == v2 || v1 == v3 || v2 == v3 {
        return invalid(format!("terminals {s:?} must be three distinct vertices below {n}"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let kappa = vertex_connectivity(g)?;
    let kappa_used = if kappa % 4 == 2 { kappa - 1 } else { kappa };
    let mut trace = ConstructionTrace {
        kappa,
        kappa_used,
        guaranteed: guaranteed_trees(kappa),
        merges: 0,
        transforms: Vec::new(),
        outcome: Outcome::SingleTree,
    };
    if kappa_used == 1 {
        let tree = spanning_subtree(g, s);
        return Ok((finish(g, s, vec![tree])?, trace));
    }
    let (k, r) = (kappa_used / 4, kappa_used % 4);
    let threshold = if r == 3 { 2 * k + 1 } else { 2 * k };

    let mut paths = max_disjoint_paths(g, v1, v2)?.paths;
    if paths.len() < kappa_used {
        return Err(Error::Construction(format!("only {} v1v2-paths for κ = {kappa}", paths.len())));
    }
    let mut through = Vec::new();
    if let Some(i) = paths.iter().position(|p| p.contains(v3)) {
        through.push(paths.remove(i));
    }
    let mut clean: Vec<PathSeq> = paths;
    clean.truncate(kappa_used - through.len());

    let mut rs = if through.is_empty() {
        let mut x: Vec<VertexId> = clean.iter().flat_map(|p| p.vertices().iter().copied()).collect();
        x.sort_unstable();
        x.dedup();
        let fan = find_fan(g, v3, &x, kappa_used)?;
        ReducedStructure::untransformed(v1, v2, v3, clean, fan.legs)
    } else {
        transform(g, v1, v2, v3, through, clean, kappa_used, &mut trace)?
    };

    loop {
        let t = rs.t();
        if t == threshold {
            if r == 1 {
                rs = transform(g, v1, v2, v3, rs.rerouted_paths, rs.clean_paths, kappa_used, &mut trace)?;
            }
            trace.outcome = Outcome::FinalBreak { t };
            return Ok((final_break_assembly(g, &rs)?, trace));
        }
        if t > threshold {
            return Err(Error::Construction(format!("t = {t} passed the threshold {threshold}")));
        }
        if charge_legs(&rs).is_some() {
            trace.outcome = Outcome::MiddleBreak { t };
            return Ok((middle_break_assembly(g, &rs)?, trace));
        }
        let (through, clean) = splice_two_legs(&rs)?;
        trace.merges += 1;
        rs = transform(g, v1, v2, v3, through, clean, kappa_used, &mut trace)?;
    }
}

#[allow(clippy::too_many_arguments)]
fn transform(
    g: &Graph,
    v1: VertexId,
    v2: VertexId,
    v3: VertexId,
    through: Vec<PathSeq>,
    clean: Vec<PathSeq>,
    kappa: usize,
    trace: &mut ConstructionTrace,
) -> Result<ReducedStructure> {
    let cfg = ThroughPathConfig { v1, v2, v3, through_paths: through, clean_paths: clean, kappa };
    let rs = path_transformation_unchecked(g, &cfg)?;
    let check = TransformCheck {
        t: cfg.t(),
        facts: rs.check_facts(g),
        remarks: rs.trace.as_ref().map_or(Ok(()), |tr| tr.check_remarks()),
    };
    let passed = check.passed();
    let detail = format!("{:?} / {:?}", check.facts, check.remarks);
    trace.transforms.push(check);
    if !passed {
        return Err(Error::Construction(format!("re-routing guarantees failed: {detail}")));
    }
    Ok(rs)
}

/// Two residual legs landing inside the lowest-index clean path that
/// receives two, spliced into it: `v1 P y1 M1 v3 M2 y2 P v2` with `y1`
/// nearer to `v1`. That path becomes the newest through path.
fn splice_two_legs(rs: &ReducedStructure) -> Result<(Vec<PathSeq>, Vec<PathSeq>)> {
    let interior: Vec<(usize, usize, usize)> = rs
        .residual_fan
        .iter()
        .enumerate()
        .filter_map(|(li, leg)| {
            let y = leg.last();
            if y == rs.v1 || y == rs.v2 {
                return None;
            }
            let c = rs.clean_paths.iter().position(|p| p.contains(y))?;
            Some((c, li, rs.clean_paths[c].position(y).unwrap()))
        })
        .collect();
    let (c, a, b) = (0..rs.clean_paths.len())
        .find_map(|c| {
            let on: Vec<_> = interior.iter().filter(|x| x.0 == c).collect();
            (on.len() >= 2).then(|| (c, *on[0], *on[1]))
        })
        .ok_or_else(|| Error::Construction("no clean path receives two residual legs".into()))?;
    let (first, second) = if a.2 < b.2 { (a, b) } else { (b, a) };
    let p = rs.clean_paths[c].vertices();
    let m1 = rs.residual_fan[first.1].vertices();
    let m2 = rs.residual_fan[second.1].vertices();
    let mut seq: Vec<VertexId> = p[..=first.2].to_vec();
    seq.extend(m1[..m1.len() - 1].iter().rev());
    seq.extend(&m2[1..]);
    seq.extend(&p[second.2 + 1..]);
    let mut through = rs.rerouted_paths.clone();
    through.push(PathSeq(seq));
    let mut clean = rs.clean_paths.clone();
    clean.remove(c);
    Ok((through, clean))
}

/// Smallest subtree of a breadth-first tree from `s[0]` containing `s`.
fn spanning_subtree(g: &Graph, s: [VertexId; 3]) -> TreeCert {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    parent[s[0]] = s[0];
    let mut queue = VecDeque::from([s[0]]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut edges = Vec::new();
    let mut on_tree = vec![false; n];
    on_tree[s[0]] = true;
    for &start in &s[1..] {
        let mut v = start;
        while !on_tree[v] {
            on_tree[v] = true;
            edges.push((v, parent[v]));
            v = parent[v];
        }
    }
    TreeCert::from_edges(edges)
}

/// An upper bound on κ₃ from degrees, with the reasoning steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBound {
    pub value: usize,
    pub steps: Vec<String>,
}

/// κ₃ ≤ δ, and ≤ δ - 1 when two minimum-degree vertices are adjacent. In
/// a planar graph with at least three vertices of degree `d ≥ 3`, κ₃ ≠ d;
/// the bound is lowered past every such `d` it meets.
pub fn kappa3_upper_bound_degree(g: &Graph) -> Result<DegreeBound> {
    if g.order() < 3 {
        return invalid("need at least three vertices");
    }
    let profile = degree_profile(g);
    let delta = profile.min_degree;
    let mut value = delta;
    let mut steps = vec![format!("κ₃ ≤ δ = {delta}")];
    let mins = &profile.min_vertices;
    let adjacent = mins.iter().enumerate().any(|(i, &u)| mins[i + 1..].iter().any(|&v| g.has_edge(u, v)));
    if adjacent {
        value = delta - 1;
        steps.push(format!("two adjacent vertices of minimum degree: κ₃ ≤ {value}"));
    }
    if is_planar(g) {
        while value >= 3 && profile.counts.get(&value).is_some_and(|&c| c >= 3) {
            steps.push(format!("planar with at least three vertices of degree {value}: κ₃ ≠ {value}"));
            value -= 1;
        }
    }
    Ok(DegreeBound { value, steps })
}

/// Closed-form bounds on κ₃.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa3Bounds {
    pub kappa: usize,
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub lower_notes: Vec<String>,
    pub upper_notes: Vec<String>,
}

pub fn kappa3_bounds(g: &Graph) -> Result<Kappa3Bounds> {
    if g.order() < 3 {
        return invalid("need at least three vertices");
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let kappa = vertex_connectivity(g)?;
    let (k, r) = (kappa / 4, kappa % 4);
    let mut lower = guaranteed_trees(kappa);
    let mut lower_notes = vec![format!("κ = {kappa} = 4·{k} + {r}: κ₃ ≥ 3·{k} + ⌈{r}/2⌉ = {lower}")];
    if is_planar(g) && kappa - 1 > lower {
        lower = kappa - 1;
        lower_notes.push(format!("planar: κ₃ ≥ κ - 1 = {lower}"));
    }
    let mut upper = kappa;
    let mut upper_notes = vec![format!("κ₃ ≤ κ = {kappa}")];
    let degree = kappa3_upper_bound_degree(g)?;
    if degree.value < upper {
        upper = degree.value;
        upper_notes.extend(degree.steps);
    }
    let exact = (lower == upper).then_some(lower);
    Ok(Kappa3Bounds { kappa, lower, upper, exact, lower_notes, upper_notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn p(v: &[usize]) -> PathSeq {
        PathSeq(v.to_vec())
    }

    #[test]
    fn verify_examples() {
        let k3 = complete(3);
        let ok = TreePacking { terminals: [0, 1, 2], trees: vec![TreeCert::from_walks(&[&[0, 1, 2]])] };
        assert_eq!(verify_packing(&k3, &ok), Ok(()));

        let k4 = complete(4);
        let two = TreePacking {
            terminals: [0, 1, 2],
            trees: vec![TreeCert::from_edges([(3, 0), (3, 1), (3, 2)]), TreeCert::from_walks(&[&[0, 3, 1, 2]])],
        };
        let err = verify_packing(&k4, &two).unwrap_err();
        assert!(err.to_string().contains("vertex-intersection exceeds S at 3"), "{err}");

        let shared = TreePacking {
            terminals: [0, 1, 2],
            trees: vec![TreeCert::from_walks(&[&[0, 1, 2]]), TreeCert::from_walks(&[&[2, 0, 1]])],
        };
        assert!(verify_packing(&k4, &shared).unwrap_err().to_string().contains("shared edge"));

        let cyclic = TreePacking { terminals: [0, 1, 2], trees: vec![TreeCert::from_walks(&[&[0, 1, 2, 0]])] };
        assert!(matches!(verify_packing(&k4, &cyclic), Err(Violation::NotATree { .. })));

        let missing = TreePacking { terminals: [0, 1, 2], trees: vec![TreeCert::from_walks(&[&[0, 1]])] };
        assert!(matches!(verify_packing(&k4, &missing), Err(Violation::MissingTerminal { terminal: 2, .. })));

        let c4 = cycle(4);
        let foreign = TreePacking { terminals: [0, 1, 2], trees: vec![TreeCert::from_walks(&[&[0, 2, 1]])] };
        assert!(matches!(verify_packing(&c4, &foreign), Err(Violation::EdgeNotInGraph { .. })));
    }

    #[test]
    fn guaranteed_counts() {
        let expect = [0, 1, 1, 2, 3, 4, 4, 5, 6, 7, 7, 8, 9];
        for (kappa, &want) in expect.iter().enumerate() {
            assert_eq!(guaranteed_trees(kappa), want, "κ = {kappa}");
        }
    }

    #[test]
    fn complete_graphs() {
        for n in 3..=8 {
            let g = complete(n);
            let kappa = n - 1;
            let packing = pack_trees_constructive(&g, [0, 1, 2]).unwrap();
            assert!(packing.len() >= guaranteed_trees(kappa), "K{n}");
            let packing = pack_trees_constructive(&g, [n - 1, 0, n / 2]).unwrap();
            assert!(packing.len() >= guaranteed_trees(kappa));
        }
    }

    #[test]
    fn trees_and_cycles() {
        let g = path_graph(6);
        let packing = pack_trees_constructive(&g, [0, 5, 2]).unwrap();
        assert_eq!(packing.len(), 1);
        let g = cycle(6);
        let packing = pack_trees_constructive(&g, [0, 3, 1]).unwrap();
        assert!(!packing.is_empty());
    }

    #[test]
    fn icosahedron_every_triple_four_trees() {
        let g = icosahedron();
        for a in 0..12 {
            for b in a + 1..12 {
                for c in b + 1..12 {
                    let packing = pack_trees_constructive(&g, [a, b, c]).unwrap();
                    assert!(packing.len() >= 4, "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn bad_input() {
        assert!(matches!(pack_trees_constructive(&complete(4), [0, 0, 1]), Err(Error::InvalidInput(_))));
        assert!(matches!(pack_trees_constructive(&Graph::empty(4), [0, 1, 2]), Err(Error::Disconnected)));
    }

    #[test]
    fn middle_break_counts() {
        let g = complete(5);
        let rs = ReducedStructure {
            v1: 0,
            v2: 1,
            v3: 2,
            rerouted_paths: vec![p(&[0, 2, 1])],
            clean_paths: vec![p(&[0, 1]), p(&[0, 3, 1]), p(&[0, 4, 1])],
            residual_fan: vec![p(&[2, 3]), p(&[2, 4])],
            trace: None,
        };
        assert_eq!(middle_break_assembly(&g, &rs).unwrap().len(), 3);

        // κ = 8, t = 3: 8 - ⌈3/2⌉ = 6 trees.
        let g = complete(11);
        let rs = ReducedStructure {
            v1: 0,
            v2: 1,
            v3: 2,
            rerouted_paths: vec![p(&[0, 3, 2, 4, 1]), p(&[0, 5, 2, 6, 1]), p(&[0, 2, 1])],
            clean_paths: vec![p(&[0, 1]), p(&[0, 7, 1]), p(&[0, 8, 1]), p(&[0, 9, 1]), p(&[0, 10, 1])],
            residual_fan: vec![p(&[2, 9]), p(&[2, 10])],
            trace: None,
        };
        assert_eq!(middle_break_assembly(&g, &rs).unwrap().len(), 6);

        let clash = ReducedStructure { residual_fan: vec![p(&[2, 7]), p(&[2, 8, 7])], ..rs };
        assert!(matches!(middle_break_assembly(&g, &clash), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn final_break_threshold() {
        let g = complete(5);
        let rs = ReducedStructure {
            v1: 0,
            v2: 1,
            v3: 2,
            rerouted_paths: vec![p(&[0, 2, 1])],
            clean_paths: vec![p(&[0, 1]), p(&[0, 3, 1]), p(&[0, 4, 1])],
            residual_fan: vec![],
            trace: None,
        };
        assert!(matches!(final_break_assembly(&g, &rs), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(kappa3_upper_bound_degree(&cycle(7)).unwrap().value, 1);
        assert_eq!(kappa3_upper_bound_degree(&icosahedron()).unwrap().value, 4);
        assert_eq!(kappa3_upper_bound_degree(&complete(5)).unwrap().value, 3);
    }

    #[test]
    fn bounds() {
        let b = kappa3_bounds(&icosahedron()).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (4, 4, Some(4)));
        let b = kappa3_bounds(&cycle(8)).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (1, 1, Some(1)));
        for n in 3..=4 {
            let b = kappa3_bounds(&complete(n)).unwrap();
            assert_eq!(b.exact, Some(n - 2));
        }
        assert!(matches!(kappa3_bounds(&Graph::empty(4)), Err(Error::Disconnected)));
    }
}
