//! Exact κ(S) for triples and κ₃(G) on small graphs.
//!
//! Any tree containing `S` can be pruned until all its leaves are
//! terminals without breaking a packing, so maximum packings may be sought
//! among *minimal* trees: spiders (a non-terminal centre with three
//! internally disjoint legs) and through-paths (a path between two
//! terminals through the third).
//!
//! Two trees are compatible when their non-terminal vertex sets are
//! disjoint and they share no edge. An edge with a non-terminal end is
//! owned by whichever tree holds that end, so only terminal–terminal edges
//! and non-terminal vertices are contested. Consequently a tree `T` can be
//! swapped for any tree `T'` inside `G[V(T)]` whose non-terminals form a
//! subset of those of `T` and which uses no terminal–terminal edge `T`
//! does not use. Such a `T'` exists whenever `T` has a chord (an edge of
//! `G[V(T)]` outside `T`) that is not terminal–terminal, except for two
//! shapes of chord that skip no vertex:
//!
//! * on a through-path `… p m q …` with middle `m`, the chord `pq`;
//! * on a spider with centre `c`, a chord between two neighbours of `c`.
//!
//! [`enumerate_irreducible_trees`] yields only trees whose every chord is
//! one of those kinds; the search in [`kappa_s_exact`] runs over them.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexId};
use crate::packing::{TreeCert, TreePacking};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeShape {
    Spider { center: VertexId },
    /// Path between the other two terminals through `terminals[middle]`.
    Through { middle: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalTree {
    pub shape: TreeShape,
    pub tree: TreeCert,
}

/// Caps on the exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_minimal_trees: usize,
    /// Search nodes per triple.
    pub max_search_nodes: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_vertices: 13, max_minimal_trees: 200_000, max_search_nodes: 50_000_000 }
    }
}

impl OracleLimits {
    /// Defaults overridden by `KAPPA3_MAX_VERTICES`, `KAPPA3_MAX_TREES`
    /// and `KAPPA3_MAX_NODES` when set.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.trim().parse::<u64>().ok());
        if let Some(v) = read("KAPPA3_MAX_VERTICES") {
            limits.max_vertices = v as usize;
        }
        if let Some(v) = read("KAPPA3_MAX_TREES") {
            limits.max_minimal_trees = v as usize;
        }
        if let Some(v) = read("KAPPA3_MAX_NODES") {
            limits.max_search_nodes = v;
        }
        limits
    }
}

/// Hard ceiling from the bitmask representation.
const MASK_VERTICES: usize = 42;

fn check_triple(g: &Graph, s: [VertexId; 3], limits: &OracleLimits) -> Result<()> {
    let n = g.order();
    if s.iter().any(|&v| v >= n) || s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
        return invalid(format!("terminals {s:?} must be three distinct vertices below {n}"));
    }
    if n > limits.max_vertices.min(MASK_VERTICES) {
        return Err(Error::Resource(format!(
            "{n} vertices exceed the exact-search cap of {}",
            limits.max_vertices.min(MASK_VERTICES)
        )));
    }
    Ok(())
}

/// Every minimal tree containing `s`, each exactly once.
pub fn enumerate_minimal_trees(g: &Graph, s: [VertexId; 3], limits: &OracleLimits) -> Result<Vec<MinimalTree>> {
    check_triple(g, s, limits)?;
    Enumerator::new(g, s, false, limits.max_minimal_trees).run()
}

/// The minimal trees whose chords are all terminal–terminal or of the two
/// vertex-free kinds described in the module docs.
pub fn enumerate_irreducible_trees(
    g: &Graph,
    s: [VertexId; 3],
    limits: &OracleLimits,
) -> Result<Vec<MinimalTree>> {
    check_triple(g, s, limits)?;
    Enumerator::new(g, s, true, limits.max_minimal_trees).run()
}

struct Enumerator<'a> {
    g: &'a Graph,
    s: [VertexId; 3],
    terminal: Vec<bool>,
    on: Vec<bool>,
    prune: bool,
    cap: usize,
    out: Vec<MinimalTree>,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, s: [VertexId; 3], prune: bool, cap: usize) -> Self {
        let mut terminal = vec![false; g.order()];
        for &v in &s {
            terminal[v] = true;
        }
        Enumerator { g, s, terminal, on: vec![false; g.order()], prune, cap, out: Vec::new() }
    }

    fn run(mut self) -> Result<Vec<MinimalTree>> {
        for mi in 0..3 {
            let mut ends: Vec<VertexId> = (0..3).filter(|&i| i != mi).map(|i| self.s[i]).collect();
            ends.sort_unstable();
            let mut seq = vec![ends[0]];
            self.on[ends[0]] = true;
            self.path(&mut seq, None, mi, ends[1])?;
            self.on[ends[0]] = false;
        }
        for c in self.g.vertices() {
            if self.terminal[c] {
                continue;
            }
            self.on[c] = true;
            let mut legs = vec![vec![c]];
            self.leg(&mut legs)?;
            self.on[c] = false;
        }
        Ok(self.out)
    }

    fn emit(&mut self, shape: TreeShape, walks: &[&[VertexId]]) -> Result<()> {
        if self.out.len() >= self.cap {
            return Err(Error::Resource(format!("more than {} minimal trees", self.cap)));
        }
        self.out.push(MinimalTree { shape, tree: TreeCert::from_walks(walks) });
        Ok(())
    }

    /// Whether placing `w` at position `seq.len()` of a through-path keeps
    /// every chord acceptable. `mid` is the position of the middle once
    /// placed (it may be `w` itself, in which case `mid` is still `None`).
    fn path_chords_ok(&self, seq: &[VertexId], w: VertexId, mid: Option<usize>) -> bool {
        let j = seq.len();
        (0..j.saturating_sub(1)).all(|i| {
            let u = seq[i];
            if !self.g.has_edge(u, w) || (self.terminal[u] && self.terminal[w]) {
                return true;
            }
            match mid {
                None => false,
                Some(m) => i + 1 == m && j == m + 1,
            }
        })
    }

    fn path(&mut self, seq: &mut Vec<VertexId>, mid: Option<usize>, mi: usize, end: VertexId) -> Result<()> {
        let m = self.s[mi];
        let u = *seq.last().unwrap();
        for idx in 0..self.g.degree(u) {
            let w = self.g.neighbors(u)[idx];
            if self.on[w] {
                continue;
            }
            let wanted = if mid.is_none() { m } else { end };
            if self.terminal[w] && w != wanted {
                continue;
            }
            if self.prune && !self.path_chords_ok(seq, w, mid) {
                continue;
            }
            seq.push(w);
            if w == end {
                self.emit(TreeShape::Through { middle: mi }, &[seq.as_slice()])?;
            } else {
                self.on[w] = true;
                let next_mid = if w == m { Some(seq.len() - 1) } else { mid };
                self.path(seq, next_mid, mi, end)?;
                self.on[w] = false;
            }
            seq.pop();
        }
        Ok(())
    }

    fn leg_chords_ok(&self, legs: &[Vec<VertexId>], w: VertexId) -> bool {
        let (current, done) = legs.split_last().unwrap();
        let j = current.len();
        if (0..j - 1).any(|p| self.g.has_edge(current[p], w)) {
            return false;
        }
        done.iter().all(|leg| {
            leg.iter().enumerate().skip(1).all(|(p, &u)| {
                !self.g.has_edge(u, w) || (self.terminal[u] && self.terminal[w]) || (p == 1 && j == 1)
            })
        })
    }

    /// Extends the last leg in `legs` toward terminal `legs.len() - 1`.
    fn leg(&mut self, legs: &mut Vec<Vec<VertexId>>) -> Result<()> {
        let k = legs.len() - 1;
        let target = self.s[k];
        let u = *legs[k].last().unwrap();
        for idx in 0..self.g.degree(u) {
            let w = self.g.neighbors(u)[idx];
            if self.on[w] || (self.terminal[w] && w != target) {
                continue;
            }
            if self.prune && !self.leg_chords_ok(legs, w) {
                continue;
            }
            legs[k].push(w);
            if w == target {
                if k == 2 {
                    let c = legs[0][0];
                    let walks: Vec<&[VertexId]> = legs.iter().map(Vec::as_slice).collect();
                    self.emit(TreeShape::Spider { center: c }, &walks)?;
                } else {
                    self.on[w] = true;
                    legs.push(vec![legs[0][0]]);
                    self.leg(legs)?;
                    legs.pop();
                    self.on[w] = false;
                }
            } else {
                self.on[w] = true;
                self.leg(legs)?;
                self.on[w] = false;
            }
            legs[k].pop();
        }
        Ok(())
    }
}

/// Pairwise compatibility of candidate trees: non-terminal vertex sets
/// disjoint and no shared edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityGraph {
    pub adj: Vec<Vec<usize>>,
}

impl CompatibilityGraph {
    pub fn build(trees: &[MinimalTree], s: [VertexId; 3]) -> Self {
        let packed: Vec<Packed> = trees.iter().map(|t| Packed::new(&t.tree, s)).collect();
        let adj = (0..packed.len())
            .map(|i| (0..packed.len()).filter(|&j| j != i && packed[i].compatible(&packed[j])).collect())
            .collect();
        CompatibilityGraph { adj }
    }
}

/// A tree as bit masks: non-terminal vertices, and edges at the terminals
/// (bit `3v + i` for the edge between terminal `i` and vertex `v`).
#[derive(Debug, Clone, Copy)]
struct Packed {
    inner: u64,
    touch: u128,
}

impl Packed {
    fn new(tree: &TreeCert, s: [VertexId; 3]) -> Self {
        let mut inner = 0u64;
        let mut touch = 0u128;
        for v in tree.vertices() {
            if !s.contains(&v) {
                inner |= 1 << v;
            }
        }
        for &(u, v) in tree.edges() {
            for (i, &t) in s.iter().enumerate() {
                if u == t {
                    touch |= 1 << (3 * v + i);
                }
                if v == t {
                    touch |= 1 << (3 * u + i);
                }
            }
        }
        // A terminal–terminal edge sets one bit at each end; the pair is
        // either both free or both taken, so overlap tests stay exact.
        Packed { inner, touch }
    }

    fn compatible(&self, other: &Packed) -> bool {
        self.inner & other.inner == 0 && self.touch & other.touch == 0
    }
}

fn terminal_masks() -> [u128; 3] {
    let mut masks = [0u128; 3];
    for v in 0..MASK_VERTICES {
        for (i, m) in masks.iter_mut().enumerate() {
            *m |= 1 << (3 * v + i);
        }
    }
    masks
}

struct Search<'a> {
    trees: &'a [Packed],
    masks: [u128; 3],
    nodes: u64,
    max_nodes: u64,
    best: Vec<usize>,
    target: usize,
}

impl Search<'_> {
    /// Returns `Ok(true)` once `target` trees are found.
    fn run(&mut self, avail: &[usize], chosen: &mut Vec<usize>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::Resource(format!("search exceeded {} nodes", self.max_nodes)));
        }
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
            if self.best.len() >= self.target {
                return Ok(true);
            }
        }
        let union = avail.iter().fold(0u128, |acc, &t| acc | self.trees[t].touch);
        let (term, free) = (0..3)
            .map(|i| (i, (union & self.masks[i]).count_ones() as usize))
            .min_by_key(|&(_, c)| c)
            .unwrap();
        if chosen.len() + free <= self.best.len() {
            return Ok(false);
        }
        let edge = (union & self.masks[term]).trailing_zeros();
        let bit = 1u128 << edge;
        for &t in avail.iter().filter(|&&t| self.trees[t].touch & bit != 0) {
            let pick = self.trees[t];
            let next: Vec<usize> = avail.iter().copied().filter(|&u| pick.compatible(&self.trees[u])).collect();
            chosen.push(t);
            let done = self.run(&next, chosen)?;
            chosen.pop();
            if done {
                return Ok(true);
            }
        }
        let rest: Vec<usize> = avail.iter().copied().filter(|&u| self.trees[u].touch & bit == 0).collect();
        self.run(&rest, chosen)
    }
}

/// Result of an exact per-triple search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaS {
    pub value: usize,
    pub witness: TreePacking,
    /// Shape of each witness tree, in the same order.
    pub shapes: Vec<TreeShape>,
}

pub fn kappa_s_exact(g: &Graph, s: [VertexId; 3]) -> Result<KappaS> {
    kappa_s_exact_with(g, s, &OracleLimits::from_env(), None)
}

/// Maximum packing for `s`. With `stop_at = Some(x)` the search stops as
/// soon as `x` trees are found, and `value` is then only a lower bound
/// when it equals `x`.
pub fn kappa_s_exact_with(
    g: &Graph,
    s: [VertexId; 3],
    limits: &OracleLimits,
    stop_at: Option<usize>,
) -> Result<KappaS> {
    let candidates = enumerate_irreducible_trees(g, s, limits)?;
    max_packing(&candidates, s, limits, stop_at)
}

/// Largest pairwise compatible subfamily of `candidates`, by branch and
/// bound: branch on an edge at the terminal with the fewest usable edges,
/// either taking a tree through that edge or discarding the edge; bound by
/// the number of usable edges at each terminal.
pub fn max_packing(
    candidates: &[MinimalTree],
    s: [VertexId; 3],
    limits: &OracleLimits,
    stop_at: Option<usize>,
) -> Result<KappaS> {
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by_key(|&i| (candidates[i].tree.edges().len(), candidates[i].tree.clone()));
    let trees: Vec<Packed> = order.iter().map(|&i| Packed::new(&candidates[i].tree, s)).collect();
    let mut search = Search {
        trees: &trees,
        masks: terminal_masks(),
        nodes: 0,
        max_nodes: limits.max_search_nodes,
        best: Vec::new(),
        target: stop_at.unwrap_or(usize::MAX),
    };
    let all: Vec<usize> = (0..trees.len()).collect();
    search.run(&all, &mut Vec::new())?;
    let witness = TreePacking {
        terminals: s,
        trees: search.best.iter().map(|&i| candidates[order[i]].tree.clone()).collect(),
    };
    let shapes = search.best.iter().map(|&i| candidates[order[i]].shape).collect();
    Ok(KappaS { value: search.best.len(), witness, shapes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa3Exact {
    pub value: usize,
    /// Lexicographically smallest triple attaining the minimum.
    pub triple: [VertexId; 3],
    pub witness: TreePacking,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    pub limits: OracleLimits,
    /// Worker threads; `1` runs sequentially.
    pub jobs: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions { limits: OracleLimits::from_env(), jobs: 1 }
    }
}

pub fn kappa3_exact(g: &Graph) -> Result<Kappa3Exact> {
    kappa3_exact_with(g, &ExactOptions::default())
}

/// Minimum of κ(S) over all triples. Triples are processed in
/// lexicographic order in chunks; each search stops one above the best
/// value known so far, so every triple at the minimum gets its exact value
/// and the reported triple does not depend on `jobs`.
pub fn kappa3_exact_with(g: &Graph, opts: &ExactOptions) -> Result<Kappa3Exact> {
    let n = g.order();
    if n < 3 {
        return invalid("need at least three vertices");
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if n > opts.limits.max_vertices.min(MASK_VERTICES) {
        return Err(Error::Resource(format!(
            "{n} vertices exceed the exact-search cap of {}",
            opts.limits.max_vertices.min(MASK_VERTICES)
        )));
    }
    let mut triples = Vec::with_capacity(n * n * n / 6);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                triples.push([a, b, c]);
            }
        }
    }
    // κ₃ ≥ 1 for connected graphs; no triple can go below that.
    let floor = 1;
    let best = AtomicUsize::new(usize::MAX);
    let chunk = opts.jobs.max(1) * 4;
    let pool = match opts.jobs {
        0 | 1 => None,
        jobs => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::Resource(e.to_string()))?,
        ),
    };
    let mut found: Option<Kappa3Exact> = None;
    for group in triples.chunks(chunk) {
        let solve = |&s: &[VertexId; 3]| -> Result<([VertexId; 3], KappaS)> {
            let cap = best.load(Ordering::SeqCst).saturating_add(1);
            let r = kappa_s_exact_with(g, s, &opts.limits, Some(cap))?;
            best.fetch_min(r.value, Ordering::SeqCst);
            Ok((s, r))
        };
        let results: Vec<Result<([VertexId; 3], KappaS)>> = match &pool {
            Some(pool) => pool.install(|| group.par_iter().map(solve).collect()),
            None => group.iter().map(solve).collect(),
        };
        for r in results {
            let (s, ks) = r?;
            if found.as_ref().is_none_or(|f| ks.value < f.value) {
                found = Some(Kappa3Exact { value: ks.value, triple: s, witness: ks.witness });
            }
        }
        if found.as_ref().is_some_and(|f| f.value <= floor) {
            break;
        }
    }
    Ok(found.expect("at least one triple"))
}
