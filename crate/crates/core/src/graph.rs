//! Simple undirected graphs, vertex paths and basic queries.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{invalid, Result};

/// Vertices are dense indices `0..n`.
pub type VertexId = usize;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted so every traversal in the crate visits
/// neighbours in ascending index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicate edges.
    ///
    /// Self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.order()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.m == n * n.saturating_sub(1) / 2
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// A copy of the graph with `(u, v)` added.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        Graph::new(self.order(), &edges)
    }

    /// A copy of the graph with `(u, v)` removed (no-op if absent).
    pub fn without_edge(&self, u: VertexId, v: VertexId) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .filter(|&(a, b)| !((a == u && b == v) || (a == v && b == u)))
            .collect();
        Graph::new(self.order(), &edges).expect("subgraph of a valid graph")
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_avoiding(&vec![false; self.order()])
    }

    /// Whether the graph minus the `removed` vertices is connected.
    /// An empty remainder counts as connected.
    pub fn is_connected_avoiding(&self, removed: &[bool]) -> bool {
        let Some(start) = self.vertices().find(|&v| !removed[v]) else {
            return true;
        };
        let seen = self.reach(start, removed);
        self.vertices().all(|v| removed[v] || seen[v])
    }

    /// Vertices reachable from `start` without entering `removed`.
    pub fn reach(&self, start: VertexId, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if !seen[w] && !removed[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Order-independent digest of the graph: SHA-256 over `n` and the
    /// sorted edge list, hex encoded.
    pub fn hash_hex(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("n {}\n", self.order()));
        for (u, v) in self.edges() {
            hasher.update(format!("{u} {v}\n"));
        }
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

/// Degree histogram of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub counts: BTreeMap<usize, usize>,
    pub min_degree: usize,
    pub min_vertices: Vec<VertexId>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let mut counts = BTreeMap::new();
    for v in g.vertices() {
        *counts.entry(g.degree(v)).or_insert(0) += 1;
    }
    let min_degree = g.min_degree();
    let min_vertices = g.vertices().filter(|&v| g.degree(v) == min_degree).collect();
    DegreeProfile { counts, min_degree, min_vertices }
}

/// An ordered vertex sequence describing a path.
///
/// Construction does not check anything; use [`PathSeq::validate`] against
/// a host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSeq(pub Vec<VertexId>);

impl PathSeq {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        PathSeq(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        *self.0.last().expect("non-empty path")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    /// Vertices strictly between the endpoints.
    pub fn interior(&self) -> &[VertexId] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> PathSeq {
        PathSeq(self.0.iter().rev().copied().collect())
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.0.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    /// Checks that the sequence is non-empty, has no repeated vertex and that
    /// consecutive vertices are adjacent in `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.0.is_empty() {
            return Err("empty path".into());
        }
        let mut seen = vec![false; g.order()];
        for &v in &self.0 {
            if v >= g.order() {
                return Err(format!("vertex {v} out of range"));
            }
            if seen[v] {
                return Err(format!("vertex {v} repeated"));
            }
            seen[v] = true;
        }
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("({},{}) is not an edge", w[0], w[1]));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join("-"))
    }
}
