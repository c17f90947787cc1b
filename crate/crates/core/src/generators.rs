//! Named graph families.
//!
//! Labelling conventions (stable, certificates depend on them):
//! - `wheel(n)`: hub is vertex 0, the rim cycle is `1..=n` in order.
//! - `join-clique-empty(k, n)`: the clique is `0..k`, the independent set `k..n`.
//! - `lower-bound-even(k, i)` / `lower-bound-odd(k, i)`: `v1 = 0`, `v2 = 1`,
//!   `v3 = 2`; the odd family then has `y0 = 3`; then `Y1`, `Y2`, `X` in
//!   consecutive blocks of `2k + i` vertices each.
//! - `complete-multipartite`: parts are consecutive blocks in the given order.
//! - `random(n, p, seed)`: for each pair `u < v` in lexicographic order one
//!   `f64` is drawn from `ChaCha8Rng::seed_from_u64(seed)`; the edge is kept
//!   when the draw is `< p`.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete { n: usize },
    CompleteMultipartite { parts: Vec<usize> },
    Cycle { n: usize },
    Wheel { n: usize },
    JoinCliqueEmpty { k: usize, n: usize },
    LowerBoundEven { k: usize, i: usize },
    LowerBoundOdd { k: usize, i: usize },
    Octahedron,
    Icosahedron,
    Random { n: usize, p: f64, seed: u64 },
}

/// A generated graph plus the designated terminal triple, when the family
/// has one.
#[derive(Debug, Clone)]
pub struct GeneratedGraph {
    pub graph: Graph,
    pub terminals: Option<[VertexId; 3]>,
}

impl FamilySpec {
    pub const NAMES: &'static [&'static str] = &[
        "complete",
        "complete-multipartite",
        "cycle",
        "wheel",
        "join-clique-empty",
        "lower-bound-even",
        "lower-bound-odd",
        "octahedron",
        "icosahedron",
        "random",
    ];

    /// Parses a family name and `key=value` parameters (as used on the
    /// command line, e.g. `k=1,i=0` or `parts=3:4:5`).
    pub fn from_params(name: &str, params: &BTreeMap<String, String>) -> Result<Self> {
        let get = |key: &str| -> Result<usize> {
            let raw = params
                .get(key)
                .ok_or_else(|| crate::Error::InvalidInput(format!("family {name} needs parameter {key}")))?;
            raw.parse()
                .map_err(|_| crate::Error::InvalidInput(format!("parameter {key}={raw} is not a non-negative integer")))
        };
        let spec = match name {
            "complete" => FamilySpec::Complete { n: get("n")? },
            "complete-multipartite" => {
                let raw = params
                    .get("parts")
                    .ok_or_else(|| crate::Error::InvalidInput("complete-multipartite needs parts=a:b:...".into()))?;
                let parts = raw
                    .split(':')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| crate::Error::InvalidInput(format!("bad parts list {raw}")))?;
                FamilySpec::CompleteMultipartite { parts }
            }
            "cycle" => FamilySpec::Cycle { n: get("n")? },
            "wheel" => FamilySpec::Wheel { n: get("n")? },
            "join-clique-empty" => FamilySpec::JoinCliqueEmpty { k: get("k")?, n: get("n")? },
            "lower-bound-even" => FamilySpec::LowerBoundEven { k: get("k")?, i: get("i")? },
            "lower-bound-odd" => FamilySpec::LowerBoundOdd { k: get("k")?, i: get("i")? },
            "octahedron" => FamilySpec::Octahedron,
            "icosahedron" => FamilySpec::Icosahedron,
            "random" => {
                let p: f64 = match params.get("p") {
                    Some(raw) => raw
                        .parse()
                        .map_err(|_| crate::Error::InvalidInput(format!("p={raw} is not a number")))?,
                    None => 0.5,
                };
                let seed = match params.get("seed") {
                    Some(raw) => raw
                        .parse()
                        .map_err(|_| crate::Error::InvalidInput(format!("seed={raw} is not an integer")))?,
                    None => 0,
                };
                FamilySpec::Random { n: get("n")?, p, seed }
            }
            other => return invalid(format!("unknown family {other:?}")),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Complete { n } => write!(f, "complete n={n}"),
            FamilySpec::CompleteMultipartite { parts } => {
                let p: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
                write!(f, "complete-multipartite parts={}", p.join(":"))
            }
            FamilySpec::Cycle { n } => write!(f, "cycle n={n}"),
            FamilySpec::Wheel { n } => write!(f, "wheel n={n}"),
            FamilySpec::JoinCliqueEmpty { k, n } => write!(f, "join-clique-empty k={k},n={n}"),
            FamilySpec::LowerBoundEven { k, i } => write!(f, "lower-bound-even k={k},i={i}"),
            FamilySpec::LowerBoundOdd { k, i } => write!(f, "lower-bound-odd k={k},i={i}"),
            FamilySpec::Octahedron => write!(f, "octahedron"),
            FamilySpec::Icosahedron => write!(f, "icosahedron"),
            FamilySpec::Random { n, p, seed } => write!(f, "random n={n},p={p},seed={seed}"),
        }
    }
}

pub fn generate_family(spec: &FamilySpec) -> Result<GeneratedGraph> {
    let plain = |graph: Graph| Ok(GeneratedGraph { graph, terminals: None });
    match *spec {
        FamilySpec::Complete { n } => plain(complete(n)),
        FamilySpec::CompleteMultipartite { ref parts } => {
            if parts.contains(&0) {
                return invalid("complete-multipartite parts must be positive");
            }
            plain(complete_multipartite(parts))
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            plain(cycle(n))
        }
        FamilySpec::Wheel { n } => {
            if n < 3 {
                return invalid("wheel needs a rim of at least 3 vertices");
            }
            plain(wheel(n))
        }
        FamilySpec::JoinCliqueEmpty { k, n } => {
            if k < 1 || n < k + 2 {
                return invalid("join-clique-empty needs k >= 1 and n >= k + 2");
            }
            plain(join_clique_empty(k, n))
        }
        FamilySpec::LowerBoundEven { k, i } => {
            if i > 1 || (k == 0 && i == 0) {
                return invalid("lower-bound-even needs i in {0,1} and (k,i) != (0,0)");
            }
            Ok(lower_bound(k, i, false))
        }
        FamilySpec::LowerBoundOdd { k, i } => {
            if i > 1 {
                return invalid("lower-bound-odd needs i in {0,1}");
            }
            Ok(lower_bound(k, i, true))
        }
        FamilySpec::Octahedron => plain(complete_multipartite(&[2, 2, 2])),
        FamilySpec::Icosahedron => plain(icosahedron()),
        FamilySpec::Random { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return invalid("random needs 0 <= p <= 1");
            }
            plain(random_gnp(n, p, seed))
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn wheel(rim: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rim {
        edges.push((0, i + 1));
        edges.push((i + 1, (i + 1) % rim + 1));
    }
    Graph::new(rim + 1, &edges).unwrap()
}

pub fn join_clique_empty(k: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn lower_bound(k: usize, i: usize, odd: bool) -> GeneratedGraph {
    let (v1, v2, v3) = (0, 1, 2);
    let half = 2 * k + i;
    let mut next = 3;
    let y0 = if odd {
        next += 1;
        Some(3)
    } else {
        None
    };
    let y1: Vec<_> = (next..next + half).collect();
    let y2: Vec<_> = (next + half..next + 2 * half).collect();
    let x: Vec<_> = (next + 2 * half..next + 3 * half).collect();
    let n = next + 3 * half;

    let mut q: Vec<_> = y0.into_iter().chain(y1.iter().copied()).chain(y2.iter().copied()).collect();
    q.sort_unstable();
    let mut edges = Vec::new();
    for (a, &u) in q.iter().enumerate() {
        for &v in &q[a + 1..] {
            edges.push((u, v));
        }
        edges.push((v3, u));
    }
    for &xv in &x {
        for &u in &q {
            edges.push((xv, u));
        }
        edges.push((xv, v1));
        edges.push((xv, v2));
    }
    for &u in &y1 {
        edges.push((v1, u));
    }
    for &u in &y2 {
        edges.push((v2, u));
    }
    if let Some(y0) = y0 {
        edges.push((v1, y0));
        edges.push((v2, y0));
    }
    GeneratedGraph { graph: Graph::new(n, &edges).unwrap(), terminals: Some([v1, v2, v3]) }
}

/// Top vertex 0, upper pentagon `1..=5`, lower pentagon `6..=10`, bottom 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let lo = 6 + i;
        let lo_next = 6 + (i + 1) % 5;
        edges.push((0, up));
        edges.push((up, up_next));
        edges.push((up, lo));
        edges.push((up, lo_next));
        edges.push((lo, lo_next));
        edges.push((lo, 11));
    }
    Graph::new(12, &edges).unwrap()
}

pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
