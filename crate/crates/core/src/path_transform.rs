//! Re-routing of `v1v2`-paths that pass through `v3`.
//!
//! Input: κ internally disjoint `v1v2`-paths, `t` of which contain `v3`
//! (the *through* paths; they share only `v3` beyond the ends), the rest
//! avoid `v3` (the *clean* paths). A κ-fan is taken from `v3` to the vertex
//! set `X` of the clean paths. Each through path is viewed as two halves,
//! `v1 → v3` and `v2 → v3`; the fan vertices met on a half, in the order
//! they are met, form one queue (`2t` queues in total, each ending in
//! `v3`).
//!
//! Marking: the front of every queue is marked together with the fan leg
//! carrying it. While two marked vertices sit on the same leg, the one
//! nearest to `v3` along the leg keeps its mark and every other one is
//! cancelled, its queue advancing to the next vertex. A queue that reaches
//! `v3` is served last by an unmarked leg. With the final marks `q_i` and
//! legs `M_i`, through path `i` becomes
//! `v1 P_i q_i M_i v3 M_{i+t} q_{i+t} P_i v2`; the `κ - 2t` legs left
//! unmarked form the residual fan, which avoids the re-routed paths.

use std::collections::BTreeMap;
use std::fmt;

use crate::connectivity::find_fan;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, PathSeq, VertexId};

/// `κ` internally disjoint `v1v2`-paths, the first `t` passing through `v3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThroughPathConfig {
    pub v1: VertexId,
    pub v2: VertexId,
    pub v3: VertexId,
    pub through_paths: Vec<PathSeq>,
    pub clean_paths: Vec<PathSeq>,
    pub kappa: usize,
}

impl ThroughPathConfig {
    pub fn t(&self) -> usize {
        self.through_paths.len()
    }

    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let t = self.t();
        if t == 0 {
            return Err("no path passes through v3".into());
        }
        if t + self.clean_paths.len() != self.kappa {
            return Err(format!("expected {} paths, got {}", self.kappa, t + self.clean_paths.len()));
        }
        if 2 * t > self.kappa {
            return Err(format!("t = {t} exceeds half of κ = {}", self.kappa));
        }
        let mut owner: Vec<Option<usize>> = vec![None; g.order()];
        for (i, p) in self.through_paths.iter().chain(&self.clean_paths).enumerate() {
            p.validate(g).map_err(|e| format!("path {i}: {e}"))?;
            if p.first() != self.v1 || p.last() != self.v2 {
                return Err(format!("path {i} does not run v1→v2"));
            }
            let through = i < t;
            if through != p.interior().contains(&self.v3) {
                return Err(format!("path {i} has the wrong relation to v3"));
            }
            for &v in p.interior() {
                if v == self.v3 {
                    continue;
                }
                if let Some(j) = owner[v] {
                    return Err(format!("paths {j} and {i} share vertex {v}"));
                }
                owner[v] = Some(i);
            }
        }
        Ok(())
    }
}

/// One cancelled mark: queue, vertex, and the leg it sat on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cancellation {
    pub queue: usize,
    pub vertex: VertexId,
    pub leg: usize,
}

/// Record of one marking run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkTrace {
    pub v3: VertexId,
    /// The full κ-fan used, legs indexed as in `final_legs`.
    pub legs: Vec<PathSeq>,
    /// Queue `i < t` is the `v1`-half of through path `i`, queue `i + t`
    /// its `v2`-half.
    pub queues: Vec<Vec<VertexId>>,
    pub final_marks: Vec<VertexId>,
    pub final_legs: Vec<usize>,
    pub cancellations: Vec<Cancellation>,
    pub rounds: usize,
}

impl MarkTrace {
    fn leg_position(&self, leg: usize, v: VertexId) -> Option<usize> {
        self.legs[leg].position(v)
    }

    /// Structural checks on the final marking:
    /// one mark per queue taken from that queue, marks coincide only at
    /// `v3`, marked legs are distinct, a leg that ever carried a mark is
    /// still marked, and each finally marked vertex is strictly nearer to
    /// `v3` along its leg than every vertex cancelled on that leg.
    pub fn check_remarks(&self) -> std::result::Result<(), String> {
        let q = self.queues.len();
        if self.final_marks.len() != q || self.final_legs.len() != q {
            return Err("marks do not match queues one-to-one".into());
        }
        for i in 0..q {
            if !self.queues[i].contains(&self.final_marks[i]) {
                return Err(format!("final mark of queue {i} is not in that queue"));
            }
            for j in i + 1..q {
                if self.final_marks[i] == self.final_marks[j] && self.final_marks[i] != self.v3 {
                    return Err(format!("queues {i} and {j} share mark {}", self.final_marks[i]));
                }
                if self.final_legs[i] == self.final_legs[j] {
                    return Err(format!("queues {i} and {j} share leg {}", self.final_legs[i]));
                }
            }
            if self.leg_position(self.final_legs[i], self.final_marks[i]).is_none() {
                return Err(format!("final mark of queue {i} is not on its leg"));
            }
        }
        for c in &self.cancellations {
            let Some(owner) = self.final_legs.iter().position(|&l| l == c.leg) else {
                return Err(format!("leg {} lost its mark", c.leg));
            };
            let keep = self.leg_position(c.leg, self.final_marks[owner]).unwrap();
            let dropped = self.leg_position(c.leg, c.vertex).unwrap();
            if keep >= dropped {
                return Err(format!(
                    "on leg {} the kept mark {} is not nearer to v3 than cancelled {}",
                    c.leg, self.final_marks[owner], c.vertex
                ));
            }
        }
        Ok(())
    }
}

impl fmt::Display for MarkTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fan legs:")?;
        for (i, leg) in self.legs.iter().enumerate() {
            writeln!(f, "  M{i} = {leg:?}")?;
        }
        for (i, queue) in self.queues.iter().enumerate() {
            writeln!(f, "  T{i} = {queue:?}")?;
        }
        for c in &self.cancellations {
            writeln!(f, "  cancel {} (queue {}, leg {})", c.vertex, c.queue, c.leg)?;
        }
        for i in 0..self.queues.len() {
            writeln!(f, "  q{i} = {} on M{}", self.final_marks[i], self.final_legs[i])?;
        }
        write!(f, "  rounds: {}", self.rounds)
    }
}

/// Output of [`path_transformation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedStructure {
    pub v1: VertexId,
    pub v2: VertexId,
    pub v3: VertexId,
    pub rerouted_paths: Vec<PathSeq>,
    pub clean_paths: Vec<PathSeq>,
    /// `κ - 2t` legs from `v3` into the clean paths' vertex set.
    pub residual_fan: Vec<PathSeq>,
    pub trace: Option<MarkTrace>,
}

impl ReducedStructure {
    /// A structure with no through path: every fan leg is residual.
    pub fn untransformed(
        v1: VertexId,
        v2: VertexId,
        v3: VertexId,
        clean_paths: Vec<PathSeq>,
        fan: Vec<PathSeq>,
    ) -> Self {
        ReducedStructure { v1, v2, v3, rerouted_paths: vec![], clean_paths, residual_fan: fan, trace: None }
    }

    pub fn t(&self) -> usize {
        self.rerouted_paths.len()
    }

    pub fn kappa(&self) -> usize {
        self.rerouted_paths.len() + self.clean_paths.len()
    }

    /// Checks the three guarantees of the re-routing:
    /// re-routed paths are simple `v1v2`-paths through `v3` meeting only in
    /// `v1, v2, v3`; they avoid the clean paths internally; the residual
    /// legs form a fan into the clean vertex set that avoids re-routed
    /// interiors (except `v3`).
    pub fn check_facts(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.order();
        let (v1, v2, v3) = (self.v1, self.v2, self.v3);
        let mut rerouted_owner: Vec<Option<usize>> = vec![None; n];
        for (i, p) in self.rerouted_paths.iter().enumerate() {
            p.validate(g).map_err(|e| format!("re-routed path {i}: {e}"))?;
            if p.first() != v1 || p.last() != v2 || !p.contains(v3) {
                return Err(format!("re-routed path {i} is not a v1v2-path through v3"));
            }
            for &v in p.interior() {
                if v == v3 {
                    continue;
                }
                if let Some(j) = rerouted_owner[v] {
                    return Err(format!("re-routed paths {j} and {i} share internal vertex {v}"));
                }
                rerouted_owner[v] = Some(i);
            }
        }
        let mut in_x = vec![false; n];
        for p in &self.clean_paths {
            for &v in p.vertices() {
                in_x[v] = true;
            }
        }
        for (i, p) in self.rerouted_paths.iter().enumerate() {
            if let Some(&v) = p.interior().iter().find(|&&v| in_x[v]) {
                return Err(format!("re-routed path {i} meets clean vertex {v}"));
            }
        }
        let mut leg_owner: Vec<Option<usize>> = vec![None; n];
        for (i, leg) in self.residual_fan.iter().enumerate() {
            leg.validate(g).map_err(|e| format!("residual leg {i}: {e}"))?;
            if leg.first() != v3 || !in_x[leg.last()] {
                return Err(format!("residual leg {i} does not run from v3 into X"));
            }
            for &v in &leg.vertices()[1..] {
                if v != leg.last() && in_x[v] {
                    return Err(format!("residual leg {i} enters X early at {v}"));
                }
                if rerouted_owner[v].is_some() {
                    return Err(format!("residual leg {i} meets a re-routed path at {v}"));
                }
                if v == v1 || v == v2 {
                    continue;
                }
                if let Some(j) = leg_owner[v] {
                    return Err(format!("residual legs {j} and {i} share vertex {v}"));
                }
                leg_owner[v] = Some(i);
            }
        }
        Ok(())
    }
}

/// κ legs from `v3` into `x`. When `|x| >= κ` this is a κ-fan; otherwise
/// `x` is enlarged by the neighbours of `v1`, a κ-fan is taken into the
/// enlarged set and every leg ending at an added neighbour is continued to
/// `v1`. In that case several legs may share the end `v1`.
pub fn fan_targets(g: &Graph, v3: VertexId, x: &[VertexId], v1: VertexId, kappa: usize) -> Result<Vec<PathSeq>> {
    if x.contains(&v3) {
        return invalid("v3 lies in the target set");
    }
    let mut targets: Vec<VertexId> = x.to_vec();
    targets.sort_unstable();
    targets.dedup();
    if targets.len() >= kappa {
        return Ok(find_fan(g, v3, &targets, kappa)?.legs);
    }
    let extra: Vec<VertexId> = g
        .neighbors(v1)
        .iter()
        .copied()
        .filter(|&w| w != v3 && targets.binary_search(&w).is_err())
        .collect();
    if targets.len() + extra.len() < kappa {
        return Err(Error::NotFound(format!(
            "X plus the neighbours of v1 has fewer than {kappa} vertices"
        )));
    }
    let mut enlarged = targets.clone();
    enlarged.extend(&extra);
    let fan = find_fan(g, v3, &enlarged, kappa)?;
    Ok(fan
        .legs
        .into_iter()
        .map(|leg| {
            if extra.contains(&leg.last()) {
                let mut vs = leg.0;
                vs.push(v1);
                PathSeq(vs)
            } else {
                leg
            }
        })
        .collect())
}

/// Runs the re-routing and checks its guarantees before returning.
pub fn path_transformation(g: &Graph, cfg: &ThroughPathConfig) -> Result<ReducedStructure> {
    let rs = path_transformation_unchecked(g, cfg)?;
    rs.check_facts(g).map_err(Error::Construction)?;
    if let Some(trace) = &rs.trace {
        trace.check_remarks().map_err(Error::Construction)?;
    }
    Ok(rs)
}

/// The re-routing without the final guarantee checks.
pub fn path_transformation_unchecked(g: &Graph, cfg: &ThroughPathConfig) -> Result<ReducedStructure> {
    cfg.validate(g).map_err(Error::InvalidInput)?;
    let (v1, v2, v3) = (cfg.v1, cfg.v2, cfg.v3);
    let t = cfg.t();
    let n = g.order();

    let mut x: Vec<VertexId> = cfg.clean_paths.iter().flat_map(|p| p.vertices().iter().copied()).collect();
    x.sort_unstable();
    x.dedup();
    let legs = fan_targets(g, v3, &x, v1, cfg.kappa)?;

    // Every fan vertex other than v3 (and the shared end v1) lies on one leg.
    let mut leg_of: Vec<Option<usize>> = vec![None; n];
    for (li, leg) in legs.iter().enumerate() {
        for &v in &leg.vertices()[1..] {
            if v != v1 && v != v2 {
                leg_of[v] = Some(li);
            }
        }
    }

    let mut queues: Vec<Vec<VertexId>> = vec![Vec::new(); 2 * t];
    for (i, p) in cfg.through_paths.iter().enumerate() {
        let vs = p.vertices();
        let at = p.position(v3).unwrap();
        queues[i] = vs[1..=at].iter().copied().filter(|&v| v == v3 || leg_of[v].is_some()).collect();
        queues[i + t] = vs[at..vs.len() - 1]
            .iter()
            .rev()
            .copied()
            .filter(|&v| v == v3 || leg_of[v].is_some())
            .collect();
    }

    let position = |leg: usize, v: VertexId| legs[leg].position(v).expect("vertex on its leg");
    let bound: usize = queues.iter().map(Vec::len).sum();
    let mut cursor = vec![0usize; 2 * t];
    let mut cancellations = Vec::new();
    let mut rounds = 0;
    loop {
        let mut by_leg: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (qi, queue) in queues.iter().enumerate() {
            let v = queue[cursor[qi]];
            if v != v3 {
                by_leg.entry(leg_of[v].unwrap()).or_default().push(qi);
            }
        }
        let mut conflict = false;
        for (&leg, holders) in &by_leg {
            if holders.len() < 2 {
                continue;
            }
            conflict = true;
            let keep = *holders
                .iter()
                .min_by_key(|&&qi| position(leg, queues[qi][cursor[qi]]))
                .unwrap();
            for &qi in holders {
                if qi != keep {
                    cancellations.push(Cancellation { queue: qi, vertex: queues[qi][cursor[qi]], leg });
                    cursor[qi] += 1;
                }
            }
        }
        if !conflict {
            break;
        }
        rounds += 1;
        if rounds > bound {
            return Err(Error::Construction("marking did not terminate within its bound".into()));
        }
    }

    let mut final_legs: Vec<Option<usize>> = vec![None; 2 * t];
    let mut marked = vec![false; legs.len()];
    for qi in 0..2 * t {
        let v = queues[qi][cursor[qi]];
        if v != v3 {
            let leg = leg_of[v].unwrap();
            final_legs[qi] = Some(leg);
            marked[leg] = true;
        }
    }
    // Queues stopped at v3 take unmarked legs. A half that is the bare edge
    // v3–v1 (or v3–v2) takes the bare leg over that same edge when there is
    // one, so the edge cannot reappear in the residual fan.
    for (qi, slot) in final_legs.iter_mut().enumerate() {
        if slot.is_some() {
            continue;
        }
        let path = cfg.through_paths[qi % t].vertices();
        let end = if qi < t { v1 } else { v2 };
        let bare_half = if qi < t { path[1] == v3 } else { path[path.len() - 2] == v3 };
        if bare_half {
            if let Some(li) = (0..legs.len()).find(|&li| !marked[li] && legs[li].vertices() == [v3, end]) {
                *slot = Some(li);
                marked[li] = true;
            }
        }
    }
    for slot in final_legs.iter_mut() {
        if slot.is_none() {
            let li = (0..legs.len()).find(|&li| !marked[li]).ok_or_else(|| {
                Error::Construction("no unmarked leg left for a queue ending at v3".into())
            })?;
            *slot = Some(li);
            marked[li] = true;
        }
    }
    let final_legs: Vec<usize> = final_legs.into_iter().map(Option::unwrap).collect();
    let final_marks: Vec<VertexId> = (0..2 * t).map(|qi| queues[qi][cursor[qi]]).collect();

    let mut rerouted = Vec::with_capacity(t);
    for (i, p) in cfg.through_paths.iter().enumerate() {
        let vs = p.vertices();
        let (q1, m1) = (final_marks[i], final_legs[i]);
        let (q2, m2) = (final_marks[i + t], final_legs[i + t]);
        let at1 = p.position(q1).unwrap();
        let at2 = p.position(q2).unwrap();
        let mut seq: Vec<VertexId> = vs[..=at1].to_vec();
        if q1 != v3 {
            let leg = legs[m1].vertices();
            seq.extend(leg[..position(m1, q1)].iter().rev());
        }
        if q2 != v3 {
            let leg = legs[m2].vertices();
            seq.extend(&leg[1..=position(m2, q2)]);
        }
        seq.extend(&vs[at2 + 1..]);
        rerouted.push(PathSeq(seq));
    }

    let residual_fan = (0..legs.len()).filter(|&li| !marked[li]).map(|li| legs[li].clone()).collect();
    let trace = MarkTrace { v3, legs, queues, final_marks, final_legs, cancellations, rounds };
    Ok(ReducedStructure {
        v1,
        v2,
        v3,
        rerouted_paths: rerouted,
        clean_paths: cfg.clean_paths.clone(),
        residual_fan,
        trace: Some(trace),
    })
}
