//! Specialised algorithms for colored trees.
//!
//! [`tree_gamma_uc`] is a worklist that peels the residual forest in linear
//! time; [`tree_omega_uc`] is a rooted three-state dynamic program.
//! [`tree_omega_uc_records`] keeps the per-vertex record sweep with
//! confluence repair for comparison.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{DominationResult, Role};
use crate::graph::{ColoredGraph, VertexSet};

/// Structural roles of the vertices of an oriented tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectedTreeAnalysis {
    /// In-degree 0; these are exactly the local maxima.
    pub sources: VertexSet,
    /// Out-degree 0.
    pub sinks: VertexSet,
    /// In-degree at least 2. May overlap the sinks, never the sources.
    pub confluences: VertexSet,
    pub out_adj: Vec<Vec<usize>>,
    pub in_adj: Vec<Vec<usize>>,
}

pub fn analyze_directed_tree(cg: &ColoredGraph) -> Result<DirectedTreeAnalysis> {
    if !cg.graph().is_tree() {
        return Err(Error::NotATree);
    }
    let n = cg.n();
    let mut sources = VertexSet::new(n);
    let mut sinks = VertexSet::new(n);
    let mut confluences = VertexSet::new(n);
    for v in 0..n {
        if cg.in_degree(v) == 0 {
            sources.insert(v);
        }
        if cg.out_degree(v) == 0 {
            sinks.insert(v);
        }
        if cg.in_degree(v) > 1 {
            confluences.insert(v);
        }
    }
    Ok(DirectedTreeAnalysis {
        sources,
        sinks,
        confluences,
        out_adj: (0..n).map(|v| cg.out_neighbors(v).to_vec()).collect(),
        in_adj: (0..n).map(|v| cg.in_neighbors(v).to_vec()).collect(),
    })
}

// ---------------------------------------------------------------------------
// Linear-time cardinality algorithm.

/// Work counters of one [`tree_gamma_uc`] run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WorklistStats {
    pub rule_a: usize,
    pub rule_b: usize,
    pub rule_c: usize,
    pub pruned_edges: usize,
    pub queue_pops: usize,
}

impl WorklistStats {
    pub fn total(&self) -> usize {
        self.rule_a + self.rule_b + self.rule_c + self.pruned_edges + self.queue_pops
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Unassigned,
    Dominant,
    Submissive,
}

struct Worklist<'a> {
    cg: &'a ColoredGraph,
    state: Vec<State>,
    res_in: Vec<usize>,
    res_out: Vec<usize>,
    /// Residual in-edges coming from Dominant vertices.
    dom_in: Vec<usize>,
    /// Residual flags, indexed like `cg.out_neighbors(u)`.
    alive_out: Vec<Vec<bool>>,
    queues: [VecDeque<usize>; 3],
    stats: WorklistStats,
}

impl<'a> Worklist<'a> {
    fn new(cg: &'a ColoredGraph) -> Self {
        let n = cg.n();
        let mut w = Worklist {
            cg,
            state: vec![State::Unassigned; n],
            res_in: (0..n).map(|v| cg.in_degree(v)).collect(),
            res_out: (0..n).map(|v| cg.out_degree(v)).collect(),
            dom_in: vec![0; n],
            alive_out: (0..n).map(|v| vec![true; cg.out_degree(v)]).collect(),
            queues: Default::default(),
            stats: WorklistStats::default(),
        };
        for v in 0..n {
            w.schedule(v);
        }
        w
    }

    fn rule_a(&self, v: usize) -> bool {
        self.state[v] == State::Unassigned && self.res_in[v] == 0
    }

    fn rule_b(&self, v: usize) -> bool {
        self.state[v] == State::Unassigned && self.res_in[v] == 1 && self.res_out[v] == 0
    }

    fn rule_c(&self, v: usize) -> bool {
        self.state[v] == State::Unassigned && self.dom_in[v] >= 1 && self.res_out[v] <= 1
    }

    fn schedule(&mut self, v: usize) {
        if self.rule_a(v) {
            self.queues[0].push_back(v);
        }
        if self.rule_b(v) {
            self.queues[1].push_back(v);
        }
        if self.rule_c(v) {
            self.queues[2].push_back(v);
        }
    }

    fn arc_alive(&self, u: usize, v: usize) -> Option<usize> {
        let i = self.cg.out_neighbors(u).binary_search(&v).ok()?;
        self.alive_out[u][i].then_some(i)
    }

    fn kill(&mut self, u: usize, i: usize) {
        let v = self.cg.out_neighbors(u)[i];
        self.alive_out[u][i] = false;
        self.res_out[u] -= 1;
        self.res_in[v] -= 1;
        if self.state[u] == State::Dominant {
            self.dom_in[v] -= 1;
        }
        self.stats.pruned_edges += 1;
    }

    fn make_dominant(&mut self, v: usize) -> Result<()> {
        if self.cg.color(v) == 0 {
            return Err(Error::Infeasible(format!(
                "vertex {v} has color 0 and nothing can dominate it"
            )));
        }
        self.state[v] = State::Dominant;
        let ins: Vec<usize> = self.cg.in_neighbors(v).to_vec();
        for u in ins {
            if let Some(i) = self.arc_alive(u, v) {
                self.kill(u, i);
                self.schedule(u);
            }
        }
        for i in 0..self.cg.out_degree(v) {
            if self.alive_out[v][i] {
                let w = self.cg.out_neighbors(v)[i];
                self.dom_in[w] += 1;
                self.schedule(w);
            }
        }
        self.schedule(v);
        Ok(())
    }

    fn make_submissive(&mut self, v: usize) {
        self.state[v] = State::Submissive;
        let ins: Vec<usize> = self.cg.in_neighbors(v).to_vec();
        for u in ins {
            if let Some(i) = self.arc_alive(u, v) {
                self.kill(u, i);
                self.schedule(u);
            }
        }
        for i in 0..self.cg.out_degree(v) {
            if self.alive_out[v][i] {
                self.kill(v, i);
                let w = self.cg.out_neighbors(v)[i];
                self.schedule(w);
            }
        }
    }

    fn residual_in_neighbor(&self, v: usize) -> Option<usize> {
        self.cg
            .in_neighbors(v)
            .iter()
            .copied()
            .find(|&u| self.arc_alive(u, v).is_some())
    }

    fn run(&mut self) -> Result<()> {
        while let Some((rule, v)) = self.next() {
            match rule {
                0 => {
                    self.stats.rule_a += 1;
                    self.make_dominant(v)?;
                }
                1 => {
                    self.stats.rule_b += 1;
                    let p = self
                        .residual_in_neighbor(v)
                        .expect("rule (b) vertex has one residual in-edge");
                    if self.state[p] == State::Unassigned {
                        self.make_dominant(p)?;
                    }
                    self.make_submissive(v);
                }
                _ => {
                    self.stats.rule_c += 1;
                    self.make_submissive(v);
                }
            }
        }
        if let Some(v) = self.state.iter().position(|&s| s == State::Unassigned) {
            return Err(Error::InternalVerificationFailed(format!(
                "worklist stalled with vertex {v} unassigned"
            )));
        }
        Ok(())
    }

    /// Highest-priority applicable rule, rechecking stale queue entries.
    fn next(&mut self) -> Option<(usize, usize)> {
        for rule in 0..3 {
            while let Some(v) = self.queues[rule].pop_front() {
                self.stats.queue_pops += 1;
                let ok = match rule {
                    0 => self.rule_a(v),
                    1 => self.rule_b(v),
                    _ => self.rule_c(v),
                };
                if ok {
                    return Some((rule, v));
                }
            }
        }
        None
    }
}

/// Minimum up-color dominating set of a colored tree in linear time.
pub fn tree_gamma_uc(cg: &ColoredGraph) -> Result<DominationResult> {
    tree_gamma_uc_with_stats(cg).map(|(r, _)| r)
}

pub fn tree_gamma_uc_with_stats(cg: &ColoredGraph) -> Result<(DominationResult, WorklistStats)> {
    if !cg.graph().is_tree() {
        return Err(Error::NotATree);
    }
    if let Some(v) = cg.infeasible_vertex() {
        return Err(Error::Infeasible(format!(
            "isolated vertex {v} has color 0"
        )));
    }
    let mut work = Worklist::new(cg);
    work.run()?;
    let witness = VertexSet::from_vertices(
        cg.n(),
        (0..cg.n()).filter(|&v| work.state[v] == State::Dominant),
    );
    let result = DominationResult::from_witness(cg, witness)?;
    debug_assert!(result
        .roles
        .iter()
        .zip(&work.state)
        .all(|(r, s)| (*r == Role::Dominant) == (*s == State::Dominant)));
    Ok((result, work.stats))
}

// ---------------------------------------------------------------------------
// Weighted algorithm.

/// Stand-in for an unreachable weight (a color-0 vertex cannot be chosen).
pub const UNREACHABLE: u64 = u64::MAX / 4;

/// Best sets below `v` with `v` chosen (`d0`) or not (`d1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSRecord {
    pub d0: VertexSet,
    pub w0: u64,
    pub d1: VertexSet,
    pub w1: u64,
    /// 0 when choosing `v` is at least as cheap.
    pub op: u8,
}

impl DSRecord {
    fn weight(&self, op: u8) -> u64 {
        if op == 0 {
            self.w0
        } else {
            self.w1
        }
    }

    fn set(&self, op: u8) -> &VertexSet {
        if op == 0 {
            &self.d0
        } else {
            &self.d1
        }
    }
}

/// Which operation index the record sums read for the out-neighbours.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum DpReading {
    /// Each child contributes according to its own `op`.
    #[default]
    ChildOp,
    /// Each child contributes according to the parent's case: weight 0 in
    /// the parent's chosen sum, weight 1 (or 0 off confluences) otherwise.
    ParentOp,
}

/// Confluence ordering: a vertex comes before every confluence it reaches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrecedenceOrder {
    pub order: Vec<usize>,
    /// Finish stamp of each vertex from the global-counter DFS.
    pub finish: Vec<usize>,
}

/// Depth-first search along out-edges from each source in ascending id,
/// stamping finish events with one counter that is never reset. Vertices
/// already finished are not re-entered, so descending finish stamps give a
/// topological order and nested confluences come out outermost first.
pub fn precedence_order(analysis: &DirectedTreeAnalysis) -> PrecedenceOrder {
    let n = analysis.out_adj.len();
    let mut finish = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut counter = 0usize;
    for s in analysis.sources.iter() {
        if visited[s] {
            continue;
        }
        visited[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = analysis.out_adj[v].get(*next) {
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish[v] = counter;
                counter += 1;
                stack.pop();
            }
        }
    }
    let mut order: Vec<usize> = analysis.confluences.iter().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(finish[v]));
    PrecedenceOrder { order, finish }
}

/// Per-vertex records, computed in ascending color order.
pub fn ds_records(
    cg: &ColoredGraph,
    analysis: &DirectedTreeAnalysis,
    reading: DpReading,
) -> Vec<DSRecord> {
    let n = cg.n();
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (cg.color(v), v));
    let mut records: Vec<Option<DSRecord>> = vec![None; n];
    for v in by_color {
        let own = if cg.color(v) == 0 {
            UNREACHABLE
        } else {
            cg.color(v) as u64
        };
        let record = if analysis.out_adj[v].is_empty() {
            DSRecord {
                d0: VertexSet::from_vertices(n, [v]),
                w0: own,
                d1: VertexSet::new(n),
                w1: 0,
                op: 1,
            }
        } else {
            let mut d0 = VertexSet::from_vertices(n, [v]);
            let mut w0 = own;
            let mut d1 = VertexSet::new(n);
            let mut w1 = 0u64;
            for &u in &analysis.out_adj[v] {
                let child = records[u].as_ref().expect("children have lower colors");
                let (op0, op1) = match reading {
                    DpReading::ChildOp => {
                        let op1 = if analysis.confluences.contains(u) {
                            child.op
                        } else {
                            0
                        };
                        (child.op, op1)
                    }
                    DpReading::ParentOp => (
                        0,
                        if analysis.confluences.contains(u) {
                            1
                        } else {
                            0
                        },
                    ),
                };
                w0 = w0.saturating_add(child.weight(op0)).min(UNREACHABLE);
                d0.union_with(child.set(op0));
                w1 = w1.saturating_add(child.weight(op1)).min(UNREACHABLE);
                d1.union_with(child.set(op1));
            }
            let op = if analysis.sources.contains(v) || w0 <= w1 {
                0
            } else {
                1
            };
            DSRecord { d0, w0, d1, w1, op }
        };
        records[v] = Some(record);
    }
    records
        .into_iter()
        .map(|r| r.expect("every vertex visited"))
        .collect()
}

/// Minimum-weight up-color dominating set of a colored tree.
///
/// Rooted dynamic programming over three states per vertex: chosen, not
/// chosen but covered by a child, and not chosen waiting for its parent.
/// Runs in linear time.
pub fn tree_omega_uc(cg: &ColoredGraph) -> Result<DominationResult> {
    if !cg.graph().is_tree() {
        return Err(Error::NotATree);
    }
    if let Some(v) = cg.infeasible_vertex() {
        return Err(Error::Infeasible(format!(
            "isolated vertex {v} has color 0"
        )));
    }
    let n = cg.n();
    let g = cg.graph();
    // BFS from 0 gives parents and an order whose reverse is a post-order.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                order.push(u);
            }
        }
    }
    const IN: usize = 0;
    const COVERED: usize = 1;
    const WAITING: usize = 2;
    let add = |a: u64, b: u64| a.saturating_add(b).min(UNREACHABLE);
    let mut cost = vec![[UNREACHABLE; 3]; n];
    // For COVERED: the child forced into the set, if any.
    let mut forced = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let cv = cg.color(v);
        let children = g.neighbors(v).iter().copied().filter(|&u| parent[u] == v);
        let mut chosen = if cv == 0 { UNREACHABLE } else { cv as u64 };
        let mut covered = 0u64;
        let mut waiting = 0u64;
        let mut best_lift = (UNREACHABLE, usize::MAX);
        for u in children {
            let cu = cg.color(u);
            let [u_in, u_cov, u_wait] = cost[u];
            let under_v = if cv > cu { u_wait } else { UNREACHABLE };
            chosen = add(chosen, u_in.min(u_cov).min(under_v));
            let free = u_in.min(u_cov);
            covered = add(covered, free);
            if cu > cv && u_in < UNREACHABLE {
                let lift = (u_in - free, u);
                if lift < best_lift {
                    best_lift = lift;
                }
            }
            waiting = add(waiting, if cu < cv { free } else { u_cov });
        }
        covered = if best_lift.1 == usize::MAX {
            UNREACHABLE
        } else {
            forced[v] = best_lift.1;
            add(covered, best_lift.0)
        };
        cost[v] = [chosen, covered, waiting];
    }
    // Walk down again, fixing the state of each vertex.
    let mut state = vec![usize::MAX; n];
    let root = &cost[0];
    state[0] = if root[IN] <= root[COVERED] {
        IN
    } else {
        COVERED
    };
    if root[state[0]] >= UNREACHABLE {
        return Err(Error::InternalVerificationFailed(
            "no finite assignment for a feasible tree".into(),
        ));
    }
    for &v in &order {
        let cv = cg.color(v);
        for &u in g.neighbors(v) {
            if parent[u] != v {
                continue;
            }
            let cu = cg.color(u);
            let best_of = |allowed: &[usize]| {
                *allowed
                    .iter()
                    .min_by_key(|&&s| (cost[u][s], s))
                    .expect("non-empty")
            };
            state[u] = match state[v] {
                IN if cv > cu => best_of(&[IN, COVERED, WAITING]),
                IN => best_of(&[IN, COVERED]),
                COVERED if forced[v] == u => IN,
                COVERED => best_of(&[IN, COVERED]),
                _ if cu < cv => best_of(&[IN, COVERED]),
                _ => COVERED,
            };
        }
    }
    let witness = VertexSet::from_vertices(n, (0..n).filter(|&v| state[v] == IN));
    let result = DominationResult::from_witness(cg, witness)?;
    if result.weight != root[state[0]] {
        return Err(Error::InternalVerificationFailed(format!(
            "reconstructed weight {} differs from table value {}",
            result.weight, root[state[0]]
        )));
    }
    Ok(result)
}

/// The record procedure: per-vertex records evaluated bottom-up, the union
/// of the source records, then one flip per uncovered confluence in
/// precedence order. Always returns a valid dominating set but the flips do
/// not revisit ancestors, so the weight can exceed the optimum (see
/// ERRATA.md); [`tree_omega_uc`] is the exact routine.
pub fn tree_omega_uc_records(cg: &ColoredGraph, reading: DpReading) -> Result<DominationResult> {
    let analysis = analyze_directed_tree(cg)?;
    if let Some(v) = cg.infeasible_vertex() {
        return Err(Error::Infeasible(format!(
            "isolated vertex {v} has color 0"
        )));
    }
    let n = cg.n();
    let records = ds_records(cg, &analysis, reading);
    let mut d = VertexSet::new(n);
    for s in analysis.sources.iter() {
        d.union_with(&records[s].d0);
    }
    let order = precedence_order(&analysis);
    let dominated = |d: &VertexSet, v: usize| {
        d.contains(v) || cg.in_neighbors(v).iter().any(|&u| d.contains(u))
    };
    // A flip can leave an earlier confluence uncovered, so sweep until stable.
    for _ in 0..=n {
        let mut changed = false;
        for &v in &order.order {
            if dominated(&d, v) {
                continue;
            }
            let delta = |x: usize| records[x].w0 as i128 - records[x].w1 as i128;
            let x = std::iter::once(v)
                .chain(cg.in_neighbors(v).iter().copied())
                .min_by_key(|&x| (delta(x), x != v, x))
                .expect("candidate list contains v");
            d.difference_with(&records[x].d1);
            d.union_with(&records[x].d0);
            changed = true;
        }
        if !changed {
            break;
        }
    }
    DominationResult::from_witness(cg, d)
}
