//! Graph constructions from three source problems (minimum cover, 3-SAT and
//! balanced max-E2-SAT), with small exact solvers for the sources so the
//! constructions can be checked end to end.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    coloring_for_dominating_set, dominating_sets_of_size, domination_number, k_coloring_unbounded,
    Limits,
};
use crate::graph::{orient, Coloring, Graph, VertexSet};

/// What a vertex of a constructed graph stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum VertexRole {
    ElementCopy {
        element: usize,
        copy: usize,
    },
    Subset {
        index: usize,
    },
    Root,
    DummyTriangle,
    True,
    False,
    Base,
    Literal {
        var: usize,
        positive: bool,
    },
    ClauseGadget {
        clause: usize,
        slot: usize,
    },
    /// Vertex of the complete bipartite block of a variable; `positive`
    /// names its class.
    Block {
        var: usize,
        positive: bool,
        index: usize,
    },
    /// Pendant vertex hung on the block vertex `owner`.
    Hair {
        owner: usize,
    },
    Alpha {
        clause: usize,
        position: usize,
        var: usize,
        positive: bool,
    },
    /// Middle vertex of a literal gadget, in the class opposite to its α.
    Partner {
        clause: usize,
        position: usize,
    },
    /// Pendant on the partner, in the α's class.
    GadgetHair {
        clause: usize,
        position: usize,
    },
}

/// A constructed graph with its coloring (when the construction fixes one),
/// decision bound and vertex roles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub coloring: Option<Coloring>,
    pub k: Option<u64>,
    pub roles: Vec<VertexRole>,
}

// ---------------------------------------------------------------------------
// Minimum cover.

/// Subsets of `0..universe` of size at most 3, and a target size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinCoverInstance {
    pub universe: usize,
    pub subsets: Vec<Vec<usize>>,
    pub bound: usize,
}

impl MinCoverInstance {
    pub fn new(universe: usize, subsets: Vec<Vec<usize>>, bound: usize) -> Result<Self> {
        let inst = MinCoverInstance {
            universe,
            subsets,
            bound,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.subsets.is_empty() {
            return Err(Error::EmptyCollection);
        }
        for (index, s) in self.subsets.iter().enumerate() {
            if s.len() > 3 {
                return Err(Error::InvalidClause {
                    index,
                    reason: format!("subset has {} elements, at most 3 allowed", s.len()),
                });
            }
            if let Some(&e) = s.iter().find(|&&e| e >= self.universe) {
                return Err(Error::InvalidClause {
                    index,
                    reason: format!("element {e} outside universe of size {}", self.universe),
                });
            }
        }
        Ok(())
    }
}

/// Every element gets `l = |C|` copies of color 1, every subset a vertex of
/// color 2 joined to all copies of its elements, and a root of color 3 is
/// joined to all subset vertices. Leaving an element uncovered forces all of
/// its `l` copies into the set, which never beats a cover, so a cover of size
/// `t` exists exactly when the up-color domination number is at most `t + 1`.
/// The optional disjoint triangle (colors 1, 2, 3) raises the chromatic
/// number to 3 so the coloring becomes optimal; it adds one to the bound.
pub fn reduce_min_cover(inst: &MinCoverInstance, dummy_triangle: bool) -> Result<ReductionOutput> {
    inst.validate()?;
    let l = inst.subsets.len();
    let m = inst.universe;
    let copy = |e: usize, j: usize| e * l + j;
    let subset = |i: usize| m * l + i;
    let root = m * l + l;
    let mut n = root + 1;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(n + 3);
    let mut colors = Vec::with_capacity(n + 3);
    for e in 0..m {
        for j in 0..l {
            roles.push(VertexRole::ElementCopy {
                element: e,
                copy: j,
            });
            colors.push(1);
        }
    }
    for (i, s) in inst.subsets.iter().enumerate() {
        roles.push(VertexRole::Subset { index: i });
        colors.push(2);
        let mut members = s.clone();
        members.sort_unstable();
        members.dedup();
        for e in members {
            edges.extend((0..l).map(|j| (copy(e, j), subset(i))));
        }
        edges.push((subset(i), root));
    }
    roles.push(VertexRole::Root);
    colors.push(3);
    if dummy_triangle {
        edges.extend([(n, n + 1), (n + 1, n + 2), (n, n + 2)]);
        roles.extend([VertexRole::DummyTriangle; 3]);
        colors.extend([1, 2, 3]);
        n += 3;
    }
    let extra = u64::from(dummy_triangle);
    Ok(ReductionOutput {
        graph: Graph::new(n, &edges)?,
        coloring: Some(Coloring::new(colors)),
        k: Some(inst.bound as u64 + 1 + extra),
        roles,
    })
}

/// Smallest cover by subset enumeration, or `None` if some element lies in
/// no subset.
pub fn solve_min_cover(inst: &MinCoverInstance) -> Result<Option<(usize, Vec<usize>)>> {
    inst.validate()?;
    let c = inst.subsets.len();
    if c > 20 {
        return Err(Error::TooLarge { n: c, limit: 20 });
    }
    let masks: Vec<u64> = inst
        .subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
        .collect();
    let full = if inst.universe == 64 {
        u64::MAX
    } else {
        (1u64 << inst.universe) - 1
    };
    let mut best: Option<u32> = None;
    for pick in 0u32..(1 << c) {
        let covered = (0..c)
            .filter(|&i| pick >> i & 1 == 1)
            .fold(0u64, |m, i| m | masks[i]);
        if covered == full && best.is_none_or(|b| (pick.count_ones(), pick) < (b.count_ones(), b)) {
            best = Some(pick);
        }
    }
    Ok(best.map(|pick| {
        let chosen: Vec<usize> = (0..c).filter(|&i| pick >> i & 1 == 1).collect();
        (chosen.len(), chosen)
    }))
}

// ---------------------------------------------------------------------------
// 3-SAT.

/// A CNF with at most three literals per clause. Literals use the DIMACS
/// convention: `v + 1` for variable `v`, `-(v + 1)` for its negation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeSatInstance {
    pub vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

fn literal_var(lit: i32) -> usize {
    lit.unsigned_abs() as usize - 1
}

fn literal_true(lit: i32, assignment: &[bool]) -> bool {
    assignment[literal_var(lit)] == (lit > 0)
}

impl ThreeSatInstance {
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let inst = ThreeSatInstance { vars, clauses };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vars == 0 {
            return Err(Error::EmptyFormula);
        }
        for (index, c) in self.clauses.iter().enumerate() {
            if c.is_empty() || c.len() > 3 {
                return Err(Error::InvalidClause {
                    index,
                    reason: format!("{} literals, expected 1 to 3", c.len()),
                });
            }
            if let Some(&lit) = c.iter().find(|&&l| l == 0 || literal_var(l) >= self.vars) {
                return Err(Error::InvalidClause {
                    index,
                    reason: format!("literal {lit} out of range"),
                });
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| literal_true(l, assignment)))
    }
}

/// A satisfying assignment by exhaustive search.
pub fn solve_3sat(inst: &ThreeSatInstance) -> Result<Option<Vec<bool>>> {
    inst.validate()?;
    if inst.vars > 20 {
        return Err(Error::TooLarge {
            n: inst.vars,
            limit: 20,
        });
    }
    Ok((0u32..1 << inst.vars)
        .map(|bits| {
            (0..inst.vars)
                .map(|v| bits >> v & 1 == 1)
                .collect::<Vec<_>>()
        })
        .find(|a| inst.satisfied_by(a)))
}

/// Vertex ids of the 3-SAT construction.
pub mod sat_layout {
    pub const TRUE: usize = 0;
    pub const FALSE: usize = 1;
    pub const BASE: usize = 2;

    pub fn literal(var: usize, positive: bool) -> usize {
        3 + 2 * var + usize::from(!positive)
    }

    /// Slots: 0, 1 = inputs of the first triangle, 2 = its output,
    /// 3 = input fed by that output, 4 = input fed by the third literal,
    /// 5 = final output.
    pub fn gadget(vars: usize, clause: usize, slot: usize) -> usize {
        3 + 2 * vars + 6 * clause + slot
    }
}

/// Triangle `T, F, B`; for each variable a triangle `u, ¬u, B`; for each
/// clause `(a ∨ b ∨ c)` (short clauses repeat their last literal) two
/// triangles: `(a', b', o1)` with `a'–a`, `b'–b`, then `(x, y, o2)` with
/// `x–o1`, `y–c`. The final output `o2` is joined to `F` and `B`, which
/// pins it to the color of `T`. A proper 3-coloring exists exactly when the
/// formula is satisfiable.
pub fn reduce_3sat_chromatic(inst: &ThreeSatInstance) -> Result<ReductionOutput> {
    use sat_layout::*;
    inst.validate()?;
    let r = inst.vars;
    let n = 3 + 2 * r + 6 * inst.clauses.len();
    let mut edges = vec![(TRUE, FALSE), (FALSE, BASE), (TRUE, BASE)];
    let mut roles = vec![VertexRole::True, VertexRole::False, VertexRole::Base];
    for v in 0..r {
        let (p, q) = (literal(v, true), literal(v, false));
        edges.extend([(p, q), (p, BASE), (q, BASE)]);
        roles.push(VertexRole::Literal {
            var: v,
            positive: true,
        });
        roles.push(VertexRole::Literal {
            var: v,
            positive: false,
        });
    }
    for (j, clause) in inst.clauses.iter().enumerate() {
        let lit = |i: usize| {
            let l = clause[i.min(clause.len() - 1)];
            literal(literal_var(l), l > 0)
        };
        let g = |slot| gadget(r, j, slot);
        edges.extend([(g(0), g(1)), (g(0), g(2)), (g(1), g(2))]);
        edges.extend([(g(0), lit(0)), (g(1), lit(1))]);
        edges.extend([(g(3), g(4)), (g(3), g(5)), (g(4), g(5))]);
        edges.extend([(g(3), g(2)), (g(4), lit(2))]);
        edges.extend([(g(5), FALSE), (g(5), BASE)]);
        roles.extend((0..6).map(|slot| VertexRole::ClauseGadget { clause: j, slot }));
    }
    Ok(ReductionOutput {
        graph: Graph::new(n, &edges)?,
        coloring: None,
        k: Some(3),
        roles,
    })
}

/// A proper 3-coloring of the graph, by backtracking.
pub fn three_coloring(g: &Graph) -> Option<Coloring> {
    k_coloring_unbounded(g, 3)
}

/// A 3-coloring under which some minimum dominating set is up-color
/// dominating, together with that set.
pub fn equal_domination_three_coloring(
    g: &Graph,
    limits: &Limits,
) -> Result<Option<(Coloring, VertexSet)>> {
    let gamma = domination_number(g, limits)?;
    for mask in dominating_sets_of_size(g, gamma, limits)? {
        let d = VertexSet::from_mask(g.n(), mask);
        if let Some(c) = coloring_for_dominating_set(g, &d, 3) {
            return Ok(Some((c, d)));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Balanced max-E2-SAT.

/// Clauses of exactly two literals (DIMACS convention) in which every
/// variable occurs as often negated as affirmed, with a target `l` of
/// clauses to satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedE2SatInstance {
    pub vars: usize,
    pub clauses: Vec<[i32; 2]>,
    pub target: usize,
}

impl BalancedE2SatInstance {
    pub fn new(vars: usize, clauses: Vec<[i32; 2]>, target: usize) -> Result<Self> {
        let inst = BalancedE2SatInstance {
            vars,
            clauses,
            target,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vars == 0 {
            return Err(Error::EmptyFormula);
        }
        let s = self.clauses.len();
        if self.target == 0 || self.target > s {
            return Err(Error::BadParameters(format!(
                "target {} must lie in 1..={s}",
                self.target
            )));
        }
        let mut balance = vec![0i64; self.vars];
        for (index, c) in self.clauses.iter().enumerate() {
            for &lit in c {
                if lit == 0 || literal_var(lit) >= self.vars {
                    return Err(Error::InvalidClause {
                        index,
                        reason: format!("literal {lit} out of range"),
                    });
                }
                balance[literal_var(lit)] += if lit > 0 { 1 } else { -1 };
            }
        }
        if let Some(v) = balance.iter().position(|&b| b != 0) {
            return Err(Error::NotBalanced(v));
        }
        Ok(())
    }

    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|c| c.iter().any(|&l| literal_true(l, assignment)))
            .count()
    }

    /// The decision bound `6rs + 3s + 2(s - l)`.
    pub fn k(&self) -> u64 {
        let (r, s, l) = (
            self.vars as u64,
            self.clauses.len() as u64,
            self.target as u64,
        );
        6 * r * s + 3 * s + 2 * (s - l)
    }
}

/// Most clauses any assignment satisfies, with the first assignment (in
/// binary counting order) reaching it.
pub fn solve_max_e2sat(inst: &BalancedE2SatInstance) -> Result<(usize, Vec<bool>)> {
    inst.validate()?;
    if inst.vars > 20 {
        return Err(Error::TooLarge {
            n: inst.vars,
            limit: 20,
        });
    }
    let mut best = (0, vec![false; inst.vars]);
    for bits in 0u32..1 << inst.vars {
        let a: Vec<bool> = (0..inst.vars).map(|v| bits >> v & 1 == 1).collect();
        let q = inst.satisfied_count(&a);
        if q > best.0 {
            best = (q, a);
        }
    }
    Ok(best)
}

/// For each variable a complete bipartite block `K_{3s,3s}` (affirmed and
/// negated classes) with one hair per block vertex. Each literal occurrence
/// adds `α – p – h`: `α` and `h` sit in the literal's class, `p` in the
/// other; `α` takes a fresh block vertex of the opposite class as neighbour
/// and `p` a fresh one of `α`'s class. Each clause joins its two `α`s.
pub fn reduce_balanced_e2sat(inst: &BalancedE2SatInstance) -> Result<ReductionOutput> {
    inst.validate()?;
    let r = inst.vars;
    let s = inst.clauses.len();
    let block = 12 * s;
    let aff = |v: usize, j: usize| v * block + j;
    let neg = |v: usize, j: usize| v * block + 3 * s + j;
    let hair = |v: usize, idx: usize| v * block + 6 * s + idx;
    let n = 12 * r * s + 6 * s;
    let mut roles = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for v in 0..r {
        for j in 0..3 * s {
            roles.push(VertexRole::Block {
                var: v,
                positive: true,
                index: j,
            });
        }
        for j in 0..3 * s {
            roles.push(VertexRole::Block {
                var: v,
                positive: false,
                index: j,
            });
        }
        for idx in 0..6 * s {
            roles.push(VertexRole::Hair {
                owner: v * block + idx,
            });
            edges.push((v * block + idx, hair(v, idx)));
        }
        for a in 0..3 * s {
            for b in 0..3 * s {
                edges.push((aff(v, a), neg(v, b)));
            }
        }
    }
    let mut used = vec![0usize; r];
    for (c, clause) in inst.clauses.iter().enumerate() {
        let mut alphas = [0usize; 2];
        for (q, &lit) in clause.iter().enumerate() {
            let v = literal_var(lit);
            let positive = lit > 0;
            let j = used[v];
            if j >= 3 * s {
                return Err(Error::TooManyOccurrences {
                    variable: v,
                    count: j + 1,
                    capacity: 3 * s,
                });
            }
            used[v] += 1;
            let base = 12 * r * s + 6 * c + 3 * q;
            let (alpha, p, h) = (base, base + 1, base + 2);
            let (own, other) = if positive {
                (aff(v, j), neg(v, j))
            } else {
                (neg(v, j), aff(v, j))
            };
            edges.extend([(alpha, p), (p, h), (alpha, other), (p, own)]);
            roles.push(VertexRole::Alpha {
                clause: c,
                position: q,
                var: v,
                positive,
            });
            roles.push(VertexRole::Partner {
                clause: c,
                position: q,
            });
            roles.push(VertexRole::GadgetHair {
                clause: c,
                position: q,
            });
            alphas[q] = alpha;
        }
        edges.push((alphas[0], alphas[1]));
    }
    Ok(ReductionOutput {
        graph: Graph::new(n, &edges)?,
        coloring: None,
        k: Some(inst.k()),
        roles,
    })
}

/// Vertex ids `[α, p, h]` of both literal gadgets of every clause, found
/// through the roles (`usize::MAX` where a role is missing).
fn literal_gadgets(out: &ReductionOutput) -> Vec<[[usize; 3]; 2]> {
    let mut gadgets: Vec<[[usize; 3]; 2]> = Vec::new();
    for (v, role) in out.roles.iter().enumerate() {
        let (clause, position, slot) = match *role {
            VertexRole::Alpha {
                clause, position, ..
            } => (clause, position, 0),
            VertexRole::Partner { clause, position } => (clause, position, 1),
            VertexRole::GadgetHair { clause, position } => (clause, position, 2),
            _ => continue,
        };
        if gadgets.len() <= clause {
            gadgets.resize(clause + 1, [[usize::MAX; 3]; 2]);
        }
        gadgets[clause][position][slot] = v;
    }
    gadgets
}

/// Variable and class of every vertex of a max-E2-SAT construction; `None`
/// for vertices whose role does not place them.
fn e2sat_sides(out: &ReductionOutput) -> Vec<Option<(usize, bool)>> {
    let n = out.roles.len();
    let mut sides = vec![None; n];
    let mut gadget_side = std::collections::HashMap::new();
    for (v, role) in out.roles.iter().enumerate() {
        match *role {
            VertexRole::Block { var, positive, .. } => sides[v] = Some((var, positive)),
            VertexRole::Alpha {
                clause,
                position,
                var,
                positive,
            } => {
                sides[v] = Some((var, positive));
                gadget_side.insert((clause, position), (var, positive));
            }
            _ => {}
        }
    }
    for (v, role) in out.roles.iter().enumerate() {
        sides[v] = match *role {
            VertexRole::Hair { owner } if owner < n => match out.roles[owner] {
                VertexRole::Block { var, positive, .. } => Some((var, !positive)),
                _ => None,
            },
            VertexRole::Partner { clause, position } => gadget_side
                .get(&(clause, position))
                .map(|&(var, side)| (var, !side)),
            VertexRole::GadgetHair { clause, position } => {
                gadget_side.get(&(clause, position)).copied()
            }
            _ => sides[v],
        };
    }
    sides
}

/// 0/1 labels from an assignment, and the clauses whose α labels are both 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessLabeling {
    pub phi: Vec<u8>,
    pub n0: usize,
}

impl WitnessLabeling {
    pub fn total(&self) -> u64 {
        self.phi.iter().map(|&x| x as u64).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightWitness {
    pub coloring: Coloring,
    pub dominating_set: VertexSet,
    pub weight: u64,
    pub unsatisfied: usize,
    pub labeling: WitnessLabeling,
}

fn alpha_pairs(out: &ReductionOutput) -> Vec<[usize; 2]> {
    literal_gadgets(out)
        .iter()
        .map(|g| [g[0][0], g[1][0]])
        .collect()
}

/// Colors each variable's true class 1 and its false class 0, then repairs
/// the clause edges: when both α-vertices share a color the one with the
/// smaller id moves to color 2. The set is every vertex of original color 1,
/// minus the unlifted α of a 1/1 pair (the lifted one now covers it), plus
/// every α lifted from 0. Its weight is `6rs + 3s + 2u` for `u` unsatisfied
/// clauses.
pub fn build_weight_witness(out: &ReductionOutput, assignment: &[bool]) -> Result<WeightWitness> {
    let vars = out
        .roles
        .iter()
        .filter_map(|r| match r {
            VertexRole::Block { var, .. } => Some(var + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    if assignment.len() != vars {
        return Err(Error::BadAssignmentLength {
            expected: vars,
            got: assignment.len(),
        });
    }
    let n = out.graph.n();
    let sides = e2sat_sides(out);
    let mut phi = vec![0u8; n];
    for (v, label) in phi.iter_mut().enumerate() {
        let (var, side) = sides[v].ok_or_else(|| {
            Error::BadParameters(format!(
                "vertex {v} is not part of a max-E2-SAT construction"
            ))
        })?;
        *label = u8::from(side == assignment[var]);
    }
    let mut colors: Vec<u32> = phi.iter().map(|&x| x as u32).collect();
    let mut d = VertexSet::from_vertices(n, (0..n).filter(|&v| phi[v] == 1));
    let mut n0 = 0;
    let mut unsatisfied = 0;
    for [a, b] in alpha_pairs(out) {
        if phi[a] != phi[b] {
            continue;
        }
        let (lift, other) = (a.min(b), a.max(b));
        colors[lift] = 2;
        if phi[a] == 1 {
            d.remove(other);
        } else {
            n0 += 1;
            unsatisfied += 1;
            d.insert(lift);
        }
    }
    let coloring = Coloring::new(colors);
    let cg = orient(&out.graph, &coloring)?;
    if let Err(violation) = cg.check_up_color_dominating(&d) {
        return Err(Error::InternalVerificationFailed(format!(
            "witness set rejected: {violation:?}"
        )));
    }
    Ok(WeightWitness {
        weight: d.weight(&coloring),
        coloring,
        dominating_set: d,
        unsatisfied,
        labeling: WitnessLabeling { phi, n0 },
    })
}

/// One structural expectation of the E2-SAT construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub name: String,
    pub expected: u64,
    pub actual: u64,
}

impl StructureCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    fn expect(&mut self, name: impl Into<String>, expected: u64, actual: u64) {
        self.checks.push(StructureCheck {
            name: name.into(),
            expected,
            actual,
        });
    }

    pub fn violations(&self) -> impl Iterator<Item = &StructureCheck> {
        self.checks.iter().filter(|c| !c.ok())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(StructureCheck::ok)
    }
}

/// Checks a max-E2-SAT construction against its expected shape: vertex
/// count, one hair per block vertex, bipartite variable parts (clause edges
/// aside), 14 vertices and 6 hairs around every clause, and half the
/// vertices labelled 1 under the all-true, all-false and alternating
/// assignments.
pub fn audit_reduction_structure(out: &ReductionOutput) -> StructureReport {
    let mut report = StructureReport::default();
    let g = &out.graph;
    let n = g.n();
    report.expect("roles cover vertices", n as u64, out.roles.len() as u64);
    if out.roles.len() != n {
        return report;
    }
    let r = out
        .roles
        .iter()
        .filter_map(|x| match x {
            VertexRole::Block { var, .. } => Some(var + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0) as u64;
    let gadgets = literal_gadgets(out);
    let sides = e2sat_sides(out);
    let s = gadgets.len() as u64;
    report.expect("vertex count 12rs + 6s", 12 * r * s + 6 * s, n as u64);

    // One hair per block vertex: a degree-1 neighbour with a hair role.
    let is_hair = |v: usize| {
        matches!(
            out.roles[v],
            VertexRole::Hair { .. } | VertexRole::GadgetHair { .. }
        )
    };
    let blocks: Vec<usize> = (0..n)
        .filter(|&v| matches!(out.roles[v], VertexRole::Block { .. }))
        .collect();
    let hairy_blocks = blocks
        .iter()
        .filter(|&&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| is_hair(u) && g.degree(u) == 1)
                .count()
                == 1
        })
        .count();
    report.expect("block vertices", 6 * r * s, blocks.len() as u64);
    report.expect(
        "block vertices with one hair",
        blocks.len() as u64,
        hairy_blocks as u64,
    );

    for var in 0..r as usize {
        let part: Vec<usize> = (0..n)
            .filter(|&v| sides[v].is_some_and(|(x, _)| x == var))
            .collect();
        let alpha = |v: usize| matches!(out.roles[v], VertexRole::Alpha { .. });
        let mut sub = g.induced_subgraph(&part);
        let kept: Vec<(usize, usize)> = sub
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| !(alpha(part[a]) && alpha(part[b])))
            .collect();
        sub = Graph::new(part.len(), &kept).expect("subgraph edges are valid");
        report.expect(
            format!("variable {var} part bipartite"),
            1,
            u64::from(sub.bipartition().is_some()),
        );
    }

    for (c, pair) in gadgets.iter().enumerate() {
        let mut members: Vec<usize> = Vec::new();
        for &[alpha, partner, h] in pair {
            members.extend([alpha, partner, h].into_iter().filter(|&x| x != usize::MAX));
            for x in [alpha, partner].into_iter().filter(|&x| x != usize::MAX) {
                for &u in g.neighbors(x) {
                    if matches!(out.roles[u], VertexRole::Block { .. }) {
                        members.push(u);
                        members.extend(
                            g.neighbors(u)
                                .iter()
                                .copied()
                                .filter(|&h| matches!(out.roles[h], VertexRole::Hair { .. })),
                        );
                    }
                }
            }
        }
        members.sort_unstable();
        members.dedup();
        let hairs = members.iter().filter(|&&v| is_hair(v)).count();
        report.expect(
            format!("clause {c} neighbourhood size"),
            14,
            members.len() as u64,
        );
        report.expect(format!("clause {c} hairs"), 6, hairs as u64);
    }

    let r_usize = r as usize;
    let assignments: [(&str, Vec<bool>); 3] = [
        ("all true", vec![true; r_usize]),
        ("all false", vec![false; r_usize]),
        ("alternating", (0..r_usize).map(|v| v % 2 == 0).collect()),
    ];
    for (name, a) in assignments {
        let total: u64 = (0..n)
            .filter_map(|v| sides[v])
            .filter(|&(var, side)| side == a[var])
            .count() as u64;
        report.expect(format!("label sum ({name})"), 6 * r * s + 3 * s, total);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{chromatic_number, gamma_uc_exact};

    fn lim() -> Limits {
        Limits::default().with_search(40)
    }

    fn gamma_uc(out: &ReductionOutput) -> usize {
        let cg = orient(&out.graph, out.coloring.as_ref().unwrap()).unwrap();
        gamma_uc_exact(&cg, &lim()).unwrap().size
    }

    #[test]
    fn min_cover_examples() {
        let one = MinCoverInstance::new(2, vec![vec![0, 1]], 1).unwrap();
        let out = reduce_min_cover(&one, false).unwrap();
        assert_eq!(out.graph.n(), 4);
        assert_eq!(gamma_uc(&out), 2);
        let two = MinCoverInstance::new(3, vec![vec![0, 1], vec![1, 2]], 2).unwrap();
        let out = reduce_min_cover(&two, false).unwrap();
        assert_eq!(out.graph.n(), 9);
        assert_eq!(gamma_uc(&out), 3);
        let three = MinCoverInstance::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]], 2).unwrap();
        let out = reduce_min_cover(&three, false).unwrap();
        assert!(gamma_uc(&out) as u64 <= out.k.unwrap());
        let with_triangle = reduce_min_cover(&three, true).unwrap();
        assert_eq!(gamma_uc(&with_triangle), gamma_uc(&out) + 1);
        assert_eq!(chromatic_number(&with_triangle.graph, &lim()).unwrap().0, 3);
        assert_eq!(
            MinCoverInstance::new(2, vec![], 1),
            Err(Error::EmptyCollection)
        );
    }

    #[test]
    fn min_cover_solver() {
        let s = |m, c: Vec<Vec<usize>>| {
            solve_min_cover(&MinCoverInstance::new(m, c, 0).unwrap()).unwrap()
        };
        assert_eq!(s(2, vec![vec![0, 1]]).unwrap().0, 1);
        assert_eq!(s(3, vec![vec![0], vec![1], vec![2]]).unwrap().0, 3);
        assert_eq!(s(4, vec![vec![0, 1], vec![2, 3], vec![0, 2]]).unwrap().0, 2);
        assert_eq!(s(3, vec![vec![0, 1]]), None);
    }

    #[test]
    fn sat_examples() {
        let sat = ThreeSatInstance::new(1, vec![vec![1, 1, 1]]).unwrap();
        let out = reduce_3sat_chromatic(&sat).unwrap();
        assert!(three_coloring(&out.graph).is_some());
        let unsat = ThreeSatInstance::new(1, vec![vec![1], vec![-1]]).unwrap();
        let out = reduce_3sat_chromatic(&unsat).unwrap();
        assert!(three_coloring(&out.graph).is_none());
        let empty = ThreeSatInstance::new(1, vec![]).unwrap();
        let out = reduce_3sat_chromatic(&empty).unwrap();
        assert_eq!(out.graph.n(), 5);
        assert_eq!(chromatic_number(&out.graph, &lim()).unwrap().0, 3);
        assert_eq!(ThreeSatInstance::new(0, vec![]), Err(Error::EmptyFormula));
    }

    fn e2(vars: usize, clauses: Vec<[i32; 2]>, target: usize) -> BalancedE2SatInstance {
        BalancedE2SatInstance::new(vars, clauses, target).unwrap()
    }

    #[test]
    fn e2sat_sizes() {
        let tiny = e2(1, vec![[1, -1]], 1);
        let out = reduce_balanced_e2sat(&tiny).unwrap();
        assert_eq!((out.graph.n(), out.k), (18, Some(9)));
        let pair = e2(2, vec![[1, 2], [-1, -2]], 2);
        let out = reduce_balanced_e2sat(&pair).unwrap();
        assert_eq!((out.graph.n(), out.k), (60, Some(30)));
        let four_var = e2(4, vec![[-1, 3], [1, -2], [2, 4], [-3, -4]], 4);
        let out = reduce_balanced_e2sat(&four_var).unwrap();
        assert_eq!(out.graph.n(), 216);
        let report = audit_reduction_structure(&out);
        assert!(
            report.passed(),
            "{:?}",
            report.violations().collect::<Vec<_>>()
        );
        assert_eq!(
            BalancedE2SatInstance::new(2, vec![[1, 2]], 1),
            Err(Error::NotBalanced(0))
        );
    }

    #[test]
    fn e2sat_witness() {
        let tiny = e2(1, vec![[1, -1]], 1);
        let out = reduce_balanced_e2sat(&tiny).unwrap();
        let w = build_weight_witness(&out, &[true]).unwrap();
        assert_eq!(w.weight, 9);
        assert_eq!(w.labeling.total(), 9);
        let pair = e2(2, vec![[1, 2], [-1, -2]], 2);
        let out = reduce_balanced_e2sat(&pair).unwrap();
        let w = build_weight_witness(&out, &[true, true]).unwrap();
        assert_eq!((w.unsatisfied, w.weight), (1, 32));
        let w = build_weight_witness(&out, &[true, false]).unwrap();
        assert_eq!((w.unsatisfied, w.weight), (0, 30));
        assert!(matches!(
            build_weight_witness(&out, &[true]),
            Err(Error::BadAssignmentLength {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn e2sat_solver() {
        assert_eq!(solve_max_e2sat(&e2(1, vec![[1, -1]], 1)).unwrap().0, 1);
        assert_eq!(
            solve_max_e2sat(&e2(2, vec![[1, 2], [-1, -2]], 1))
                .unwrap()
                .0,
            2
        );
        let four = e2(2, vec![[1, 2], [-1, 2], [1, -2], [-1, -2]], 1);
        assert_eq!(solve_max_e2sat(&four).unwrap().0, 3);
    }

    #[test]
    fn corrupted_output_is_flagged() {
        let out = reduce_balanced_e2sat(&e2(1, vec![[1, -1]], 1)).unwrap();
        let hair = out
            .roles
            .iter()
            .position(|r| matches!(r, VertexRole::Hair { .. }))
            .unwrap();
        let keep: Vec<usize> = (0..out.graph.n()).filter(|&v| v != hair).collect();
        // Owners keep their ids: the deleted hair comes after every block
        // vertex of its variable.
        let broken = ReductionOutput {
            graph: out.graph.induced_subgraph(&keep),
            coloring: None,
            k: out.k,
            roles: keep.iter().map(|&v| out.roles[v]).collect(),
        };
        let report = audit_reduction_structure(&broken);
        assert!(!report.passed());
        assert!(report
            .violations()
            .any(|c| c.name == "block vertices with one hair"));
    }
}
