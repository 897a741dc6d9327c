//! Exact computation of every parameter by exhaustive and branch-and-bound
//! search. These routines are the ground truth the faster algorithms are
//! checked against, so they favour obvious correctness over speed.
//!
//! All searches use `u64` bitmasks internally, so the hard ceiling is 64
//! vertices; [`Limits`] keeps callers well below that by default.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{orient, validate_coloring, ColoredGraph, Coloring, Graph, VertexSet};

/// Size guards for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest graph handed to a single-coloring search (domination,
    /// chromatic number, independence, Roman domination).
    pub search: usize,
    /// Largest graph handed to a search over all colorings.
    pub coloring: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search: 24,
            coloring: 10,
        }
    }
}

impl Limits {
    pub fn with_search(mut self, search: usize) -> Self {
        self.search = search;
        self
    }

    pub fn with_coloring(mut self, coloring: usize) -> Self {
        self.coloring = coloring;
        self
    }

    fn check_search(&self, n: usize) -> Result<()> {
        check(n, self.search)
    }

    fn check_coloring(&self, n: usize) -> Result<()> {
        check(n, self.coloring)
    }
}

fn check(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if n > limit {
        Err(Error::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Lexicographic comparison of the sorted member lists of two masks.
fn lex_cmp(a: u64, b: u64) -> Ordering {
    bits(a).cmp(bits(b))
}

/// Role of a vertex with respect to a dominating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Dominant,
    Submissive,
}

/// A minimum up-color dominating set together with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub feasible: bool,
    pub size: usize,
    pub weight: u64,
    pub witness: VertexSet,
    pub roles: Vec<Role>,
}

impl DominationResult {
    /// Wraps a witness, checking that it really is up-color dominating.
    pub fn from_witness(cg: &ColoredGraph, witness: VertexSet) -> Result<Self> {
        if let Err(violation) = cg.check_up_color_dominating(&witness) {
            return Err(Error::InternalVerificationFailed(format!(
                "witness {witness:?} rejected: {violation:?}"
            )));
        }
        let roles = (0..cg.n())
            .map(|v| {
                if witness.contains(v) {
                    Role::Dominant
                } else {
                    Role::Submissive
                }
            })
            .collect();
        Ok(DominationResult {
            feasible: true,
            size: witness.len(),
            weight: witness.weight(cg.coloring()),
            witness,
            roles,
        })
    }

    pub fn infeasible(n: usize) -> Self {
        DominationResult {
            feasible: false,
            size: 0,
            weight: 0,
            witness: VertexSet::new(n),
            roles: Vec::new(),
        }
    }
}

/// Classic parameters of an uncolored graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicInvariants {
    /// Domination number.
    pub gamma: usize,
    /// Independent domination number.
    pub i: usize,
    /// Independence number.
    pub alpha: usize,
    /// Chromatic number.
    pub chi: usize,
    /// Clique cover number, the chromatic number of the complement.
    pub theta: usize,
    /// Roman domination number.
    pub gamma_r: usize,
}

/// Result of a search over all colorings of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringSearchResult {
    pub value: u64,
    pub best_coloring: Coloring,
    pub witness: DominationResult,
}

// ---------------------------------------------------------------------------
// Set-cover style branch and bound shared by every domination variant.

/// Every vertex `v` must be covered by a chosen `u` with `v` in `cover[u]`.
struct CoverSearch<'a> {
    n: usize,
    /// `candidates[v]`: vertices whose choice covers `v`.
    candidates: Vec<u64>,
    cover: Vec<u64>,
    cost: &'a [u64],
    /// When set, chosen vertices must be pairwise non-adjacent.
    independent: Option<&'a [u64]>,
    /// Abandon branches whose cost exceeds this.
    cutoff: Option<u64>,
    best: Option<(u64, u32, u64)>,
}

impl<'a> CoverSearch<'a> {
    fn new(n: usize, cover: Vec<u64>, cost: &'a [u64]) -> Self {
        let mut candidates = vec![0u64; n];
        for (u, &mask) in cover.iter().enumerate() {
            for v in bits(mask) {
                candidates[v] |= 1 << u;
            }
        }
        CoverSearch {
            n,
            candidates,
            cover,
            cost,
            independent: None,
            cutoff: None,
            best: None,
        }
    }

    fn better(&self, cost: u64, size: u32, set: u64) -> bool {
        match self.best {
            None => true,
            Some((bc, bs, bset)) => {
                (cost, size).cmp(&(bc, bs)).then_with(|| lex_cmp(set, bset)) == Ordering::Less
            }
        }
    }

    /// Minimum under (cost, size, lexicographic set), or `None` when no
    /// completion of `forced` exists (within the cutoff).
    fn solve(mut self, forced: u64, blocked: u64) -> Option<u64> {
        let covered = bits(forced).fold(0u64, |acc, u| acc | self.cover[u]);
        let cost = bits(forced).map(|u| self.cost[u]).sum();
        let mut blocked = blocked;
        if let Some(adj) = self.independent {
            for u in bits(forced) {
                if adj[u] & forced != 0 {
                    return None;
                }
                blocked |= adj[u];
            }
        }
        self.go(forced, covered, blocked, cost, forced.count_ones());
        self.best.map(|(_, _, set)| set)
    }

    fn go(&mut self, chosen: u64, covered: u64, blocked: u64, cost: u64, size: u32) {
        let uncovered = full_mask(self.n) & !covered;
        if uncovered == 0 {
            if self.cutoff.is_none_or(|c| cost <= c) && self.better(cost, size, chosen) {
                self.best = Some((cost, size, chosen));
            }
            return;
        }
        // Pick the uncovered vertex with the fewest usable candidates and
        // take the largest cheapest-candidate cost as a lower bound.
        let free = !(blocked | chosen);
        let mut pick = usize::MAX;
        let mut pick_count = u32::MAX;
        let mut bound = 0u64;
        for v in bits(uncovered) {
            let cands = self.candidates[v] & free;
            if cands == 0 {
                return;
            }
            let count = cands.count_ones();
            if count < pick_count {
                pick = v;
                pick_count = count;
            }
            let cheapest = bits(cands).map(|u| self.cost[u]).min().unwrap_or(0);
            bound = bound.max(cheapest);
        }
        let low = cost + bound;
        if self.cutoff.is_some_and(|c| low > c) {
            return;
        }
        if let Some((bc, bs, _)) = self.best {
            if (low, size + 1) > (bc, bs) {
                return;
            }
        }
        let mut excluded = 0u64;
        for u in bits(self.candidates[pick] & free) {
            let mut next_blocked = blocked | excluded;
            if let Some(adj) = self.independent {
                next_blocked |= adj[u];
            }
            self.go(
                chosen | 1 << u,
                covered | self.cover[u],
                next_blocked,
                cost + self.cost[u],
                size + 1,
            );
            excluded |= 1 << u;
        }
    }
}

fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    g.neighbor_masks()
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | 1 << v)
        .collect()
}

/// Minimum dominating set (lexicographically smallest among minimum ones).
pub fn minimum_dominating_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    limits.check_search(g.n())?;
    let n = g.n();
    let cost = vec![1u64; n];
    let search = CoverSearch::new(n, closed_neighborhoods(g), &cost);
    let mask = search.solve(0, 0).expect("V dominates itself");
    Ok(VertexSet::from_mask(n, mask))
}

pub fn domination_number(g: &Graph, limits: &Limits) -> Result<usize> {
    minimum_dominating_set(g, limits).map(|d| d.len())
}

/// Minimum independent dominating set.
pub fn minimum_independent_dominating_set(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    limits.check_search(g.n())?;
    let n = g.n();
    let cost = vec![1u64; n];
    let adj = g.neighbor_masks();
    let mut search = CoverSearch::new(n, closed_neighborhoods(g), &cost);
    search.independent = Some(&adj);
    let mask = search
        .solve(0, 0)
        .expect("every maximal independent set dominates");
    Ok(VertexSet::from_mask(n, mask))
}

/// Every dominating set of exactly `k` vertices, as masks in increasing
/// lexicographic order of their member lists.
pub fn dominating_sets_of_size(g: &Graph, k: usize, limits: &Limits) -> Result<Vec<u64>> {
    limits.check_search(g.n())?;
    let closed = closed_neighborhoods(g);
    let full = full_mask(g.n());
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn rec(
        start: usize,
        k: usize,
        closed: &[u64],
        full: u64,
        pick: &mut Vec<usize>,
        covered: u64,
        out: &mut Vec<u64>,
    ) {
        if pick.len() == k {
            if covered == full {
                out.push(pick.iter().fold(0u64, |m, &v| m | 1 << v));
            }
            return;
        }
        let need = k - pick.len();
        for v in start..=closed.len().saturating_sub(need) {
            pick.push(v);
            rec(v + 1, k, closed, full, pick, covered | closed[v], out);
            pick.pop();
        }
    }
    rec(0, k, &closed, full, &mut pick, 0, &mut out);
    Ok(out)
}

fn max_independent(mask: u64, adj: &[u64]) -> usize {
    if mask == 0 {
        return 0;
    }
    let (v, deg) = bits(mask)
        .map(|v| (v, (adj[v] & mask).count_ones()))
        .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
        .expect("mask is non-empty");
    if deg == 0 {
        return mask.count_ones() as usize;
    }
    let without = max_independent(mask & !(1 << v), adj);
    let with = 1 + max_independent(mask & !(adj[v] | 1 << v), adj);
    without.max(with)
}

pub fn independence_number(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_search(g.n())?;
    Ok(max_independent(full_mask(g.n()), &g.neighbor_masks()))
}

/// A proper coloring with colors `0..k`, if one exists.
pub fn k_coloring(g: &Graph, k: usize, limits: &Limits) -> Result<Option<Coloring>> {
    limits.check_search(g.n())?;
    Ok(k_coloring_unbounded(g, k))
}

/// Backtracking k-coloring without a size guard; used by the reduction
/// suite on gadget graphs that exceed the default limit but stay easy.
pub(crate) fn k_coloring_unbounded(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![u32::MAX; n];
    // Static order: repeatedly take the uncolored vertex with most colored
    // neighbours (ties: higher degree, then lower id).
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("vertices remain");
        placed[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    fn rec(i: usize, order: &[usize], g: &Graph, k: u32, colors: &mut [u32], used: u32) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if g.neighbors(v).iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                if rec(i + 1, order, g, k, colors, used.max(c + 1)) {
                    return true;
                }
            }
        }
        colors[v] = u32::MAX;
        false
    }
    if rec(0, &order, g, k as u32, &mut colors, 0) {
        Some(Coloring::new(colors))
    } else {
        None
    }
}

/// Chromatic number and an optimal coloring using colors `0..chi`.
pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<(usize, Coloring)> {
    limits.check_search(g.n())?;
    Ok(chromatic_unbounded(g))
}

pub(crate) fn chromatic_unbounded(g: &Graph) -> (usize, Coloring) {
    let start = match (g.n(), g.edge_count()) {
        (0, _) => 0,
        (_, 0) => 1,
        _ => 2,
    };
    (start..=g.n())
        .find_map(|k| k_coloring_unbounded(g, k).map(|c| (k, c)))
        .expect("n colors always suffice")
}

/// Roman domination number: the minimum of `2|V2| + |V1|` over labelings
/// where every 0-vertex has a 2-neighbour. For a fixed `V2` the cheapest
/// valid `V1` is exactly the set of vertices outside `N[V2]`.
pub fn roman_domination_number(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_search(g.n())?;
    let n = g.n();
    let closed = closed_neighborhoods(g);
    let full = full_mask(n);
    fn rec(
        v: usize,
        n: usize,
        closed: &[u64],
        full: u64,
        twos: usize,
        covered: u64,
        best: &mut usize,
    ) {
        let value = 2 * twos + (full & !covered).count_ones() as usize;
        *best = (*best).min(value);
        if v == n || 2 * (twos + 1) >= *best {
            return;
        }
        for u in v..n {
            if closed[u] & !covered != 0 {
                rec(u + 1, n, closed, full, twos + 1, covered | closed[u], best);
            }
        }
    }
    let mut best = n;
    rec(0, n, &closed, full, 0, 0, &mut best);
    Ok(best)
}

/// Clique cover number, computed as the chromatic number of the complement.
pub fn clique_cover_number(g: &Graph, limits: &Limits) -> Result<usize> {
    chromatic_number(&g.complement(), limits).map(|(k, _)| k)
}

pub fn classic_invariants(g: &Graph, limits: &Limits) -> Result<ClassicInvariants> {
    limits.check_search(g.n())?;
    Ok(ClassicInvariants {
        gamma: domination_number(g, limits)?,
        i: minimum_independent_dominating_set(g, limits)?.len(),
        alpha: independence_number(g, limits)?,
        chi: chromatic_number(g, limits)?.0,
        theta: clique_cover_number(g, limits)?,
        gamma_r: roman_domination_number(g, limits)?,
    })
}

// ---------------------------------------------------------------------------
// Fixed-coloring parameters.

fn up_cover_masks(cg: &ColoredGraph) -> Vec<u64> {
    (0..cg.n())
        .map(|u| {
            if cg.color(u) == 0 {
                // Color-0 vertices may never join the set.
                0
            } else {
                cg.out_neighbors(u)
                    .iter()
                    .fold(1u64 << u, |m, &v| m | 1 << v)
            }
        })
        .collect()
}

fn up_color_search(cg: &ColoredGraph, weighted: bool, cutoff: Option<u64>) -> Option<u64> {
    let n = cg.n();
    let cost: Vec<u64> = if weighted {
        (0..n).map(|v| cg.color(v) as u64).collect()
    } else {
        vec![1; n]
    };
    let mut search = CoverSearch::new(n, up_cover_masks(cg), &cost);
    search.cutoff = cutoff;
    let forced = cg.local_maxima().to_mask();
    search.solve(forced, 0)
}

/// Minimum-cardinality up-color dominating set, ties broken towards the
/// lexicographically smallest vertex list.
pub fn gamma_uc_exact(cg: &ColoredGraph, limits: &Limits) -> Result<DominationResult> {
    limits.check_search(cg.n())?;
    if !cg.is_feasible() {
        return Ok(DominationResult::infeasible(cg.n()));
    }
    let mask = up_color_search(cg, false, None).ok_or_else(|| {
        Error::InternalVerificationFailed("feasible instance without a witness".into())
    })?;
    DominationResult::from_witness(cg, VertexSet::from_mask(cg.n(), mask))
}

/// Minimum-weight up-color dominating set; ties broken by cardinality and
/// then by the lexicographically smallest vertex list.
pub fn omega_uc_exact(cg: &ColoredGraph, limits: &Limits) -> Result<DominationResult> {
    limits.check_search(cg.n())?;
    if !cg.is_feasible() {
        return Ok(DominationResult::infeasible(cg.n()));
    }
    let mask = up_color_search(cg, true, None).ok_or_else(|| {
        Error::InternalVerificationFailed("feasible instance without a witness".into())
    })?;
    DominationResult::from_witness(cg, VertexSet::from_mask(cg.n(), mask))
}

/// Weight of an optimal set if it is at most `cutoff`.
fn omega_within(cg: &ColoredGraph, cutoff: u64) -> Option<u64> {
    if !cg.is_feasible() {
        return None;
    }
    up_color_search(cg, true, Some(cutoff))
        .map(|mask| VertexSet::from_mask(cg.n(), mask).weight(cg.coloring()))
}

// ---------------------------------------------------------------------------
// Searches over colorings.

/// Rank transform: the used colors become `0..m` in their original order.
/// Strict comparisons survive, but when color 0 was unused the lowest class
/// drops to 0 and its members can no longer belong to a dominating set, so
/// the weight may go up. Adding 1 to the result never raises it.
pub fn normalize_coloring(c: &Coloring) -> Coloring {
    let mut used = c.colors().to_vec();
    used.sort_unstable();
    used.dedup();
    Coloring::new(
        c.colors()
            .iter()
            .map(|x| used.binary_search(x).expect("color is used") as u32)
            .collect(),
    )
}

/// Visits every proper coloring whose used colors are exactly `0..m` for
/// some `m <= max_colors`, in lexicographic order of the color vectors.
/// `prune(partial, max_used)` may cut a branch: it sees the colors of
/// vertices `0..partial.len()`.
pub fn for_each_normalized_coloring<F>(g: &Graph, max_colors: usize, mut visit: F)
where
    F: FnMut(&Coloring),
{
    enumerate_normalized(g, max_colors, &mut |_: &[u32], _: u32| false, &mut |c| {
        visit(c);
        true
    });
}

/// Core enumerator. `prune` returns true to skip a partial assignment;
/// `visit` returns false to stop the whole enumeration.
fn enumerate_normalized(
    g: &Graph,
    max_colors: usize,
    prune: &mut dyn FnMut(&[u32], u32) -> bool,
    visit: &mut dyn FnMut(&Coloring) -> bool,
) {
    let n = g.n();
    let max_colors = max_colors.min(n);
    let mut colors: Vec<u32> = Vec::with_capacity(n);
    let mut counts = vec![0usize; max_colors];
    fn rec(
        g: &Graph,
        max_colors: usize,
        colors: &mut Vec<u32>,
        counts: &mut [usize],
        prune: &mut dyn FnMut(&[u32], u32) -> bool,
        visit: &mut dyn FnMut(&Coloring) -> bool,
    ) -> bool {
        let v = colors.len();
        let n = g.n();
        if v == n {
            return visit(&Coloring::new(colors.clone()));
        }
        for c in 0..max_colors as u32 {
            if g.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
                continue;
            }
            colors.push(c);
            counts[c as usize] += 1;
            let top = counts
                .iter()
                .rposition(|&k| k > 0)
                .expect("a color is used");
            let missing = counts[..=top].iter().filter(|&&k| k == 0).count();
            let remaining = n - v - 1;
            let keep_going = if missing > remaining || prune(colors, top as u32) {
                true
            } else {
                rec(g, max_colors, colors, counts, prune, visit)
            };
            counts[c as usize] -= 1;
            colors.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    if n == 0 {
        visit(&Coloring::new(Vec::new()));
        return;
    }
    rec(g, max_colors, &mut colors, &mut counts, prune, visit);
}

/// Minimum of the up-color domination weight over all colorings. The search
/// covers colorings whose used colors are `0..m` or `1..=m`: closing a gap
/// above the lowest used color keeps properness and every strict comparison
/// while never raising a weight. Shifting the lowest class down to 0 is not
/// safe (its members could no longer be chosen), hence the second family;
/// an isolated vertex, for one, needs color 1.
pub fn omega_uc_min(g: &Graph, limits: &Limits) -> Result<ColoringSearchResult> {
    limits.check_coloring(g.n())?;
    let optimal = omega_optimal_colorings(g, false)?;
    let (value, best) = optimal
        .into_iter()
        .next()
        .ok_or_else(|| Error::Infeasible("graph has no vertices".into()))?;
    let cg = orient(g, &best)?;
    let witness = omega_uc_exact(&cg, &Limits::default().with_search(64))?;
    debug_assert_eq!(witness.weight, value);
    Ok(ColoringSearchResult {
        value,
        best_coloring: best,
        witness,
    })
}

/// Normalized colorings attaining the minimum weight. With `all == false`
/// only the first one (lexicographically smallest vector) is returned.
pub(crate) fn omega_optimal_colorings(g: &Graph, all: bool) -> Result<Vec<(u64, Coloring)>> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let best = std::cell::Cell::new(u64::MAX);
    let mut found: Vec<(u64, Coloring)> = Vec::new();
    // Every vertex of the top color class is a local maximum, so the weight
    // is at least the largest color used so far.
    let mut prune = |_: &[u32], top: u32| {
        let top = top as u64;
        if all {
            top > best.get()
        } else {
            top >= best.get()
        }
    };
    let mut visit = |c: &Coloring| {
        let lifted = Coloring::new(c.colors().iter().map(|x| x + 1).collect());
        for c in [c, &lifted] {
            let cg = orient(g, c).expect("enumerator yields proper colorings");
            if let Some(w) = omega_within(&cg, best.get()) {
                if w < best.get() {
                    best.set(w);
                    found.clear();
                    found.push((w, c.clone()));
                } else if w == best.get() && all {
                    found.push((w, c.clone()));
                }
            }
        }
        true
    };
    enumerate_normalized(g, n, &mut prune, &mut visit);
    Ok(found)
}

/// Minimum of the up-color domination number over all colorings. It always
/// equals the domination number: a dominating set can be lifted above its
/// neighbourhood, and no up-color dominating set is smaller than a
/// dominating set. The witness coloring comes from [`build_equal_coloring`].
pub fn gamma_uc_min(g: &Graph, limits: &Limits) -> Result<ColoringSearchResult> {
    limits.check_search(g.n())?;
    if g.n() == 0 {
        return Err(Error::Infeasible("graph has no vertices".into()));
    }
    let d = minimum_dominating_set(g, limits)?;
    let (_, base) = chromatic_number(g, limits)?;
    let coloring = build_equal_coloring(g, &d, &base)?;
    let cg = orient(g, &coloring)?;
    let witness = gamma_uc_exact(&cg, limits)?;
    if witness.size != d.len() {
        return Err(Error::InternalVerificationFailed(format!(
            "lifted coloring gives {} instead of {}",
            witness.size,
            d.len()
        )));
    }
    Ok(ColoringSearchResult {
        value: witness.size as u64,
        best_coloring: coloring,
        witness,
    })
}

/// Exhaustive version of [`gamma_uc_min`]: minimum over every normalized
/// coloring. Intended for cross-checks on very small graphs.
pub fn gamma_uc_min_exhaustive(g: &Graph, limits: &Limits) -> Result<ColoringSearchResult> {
    limits.check_coloring(g.n())?;
    if g.n() == 0 {
        return Err(Error::Infeasible("graph has no vertices".into()));
    }
    let floor = domination_number(g, limits)? as u64;
    let mut best: Option<(u64, Coloring)> = None;
    enumerate_normalized(
        g,
        g.n(),
        &mut |_: &[u32], _: u32| false,
        &mut |c: &Coloring| {
            let cg = orient(g, c).expect("proper");
            if let Some(mask) = cg
                .is_feasible()
                .then(|| up_color_search(&cg, false, None))
                .flatten()
            {
                let size = mask.count_ones() as u64;
                if best.as_ref().is_none_or(|(b, _)| size < *b) {
                    best = Some((size, c.clone()));
                }
            }
            // Nothing beats the domination number.
            best.as_ref().is_none_or(|(b, _)| *b > floor)
        },
    );
    let (value, coloring) = best.expect("some coloring is feasible");
    let cg = orient(g, &coloring)?;
    Ok(ColoringSearchResult {
        value,
        witness: gamma_uc_exact(&cg, &Limits::default().with_search(64))?,
        best_coloring: coloring,
    })
}

/// Colors `0..k` under which `d` is an up-color dominating set, if any.
pub fn coloring_for_dominating_set(g: &Graph, d: &VertexSet, k: usize) -> Option<Coloring> {
    let n = g.n();
    if k == 0 {
        return (n == 0).then(|| Coloring::new(Vec::new()));
    }
    let k = k as u32;
    // D first (high colors tried first), then the rest by degree.
    let mut order: Vec<usize> = d.iter().collect();
    let mut rest: Vec<usize> = (0..n).filter(|&v| !d.contains(v)).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.extend(rest);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // A non-member is settled once it and all its D-neighbours are colored.
    let settle_at: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| d.contains(u))
                .map(|&u| pos[u])
                .chain(std::iter::once(pos[v]))
                .max()
                .unwrap_or(pos[v])
        })
        .collect();
    let mut settles: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in (0..n).filter(|&v| !d.contains(v)) {
        settles[settle_at[v]].push(v);
    }
    let mut colors = vec![u32::MAX; n];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        order: &[usize],
        g: &Graph,
        d: &VertexSet,
        k: u32,
        settles: &[Vec<usize>],
        colors: &mut [u32],
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let member = d.contains(v);
        let choices: Vec<u32> = if member {
            (1..k).rev().collect()
        } else {
            (0..k - 1).collect()
        };
        for c in choices {
            if g.neighbors(v).iter().any(|&u| colors[u] == c) {
                continue;
            }
            colors[v] = c;
            let ok = settles[i].iter().all(|&w| {
                g.neighbors(w)
                    .iter()
                    .any(|&u| d.contains(u) && colors[u] > colors[w])
            });
            if ok && rec(i + 1, order, g, d, k, settles, colors) {
                return true;
            }
        }
        colors[v] = u32::MAX;
        false
    }
    rec(0, &order, g, d, k, &settles, &mut colors).then(|| Coloring::new(colors))
}

/// Outcome of the chromatic up-color search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiUcResult {
    pub value: usize,
    pub chi: usize,
    pub coloring: Coloring,
    pub dominating_set: VertexSet,
}

/// Least number of colors of a proper coloring whose up-color domination
/// number equals the domination number.
pub fn chi_uc_exact(g: &Graph, limits: &Limits) -> Result<ChiUcResult> {
    limits.check_coloring(g.n())?;
    chi_uc_search(g, limits)
}

/// Same as [`chi_uc_exact`] but guarded only by the single-coloring limit;
/// the reduction suite uses it on gadget graphs with a cheap structure.
pub(crate) fn chi_uc_search(g: &Graph, limits: &Limits) -> Result<ChiUcResult> {
    limits.check_search(g.n())?;
    let n = g.n();
    if n == 0 {
        return Err(Error::Infeasible("graph has no vertices".into()));
    }
    let (chi, _) = chromatic_number(g, limits)?;
    let gamma = domination_number(g, limits)?;
    let sets = dominating_sets_of_size(g, gamma, limits)?;
    // A lifted coloring always exists with at most 2 * chi colors (and at
    // least 2 colors, since members need a nonzero color).
    let ceiling = (2 * chi).max(2);
    // Members need a nonzero color, so at least two colors are required.
    for k in chi.max(2)..=ceiling {
        for &mask in &sets {
            let d = VertexSet::from_mask(n, mask);
            if let Some(c) = coloring_for_dominating_set(g, &d, k) {
                return Ok(ChiUcResult {
                    value: k,
                    chi,
                    coloring: c,
                    dominating_set: d,
                });
            }
        }
    }
    Err(Error::InternalVerificationFailed(
        "no lifted coloring within 2 * chi colors".into(),
    ))
}

/// Lifts a dominating set above the rest of the graph. With `k` the largest
/// color of `base`, members are shifted up by `k`; when that collides with a
/// neighbour (or leaves a member at color 0) the shift becomes `k + 1`,
/// which always works.
pub fn build_equal_coloring(g: &Graph, d: &VertexSet, base: &Coloring) -> Result<Coloring> {
    if let Some((u, v)) = validate_coloring(g, base)? {
        return Err(Error::ImproperBase(u, v));
    }
    if let Some(v) =
        (0..g.n()).find(|&v| !d.contains(v) && !g.neighbors(v).iter().any(|&u| d.contains(u)))
    {
        return Err(Error::NotDominating(v));
    }
    let k = base.max_color().unwrap_or(0);
    for offset in [k, k + 1] {
        let lifted = Coloring::new(
            (0..g.n())
                .map(|v| base.color(v) + if d.contains(v) { offset } else { 0 })
                .collect(),
        );
        if validate_coloring(g, &lifted)?.is_some() {
            continue;
        }
        let cg = orient(g, &lifted)?;
        if cg.is_up_color_dominating(d) {
            return Ok(lifted);
        }
    }
    Err(Error::InternalVerificationFailed(
        "offset k + 1 failed to lift a dominating set".into(),
    ))
}

/// Coloring whose up-color dominating set weighs at most
/// `3/2 (chi - 1) gamma`. Color classes of an optimal coloring are ranked by
/// how many members of a minimum dominating set they hold; the richest class
/// takes the top ordinary color `s - 1`, the others `0..s-1`, and the
/// dominating-set members of the `k`-th class are lifted to `s + k - 1`.
pub fn build_weight_bounded_coloring(g: &Graph, limits: &Limits) -> Result<(Coloring, VertexSet)> {
    limits.check_search(g.n())?;
    let n = g.n();
    let d = minimum_dominating_set(g, limits)?;
    let (s, base) = chromatic_number(g, limits)?;
    if s <= 1 {
        // Edgeless: every vertex is isolated and must carry a nonzero color.
        return Ok((Coloring::new(vec![1; n]), VertexSet::full(n)));
    }
    let mut classes: Vec<usize> = (0..s).collect();
    let hits = |class: usize| {
        d.iter()
            .filter(|&v| base.color(v) as usize == class)
            .count()
    };
    classes.sort_by_key(|&class| (std::cmp::Reverse(hits(class)), class));
    let mut class_color = vec![0u32; s];
    let mut member_color = vec![0u32; s];
    class_color[classes[0]] = (s - 1) as u32;
    member_color[classes[0]] = (s - 1) as u32;
    for (k, &class) in classes.iter().enumerate().skip(1) {
        class_color[class] = (k - 1) as u32;
        member_color[class] = (s + k - 1) as u32;
    }
    let coloring = Coloring::new(
        (0..n)
            .map(|v| {
                let class = base.color(v) as usize;
                if d.contains(v) {
                    member_color[class]
                } else {
                    class_color[class]
                }
            })
            .collect(),
    );
    let cg = orient(g, &coloring)?;
    if let Err(violation) = cg.check_up_color_dominating(&d) {
        return Err(Error::InternalVerificationFailed(format!(
            "class lifting produced a non-dominating set: {violation:?}"
        )));
    }
    Ok((coloring, d))
}
